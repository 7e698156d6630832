#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "cyclic/code.hpp"

using namespace cyclic;

namespace {

Poly P(const Field& f, const std::string& s) { return parse_poly(f, s); }

std::vector<Word> all_words(int q, int n) {
  std::vector<Word> out;
  Word w(n, 0);
  while (true) {
    out.push_back(w);
    int i = 0;
    while (i < n && w[i] == q - 1) w[i++] = 0;
    if (i == n) break;
    ++w[i];
  }
  return out;
}

std::set<Word> word_set(const std::vector<Word>& v) {
  return std::set<Word>(v.begin(), v.end());
}

// Independent fixed-point count: words w with rotate(w, d) == w.
long long count_fixed(const std::vector<Word>& words, int d) {
  long long c = 0;
  for (const Word& w : words) {
    if (rotate(w, d) == w) ++c;
  }
  return c;
}

std::vector<CyclicCode> divisor_codes(const Field& f, int n) {
  std::vector<CyclicCode> out;
  for (const Poly& g : divisors_of_xn_minus_1(f, n)) {
    out.push_back(CyclicCode::from_generator(g, n));
  }
  return out;
}

Poly first_primitive(const Field& f, int k) {
  for (const Poly& g : monic_irreducibles(f, k)) {
    if (is_primitive(g)) return g;
  }
  throw std::logic_error("no primitive polynomial found");
}

}  // namespace

TEST_CASE("word/polynomial dictionary") {
  Field f3 = Field::make(3);

  // w_1 + w_2 x + ... + w_n x^{n-1}: ascending coefficients left to right.
  CHECK(word_of_poly(P(f3, "x^6+2x^5+2x^4+2x^2+x+1"), 8) ==
        Word{1, 1, 2, 0, 2, 2, 1, 0});
  CHECK(word_of_poly(P(f3, "x^6+2x^4+x^2+2"), 8) == Word{2, 0, 1, 0, 2, 0, 1, 0});
  CHECK(word_of_poly(Poly::zero(f3), 4) == Word{0, 0, 0, 0});
  CHECK(poly_of_word(f3, {1, 1, 2, 0, 2, 2, 1, 0}) ==
        P(f3, "x^6+2x^5+2x^4+2x^2+x+1"));
  CHECK(poly_of_word(f3, {0, 0, 0}) == Poly::zero(f3));

  // Trailing zero entries trim away; shorter words embed as low-degree polys.
  CHECK(poly_of_word(f3, {2, 1, 0, 0}) == P(f3, "x+2"));

  for (const Word& w : all_words(3, 5)) {
    CHECK(word_of_poly(poly_of_word(f3, w), 5) == w);
  }

  CHECK_THROWS_AS(word_of_poly(P(f3, "x^4"), 4), std::invalid_argument);
  CHECK_THROWS_AS(poly_of_word(f3, {0, 3}), std::invalid_argument);
}

TEST_CASE("construction from generator and parity check") {
  Field f3 = Field::make(3);

  CyclicCode c = CyclicCode::from_parity_check(P(f3, "x^2+x+2"), 8);
  CHECK(c.length() == 8);
  CHECK(c.dim() == 2);
  CHECK(c.size() == 9);
  CHECK(c.generator() == P(f3, "x^6+2x^5+2x^4+2x^2+x+1"));
  CHECK(c.parity_check() == P(f3, "x^2+x+2"));
  CHECK(c.generator() * c.parity_check() == Poly::xn_minus_1(f3, 8));

  CyclicCode c2 = CyclicCode::from_generator(P(f3, "x^6+2x^5+2x^4+2x^2+x+1"), 8);
  CHECK(c2 == c);
  CHECK(c2.parity_check() == P(f3, "x^2+x+2"));

  // Non-monic inputs normalize.
  CyclicCode c3 = CyclicCode::from_generator(P(f3, "2x+2"), 2);
  CHECK(c3.generator() == P(f3, "x+1"));
  CHECK(c3.dim() == 1);

  // g = x^n - 1 gives the zero code; g = 1 the full code.
  CyclicCode zero = CyclicCode::from_generator(Poly::xn_minus_1(f3, 4), 4);
  CHECK(zero.dim() == 0);
  CHECK(zero.size() == 1);
  CHECK(zero.codewords() == std::vector<Word>{{0, 0, 0, 0}});
  CHECK(full_code(f3, 4).dim() == 4);

  Field f2 = Field::make(2);
  CHECK_THROWS_AS(CyclicCode::from_generator(P(f2, "x^2+x+1"), 7),
                  std::invalid_argument);
  CHECK_THROWS_AS(CyclicCode::from_parity_check(P(f2, "x^2+x+1"), 7),
                  std::invalid_argument);
  CHECK_THROWS_AS(CyclicCode::from_generator(Poly::zero(f2), 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(CyclicCode::from_generator(Poly::one(f2), 0),
                  std::invalid_argument);
}

TEST_CASE("length-2 ternary codes: repetition vs coordinate-sum-zero") {
  Field f3 = Field::make(3);

  // Generated by 1 + x: the two constants' line {00, 11, 22}.
  CHECK(word_set(CyclicCode::from_generator(P(f3, "x+1"), 2).codewords()) ==
        std::set<Word>{{0, 0}, {1, 1}, {2, 2}});
  CHECK(word_set(repetition_code(f3, 2).codewords()) ==
        std::set<Word>{{0, 0}, {1, 1}, {2, 2}});

  // Parity check 1 + x: generator (x^2-1)/(x+1) = x - 1, words summing to 0.
  CHECK(word_set(CyclicCode::from_parity_check(P(f3, "x+1"), 2).codewords()) ==
        std::set<Word>{{0, 0}, {1, 2}, {2, 1}});
  CHECK(word_set(parity_check_code(f3, 2).codewords()) ==
        std::set<Word>{{0, 0}, {1, 2}, {2, 1}});
  CHECK(parity_check_code(f3, 2).generator() == P(f3, "x+2"));
}

TEST_CASE("codeword enumeration order and membership") {
  Field f3 = Field::make(3);
  CyclicCode c = CyclicCode::from_parity_check(P(f3, "x^2+x+2"), 8);

  std::vector<Word> words = c.codewords();
  REQUIRE(words.size() == 9);

  // Position i holds h_i * g where h_i has the base-q digits of i.
  for (int i = 0; i < 9; ++i) {
    Poly h(f3, Word{i % 3, i / 3});
    CHECK(words[i] == word_of_poly(h * c.generator(), 8));
  }

  // Streaming walk agrees elementwise.
  std::vector<Word> streamed;
  c.for_each_codeword([&](const Word& w) { streamed.push_back(w); });
  CHECK(streamed == words);

  // Membership matches the enumerated set over the whole ambient space.
  std::set<Word> in = word_set(words);
  for (const Word& w : all_words(3, 8)) {
    CHECK(c.contains(w) == (in.count(w) == 1));
  }

  // Codes are closed under rotation in both directions.
  for (const Word& w : words) {
    CHECK(c.contains(rotate(w, 1, Rotation::right)));
    CHECK(c.contains(rotate(w, 1, Rotation::left)));
  }

  CHECK_THROWS_AS(c.contains(Word{0, 0}), std::invalid_argument);
}

TEST_CASE("enumeration caps") {
  Field f2 = Field::make(2);
  Field f3 = Field::make(3);
  CHECK_THROWS_AS(full_code(f2, 21).codewords(), enumeration_cap_error);
  CHECK_THROWS_AS(parity_check_code(f3, 3).codewords(2), enumeration_cap_error);
  CHECK(full_code(f2, 20).size() == (1 << 20));  // at the cap: allowed
  long long seen = 0;
  full_code(f2, 5).for_each_codeword([&](const Word&) { ++seen; }, 32);
  CHECK(seen == 32);
}

TEST_CASE("binary length-7 dimension-3 code from a primitive cubic") {
  Field f2 = Field::make(2);
  CyclicCode c = dual_hamming_code(P(f2, "x^3+x+1"));
  CHECK(c.length() == 7);
  CHECK(c.dim() == 3);
  CHECK(c.generator() == P(f2, "x^4+x^2+x+1"));

  Word w = {1, 1, 1, 0, 1, 0, 0};
  CHECK(word_of_poly(c.generator(), 7) == w);

  std::set<Word> expect = {Word(7, 0)};
  for (int j = 0; j < 7; ++j) expect.insert(rotate(w, j));
  REQUIRE(expect.size() == 8);
  CHECK(word_set(c.codewords()) == expect);

  OrbitDecomposition dec = orbit_decomposition(c.codewords());
  CHECK(dec.sizes() == std::vector<long long>{1, 7});
}

TEST_CASE("orbit decomposition structure") {
  Field f2 = Field::make(2);
  Field f3 = Field::make(3);

  OrbitDecomposition dec = orbit_decomposition(all_words(2, 2));
  REQUIRE(dec.orbits.size() == 3);
  CHECK(dec.orbits[0] == std::vector<Word>{{0, 0}});
  CHECK(dec.orbits[1] == std::vector<Word>{{0, 1}, {1, 0}});
  CHECK(dec.orbits[2] == std::vector<Word>{{1, 1}});
  CHECK(dec.sizes() == std::vector<long long>{1, 1, 2});

  // Representatives ascend; each orbit walks the action from its minimum.
  CyclicCode c = CyclicCode::from_parity_check(P(f3, "x^2+x+2"), 8);
  OrbitDecomposition d2 = orbit_decomposition(c.codewords());
  CHECK(d2.sizes() == std::vector<long long>{1, 8});
  for (std::size_t i = 0; i + 1 < d2.orbits.size(); ++i) {
    CHECK(d2.orbits[i][0] < d2.orbits[i + 1][0]);
  }
  for (const auto& orbit : d2.orbits) {
    CHECK(*std::min_element(orbit.begin(), orbit.end()) == orbit[0]);
    for (std::size_t j = 0; j < orbit.size(); ++j) {
      CHECK(orbit[j] == rotate(orbit[0], static_cast<int>(j)));
    }
  }

  CHECK(orbit_decomposition(repetition_code(f3, 2).codewords()).sizes() ==
        std::vector<long long>{1, 1, 1});

  CHECK_THROWS_AS(orbit_decomposition({{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(orbit_decomposition({{0, 1}, {1, 0}, {0, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(orbit_decomposition({}), std::invalid_argument);
  CHECK_THROWS_AS(orbit_decomposition({{0, 1}, {1, 0}, {1, 1, 0}}),
                  std::invalid_argument);
}

TEST_CASE("fixed point profiles: enumerated, analytic, and direct counts") {
  Field f2 = Field::make(2);
  Field f3 = Field::make(3);
  Field f4 = Field::make(2, 2);

  CyclicCode dual = CyclicCode::from_parity_check(P(f3, "x^2+x+2"), 8);
  FixedPointProfile prof = fixed_point_profile(dual);
  CHECK(prof == FixedPointProfile{{1, 1}, {2, 1}, {4, 1}, {8, 9}});
  CHECK(fixed_point_profile_gcd(dual) == prof);

  CHECK(fixed_point_profile(full_code(f2, 2)) ==
        FixedPointProfile{{1, 2}, {2, 4}});
  CHECK(fixed_point_profile(repetition_code(f3, 2)) ==
        FixedPointProfile{{1, 3}, {2, 3}});

  // Both routes agree across every divisor code for several fields.
  auto check_field = [&](const Field& f, int max_n) {
    for (int n = 1; n <= max_n; ++n) {
      for (const CyclicCode& c : divisor_codes(f, n)) {
        FixedPointProfile a = fixed_point_profile(c);
        CHECK(a == fixed_point_profile_gcd(c));
        // a(d) of the profile equals the direct count for every power of
        // the rotation, through gcd with n.
        std::vector<Word> words = c.codewords();
        for (int d = 1; d <= n; ++d) {
          CHECK(count_fixed(words, d) == a.at(std::gcd<long long>(d, n)));
        }
      }
    }
  };
  check_field(f2, 10);
  check_field(f3, 6);
  check_field(f4, 5);
}

TEST_CASE("free action on nonzero codewords") {
  Field f2 = Field::make(2);
  Field f3 = Field::make(3);

  CHECK(is_free_on_nonzero(CyclicCode::from_parity_check(P(f3, "x^2+x+2"), 8)));
  CHECK(is_free_on_nonzero(parity_check_code(f3, 2)));
  CHECK_FALSE(is_free_on_nonzero(full_code(f2, 2)));
  CHECK_FALSE(is_free_on_nonzero(repetition_code(f3, 2)));
  CHECK(is_free_on_nonzero(full_code(f2, 1)));  // n = 1: no proper divisors

  // Agrees with the orbit sizes: free away from 0 iff every nonzero orbit
  // has full size n.
  for (int n = 1; n <= 9; ++n) {
    for (const CyclicCode& c : divisor_codes(f2, n)) {
      OrbitDecomposition dec = orbit_decomposition(c.codewords());
      bool all_full = true;
      for (const auto& o : dec.orbits) {
        if (o[0] == Word(n, 0)) continue;
        if (static_cast<int>(o.size()) != n) all_full = false;
      }
      CHECK(is_free_on_nonzero(c) == all_full);
    }
  }
}

TEST_CASE("named codes") {
  Field f2 = Field::make(2);
  Field f3 = Field::make(3);

  CHECK(word_set(full_code(f2, 3).codewords()) == word_set(all_words(2, 3)));
  CHECK(repetition_code(f2, 5).size() == 2);
  CHECK(parity_check_code(f2, 5).size() == 16);
  CHECK(repetition_code(f3, 4).generator() == P(f3, "x^3+x^2+x+1"));
  CHECK(parity_check_code(f3, 4).generator() == P(f3, "x+2"));

  CyclicCode ham = hamming_code(P(f2, "x^3+x+1"));
  CHECK(ham.length() == 7);
  CHECK(ham.dim() == 4);
  CHECK(ham.contains(Word{1, 1, 0, 1, 0, 0, 0}));
  // The two constructions pair up through the shared primitive polynomial.
  CHECK(ham.parity_check() == dual_hamming_code(P(f2, "x^3+x+1")).generator());

  CHECK_THROWS_AS(hamming_code(P(f3, "x^2+1")), std::invalid_argument);
  CHECK_THROWS_AS(dual_hamming_code(P(f2, "x^2+1")), std::invalid_argument);
}

TEST_CASE("rotation acts transitively on nonzero words of these codes") {
  Field f2 = Field::make(2);
  Field f3 = Field::make(3);

  for (int k = 2; k <= 10; ++k) {
    CyclicCode c = dual_hamming_code(first_primitive(f2, k));
    CHECK(c.length() == (1 << k) - 1);
    CHECK(orbit_decomposition(c.codewords()).sizes() ==
          std::vector<long long>{1, c.length()});
  }
  for (int k = 2; k <= 5; ++k) {
    CyclicCode c = dual_hamming_code(first_primitive(f3, k));
    CHECK(orbit_decomposition(c.codewords()).sizes() ==
          std::vector<long long>{1, c.length()});
  }
}
