#include "cyclic/code.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cyclic {
namespace {

long long enum_count(int q, int k, std::size_t cap) {
  long long lim = static_cast<long long>(cap);
  long long r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > lim / q) {
      throw enumeration_cap_error("enumeration of " + std::to_string(q) + "^" +
                                  std::to_string(k) +
                                  " codewords exceeds the cap of " +
                                  std::to_string(cap) + " words");
    }
    r *= q;
  }
  return r;
}

}  // namespace

Word word_of_poly(const Poly& f, int n) {
  if (n <= 0) throw std::invalid_argument("word length must be positive");
  if (f.degree() >= n) {
    throw std::invalid_argument("polynomial degree must be below the word length");
  }
  Word w(n, 0);
  for (int i = 0; i < n; ++i) w[i] = f.coeff(i);
  return w;
}

Poly poly_of_word(const Field& f, const Word& w) {
  for (int a : w) {
    if (!f.valid(a)) throw std::invalid_argument("word entry out of field range");
  }
  return Poly(f, w);
}

CyclicCode::CyclicCode(Field f, int n, Poly g, Poly gperp)
    : f_(std::move(f)), n_(n), g_(std::move(g)), gperp_(std::move(gperp)),
      k_(gperp_.degree()) {}

CyclicCode CyclicCode::from_generator(const Poly& g, int n) {
  if (n <= 0) throw std::invalid_argument("code length must be positive");
  if (g.degree() < 0) throw std::invalid_argument("generator must be nonzero");
  if (g.degree() > n) {
    throw std::invalid_argument("generator degree exceeds the code length");
  }
  Poly gm = g.monic();
  Poly xn1 = Poly::xn_minus_1(g.field(), n);
  auto [quot, rem] = xn1.divmod(gm);
  if (!(rem == Poly::zero(g.field()))) {
    throw std::invalid_argument("generator must divide x^" + std::to_string(n) +
                                " - 1");
  }
  return CyclicCode(g.field(), n, gm, quot.monic());
}

CyclicCode CyclicCode::from_parity_check(const Poly& gperp, int n) {
  if (n <= 0) throw std::invalid_argument("code length must be positive");
  if (gperp.degree() < 0) {
    throw std::invalid_argument("parity check polynomial must be nonzero");
  }
  if (gperp.degree() > n) {
    throw std::invalid_argument("parity check degree exceeds the code length");
  }
  Poly hm = gperp.monic();
  Poly xn1 = Poly::xn_minus_1(gperp.field(), n);
  auto [quot, rem] = xn1.divmod(hm);
  if (!(rem == Poly::zero(gperp.field()))) {
    throw std::invalid_argument("parity check polynomial must divide x^" +
                                std::to_string(n) + " - 1");
  }
  return CyclicCode(gperp.field(), n, quot.monic(), hm);
}

long long CyclicCode::size() const {
  return pow_checked(f_.q(), k_, (1LL << 62));
}

bool CyclicCode::contains(const Word& w) const {
  if (static_cast<int>(w.size()) != n_) {
    throw std::invalid_argument("word length does not match the code length");
  }
  Poly rem = poly_of_word(f_, w).divmod(g_).second;
  return rem == Poly::zero(f_);
}

void CyclicCode::for_each_codeword(const std::function<void(const Word&)>& fn,
                                   std::size_t cap) const {
  const int q = f_.q();
  const long long total = enum_count(q, k_, cap);
  if (k_ == 0) {
    Word zero(n_, 0);
    fn(zero);
    return;
  }

  // rows[j][c] = the word of c * x^j * g; deg(x^j g) = j + (n-k) <= n-1.
  Word base = word_of_poly(g_, n_);
  std::vector<std::vector<Word>> rows(k_, std::vector<Word>(q));
  for (int j = 0; j < k_; ++j) {
    Word xjg = rotate(base, j);
    for (int c = 1; c < q; ++c) {
      Word row(n_);
      for (int i = 0; i < n_; ++i) row[i] = f_.mul(c, xjg[i]);
      rows[j][c] = std::move(row);
    }
  }

  Word w(n_, 0);
  std::vector<int> digits(k_, 0);
  fn(w);
  const int wrap_delta = k_ > 0 ? f_.sub(0, q - 1) : 0;
  for (long long cnt = 1; cnt < total; ++cnt) {
    int j = 0;
    while (digits[j] == q - 1) {
      const Word& row = rows[j][wrap_delta];
      for (int i = 0; i < n_; ++i) w[i] = f_.add(w[i], row[i]);
      digits[j] = 0;
      ++j;
    }
    const Word& row = rows[j][f_.sub(digits[j] + 1, digits[j])];
    for (int i = 0; i < n_; ++i) w[i] = f_.add(w[i], row[i]);
    ++digits[j];
    fn(w);
  }
}

std::vector<Word> CyclicCode::codewords(std::size_t cap) const {
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(enum_count(f_.q(), k_, cap)));
  for_each_codeword([&](const Word& w) { out.push_back(w); }, cap);
  return out;
}

OrbitDecomposition orbit_decomposition(const std::vector<Word>& words) {
  if (words.empty()) throw std::invalid_argument("word set must be nonempty");
  const std::size_t n = words[0].size();
  if (n == 0) throw std::invalid_argument("words must be nonempty");
  for (const Word& w : words) {
    if (w.size() != n) throw std::invalid_argument("words must share one length");
  }

  std::vector<Word> sorted = words;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("word set contains duplicates");
  }

  auto index_of = [&](const Word& w) -> std::size_t {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), w);
    if (it == sorted.end() || *it != w) {
      throw std::invalid_argument("word set is not closed under rotation");
    }
    return static_cast<std::size_t>(it - sorted.begin());
  };

  OrbitDecomposition dec;
  std::vector<char> visited(sorted.size(), 0);
  for (std::size_t s = 0; s < sorted.size(); ++s) {
    if (visited[s]) continue;
    std::vector<Word> orbit;
    Word w = sorted[s];
    do {
      std::size_t idx = index_of(w);
      visited[idx] = 1;
      orbit.push_back(w);
      w = rotate(w);
    } while (w != sorted[s]);
    dec.orbits.push_back(std::move(orbit));
  }
  return dec;
}

std::vector<long long> OrbitDecomposition::sizes() const {
  std::vector<long long> s;
  s.reserve(orbits.size());
  for (const auto& o : orbits) s.push_back(static_cast<long long>(o.size()));
  std::sort(s.begin(), s.end());
  return s;
}

FixedPointProfile fixed_point_profile(const OrbitDecomposition& dec, int n) {
  if (n <= 0) throw std::invalid_argument("n must be positive");
  for (const auto& o : dec.orbits) {
    if (n % static_cast<int>(o.size()) != 0) {
      throw std::invalid_argument("orbit size does not divide n");
    }
  }
  // rotate^d fixes exactly the orbits whose size divides d.
  FixedPointProfile prof;
  for (long long d : divisors_of(n)) {
    long long fixed = 0;
    for (const auto& o : dec.orbits) {
      long long s = static_cast<long long>(o.size());
      if (d % s == 0) fixed += s;
    }
    prof[d] = fixed;
  }
  return prof;
}

FixedPointProfile fixed_point_profile(const CyclicCode& code, std::size_t cap) {
  return fixed_point_profile(orbit_decomposition(code.codewords(cap)),
                             code.length());
}

FixedPointProfile fixed_point_profile_gcd(const CyclicCode& code) {
  const Field& f = code.field();
  FixedPointProfile prof;
  for (long long d : divisors_of(code.length())) {
    Poly g = poly_gcd(code.parity_check(),
                      Poly::xn_minus_1(f, static_cast<int>(d)));
    prof[d] = pow_checked(f.q(), g.degree(), (1LL << 62));
  }
  return prof;
}

bool is_free_on_nonzero(const CyclicCode& code) {
  const Field& f = code.field();
  for (long long d : divisors_of(code.length())) {
    if (d == code.length()) continue;
    Poly g = poly_gcd(code.parity_check(),
                      Poly::xn_minus_1(f, static_cast<int>(d)));
    if (g.degree() != 0) return false;
  }
  return true;
}

CyclicCode repetition_code(const Field& f, int n) {
  if (n <= 0) throw std::invalid_argument("code length must be positive");
  return CyclicCode::from_generator(Poly(f, std::vector<int>(n, 1)), n);
}

CyclicCode parity_check_code(const Field& f, int n) {
  if (n <= 0) throw std::invalid_argument("code length must be positive");
  return CyclicCode::from_parity_check(Poly(f, std::vector<int>(n, 1)), n);
}

CyclicCode full_code(const Field& f, int n) {
  return CyclicCode::from_generator(Poly::one(f), n);
}

CyclicCode hamming_code(const Poly& g) {
  if (!is_primitive(g)) {
    throw std::invalid_argument("generator must be a primitive polynomial");
  }
  long long n = pow_checked(g.field().q(), g.degree(), (1LL << 30)) - 1;
  return CyclicCode::from_generator(g, static_cast<int>(n));
}

CyclicCode dual_hamming_code(const Poly& gperp) {
  if (!is_primitive(gperp)) {
    throw std::invalid_argument("parity check must be a primitive polynomial");
  }
  long long n = pow_checked(gperp.field().q(), gperp.degree(), (1LL << 30)) - 1;
  return CyclicCode::from_parity_check(gperp, static_cast<int>(n));
}

}  // namespace cyclic
