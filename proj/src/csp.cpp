#include "cyclic/csp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cyclic {
namespace {

std::vector<int> ascending_of(const AlphabetOrder& ord) {
  std::vector<int> asc(ord.rank.size());
  for (std::size_t e = 0; e < ord.rank.size(); ++e) asc[ord.rank[e]] = static_cast<int>(e);
  return asc;
}

CspReport assemble_report(int n, StatKind kind, const AlphabetOrder& ord,
                          IntPoly stat_poly, IntPoly orbit_poly,
                          const FixedPointProfile& prof) {
  CspReport rep;
  rep.n = n;
  rep.kind = kind;
  rep.order = ascending_of(ord);
  rep.stat_poly = std::move(stat_poly);
  rep.orbit_poly = std::move(orbit_poly);
  rep.holds = rep.stat_poly == rep.orbit_poly;
  IntPoly diff = rep.stat_poly - rep.orbit_poly;
  for (long long d : divisors_of(n)) {
    CspDivisorRow row;
    row.d = d;
    row.fixed_count = prof.at(d);
    IntPoly folded = diff.reduce_mod(static_cast<int>(d));
    row.residue.assign(folded.coeffs().begin(), folded.coeffs().end());
    row.residue.resize(static_cast<std::size_t>(d));
    if (!folded.is_zero()) rep.failing.push_back(d);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

bool single_free_orbit(const CyclicCode& code) {
  return code.size() == code.length() + 1 && is_free_on_nonzero(code);
}

// Both histograms from one streaming walk (binary alphabet, index order);
// scans that want maj and inv verdicts then enumerate the code only once.
std::pair<IntPoly, IntPoly> binary_maj_inv_polys(const CyclicCode& code,
                                                 std::size_t cap) {
  const int n = code.length();
  std::vector<BigInt> cm(static_cast<std::size_t>(n));
  std::vector<BigInt> ci(static_cast<std::size_t>(n));
  code.for_each_codeword(
      [&](const Word& w) {
        long long maj = 0, inv = 0, ones = 0;
        int prev = 0;
        for (int i = 0; i < n; ++i) {
          int e = w[static_cast<std::size_t>(i)];
          if (i > 0 && prev > e) maj += i;
          if (e) ++ones; else inv += ones;
          prev = e;
        }
        cm[static_cast<std::size_t>(maj % n)] += 1;
        ci[static_cast<std::size_t>(inv % n)] += 1;
      },
      cap);
  return {IntPoly(std::move(cm), n), IntPoly(std::move(ci), n)};
}

}  // namespace

IntPoly orbit_polynomial(const OrbitDecomposition& dec, int n) {
  if (n <= 0) throw std::invalid_argument("n must be positive");
  std::vector<BigInt> c(static_cast<std::size_t>(n));
  for (const auto& orbit : dec.orbits) {
    int s = static_cast<int>(orbit.size());
    if (s == 0 || n % s != 0) {
      throw std::invalid_argument("orbit size " + std::to_string(s) +
                                  " does not divide n = " + std::to_string(n));
    }
    for (int i = 0; i < s; ++i) c[static_cast<std::size_t>(i) * (n / s)] += 1;
  }
  return IntPoly(std::move(c), n);
}

IntPoly orbit_polynomial(const FixedPointProfile& prof, int n) {
  if (n <= 0) throw std::invalid_argument("n must be positive");
  std::vector<long long> divs = divisors_of(n);
  for (long long d : divs) {
    if (!prof.count(d)) {
      throw std::invalid_argument("profile is missing divisor " +
                                  std::to_string(d));
    }
  }
  // b(e): number of words of exact rotation period e.
  std::map<long long, long long> b;
  for (long long e : divs) {
    long long v = prof.at(e);
    for (long long d : divs) {
      if (d < e && e % d == 0) v -= b.at(d);
    }
    if (v < 0 || v % e != 0) {
      throw std::domain_error("fixed point profile is not consistent with a "
                              "rotation action");
    }
    b[e] = v;
  }
  std::vector<BigInt> c(static_cast<std::size_t>(n));
  for (long long e : divs) {
    long long orbits = b.at(e) / e;
    if (orbits == 0) continue;
    for (long long i = 0; i < e; ++i) {
      c[static_cast<std::size_t>(i * (n / e))] += orbits;
    }
  }
  return IntPoly(std::move(c), n);
}

CspReport check_csp(const Field& f, const std::vector<Word>& words,
                    StatKind kind, const AlphabetOrder& ord) {
  for (const Word& w : words) {
    for (int e : w) {
      if (!f.valid(e)) {
        throw std::invalid_argument("word entry out of field range");
      }
    }
  }
  OrbitDecomposition dec = orbit_decomposition(words);
  const int n = static_cast<int>(words[0].size());
  return assemble_report(n, kind, ord, stat_gen_poly(words, kind, ord, n),
                         orbit_polynomial(dec, n),
                         fixed_point_profile(dec, n));
}

CspReport check_csp(const Field& f, const std::vector<Word>& words,
                    StatKind kind) {
  return check_csp(f, words, kind, AlphabetOrder::index_order(f));
}

CspReport check_csp(const CyclicCode& code, StatKind kind,
                    const AlphabetOrder& ord, std::size_t cap) {
  const int n = code.length();
  FixedPointProfile prof = fixed_point_profile_gcd(code);
  IntPoly orbit_poly = orbit_polynomial(prof, n);

  IntPoly stat_poly;
  if (single_free_orbit(code)) {
    Word w = word_of_poly(code.generator(), n);
    stat_poly = orbit_stat_poly(w, kind, ord, n) +
                IntPoly::monomial(0, 1, n);  // the zero word
  } else {
    std::vector<BigInt> c(static_cast<std::size_t>(n));
    code.for_each_codeword(
        [&](const Word& w) { c[stat(w, kind, ord) % n] += 1; }, cap);
    stat_poly = IntPoly(std::move(c), n);
  }
  return assemble_report(n, kind, ord, std::move(stat_poly),
                         std::move(orbit_poly), prof);
}

CspReport check_csp(const CyclicCode& code, StatKind kind, std::size_t cap) {
  return check_csp(code, kind, AlphabetOrder::index_order(code.field()), cap);
}

void check_all_cyclic_codes(
    const Field& f, int n, StatKind kind,
    const std::function<void(const Poly&, const CspReport&)>& fn,
    std::size_t cap) {
  std::vector<Poly> gens = divisors_of_xn_minus_1(f, n);
  std::sort(gens.begin(), gens.end(), poly_less);
  for (const Poly& g : gens) {
    CyclicCode code = CyclicCode::from_generator(g, n);
    fn(g, check_csp(code, kind, cap));
  }
}

std::vector<std::pair<Poly, CspReport>> check_all_cyclic_codes(
    const Field& f, int n, StatKind kind, std::size_t cap) {
  std::vector<std::pair<Poly, CspReport>> out;
  check_all_cyclic_codes(
      f, n, kind,
      [&](const Poly& g, const CspReport& rep) { out.emplace_back(g, rep); },
      cap);
  return out;
}

bool single_orbit_criterion(const CyclicCode& code, StatKind kind,
                            const AlphabetOrder& ord) {
  if (!single_free_orbit(code)) {
    throw std::domain_error(
        "code's nonzero words do not form a single free rotation orbit");
  }
  const int n = code.length();
  Word w = word_of_poly(code.generator(), n);
  switch (kind) {
    case StatKind::maj:
      return std::gcd<long long>(n, stat(w, StatKind::cdes, ord)) == 1;
    case StatKind::inv:
      if (code.field().q() != 2) {
        throw std::domain_error(
            "the inv criterion applies to binary codes only");
      }
      return std::gcd<long long>(n, stat(w, StatKind::wt, ord)) == 1;
    default:
      throw std::invalid_argument("criterion is defined for maj and inv");
  }
}

bool single_orbit_criterion(const CyclicCode& code, StatKind kind) {
  return single_orbit_criterion(code, kind,
                                AlphabetOrder::index_order(code.field()));
}

void scan_characterization(const Field& f, int k,
                           const std::function<void(const ScanRow&)>& fn,
                           std::size_t cap) {
  if (k < 2) {
    throw std::invalid_argument("characterization scan needs k >= 2");
  }
  long long count;
  try {
    count = pow_checked(f.q(), k, static_cast<long long>(cap));
  } catch (const std::invalid_argument&) {
    throw enumeration_cap_error("scan needs " + std::to_string(f.q()) + "^" +
                                std::to_string(k) +
                                " codewords, above the cap of " +
                                std::to_string(cap));
  }
  const int n = static_cast<int>(count - 1);
  const long long target =
      static_cast<long long>(f.q()) * (f.q() - 1) / 2 *
      pow_checked(f.q(), k - 2, (1LL << 62));

  AlphabetOrder ord = AlphabetOrder::index_order(f);
  for (const Poly& gperp : monic_irreducibles(f, k)) {
    CyclicCode code = CyclicCode::from_parity_check(gperp, n);
    Word w = word_of_poly(code.generator(), n);

    ScanRow row{gperp, true, is_primitive(gperp), order_of_x(gperp),
                stat(w, StatKind::cdes, ord), stat(w, StatKind::wt, ord),
                false, false, {}};
    row.formula_match = row.cdes == target;
    if (f.q() == 2 && !single_free_orbit(code)) {
      IntPoly orbit_poly = orbit_polynomial(fixed_point_profile_gcd(code), n);
      auto [maj_poly, inv_poly] = binary_maj_inv_polys(code, cap);
      row.maj_csp = maj_poly == orbit_poly;
      row.inv_csp = inv_poly == orbit_poly;
    } else {
      row.maj_csp = check_csp(code, StatKind::maj, cap).holds;
      if (f.q() == 2) {
        row.inv_csp = check_csp(code, StatKind::inv, cap).holds;
      }
    }
    fn(row);
  }
}

std::vector<ScanRow> scan_characterization(const Field& f, int k,
                                           std::size_t cap) {
  std::vector<ScanRow> rows;
  scan_characterization(
      f, k, [&](const ScanRow& row) { rows.push_back(row); }, cap);
  return rows;
}

bool ordering_independence(const CyclicCode& code, StatKind kind,
                           std::size_t cap) {
  const int q = code.field().q();
  if (q > 4) {
    throw std::invalid_argument(
        "ordering independence enumerates q! orderings; q must be <= 4");
  }
  std::vector<int> asc(q);
  std::iota(asc.begin(), asc.end(), 0);
  bool first = true;
  bool verdict = false;
  do {
    bool holds =
        check_csp(code, kind, AlphabetOrder::from_ascending(asc), cap).holds;
    if (first) {
      verdict = holds;
      first = false;
    } else if (holds != verdict) {
      return false;
    }
  } while (std::next_permutation(asc.begin(), asc.end()));
  return true;
}

}  // namespace cyclic
