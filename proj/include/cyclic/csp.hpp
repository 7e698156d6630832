#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cyclic/code.hpp"
#include "cyclic/intpoly.hpp"
#include "cyclic/stats.hpp"

namespace cyclic {

/* The sieving congruence.  A rotation-stable word set X with statistic
   generating polynomial X(t) = sum over w of t^{stat(w)} sieves exactly when

     X(t)  =  F(t) := sum over orbits O of [|O|]_{t^{n/|O|}}   mod t^n - 1.

   Both sides are integer polynomials of degree < n, so the congruence holds
   iff they agree at every n-th root of unity; F was built so that its value
   at the d-th power of a primitive root is the fixed point count a(d).  The
   congruence is decided coefficient by coefficient in exact integers. */

// F(t) from an explicit orbit decomposition.
IntPoly orbit_polynomial(const OrbitDecomposition& dec, int n);
// F(t) from a fixed point profile, peeling exact-period counts
// b(e) = a(e) - sum of b(d) over proper divisors d of e.
IntPoly orbit_polynomial(const FixedPointProfile& prof, int n);

struct CspDivisorRow {
  long long d;                  // divisor of n
  long long fixed_count;        // a(d)
  std::vector<BigInt> residue;  // X - F folded mod t^d - 1; zero here means
                                // the two sides agree at this folding level
};

struct CspReport {
  int n = 0;
  StatKind kind = StatKind::maj;
  std::vector<int> order;  // alphabet, ascending
  bool holds = false;
  IntPoly stat_poly;   // X mod t^n - 1
  IntPoly orbit_poly;  // F
  std::vector<CspDivisorRow> rows;   // one per divisor of n, ascending
  std::vector<long long> failing;    // divisors with nonzero residue
};

// Enumerated route: X must be rotation-stable (validated).
CspReport check_csp(const Field& f, const std::vector<Word>& words,
                    StatKind kind, const AlphabetOrder& ord);
CspReport check_csp(const Field& f, const std::vector<Word>& words,
                    StatKind kind);

/* Code route: the orbit side comes from the parity check gcd profile; the
   statistic side streams over codewords, or, when the rotation acts freely
   and transitively off zero, walks one orbit with the rotation laws. */
CspReport check_csp(const CyclicCode& code, StatKind kind,
                    const AlphabetOrder& ord,
                    std::size_t cap = kDefaultEnumCap);
CspReport check_csp(const CyclicCode& code, StatKind kind,
                    std::size_t cap = kDefaultEnumCap);

// One report per monic divisor of x^n - 1, ordered by (degree, coefficients).
std::vector<std::pair<Poly, CspReport>> check_all_cyclic_codes(
    const Field& f, int n, StatKind kind, std::size_t cap = kDefaultEnumCap);
// Streaming variant: reports arrive in the same order as they are computed.
void check_all_cyclic_codes(
    const Field& f, int n, StatKind kind,
    const std::function<void(const Poly&, const CspReport&)>& fn,
    std::size_t cap = kDefaultEnumCap);

/* For a code whose nonzero words form a single free orbit (q^k = n + 1 and
   free action; validated), the sieving verdict reduces to one gcd:
   gcd(n, cdes(w)) = 1 for maj, gcd(n, wt(w)) = 1 for binary inv,
   with w the generator codeword. */
bool single_orbit_criterion(const CyclicCode& code, StatKind kind,
                            const AlphabetOrder& ord);
bool single_orbit_criterion(const CyclicCode& code, StatKind kind);

struct ScanRow {
  Poly gperp;
  bool irreducible = false;
  bool primitive = false;
  long long order_x = 0;
  long long cdes = 0;
  long long wt = 0;
  bool formula_match = false;  // cdes == binom(q,2) * q^{k-2}
  bool maj_csp = false;
  std::optional<bool> inv_csp;  // binary codes only
};

/* One row per monic irreducible degree-k parity check over F_q (k >= 2),
   in enumeration order, for the length q^k - 1 code it cuts out. */
std::vector<ScanRow> scan_characterization(const Field& f, int k,
                                           std::size_t cap = kDefaultEnumCap);
// Streaming variant: rows arrive one by one as they are computed.
void scan_characterization(const Field& f, int k,
                           const std::function<void(const ScanRow&)>& fn,
                           std::size_t cap = kDefaultEnumCap);

// True iff the sieving verdict for the code is the same under all q!
// alphabet orderings (q <= 4).
bool ordering_independence(const CyclicCode& code, StatKind kind,
                           std::size_t cap = kDefaultEnumCap);

}  // namespace cyclic
