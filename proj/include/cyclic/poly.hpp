#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclic/field.hpp"

namespace cyclic {

// Default ceiling on enumerations (words of a code, candidate polynomials).
// Exceeding a cap is a hard error, never a silent truncation.
constexpr std::size_t kDefaultEnumCap = std::size_t{1} << 20;

struct enumeration_cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// q^k, or an exception if the value would exceed limit.
long long pow_checked(long long q, int k, long long limit);
std::vector<std::pair<long long, int>> factor_integer(long long n);
std::vector<long long> divisors_of(long long n);  // ascending

/* Univariate polynomial over a finite field.  Coefficients are element
   indices, stored ascending with no trailing zeros; the zero polynomial has
   degree -1. */
class Poly {
public:
  explicit Poly(const Field& f) : f_(f) {}
  Poly(const Field& f, std::vector<int> coeffs);

  static Poly zero(const Field& f) { return Poly(f); }
  static Poly one(const Field& f) { return Poly(f, {1}); }
  static Poly x(const Field& f) { return Poly(f, {0, 1}); }
  static Poly monomial(const Field& f, int deg, int c = 1);
  static Poly xn_minus_1(const Field& f, int n);

  const Field& field() const { return f_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  int coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
  }
  const std::vector<int>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(int c) const;  // c * this
  Poly monic() const;        // unit multiple with leading coefficient 1
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  int eval(int a) const;  // Horner
  std::string str() const;

private:
  void trim();
  void check_same_field(const Poly& o) const;

  Field f_;
  std::vector<int> c_;
};

Poly poly_gcd(Poly a, Poly b);  // monic, or zero if both zero
Poly pow_mod(const Poly& base, long long e, const Poly& mod);
Poly mod_pow_x(long long e, const Poly& mod);  // x^e mod `mod`

// Deterministic Rabin test: f of degree k is irreducible over F_q iff
// x^{q^k} == x (mod f) and gcd(x^{q^{k/r}} - x, f) = 1 for every prime r | k.
bool is_irreducible(const Poly& f);

// Multiplicative order of x in F_q[x]/(f), for f monic irreducible, f != x.
// Computed by factoring q^k - 1 (refused above 2^40) and stripping primes.
long long order_of_x(const Poly& f);

// Irreducible with x of maximal order q^deg(f) - 1.
bool is_primitive(const Poly& f);

// (x^n - 1) / g; error if g does not divide x^n - 1.
Poly quotient_xn(const Poly& g, int n);

// All monic irreducibles of degree k, ordered by coefficient vector read as a
// base-q integer, constant term least significant.
std::vector<Poly> monic_irreducibles(const Field& f, int k,
                                     std::size_t cap = kDefaultEnumCap);

// Irreducible factorization of x^n - 1, factors in canonical order with
// multiplicities (multiplicity > 1 exactly when p | n).
std::vector<std::pair<Poly, int>> factor_xn_minus_1(
    const Field& f, int n, std::size_t cap = kDefaultEnumCap);

// Every monic divisor of x^n - 1, sorted by degree then coefficient order.
std::vector<Poly> divisors_of_xn_minus_1(const Field& f, int n,
                                         std::size_t cap = kDefaultEnumCap);

// "x^2+2x+1" or "1+x" or "0"; coefficients are reduced mod p for prime
// fields and must be element indices below q for extension fields.
Poly parse_poly(const Field& f, const std::string& text);
// "1,2,1" ascending, entries are element indices.
Poly poly_from_coeffs_text(const Field& f, const std::string& text);

// true if a precedes b: lower degree first, then smaller coefficient vector
// (compared from the leading coefficient down).
bool poly_less(const Poly& a, const Poly& b);

}  // namespace cyclic
