#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cyclic {

using BigInt = boost::multiprecision::cpp_int;

/* Polynomial in t with arbitrary-precision integer coefficients, optionally
   kept reduced modulo t^n - 1 (exponents folded mod n).  Mixing two reduced
   polynomials requires the same n; an unreduced operand is folded first. */
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs, std::optional<int> mod_n = {});
  static IntPoly monomial(long long e, BigInt c = 1, std::optional<int> mod_n = {});

  const std::optional<int>& mod_n() const { return mod_n_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero
  bool is_zero() const { return c_.empty(); }
  BigInt coeff(long long i) const {
    return (i >= 0 && i < static_cast<long long>(c_.size())) ? c_[i] : BigInt(0);
  }
  const std::vector<BigInt>& coeffs() const { return c_; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;

  // Fold exponents mod n.  A polynomial already reduced mod N can only be
  // refolded to a divisor n of N.
  IntPoly reduce_mod(int n) const;

  // Division by a monic, unreduced divisor; exact integer arithmetic.
  std::pair<IntPoly, IntPoly> divmod(const IntPoly& d) const;

  BigInt eval_one() const;  // value at t = 1
  std::string str() const;

  bool operator==(const IntPoly& o) const { return mod_n_ == o.mod_n_ && c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }

private:
  void trim();
  std::vector<BigInt> c_;  // ascending, no trailing zeros
  std::optional<int> mod_n_;
};

// [n]_{t^k} = 1 + t^k + ... + t^{k(n-1)}, unreduced.
IntPoly q_int(int n, int k = 1);

// t^shift * [n]_{t^k} reduced mod t^n - 1, built without the unreduced blowup.
IntPoly q_int_mod(int n, long long k, long long shift = 0);

}  // namespace cyclic
