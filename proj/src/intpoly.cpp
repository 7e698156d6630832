#include "cyclic/intpoly.hpp"

#include <stdexcept>

namespace cyclic {

namespace {
long long fold(long long e, int n) {
  long long r = e % n;
  return r < 0 ? r + n : r;
}
}  // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs, std::optional<int> mod_n)
    : c_(std::move(coeffs)), mod_n_(mod_n) {
  if (mod_n_) {
    if (*mod_n_ < 1) throw std::invalid_argument("modulus must be >= 1");
    if (static_cast<int>(c_.size()) > *mod_n_) {
      std::vector<BigInt> folded(*mod_n_);
      for (std::size_t i = 0; i < c_.size(); ++i) folded[i % *mod_n_] += c_[i];
      c_ = std::move(folded);
    }
  }
  trim();
}

IntPoly IntPoly::monomial(long long e, BigInt c, std::optional<int> mod_n) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  if (mod_n) e = fold(e, *mod_n);
  std::vector<BigInt> v(e + 1);
  v[e] = std::move(c);
  return IntPoly(std::move(v), mod_n);
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

namespace {
// Common modulus for a binary operation; folds happen in IntPoly's ctor.
std::optional<int> join_mod(const std::optional<int>& a, const std::optional<int>& b) {
  if (a && b && *a != *b) throw std::invalid_argument("mixed moduli t^n-1");
  return a ? a : b;
}
}  // namespace

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::optional<int> m = join_mod(mod_n_, o.mod_n_);
  std::vector<BigInt> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return IntPoly(std::move(r), m);
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::optional<int> m = join_mod(mod_n_, o.mod_n_);
  std::vector<BigInt> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return IntPoly(std::move(r), m);
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  std::optional<int> m = join_mod(mod_n_, o.mod_n_);
  if (is_zero() || o.is_zero()) return IntPoly({}, m);
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return IntPoly(std::move(r), m);
}

IntPoly IntPoly::reduce_mod(int n) const {
  if (n < 1) throw std::invalid_argument("modulus must be >= 1");
  if (mod_n_ && *mod_n_ % n != 0)
    throw std::invalid_argument("can only refold to a divisor of the current modulus");
  std::vector<BigInt> r(n);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i % n] += c_[i];
  return IntPoly(std::move(r), n);
}

std::pair<IntPoly, IntPoly> IntPoly::divmod(const IntPoly& d) const {
  if (mod_n_ || d.mod_n_) throw std::invalid_argument("divmod requires unreduced operands");
  if (d.is_zero() || d.c_.back() != 1) throw std::invalid_argument("divisor must be monic");
  if (degree() < d.degree()) return {IntPoly(), *this};
  std::vector<BigInt> rem = c_;
  std::vector<BigInt> quo(degree() - d.degree() + 1);
  for (int i = degree(); i >= d.degree(); --i) {
    BigInt c = rem[i];
    if (c == 0) continue;
    quo[i - d.degree()] = c;
    for (int j = 0; j <= d.degree(); ++j) rem[i - d.degree() + j] -= c * d.c_[j];
  }
  return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

BigInt IntPoly::eval_one() const {
  BigInt s = 0;
  for (const BigInt& c : c_) s += c;
  return s;
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = c_[i];
    if (c == 0) continue;
    if (!s.empty() && c > 0) s += "+";
    if (i == 0 || (c != 1 && c != -1)) s += c.str();
    else if (c == -1) s += "-";
    if (i >= 1) s += "t";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

IntPoly q_int(int n, int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("q_int needs n >= 1, k >= 0");
  if (k == 0) return IntPoly({BigInt(n)});
  std::vector<BigInt> c(static_cast<std::size_t>(k) * (n - 1) + 1);
  for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(k) * j] = 1;
  return IntPoly(std::move(c));
}

IntPoly q_int_mod(int n, long long k, long long shift) {
  if (n < 1) throw std::invalid_argument("q_int_mod needs n >= 1");
  std::vector<BigInt> c(n);
  for (int j = 0; j < n; ++j) c[fold(shift + k * j, n)] += 1;
  return IntPoly(std::move(c), n);
}

}  // namespace cyclic
