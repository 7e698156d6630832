#include "cyclic/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace cyclic {

long long pow_checked(long long q, int k, long long limit) {
  long long r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > limit / q) throw std::invalid_argument("q^k exceeds supported range");
    r *= q;
  }
  return r;
}

std::vector<std::pair<long long, int>> factor_integer(long long n) {
  if (n < 1) throw std::invalid_argument("factor_integer needs n >= 1");
  std::vector<std::pair<long long, int>> fs;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    fs.emplace_back(d, e);
  }
  if (n > 1) fs.emplace_back(n, 1);
  return fs;
}

std::vector<long long> divisors_of(long long n) {
  std::vector<long long> ds{1};
  for (auto [p, e] : factor_integer(n)) {
    std::size_t base = ds.size();
    long long pw = 1;
    for (int i = 1; i <= e; ++i) {
      pw *= p;
      for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pw);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

Poly::Poly(const Field& f, std::vector<int> coeffs) : f_(f), c_(std::move(coeffs)) {
  for (int c : c_)
    if (!f_.valid(c)) throw std::invalid_argument("coefficient out of range");
  trim();
}

Poly Poly::monomial(const Field& f, int deg, int c) {
  if (deg < 0) throw std::invalid_argument("negative degree");
  std::vector<int> v(deg + 1, 0);
  v[deg] = c;
  return Poly(f, std::move(v));
}

Poly Poly::xn_minus_1(const Field& f, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<int> v(n + 1, 0);
  v[0] = f.neg(1);
  v[n] = 1;
  return Poly(f, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_same_field(const Poly& o) const {
  if (f_ != o.f_) throw std::invalid_argument("mixed fields");
}

Poly Poly::operator+(const Poly& o) const {
  check_same_field(o);
  std::vector<int> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_.add(coeff(i), o.coeff(i));
  return Poly(f_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  check_same_field(o);
  std::vector<int> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_.sub(coeff(i), o.coeff(i));
  return Poly(f_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  check_same_field(o);
  if (is_zero() || o.is_zero()) return Poly(f_);
  std::vector<int> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = f_.add(r[i + j], f_.mul(c_[i], o.c_[j]));
  }
  return Poly(f_, std::move(r));
}

Poly Poly::scaled(int c) const {
  std::vector<int> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = f_.mul(c, c_[i]);
  return Poly(f_, std::move(r));
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scaled(f_.inv(c_.back()));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  check_same_field(d);
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (degree() < d.degree()) return {Poly(f_), *this};
  std::vector<int> rem = c_;
  std::vector<int> quo(degree() - d.degree() + 1, 0);
  int lead_inv = f_.inv(d.c_.back());
  for (int i = degree(); i >= d.degree(); --i) {
    int c = f_.mul(rem[i], lead_inv);
    if (c == 0) continue;
    quo[i - d.degree()] = c;
    for (int j = 0; j <= d.degree(); ++j)
      rem[i - d.degree() + j] = f_.sub(rem[i - d.degree() + j], f_.mul(c, d.c_[j]));
  }
  return {Poly(f_, std::move(quo)), Poly(f_, std::move(rem))};
}

bool Poly::operator==(const Poly& o) const { return f_ == o.f_ && c_ == o.c_; }

int Poly::eval(int a) const {
  int r = 0;
  for (int i = degree(); i >= 0; --i) r = f_.add(f_.mul(r, a), c_[i]);
  return r;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    int c = c_[i];
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0 || c != 1) s += std::to_string(c);
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly pow_mod(const Poly& base, long long e, const Poly& mod) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  if (mod.degree() < 1) throw std::invalid_argument("modulus must have degree >= 1");
  Poly r = Poly::one(base.field()) % mod;
  Poly b = base % mod;
  while (e > 0) {
    if (e & 1) r = (r * b) % mod;
    b = (b * b) % mod;
    e >>= 1;
  }
  return r;
}

Poly mod_pow_x(long long e, const Poly& mod) {
  return pow_mod(Poly::x(mod.field()), e, mod);
}

bool is_irreducible(const Poly& f0) {
  int k = f0.degree();
  if (k < 1) return false;
  if (k == 1) return true;
  const Field& fld = f0.field();
  Poly f = f0.monic();
  Poly x = Poly::x(fld) % f;

  std::vector<int> checkpoints;  // k/r for each prime r | k
  for (auto [r, e] : factor_integer(k)) checkpoints.push_back(k / static_cast<int>(r));

  Poly h = x;
  for (int j = 1; j <= k; ++j) {
    h = pow_mod(h, fld.q(), f);  // h = x^{q^j} mod f
    if (std::find(checkpoints.begin(), checkpoints.end(), j) != checkpoints.end()) {
      if (poly_gcd(h - x, f).degree() > 0) return false;
    }
  }
  return h == x;
}

long long order_of_x(const Poly& f0) {
  Poly f = f0.monic();
  if (!is_irreducible(f)) throw std::invalid_argument("order_of_x requires an irreducible polynomial");
  if (f.coeff(0) == 0) throw std::invalid_argument("x has no multiplicative order mod x");
  long long n = pow_checked(f.field().q(), f.degree(), 1LL << 40) - 1;
  Poly one = Poly::one(f.field());
  long long d = n;
  for (auto [r, e] : factor_integer(n)) {
    (void)e;
    while (d % r == 0 && mod_pow_x(d / r, f) == one) d /= r;
  }
  return d;
}

bool is_primitive(const Poly& f0) {
  if (f0.degree() < 1) return false;
  Poly f = f0.monic();
  if (f.coeff(0) == 0) return false;  // x or a multiple of x
  if (!is_irreducible(f)) return false;
  long long n = pow_checked(f.field().q(), f.degree(), 1LL << 40) - 1;
  return order_of_x(f) == n;
}

Poly quotient_xn(const Poly& g, int n) {
  auto [quo, rem] = Poly::xn_minus_1(g.field(), n).divmod(g);
  if (!rem.is_zero()) throw std::invalid_argument("polynomial does not divide x^n-1");
  return quo;
}

std::vector<Poly> monic_irreducibles(const Field& f, int k, std::size_t cap) {
  if (k < 1) throw std::invalid_argument("degree must be >= 1");
  long long count = pow_checked(f.q(), k, 1LL << 62);
  if (count > static_cast<long long>(cap))
    throw enumeration_cap_error("irreducible enumeration exceeds cap");
  std::vector<Poly> out;
  for (long long c = 0; c < count; ++c) {
    std::vector<int> v(k + 1, 0);
    long long t = c;
    for (int i = 0; i < k; ++i) {
      v[i] = static_cast<int>(t % f.q());
      t /= f.q();
    }
    v[k] = 1;
    Poly cand(f, std::move(v));
    if (is_irreducible(cand)) out.push_back(std::move(cand));
  }
  return out;
}

std::vector<std::pair<Poly, int>> factor_xn_minus_1(const Field& f, int n,
                                                    std::size_t cap) {
  Poly rem = Poly::xn_minus_1(f, n);
  std::vector<std::pair<Poly, int>> factors;
  for (int d = 1; rem.degree() > 0; ++d) {
    if (2 * d > rem.degree()) {
      factors.emplace_back(rem, 1);
      break;
    }
    for (const Poly& p : monic_irreducibles(f, d, cap)) {
      int e = 0;
      while (true) {
        auto [quo, r] = rem.divmod(p);
        if (!r.is_zero()) break;
        rem = quo;
        ++e;
      }
      if (e > 0) factors.emplace_back(p, e);
      if (rem.degree() < d) break;
    }
  }
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return factors;
}

std::vector<Poly> divisors_of_xn_minus_1(const Field& f, int n, std::size_t cap) {
  auto factors = factor_xn_minus_1(f, n, cap);
  std::vector<Poly> divs{Poly::one(f)};
  for (const auto& [p, e] : factors) {
    std::size_t base = divs.size();
    Poly pw = Poly::one(f);
    for (int i = 1; i <= e; ++i) {
      pw = pw * p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pw);
    }
  }
  std::sort(divs.begin(), divs.end(), poly_less);
  return divs;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

namespace {

int parse_int(const std::string& s, std::size_t& i) {
  std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start) throw std::invalid_argument("expected a number in '" + s + "'");
  return std::stoi(s.substr(start, i - start));
}

int coefficient_from_int(const Field& f, int c, bool negate) {
  int e;
  if (f.is_prime_field()) {
    e = c % f.p();
  } else {
    if (c >= f.q()) throw std::invalid_argument("coefficient index out of range");
    e = c;
  }
  return negate ? f.neg(e) : e;
}

}  // namespace

Poly parse_poly(const Field& f, const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '*') s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial");

  std::map<int, int> terms;  // degree -> coefficient
  std::size_t i = 0;
  bool negate = false;
  if (s[0] == '+' || s[0] == '-') {
    negate = (s[0] == '-');
    i = 1;
  }
  while (i < s.size()) {
    int coef = 1;
    bool saw_coef = false;
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      coef = parse_int(s, i);
      saw_coef = true;
    }
    int degree = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      degree = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        degree = parse_int(s, i);
      }
    } else if (!saw_coef) {
      throw std::invalid_argument("malformed polynomial '" + text + "'");
    }
    int e = coefficient_from_int(f, coef, negate);
    terms[degree] = f.add(terms.count(degree) ? terms[degree] : 0, e);

    if (i == s.size()) break;
    if (s[i] == '+') negate = false;
    else if (s[i] == '-') negate = true;
    else throw std::invalid_argument("malformed polynomial '" + text + "'");
    ++i;
    if (i == s.size()) throw std::invalid_argument("trailing sign in '" + text + "'");
  }

  std::vector<int> coeffs(terms.empty() ? 0 : terms.rbegin()->first + 1, 0);
  for (auto [d, c] : terms) coeffs[d] = c;
  return Poly(f, std::move(coeffs));
}

Poly poly_from_coeffs_text(const Field& f, const std::string& text) {
  std::vector<int> coeffs;
  std::size_t i = 0;
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty coefficient list");
  while (true) {
    coeffs.push_back(parse_int(s, i));
    if (i == s.size()) break;
    if (s[i] != ',') throw std::invalid_argument("malformed coefficient list '" + text + "'");
    ++i;
  }
  return Poly(f, std::move(coeffs));
}

}  // namespace cyclic
