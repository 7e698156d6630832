#include "cyclic/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclic {
namespace {

constexpr int kTableLimit = 16;

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long long ipow(int b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/* Polynomials over F_p as digit vectors, ascending, used only to pick and
   validate the field modulus. */
using FpPoly = std::vector<int>;

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

// Remainder of a by monic b.
FpPoly rem(FpPoly a, const FpPoly& b, int p) {
  trim(a);
  while (deg(a) >= deg(b)) {
    int c = a.back();
    int shift = deg(a) - deg(b);
    for (int i = 0; i < static_cast<int>(b.size()); ++i) {
      int& x = a[i + shift];
      x = (x - c * b[i]) % p;
      if (x < 0) x += p;
    }
    trim(a);
  }
  return a;
}

FpPoly from_counter(long long c, int len, int p) {
  FpPoly v(len);
  for (int i = 0; i < len; ++i) {
    v[i] = static_cast<int>(c % p);
    c /= p;
  }
  return v;
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool irreducible_fp(const FpPoly& f, int p) {
  int k = deg(f);
  if (k < 1) return false;
  for (int d = 1; 2 * d <= k; ++d) {
    for (long long c = 0; c < ipow(p, d); ++c) {
      FpPoly cand = from_counter(c, d + 1, p);
      cand[d] = 1;
      if (rem(f, cand, p).empty()) return false;
    }
  }
  return true;
}

FpPoly canonical_modulus(int p, int m) {
  for (long long c = 0; c < ipow(p, m); ++c) {
    FpPoly cand = from_counter(c, m + 1, p);
    cand[m] = 1;
    if (irreducible_fp(cand, p)) return cand;
  }
  throw std::logic_error("no irreducible modulus found");
}

}  // namespace

Field Field::make(int p, int m) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (m < 1) throw std::invalid_argument("field extension degree must be >= 1");
  if (m == 1) return Field(p, 1, {});
  return Field(p, m, canonical_modulus(p, m));
}

Field Field::make(int p, int m, const std::vector<int>& modulus) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (m < 2) throw std::invalid_argument("explicit modulus requires extension degree >= 2");
  if (static_cast<int>(modulus.size()) != m + 1 || modulus.back() != 1)
    throw std::invalid_argument("modulus must be monic of degree m");
  for (int c : modulus)
    if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficient out of range");
  if (!irreducible_fp(modulus, p))
    throw std::invalid_argument("modulus is reducible");
  return Field(p, m, modulus);
}

Field::Field(int p, int m, std::vector<int> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
  long long q = ipow(p, m);
  if (q > (1 << 20)) throw std::invalid_argument("field too large");
  q_ = static_cast<int>(q);
  if (q_ <= kTableLimit) build_tables();
}

int Field::add_slow(int a, int b) const {
  if (m_ == 1) return (a + b) % p_;
  int r = 0, pw = 1;
  for (int i = 0; i < m_; ++i) {
    r += (a % p_ + b % p_) % p_ * pw;
    a /= p_;
    b /= p_;
    pw *= p_;
  }
  return r;
}

int Field::sub_slow(int a, int b) const {
  if (m_ == 1) return ((a - b) % p_ + p_) % p_;
  int r = 0, pw = 1;
  for (int i = 0; i < m_; ++i) {
    r += ((a % p_ - b % p_) % p_ + p_) % p_ * pw;
    a /= p_;
    b /= p_;
    pw *= p_;
  }
  return r;
}

int Field::mul_slow(int a, int b) const {
  if (m_ == 1) return static_cast<int>(static_cast<long long>(a) * b % p_);
  std::vector<int> conv(2 * m_ - 1, 0);
  std::vector<int> da = digits(a), db = digits(b);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) conv[i + j] = (conv[i + j] + da[i] * db[j]) % p_;
  // reduce by the monic modulus
  for (int i = 2 * m_ - 2; i >= m_; --i) {
    int c = conv[i];
    if (c == 0) continue;
    conv[i] = 0;
    for (int j = 0; j < m_; ++j) {
      int& x = conv[i - m_ + j];
      x = (x - c * modulus_[j]) % p_;
      if (x < 0) x += p_;
    }
  }
  conv.resize(m_);
  return from_digits(conv);
}

void Field::build_tables() {
  add_tab_.resize(q_ * q_);
  sub_tab_.resize(q_ * q_);
  mul_tab_.resize(q_ * q_);
  inv_tab_.assign(q_, 0);
  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b) {
      add_tab_[a * q_ + b] = add_slow(a, b);
      sub_tab_[a * q_ + b] = sub_slow(a, b);
      mul_tab_[a * q_ + b] = mul_slow(a, b);
    }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_tab_[a * q_ + b] == 1) inv_tab_[a] = b;
  tables_ = true;
}

int Field::inv(int a) const {
  assert(valid(a));
  if (a == 0) throw std::domain_error("division by zero field element");
  if (tables_) return inv_tab_[a];
  return pow(a, q_ - 2);
}

int Field::pow(int a, long long e) const {
  assert(valid(a));
  if (e < 0) throw std::invalid_argument("negative exponent");
  int r = 1;
  int base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::vector<int> Field::digits(int a) const {
  assert(valid(a));
  std::vector<int> d(m_);
  for (int i = 0; i < m_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

int Field::from_digits(const std::vector<int>& d) const {
  if (static_cast<int>(d.size()) != m_) throw std::invalid_argument("digit count mismatch");
  int r = 0, pw = 1;
  for (int i = 0; i < m_; ++i) {
    if (d[i] < 0 || d[i] >= p_) throw std::invalid_argument("digit out of range");
    r += d[i] * pw;
    pw *= p_;
  }
  return r;
}

std::string Field::show(int a) const {
  assert(valid(a));
  return std::to_string(a);
}

std::string Field::digits_str(int a) const {
  std::string s = "(";
  std::vector<int> d = digits(a);
  for (int i = 0; i < m_; ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + ")";
}

AlphabetOrder AlphabetOrder::index_order(const Field& f) {
  AlphabetOrder o;
  o.rank.resize(f.q());
  for (int i = 0; i < f.q(); ++i) o.rank[i] = i;
  return o;
}

AlphabetOrder AlphabetOrder::from_ascending(const std::vector<int>& elems) {
  int q = static_cast<int>(elems.size());
  AlphabetOrder o;
  o.rank.assign(q, -1);
  for (int pos = 0; pos < q; ++pos) {
    int e = elems[pos];
    if (e < 0 || e >= q || o.rank[e] != -1)
      throw std::invalid_argument("order must be a permutation of 0..q-1");
    o.rank[e] = pos;
  }
  return o;
}

std::vector<int> AlphabetOrder::ascending() const {
  std::vector<int> elems(rank.size());
  for (int e = 0; e < static_cast<int>(rank.size()); ++e) elems[rank[e]] = e;
  return elems;
}

}  // namespace cyclic
