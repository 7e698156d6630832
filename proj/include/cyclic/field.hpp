#pragma once

#include <cassert>
#include <string>
#include <vector>

namespace cyclic {

/* Finite field F_q with q = p^m.  Elements are indices in [0, q): the base-p
   digits of the index (least significant first) are the coordinates of the
   element in the basis 1, x, ..., x^{m-1} of F_p[x]/(modulus).  Index 0 is the
   additive identity and index 1 the multiplicative identity.  For m == 1 the
   index is the residue itself. */
class Field {
public:
  // Prime field F_p, or F_{p^m} with the canonical modulus: the first monic
  // irreducible of degree m when coefficient vectors are ordered by their
  // value as a base-p integer, constant term least significant.
  static Field make(int p, int m = 1);
  // Explicit modulus: monic irreducible over F_p, coefficients ascending,
  // length m + 1.
  static Field make(int p, int m, const std::vector<int>& modulus);

  int p() const { return p_; }
  int m() const { return m_; }
  int q() const { return q_; }
  bool is_prime_field() const { return m_ == 1; }
  const std::vector<int>& modulus() const { return modulus_; }  // empty when m == 1

  int add(int a, int b) const {
    assert(valid(a) && valid(b));
    return tables_ ? add_tab_[a * q_ + b] : add_slow(a, b);
  }
  int sub(int a, int b) const {
    assert(valid(a) && valid(b));
    return tables_ ? sub_tab_[a * q_ + b] : sub_slow(a, b);
  }
  int neg(int a) const { return sub(0, a); }
  int mul(int a, int b) const {
    assert(valid(a) && valid(b));
    return tables_ ? mul_tab_[a * q_ + b] : mul_slow(a, b);
  }
  int inv(int a) const;               // error on a == 0
  int div(int a, int b) const { return mul(a, inv(b)); }
  int pow(int a, long long e) const;  // square and multiply, e >= 0

  std::vector<int> digits(int a) const;            // length m, base-p
  int from_digits(const std::vector<int>& d) const;

  std::string show(int a) const;         // the index, as decimal text
  std::string digits_str(int a) const;   // "(c0,c1,...)" legend form

  bool valid(int a) const { return 0 <= a && a < q_; }
  bool operator==(const Field& o) const {
    return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

private:
  Field(int p, int m, std::vector<int> modulus);
  int add_slow(int a, int b) const;
  int sub_slow(int a, int b) const;
  int mul_slow(int a, int b) const;
  void build_tables();

  int p_ = 0, m_ = 0, q_ = 0;
  std::vector<int> modulus_;
  bool tables_ = false;
  std::vector<int> add_tab_, sub_tab_, mul_tab_, inv_tab_;
};

/* Total order on the letters of F_q: rank[i] is the position of element i.
   Word statistics compare letters through such an order. */
struct AlphabetOrder {
  std::vector<int> rank;

  static AlphabetOrder index_order(const Field& f);
  // elems lists the field elements from smallest to largest; must be a
  // permutation of 0..q-1.
  static AlphabetOrder from_ascending(const std::vector<int>& elems);

  std::vector<int> ascending() const;  // inverse permutation of rank
  bool less(int a, int b) const { return rank[a] < rank[b]; }
  bool operator==(const AlphabetOrder&) const = default;
};

}  // namespace cyclic
