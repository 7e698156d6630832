#pragma once

#include <functional>
#include <map>
#include <vector>

#include "cyclic/poly.hpp"
#include "cyclic/word.hpp"

namespace cyclic {

// Dictionary between words and residues: w_1 + w_2 x + ... + w_n x^{n-1}.
Word word_of_poly(const Poly& f, int n);  // error if deg f >= n
Poly poly_of_word(const Field& f, const Word& w);

/* Cyclic code of length n over F_q: the ideal of F_q[x]/(x^n - 1) generated
   by a monic divisor g of x^n - 1.  The parity check polynomial is
   gperp = (x^n - 1)/g and the dimension is k = deg gperp. */
class CyclicCode {
public:
  static CyclicCode from_generator(const Poly& g, int n);
  static CyclicCode from_parity_check(const Poly& gperp, int n);

  const Field& field() const { return f_; }
  int length() const { return n_; }
  int dim() const { return k_; }
  const Poly& generator() const { return g_; }
  const Poly& parity_check() const { return gperp_; }
  long long size() const;  // q^k

  bool contains(const Word& w) const;

  // The q^k words h*g, ordered by h's coefficient vector read as a base-q
  // integer (constant term least significant).  Throws enumeration_cap_error
  // when q^k exceeds cap.
  std::vector<Word> codewords(std::size_t cap = kDefaultEnumCap) const;
  // Streaming form of the same walk; fn sees one shared buffer.
  void for_each_codeword(const std::function<void(const Word&)>& fn,
                         std::size_t cap = kDefaultEnumCap) const;

  bool operator==(const CyclicCode& o) const {
    return f_ == o.f_ && n_ == o.n_ && g_ == o.g_;
  }

private:
  CyclicCode(Field f, int n, Poly g, Poly gperp);

  Field f_;
  int n_;
  Poly g_, gperp_;
  int k_;
};

/* Orbits of the right-rotation action on a rotation-closed word set.  Orbits
   are listed by ascending lexicographic representative; each orbit starts at
   its smallest member and follows the action. */
struct OrbitDecomposition {
  std::vector<std::vector<Word>> orbits;
  std::vector<long long> sizes() const;  // ascending multiset
};

OrbitDecomposition orbit_decomposition(const std::vector<Word>& words);

// a(d) = number of words fixed by the d-th power of the rotation, recorded
// for every divisor d of n.  Fixedness only depends on gcd(d, n).
using FixedPointProfile = std::map<long long, long long>;

FixedPointProfile fixed_point_profile(const OrbitDecomposition& dec, int n);
FixedPointProfile fixed_point_profile(const CyclicCode& code,
                                      std::size_t cap = kDefaultEnumCap);
// The same profile computed without enumeration:
// a(d) = q^{deg gcd(gperp, x^d - 1)}.
FixedPointProfile fixed_point_profile_gcd(const CyclicCode& code);

// Rotation acts freely on the nonzero codewords iff gcd(gperp, x^d - 1) = 1
// for every proper divisor d of n.
bool is_free_on_nonzero(const CyclicCode& code);

CyclicCode repetition_code(const Field& f, int n);    // constants; g = 1+x+...+x^{n-1}
CyclicCode parity_check_code(const Field& f, int n);  // coordinate sum 0; g = x-1
CyclicCode full_code(const Field& f, int n);          // g = 1
CyclicCode hamming_code(const Poly& g);                // g primitive, n = q^{deg g} - 1
CyclicCode dual_hamming_code(const Poly& gperp);       // gperp primitive, dimension deg gperp

}  // namespace cyclic
