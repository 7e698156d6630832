#pragma once

#include <vector>

#include "cyclic/code.hpp"
#include "cyclic/poly.hpp"

namespace cyclic {

using LfsrState = std::vector<int>;

/* Linear feedback shift register of a monic polynomial
   f = a_0 + a_1 x + ... + a_{k-1} x^{k-1} + x^k.  One step shifts the
   window and appends the feedback value:
   (x_0, ..., x_{k-1}) -> (x_1, ..., x_{k-1}, -(a_0 x_0 + ... + a_{k-1} x_{k-1})),
   the companion-matrix recurrence of f. */
class Lfsr {
public:
  explicit Lfsr(const Poly& f);  // monic, degree >= 1

  const Field& field() const { return f_; }
  const Poly& poly() const { return p_; }
  int register_length() const { return k_; }

  LfsrState step(const LfsrState& s) const;
  // s_0, s_1, ...: the stream whose consecutive length-k windows are the
  // state iterates; entry r is the first component of the r-th state.
  std::vector<int> sequence(const LfsrState& seed, long long length) const;
  // Least r >= 1 with T^r(seed) = seed; error if the seed never returns
  // (possible only when a_0 = 0, where T is singular).
  long long period(const LfsrState& seed) const;
  // Least r >= 1 with T^r the identity map; error when a_0 = 0.
  long long map_order() const;
  // With seed (0,...,0,1): the sequence has period exactly q^k - 1 and the
  // cyclic length-k windows of one period enumerate F_q^k minus 0, each once.
  bool window_property(std::size_t cap = kDefaultEnumCap) const;

private:
  void check_state(const LfsrState& s) const;

  Field f_;
  Poly p_;
  int k_;
  std::vector<int> a_;  // feedback coefficients a_0 .. a_{k-1}
};

/* The seven equivalent characterizations of a primitive parity check
   polynomial, each evaluated from scratch, plus the reversal identity
   linking the generator's codeword to the register's stream. */
struct EquivalenceSuite {
  bool transitive_code_action;  // rotation is simply transitive off 0
  bool gcd_condition;           // gcd(gperp, x^d - 1) = 1, proper d | n
  bool order_of_x_full;         // order of x mod gperp equals n
  bool state_map_order_full;    // the state map has order n
  bool iterates_exhaust;        // seed (0,...,0,1) visits every nonzero state
  bool window_property;         // stream windows cover F_q^k minus 0 once
  bool codeword_windows;        // cyclic windows of g's codeword do the same
  bool reverse_check;           // reverse(word of g) is the stream of one period

  bool all_seven() const {
    return transitive_code_action && gcd_condition && order_of_x_full &&
           state_map_order_full && iterates_exhaust && window_property &&
           codeword_windows;
  }
  bool consistent() const {
    bool v = transitive_code_action;
    return gcd_condition == v && order_of_x_full == v &&
           state_map_order_full == v && iterates_exhaust == v &&
           window_property == v && codeword_windows == v;
  }
};

// gperp must be monic irreducible with gperp | x^n - 1 for n = q^k - 1.
EquivalenceSuite equivalence_suite(const Poly& gperp,
                                   std::size_t cap = kDefaultEnumCap);

}  // namespace cyclic
