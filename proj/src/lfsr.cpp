#include "cyclic/lfsr.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "cyclic/word.hpp"

namespace cyclic {
namespace {

long long state_space_bound(const Field& f, int k) {
  return pow_checked(f.q(), k, (1LL << 40));
}

std::set<LfsrState> nonzero_states(const Field& f, int k) {
  std::set<LfsrState> out;
  LfsrState s(k, 0);
  while (true) {
    int i = 0;
    while (i < k && s[i] == f.q() - 1) s[i++] = 0;
    if (i == k) break;
    ++s[i];
    out.insert(s);
  }
  return out;
}

}  // namespace

Lfsr::Lfsr(const Poly& f) : f_(f.field()), p_(f), k_(f.degree()) {
  if (k_ < 1) throw std::invalid_argument("feedback polynomial must have degree >= 1");
  if (f.coeff(k_) != 1) throw std::invalid_argument("feedback polynomial must be monic");
  a_.resize(k_);
  for (int i = 0; i < k_; ++i) a_[i] = f.coeff(i);
}

void Lfsr::check_state(const LfsrState& s) const {
  if (static_cast<int>(s.size()) != k_) {
    throw std::invalid_argument("state length must equal the register length");
  }
  for (int v : s) {
    if (!f_.valid(v)) throw std::invalid_argument("state entry out of field range");
  }
}

LfsrState Lfsr::step(const LfsrState& s) const {
  check_state(s);
  int acc = 0;
  for (int i = 0; i < k_; ++i) acc = f_.add(acc, f_.mul(a_[i], s[i]));
  LfsrState next(k_);
  for (int i = 0; i + 1 < k_; ++i) next[i] = s[i + 1];
  next[k_ - 1] = f_.sub(0, acc);
  return next;
}

std::vector<int> Lfsr::sequence(const LfsrState& seed, long long length) const {
  check_state(seed);
  if (length < 0) throw std::invalid_argument("sequence length must be >= 0");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(length));
  LfsrState s = seed;
  for (long long r = 0; r < length; ++r) {
    out.push_back(s[0]);
    s = step(s);
  }
  return out;
}

long long Lfsr::period(const LfsrState& seed) const {
  check_state(seed);
  const long long bound = state_space_bound(f_, k_);
  LfsrState s = step(seed);
  long long r = 1;
  while (s != seed) {
    if (r >= bound) {
      throw std::domain_error("seed never returns under the state map");
    }
    s = step(s);
    ++r;
  }
  return r;
}

long long Lfsr::map_order() const {
  if (a_[0] == 0) {
    throw std::domain_error("state map is singular (constant term is 0)");
  }
  long long ord = 1;
  for (int j = 0; j < k_; ++j) {
    LfsrState e(k_, 0);
    e[j] = 1;
    ord = std::lcm(ord, period(e));
  }
  return ord;
}

bool Lfsr::window_property(std::size_t cap) const {
  long long count;
  try {
    count = pow_checked(f_.q(), k_, static_cast<long long>(cap));
  } catch (const std::invalid_argument&) {
    throw enumeration_cap_error("window check needs " + std::to_string(f_.q()) +
                                "^" + std::to_string(k_) +
                                " states, above the cap of " +
                                std::to_string(cap));
  }
  const long long n = count - 1;

  LfsrState seed(k_, 0);
  seed[k_ - 1] = 1;
  if (period(seed) != n) return false;

  std::vector<int> seq = sequence(seed, n);
  std::set<LfsrState> windows;
  LfsrState zero(k_, 0);
  for (long long i = 0; i < n; ++i) {
    LfsrState w(k_);
    for (int j = 0; j < k_; ++j) w[j] = seq[(i + j) % n];
    if (w == zero) return false;
    windows.insert(std::move(w));
  }
  return static_cast<long long>(windows.size()) == n;
}

EquivalenceSuite equivalence_suite(const Poly& gperp, std::size_t cap) {
  Poly h = gperp.monic();
  if (!is_irreducible(h)) {
    throw std::invalid_argument("parity check polynomial must be irreducible");
  }
  const Field& f = h.field();
  const int k = h.degree();
  long long count;
  try {
    count = pow_checked(f.q(), k, static_cast<long long>(cap));
  } catch (const std::invalid_argument&) {
    throw enumeration_cap_error("equivalence suite needs " +
                                std::to_string(f.q()) + "^" +
                                std::to_string(k) +
                                " codewords, above the cap of " +
                                std::to_string(cap));
  }
  const long long n = count - 1;

  // Throws when h does not divide x^n - 1 (only h = x among irreducibles).
  CyclicCode code =
      CyclicCode::from_parity_check(h, static_cast<int>(n));

  EquivalenceSuite r{};

  r.transitive_code_action =
      orbit_decomposition(code.codewords(cap)).sizes() ==
      std::vector<long long>{1, n};

  r.gcd_condition = is_free_on_nonzero(code);

  r.order_of_x_full = order_of_x(h) == n;

  Lfsr reg(h);
  r.state_map_order_full = reg.map_order() == n;

  LfsrState seed(k, 0);
  seed[k - 1] = 1;
  std::set<LfsrState> visited;
  LfsrState s = seed;
  do {
    visited.insert(s);
    s = reg.step(s);
  } while (s != seed && static_cast<long long>(visited.size()) <= n);
  r.iterates_exhaust = visited == nonzero_states(f, k);

  r.window_property = reg.window_property(cap);

  Word w = word_of_poly(code.generator(), static_cast<int>(n));
  std::set<LfsrState> windows;
  bool zero_window = false;
  for (long long i = 0; i < n; ++i) {
    LfsrState win(k);
    for (int j = 0; j < k; ++j) win[j] = w[(i + j) % n];
    if (win == LfsrState(k, 0)) zero_window = true;
    windows.insert(std::move(win));
  }
  r.codeword_windows =
      !zero_window && static_cast<long long>(windows.size()) == n;

  Word rev = w;
  std::reverse(rev.begin(), rev.end());
  r.reverse_check = reg.sequence(seed, n) == std::vector<int>(rev.begin(), rev.end());

  return r;
}

}  // namespace cyclic
