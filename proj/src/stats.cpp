#include "cyclic/stats.hpp"

#include <stdexcept>

namespace cyclic {

StatKind stat_kind_from(const std::string& name) {
  if (name == "maj") return StatKind::maj;
  if (name == "inv") return StatKind::inv;
  if (name == "cdes") return StatKind::cdes;
  if (name == "wt") return StatKind::wt;
  throw std::invalid_argument("unknown statistic '" + name + "'");
}

std::string to_string(StatKind k) {
  switch (k) {
    case StatKind::maj: return "maj";
    case StatKind::inv: return "inv";
    case StatKind::cdes: return "cdes";
    case StatKind::wt: return "wt";
  }
  return "";
}

long long stat(const Word& w, StatKind k, const AlphabetOrder& ord) {
  int n = static_cast<int>(w.size());
  if (n == 0) throw std::invalid_argument("empty word");
  long long s = 0;
  switch (k) {
    case StatKind::maj:
      for (int i = 1; i < n; ++i)
        if (ord.less(w[i], w[i - 1])) s += i;
      return s;
    case StatKind::inv: {
      // counts of letters seen so far, by rank: O(n q)
      std::vector<long long> seen(ord.rank.size(), 0);
      for (int j = 0; j < n; ++j) {
        int r = ord.rank[w[j]];
        for (int t = r + 1; t < static_cast<int>(seen.size()); ++t) s += seen[t];
        ++seen[r];
      }
      return s;
    }
    case StatKind::cdes:
      for (int i = 0; i < n; ++i)
        if (ord.less(w[(i + 1) % n], w[i])) ++s;
      return s;
    case StatKind::wt:
      for (int e : w)
        if (e != 0) ++s;
      return s;
  }
  throw std::logic_error("unreachable");
}

IntPoly stat_gen_poly(const std::vector<Word>& words, StatKind k,
                      const AlphabetOrder& ord, std::optional<int> mod_n) {
  IntPoly acc({}, mod_n);
  if (mod_n) {
    std::vector<BigInt> c(*mod_n);
    for (const Word& w : words) c[stat(w, k, ord) % *mod_n] += 1;
    return IntPoly(std::move(c), mod_n);
  }
  for (const Word& w : words) acc = acc + IntPoly::monomial(stat(w, k, ord));
  return acc;
}

IntPoly orbit_stat_poly(const Word& w, StatKind k, const AlphabetOrder& ord,
                        std::optional<int> mod_n) {
  const int n = static_cast<int>(w.size());
  if (n == 0) throw std::invalid_argument("empty word");

  // Values stat(c^j(w)) for j = 0..n-1.  maj and binary ascending inv admit
  // O(1) per-rotation updates (the one-rotation laws, cross-checked against
  // the direct route in the tests); cdes and wt are rotation constants.
  std::vector<long long> values;
  values.reserve(n);
  switch (k) {
    case StatKind::maj: {
      std::vector<char> desc(n);
      for (int i = 0; i < n; ++i) desc[i] = ord.less(w[(i + 1) % n], w[i]);
      long long s = stat(w, StatKind::maj, ord);
      long long cd = stat(w, StatKind::cdes, ord);
      for (int j = 0; j < n; ++j) {
        values.push_back(s);
        s += cd - (desc[((n - 2 - j) % n + n) % n] ? n : 0);
      }
      break;
    }
    case StatKind::inv: {
      bool ascending_binary = ord.rank.size() == 2 && ord.rank[0] == 0;
      if (ascending_binary) {
        long long s = stat(w, StatKind::inv, ord);
        long long weight = stat(w, StatKind::wt, ord);
        for (int j = 0; j < n; ++j) {
          values.push_back(s);
          s += w[((n - 1 - j) % n + n) % n] != 0 ? n - weight : -weight;
        }
      } else {
        Word cur = w;
        for (int j = 0; j < n; ++j) {
          values.push_back(stat(cur, StatKind::inv, ord));
          cur = rotate(cur);
        }
      }
      break;
    }
    case StatKind::cdes:
    case StatKind::wt:
      values.assign(n, stat(w, k, ord));
      break;
  }

  if (mod_n) {
    std::vector<BigInt> c(*mod_n);
    for (long long v : values) c[v % *mod_n] += 1;
    return IntPoly(std::move(c), mod_n);
  }
  IntPoly acc;
  for (long long v : values) acc = acc + IntPoly::monomial(v);
  return acc;
}

}  // namespace cyclic
