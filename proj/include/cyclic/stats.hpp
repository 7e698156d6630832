#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclic/field.hpp"
#include "cyclic/intpoly.hpp"
#include "cyclic/word.hpp"

namespace cyclic {

/* The four word statistics.
     maj:  sum of the positions i in 1..n-1 with w_i > w_{i+1}
     inv:  number of pairs i < j with w_i > w_j
     cdes: number of cyclic descents, i in 1..n with w_i > w_{i+1}, w_{n+1} = w_1
     wt:   number of nonzero entries
   maj, inv and cdes compare letters through an AlphabetOrder; wt does not. */
enum class StatKind { maj, inv, cdes, wt };

StatKind stat_kind_from(const std::string& name);
std::string to_string(StatKind k);

long long stat(const Word& w, StatKind k, const AlphabetOrder& ord);

// Sum of t^{stat(w)} over the given words; with mod_n set the exponents are
// folded mod n as they are accumulated.
IntPoly stat_gen_poly(const std::vector<Word>& words, StatKind k,
                      const AlphabetOrder& ord, std::optional<int> mod_n = {});

// Sum of t^{stat(c^j(w))} over j = 0..n-1, every rotation counted once even
// when the orbit is smaller.
IntPoly orbit_stat_poly(const Word& w, StatKind k, const AlphabetOrder& ord,
                        std::optional<int> mod_n = {});

}  // namespace cyclic
