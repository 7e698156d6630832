#pragma once

#include <string>
#include <vector>

#include "cyclic/field.hpp"

namespace cyclic {

// A word of length n over F_q; entries are field element indices.  Position
// j of the word (1-based, as spoken of in the statistics) is entry j-1.
using Word = std::vector<int>;

enum class Rotation { right, left };

// One right rotation sends (w_1, ..., w_n) to (w_n, w_1, ..., w_{n-1}); this
// matches multiplication by x on the codeword's polynomial.  Left is its
// inverse.  Negative step counts rotate the other way.
Word rotate(const Word& w, long long steps = 1, Rotation dir = Rotation::right);

std::string word_str(const Word& w);                         // "1,1,2,0,2,2,1,0"
Word parse_word(const Field& f, const std::string& text);    // validates entries

}  // namespace cyclic
