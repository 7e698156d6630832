#include "cyclic/word.hpp"

#include <stdexcept>

namespace cyclic {

Word rotate(const Word& w, long long steps, Rotation dir) {
  long long n = static_cast<long long>(w.size());
  if (n == 0) throw std::invalid_argument("empty word");
  if (dir == Rotation::left) steps = -steps;
  long long s = steps % n;
  if (s < 0) s += n;
  Word r(w.size());
  for (long long i = 0; i < n; ++i) r[(i + s) % n] = w[i];
  return r;
}

std::string word_str(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s;
}

Word parse_word(const Field& f, const std::string& text) {
  Word w;
  int cur = 0;
  bool have = false;
  for (char ch : text) {
    if (ch == ' ') continue;
    if (ch == ',') {
      if (!have) throw std::invalid_argument("malformed word '" + text + "'");
      w.push_back(cur);
      cur = 0;
      have = false;
    } else if (ch >= '0' && ch <= '9') {
      cur = cur * 10 + (ch - '0');
      have = true;
    } else {
      throw std::invalid_argument("malformed word '" + text + "'");
    }
  }
  if (!have) throw std::invalid_argument("malformed word '" + text + "'");
  w.push_back(cur);
  for (int e : w)
    if (!f.valid(e)) throw std::invalid_argument("word entry out of range");
  return w;
}

}  // namespace cyclic
