#pragma once

#include <vector>

#include "weihrauch/nat.hpp"

namespace weihrauch {

// A finite word over the naturals; ε is the empty vector.
using Word = std::vector<Nat>;

inline bool is_prefix(const Word& w, const Word& v) {
  if (w.size() > v.size()) return false;
  for (size_t i = 0; i < w.size(); ++i)
    if (w[i] != v[i]) return false;
  return true;
}

// The `p-1` convention: concatenation of the blocks p(i)-1, where symbol 0
// contributes the empty word.
inline Word minus_one_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Nat& s : w)
    if (s != 0) out.push_back(s - 1);
  return out;
}

inline Word plus_one_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Nat& s : w) out.push_back(s + 1);
  return out;
}

std::string word_str(const Word& w);

}  // namespace weihrauch
