#pragma once

// Independent oracle: PBW normal form by repeatedly swapping the first
// out-of-order adjacent pair of a word (x y -> y x + [x, y]). This is a
// different rewrite order from the library's left-multiplication scheme.

#include <map>
#include <vector>

#include "affvoa/root_datum.hpp"

namespace oracle {

using Word = std::vector<int>;
using WordSum = std::map<Word, affvoa::Rational>;

inline void add_to(WordSum& s, const Word& w, const affvoa::Rational& c) {
  auto& v = s[w];
  v += c;
  if (v == 0) s.erase(w);
}

inline WordSum bubble_normal_form(const affvoa::RootDatum& d, const Word& w, std::map<Word, WordSum>& memo) {
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  WordSum out;
  std::size_t i = 0;
  while (i + 1 < w.size() && w[i] <= w[i + 1]) ++i;
  if (i + 1 >= w.size()) {
    out[w] = 1;
  } else {
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    for (const auto& [m, c] : bubble_normal_form(d, swapped, memo)) add_to(out, m, c);
    for (const auto& t : d.bracket(w[i], w[i + 1])) {
      Word shorter(w.begin(), w.begin() + i);
      shorter.push_back(t.index);
      shorter.insert(shorter.end(), w.begin() + i + 2, w.end());
      for (const auto& [m, c] : bubble_normal_form(d, shorter, memo)) add_to(out, m, c * t.coeff);
    }
  }
  memo[w] = out;
  return out;
}

}  // namespace oracle
