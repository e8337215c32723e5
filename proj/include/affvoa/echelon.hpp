#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "affvoa/rational.hpp"

namespace affvoa {

template <class Key, class Compare = std::less<Key>>
using SparseVec = std::map<Key, Rational, Compare>;

/// Adds `s * src` into `dst`, dropping entries that cancel.
template <class Key, class Compare>
void axpy(SparseVec<Key, Compare>& dst, const Rational& s, const SparseVec<Key, Compare>& src) {
  for (const auto& [k, v] : src) {
    auto [it, inserted] = dst.try_emplace(k, 0);
    it->second += s * v;
    if (it->second == 0) dst.erase(it);
  }
}

/// Incrementally maintained reduced row echelon basis of a subspace of
/// sparse vectors. The pivot of a row is its first key in `Compare` order;
/// rows are kept fully reduced, so `reduce` yields a canonical
/// representative of the coset v + span.
template <class Key, class Compare = std::less<Key>>
class EchelonBasis {
 public:
  using Vec = SparseVec<Key, Compare>;

  /// Removes every pivot key from v.
  void reduce(Vec& v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      Key key = it->first;
      Rational f = -it->second;
      axpy(v, f, row->second);
      it = v.upper_bound(key);
    }
  }

  /// Returns true when v was independent of the current span.
  bool insert(Vec v) {
    reduce(v);
    if (v.empty()) return false;
    Rational inv = 1 / v.begin()->second;
    for (auto& [k, c] : v) c *= inv;
    const Key pivot = v.begin()->first;
    for (auto& [p, row] : rows_) {
      auto hit = row.find(pivot);
      if (hit == row.end()) continue;
      Rational f = -hit->second;
      axpy(row, f, v);
    }
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  bool contains(Vec v) const {
    reduce(v);
    return v.empty();
  }

  std::size_t dimension() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  /// Rows in pivot order.
  std::vector<Vec> rows() const {
    std::vector<Vec> out;
    out.reserve(rows_.size());
    for (const auto& [p, r] : rows_) out.push_back(r);
    return out;
  }

  bool is_pivot(const Key& k) const { return rows_.count(k) != 0; }

 private:
  std::map<Key, Vec, Compare> rows_;
};

}  // namespace affvoa
