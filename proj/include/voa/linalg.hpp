#pragma once

// Exact incremental row reduction over the rationals, for rank and span
// computations on sparse vectors with arbitrary ordered keys.

#include <map>
#include <vector>

#include "voa/rational.hpp"

namespace voa {

template <class Key>
class SparseEchelon {
 public:
  using Vector = std::map<Key, Rational>;

  /// Reduces v against the stored rows; v becomes zero iff it lies in the span.
  void reduce(Vector& v) const {
    for (const auto& [pivot, row] : rows_) {
      auto it = v.find(pivot);
      if (it == v.end()) continue;
      const Rational factor = it->second;
      for (const auto& [k, c] : row) {
        Rational& slot = v[k];
        slot -= factor * c;
        if (sgn(slot) == 0) v.erase(k);
      }
    }
  }

  bool contains(Vector v) const {
    reduce(v);
    return v.empty();
  }

  /// Adds v to the span. Returns false if v was already in it.
  bool insert(Vector v) {
    reduce(v);
    if (v.empty()) return false;
    const Key pivot = v.begin()->first;
    const Rational lead = v.begin()->second;
    for (auto& [k, c] : v) c /= lead;
    // Keep rows fully reduced so that reduce() is a single pass.
    for (auto& [p, row] : rows_) {
      auto it = row.find(pivot);
      if (it == row.end()) continue;
      const Rational factor = it->second;
      for (const auto& [k, c] : v) {
        Rational& slot = row[k];
        slot -= factor * c;
        if (sgn(slot) == 0) row.erase(k);
      }
    }
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::map<Key, Vector> rows_;
};

/// Rank of a list of dense rational rows.
inline int exact_rank(const std::vector<std::vector<Rational>>& rows) {
  SparseEchelon<std::size_t> echelon;
  for (const auto& r : rows) {
    typename SparseEchelon<std::size_t>::Vector v;
    for (std::size_t k = 0; k < r.size(); ++k)
      if (sgn(r[k]) != 0) v[k] = r[k];
    echelon.insert(std::move(v));
  }
  return echelon.rank();
}

}  // namespace voa
