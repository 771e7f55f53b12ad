#pragma once

#include <map>
#include <vector>

#include "wnrep/sparse.hpp"

namespace wnrep {

/// Incremental row echelon form over Q. Each stored row has leading coefficient 1 at its
/// smallest key, and no two rows share a leading key.
template <typename Key>
class Echelon {
 public:
  using Vec = SparseVec<Key>;

  /// Reduces v against the stored rows.
  Vec reduce(Vec v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      const Key key = it->first;
      v.add_scaled(row->second, -it->second);
      it = v.terms().lower_bound(key);
    }
    return v;
  }

  /// Adds v if it is independent of the stored rows; returns the reduced, normalized row or an
  /// empty vector.
  Vec insert(const Vec& v) {
    Vec r = reduce(v);
    if (r.empty()) return r;
    Scalar lead = r.begin()->second;
    r *= lead.inverse();
    rows_.emplace(r.begin()->first, r);
    return r;
  }

  bool contains(const Vec& v) const { return reduce(v).empty(); }
  std::size_t size() const noexcept { return rows_.size(); }
  const std::map<Key, Vec>& rows() const noexcept { return rows_; }

 private:
  std::map<Key, Vec> rows_;
};

template <typename Key>
std::size_t rank(const std::vector<SparseVec<Key>>& vectors) {
  Echelon<Key> e;
  for (const auto& v : vectors) e.insert(v);
  return e.size();
}

}  // namespace wnrep
