#pragma once

#include <map>
#include <utility>

#include "wnrep/scalar.hpp"

namespace wnrep {

/// Finite linear combination of basis labels. Zero coefficients are never stored and
/// iteration order is the (deterministic) key order.
template <typename Key>
class SparseVec {
 public:
  using Map = std::map<Key, Scalar>;
  using const_iterator = typename Map::const_iterator;

  SparseVec() = default;
  SparseVec(const Key& key, const Scalar& coeff) { add(key, coeff); }

  void add(const Key& key, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_scaled(const SparseVec& other, const Scalar& factor) {
    if (factor.is_zero()) return;
    for (const auto& [k, c] : other.terms_) add(k, c * factor);
  }

  Scalar coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Map& terms() const noexcept { return terms_; }

  Scalar max_abs() const {
    Scalar m(0);
    for (const auto& [k, c] : terms_) {
      Scalar a = c.abs();
      if (a > m) m = a;
    }
    return m;
  }

  SparseVec& operator+=(const SparseVec& o) { add_scaled(o, Scalar(1)); return *this; }
  SparseVec& operator-=(const SparseVec& o) { add_scaled(o, Scalar(-1)); return *this; }
  SparseVec& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }
  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
  friend SparseVec operator*(const Scalar& s, SparseVec a) { return a *= s; }
  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

}  // namespace wnrep
