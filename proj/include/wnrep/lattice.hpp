#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wnrep/scalar.hpp"

namespace wnrep {

/// Integer multi-index; also used as the basis label of D-modules and gl-modules.
using MultiIndex = std::vector<long>;

/// Eigenvalues of t_1 d_1, ..., t_n d_n.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t n) : coords_(n) {}
  explicit Weight(std::vector<Scalar> coords) : coords_(std::move(coords)) {}
  static Weight from_ints(const MultiIndex& v);
  /// epsilon_i (0-based i) in dimension n.
  static Weight unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Scalar>& coords() const noexcept { return coords_; }

  Scalar total() const;
  Weight operator-() const;
  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend bool operator==(const Weight& a, const Weight& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) { return a.coords_ < b.coords_; }

  /// "(1/2,-1)"
  std::string str() const;

 private:
  std::vector<Scalar> coords_;
};

/// Coordinate-wise sum; throws DimensionError on length mismatch.
Weight weight_add(const Weight& a, const Weight& b);

/// Root vector x^alpha d_j of W_n (j is 0-based); its weight is alpha - epsilon_j.
struct WnRoot {
  MultiIndex alpha;
  int j = 0;

  Weight weight() const;
  long degree() const;
  std::string str() const;
  friend auto operator<=>(const WnRoot&, const WnRoot&) = default;
};

/// All x^alpha d_j with |alpha| - 1 <= max_degree, ordered by degree, then alpha
/// lexicographically, then j.
std::vector<WnRoot> wn_roots_up_to(int n, int max_degree);

/// The gl(n) root epsilon_i - epsilon_j, i != j, 0-based.
struct GlRoot {
  int i = 0;
  int j = 0;
  GlRoot negated() const { return {j, i}; }
  std::string str() const;
  friend auto operator<=>(const GlRoot&, const GlRoot&) = default;
};

std::vector<GlRoot> gl_roots(int n);

/// Four-way partition of the gl(n) roots by locally finite / injective behaviour.
struct Shadow {
  int n = 0;
  std::set<GlRoot> finite;   // F
  std::set<GlRoot> infinite; // I
  std::set<GlRoot> plus;
  std::set<GlRoot> minus;

  /// Shadow of a finite-dimensional module: every root in F.
  static Shadow all_finite(int n);
  bool is_partition() const;
  friend bool operator==(const Shadow&, const Shadow&) = default;
};

/// Shadow of a simple weight D_n-module from its I-sets (0-based indices).
Shadow shadow_from_isets(int n, const std::set<int>& i_plus, const std::set<int>& i_zero,
                         const std::set<int>& i_minus);

/// (I_P u Minus_P) subset of (F_V u Minus_V).
bool finmult_criterion(const Shadow& shadow_p, const Shadow& shadow_v);

enum class CoordMode { Point, NonNeg, NonPos, Full };

/// base + product of per-coordinate integer sets selected by mode.
struct ShiftedCone {
  Weight base;
  std::vector<CoordMode> modes;

  bool contains(const Weight& w) const;
  ShiftedCone negated() const;
  std::string str() const;
  friend bool operator==(const ShiftedCone&, const ShiftedCone&) = default;
};

/// Mode join for Minkowski sums of single coordinates.
CoordMode join_modes(CoordMode a, CoordMode b);
ShiftedCone cone_sum(const ShiftedCone& a, const ShiftedCone& b);

/// ShiftedCone intersected with the hyperplane sum(coords) = level. This is the shape of
/// the support of a Euler-operator eigenspace of a simple weight D-module.
struct LevelCone {
  ShiftedCone cone;
  Scalar level;

  bool contains(const Weight& w) const;
  bool empty() const;
  friend bool operator==(const LevelCone&, const LevelCone&) = default;
};

/// axis + (optional) leveled, as a Minkowski sum.
struct SupportPiece {
  ShiftedCone axis;
  std::optional<LevelCone> leveled;

  bool contains(const Weight& w) const;
  std::string str() const;
  friend bool operator==(const SupportPiece&, const SupportPiece&) = default;
};

/// Finite union of pieces. Membership is exact.
class SupportSet {
 public:
  SupportSet() = default;
  explicit SupportSet(int n) : n_(n) {}
  SupportSet(int n, std::vector<SupportPiece> pieces);
  static SupportSet point(const Weight& w);
  static SupportSet cone(const ShiftedCone& c);

  int dim() const noexcept { return n_; }
  const std::vector<SupportPiece>& pieces() const noexcept { return pieces_; }
  bool empty_union() const noexcept { return pieces_.empty(); }
  void add(SupportPiece piece);
  SupportSet unite(const SupportSet& other) const;
  SupportSet negated() const;
  bool contains(const Weight& w) const;
  /// Distinct residues mod Z^n of the pieces' bases, sorted.
  std::vector<Weight> cosets() const;
  std::string str() const;

 private:
  int n_ = 0;
  std::vector<SupportPiece> pieces_;
};

/// Exact Minkowski sum. At most one leveled summand per piece pair is supported.
SupportSet support_sum(const SupportSet& a, const SupportSet& b);
bool support_contains(const SupportSet& s, const Weight& w);

/// Axis-aligned box of weights plus an interior margin.
struct Window {
  std::vector<Scalar> lo;
  std::vector<Scalar> hi;
  long margin = 0;

  static Window box(int n, long radius, long margin = 0);
  int dim() const { return static_cast<int>(lo.size()); }
  bool contains(const Weight& w) const;
  bool interior_contains(const Weight& w) const;
  Window interior() const;
  /// Integer offsets k with lo <= r + k <= hi for coordinate i.
  std::pair<long, long> offsets(std::size_t i, const Scalar& r) const;
  /// All weights of the coset r + Z^n inside the box, lexicographic order.
  std::vector<Weight> coset_points(const Weight& r) const;
};

}  // namespace wnrep
