#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wnrep/lattice.hpp"
#include "wnrep/sparse.hpp"
#include "wnrep/weyl.hpp"

namespace wnrep {

/// One-variable simple weight D_1-modules and their localizations.
///   Poly:  C[x], basis e(m) = x^m, m >= 0.
///   FPoly: Fourier twist of C[x], basis e(m), m >= 0, d e(m) = e(m+1), x e(m) = -m e(m-1).
///   XL:    x^lambda C[x^+-1], x e(m) = e(m+1), d e(m) = (lambda+m) e(m-1).
///   DL:    d-normalized Laurent family, d e(m) = e(m-1), x e(m) = (lambda+m+1) e(m+1).
/// XL and DL have weight lambda+m and are simple iff lambda is not an integer.
enum class FactorKind { Poly, FPoly, XL, DL };

struct DFactor {
  FactorKind kind = FactorKind::Poly;
  Scalar lambda;

  static DFactor poly() { return {FactorKind::Poly, Scalar(0)}; }
  static DFactor fpoly() { return {FactorKind::FPoly, Scalar(0)}; }
  static DFactor xl(const Scalar& l) { return {FactorKind::XL, l}; }
  static DFactor dl(const Scalar& l) { return {FactorKind::DL, l}; }

  bool laurent() const { return kind == FactorKind::XL || kind == FactorKind::DL; }
  bool non_simple() const { return laurent() && lambda.is_integer(); }
  /// Labels are bounded below by 0 for Poly and FPoly.
  bool valid_label(long m) const { return laurent() || m >= 0; }
  std::string str() const;
  friend bool operator==(const DFactor&, const DFactor&) = default;
};

using DVector = SparseVec<MultiIndex>;

class DModule {
 public:
  DModule() = default;
  explicit DModule(std::vector<DFactor> factors) : factors_(std::move(factors)) {}

  int n() const noexcept { return static_cast<int>(factors_.size()); }
  const DFactor& factor(int i) const { return factors_.at(static_cast<std::size_t>(i)); }
  const std::vector<DFactor>& factors() const noexcept { return factors_; }
  bool simple() const;
  std::set<int> i_plus() const;
  std::set<int> i_zero() const;
  std::set<int> i_minus() const;
  bool valid_label(const MultiIndex& mu) const;
  /// Canonical descriptor, e.g. "O*OF*XL(1/2)".
  std::string descriptor() const;
  friend bool operator==(const DModule&, const DModule&) = default;

 private:
  std::vector<DFactor> factors_;
};

enum class Gen { X, D, XInv, DInv };

/// Action of one generator on e(m) of a single factor: coefficient and new label.
/// A zero coefficient means the result is the zero vector.
std::pair<Scalar, long> factor_act(const DFactor& f, Gen g, long m);
Scalar factor_weight(const DFactor& f, long m);
std::optional<long> factor_label(const DFactor& f, const Scalar& w);

Weight dmod_weight(const DModule& P, const MultiIndex& mu);
std::optional<MultiIndex> label_of_weight(const DModule& P, const Weight& w);
SupportSet dmod_support(const DModule& P);
Shadow dmod_shadow(const DModule& P);

DVector act_gen(const DModule& P, int i, Gen g, const DVector& v);
DVector act_weyl(const DModule& P, const WeylElement& u, const DVector& v);

/// Module obtained by twisting with x -> d, d -> -x, in its standard basis.
DModule fourier(const DModule& P);
/// The isomorphism from the twisted module to fourier(P): basis vector e(mu) of P, viewed in
/// the twist, maps to sign * e'(label).
std::pair<Scalar, MultiIndex> fourier_label(const DModule& P, const MultiIndex& mu);

/// Whether sum_i d_i P = P.
bool sum_partials_saturates(const DModule& P);

/// Labels whose weight lies in the window, lexicographic.
std::vector<MultiIndex> dmod_labels_in(const DModule& P, const Window& w);

}  // namespace wnrep
