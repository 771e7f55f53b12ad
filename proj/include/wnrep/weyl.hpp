#pragma once

#include <string>
#include <utility>

#include "wnrep/lattice.hpp"
#include "wnrep/sparse.hpp"

namespace wnrep {

/// Normal-ordered monomial x^a d^b. Negative exponents denote inverses in a localization.
struct WeylMonomial {
  MultiIndex a;
  MultiIndex b;
  friend auto operator<=>(const WeylMonomial&, const WeylMonomial&) = default;
};

/// Element of the (possibly localized) Weyl algebra in normal order, all x left of all d.
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(int n) : n_(n) {}
  WeylElement(int n, SparseVec<WeylMonomial> terms) : n_(n), terms_(std::move(terms)) {}

  static WeylElement one(int n);
  static WeylElement scalar(int n, const Scalar& s);
  static WeylElement x(int n, int i, long power = 1);
  static WeylElement d(int n, int i, long power = 1);
  static WeylElement monomial(int n, MultiIndex a, MultiIndex b, const Scalar& coeff = Scalar(1));

  int n() const noexcept { return n_; }
  const SparseVec<WeylMonomial>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Weight of a monomial is a - b; throws if the element is not homogeneous.
  Weight weight() const;
  std::string str() const;

  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(const Scalar& s, WeylElement a) {
    a.terms_ *= s;
    return a;
  }
  /// Product with normal ordering d^b x^c = sum_k C(b,k) c^(k) x^(c-k) d^(b-k).
  /// Throws UnsupportedError when the rewriting does not terminate (both exponents negative).
  friend WeylElement operator*(const WeylElement& u, const WeylElement& v);
  friend bool operator==(const WeylElement& u, const WeylElement& v) {
    return u.n_ == v.n_ && u.terms_ == v.terms_;
  }

 private:
  int n_ = 0;
  SparseVec<WeylMonomial> terms_;
};

/// ad(a)(u) = a u - u a
WeylElement ad(const WeylElement& a, const WeylElement& u);

/// The Fourier automorphism x_i -> d_i, d_i -> -x_i on polynomial elements.
WeylElement sigma_F(const WeylElement& u);

}  // namespace wnrep
