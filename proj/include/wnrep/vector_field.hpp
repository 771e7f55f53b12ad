#pragma once

#include <string>

#include "wnrep/lattice.hpp"
#include "wnrep/sparse.hpp"

namespace wnrep {

/// Polynomial in x_1..x_n as a combination of exponent vectors.
using Polynomial = SparseVec<MultiIndex>;

/// Element of W_n: a combination of root vectors x^alpha d_j.
struct VectorField {
  int n = 0;
  SparseVec<WnRoot> terms;

  static VectorField root(int n, const WnRoot& r, const Scalar& c = Scalar(1));
  std::string str() const;
  friend bool operator==(const VectorField&, const VectorField&) = default;
};

VectorField bracket(const VectorField& X, const VectorField& Y);
/// X(f) for a polynomial f.
Polynomial apply(const VectorField& X, const Polynomial& f);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);

}  // namespace wnrep
