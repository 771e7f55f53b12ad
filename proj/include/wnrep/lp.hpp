#pragma once

#include <vector>

#include "wnrep/scalar.hpp"

namespace wnrep {

/// a . x <= b
struct LinIneq {
  std::vector<Scalar> a;
  Scalar b;
};

struct LpResult {
  bool feasible = false;
  bool unbounded = false;
  Scalar value;  // supremum when feasible and bounded
};

/// Supremum of c . x over the rational polyhedron {x : a . x <= b}, by Fourier-Motzkin
/// elimination. Exact; intended for a handful of variables.
LpResult lp_sup(std::size_t nvars, const std::vector<LinIneq>& rows, const std::vector<Scalar>& c);

}  // namespace wnrep
