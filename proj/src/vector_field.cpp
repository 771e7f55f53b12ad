#include "wnrep/vector_field.hpp"

#include "wnrep/errors.hpp"

namespace wnrep {

VectorField VectorField::root(int n, const WnRoot& r, const Scalar& c) {
  if (static_cast<int>(r.alpha.size()) != n || r.j < 0 || r.j >= n)
    throw DimensionError("root vector does not match rank");
  VectorField X{n, {}};
  X.terms.add(r, c);
  return X;
}

std::string VectorField::str() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [r, c] : terms) {
    if (!s.empty()) s += " + ";
    s += c.str() + "*" + r.str();
  }
  return s;
}

VectorField bracket(const VectorField& X, const VectorField& Y) {
  if (X.n != Y.n) throw DimensionError("bracket of vector fields of different rank");
  VectorField Z{X.n, {}};
  for (const auto& [r, a] : X.terms)
    for (const auto& [s, b] : Y.terms) {
      // [x^al d_i, x^be d_j] = be_i x^(al+be-e_i) d_j - al_j x^(al+be-e_j) d_i
      MultiIndex sum = r.alpha;
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += s.alpha[k];
      if (s.alpha[r.j] > 0) {
        MultiIndex m = sum;
        --m[r.j];
        Z.terms.add({m, s.j}, a * b * Scalar(s.alpha[r.j]));
      }
      if (r.alpha[s.j] > 0) {
        MultiIndex m = sum;
        --m[s.j];
        Z.terms.add({m, r.j}, -(a * b * Scalar(r.alpha[s.j])));
      }
    }
  return Z;
}

Polynomial apply(const VectorField& X, const Polynomial& f) {
  Polynomial out;
  for (const auto& [r, a] : X.terms)
    for (const auto& [beta, b] : f) {
      if (beta[r.j] == 0) continue;
      MultiIndex m = beta;
      for (std::size_t k = 0; k < m.size(); ++k) m[k] += r.alpha[k];
      --m[r.j];
      out.add(m, a * b * Scalar(beta[r.j]));
    }
  return out;
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
  Polynomial out;
  for (const auto& [a, c] : f)
    for (const auto& [b, d] : g) {
      MultiIndex m = a;
      for (std::size_t k = 0; k < m.size(); ++k) m[k] += b[k];
      out.add(m, c * d);
    }
  return out;
}

}  // namespace wnrep
