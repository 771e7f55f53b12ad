#pragma once

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "wnrep/dmod.hpp"
#include "wnrep/glmod.hpp"
#include "wnrep/vector_field.hpp"

namespace wnrep {

/// Basis pair (D-module label, gl-module label).
using TLabel = std::pair<MultiIndex, MultiIndex>;
using TVector = SparseVec<TLabel>;

/// T(P,V) = P (x) V with the W_n action
///   x^a d_j (f (x) v) = x^a d_j f (x) v + sum_i a_i x^(a-e_i) f (x) E_ij v.
class TensorModule {
 public:
  TensorModule(DModule P, GlModulePtr V);

  int n() const noexcept { return P_.n(); }
  const DModule& P() const noexcept { return P_; }
  const GlModulePtr& V() const noexcept { return V_; }
  Weight weight(const TLabel& l) const;
  /// Weight in the window; for infinite-dimensional V the V-factor weight must be in it too.
  bool in_window(const TLabel& l, const Window& w) const;
  std::string descriptor() const;

 private:
  DModule P_;
  GlModulePtr V_;
};

TVector act_wn(const TensorModule& T, const VectorField& X, const TVector& v);
TVector act_wn(const TensorModule& T, const WnRoot& r, const TVector& v);
/// Multiplication by a polynomial on the D-module factor.
TVector act_On(const TensorModule& T, const Polynomial& f, const TVector& v);
TVector act_On(const TensorModule& T, const MultiIndex& alpha, const TVector& v);

SupportSet tmod_support(const TensorModule& T);
/// Basis pairs of weight mu inside the window, lexicographic.
std::vector<TLabel> basis_at(const TensorModule& T, const Weight& mu, const Window& window);
long tmod_mult(const TensorModule& T, const Weight& mu, const Window& window);
/// All basis pairs inside the window, lexicographic.
std::vector<TLabel> basis_in(const TensorModule& T, const Window& window);
/// Distinct weights of basis_in, sorted.
std::vector<Weight> weights_in(const TensorModule& T, const Window& window);

/// d(f (x) v) = sum_i d_i f (x) e_i ^ v from T(P, wedge(n,k)) to T(P, wedge(n,k+1)).
TVector derham_d(const DModule& P, int k, const TVector& v);
/// Max coefficient of d(d(v)) over random samples and all degrees; exactly 0 when d^2 = 0.
Scalar derham_complex_residual(const DModule& P, const Window& window, int samples,
                               std::mt19937_64& rng);

/// Random combination of one to three basis vectors of a single weight in the interior window.
TVector random_weight_vector(const TensorModule& T, const Window& window, std::mt19937_64& rng);
TVector random_vector(const std::vector<TLabel>& basis, std::mt19937_64& rng, int max_terms = 3);

/// Window heuristic for the submodule generated by weight vectors: closure under the root
/// vectors of degree <= gen_degree with components outside the window dropped.
struct ClosureResult {
  std::map<Weight, long> interior_dims;  // every support weight of the interior window
  std::map<Weight, long> module_dims;    // multiplicity of T at the same weights
  std::size_t span_dim = 0;
};
ClosureResult submodule_closure(const TensorModule& T, const std::vector<TVector>& seeds,
                                const Window& window, int gen_degree);

enum class CaseKind { TensorSimple, DerhamImage, TrivialSub, NotFiniteMult };
std::string case_name(CaseKind k);

struct Classification {
  CaseKind kind = CaseKind::TensorSimple;
  std::optional<int> wedge_degree;
  bool sum_partials_saturates = false;
  std::vector<std::string> notes;
};
Classification classify_case(const TensorModule& T);

}  // namespace wnrep
