#pragma once

#include <random>
#include <string>
#include <vector>

#include "wnrep/tensormod.hpp"

namespace wnrep {

/// g = W_m x| (k (x) O_m) inside W_n. The W_m variables are x_{p+1..p+m}, renamed 1..m here;
/// k is a sum of gl blocks inside gl(p) + gl(n-m-p) acting on the remaining coordinates.
struct LeviAlg {
  int n = 0, p = 0, m = 0;
  std::vector<int> k_blocks;

  LeviAlg(int n, int p, int m, std::vector<int> k_blocks = {});
  int k_rank() const { return n - m; }
  /// Ambient 0-based coordinate of the a-th k coordinate.
  int k_coord(int a) const { return a < p ? a : a + m; }
  int m_coord(int i) const { return p + i; }
  /// Whether E_ab (k coordinates) lies in k.
  bool in_k(int a, int b) const;
  /// Weight in h* of the ambient W_n from a W_m weight and a k weight.
  Weight embed(const Weight& m_part, const Weight& k_part) const;
};

using FLabel = std::pair<TLabel, MultiIndex>;
using FVector = SparseVec<FLabel>;

/// F(R,S) = R (x)_{O_m} (O_m (x) S) realized on R (x) S.
struct FRSModule {
  TensorModule R;
  GlModulePtr S;

  FRSModule(const LeviAlg& L, TensorModule R, GlModulePtr S);
  Weight weight(const LeviAlg& L, const FLabel& l) const;
};

/// X (r (x) s) = X r (x) s
FVector act_levi(const FRSModule& F, const VectorField& X, const FVector& v);
/// (f (x) E_ab)(r (x) s) = f r (x) E_ab s
FVector act_levi(const LeviAlg& L, const FRSModule& F, const Polynomial& f, int a, int b,
                 const FVector& v);
/// f (r (x) s) = f r (x) s
FVector act_Om(const FRSModule& F, const Polynomial& f, const FVector& v);

struct AxiomResiduals {
  Scalar cond1, cond2, semidirect, k_bracket, w_bracket;
  Scalar max() const;
};
AxiomResiduals check_g_axioms(const LeviAlg& L, const FRSModule& F, int samples,
                              std::mt19937_64& rng);

/// gamma = sum a_i e_i with a_1 > ... > a_p > 0 = a_{p+1..p+m} > a_{p+m+1} > ... > a_n.
struct ParabolicData {
  Weight gamma;
  static ParabolicData for_levi(const LeviAlg& L);
  Scalar pairing(const Weight& alpha) const;
};

/// Whether lambda + alpha lies in s for some W_n root alpha with (gamma, alpha) > 0. Exact.
bool raisable(const SupportSet& s, const Weight& lambda, const ParabolicData& pd);
/// Basis pairs in the window whose weight is not raisable inside the exact support.
std::vector<TLabel> p_top(const TensorModule& M, const ParabolicData& pd, const Window& window);

/// C[x_1..x_p]^F (x) P (x) C[x_{p+m+1}..x_n]
DModule tilde_P(const DModule& P, int p, int n);

struct BackToTensorReport {
  std::string tilde_P;
  std::string S_hat;
  Weight highest_weight;
  long weights_checked = 0;
  bool support_contained = true;
  bool top_matches_support = true;
  bool mult_match = true;
  /// dim F^mu = dim V * dim S; stated for cuspidal P only, so other P leave it unchecked.
  bool degree_formula_checked = false;
  bool degree_formula = true;
  struct Row {
    Weight weight;
    long mult_F = 0, mult_T = 0;
    bool top = false;
  };
  std::vector<Row> rows;
  bool ok() const { return support_contained && top_matches_support && mult_match && degree_formula; }
};

/// Compares the p-top of T(tilde P, S^) with F(T(P,V),S) on the window. Supported: n = m, or
/// n = 2, m = 1 with one-dimensional V and S and generic highest weight.
BackToTensorReport backtotensor_check(const LeviAlg& L, const DModule& P, const GlModulePtr& V,
                                      const GlModulePtr& S, const Window& window);

}  // namespace wnrep
