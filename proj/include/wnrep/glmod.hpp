#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wnrep/dmod.hpp"
#include "wnrep/lattice.hpp"
#include "wnrep/sparse.hpp"

namespace wnrep {

using GlVec = SparseVec<MultiIndex>;

/// Weight module over gl(n), or over a sum of gl blocks along the diagonal.
class GlModule {
 public:
  virtual ~GlModule() = default;

  virtual int rank() const = 0;
  virtual bool finite_dim() const = 0;
  /// Length of every basis label.
  virtual std::size_t label_length() const = 0;
  virtual Weight weight(const MultiIndex& label) const = 0;
  /// E_ij applied to a basis vector (0-based i, j).
  virtual GlVec act(int i, int j, const MultiIndex& label) const = 0;
  /// Basis labels of weight w, lexicographic.
  virtual std::vector<MultiIndex> labels_with_weight(const Weight& w) const = 0;
  /// Basis labels whose weight lies in the window, lexicographic.
  virtual std::vector<MultiIndex> labels_in(const Window& w) const = 0;
  /// Every basis label; finite-dimensional modules only.
  virtual std::vector<MultiIndex> all_labels() const;
  virtual Shadow shadow() const = 0;
  virtual SupportSet support() const = 0;
  virtual std::string descriptor() const = 0;
  /// Sizes of the diagonal gl blocks the module is defined over.
  virtual std::vector<int> blocks() const { return {rank()}; }

  GlVec act_vec(int i, int j, const GlVec& v) const;
  /// Whether E_ij belongs to the block algebra.
  bool in_algebra(int i, int j) const;
};

using GlModulePtr = std::shared_ptr<const GlModule>;

/// Finite-dimensional module with explicit sparse matrices; labels are {index}.
class FiniteGlModule : public GlModule {
 public:
  FiniteGlModule(int n, std::vector<Weight> weights, std::vector<std::vector<GlVec>> actions,
                 std::string descriptor, std::vector<int> blocks = {});

  int rank() const override { return n_; }
  bool finite_dim() const override { return true; }
  std::size_t label_length() const override { return 1; }
  std::size_t dim() const noexcept { return weights_.size(); }
  Weight weight(const MultiIndex& label) const override;
  GlVec act(int i, int j, const MultiIndex& label) const override;
  std::vector<MultiIndex> labels_with_weight(const Weight& w) const override;
  std::vector<MultiIndex> labels_in(const Window& w) const override;
  std::vector<MultiIndex> all_labels() const override;
  Shadow shadow() const override { return Shadow::all_finite(n_); }
  SupportSet support() const override;
  std::string descriptor() const override { return desc_; }
  std::vector<int> blocks() const override { return blocks_; }

 private:
  std::size_t index(const MultiIndex& label) const;
  int n_;
  std::vector<Weight> weights_;
  std::vector<std::vector<GlVec>> actions_;  // [i*n+j][column]
  std::string desc_;
  std::vector<int> blocks_;
};

/// The eigenspace of sum_i x_i d_i with eigenvalue kappa in a D-module, E_ij = x_i d_j.
/// Labels are the D-module labels.
class RestrictedGlModule : public GlModule {
 public:
  RestrictedGlModule(DModule P, Scalar kappa);

  int rank() const override { return P_.n(); }
  bool finite_dim() const override;
  std::size_t label_length() const override { return static_cast<std::size_t>(P_.n()); }
  Weight weight(const MultiIndex& label) const override;
  GlVec act(int i, int j, const MultiIndex& label) const override;
  std::vector<MultiIndex> labels_with_weight(const Weight& w) const override;
  std::vector<MultiIndex> labels_in(const Window& w) const override;
  std::vector<MultiIndex> all_labels() const override;
  Shadow shadow() const override { return dmod_shadow(P_); }
  SupportSet support() const override;
  std::string descriptor() const override;
  const DModule& parent() const noexcept { return P_; }
  const Scalar& kappa() const noexcept { return kappa_; }

 private:
  DModule P_;
  Scalar kappa_;
};

/// Tensor product with at most one infinite-dimensional factor; labels are concatenated.
class TensorGlModule : public GlModule {
 public:
  TensorGlModule(GlModulePtr a, GlModulePtr b);

  int rank() const override { return a_->rank(); }
  bool finite_dim() const override { return false; }
  std::size_t label_length() const override { return a_->label_length() + b_->label_length(); }
  Weight weight(const MultiIndex& label) const override;
  GlVec act(int i, int j, const MultiIndex& label) const override;
  std::vector<MultiIndex> labels_with_weight(const Weight& w) const override;
  std::vector<MultiIndex> labels_in(const Window& w) const override;
  Shadow shadow() const override;
  SupportSet support() const override;
  std::string descriptor() const override;

 private:
  std::pair<MultiIndex, MultiIndex> split(const MultiIndex& label) const;
  GlModulePtr a_, b_;
};

/// Basis of the k-th exterior power: sorted index subsets, lexicographic.
std::vector<std::vector<int>> wedge_basis(int n, int k);

std::shared_ptr<const FiniteGlModule> wedge(int n, int k);
std::shared_ptr<const FiniteGlModule> sym(int n, int k);
/// One-dimensional module; c must be constant on each block. An empty block list means a
/// single gl(n) block.
std::shared_ptr<const FiniteGlModule> character(const std::vector<Scalar>& c,
                                                std::vector<int> blocks = {});
std::shared_ptr<const FiniteGlModule> dual_gl(const GlModule& V);
GlModulePtr tensor_gl(const GlModulePtr& V, const GlModulePtr& W);
GlModulePtr restrict_kappa(const DModule& P, const Scalar& kappa);

long gl_weight_mult(const GlModule& V, const Weight& mu, const Window& window);

/// Dimension of the joint kernel of E_{i,i+1}; simple finite-dimensional modules give 1.
std::size_t highest_weight_space_dim(const GlModule& V);
bool is_simple_finite(const GlModule& V);
/// k if V has the weights of the k-th exterior power and is simple.
std::optional<int> fundamental_degree(const GlModule& V);

}  // namespace wnrep
