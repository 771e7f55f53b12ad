#include "wnrep/glmod.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "wnrep/errors.hpp"
#include "wnrep/linalg.hpp"

namespace wnrep {

std::vector<MultiIndex> GlModule::all_labels() const {
  throw UnsupportedError("basis enumeration of an infinite-dimensional module: " + descriptor());
}

GlVec GlModule::act_vec(int i, int j, const GlVec& v) const {
  GlVec out;
  for (const auto& [l, c] : v) out.add_scaled(act(i, j, l), c);
  return out;
}

bool GlModule::in_algebra(int i, int j) const {
  int start = 0;
  for (int b : blocks()) {
    bool ii = i >= start && i < start + b, jj = j >= start && j < start + b;
    if (ii || jj) return ii && jj;
    start += b;
  }
  return false;
}

namespace {

void check_index(int n, int i, int j) {
  if (i < 0 || j < 0 || i >= n || j >= n) throw RangeError("E_ij index out of range");
}

std::vector<int> validated_blocks(int n, std::vector<int> blocks) {
  if (blocks.empty()) return {n};
  int total = 0;
  for (int b : blocks) {
    if (b <= 0) throw ValidationError("block sizes must be positive");
    total += b;
  }
  if (total != n) throw DimensionError("block sizes do not sum to the rank");
  return blocks;
}

}  // namespace

FiniteGlModule::FiniteGlModule(int n, std::vector<Weight> weights,
                               std::vector<std::vector<GlVec>> actions, std::string descriptor,
                               std::vector<int> blocks)
    : n_(n),
      weights_(std::move(weights)),
      actions_(std::move(actions)),
      desc_(std::move(descriptor)),
      blocks_(validated_blocks(n, std::move(blocks))) {
  if (actions_.size() != static_cast<std::size_t>(n * n))
    throw InternalError("finite gl-module: wrong number of operators");
  for (const auto& w : weights_)
    if (static_cast<int>(w.size()) != n) throw DimensionError("finite gl-module: weight length");
}

std::size_t FiniteGlModule::index(const MultiIndex& label) const {
  if (label.size() != 1 || label[0] < 0 || static_cast<std::size_t>(label[0]) >= dim())
    throw RangeError("label out of range for " + desc_);
  return static_cast<std::size_t>(label[0]);
}

Weight FiniteGlModule::weight(const MultiIndex& label) const { return weights_[index(label)]; }

GlVec FiniteGlModule::act(int i, int j, const MultiIndex& label) const {
  check_index(n_, i, j);
  if (!in_algebra(i, j))
    throw ValidationError("E_" + std::to_string(i + 1) + std::to_string(j + 1) +
                          " is not in the block algebra of " + desc_);
  return actions_[static_cast<std::size_t>(i * n_ + j)][index(label)];
}

std::vector<MultiIndex> FiniteGlModule::labels_with_weight(const Weight& w) const {
  std::vector<MultiIndex> out;
  for (std::size_t b = 0; b < dim(); ++b)
    if (weights_[b] == w) out.push_back({static_cast<long>(b)});
  return out;
}

std::vector<MultiIndex> FiniteGlModule::labels_in(const Window& w) const {
  std::vector<MultiIndex> out;
  for (std::size_t b = 0; b < dim(); ++b)
    if (w.contains(weights_[b])) out.push_back({static_cast<long>(b)});
  return out;
}

std::vector<MultiIndex> FiniteGlModule::all_labels() const {
  std::vector<MultiIndex> out;
  for (std::size_t b = 0; b < dim(); ++b) out.push_back({static_cast<long>(b)});
  return out;
}

SupportSet FiniteGlModule::support() const {
  SupportSet s(n_);
  for (const auto& w : weights_) s = s.unite(SupportSet::point(w));
  return s;
}

RestrictedGlModule::RestrictedGlModule(DModule P, Scalar kappa)
    : P_(std::move(P)), kappa_(std::move(kappa)) {
  const SupportSet supp = dmod_support(P_);
  const auto& piece = supp.pieces().front();
  if (LevelCone{piece.axis, kappa_}.empty())
    throw EmptyModuleError("eigenspace " + kappa_.str() + " of " + P_.descriptor() + " is zero");
}

bool RestrictedGlModule::finite_dim() const {
  // The level set of the support cone is bounded iff all modes point the same way.
  bool pos = false, neg = false;
  for (const auto& f : P_.factors()) {
    if (f.laurent()) return false;
    (f.kind == FactorKind::Poly ? pos : neg) = true;
  }
  return !(pos && neg);
}

Weight RestrictedGlModule::weight(const MultiIndex& label) const { return dmod_weight(P_, label); }

GlVec RestrictedGlModule::act(int i, int j, const MultiIndex& label) const {
  check_index(P_.n(), i, j);
  GlVec v(label, Scalar(1));
  return act_gen(P_, i, Gen::X, act_gen(P_, j, Gen::D, v));
}

std::vector<MultiIndex> RestrictedGlModule::labels_with_weight(const Weight& w) const {
  if (w.total() != kappa_) return {};
  auto l = label_of_weight(P_, w);
  if (!l) return {};
  return {*l};
}

std::vector<MultiIndex> RestrictedGlModule::labels_in(const Window& w) const {
  std::vector<MultiIndex> out;
  for (auto& l : dmod_labels_in(P_, w))
    if (dmod_weight(P_, l).total() == kappa_) out.push_back(std::move(l));
  return out;
}

std::vector<MultiIndex> RestrictedGlModule::all_labels() const {
  if (!finite_dim()) return GlModule::all_labels();
  // Bounded level set: every coordinate offset is at most |kappa - base total|.
  const SupportSet supp = dmod_support(P_);
  const auto& piece = supp.pieces().front();
  Scalar spread = (kappa_ - piece.axis.base.total()).abs();
  const long r = spread.ceil() + 2;
  Window box;
  for (int i = 0; i < P_.n(); ++i) {
    box.lo.push_back(piece.axis.base[i] - Scalar(r));
    box.hi.push_back(piece.axis.base[i] + Scalar(r));
  }
  return labels_in(box);
}

SupportSet RestrictedGlModule::support() const {
  const SupportSet supp = dmod_support(P_);
  const auto& piece = supp.pieces().front();
  const std::size_t n = static_cast<std::size_t>(P_.n());
  SupportPiece sp{ShiftedCone{Weight(n), std::vector<CoordMode>(n, CoordMode::Point)},
                  LevelCone{piece.axis, kappa_}};
  return SupportSet(P_.n(), {sp});
}

std::string RestrictedGlModule::descriptor() const {
  return "resD(" + P_.descriptor() + ";" + kappa_.str() + ")";
}

TensorGlModule::TensorGlModule(GlModulePtr a, GlModulePtr b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_->rank() != b_->rank()) throw DimensionError("tensor of gl-modules of different rank");
  if (!a_->finite_dim() && !b_->finite_dim())
    throw UnsupportedError("tensor product of two infinite-dimensional gl-modules");
}

std::pair<MultiIndex, MultiIndex> TensorGlModule::split(const MultiIndex& label) const {
  const std::size_t la = a_->label_length();
  if (label.size() != label_length()) throw RangeError("tensor label has wrong length");
  return {MultiIndex(label.begin(), label.begin() + static_cast<long>(la)),
          MultiIndex(label.begin() + static_cast<long>(la), label.end())};
}

Weight TensorGlModule::weight(const MultiIndex& label) const {
  auto [x, y] = split(label);
  return a_->weight(x) + b_->weight(y);
}

namespace {

MultiIndex concat(const MultiIndex& x, const MultiIndex& y) {
  MultiIndex z = x;
  z.insert(z.end(), y.begin(), y.end());
  return z;
}

Window shifted(const Window& w, const Weight& by) {
  Window s = w;
  for (std::size_t i = 0; i < s.lo.size(); ++i) {
    s.lo[i] -= by[i];
    s.hi[i] -= by[i];
  }
  return s;
}

}  // namespace

GlVec TensorGlModule::act(int i, int j, const MultiIndex& label) const {
  auto [x, y] = split(label);
  GlVec out;
  for (const auto& [l, c] : a_->act(i, j, x)) out.add(concat(l, y), c);
  for (const auto& [l, c] : b_->act(i, j, y)) out.add(concat(x, l), c);
  return out;
}

std::vector<MultiIndex> TensorGlModule::labels_with_weight(const Weight& w) const {
  std::vector<MultiIndex> out;
  if (a_->finite_dim()) {
    for (const auto& x : a_->all_labels())
      for (const auto& y : b_->labels_with_weight(w - a_->weight(x))) out.push_back(concat(x, y));
  } else {
    for (const auto& y : b_->all_labels())
      for (const auto& x : a_->labels_with_weight(w - b_->weight(y))) out.push_back(concat(x, y));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MultiIndex> TensorGlModule::labels_in(const Window& w) const {
  std::vector<MultiIndex> out;
  const bool a_fin = a_->finite_dim();
  const auto& fin = a_fin ? a_ : b_;
  const auto& inf = a_fin ? b_ : a_;
  for (const auto& f : fin->all_labels()) {
    Weight fw = fin->weight(f);
    for (const auto& g : inf->labels_in(shifted(w, fw))) {
      out.push_back(a_fin ? concat(f, g) : concat(g, f));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Shadow TensorGlModule::shadow() const {
  return a_->finite_dim() ? b_->shadow() : a_->shadow();
}

SupportSet TensorGlModule::support() const { return support_sum(a_->support(), b_->support()); }

std::string TensorGlModule::descriptor() const {
  return a_->descriptor() + "#" + b_->descriptor();
}

std::vector<std::vector<int>> wedge_basis(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw RangeError("wedge: degree out of range");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

std::vector<std::vector<GlVec>> empty_actions(int n, std::size_t dim) {
  return std::vector<std::vector<GlVec>>(static_cast<std::size_t>(n * n), std::vector<GlVec>(dim));
}

}  // namespace

std::shared_ptr<const FiniteGlModule> wedge(int n, int k) {
  auto basis = wedge_basis(n, k);
  std::map<std::vector<int>, long> index;
  for (std::size_t b = 0; b < basis.size(); ++b) index[basis[b]] = static_cast<long>(b);
  std::vector<Weight> weights;
  auto actions = empty_actions(n, basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const auto& S = basis[b];
    Weight w(static_cast<std::size_t>(n));
    for (int s : S) w[s] += Scalar(1);
    weights.push_back(w);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (!std::count(S.begin(), S.end(), j)) continue;
        if (i == j) {
          actions[i * n + j][b].add({static_cast<long>(b)}, Scalar(1));
          continue;
        }
        if (std::count(S.begin(), S.end(), i)) continue;
        // Replace e_j by e_i in place, then sort: the sign counts entries strictly between.
        std::vector<int> T;
        int between = 0;
        for (int s : S) {
          if (s == j) continue;
          T.push_back(s);
          if ((s > std::min(i, j)) && (s < std::max(i, j))) ++between;
        }
        T.push_back(i);
        std::sort(T.begin(), T.end());
        actions[i * n + j][b].add({index.at(T)}, Scalar(between % 2 ? -1 : 1));
      }
  }
  return std::make_shared<FiniteGlModule>(n, std::move(weights), std::move(actions),
                                          "wedge(" + std::to_string(k) + ")");
}

std::shared_ptr<const FiniteGlModule> sym(int n, int k) {
  if (k < 0) throw RangeError("sym: degree must be nonnegative");
  if (n <= 0) throw DimensionError("sym: rank must be positive");
  std::vector<MultiIndex> basis;
  MultiIndex cur(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, std::size_t pos, long left) -> void {
    if (pos + 1 == cur.size()) {
      cur[pos] = left;
      basis.push_back(cur);
      return;
    }
    for (long a = left; a >= 0; --a) {
      cur[pos] = a;
      self(self, pos + 1, left - a);
    }
  };
  rec(rec, 0, k);
  std::map<MultiIndex, long> index;
  for (std::size_t b = 0; b < basis.size(); ++b) index[basis[b]] = static_cast<long>(b);
  std::vector<Weight> weights;
  auto actions = empty_actions(n, basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    weights.push_back(Weight::from_ints(basis[b]));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long e = basis[b][j];
        if (e == 0) continue;
        MultiIndex m = basis[b];
        --m[j];
        ++m[i];
        actions[i * n + j][b].add({index.at(m)}, Scalar(e));
      }
  }
  return std::make_shared<FiniteGlModule>(n, std::move(weights), std::move(actions),
                                          "sym(" + std::to_string(k) + ")");
}

std::shared_ptr<const FiniteGlModule> character(const std::vector<Scalar>& c,
                                                std::vector<int> blocks) {
  const int n = static_cast<int>(c.size());
  if (n == 0) throw DimensionError("character of rank 0");
  blocks = validated_blocks(n, std::move(blocks));
  int start = 0;
  for (int b : blocks) {
    for (int i = start; i < start + b; ++i)
      if (c[i] != c[start])
        throw ValidationError("character must be constant on each gl block");
    start += b;
  }
  auto actions = empty_actions(n, 1);
  for (int i = 0; i < n; ++i) actions[i * n + i][0].add({0}, c[i]);
  std::string desc = "char(";
  bool constant = std::all_of(c.begin(), c.end(), [&](const Scalar& s) { return s == c[0]; });
  for (int i = 0; i < (constant ? 1 : n); ++i) desc += (i ? "," : "") + c[i].str();
  desc += ")";
  return std::make_shared<FiniteGlModule>(n, std::vector<Weight>{Weight(c)}, std::move(actions),
                                          desc, blocks);
}

std::shared_ptr<const FiniteGlModule> dual_gl(const GlModule& V) {
  if (!V.finite_dim()) throw UnsupportedError("dual of an infinite-dimensional module");
  const int n = V.rank();
  auto labels = V.all_labels();
  std::map<MultiIndex, long> index;
  for (std::size_t b = 0; b < labels.size(); ++b) index[labels[b]] = static_cast<long>(b);
  std::vector<Weight> weights;
  for (const auto& l : labels) weights.push_back(-V.weight(l));
  auto actions = empty_actions(n, labels.size());
  // E_ij e*_b = - sum_a [E_ij]_{b,a} e*_a
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!V.in_algebra(i, j)) continue;
      for (std::size_t a = 0; a < labels.size(); ++a)
        for (const auto& [l, c] : V.act(i, j, labels[a]))
          actions[i * n + j][static_cast<std::size_t>(index.at(l))].add(
              {static_cast<long>(a)}, -c);
    }
  return std::make_shared<FiniteGlModule>(n, std::move(weights), std::move(actions),
                                          "dual(" + V.descriptor() + ")", V.blocks());
}

GlModulePtr tensor_gl(const GlModulePtr& V, const GlModulePtr& W) {
  if (V->rank() != W->rank()) throw DimensionError("tensor of gl-modules of different rank");
  if (!(V->finite_dim() && W->finite_dim())) return std::make_shared<TensorGlModule>(V, W);
  if (V->blocks() != W->blocks()) throw ValidationError("tensor factors have different blocks");
  const int n = V->rank();
  auto la = V->all_labels(), lb = W->all_labels();
  std::map<MultiIndex, long> ia, ib;
  for (std::size_t a = 0; a < la.size(); ++a) ia[la[a]] = static_cast<long>(a);
  for (std::size_t b = 0; b < lb.size(); ++b) ib[lb[b]] = static_cast<long>(b);
  const long db = static_cast<long>(lb.size());
  std::vector<Weight> weights;
  for (const auto& x : la)
    for (const auto& y : lb) weights.push_back(V->weight(x) + W->weight(y));
  auto actions = empty_actions(n, la.size() * lb.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!V->in_algebra(i, j)) continue;
      for (std::size_t a = 0; a < la.size(); ++a)
        for (std::size_t b = 0; b < lb.size(); ++b) {
          auto& col = actions[i * n + j][a * lb.size() + b];
          for (const auto& [l, c] : V->act(i, j, la[a])) col.add({ia.at(l) * db + static_cast<long>(b)}, c);
          for (const auto& [l, c] : W->act(i, j, lb[b])) col.add({static_cast<long>(a) * db + ib.at(l)}, c);
        }
    }
  return std::make_shared<FiniteGlModule>(n, std::move(weights), std::move(actions),
                                          V->descriptor() + "#" + W->descriptor(), V->blocks());
}

GlModulePtr restrict_kappa(const DModule& P, const Scalar& kappa) {
  return std::make_shared<RestrictedGlModule>(P, kappa);
}

long gl_weight_mult(const GlModule& V, const Weight& mu, const Window& window) {
  if (!window.contains(mu)) return 0;
  return static_cast<long>(V.labels_with_weight(mu).size());
}

std::size_t highest_weight_space_dim(const GlModule& V) {
  auto labels = V.all_labels();
  using Key = std::pair<int, MultiIndex>;
  // Kernel dimension = dim - rank of v -> (E_{12} v, E_{23} v, ...).
  std::vector<SparseVec<Key>> cols;
  for (const auto& l : labels) {
    SparseVec<Key> col;
    for (int i = 0; i + 1 < V.rank(); ++i) {
      if (!V.in_algebra(i, i + 1)) continue;
      for (const auto& [m, c] : V.act(i, i + 1, l)) col.add({i, m}, c);
    }
    cols.push_back(std::move(col));
  }
  // Rank of the column set equals the rank of the operator.
  return labels.size() - rank(cols);
}

bool is_simple_finite(const GlModule& V) {
  if (!V.finite_dim()) throw UnsupportedError("simplicity test needs a finite-dimensional module");
  if (V.blocks().size() != 1) throw UnsupportedError("simplicity test needs a single gl block");
  return highest_weight_space_dim(V) == 1;
}

std::optional<int> fundamental_degree(const GlModule& V) {
  if (!V.finite_dim()) return std::nullopt;
  auto labels = V.all_labels();
  if (labels.empty()) return std::nullopt;
  Scalar total = V.weight(labels.front()).total();
  if (!total.is_integer()) return std::nullopt;
  long k = total.to_long();
  if (k < 0 || k > V.rank()) return std::nullopt;
  std::vector<Weight> got, want;
  for (const auto& l : labels) got.push_back(V.weight(l));
  auto W = wedge(V.rank(), static_cast<int>(k));
  for (const auto& l : W->all_labels()) want.push_back(W->weight(l));
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got != want) return std::nullopt;
  if (!is_simple_finite(V)) return std::nullopt;
  return static_cast<int>(k);
}

}  // namespace wnrep
