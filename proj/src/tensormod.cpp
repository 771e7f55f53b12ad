#include "wnrep/tensormod.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "wnrep/errors.hpp"
#include "wnrep/linalg.hpp"

namespace wnrep {

TensorModule::TensorModule(DModule P, GlModulePtr V) : P_(std::move(P)), V_(std::move(V)) {
  if (!V_) throw ValidationError("tensor module needs a gl-module");
  if (V_->rank() != P_.n())
    throw DimensionError("D-module has rank " + std::to_string(P_.n()) + " but gl-module has rank " +
                         std::to_string(V_->rank()));
  if (V_->blocks().size() != 1) throw ValidationError("V must be a gl(n)-module");
}

Weight TensorModule::weight(const TLabel& l) const {
  return dmod_weight(P_, l.first) + V_->weight(l.second);
}

bool TensorModule::in_window(const TLabel& l, const Window& w) const {
  if (!w.contains(weight(l))) return false;
  return V_->finite_dim() || w.contains(V_->weight(l.second));
}

std::string TensorModule::descriptor() const {
  return "T(" + P_.descriptor() + "," + V_->descriptor() + ")";
}

namespace {

DVector x_power(const DModule& P, const MultiIndex& alpha, DVector v) {
  for (int i = 0; i < P.n(); ++i)
    for (long k = 0; k < alpha[i]; ++k) v = act_gen(P, i, Gen::X, v);
  return v;
}

}  // namespace

TVector act_wn(const TensorModule& T, const WnRoot& r, const TVector& v) {
  const DModule& P = T.P();
  if (static_cast<int>(r.alpha.size()) != T.n()) throw DimensionError("root rank mismatch");
  TVector out;
  for (const auto& [l, c] : v) {
    DVector f(l.first, Scalar(1));
    for (const auto& [mu, a] : x_power(P, r.alpha, act_gen(P, r.j, Gen::D, f)))
      out.add({mu, l.second}, a * c);
    for (int i = 0; i < T.n(); ++i) {
      if (r.alpha[i] == 0) continue;
      MultiIndex beta = r.alpha;
      --beta[i];
      DVector g = x_power(P, beta, f);
      if (g.empty()) continue;
      GlVec ev = T.V()->act(i, r.j, l.second);
      for (const auto& [mu, a] : g)
        for (const auto& [b, e] : ev) out.add({mu, b}, a * e * c * Scalar(r.alpha[i]));
    }
  }
  return out;
}

TVector act_wn(const TensorModule& T, const VectorField& X, const TVector& v) {
  TVector out;
  for (const auto& [r, c] : X.terms) out.add_scaled(act_wn(T, r, v), c);
  return out;
}

TVector act_On(const TensorModule& T, const MultiIndex& alpha, const TVector& v) {
  if (static_cast<int>(alpha.size()) != T.n()) throw DimensionError("exponent rank mismatch");
  TVector out;
  for (const auto& [l, c] : v)
    for (const auto& [mu, a] : x_power(T.P(), alpha, DVector(l.first, Scalar(1))))
      out.add({mu, l.second}, a * c);
  return out;
}

TVector act_On(const TensorModule& T, const Polynomial& f, const TVector& v) {
  TVector out;
  for (const auto& [alpha, c] : f) out.add_scaled(act_On(T, alpha, v), c);
  return out;
}

SupportSet tmod_support(const TensorModule& T) {
  return support_sum(dmod_support(T.P()), T.V()->support());
}

namespace {

std::vector<MultiIndex> v_candidates(const TensorModule& T, const Window& window) {
  return T.V()->finite_dim() ? T.V()->all_labels() : T.V()->labels_in(window);
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

std::vector<TLabel> basis_at(const TensorModule& T, const Weight& mu, const Window& window) {
  if (!window.contains(mu)) return {};
  std::vector<TLabel> out;
  for (const auto& b : v_candidates(T, window)) {
    auto a = label_of_weight(T.P(), mu - T.V()->weight(b));
    if (a) out.emplace_back(*a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

long tmod_mult(const TensorModule& T, const Weight& mu, const Window& window) {
  return static_cast<long>(basis_at(T, mu, window).size());
}

std::vector<TLabel> basis_in(const TensorModule& T, const Window& window) {
  std::vector<TLabel> out;
  for (const auto& b : v_candidates(T, window))
    for (auto& a : dmod_labels_in(T.P(), shifted(window, T.V()->weight(b))))
      out.emplace_back(std::move(a), b);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> weights_in(const TensorModule& T, const Window& window) {
  std::set<Weight> ws;
  for (const auto& l : basis_in(T, window)) ws.insert(T.weight(l));
  return {ws.begin(), ws.end()};
}

TVector derham_d(const DModule& P, int k, const TVector& v) {
  const int n = P.n();
  if (k < 0 || k >= n) throw RangeError("de Rham differential needs 0 <= k < n");
  auto from = wedge_basis(n, k);
  auto to = wedge_basis(n, k + 1);
  std::map<std::vector<int>, long> index;
  for (std::size_t b = 0; b < to.size(); ++b) index[to[b]] = static_cast<long>(b);
  TVector out;
  for (const auto& [l, c] : v) {
    if (l.second.size() != 1 || l.second[0] < 0 || static_cast<std::size_t>(l.second[0]) >= from.size())
      throw RangeError("label is not a basis vector of the exterior power");
    const auto& S = from[static_cast<std::size_t>(l.second[0])];
    for (int i = 0; i < n; ++i) {
      if (std::count(S.begin(), S.end(), i)) continue;
      long before = std::count_if(S.begin(), S.end(), [&](int s) { return s < i; });
      std::vector<int> U = S;
      U.push_back(i);
      std::sort(U.begin(), U.end());
      Scalar sign(before % 2 ? -1 : 1);
      for (const auto& [mu, a] : act_gen(P, i, Gen::D, DVector(l.first, Scalar(1))))
        out.add({mu, {index.at(U)}}, a * c * sign);
    }
  }
  return out;
}

TVector random_vector(const std::vector<TLabel>& basis, std::mt19937_64& rng, int max_terms) {
  TVector v;
  if (basis.empty()) return v;
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> count(1, max_terms);
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    int c = coef(rng);
    v.add(basis[pick(rng)], Scalar(c == 0 ? 1 : c));
  }
  return v;
}

Scalar derham_complex_residual(const DModule& P, const Window& window, int samples,
                               std::mt19937_64& rng) {
  Scalar worst(0);
  for (int k = 0; k + 2 <= P.n(); ++k) {
    TensorModule T(P, wedge(P.n(), k));
    auto basis = basis_in(T, window);
    for (int s = 0; s < samples; ++s) {
      TVector v = random_vector(basis, rng);
      Scalar r = derham_d(P, k + 1, derham_d(P, k, v)).max_abs();
      if (r > worst) worst = r;
    }
  }
  return worst;
}

TVector random_weight_vector(const TensorModule& T, const Window& window, std::mt19937_64& rng) {
  auto ws = weights_in(T, window.interior());
  if (ws.empty()) throw EmptyModuleError("no support weight inside the interior window");
  std::uniform_int_distribution<std::size_t> pick(0, ws.size() - 1);
  const Weight mu = ws[pick(rng)];
  std::vector<TLabel> basis;
  for (auto& l : basis_at(T, mu, window))
    if (T.in_window(l, window)) basis.push_back(std::move(l));
  TVector v;
  std::uniform_int_distribution<int> coef(-5, 5);
  for (const auto& l : basis) v.add(l, Scalar(coef(rng)));
  if (v.empty()) v.add(basis.front(), Scalar(1));
  return v;
}

ClosureResult submodule_closure(const TensorModule& T, const std::vector<TVector>& seeds,
                                const Window& window, int gen_degree) {
  std::vector<VectorField> gens;
  for (const auto& r : wn_roots_up_to(T.n(), gen_degree)) gens.push_back(VectorField::root(T.n(), r));
  auto truncate = [&](const TVector& v) {
    TVector t;
    for (const auto& [l, c] : v)
      if (T.in_window(l, window)) t.add(l, c);
    return t;
  };
  Echelon<TLabel> span;
  std::deque<TVector> queue;
  bool any = false;
  for (const auto& s : seeds) {
    if (s.empty()) continue;
    any = true;
    auto r = span.insert(truncate(s));
    if (!r.empty()) queue.push_back(std::move(r));
  }
  if (!any) throw ValidationError("closure needs a nonzero seed");
  while (!queue.empty()) {
    TVector v = std::move(queue.front());
    queue.pop_front();
    for (const auto& X : gens) {
      auto r = span.insert(truncate(act_wn(T, X, v)));
      if (!r.empty()) queue.push_back(std::move(r));
    }
  }
  ClosureResult res;
  res.span_dim = span.size();
  const Window inner = window.interior();
  std::map<Weight, long> pivots;
  for (const auto& [l, row] : span.rows()) ++pivots[T.weight(l)];
  for (const auto& mu : weights_in(T, inner)) {
    // Rows are weight vectors, so pivots count the span dimension at each weight.
    res.interior_dims[mu] = pivots.count(mu) ? pivots.at(mu) : 0;
    long m = 0;
    for (const auto& l : basis_at(T, mu, window))
      if (T.in_window(l, window)) ++m;
    res.module_dims[mu] = m;
  }
  return res;
}

std::string case_name(CaseKind k) {
  switch (k) {
    case CaseKind::TensorSimple: return "TENSOR_SIMPLE";
    case CaseKind::DerhamImage: return "DERHAM_IMAGE";
    case CaseKind::TrivialSub: return "TRIVIAL_SUB";
    case CaseKind::NotFiniteMult: return "NOT_FINITE_MULT";
  }
  return "?";
}

Classification classify_case(const TensorModule& T) {
  Classification c;
  const DModule& P = T.P();
  c.sum_partials_saturates = sum_partials_saturates(P);
  if (!finmult_criterion(dmod_shadow(P), T.V()->shadow())) {
    c.kind = CaseKind::NotFiniteMult;
    return c;
  }
  if (T.V()->finite_dim() && !is_simple_finite(*T.V()))
    throw ValidationError("classification needs a simple gl-module: " + T.V()->descriptor());
  auto k = fundamental_degree(*T.V());
  c.wedge_degree = k;
  if (!k) {
    c.kind = CaseKind::TensorSimple;
    return c;
  }
  const int n = T.n();
  if (*k == 0 && P.i_plus().size() == static_cast<std::size_t>(n)) {
    c.kind = CaseKind::TrivialSub;
    c.notes.push_back("the constants span a trivial submodule; d maps T onto its simple quotient");
    return c;
  }
  c.kind = CaseKind::DerhamImage;
  if (*k < n) {
    c.notes.push_back("unique simple submodule is dT(P,wedge(" + std::to_string(*k) + ")) " +
                      "inside T(P,wedge(" + std::to_string(*k + 1) + ")); T has it as quotient");
    return c;
  }
  c.notes.push_back("top exterior power: dT(P,wedge(n-1)) = (sum_i d_i P) (x) wedge(n)");
  if (c.sum_partials_saturates) {
    c.notes.push_back("sum_i d_i P = P: T equals the image of d and is simple");
  } else {
    c.notes.push_back("sum_i d_i P != P: the image of d is a proper submodule");
  }
  c.notes.push_back(
      "the stated criterion 'simple iff sum_i d_i P != P' reads opposite to the two facts above; "
      "both are reported, no verdict is drawn");
  return c;
}

}  // namespace wnrep
