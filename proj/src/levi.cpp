#include "wnrep/levi.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wnrep/errors.hpp"
#include "wnrep/lp.hpp"

namespace wnrep {

LeviAlg::LeviAlg(int n_, int p_, int m_, std::vector<int> blocks)
    : n(n_), p(p_), m(m_), k_blocks(std::move(blocks)) {
  if (n <= 0 || p < 0 || m < 0 || p + m > n) throw RangeError("Levi data needs p + m <= n");
  if (k_blocks.empty()) {
    if (p > 0) k_blocks.push_back(p);
    if (n - m - p > 0) k_blocks.push_back(n - m - p);
  }
  int total = 0;
  bool hit_p = p == 0;
  for (int b : k_blocks) {
    if (b <= 0) throw ValidationError("k block sizes must be positive");
    total += b;
    if (total == p) hit_p = true;
  }
  if (total != n - m) throw DimensionError("k block sizes must sum to n - m");
  if (!hit_p) throw ValidationError("k blocks must lie inside gl(p) + gl(n-m-p)");
}

bool LeviAlg::in_k(int a, int b) const {
  int start = 0;
  for (int s : k_blocks) {
    bool aa = a >= start && a < start + s, bb = b >= start && b < start + s;
    if (aa || bb) return aa && bb;
    start += s;
  }
  return false;
}

Weight LeviAlg::embed(const Weight& m_part, const Weight& k_part) const {
  Weight w(static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) w[m_coord(i)] = m_part[i];
  for (int a = 0; a < k_rank(); ++a) w[k_coord(a)] = k_part[a];
  return w;
}

FRSModule::FRSModule(const LeviAlg& L, TensorModule R_, GlModulePtr S_)
    : R(std::move(R_)), S(std::move(S_)) {
  if (R.n() != L.m) throw DimensionError("R must be a module over W_m");
  if (!S || S->rank() != L.k_rank()) throw DimensionError("S must be a module over k");
  if (S->blocks() != L.k_blocks) throw ValidationError("S is not defined over the blocks of k");
}

Weight FRSModule::weight(const LeviAlg& L, const FLabel& l) const {
  return L.embed(R.weight(l.first), S->weight(l.second));
}

FVector act_levi(const FRSModule& F, const VectorField& X, const FVector& v) {
  FVector out;
  for (const auto& [l, c] : v)
    for (const auto& [r, a] : act_wn(F.R, X, TVector(l.first, Scalar(1)))) out.add({r, l.second}, a * c);
  return out;
}

FVector act_levi(const LeviAlg& L, const FRSModule& F, const Polynomial& f, int a, int b,
                 const FVector& v) {
  if (!L.in_k(a, b)) throw ValidationError("E_ab is not in k");
  FVector out;
  for (const auto& [l, c] : v) {
    TVector fr = act_On(F.R, f, TVector(l.first, Scalar(1)));
    if (fr.empty()) continue;
    GlVec ys = F.S->act(a, b, l.second);
    for (const auto& [r, x] : fr)
      for (const auto& [s, y] : ys) out.add({r, s}, x * y * c);
  }
  return out;
}

FVector act_Om(const FRSModule& F, const Polynomial& f, const FVector& v) {
  FVector out;
  for (const auto& [l, c] : v)
    for (const auto& [r, a] : act_On(F.R, f, TVector(l.first, Scalar(1)))) out.add({r, l.second}, a * c);
  return out;
}

Scalar AxiomResiduals::max() const {
  Scalar m = cond1;
  for (const auto* s : {&cond2, &semidirect, &k_bracket, &w_bracket})
    if (*s > m) m = *s;
  return m;
}

namespace {

Polynomial random_monomial(int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> e(0, 2);
  MultiIndex a(static_cast<std::size_t>(m));
  for (auto& x : a) x = e(rng);
  return Polynomial(a, Scalar(1));
}

FVector random_fvector(const FRSModule& F, std::mt19937_64& rng) {
  const int m = F.R.n();
  std::uniform_int_distribution<long> pick(-5, 5);
  FVector v;
  auto slabels = F.S->all_labels();
  std::uniform_int_distribution<std::size_t> ps(0, slabels.size() - 1);
  std::vector<MultiIndex> vlabels;
  if (F.R.V()->finite_dim()) {
    vlabels = F.R.V()->all_labels();
  } else {
    vlabels = F.R.V()->labels_in(Window::box(m, 4));
  }
  if (vlabels.empty()) throw EmptyModuleError("no V labels to sample");
  std::uniform_int_distribution<std::size_t> pv(0, vlabels.size() - 1);
  for (int t = 0; t < 2; ++t) {
    MultiIndex mu(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      mu[i] = pick(rng);
      if (!F.R.P().factor(i).valid_label(mu[i])) mu[i] = -mu[i];
    }
    v.add({{mu, vlabels[pv(rng)]}, slabels[ps(rng)]}, Scalar(t + 1));
  }
  return v;
}

}  // namespace

AxiomResiduals check_g_axioms(const LeviAlg& L, const FRSModule& F, int samples,
                              std::mt19937_64& rng) {
  AxiomResiduals res;
  const int m = L.m;
  std::vector<std::pair<int, int>> kpairs;
  for (int a = 0; a < L.k_rank(); ++a)
    for (int b = 0; b < L.k_rank(); ++b)
      if (L.in_k(a, b)) kpairs.emplace_back(a, b);
  auto roots = m > 0 ? wn_roots_up_to(m, 2) : std::vector<WnRoot>{};
  auto bump = [](Scalar& slot, const FVector& r) {
    Scalar v = r.max_abs();
    if (v > slot) slot = v;
  };
  for (int s = 0; s < samples; ++s) {
    FVector v = random_fvector(F, rng);
    Polynomial f = random_monomial(m, rng), h = random_monomial(m, rng);
    std::pair<int, int> Y{0, 0}, Z{0, 0};
    if (!kpairs.empty()) {
      std::uniform_int_distribution<std::size_t> pk(0, kpairs.size() - 1);
      Y = kpairs[pk(rng)];
      Z = kpairs[pk(rng)];
    }
    if (!roots.empty()) {
      std::uniform_int_distribution<std::size_t> pr(0, roots.size() - 1);
      VectorField X = VectorField::root(m, roots[pr(rng)]);
      VectorField W = VectorField::root(m, roots[pr(rng)]);
      bump(res.cond1, act_levi(F, X, act_Om(F, f, v)) - act_Om(F, f, act_levi(F, X, v)) -
                          act_Om(F, wnrep::apply(X, f), v));
      bump(res.w_bracket, act_levi(F, X, act_levi(F, W, v)) - act_levi(F, W, act_levi(F, X, v)) -
                              act_levi(F, bracket(X, W), v));
      if (!kpairs.empty())
        bump(res.semidirect,
             act_levi(F, X, act_levi(L, F, f, Y.first, Y.second, v)) -
                 act_levi(L, F, f, Y.first, Y.second, act_levi(F, X, v)) -
                 act_levi(L, F, wnrep::apply(X, f), Y.first, Y.second, v));
    }
    if (kpairs.empty()) continue;
    bump(res.cond2, act_levi(L, F, h, Y.first, Y.second, act_Om(F, f, v)) -
                        act_levi(L, F, poly_mul(h, f), Y.first, Y.second, v));
    // [f E_ab, g E_cd] = fg (d_bc E_ad - d_da E_cb)
    const auto [a, b] = Y;
    const auto [c, d] = Z;
    Polynomial fh = poly_mul(f, h);
    FVector lhs = act_levi(L, F, f, a, b, act_levi(L, F, h, c, d, v)) -
                  act_levi(L, F, h, c, d, act_levi(L, F, f, a, b, v));
    if (b == c) lhs -= act_levi(L, F, fh, a, d, v);
    if (d == a) lhs += act_levi(L, F, fh, c, b, v);
    bump(res.k_bracket, lhs);
  }
  return res;
}

ParabolicData ParabolicData::for_levi(const LeviAlg& L) {
  ParabolicData pd{Weight(static_cast<std::size_t>(L.n))};
  for (int i = 0; i < L.n; ++i) {
    if (i < L.p) pd.gamma[i] = Scalar(L.p - i);
    else if (i >= L.p + L.m) pd.gamma[i] = Scalar(L.p + L.m - i - 1);
  }
  return pd;
}

Scalar ParabolicData::pairing(const Weight& alpha) const {
  Scalar s(0);
  for (std::size_t i = 0; i < gamma.size(); ++i) s += gamma[i] * alpha[i];
  return s;
}

namespace {

void add_mode_rows(std::vector<LinIneq>& rows, std::size_t nv, std::size_t var, CoordMode mode) {
  auto row = [&](int sign) {
    LinIneq r{std::vector<Scalar>(nv), Scalar(0)};
    r.a[var] = Scalar(sign);
    rows.push_back(std::move(r));
  };
  switch (mode) {
    case CoordMode::Point: row(1); row(-1); break;
    case CoordMode::NonNeg: row(-1); break;
    case CoordMode::NonPos: row(1); break;
    case CoordMode::Full: break;
  }
}

}  // namespace

bool raisable(const SupportSet& s, const Weight& lambda, const ParabolicData& pd) {
  const std::size_t n = lambda.size();
  if (pd.gamma.size() != n || static_cast<std::size_t>(s.dim()) != n)
    throw DimensionError("raisable: rank mismatch");
  for (const auto& piece : s.pieces()) {
    // alpha_i = d_i + k_i (+ m_i) with k the axis offset and m the leveled offset.
    Weight base = piece.axis.base;
    if (piece.leveled) base += piece.leveled->cone.base;
    Weight d = base - lambda;
    bool integral = true;
    for (std::size_t i = 0; i < n; ++i) integral = integral && d[i].is_integer();
    if (!integral) continue;
    const bool lev = piece.leveled.has_value();
    if (lev && !(piece.leveled->level - piece.leveled->cone.base.total()).is_integer()) continue;
    const std::size_t nv = lev ? 2 * n : n;
    std::vector<LinIneq> common;
    for (std::size_t i = 0; i < n; ++i) add_mode_rows(common, nv, i, piece.axis.modes[i]);
    if (lev) {
      for (std::size_t i = 0; i < n; ++i) add_mode_rows(common, nv, n + i, piece.leveled->cone.modes[i]);
      Scalar target = piece.leveled->level - piece.leveled->cone.base.total();
      LinIneq up{std::vector<Scalar>(nv), target}, down{std::vector<Scalar>(nv), -target};
      for (std::size_t i = 0; i < n; ++i) {
        up.a[n + i] = Scalar(1);
        down.a[n + i] = Scalar(-1);
      }
      common.push_back(up);
      common.push_back(down);
    }
    std::vector<Scalar> obj(nv);
    for (std::size_t i = 0; i < n; ++i) {
      obj[i] = pd.gamma[i];
      if (lev) obj[n + i] = pd.gamma[i];
    }
    const Scalar offset = pd.pairing(d);
    for (std::size_t j = 0; j < n; ++j) {
      // Roots with alpha_j >= -1 and alpha_i >= 0 otherwise.
      auto rows = common;
      for (std::size_t i = 0; i < n; ++i) {
        LinIneq r{std::vector<Scalar>(nv), d[i] + Scalar(i == j ? 1 : 0)};
        r.a[i] = Scalar(-1);
        if (lev) r.a[n + i] = Scalar(-1);
        rows.push_back(std::move(r));
      }
      // The constraint matrix is totally unimodular, so the rational supremum is attained at an
      // integral point (or is unbounded over integral points too).
      LpResult lp = lp_sup(nv, rows, obj);
      if (lp.feasible && (lp.unbounded || lp.value + offset > Scalar(0))) return true;
    }
  }
  return false;
}

std::vector<TLabel> p_top(const TensorModule& M, const ParabolicData& pd, const Window& window) {
  const SupportSet supp = tmod_support(M);
  std::map<Weight, bool> top;
  std::vector<TLabel> out;
  for (auto& l : basis_in(M, window)) {
    Weight w = M.weight(l);
    auto it = top.find(w);
    if (it == top.end()) it = top.emplace(w, !raisable(supp, w, pd)).first;
    if (it->second) out.push_back(std::move(l));
  }
  return out;
}

DModule tilde_P(const DModule& P, int p, int n) {
  if (p < 0 || p + P.n() > n) throw RangeError("tilde_P needs p + m <= n");
  std::vector<DFactor> fs(static_cast<std::size_t>(p), DFactor::fpoly());
  fs.insert(fs.end(), P.factors().begin(), P.factors().end());
  fs.resize(static_cast<std::size_t>(n), DFactor::poly());
  return DModule(std::move(fs));
}

BackToTensorReport backtotensor_check(const LeviAlg& L, const DModule& P, const GlModulePtr& V,
                                      const GlModulePtr& S, const Window& window) {
  if (P.n() != L.m || !V || V->rank() != L.m) throw DimensionError("P and V must live over W_m");
  if (!V->finite_dim()) throw UnsupportedError("V must be finite-dimensional");
  if (window.dim() != L.n) throw DimensionError("window rank must be n");
  BackToTensorReport rep;
  const DModule tP = tilde_P(P, L.p, L.n);
  rep.tilde_P = tP.descriptor();
  GlModulePtr S_hat;
  Weight h(static_cast<std::size_t>(L.n));
  if (L.n == L.m) {
    S_hat = V;
  } else if (L.n == 2 && L.m == 1) {
    if (!S || !S->finite_dim() || S->all_labels().size() != 1 || V->all_labels().size() != 1)
      throw UnsupportedError("S^ is realized only for one-dimensional S and V");
    Scalar s = S->weight(S->all_labels().front())[0];
    Scalar v = V->weight(V->all_labels().front())[0];
    h = L.p == 1 ? Weight(std::vector<Scalar>{s + Scalar(1), v}) : Weight(std::vector<Scalar>{v, s});
    Scalar gap = h[0] - h[1];
    if (gap.is_integer())
      throw UnsupportedError("highest weight " + h.str() + " is not generic; S^ is not realized");
    // Simple Verma module of highest weight h: restriction of XL(gap)*O to the gap eigenspace,
    // shifted by the determinant power h_2.
    S_hat = tensor_gl(restrict_kappa(DModule({DFactor::xl(gap), DFactor::poly()}), gap),
                      character({h[1], h[1]}));
  } else {
    throw UnsupportedError("S^ is realized only for n = m, or n = 2 and m = 1");
  }
  rep.S_hat = S_hat->descriptor();
  rep.highest_weight = h;
  const TensorModule T(tP, S_hat);
  const ParabolicData pd = ParabolicData::for_levi(L);

  // Weights and multiplicities of F(T(P,V),S) in the window.
  std::map<Weight, long> fmult;
  long dimS = 1;
  if (L.n == L.m) {
    for (const auto& l : basis_in(TensorModule(P, V), window)) ++fmult[TensorModule(P, V).weight(l)];
  } else {
    const TensorModule R(P, V);
    auto slabels = S->all_labels();
    dimS = static_cast<long>(slabels.size());
    Window mwin;
    for (int i = 0; i < L.m; ++i) {
      mwin.lo.push_back(window.lo[L.m_coord(i)]);
      mwin.hi.push_back(window.hi[L.m_coord(i)]);
    }
    for (const auto& r : basis_in(R, mwin))
      for (const auto& s : slabels) {
        Weight w = L.embed(R.weight(r), S->weight(s));
        if (window.contains(w)) ++fmult[w];
      }
  }
  const long dimV = static_cast<long>(V->all_labels().size());
  rep.degree_formula_checked = std::all_of(P.factors().begin(), P.factors().end(),
                                           [](const DFactor& f) { return f.laurent(); });
  const SupportSet suppT = tmod_support(T);
  std::set<Weight> candidates;
  for (const auto& w : weights_in(T, window)) candidates.insert(w);
  for (const auto& [w, k] : fmult) candidates.insert(w);
  for (const auto& w : candidates) {
    BackToTensorReport::Row row;
    row.weight = w;
    row.mult_F = fmult.count(w) ? fmult.at(w) : 0;
    const bool inT = suppT.contains(w);
    row.top = inT && !raisable(suppT, w, pd);
    row.mult_T = row.top ? tmod_mult(T, w, window) : 0;
    if (row.mult_F > 0 && !inT) rep.support_contained = false;
    if (row.top != (row.mult_F > 0)) rep.top_matches_support = false;
    if (row.top && row.mult_T != row.mult_F) rep.mult_match = false;
    if (rep.degree_formula_checked && row.mult_F > 0 && row.mult_F != dimV * dimS)
      rep.degree_formula = false;
    if (row.top || row.mult_F > 0) rep.rows.push_back(std::move(row));
    ++rep.weights_checked;
  }
  return rep;
}

}  // namespace wnrep
