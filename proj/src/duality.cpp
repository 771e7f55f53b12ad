#include "wnrep/duality.hpp"

#include "wnrep/errors.hpp"
#include "wnrep/linalg.hpp"

namespace wnrep {

PairingTable::PairingTable(DModule P) : P_(std::move(P)) {
  if (!P_.simple()) throw ValidationError("pairing needs a simple module: " + P_.descriptor());
}

Scalar PairingTable::coord_phi(int i, long m) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find({i, m});
    if (it != cache_.end()) return it->second;
  }
  const DFactor& f = P_.factor(i);
  // step(k) = phi(k+1) / phi(k)
  auto step = [&](long k) -> Scalar {
    switch (f.kind) {
      case FactorKind::Poly: return Scalar(k + 1);
      case FactorKind::FPoly: return Scalar(-(k + 1));
      case FactorKind::XL: return f.lambda + Scalar(k + 1);
      case FactorKind::DL: return (f.lambda + Scalar(k + 1)).inverse();
    }
    return Scalar(0);
  };
  Scalar v(1);
  for (long k = 0; k < m; ++k) v *= step(k);
  for (long k = -1; k >= m; --k) v /= step(k);
  std::lock_guard<std::mutex> lock(mutex_);
  cache_.emplace(std::make_pair(i, m), v);
  return v;
}

Scalar PairingTable::phi(const MultiIndex& mu) const {
  if (!P_.valid_label(mu)) throw RangeError("label out of range");
  Scalar v(1);
  for (int i = 0; i < P_.n(); ++i) v *= coord_phi(i, mu[i]);
  return v;
}

Scalar PairingTable::pair_basis(const MultiIndex& mu, const MultiIndex& nu) const {
  auto [sign, image] = fourier_label(P_, mu);
  if (image != nu) return Scalar(0);
  return sign * phi(mu);
}

Scalar pair(const PairingTable& table, const DVector& u, const DVector& w) {
  Scalar s(0);
  for (const auto& [mu, a] : u) {
    auto [sign, nu] = fourier_label(table.module(), mu);
    Scalar b = w.coeff(nu);
    if (!b.is_zero()) s += a * b * sign * table.phi(mu);
  }
  return s;
}

Scalar pair(const PairingTable& table, const TVector& u, const TVector& w) {
  DVector du, dw;
  for (const auto& [l, c] : u) du.add(l.first, c);
  for (const auto& [l, c] : w) dw.add(l.first, c);
  return pair(table, du, dw);
}

namespace {

MultiIndex random_label(const DModule& P, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> pick(-6, 6);
  MultiIndex mu(static_cast<std::size_t>(P.n()));
  for (int i = 0; i < P.n(); ++i) {
    mu[i] = pick(rng);
    if (!P.factor(i).valid_label(mu[i])) mu[i] = -mu[i];
  }
  return mu;
}

}  // namespace

Scalar invariance_residual(const DModule& P, const WnRoot& X, int samples, std::mt19937_64& rng) {
  const int n = P.n();
  PairingTable table(P);
  TensorModule A(P, wedge(n, 0));
  TensorModule B(fourier(P), wedge(n, n));
  Scalar worst(0);
  for (int s = 0; s < samples; ++s) {
    MultiIndex mu = random_label(P, rng);
    TVector u(TLabel{mu, {0}}, Scalar(1));
    // Pick w of weight opposite to X u so the pairing is not trivially zero.
    Weight target = -(dmod_weight(P, mu) + X.weight());
    auto nu = label_of_weight(B.P(), target - B.V()->weight({0}));
    if (!nu) nu = fourier_label(P, mu).second;
    TVector w(TLabel{*nu, {0}}, Scalar(1));
    Scalar r = (pair(table, act_wn(A, X, u), w) + pair(table, u, act_wn(B, X, w))).abs();
    if (r > worst) worst = r;
  }
  return worst;
}

TensorModule dual_tensor(const TensorModule& T) {
  if (!T.V()->finite_dim()) throw UnsupportedError("dual of a tensor module with infinite V");
  const int n = T.n();
  GlModulePtr Vd = dual_gl(*T.V());
  return TensorModule(fourier(T.P()), tensor_gl(Vd, wedge(n, n)));
}

Scalar pairing_tensor(const TensorModule& T, const TVector& fv, const TVector& gw) {
  if (!T.V()->finite_dim()) throw UnsupportedError("pairing with infinite V");
  PairingTable table(T.P());
  Scalar s(0);
  // dual(V) # wedge(n,n) has the labels of dual(V), which are the labels of V.
  for (const auto& [l, a] : fv)
    for (const auto& [m, b] : gw) {
      if (l.second != m.second) continue;
      s += a * b * table.pair_basis(l.first, m.first);
    }
  return s;
}

Scalar pairing_tensor_invariance(const TensorModule& T, const WnRoot& X, int samples,
                                 std::mt19937_64& rng) {
  const TensorModule D = dual_tensor(T);
  auto vlabels = T.V()->all_labels();
  std::uniform_int_distribution<std::size_t> pickv(0, vlabels.size() - 1);
  const Window all = Window::box(T.n(), 1000);
  Scalar worst(0);
  for (int s = 0; s < samples; ++s) {
    MultiIndex mu = random_label(T.P(), rng);
    TLabel l{mu, vlabels[pickv(rng)]};
    TVector u(l, Scalar(1));
    Weight target = -(T.weight(l) + X.weight());
    TVector w;
    std::uniform_int_distribution<int> coef(-3, 3);
    for (const auto& m : basis_at(D, target, all)) w.add(m, Scalar(coef(rng)));
    Scalar r = (pairing_tensor(T, act_wn(T, X, u), w) + pairing_tensor(T, u, act_wn(D, X, w))).abs();
    if (r > worst) worst = r;
  }
  return worst;
}

bool weight_perfect(const TensorModule& T, const Weight& mu) {
  const TensorModule D = dual_tensor(T);
  const Window all = Window::box(T.n(), 1000);
  auto rows = basis_at(T, mu, all);
  auto cols = basis_at(D, -mu, all);
  if (rows.size() != cols.size()) return false;
  PairingTable table(T.P());
  std::vector<SparseVec<long>> matrix;
  for (const auto& r : rows) {
    SparseVec<long> row;
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (r.second == cols[c].second) row.add(static_cast<long>(c), table.pair_basis(r.first, cols[c].first));
    matrix.push_back(std::move(row));
  }
  return rank(matrix) == rows.size();
}

}  // namespace wnrep
