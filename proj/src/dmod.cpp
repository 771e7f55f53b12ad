#include "wnrep/dmod.hpp"

#include "wnrep/errors.hpp"

namespace wnrep {

std::string DFactor::str() const {
  switch (kind) {
    case FactorKind::Poly: return "O";
    case FactorKind::FPoly: return "OF";
    case FactorKind::XL: return "XL(" + lambda.str() + ")";
    case FactorKind::DL: return "DL(" + lambda.str() + ")";
  }
  return "?";
}

bool DModule::simple() const {
  for (const auto& f : factors_)
    if (f.non_simple()) return false;
  return true;
}

std::set<int> DModule::i_plus() const {
  std::set<int> s;
  for (int i = 0; i < n(); ++i)
    if (factor(i).kind == FactorKind::Poly) s.insert(i);
  return s;
}

std::set<int> DModule::i_zero() const {
  std::set<int> s;
  for (int i = 0; i < n(); ++i)
    if (factor(i).laurent()) s.insert(i);
  return s;
}

std::set<int> DModule::i_minus() const {
  std::set<int> s;
  for (int i = 0; i < n(); ++i)
    if (factor(i).kind == FactorKind::FPoly) s.insert(i);
  return s;
}

bool DModule::valid_label(const MultiIndex& mu) const {
  if (static_cast<int>(mu.size()) != n()) return false;
  for (int i = 0; i < n(); ++i)
    if (!factor(i).valid_label(mu[i])) return false;
  return true;
}

std::string DModule::descriptor() const {
  std::string s;
  for (const auto& f : factors_) {
    if (!s.empty()) s += "*";
    s += f.str();
  }
  return s;
}

std::pair<Scalar, long> factor_act(const DFactor& f, Gen g, long m) {
  if (!f.valid_label(m)) throw RangeError("label " + std::to_string(m) + " out of range for " + f.str());
  auto not_invertible = [&](const char* what) -> std::pair<Scalar, long> {
    throw NotOreInjectiveError(std::string(what) + " is not invertible on " + f.str());
  };
  switch (f.kind) {
    case FactorKind::Poly:
      switch (g) {
        case Gen::X: return {Scalar(1), m + 1};
        case Gen::D: return {Scalar(m), m - 1};
        case Gen::XInv: return not_invertible("x");
        case Gen::DInv: return not_invertible("d");
      }
      break;
    case FactorKind::FPoly:
      switch (g) {
        case Gen::D: return {Scalar(1), m + 1};
        case Gen::X: return {Scalar(-m), m - 1};
        case Gen::XInv: return not_invertible("x");
        case Gen::DInv: return not_invertible("d");
      }
      break;
    case FactorKind::XL:
      switch (g) {
        case Gen::X: return {Scalar(1), m + 1};
        case Gen::D: return {f.lambda + Scalar(m), m - 1};
        case Gen::XInv: return {Scalar(1), m - 1};
        case Gen::DInv: {
          Scalar s = f.lambda + Scalar(m + 1);
          if (s.is_zero()) return not_invertible("d");
          return {s.inverse(), m + 1};
        }
      }
      break;
    case FactorKind::DL:
      switch (g) {
        case Gen::D: return {Scalar(1), m - 1};
        case Gen::X: return {f.lambda + Scalar(m + 1), m + 1};
        case Gen::DInv: return {Scalar(1), m + 1};
        case Gen::XInv: {
          Scalar s = f.lambda + Scalar(m);
          if (s.is_zero()) return not_invertible("x");
          return {s.inverse(), m - 1};
        }
      }
      break;
  }
  throw InternalError("factor_act: unknown case");
}

Scalar factor_weight(const DFactor& f, long m) {
  if (!f.valid_label(m)) throw RangeError("label " + std::to_string(m) + " out of range for " + f.str());
  switch (f.kind) {
    case FactorKind::Poly: return Scalar(m);
    case FactorKind::FPoly: return Scalar(-m - 1);
    default: return f.lambda + Scalar(m);
  }
}

std::optional<long> factor_label(const DFactor& f, const Scalar& w) {
  Scalar m;
  switch (f.kind) {
    case FactorKind::Poly: m = w; break;
    case FactorKind::FPoly: m = -w - Scalar(1); break;
    default: m = w - f.lambda; break;
  }
  if (!m.is_integer()) return std::nullopt;
  long v = m.to_long();
  if (!f.valid_label(v)) return std::nullopt;
  return v;
}

Weight dmod_weight(const DModule& P, const MultiIndex& mu) {
  if (static_cast<int>(mu.size()) != P.n()) throw DimensionError("label length mismatch");
  Weight w(mu.size());
  for (int i = 0; i < P.n(); ++i) w[i] = factor_weight(P.factor(i), mu[i]);
  return w;
}

std::optional<MultiIndex> label_of_weight(const DModule& P, const Weight& w) {
  if (static_cast<int>(w.size()) != P.n()) throw DimensionError("weight length mismatch");
  MultiIndex mu(w.size());
  for (int i = 0; i < P.n(); ++i) {
    auto m = factor_label(P.factor(i), w[i]);
    if (!m) return std::nullopt;
    mu[i] = *m;
  }
  return mu;
}

SupportSet dmod_support(const DModule& P) {
  ShiftedCone c{Weight(static_cast<std::size_t>(P.n())), {}};
  for (int i = 0; i < P.n(); ++i) {
    const auto& f = P.factor(i);
    c.base[i] = factor_weight(f, 0);
    switch (f.kind) {
      case FactorKind::Poly: c.modes.push_back(CoordMode::NonNeg); break;
      case FactorKind::FPoly: c.modes.push_back(CoordMode::NonPos); break;
      default: c.modes.push_back(CoordMode::Full); break;
    }
  }
  return SupportSet::cone(c);
}

Shadow dmod_shadow(const DModule& P) {
  if (!P.simple()) throw ValidationError("shadow requires a simple module: " + P.descriptor());
  return shadow_from_isets(P.n(), P.i_plus(), P.i_zero(), P.i_minus());
}

DVector act_gen(const DModule& P, int i, Gen g, const DVector& v) {
  if (i < 0 || i >= P.n()) throw RangeError("coordinate index out of range");
  DVector out;
  const auto& f = P.factor(i);
  for (const auto& [mu, c] : v) {
    auto [coef, m] = factor_act(f, g, mu[i]);
    if (coef.is_zero()) continue;
    MultiIndex nu = mu;
    nu[i] = m;
    out.add(nu, c * coef);
  }
  return out;
}

DVector act_weyl(const DModule& P, const WeylElement& u, const DVector& v) {
  if (u.n() != P.n()) throw DimensionError("Weyl element rank mismatch");
  DVector out;
  for (const auto& [m, c] : u.terms()) {
    DVector w = v;
    for (int i = 0; i < P.n(); ++i) {
      Gen g = m.b[i] >= 0 ? Gen::D : Gen::DInv;
      for (long k = 0; k < std::abs(m.b[i]); ++k) w = act_gen(P, i, g, w);
    }
    for (int i = 0; i < P.n(); ++i) {
      Gen g = m.a[i] >= 0 ? Gen::X : Gen::XInv;
      for (long k = 0; k < std::abs(m.a[i]); ++k) w = act_gen(P, i, g, w);
    }
    out.add_scaled(w, c);
  }
  return out;
}

DModule fourier(const DModule& P) {
  std::vector<DFactor> fs;
  for (const auto& f : P.factors()) {
    switch (f.kind) {
      case FactorKind::Poly: fs.push_back(DFactor::fpoly()); break;
      case FactorKind::FPoly: fs.push_back(DFactor::poly()); break;
      case FactorKind::XL: fs.push_back(DFactor::dl(-f.lambda - Scalar(1))); break;
      case FactorKind::DL: fs.push_back(DFactor::xl(-f.lambda - Scalar(1))); break;
    }
  }
  return DModule(std::move(fs));
}

std::pair<Scalar, MultiIndex> fourier_label(const DModule& P, const MultiIndex& mu) {
  if (!P.valid_label(mu)) throw RangeError("label out of range");
  Scalar sign(1);
  MultiIndex nu = mu;
  for (int i = 0; i < P.n(); ++i) {
    const long m = mu[i];
    switch (P.factor(i).kind) {
      case FactorKind::Poly:
        if (m % 2) sign = -sign;
        break;
      case FactorKind::FPoly: break;
      case FactorKind::XL:
        if (m % 2) sign = -sign;
        nu[i] = -m;
        break;
      case FactorKind::DL: nu[i] = -m; break;
    }
  }
  return {sign, nu};
}

bool sum_partials_saturates(const DModule& P) {
  for (const auto& f : P.factors())
    if (f.kind != FactorKind::FPoly) return true;
  return false;
}

std::vector<MultiIndex> dmod_labels_in(const DModule& P, const Window& w) {
  if (w.dim() != P.n()) throw DimensionError("window rank mismatch");
  std::vector<std::pair<long, long>> ranges;
  for (int i = 0; i < P.n(); ++i) {
    const auto& f = P.factor(i);
    long lo, hi;
    switch (f.kind) {
      case FactorKind::Poly:
        lo = std::max(0L, w.lo[i].ceil());
        hi = w.hi[i].floor();
        break;
      case FactorKind::FPoly:
        lo = std::max(0L, (-w.hi[i] - Scalar(1)).ceil());
        hi = (-w.lo[i] - Scalar(1)).floor();
        break;
      default:
        lo = (w.lo[i] - f.lambda).ceil();
        hi = (w.hi[i] - f.lambda).floor();
        break;
    }
    if (lo > hi) return {};
    ranges.emplace_back(lo, hi);
  }
  std::vector<MultiIndex> out;
  MultiIndex mu(ranges.size());
  for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = ranges[i].first;
  if (mu.empty()) return {mu};
  while (true) {
    out.push_back(mu);
    std::size_t pos = mu.size();
    while (pos > 0) {
      --pos;
      if (mu[pos] < ranges[pos].second) {
        ++mu[pos];
        for (std::size_t q = pos + 1; q < mu.size(); ++q) mu[q] = ranges[q].first;
        break;
      }
      if (pos == 0) return out;
    }
  }
}

}  // namespace wnrep
