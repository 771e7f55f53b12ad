#include "wnrep/localize.hpp"

#include <set>

#include "wnrep/errors.hpp"

namespace wnrep {

WeylElement loc_generator(int n, const TwistData& t, long power) {
  if (t.index < 0 || t.index >= n) throw RangeError("localization coordinate out of range");
  return t.elem == LocElem::X ? WeylElement::x(n, t.index, power) : WeylElement::d(n, t.index, power);
}

WeylElement phi(const WeylElement& u, const TwistData& t, int max_order) {
  const int n = u.n();
  const WeylElement a = loc_generator(n, t);
  WeylElement out(n);
  WeylElement adk = u;
  for (int k = 0; k <= max_order; ++k) {
    if (adk.is_zero()) return out;
    out += binomial(t.c, k) * (adk * loc_generator(n, t, -k));
    adk = ad(a, adk);
  }
  throw InternalError("phi: ad(a) is not nilpotent on " + u.str() + " within the order bound");
}

namespace {

DFactor localized_factor(const DFactor& f, LocElem elem) {
  auto fail = [&]() -> DFactor {
    throw NotOreInjectiveError(std::string(elem == LocElem::X ? "x" : "d") +
                               " acts locally nilpotently or non-injectively on " + f.str());
  };
  if (elem == LocElem::X) {
    switch (f.kind) {
      case FactorKind::Poly: return DFactor::xl(Scalar(0));
      case FactorKind::XL: return f;
      case FactorKind::DL: return f.lambda.is_integer() ? fail() : DFactor::xl(f.lambda);
      case FactorKind::FPoly: return fail();
    }
  } else {
    switch (f.kind) {
      case FactorKind::FPoly: return DFactor::dl(Scalar(-1));
      case FactorKind::DL: return f;
      case FactorKind::XL: return f.lambda.is_integer() ? fail() : DFactor::dl(f.lambda);
      case FactorKind::Poly: return fail();
    }
  }
  throw InternalError("localized_factor: unknown case");
}

}  // namespace

std::pair<Scalar, long> localize_label(const DFactor& f, LocElem elem, long m) {
  if (!f.valid_label(m)) throw RangeError("label out of range for " + f.str());
  localized_factor(f, elem);
  if (f.kind == FactorKind::FPoly) return {Scalar(1), -m};
  const bool rescale = (elem == LocElem::X && f.kind == FactorKind::DL) ||
                       (elem == LocElem::D && f.kind == FactorKind::XL);
  if (!rescale) return {Scalar(1), m};
  // DL into XL: s(0) = 1, s(m-1) = (l+m) s(m).  XL into DL: t(0) = 1, t(m) = (l+m) t(m-1).
  Scalar s(1);
  const Scalar& l = f.lambda;
  if (elem == LocElem::X) {
    for (long k = 0; k > m; --k) s *= l + Scalar(k);
    for (long k = 1; k <= m; ++k) s /= l + Scalar(k);
  } else {
    for (long k = 1; k <= m; ++k) s *= l + Scalar(k);
    for (long k = 0; k > m; --k) s /= l + Scalar(k);
  }
  return {s, m};
}

DModule localize(const DModule& P, int index, LocElem elem) {
  if (index < 0 || index >= P.n()) throw RangeError("localization coordinate out of range");
  auto fs = P.factors();
  fs[static_cast<std::size_t>(index)] = localized_factor(fs[static_cast<std::size_t>(index)], elem);
  return DModule(std::move(fs));
}

DModule twisted_localize(const DModule& P, const TwistData& t) {
  DModule Q = localize(P, t.index, t.elem);
  auto fs = Q.factors();
  auto& f = fs[static_cast<std::size_t>(t.index)];
  f.lambda = t.elem == LocElem::X ? f.lambda + t.c : f.lambda - t.c;
  return DModule(std::move(fs));
}

Scalar twist_action_check(const DModule& P, const TwistData& t, const WeylElement& u, int samples,
                          std::mt19937_64& rng) {
  const DModule Q = localize(P, t.index, t.elem);
  const DModule R = twisted_localize(P, t);
  TwistData back = t;
  back.c = -t.c;
  const WeylElement v = phi(u, back);
  std::uniform_int_distribution<long> pick(-6, 6);
  Scalar worst(0);
  for (int s = 0; s < samples; ++s) {
    MultiIndex mu(static_cast<std::size_t>(P.n()));
    for (int i = 0; i < P.n(); ++i) {
      mu[i] = pick(rng);
      if (!R.factor(i).valid_label(mu[i])) mu[i] = -mu[i];
    }
    DVector e(mu, Scalar(1));
    Scalar r = (act_weyl(R, u, e) - act_weyl(Q, v, e)).max_abs();
    if (r > worst) worst = r;
  }
  return worst;
}

DModule localize_gamma(const DModule& P, const std::vector<std::pair<int, LocElem>>& gamma,
                       const std::vector<Scalar>& exponents) {
  if (gamma.size() != exponents.size())
    throw DimensionError("localize_gamma: one exponent per element is required");
  std::set<int> seen;
  for (const auto& [i, e] : gamma)
    if (!seen.insert(i).second)
      throw ValidationError("localize_gamma: repeated coordinate " + std::to_string(i + 1));
  DModule Q = P;
  for (std::size_t k = 0; k < gamma.size(); ++k)
    Q = twisted_localize(Q, {gamma[k].first, gamma[k].second, exponents[k]});
  return Q;
}

}  // namespace wnrep
