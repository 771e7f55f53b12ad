#pragma once

#include <random>
#include <vector>

#include "wnrep/dmod.hpp"
#include "wnrep/weyl.hpp"

namespace wnrep {

enum class LocElem { X, D };

/// Localization at a = x_i or d_i followed by the twist with exponent c.
struct TwistData {
  int index = 0;  // 0-based coordinate
  LocElem elem = LocElem::X;
  Scalar c;
};

WeylElement loc_generator(int n, const TwistData& t, long power = 1);

/// phi_c(u) = sum_k C(c,k) ad(a)^k(u) a^(-k); throws InternalError if ad(a)^k(u) is nonzero
/// for every k <= max_order.
WeylElement phi(const WeylElement& u, const TwistData& t, int max_order = 32);

/// Ore localization D_<a> P; the factor becomes XL (a = x) or DL (a = d) with the same weights.
DModule localize(const DModule& P, int index, LocElem elem);
/// Twisted localization: the localized factor with weights shifted by c times the weight of a.
DModule twisted_localize(const DModule& P, const TwistData& t);

/// Embedding of P into D_<a> P on the localized coordinate: e(m) of P maps to scale * e(label).
std::pair<Scalar, long> localize_label(const DFactor& f, LocElem elem, long m);

/// Max coefficient difference between the action of u on a^c m in twisted_localize(P,t) and
/// a^c (phi_{-c}(u) m) in D_<a> P, over random labels of the localized module.
Scalar twist_action_check(const DModule& P, const TwistData& t, const WeylElement& u, int samples,
                          std::mt19937_64& rng);

/// Sequential twisted localization along distinct coordinates.
DModule localize_gamma(const DModule& P, const std::vector<std::pair<int, LocElem>>& gamma,
                       const std::vector<Scalar>& exponents);

}  // namespace wnrep
