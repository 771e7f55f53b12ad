#pragma once

#include <map>
#include <mutex>
#include <random>

#include "wnrep/dmod.hpp"
#include "wnrep/tensormod.hpp"

namespace wnrep {

/// Normalizing function of the diagonal pairing between P and T(fourier(P), wedge(n,n)):
/// phi(0) = 1 and per coordinate phi(m+1) = (m+1) phi(m) for O, -(m+1) phi(m) for OF,
/// (l+m+1) phi(m) for XL(l) and phi(m) / (l+m+1) for DL(l).
class PairingTable {
 public:
  explicit PairingTable(DModule P);
  const DModule& module() const noexcept { return P_; }
  Scalar phi(const MultiIndex& mu) const;
  /// <e(mu), e'(nu)> where e' is the standard basis of fourier(P).
  Scalar pair_basis(const MultiIndex& mu, const MultiIndex& nu) const;

 private:
  Scalar coord_phi(int i, long m) const;
  DModule P_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, long>, Scalar> cache_;
};

Scalar pair(const PairingTable& table, const DVector& u, const DVector& w);
/// Same pairing with w in T(fourier(P), wedge(n,n)).
Scalar pair(const PairingTable& table, const TVector& u, const TVector& w);

/// Max |<X u, w> + <u, X w>| over random samples with u in T(P, wedge(n,0)) and w in
/// T(fourier(P), wedge(n,n)).
Scalar invariance_residual(const DModule& P, const WnRoot& X, int samples, std::mt19937_64& rng);

/// T(fourier(P), dual(V) # wedge(n,n)); V must be finite-dimensional.
TensorModule dual_tensor(const TensorModule& T);

/// <f (x) v, g (x) w> = <f, g> <v, w> between T and dual_tensor(T).
Scalar pairing_tensor(const TensorModule& T, const TVector& fv, const TVector& gw);
Scalar pairing_tensor_invariance(const TensorModule& T, const WnRoot& X, int samples,
                                 std::mt19937_64& rng);

/// Whether the pairing matrix between T^mu and dual_tensor(T)^(-mu) is square and invertible.
bool weight_perfect(const TensorModule& T, const Weight& mu);

}  // namespace wnrep
