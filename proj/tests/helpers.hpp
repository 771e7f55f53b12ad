#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "wnrep/descriptor.hpp"
#include "wnrep/dmod.hpp"
#include "wnrep/lattice.hpp"

namespace wnrep::test {

inline Weight W(std::initializer_list<Scalar> c) { return Weight(std::vector<Scalar>(c)); }
inline Scalar Q(const char* s) { return Scalar::parse(s); }

/// Integer points of [-r, r]^n shifted by the base.
inline std::vector<Weight> box_points(const Weight& base, long r) {
  std::vector<Weight> out;
  Window w;
  for (std::size_t i = 0; i < base.size(); ++i) {
    w.lo.push_back(base[i] - Scalar(r));
    w.hi.push_back(base[i] + Scalar(r));
  }
  return w.coset_points(base);
}

/// A random simple D-module descriptor with n factors.
inline DModule random_dmodule(int n, std::mt19937_64& rng, bool allow_dl = true) {
  static const char* laurent[] = {"1/2", "1/3", "-2/5", "7/3"};
  std::uniform_int_distribution<int> kind(0, allow_dl ? 3 : 2), lam(0, 3);
  std::vector<DFactor> fs;
  for (int i = 0; i < n; ++i) {
    switch (kind(rng)) {
      case 0: fs.push_back(DFactor::poly()); break;
      case 1: fs.push_back(DFactor::fpoly()); break;
      case 2: fs.push_back(DFactor::xl(Scalar::parse(laurent[lam(rng)]))); break;
      default: fs.push_back(DFactor::dl(Scalar::parse(laurent[lam(rng)]))); break;
    }
  }
  return DModule(fs);
}

/// All labels of P in the radius box, as D-module basis vectors.
inline std::vector<MultiIndex> labels_box(const DModule& P, long r) {
  return dmod_labels_in(P, Window::box(P.n(), r));
}

}  // namespace wnrep::test
