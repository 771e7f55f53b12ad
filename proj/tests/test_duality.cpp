#include <doctest.h>

#include "helpers.hpp"
#include "wnrep/duality.hpp"
#include "wnrep/errors.hpp"

using namespace wnrep;
using namespace wnrep::test;

TEST_SUITE("duality") {
  TEST_CASE("pairing values") {
    PairingTable O(parse_dmodule("O"));
    CHECK(O.phi({0}) == Scalar(1));
    CHECK(O.phi({3}) == Scalar(6));
    CHECK(O.phi({5}) == Scalar(120));
    // e(3) pairs with the Fourier image label of e(3).
    auto [s, nu] = fourier_label(O.module(), {3});
    CHECK(O.pair_basis({3}, nu) == s * Scalar(6));
    CHECK(O.pair_basis({3}, {2}) == Scalar(0));
    // <d e(3), f> = -<e(3), d f>
    const DModule F = fourier(O.module());
    for (const auto& l : dmod_labels_in(F, Window::box(1, 6))) {
      DVector f(l, Scalar(1));
      Scalar lhs = pair(O, act_gen(O.module(), 0, Gen::D, DVector({3}, Scalar(1))), f);
      Scalar rhs = pair(O, DVector({3}, Scalar(1)), act_gen(F, 0, Gen::D, f));
      CHECK(lhs == -rhs);
    }
    CHECK_THROWS_AS(PairingTable(DModule({DFactor::xl(Scalar(0))})), ValidationError);
  }

  TEST_CASE("phi never vanishes on the support") {
    std::mt19937_64 rng(83);
    for (int t = 0; t < 6; ++t) {
      PairingTable tab(random_dmodule(2, rng));
      for (const auto& l : dmod_labels_in(tab.module(), Window::box(2, 5))) CHECK_FALSE(tab.phi(l).is_zero());
    }
  }

  TEST_CASE("invariance of the D-module pairing") {
    std::mt19937_64 rng(89);
    for (const char* d : {"O", "XL(1/2)", "OF*O", "DL(1/3)*XL(2/5)"}) {
      DModule P = parse_dmodule(d);
      for (const auto& X : wn_roots_up_to(P.n(), 2)) CHECK_MESSAGE(invariance_residual(P, X, 15, rng) == Scalar(0), d << " " << X.str());
    }
  }

  TEST_CASE("dual tensor module") {
    std::mt19937_64 rng(97);
    const std::vector<const char*> vs{"wedge(1)", "sym(2)", "char(1/2)", "wedge(1)#char(2)"};
    for (int t = 0; t < 4; ++t) {
      DModule P = random_dmodule(2, rng);
      TensorModule T(P, parse_glmodule(vs[t], 2));
      TensorModule D = dual_tensor(T);
      Window w = Window::box(2, 5);
      for (const auto& mu : weights_in(T, w)) CHECK(tmod_mult(T, mu, w) == tmod_mult(D, -mu, w));
      for (const auto& mu : weights_in(D, w)) CHECK(tmod_mult(T, -mu, w) > 0);
      SupportSet a = tmod_support(T), b = tmod_support(D);
      for (const auto& coset : a.cosets())
        for (const auto& mu : Window::box(2, 3).coset_points(coset)) CHECK(a.contains(mu) == b.contains(-mu));
      TensorModule DD = dual_tensor(D);
      for (const auto& mu : weights_in(T, Window::box(2, 3))) CHECK(tmod_mult(DD, mu, w) == tmod_mult(T, mu, w));
      for (const auto& mu : weights_in(T, Window::box(2, 3))) CHECK(weight_perfect(T, mu));
    }
    CHECK_THROWS_AS(dual_tensor(TensorModule(parse_dmodule("OF*O"), parse_glmodule("resD(O*OF;1)", 2))),
                    UnsupportedError);
  }

  TEST_CASE("tensor pairing") {
    std::mt19937_64 rng(101);
    TensorModule T(parse_dmodule("O"), character({2}));
    for (const auto& X : wn_roots_up_to(1, 2)) CHECK(pairing_tensor_invariance(T, X, 20, rng) == Scalar(0));
    TensorModule S(parse_dmodule("XL(1/2)*OF"), sym(2, 2));
    for (const auto& X : wn_roots_up_to(2, 2)) CHECK(pairing_tensor_invariance(S, X, 10, rng) == Scalar(0));
    // Weight mismatch pairs to zero.
    TensorModule C(parse_dmodule("O"), character({0}));
    TVector a({{2}, {0}}, Scalar(1));
    TensorModule D = dual_tensor(C);
    auto basis = basis_at(D, W({-2}), Window::box(1, 6));
    REQUIRE(basis.size() == 1);
    CHECK_FALSE(pairing_tensor(C, a, TVector(basis[0], Scalar(1))).is_zero());
    auto other = basis_at(D, W({-3}), Window::box(1, 6));
    CHECK(pairing_tensor(C, a, TVector(other.at(0), Scalar(1))).is_zero());
    // With V = char(0) the product pairing reduces to the D-module pairing.
    PairingTable tab(C.P());
    CHECK(pairing_tensor(C, a, TVector(basis[0], Scalar(1))) ==
          pair(tab, DVector({2}, Scalar(1)), DVector(basis[0].first, Scalar(1))));
  }
}
