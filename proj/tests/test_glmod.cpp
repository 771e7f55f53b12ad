#include <doctest.h>

#include "helpers.hpp"
#include "wnrep/errors.hpp"
#include "wnrep/glmod.hpp"

using namespace wnrep;
using namespace wnrep::test;

namespace {

/// Max residual of [E_ij, E_kl] = d_jk E_il - d_li E_kj over the given labels.
Scalar bracket_residual(const GlModule& V, const std::vector<MultiIndex>& labels) {
  const int n = V.rank();
  Scalar worst(0);
  for (const auto& l : labels) {
    GlVec v(l, Scalar(1));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int m = 0; m < n; ++m) {
            if (!V.in_algebra(i, j) || !V.in_algebra(k, m)) continue;
            GlVec r = V.act_vec(i, j, V.act_vec(k, m, v)) - V.act_vec(k, m, V.act_vec(i, j, v));
            if (j == k) r -= V.act_vec(i, m, v);
            if (m == i) r += V.act_vec(k, j, v);
            if (r.max_abs() > worst) worst = r.max_abs();
          }
  }
  return worst;
}

/// E_ii acts on every label by its weight.
bool diagonal_is_weight(const GlModule& V, const std::vector<MultiIndex>& labels) {
  for (const auto& l : labels)
    for (int i = 0; i < V.rank(); ++i)
      if (V.act(i, i, l) != GlVec(l, V.weight(l)[i])) return false;
  return true;
}

}  // namespace

TEST_SUITE("glmod") {
  TEST_CASE("wedge and sym") {
    auto w = wedge(2, 1);
    CHECK(w->dim() == 2);
    CHECK(w->act(1, 0, {0}) == GlVec({1}, Scalar(1)));
    CHECK(wedge(4, 2)->dim() == 6);
    CHECK(wedge(3, 0)->dim() == 1);
    auto s = sym(2, 2);
    CHECK(s->dim() == 3);
    // Basis exponents descend: {(2,0),(1,1),(0,2)}.
    CHECK(s->act(0, 1, {2}) == GlVec({1}, Scalar(2)));
    CHECK(sym(3, 1)->all_labels().size() == wedge(3, 1)->all_labels().size());
    for (int i = 0; i < 3; ++i) CHECK(sym(3, 1)->weight({i}) == wedge(3, 1)->weight({i}));
  }

  TEST_CASE("character") {
    auto c = character({Q("1/2")});
    CHECK(c->weight({0}) == W({Q("1/2")}));
    CHECK(c->descriptor() == "char(1/2)");
    auto t = character({0, 0});
    CHECK(t->act(0, 0, {0}).empty());
    CHECK(character({1, 1, 2}, {2, 1})->descriptor() == "char(1,1,2)");
    CHECK_THROWS_AS(character({1, 2}), ValidationError);
  }

  TEST_CASE("representations satisfy the gl(n) relations") {
    std::vector<GlModulePtr> mods{wedge(3, 1), wedge(3, 2), sym(2, 3), dual_gl(*sym(2, 2)),
                                  tensor_gl(wedge(2, 1), sym(2, 2)), character({Q("1/3"), Q("1/3")}),
                                  tensor_gl(dual_gl(*wedge(3, 1)), wedge(3, 3))};
    for (const auto& V : mods) {
      CHECK_MESSAGE(bracket_residual(*V, V->all_labels()) == Scalar(0), V->descriptor());
      CHECK(diagonal_is_weight(*V, V->all_labels()));
    }
    for (auto [d, k] : {std::pair{"O*OF", "3"}, std::pair{"XL(1/2)*O", "1/2"}, std::pair{"DL(1/3)*XL(2/3)", "3"}}) {
      auto V = restrict_kappa(parse_dmodule(d), Q(k));
      auto labels = V->labels_in(Window::box(2, 3));
      CHECK_MESSAGE(bracket_residual(*V, labels) == Scalar(0), d);
      CHECK(diagonal_is_weight(*V, labels));
    }
    auto T = tensor_gl(restrict_kappa(parse_dmodule("XL(1/2)*O"), Q("1/2")), character({2, 2}));
    CHECK(bracket_residual(*T, T->labels_in(Window::box(2, 3))) == Scalar(0));
  }

  TEST_CASE("dual and tensor weights") {
    auto D = dual_gl(*wedge(3, 1));
    for (const auto& l : D->all_labels()) CHECK(D->weight(l).total() == Scalar(-1));
    CHECK(D->descriptor() == "dual(wedge(1))");
    auto T = tensor_gl(wedge(2, 1), dual_gl(*sym(2, 3)));
    CHECK(T->all_labels().size() == 8);
    CHECK(T->descriptor() == "wedge(1)#dual(sym(3))");
    CHECK_THROWS_AS(dual_gl(*restrict_kappa(parse_dmodule("O*OF"), Scalar(1))), UnsupportedError);
    CHECK_THROWS_AS(tensor_gl(wedge(2, 1), wedge(3, 1)), DimensionError);
  }

  TEST_CASE("gl_weight_mult") {
    Window w = Window::box(3, 4);
    CHECK(gl_weight_mult(*wedge(3, 2), W({1, 1, 0}), w) == 1);
    CHECK(gl_weight_mult(*sym(2, 2), W({1, 1}), Window::box(2, 4)) == 1);
    CHECK(gl_weight_mult(*restrict_kappa(parse_dmodule("O*O"), Scalar(1)), W({1, 0}), Window::box(2, 4)) == 1);
    CHECK(gl_weight_mult(*tensor_gl(wedge(2, 1), wedge(2, 1)), W({1, 1}), Window::box(2, 4)) == 2);
  }

  TEST_CASE("simplicity and fundamental degree") {
    CHECK(highest_weight_space_dim(*sym(2, 3)) == 1);
    CHECK(is_simple_finite(*wedge(3, 2)));
    CHECK_FALSE(is_simple_finite(*tensor_gl(wedge(2, 1), wedge(2, 1))));
    CHECK(fundamental_degree(*wedge(3, 2)) == 2);
    CHECK(fundamental_degree(*wedge(2, 0)) == 0);
    CHECK(fundamental_degree(*character({0, 0})) == 0);
    CHECK(fundamental_degree(*character({1, 1})) == 2);
    CHECK_FALSE(fundamental_degree(*sym(2, 2)).has_value());
    CHECK(fundamental_degree(*character({1, 1, 1})) == 3);
    CHECK_FALSE(fundamental_degree(*character({Q("1/2"), Q("1/2")})).has_value());
    CHECK(fundamental_degree(*restrict_kappa(parse_dmodule("O*O"), Scalar(1))) == 1);
  }

  TEST_CASE("supports") {
    auto V = restrict_kappa(parse_dmodule("O*OF"), Scalar(1));
    SupportSet s = V->support();
    for (long a = -4; a <= 4; ++a)
      for (long b = -4; b <= 4; ++b)
        CHECK(s.contains(W({a, b})) == (a >= 0 && b <= -1 && a + b == 1));
    CHECK(wedge(2, 1)->support().contains(W({0, 1})));
    CHECK_FALSE(wedge(2, 1)->support().contains(W({1, 1})));
  }
}
