// One line per acceptance criterion; exit status is nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wnrep/descriptor.hpp"
#include "wnrep/duality.hpp"
#include "wnrep/errors.hpp"
#include "wnrep/levi.hpp"
#include "wnrep/localize.hpp"
#include "wnrep/tensormod.hpp"
#include "wnrep/weyl.hpp"

#ifndef WNREP_CLI_PATH
#error "WNREP_CLI_PATH must name the command-line tool"
#endif

using namespace wnrep;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

DModule random_dmodule(int n, std::mt19937_64& rng, int kinds = 4) {
  static const char* lams[] = {"1/2", "1/3", "-2/5", "7/3", "-5/4"};
  std::uniform_int_distribution<int> kind(0, kinds - 1), lam(0, 4);
  std::vector<DFactor> fs;
  for (int i = 0; i < n; ++i) {
    switch (kind(rng)) {
      case 0: fs.push_back(DFactor::poly()); break;
      case 1: fs.push_back(DFactor::fpoly()); break;
      case 2: fs.push_back(DFactor::xl(Scalar::parse(lams[lam(rng)]))); break;
      default: fs.push_back(DFactor::dl(Scalar::parse(lams[lam(rng)]))); break;
    }
  }
  return DModule(fs);
}

DVector random_dvector(const std::vector<MultiIndex>& labels, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  std::uniform_int_distribution<int> coef(-6, 6);
  DVector v;
  for (int t = 0; t < 4; ++t) v.add(labels[pick(rng)], Scalar(coef(rng)));
  return v;
}

Outcome weyl_relations() {
  Outcome o;
  std::mt19937_64 rng(1001);
  const std::vector<DFactor> kinds{DFactor::poly(), DFactor::fpoly(), DFactor::xl(Scalar(1, 2))};
  for (const auto& a : kinds)
    for (const auto& b : kinds) {
      DModule P({a, b});
      auto labels = dmod_labels_in(P, Window::box(2, 5));
      for (int s = 0; s < 100; ++s) {
        DVector v = random_dvector(labels, rng);
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) {
            DVector r = act_gen(P, i, Gen::D, act_gen(P, j, Gen::X, v)) - act_gen(P, j, Gen::X, act_gen(P, i, Gen::D, v));
            if (i == j) r -= v;
            o.require(r.empty(), "[d_i,x_j] on " + P.descriptor());
            o.require((act_gen(P, i, Gen::X, act_gen(P, j, Gen::X, v)) - act_gen(P, j, Gen::X, act_gen(P, i, Gen::X, v))).empty(),
                      "[x_i,x_j] on " + P.descriptor());
            o.require((act_gen(P, i, Gen::D, act_gen(P, j, Gen::D, v)) - act_gen(P, j, Gen::D, act_gen(P, i, Gen::D, v))).empty(),
                      "[d_i,d_j] on " + P.descriptor());
          }
      }
    }
  return o;
}

Outcome bracket_homomorphism() {
  Outcome o;
  std::mt19937_64 rng(1002);
  struct Case {
    const char *P, *V;
  };
  for (const Case& c : {Case{"XL(1/2)", "char(1/3)"}, Case{"O", "sym(2)"}, Case{"O*OF", "wedge(1)"},
                        Case{"XL(1/2)*DL(1/3)", "sym(2)"}, Case{"OF*XL(2/3)", "resD(O*OF;1)"}}) {
    DModule P = parse_dmodule(c.P);
    const int n = P.n();
    TensorModule T(P, parse_glmodule(c.V, n));
    Window w = Window::box(n, 5, 2);
    auto basis = basis_in(T, w.interior());
    auto roots = wn_roots_up_to(n, 2);
    std::uniform_int_distribution<std::size_t> pr(0, roots.size() - 1);
    for (int s = 0; s < 100; ++s) {
      VectorField X = VectorField::root(n, roots[pr(rng)]), Y = VectorField::root(n, roots[pr(rng)]);
      TVector v = random_vector(basis, rng);
      TVector r = act_wn(T, X, act_wn(T, Y, v)) - act_wn(T, Y, act_wn(T, X, v)) - act_wn(T, bracket(X, Y), v);
      o.require(r.empty(), T.descriptor() + " " + X.str() + " " + Y.str());
    }
  }
  return o;
}

Outcome derham_square() {
  Outcome o;
  std::mt19937_64 rng(1003);
  for (int n = 1; n <= 3; ++n)
    for (int t = 0; t < 5; ++t) {
      DModule P = random_dmodule(n, rng);
      Scalar r = derham_complex_residual(P, Window::box(n, 4), 100, rng);
      o.require(r.is_zero(), "d^2 on " + P.descriptor() + " residual " + r.str());
    }
  return o;
}

Outcome finmult_dichotomy(std::string& info) {
  Outcome o;
  TensorModule grow(parse_dmodule("OF*O"), parse_glmodule("resD(O*OF;1)", 2));
  TensorModule flat(parse_dmodule("OF*O"), parse_glmodule("resD(OF*O;1)", 2));
  const Weight mu_g(std::vector<Scalar>{0, 0}), mu_f(std::vector<Scalar>{-2, 2});
  std::vector<long> g, f;
  for (long r : {3, 6, 9}) {
    g.push_back(tmod_mult(grow, mu_g, Window::box(2, r)));
    f.push_back(tmod_mult(flat, mu_f, Window::box(2, r)));
  }
  o.require(!finmult_criterion(dmod_shadow(grow.P()), grow.V()->shadow()), "criterion should fail");
  o.require(finmult_criterion(dmod_shadow(flat.P()), flat.V()->shadow()), "criterion should hold");
  o.require(g[0] < g[1] && g[1] < g[2], "growing counts not strictly increasing");
  o.require(f[0] > 0 && f[0] == f[1] && f[1] == f[2], "flat counts not constant");
  std::ostringstream s;
  s << "counts " << g[0] << "/" << g[1] << "/" << g[2] << " vs " << f[0] << "/" << f[1] << "/" << f[2];
  info = s.str();
  return o;
}

Outcome duality() {
  Outcome o;
  std::mt19937_64 rng(1005);
  for (const char* d : {"O", "XL(1/2)", "OF*XL(1/3)", "DL(1/3)*O"}) {
    DModule P = parse_dmodule(d);
    for (const auto& X : wn_roots_up_to(P.n(), 2))
      o.require(invariance_residual(P, X, 50, rng).is_zero(), std::string("pair invariance ") + d + " " + X.str());
  }
  const std::vector<const char*> vs{"sym(2)", "wedge(1)#char(1/2)", "dual(wedge(1))"};
  for (int t = 0; t < 3; ++t) {
    DModule P = random_dmodule(2, rng);
    TensorModule T(P, parse_glmodule(vs[t], 2));
    for (const auto& X : wn_roots_up_to(2, 2))
      o.require(pairing_tensor_invariance(T, X, 50, rng).is_zero(), "tensor invariance " + T.descriptor());
    TensorModule D = dual_tensor(T);
    Window w = Window::box(2, 5);
    for (const auto& mu : weights_in(T, w))
      o.require(tmod_mult(T, mu, w) == tmod_mult(D, -mu, w), "dim mismatch at " + mu.str() + " for " + T.descriptor());
    for (const auto& mu : weights_in(D, w)) o.require(tmod_mult(T, -mu, w) > 0, "dual weight outside -supp");
  }
  return o;
}

Outcome twisted_localization() {
  Outcome o;
  std::mt19937_64 rng(1006);
  for (const char* c : {"1/2", "-1/3", "2"})
    for (auto [d, a] : {std::pair{"O*XL(1/3)", LocElem::X}, std::pair{"OF*O", LocElem::D}}) {
      DModule P = parse_dmodule(d);
      TwistData t{0, a, Scalar::parse(c)};
      for (int i = 0; i < 2; ++i)
        for (const WeylElement& u : {WeylElement::x(2, i), WeylElement::d(2, i)})
          o.require(twist_action_check(P, t, u, 50, rng).is_zero(), std::string("twist ") + d + " c=" + c);
      DModule there = twisted_localize(P, t);
      DModule back = twisted_localize(there, {0, a, -t.c});
      o.require(back == localize(P, 0, a), "round trip descriptor");
      for (const auto& l : dmod_labels_in(back, Window::box(2, 4)))
        for (int j = 0; j < 2; ++j)
          for (Gen g : {Gen::X, Gen::D}) {
            DModule Qm = localize(P, 0, a);
            o.require(act_gen(back, j, g, DVector(l, Scalar(1))) == act_gen(Qm, j, g, DVector(l, Scalar(1))),
                      "round trip action");
          }
    }
  // Integral exponent: phi_m(u) is conjugation by x^m, checked on window samples of C[x^+-1].
  DModule L({DFactor::xl(Scalar(0))});
  auto labels = dmod_labels_in(L, Window::box(1, 8));
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  for (long m : {2L, -3L}) {
    TwistData t{0, LocElem::X, Scalar(m)};
    for (const WeylElement& u : {WeylElement::d(1, 0), WeylElement::d(1, 0, 2) * WeylElement::x(1, 0)}) {
      WeylElement conj = WeylElement::x(1, 0, m) * u * WeylElement::x(1, 0, -m);
      WeylElement ph = phi(u, t);
      for (int s = 0; s < 50; ++s) {
        DVector v(labels[pick(rng)], Scalar(1));
        o.require(act_weyl(L, ph, v) == act_weyl(L, conj, v), "integral twist differs from conjugation");
      }
    }
  }
  return o;
}

Outcome fourier_square() {
  Outcome o;
  std::mt19937_64 rng(1007);
  for (int t = 0; t < 5; ++t) {
    DModule P = random_dmodule(2, rng);
    o.require(fourier(fourier(P)) == P, "fourier is not an involution on descriptors");
    for (const auto& l : dmod_labels_in(P, Window::box(2, 5)))
      for (int i = 0; i < 2; ++i)
        for (bool is_x : {true, false}) {
          WeylElement u = is_x ? WeylElement::x(2, i) : WeylElement::d(2, i);
          WeylElement u2 = sigma_F(sigma_F(u));
          o.require(u2 == Scalar(-1) * u, "sigma_F^2 on generator");
          DVector e(l, Scalar(1));
          o.require(act_weyl(P, u2, e) == Scalar(-1) * act_weyl(P, u, e), "matrix of sigma_F^2 on " + P.descriptor());
          // The same automorphism seen through fourier(P): u on fourier(P) is sigma_F(u) on P.
          auto [s, nu] = fourier_label(P, l);
          DVector lhs = act_weyl(fourier(P), u, DVector(nu, s));
          DVector rhs;
          for (const auto& [mu, c] : act_weyl(P, sigma_F(u), e)) {
            auto [s2, nu2] = fourier_label(P, mu);
            rhs.add(nu2, s2 * c);
          }
          o.require(lhs == rhs, "fourier intertwiner on " + P.descriptor());
        }
  }
  return o;
}

Outcome closure(std::string& info) {
  Outcome o;
  std::mt19937_64 rng(1008);
  Window w = Window::box(2, 4, 2);
  TensorModule S(parse_dmodule("XL(1/2)*XL(1/3)"), sym(2, 2));
  for (int s = 0; s < 5; ++s) {
    ClosureResult c = submodule_closure(S, {random_weight_vector(S, w, rng)}, w, 2);
    for (const auto& [wt, d] : c.interior_dims) o.require(d == 3, "(a) interior multiplicity below 3 at " + wt.str());
  }
  TensorModule C(parse_dmodule("O*O"), wedge(2, 0));
  ClosureResult k = submodule_closure(C, {TVector({{0, 0}, {0}}, Scalar(1))}, w, 2);
  o.require(k.span_dim == 1, "(b) closure of the constant is larger than the constants");
  DModule P = parse_dmodule("XL(1/2)*XL(1/3)");
  TensorModule A(P, wedge(2, 0)), B(P, wedge(2, 1));
  ClosureResult img = submodule_closure(B, {derham_d(P, 0, random_weight_vector(A, w, rng))}, w, 2);
  for (const auto& [wt, d] : img.interior_dims)
    o.require(d == 1 && img.module_dims.at(wt) == 2, "(c) d-image closure at " + wt.str());
  info = "evidence on radius-4 windows, margin 2";
  return o;
}

Outcome levi(std::string& info) {
  Outcome o;
  std::mt19937_64 rng(1009);
  struct Config {
    int n, p, m;
    const char *P, *V, *S;
  };
  for (const Config& c : {Config{2, 1, 1, "O", "char(0)", "char(1)"}, Config{3, 2, 1, "XL(1/2)", "char(1/3)", "sym(2)"},
                          Config{3, 0, 2, "XL(1/2)*OF", "wedge(1)", "char(1/2)"}}) {
    LeviAlg L(c.n, c.p, c.m);
    FRSModule F(L, TensorModule(parse_dmodule(c.P), parse_glmodule(c.V, c.m)),
                parse_glmodule(c.S, L.k_rank(), L.k_blocks));
    o.require(check_g_axioms(L, F, 50, rng).max().is_zero(), std::string("axioms for ") + c.P + " " + c.S);
  }
  LeviAlg L(2, 1, 1);
  BackToTensorReport r = backtotensor_check(L, parse_dmodule("XL(1/2)"), parse_glmodule("char(1/3)", 1),
                                            parse_glmodule("char(1)", 1), Window::box(2, 4));
  o.require(r.support_contained, "supp F not inside supp T");
  o.require(r.top_matches_support, "top differs from supp F");
  o.require(r.mult_match, "top multiplicities differ");
  o.require(r.degree_formula_checked && r.degree_formula, "dim F^mu differs from dim V * dim S");
  info = std::to_string(r.weights_checked) + " weights checked";
  return o;
}

std::string capture(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw InternalError("cannot start " + cmd);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  pclose(p);
  return out;
}

Outcome cli_determinism() {
  Outcome o;
  const std::string cli = WNREP_CLI_PATH;
  const std::vector<std::string> args{
      "mult --P 'XL(1/2)*XL(1/3)' --V 'wedge(1)' --window 4",
      "dualize --P 'OF*XL(1/3)' --V 'sym(2)' --window 4 --format csv",
      "closure --P 'XL(1/2)*XL(1/3)' --V 'sym(2)' --window 4 --margin 2 --seed 9",
      "levi-check --n 2 --p 1 --m 1 --P 'XL(1/2)' --V 'char(1/3)' --S 'char(1)' --window 4 --seed 3",
      "twist --P 'O*OF' --at 1 --elem x --exp 1/2 --seed 5"};
  for (const auto& a : args) {
    const std::string first = capture("WNREP_THREADS=1 '" + cli + "' " + a);
    o.require(!first.empty(), "no output for " + a);
    for (int run = 0; run < 2; ++run) o.require(capture("WNREP_THREADS=1 '" + cli + "' " + a) == first, "rerun differs: " + a);
    for (int run = 0; run < 3; ++run) o.require(capture("WNREP_THREADS=4 '" + cli + "' " + a) == first, "4 threads differ: " + a);
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome(std::string&)> run;
  };
  auto plain = [](Outcome (*f)()) { return [f](std::string&) { return f(); }; };
  const std::vector<Criterion> criteria{
      {1, "Weyl relations, 9 factor-kind pairs", 5, plain(weyl_relations)},
      {2, "W_n bracket homomorphism", 30, plain(bracket_homomorphism)},
      {3, "de Rham d^2 = 0", 30, plain(derham_square)},
      {4, "finite multiplicity dichotomy", 60, finmult_dichotomy},
      {5, "restricted duality", 30, plain(duality)},
      {6, "twisted localization", 10, plain(twisted_localization)},
      {7, "Fourier square is the sign automorphism", 10, plain(fourier_square)},
      {8, "closure heuristics", 60, closure},
      {9, "Levi axioms and back-to-tensor", 60, levi},
      {10, "CLI determinism", 10, plain(cli_determinism)},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::string info;
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      out = c.run(info);
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (out.ok && secs > c.limit_s) {
      out.ok = false;
      out.detail = "runtime limit exceeded";
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", secs, c.limit_s);
    std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " [" << timing << "]";
    if (!info.empty()) std::cout << " " << info;
    if (!out.ok) std::cout << " -- " << out.detail;
    std::cout << std::endl;
    failed += out.ok ? 0 : 1;
  }
  return failed ? 1 : 0;
}
