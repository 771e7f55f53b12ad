#include "wnrep/lp.hpp"

#include <algorithm>

#include "wnrep/errors.hpp"

namespace wnrep {

namespace {

bool same_row(const LinIneq& x, const LinIneq& y) { return x.a == y.a && x.b == y.b; }

/// Scale so the first nonzero coefficient has absolute value 1; keeps duplicates detectable.
LinIneq normalized(LinIneq r) {
  for (const auto& v : r.a) {
    if (v.is_zero()) continue;
    Scalar s = v.abs().inverse();
    for (auto& w : r.a) w *= s;
    r.b *= s;
    break;
  }
  return r;
}

void push_unique(std::vector<LinIneq>& rows, LinIneq r) {
  r = normalized(std::move(r));
  for (const auto& q : rows)
    if (same_row(q, r)) return;
  rows.push_back(std::move(r));
}

}  // namespace

LpResult lp_sup(std::size_t nvars, const std::vector<LinIneq>& rows, const std::vector<Scalar>& c) {
  if (c.size() != nvars) throw DimensionError("lp_sup: objective length mismatch");
  // Variable nvars is t with t - c.x <= 0; eliminate x_0..x_{n-1}, then read bounds on t.
  std::vector<LinIneq> sys;
  for (const auto& r : rows) {
    if (r.a.size() != nvars) throw DimensionError("lp_sup: row length mismatch");
    LinIneq e{r.a, r.b};
    e.a.push_back(Scalar(0));
    push_unique(sys, std::move(e));
  }
  LinIneq obj{std::vector<Scalar>(nvars + 1), Scalar(0)};
  for (std::size_t i = 0; i < nvars; ++i) obj.a[i] = -c[i];
  obj.a[nvars] = Scalar(1);
  push_unique(sys, std::move(obj));

  for (std::size_t v = 0; v < nvars; ++v) {
    std::vector<LinIneq> pos, neg, rest;
    for (auto& r : sys) {
      int s = r.a[v].sign();
      (s > 0 ? pos : s < 0 ? neg : rest).push_back(std::move(r));
    }
    sys = std::move(rest);
    for (const auto& p : pos)
      for (const auto& q : neg) {
        Scalar wp = -q.a[v], wq = p.a[v];
        LinIneq r{std::vector<Scalar>(nvars + 1), p.b * wp + q.b * wq};
        for (std::size_t k = 0; k <= nvars; ++k) r.a[k] = p.a[k] * wp + q.a[k] * wq;
        r.a[v] = Scalar(0);
        push_unique(sys, std::move(r));
      }
  }

  LpResult res;
  bool has_upper = false;
  Scalar upper;
  for (const auto& r : sys) {
    const Scalar& t = r.a[nvars];
    if (t.is_zero()) {
      if (r.b.sign() < 0) return res;  // 0 <= negative: infeasible
    } else if (t.sign() > 0) {
      Scalar u = r.b / t;
      if (!has_upper || u < upper) upper = u;
      has_upper = true;
    }
    // Lower bounds on t only restate feasibility of t = c.x; t is otherwise free below.
  }
  res.feasible = true;
  res.unbounded = !has_upper;
  if (has_upper) res.value = upper;
  return res;
}

}  // namespace wnrep
