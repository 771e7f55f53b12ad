#include "wnrep/weyl.hpp"

#include <tuple>

#include "wnrep/errors.hpp"

namespace wnrep {

WeylElement WeylElement::one(int n) { return scalar(n, Scalar(1)); }

WeylElement WeylElement::scalar(int n, const Scalar& s) {
  return monomial(n, MultiIndex(n, 0), MultiIndex(n, 0), s);
}

WeylElement WeylElement::x(int n, int i, long power) {
  MultiIndex a(n, 0);
  a.at(i) = power;
  return monomial(n, a, MultiIndex(n, 0));
}

WeylElement WeylElement::d(int n, int i, long power) {
  MultiIndex b(n, 0);
  b.at(i) = power;
  return monomial(n, MultiIndex(n, 0), b);
}

WeylElement WeylElement::monomial(int n, MultiIndex a, MultiIndex b, const Scalar& coeff) {
  if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
    throw DimensionError("Weyl monomial exponent length mismatch");
  WeylElement e(n);
  e.terms_.add({std::move(a), std::move(b)}, coeff);
  return e;
}

Weight WeylElement::weight() const {
  Weight w(static_cast<std::size_t>(n_));
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Weight v(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) v[i] = Scalar(m.a[i] - m.b[i]);
    if (!first && v != w) throw ValidationError("Weyl element is not weight-homogeneous");
    w = v;
    first = false;
  }
  return w;
}

std::string WeylElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.str();
    for (int i = 0; i < n_; ++i)
      if (m.a[i]) s += "*x" + std::to_string(i + 1) + "^" + std::to_string(m.a[i]);
    for (int i = 0; i < n_; ++i)
      if (m.b[i]) s += "*d" + std::to_string(i + 1) + "^" + std::to_string(m.b[i]);
  }
  return s;
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  if (o.n_ != n_) throw DimensionError("Weyl element rank mismatch");
  terms_ += o.terms_;
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  if (o.n_ != n_) throw DimensionError("Weyl element rank mismatch");
  terms_ -= o.terms_;
  return *this;
}

namespace {

/// d^b x^c in one variable as a list of (coeff, x-exponent, d-exponent).
std::vector<std::tuple<Scalar, long, long>> reorder(long b, long c) {
  if (b == 0 || c == 0) return {{Scalar(1), c, b}};
  if (b < 0 && c < 0) throw UnsupportedError("normal ordering of d^-k x^-l does not terminate");
  std::vector<std::tuple<Scalar, long, long>> out;
  const long kmax = b > 0 ? b : c;
  for (long k = 0; k <= kmax; ++k) {
    Scalar coef = binomial(Scalar(b), k) * falling(Scalar(c), k);
    if (!coef.is_zero()) out.emplace_back(coef, c - k, b - k);
  }
  return out;
}

}  // namespace

WeylElement operator*(const WeylElement& u, const WeylElement& v) {
  if (u.n_ != v.n_) throw DimensionError("Weyl element rank mismatch");
  const int n = u.n_;
  WeylElement out(n);
  for (const auto& [mu, cu] : u.terms_)
    for (const auto& [mv, cv] : v.terms_) {
      // Expand coordinate by coordinate; coordinates commute with each other.
      std::vector<std::pair<Scalar, WeylMonomial>> partial{
          {cu * cv, WeylMonomial{MultiIndex(n, 0), MultiIndex(n, 0)}}};
      for (int i = 0; i < n; ++i) {
        auto pieces = reorder(mu.b[i], mv.a[i]);
        std::vector<std::pair<Scalar, WeylMonomial>> next;
        for (const auto& [c, m] : partial)
          for (const auto& [pc, xa, db] : pieces) {
            WeylMonomial r = m;
            r.a[i] = mu.a[i] + xa;
            r.b[i] = db + mv.b[i];
            next.emplace_back(c * pc, std::move(r));
          }
        partial = std::move(next);
      }
      for (auto& [c, m] : partial) out.terms_.add(m, c);
    }
  return out;
}

WeylElement ad(const WeylElement& a, const WeylElement& u) { return a * u - u * a; }

WeylElement sigma_F(const WeylElement& u) {
  const int n = u.n();
  WeylElement out(n);
  for (const auto& [m, c] : u.terms()) {
    WeylElement term = WeylElement::scalar(n, c);
    for (int i = 0; i < n; ++i) {
      if (m.a[i] < 0 || m.b[i] < 0)
        throw UnsupportedError("Fourier transform of a localized Weyl element");
      for (long k = 0; k < m.a[i]; ++k) term = term * WeylElement::d(n, i);
    }
    for (int i = 0; i < n; ++i)
      for (long k = 0; k < m.b[i]; ++k) term = term * (Scalar(-1) * WeylElement::x(n, i));
    out += term;
  }
  return out;
}

}  // namespace wnrep
