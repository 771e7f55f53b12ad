#include "wnrep/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "wnrep/errors.hpp"

namespace wnrep {

Weight Weight::from_ints(const MultiIndex& v) {
  Weight w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = Scalar(v[i]);
  return w;
}

Weight Weight::unit(std::size_t n, std::size_t i) {
  Weight w(n);
  w[i] = Scalar(1);
  return w;
}

Scalar Weight::total() const {
  Scalar s(0);
  for (const auto& c : coords_) s += c;
  return s;
}

Weight Weight::operator-() const {
  Weight w(*this);
  for (auto& c : w.coords_) c = -c;
  return w;
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.size() != size()) throw DimensionError("weight length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.size() != size()) throw DimensionError("weight length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

std::string Weight::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += coords_[i].str();
  }
  return s + ")";
}

Weight weight_add(const Weight& a, const Weight& b) { return a + b; }

Weight WnRoot::weight() const {
  Weight w = Weight::from_ints(alpha);
  w[static_cast<std::size_t>(j)] -= Scalar(1);
  return w;
}

long WnRoot::degree() const {
  long d = -1;
  for (long a : alpha) d += a;
  return d;
}

std::string WnRoot::str() const {
  std::string s;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    s += "x" + std::to_string(i + 1);
    if (alpha[i] > 1) s += "^" + std::to_string(alpha[i]);
  }
  return s + "d" + std::to_string(j + 1);
}

namespace {

void compositions(int n, long total, MultiIndex& cur, std::size_t pos,
                  std::vector<MultiIndex>& out) {
  if (pos + 1 == static_cast<std::size_t>(n)) {
    cur[pos] = total;
    out.push_back(cur);
    return;
  }
  for (long a = 0; a <= total; ++a) {
    cur[pos] = a;
    compositions(n, total - a, cur, pos + 1, out);
  }
}

}  // namespace

std::vector<WnRoot> wn_roots_up_to(int n, int max_degree) {
  if (n <= 0) throw DimensionError("wn_roots_up_to: n must be positive");
  if (max_degree < -1) throw RangeError("wn_roots_up_to: max degree must be >= -1");
  std::vector<WnRoot> out;
  for (long total = 0; total <= max_degree + 1; ++total) {
    std::vector<MultiIndex> alphas;
    MultiIndex cur(static_cast<std::size_t>(n), 0);
    compositions(n, total, cur, 0, alphas);
    std::sort(alphas.begin(), alphas.end());
    for (const auto& a : alphas)
      for (int j = 0; j < n; ++j) out.push_back({a, j});
  }
  return out;
}

std::string GlRoot::str() const {
  return "e" + std::to_string(i + 1) + "-e" + std::to_string(j + 1);
}

std::vector<GlRoot> gl_roots(int n) {
  std::vector<GlRoot> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) out.push_back({i, j});
  return out;
}

Shadow Shadow::all_finite(int n) {
  Shadow s;
  s.n = n;
  for (const auto& r : gl_roots(n)) s.finite.insert(r);
  return s;
}

bool Shadow::is_partition() const {
  std::size_t total = finite.size() + infinite.size() + plus.size() + minus.size();
  if (total != static_cast<std::size_t>(n * (n - 1))) return false;
  for (const auto& r : gl_roots(n)) {
    int hits = finite.count(r) + infinite.count(r) + plus.count(r) + minus.count(r);
    if (hits != 1) return false;
  }
  for (const auto& r : minus)
    if (!plus.count(r.negated())) return false;
  for (const auto& r : finite)
    if (!finite.count(r.negated())) return false;
  for (const auto& r : infinite)
    if (!infinite.count(r.negated())) return false;
  return true;
}

Shadow shadow_from_isets(int n, const std::set<int>& i_plus, const std::set<int>& i_zero,
                         const std::set<int>& i_minus) {
  for (int k = 0; k < n; ++k) {
    int hits = i_plus.count(k) + i_zero.count(k) + i_minus.count(k);
    if (hits != 1)
      throw ValidationError("I-sets do not partition {1..n} at index " + std::to_string(k + 1));
  }
  for (const auto* s : {&i_plus, &i_zero, &i_minus})
    for (int k : *s)
      if (k < 0 || k >= n) throw ValidationError("I-set index out of range");
  Shadow sh;
  sh.n = n;
  for (const auto& r : gl_roots(n)) {
    const bool ip = i_plus.count(r.i), jp = i_plus.count(r.j);
    const bool im = i_minus.count(r.i), jm = i_minus.count(r.j);
    const bool iz = i_zero.count(r.i), jz = i_zero.count(r.j);
    if (iz && jz) {
      sh.infinite.insert(r);
    } else if ((ip && jp) || (im && jm)) {
      sh.finite.insert(r);
    } else if ((ip && !jp) || (!im && jm)) {
      sh.minus.insert(r);
    } else {
      sh.plus.insert(r);
    }
  }
  return sh;
}

bool finmult_criterion(const Shadow& shadow_p, const Shadow& shadow_v) {
  if (shadow_p.n != shadow_v.n) throw DimensionError("shadow rank mismatch");
  auto allowed = [&](const GlRoot& r) {
    return shadow_v.finite.count(r) || shadow_v.minus.count(r);
  };
  for (const auto& r : shadow_p.infinite)
    if (!allowed(r)) return false;
  for (const auto& r : shadow_p.minus)
    if (!allowed(r)) return false;
  return true;
}

namespace {

/// Integer range with optional infinite ends.
struct IntRange {
  bool has_lo = false, has_hi = false;
  long lo = 0, hi = 0;

  static IntRange for_mode(CoordMode m) {
    IntRange r;
    switch (m) {
      case CoordMode::Point: r = {true, true, 0, 0}; break;
      case CoordMode::NonNeg: r.has_lo = true; break;
      case CoordMode::NonPos: r.has_hi = true; break;
      case CoordMode::Full: break;
    }
    return r;
  }
  void cap_lo(long v) {
    if (!has_lo || v > lo) lo = v;
    has_lo = true;
  }
  void cap_hi(long v) {
    if (!has_hi || v < hi) hi = v;
    has_hi = true;
  }
  bool empty() const { return has_lo && has_hi && lo > hi; }
};

bool in_mode(CoordMode m, const Scalar& offset) {
  if (!offset.is_integer()) return false;
  switch (m) {
    case CoordMode::Point: return offset.is_zero();
    case CoordMode::NonNeg: return offset.sign() >= 0;
    case CoordMode::NonPos: return offset.sign() <= 0;
    case CoordMode::Full: return true;
  }
  return false;
}

/// Is there m with m_i in ranges[i] and sum m_i = target?
bool sum_reachable(const std::vector<IntRange>& ranges, const Scalar& target) {
  if (!target.is_integer()) return false;
  bool lo_finite = true, hi_finite = true;
  Scalar lo(0), hi(0);
  for (const auto& r : ranges) {
    if (r.empty()) return false;
    if (r.has_lo) lo += Scalar(r.lo); else lo_finite = false;
    if (r.has_hi) hi += Scalar(r.hi); else hi_finite = false;
  }
  if (lo_finite && target < lo) return false;
  if (hi_finite && target > hi) return false;
  return true;
}

const char* mode_name(CoordMode m) {
  switch (m) {
    case CoordMode::Point: return "pt";
    case CoordMode::NonNeg: return "Z>=0";
    case CoordMode::NonPos: return "Z<=0";
    case CoordMode::Full: return "Z";
  }
  return "?";
}

}  // namespace

bool ShiftedCone::contains(const Weight& w) const {
  if (w.size() != base.size()) throw DimensionError("support membership: length mismatch");
  for (std::size_t i = 0; i < modes.size(); ++i)
    if (!in_mode(modes[i], w[i] - base[i])) return false;
  return true;
}

ShiftedCone ShiftedCone::negated() const {
  ShiftedCone c{-base, modes};
  for (auto& m : c.modes) {
    if (m == CoordMode::NonNeg) m = CoordMode::NonPos;
    else if (m == CoordMode::NonPos) m = CoordMode::NonNeg;
  }
  return c;
}

std::string ShiftedCone::str() const {
  std::string s = base.str() + "+[";
  for (std::size_t i = 0; i < modes.size(); ++i) {
    if (i) s += ",";
    s += mode_name(modes[i]);
  }
  return s + "]";
}

CoordMode join_modes(CoordMode a, CoordMode b) {
  if (a == CoordMode::Point) return b;
  if (b == CoordMode::Point) return a;
  if (a == CoordMode::Full || b == CoordMode::Full) return CoordMode::Full;
  if (a == b) return a;
  return CoordMode::Full;
}

ShiftedCone cone_sum(const ShiftedCone& a, const ShiftedCone& b) {
  if (a.base.size() != b.base.size()) throw DimensionError("cone sum: length mismatch");
  ShiftedCone c{a.base + b.base, a.modes};
  for (std::size_t i = 0; i < c.modes.size(); ++i) c.modes[i] = join_modes(a.modes[i], b.modes[i]);
  return c;
}

bool LevelCone::contains(const Weight& w) const {
  return w.total() == level && cone.contains(w);
}

bool LevelCone::empty() const {
  std::vector<IntRange> ranges;
  for (auto m : cone.modes) ranges.push_back(IntRange::for_mode(m));
  return !sum_reachable(ranges, level - cone.base.total());
}

bool SupportPiece::contains(const Weight& w) const {
  if (!leveled) return axis.contains(w);
  const auto& lc = *leveled;
  if (w.size() != axis.base.size()) throw DimensionError("support membership: length mismatch");
  // w = axis point + leveled point; m_i is the leveled offset from its base.
  std::vector<IntRange> ranges;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Scalar d = w[i] - axis.base[i] - lc.cone.base[i];
    if (!d.is_integer()) return false;
    long di = d.to_long();
    IntRange r = IntRange::for_mode(lc.cone.modes[i]);
    switch (axis.modes[i]) {
      case CoordMode::Point: r.cap_lo(di); r.cap_hi(di); break;
      case CoordMode::NonNeg: r.cap_hi(di); break;
      case CoordMode::NonPos: r.cap_lo(di); break;
      case CoordMode::Full: break;
    }
    ranges.push_back(r);
  }
  return sum_reachable(ranges, lc.level - lc.cone.base.total());
}

std::string SupportPiece::str() const {
  if (!leveled) return axis.str();
  return axis.str() + " + {" + leveled->cone.str() + " | sum=" + leveled->level.str() + "}";
}

SupportSet::SupportSet(int n, std::vector<SupportPiece> pieces) : n_(n) {
  for (auto& p : pieces) add(std::move(p));
}

SupportSet SupportSet::point(const Weight& w) {
  SupportSet s(static_cast<int>(w.size()));
  s.add({ShiftedCone{w, std::vector<CoordMode>(w.size(), CoordMode::Point)}, std::nullopt});
  return s;
}

SupportSet SupportSet::cone(const ShiftedCone& c) {
  SupportSet s(static_cast<int>(c.base.size()));
  s.add({c, std::nullopt});
  return s;
}

void SupportSet::add(SupportPiece piece) {
  if (static_cast<int>(piece.axis.base.size()) != n_)
    throw DimensionError("support piece has wrong length");
  if (piece.leveled && piece.leveled->empty()) return;
  if (std::find(pieces_.begin(), pieces_.end(), piece) == pieces_.end())
    pieces_.push_back(std::move(piece));
}

SupportSet SupportSet::unite(const SupportSet& other) const {
  if (other.n_ != n_) throw DimensionError("support union: rank mismatch");
  SupportSet s(*this);
  for (const auto& p : other.pieces_) s.add(p);
  return s;
}

SupportSet SupportSet::negated() const {
  SupportSet s(n_);
  for (const auto& p : pieces_) {
    SupportPiece q{p.axis.negated(), std::nullopt};
    if (p.leveled) q.leveled = LevelCone{p.leveled->cone.negated(), -p.leveled->level};
    s.add(std::move(q));
  }
  return s;
}

bool SupportSet::contains(const Weight& w) const {
  if (static_cast<int>(w.size()) != n_) throw DimensionError("support membership: length mismatch");
  for (const auto& p : pieces_)
    if (p.contains(w)) return true;
  return false;
}

std::vector<Weight> SupportSet::cosets() const {
  std::set<Weight> out;
  for (const auto& p : pieces_) {
    Weight b = p.axis.base;
    if (p.leveled) b += p.leveled->cone.base;
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = b[i].frac();
    out.insert(b);
  }
  return {out.begin(), out.end()};
}

std::string SupportSet::str() const {
  if (pieces_.empty()) return "{}";
  std::string s;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i) s += " u ";
    s += pieces_[i].str();
  }
  return s;
}

SupportSet support_sum(const SupportSet& a, const SupportSet& b) {
  if (a.dim() != b.dim()) throw DimensionError("support sum: rank mismatch");
  SupportSet s(a.dim());
  for (const auto& p : a.pieces())
    for (const auto& q : b.pieces()) {
      if (p.leveled && q.leveled)
        throw UnsupportedError("support sum of two Euler-eigenspace supports");
      SupportPiece r{cone_sum(p.axis, q.axis), p.leveled ? p.leveled : q.leveled};
      s.add(std::move(r));
    }
  return s;
}

bool support_contains(const SupportSet& s, const Weight& w) { return s.contains(w); }

Window Window::box(int n, long radius, long margin) {
  if (radius < 0) throw RangeError("window radius must be nonnegative");
  if (margin < 0) throw RangeError("window margin must be nonnegative");
  Window w;
  w.lo.assign(static_cast<std::size_t>(n), Scalar(-radius));
  w.hi.assign(static_cast<std::size_t>(n), Scalar(radius));
  w.margin = margin;
  return w;
}

bool Window::contains(const Weight& w) const {
  if (w.size() != lo.size()) throw DimensionError("window: length mismatch");
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (w[i] < lo[i] || w[i] > hi[i]) return false;
  return true;
}

Window Window::interior() const {
  Window w;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    w.lo.push_back(lo[i] + Scalar(margin));
    w.hi.push_back(hi[i] - Scalar(margin));
  }
  return w;
}

bool Window::interior_contains(const Weight& w) const { return interior().contains(w); }

std::pair<long, long> Window::offsets(std::size_t i, const Scalar& r) const {
  return {(lo[i] - r).ceil(), (hi[i] - r).floor()};
}

std::vector<Weight> Window::coset_points(const Weight& r) const {
  if (r.size() != lo.size()) throw DimensionError("window: length mismatch");
  std::vector<std::pair<long, long>> ranges;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    ranges.push_back(offsets(i, r[i]));
    if (ranges.back().first > ranges.back().second) return {};
  }
  std::vector<Weight> out;
  MultiIndex k(lo.size());
  for (std::size_t i = 0; i < k.size(); ++i) k[i] = ranges[i].first;
  while (true) {
    Weight w = r;
    for (std::size_t i = 0; i < k.size(); ++i) w[i] += Scalar(k[i]);
    out.push_back(std::move(w));
    std::size_t pos = k.size();
    while (pos > 0) {
      --pos;
      if (k[pos] < ranges[pos].second) {
        ++k[pos];
        for (std::size_t q = pos + 1; q < k.size(); ++q) k[q] = ranges[q].first;
        break;
      }
      if (pos == 0) return out;
    }
    if (k.empty()) return out;
  }
}

}  // namespace wnrep
