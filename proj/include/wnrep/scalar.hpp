#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace wnrep {

/// Exact rational number in canonical form (positive denominator, reduced).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p", "-p" or "p/q".
  static Scalar parse(std::string_view text);

  const mpq_class& raw() const noexcept { return v_; }

  bool is_zero() const noexcept { return sgn(v_) == 0; }
  bool is_integer() const;
  int sign() const noexcept { return sgn(v_); }
  /// Largest integer not exceeding this value. Throws if it does not fit a long.
  long floor() const;
  long ceil() const;
  /// Integer value; throws RangeError if not integral or out of range.
  long to_long() const;
  Scalar abs() const;
  Scalar inverse() const;
  /// Representative of this value modulo 1 in [0,1).
  Scalar frac() const;

  std::string str() const;

  Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
  Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
  Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(mpq_class(-v_)); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  mpq_class v_;
};

/// c (c-1) ... (c-k+1) / k!
Scalar binomial(const Scalar& c, long k);
/// c (c-1) ... (c-k+1)
Scalar falling(const Scalar& c, long k);

}  // namespace wnrep

template <>
struct std::hash<wnrep::Scalar> {
  std::size_t operator()(const wnrep::Scalar& s) const noexcept {
    return std::hash<std::string>{}(s.str());
  }
};
