#pragma once

// Outward-rounded interval arithmetic on IEEE doubles.
//
// Basic operations take the round-to-nearest result and use an error-free
// transformation (TwoSum, FMA residual) to see on which side the exact value
// lies; the endpoint moves one ulp outward only when needed. log, sin and cos
// come from libm and are widened by two ulps.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string_view>

#include "zetacert/errors.hpp"

namespace zetacert {

namespace rounding {

inline double next_up(double x) noexcept {
  if (!(x < std::numeric_limits<double>::infinity())) return x;
  if (x == 0) return std::numeric_limits<double>::denorm_min();
  auto bits = std::bit_cast<std::uint64_t>(x);
  bits = x > 0 ? bits + 1 : bits - 1;
  return std::bit_cast<double>(bits);
}

inline double next_down(double x) noexcept { return -next_up(-x); }

inline double add_down(double a, double b) noexcept {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  if (!std::isfinite(s)) return s == std::numeric_limits<double>::infinity() && std::isfinite(a) && std::isfinite(b)
                                    ? std::numeric_limits<double>::max()
                                    : s;
  return err < 0 ? next_down(s) : s;
}

inline double add_up(double a, double b) noexcept { return -add_down(-a, -b); }

inline double sub_down(double a, double b) noexcept { return add_down(a, -b); }
inline double sub_up(double a, double b) noexcept { return add_up(a, -b); }

// The FMA residual is exact unless the product is close to underflow, where we
// fall back to an unconditional step.
inline constexpr double kTinyProduct = 0x1p-960;

inline double mul_down(double a, double b) noexcept {
  double p = a * b;
  if (!std::isfinite(p)) {
    return p == std::numeric_limits<double>::infinity() && std::isfinite(a) && std::isfinite(b)
               ? std::numeric_limits<double>::max()
               : p;
  }
  if (std::fabs(p) < kTinyProduct) return next_down(p);
  return std::fma(a, b, -p) < 0 ? next_down(p) : p;
}

inline double mul_up(double a, double b) noexcept { return -mul_down(-a, b); }

inline double div_down(double a, double b) noexcept {
  double q = a / b;
  if (!std::isfinite(q)) {
    return q == std::numeric_limits<double>::infinity() && std::isfinite(a) ? std::numeric_limits<double>::max() : q;
  }
  if (std::fabs(q) < kTinyProduct || std::fabs(a) < kTinyProduct) return next_down(q);
  double r = std::fma(-q, b, a);  // a - q*b, exact
  if (r == 0) return q;
  // exact quotient minus q has the sign of r/b
  return ((r < 0) != (b < 0)) ? next_down(q) : q;
}

inline double div_up(double a, double b) noexcept { return -div_down(-a, b); }

inline double sqrt_down(double x) noexcept {
  double s = std::sqrt(x);
  if (s == 0 || !std::isfinite(s)) return s;
  return std::fma(-s, s, x) < 0 ? next_down(s) : s;
}

inline double sqrt_up(double x) noexcept {
  double s = std::sqrt(x);
  if (!std::isfinite(s)) return s;
  return std::fma(-s, s, x) > 0 ? next_up(s) : s;
}

inline double down2(double x) noexcept { return next_down(next_down(x)); }
inline double up2(double x) noexcept { return next_up(next_up(x)); }

}  // namespace rounding

class Interval {
 public:
  constexpr Interval() noexcept = default;
  constexpr explicit Interval(double x) noexcept : lo_(x), hi_(x) {}

  // Throws DomainError unless lo <= hi (NaN endpoints are rejected).
  Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo <= hi)) throw DomainError("interval with lo > hi or NaN endpoint");
  }

  // For kernels that have already established lo <= hi.
  static constexpr Interval raw(double lo, double hi) noexcept {
    Interval r;
    r.lo_ = lo;
    r.hi_ = hi;
    return r;
  }

  constexpr double lo() const noexcept { return lo_; }
  constexpr double hi() const noexcept { return hi_; }
  double mid() const noexcept { return lo_ + (hi_ - lo_) / 2; }
  // Upper bound on the distance from mid() to either endpoint.
  double rad() const noexcept {
    double m = mid();
    return std::max(rounding::sub_up(m, lo_), rounding::sub_up(hi_, m));
  }
  double width() const noexcept { return rounding::sub_up(hi_, lo_); }

  constexpr bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }
  constexpr bool contains(const Interval& o) const noexcept { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  constexpr bool overlaps(const Interval& o) const noexcept { return lo_ <= o.hi_ && o.lo_ <= hi_; }
  constexpr bool is_point() const noexcept { return lo_ == hi_; }
  bool is_finite() const noexcept { return std::isfinite(lo_) && std::isfinite(hi_); }

  // Every element of *this is strictly below every element of o.
  constexpr bool certainly_below(const Interval& o) const noexcept { return hi_ < o.lo_; }
  constexpr bool certainly_below(double x) const noexcept { return hi_ < x; }
  constexpr bool certainly_above(double x) const noexcept { return lo_ > x; }

  friend constexpr bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_ = 0;
  double hi_ = 0;
};

inline Interval operator-(const Interval& a) noexcept { return Interval::raw(-a.hi(), -a.lo()); }

inline Interval operator+(const Interval& a, const Interval& b) noexcept {
  return Interval::raw(rounding::add_down(a.lo(), b.lo()), rounding::add_up(a.hi(), b.hi()));
}

inline Interval operator-(const Interval& a, const Interval& b) noexcept {
  return Interval::raw(rounding::sub_down(a.lo(), b.hi()), rounding::sub_up(a.hi(), b.lo()));
}

inline Interval operator*(const Interval& a, const Interval& b) noexcept {
  using namespace rounding;
  if (a.lo() >= 0 && b.lo() >= 0) return Interval::raw(mul_down(a.lo(), b.lo()), mul_up(a.hi(), b.hi()));
  if (a.hi() <= 0 && b.hi() <= 0) return Interval::raw(mul_down(a.hi(), b.hi()), mul_up(a.lo(), b.lo()));
  if (a.lo() >= 0 && b.hi() <= 0) return Interval::raw(mul_down(a.hi(), b.lo()), mul_up(a.lo(), b.hi()));
  if (a.hi() <= 0 && b.lo() >= 0) return Interval::raw(mul_down(a.lo(), b.hi()), mul_up(a.hi(), b.lo()));
  double lo = std::min({mul_down(a.lo(), b.lo()), mul_down(a.lo(), b.hi()), mul_down(a.hi(), b.lo()),
                        mul_down(a.hi(), b.hi())});
  double hi = std::max({mul_up(a.lo(), b.lo()), mul_up(a.lo(), b.hi()), mul_up(a.hi(), b.lo()),
                        mul_up(a.hi(), b.hi())});
  return Interval::raw(lo, hi);
}

// Throws DomainError if b contains zero.
Interval operator/(const Interval& a, const Interval& b);

inline Interval operator+(const Interval& a, double b) noexcept { return a + Interval(b); }
inline Interval operator+(double a, const Interval& b) noexcept { return Interval(a) + b; }
inline Interval operator-(const Interval& a, double b) noexcept { return a - Interval(b); }
inline Interval operator-(double a, const Interval& b) noexcept { return Interval(a) - b; }
inline Interval operator*(const Interval& a, double b) noexcept { return a * Interval(b); }
inline Interval operator*(double a, const Interval& b) noexcept { return Interval(a) * b; }
inline Interval operator/(const Interval& a, double b) { return a / Interval(b); }
inline Interval operator/(double a, const Interval& b) { return Interval(a) / b; }

inline Interval& operator+=(Interval& a, const Interval& b) noexcept { return a = a + b; }
inline Interval& operator-=(Interval& a, const Interval& b) noexcept { return a = a - b; }
inline Interval& operator*=(Interval& a, const Interval& b) noexcept { return a = a * b; }

inline Interval hull(const Interval& a, const Interval& b) noexcept {
  return Interval::raw(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

// Throws DomainError when the intersection is empty.
Interval intersect(const Interval& a, const Interval& b);

inline Interval abs(const Interval& a) noexcept {
  if (a.lo() >= 0) return a;
  if (a.hi() <= 0) return -a;
  return Interval::raw(0, std::max(-a.lo(), a.hi()));
}

inline Interval sqr(const Interval& a) noexcept {
  Interval m = abs(a);
  return Interval::raw(rounding::mul_down(m.lo(), m.lo()), rounding::mul_up(m.hi(), m.hi()));
}

// Requires a.lo() >= 0.
Interval sqrt(const Interval& a);
// Requires a.lo() > 0.
Interval log(const Interval& a);
// Arguments with magnitude above kMaxTrigArgument are rejected.
Interval sin(const Interval& a);
Interval cos(const Interval& a);
Interval powi(const Interval& a, int n);

inline constexpr double kMaxTrigArgument = 1e7;

// Enclosures of the constants the library needs; each is at most one ulp wide.
Interval pi();
Interval two_pi();
Interval log_two();
Interval euler_e();

// Decimal string plus stated accuracy radius -> enclosure (make_interval).
// Throws ParseError on anything but an optional sign, digits with at most one
// decimal point, and an optional exponent.
Interval parse_decimal(std::string_view text, double radius);

// Running outward-rounded sum.
class IntervalAccumulator {
 public:
  void add(const Interval& x) noexcept {
    lo_ = rounding::add_down(lo_, x.lo());
    hi_ = rounding::add_up(hi_, x.hi());
  }
  Interval value() const noexcept { return Interval::raw(lo_, hi_); }

 private:
  double lo_ = 0;
  double hi_ = 0;
};

struct SumPolicy {
  // 0 means one sequential pass; otherwise partial sums over consecutive
  // chunks of this many terms, combined in index order.
  std::size_t chunk = 0;
  unsigned workers = 1;

  static SumPolicy sequential() { return {}; }
  static SumPolicy chunked(std::size_t k, unsigned workers = 1) { return {k, workers}; }
};

// The result depends on the policy's chunk size but never on its worker count.
Interval sum_enclosure(std::span<const Interval> terms, SumPolicy policy = {});

}  // namespace zetacert
