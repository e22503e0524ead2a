#pragma once

#include <cmath>

namespace zetacert {

// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
struct DoubleWord {
  double hi = 0;
  double lo = 0;

  constexpr DoubleWord() = default;
  constexpr DoubleWord(double h) : hi(h), lo(0) {}  // NOLINT: implicit widening is intended
  constexpr DoubleWord(double h, double l) : hi(h), lo(l) {}

  double value() const { return hi + lo; }
};

namespace dw {

inline DoubleWord two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double e = (a - (s - bb)) + (b - bb);
  return {s, e};
}

inline DoubleWord fast_two_sum(double a, double b) {
  double s = a + b;
  double e = b - (s - a);
  return {s, e};
}

inline DoubleWord add(const DoubleWord& x, const DoubleWord& y) {
  DoubleWord s = two_sum(x.hi, y.hi);
  DoubleWord t = two_sum(x.lo, y.lo);
  double c = s.lo + t.hi;
  DoubleWord v = fast_two_sum(s.hi, c);
  double w = t.lo + v.lo;
  return fast_two_sum(v.hi, w);
}

inline DoubleWord neg(const DoubleWord& x) { return {-x.hi, -x.lo}; }

inline DoubleWord sub(const DoubleWord& x, const DoubleWord& y) { return add(x, neg(y)); }

inline DoubleWord mul(const DoubleWord& x, const DoubleWord& y) {
  double p = x.hi * y.hi;
  double e = std::fma(x.hi, y.hi, -p);
  double t = std::fma(x.hi, y.lo, x.lo * y.hi);
  return fast_two_sum(p, e + t);
}

}  // namespace dw

inline DoubleWord operator+(const DoubleWord& a, const DoubleWord& b) { return dw::add(a, b); }
inline DoubleWord operator-(const DoubleWord& a, const DoubleWord& b) { return dw::sub(a, b); }
inline DoubleWord operator*(const DoubleWord& a, const DoubleWord& b) { return dw::mul(a, b); }
inline DoubleWord& operator+=(DoubleWord& a, const DoubleWord& b) { return a = dw::add(a, b); }
inline bool operator==(const DoubleWord& a, const DoubleWord& b) { return a.hi == b.hi && a.lo == b.lo; }

// 1/3 to about 106 bits.
inline constexpr DoubleWord kOneThird{0x1.5555555555555p-2, 0x1.5555555555555p-56};

}  // namespace zetacert
