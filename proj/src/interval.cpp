#include "zetacert/interval.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <string>

#include "zetacert/parallel.hpp"

namespace zetacert {

using namespace rounding;

namespace {

// pi/2 = kHalfPi1 + kHalfPi2 + (something in kHalfPi3); the first two parts
// carry 28 significant bits so that k * part is exact for |k| < 2^25.
constexpr double kHalfPi1 = 0x1.921fb54000000p+0;
constexpr double kHalfPi2 = 0x1.10b4610000000p-30;
constexpr double kHalfPi3Lo = 0x1.a62633145c06ep-58;
constexpr double kHalfPi3Hi = 0x1.a62633145c06fp-58;
constexpr double kTwoOverPi = 0x1.45f306dc9c883p-1;

struct Reduced {
  long long k;  // x = k*pi/2 + r
  Interval r;
};

Reduced reduce(double x) {
  if (!(std::fabs(x) <= kMaxTrigArgument)) {
    throw DomainError("trigonometric argument " + std::to_string(x) + " exceeds trusted range 1e7");
  }
  double kd = std::nearbyint(x * kTwoOverPi);
  Interval r = Interval(x) - Interval(kd) * Interval(kHalfPi1);
  r -= Interval(kd) * Interval(kHalfPi2);
  r -= Interval(kd) * Interval::raw(kHalfPi3Lo, kHalfPi3Hi);
  return {static_cast<long long>(kd), r};
}

// |r| < pi/2 here, where sin is increasing and cos is positive.
Interval sin_reduced(const Interval& r) {
  double lo = r.lo() == 0 ? 0 : down2(std::sin(r.lo()));
  double hi = r.hi() == 0 ? 0 : up2(std::sin(r.hi()));
  return Interval::raw(std::max(lo, -1.0), std::min(hi, 1.0));
}

Interval cos_reduced(const Interval& r) {
  double clo = std::cos(r.lo());
  double chi = std::cos(r.hi());
  double lo = down2(std::min(clo, chi));
  double hi = (r.lo() <= 0 && r.hi() >= 0) ? 1.0 : up2(std::max(clo, chi));
  return Interval::raw(std::max(lo, -1.0), std::min(hi, 1.0));
}

int mod4(long long k) { return static_cast<int>(((k % 4) + 4) % 4); }

// sin(k pi/2 + r) for the given quadrant.
Interval sin_point(const Reduced& red) {
  switch (mod4(red.k)) {
    case 0: return sin_reduced(red.r);
    case 1: return cos_reduced(red.r);
    case 2: return -sin_reduced(red.r);
    default: return -cos_reduced(red.r);
  }
}

Interval cos_point(const Reduced& red) {
  switch (mod4(red.k)) {
    case 0: return cos_reduced(red.r);
    case 1: return -sin_reduced(red.r);
    case 2: return -cos_reduced(red.r);
    default: return sin_reduced(red.r);
  }
}

// plus_residue / minus_residue: q mod 4 at which the function reaches +1 / -1.
template <class PointFn>
Interval trig(const Interval& a, PointFn point, int plus_residue, int minus_residue) {
  if (!(std::fabs(a.lo()) <= kMaxTrigArgument && std::fabs(a.hi()) <= kMaxTrigArgument)) {
    throw DomainError("trigonometric argument exceeds trusted range 1e7");
  }
  if (a.hi() - a.lo() >= 6.3) return Interval::raw(-1, 1);
  Reduced ra = reduce(a.lo());
  Reduced rb = reduce(a.hi());
  Interval out = hull(point(ra), point(rb));
  // multiples q*pi/2 that may lie in [a.lo, a.hi]
  long long q_first = ra.k + (ra.r.lo() <= 0 ? 0 : 1);
  long long q_last = rb.k - (rb.r.hi() >= 0 ? 0 : 1);
  double lo = out.lo();
  double hi = out.hi();
  for (long long q = q_first; q <= q_last; ++q) {
    int m = mod4(q);
    if (m == plus_residue) hi = 1;
    if (m == minus_residue) lo = -1;
  }
  return Interval::raw(std::max(lo, -1.0), std::min(hi, 1.0));
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo() <= 0 && b.hi() >= 0) throw DomainError("division by an interval containing zero");
  if (b.lo() > 0) {
    double lo = a.lo() >= 0 ? div_down(a.lo(), b.hi()) : div_down(a.lo(), b.lo());
    double hi = a.hi() >= 0 ? div_up(a.hi(), b.lo()) : div_up(a.hi(), b.hi());
    return Interval::raw(lo, hi);
  }
  double lo = a.hi() >= 0 ? div_down(a.hi(), b.hi()) : div_down(a.hi(), b.lo());
  double hi = a.lo() >= 0 ? div_up(a.lo(), b.lo()) : div_up(a.lo(), b.hi());
  return Interval::raw(lo, hi);
}

Interval intersect(const Interval& a, const Interval& b) {
  double lo = std::max(a.lo(), b.lo());
  double hi = std::min(a.hi(), b.hi());
  if (!(lo <= hi)) throw DomainError("empty intersection");
  return Interval::raw(lo, hi);
}

Interval sqrt(const Interval& a) {
  if (!(a.lo() >= 0)) throw DomainError("sqrt of an interval with negative part");
  return Interval::raw(sqrt_down(a.lo()), sqrt_up(a.hi()));
}

Interval log(const Interval& a) {
  if (!(a.lo() > 0)) throw DomainError("log of an interval that is not strictly positive");
  double lo = a.lo() == 1 ? 0 : down2(std::log(a.lo()));
  double hi = a.hi() == 1 ? 0 : up2(std::log(a.hi()));
  return Interval::raw(lo, hi);
}

Interval sin(const Interval& a) { return trig(a, sin_point, 1, 3); }

Interval cos(const Interval& a) { return trig(a, cos_point, 0, 2); }

Interval powi(const Interval& a, int n) {
  if (n < 0) return Interval(1) / powi(a, -n);
  if (n == 0) return Interval(1);
  Interval base = (n % 2 == 0) ? abs(a) : a;
  if (n % 2 == 0 || base.lo() >= 0 || base.hi() <= 0) {
    // x^n is monotone on a sign-definite base, so powering the endpoints is tight
    bool negative = base.hi() <= 0 && base.lo() < 0;
    Interval m = negative ? -base : base;
    Interval result(1);
    Interval sq = m;
    for (int e = n; e > 0; e >>= 1) {
      if (e & 1) result *= sq;
      if (e > 1) sq = sqr(sq);
    }
    return negative ? -result : result;
  }
  // odd power across zero: monotone, so evaluate the two halves separately
  Interval neg = powi(Interval::raw(base.lo(), 0), n);
  Interval pos = powi(Interval::raw(0, base.hi()), n);
  return hull(neg, pos);
}

Interval pi() { return Interval::raw(0x1.921fb54442d18p+1, 0x1.921fb54442d19p+1); }

Interval two_pi() { return Interval::raw(0x1.921fb54442d18p+2, 0x1.921fb54442d19p+2); }

Interval log_two() { return Interval::raw(0x1.62e42fefa39efp-1, 0x1.62e42fefa39f0p-1); }

Interval euler_e() { return Interval::raw(0x1.5bf0a8b145769p+1, 0x1.5bf0a8b14576ap+1); }

Interval parse_decimal(std::string_view text, double radius) {
  if (!(radius >= 0) || !std::isfinite(radius)) throw DomainError("radius must be a finite nonnegative number");
  std::size_t i = 0;
  const std::size_t n = text.size();
  if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t digits = 0;
  std::size_t frac_digits = 0;
  bool nonzero = false;
  while (i < n && is_digit(text[i])) {
    nonzero |= text[i] != '0';
    ++i;
    ++digits;
  }
  if (i < n && text[i] == '.') {
    ++i;
    while (i < n && is_digit(text[i])) {
      nonzero |= text[i] != '0';
      ++i;
      ++digits;
      ++frac_digits;
    }
  }
  if (digits == 0) throw ParseError("malformed decimal '" + std::string(text) + "'");
  bool has_exponent = false;
  if (i < n && (text[i] == 'e' || text[i] == 'E')) {
    has_exponent = true;
    ++i;
    if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t exp_digits = 0;
    while (i < n && is_digit(text[i])) {
      ++i;
      ++exp_digits;
    }
    if (exp_digits == 0) throw ParseError("malformed exponent in '" + std::string(text) + "'");
  }
  if (i != n) throw ParseError("malformed decimal '" + std::string(text) + "'");

  std::string buf(text);
  errno = 0;
  double v = std::strtod(buf.c_str(), nullptr);
  if (!std::isfinite(v) || (errno == ERANGE && nonzero)) {
    throw ParseError("decimal '" + buf + "' is not representable as a finite double");
  }
  Interval point;
  if (!nonzero) {
    point = Interval(0.0);
  } else if (!has_exponent && frac_digits == 0 && digits <= 15) {
    point = Interval(v);  // small integers are exact
  } else {
    point = Interval::raw(next_down(v), next_up(v));
  }
  if (radius == 0) return point;
  return Interval::raw(sub_down(point.lo(), radius), add_up(point.hi(), radius));
}

Interval sum_enclosure(std::span<const Interval> terms, SumPolicy policy) {
  if (policy.chunk == 0) {
    IntervalAccumulator acc;
    for (const auto& t : terms) acc.add(t);
    return acc.value();
  }
  std::size_t chunks = (terms.size() + policy.chunk - 1) / policy.chunk;
  auto partial = parallel_map<Interval>(chunks, policy.workers, [&](std::size_t c) {
    IntervalAccumulator acc;
    std::size_t end = std::min(terms.size(), (c + 1) * policy.chunk);
    for (std::size_t i = c * policy.chunk; i < end; ++i) acc.add(terms[i]);
    return acc.value();
  });
  IntervalAccumulator total;
  for (const auto& p : partial) total.add(p);
  return total.value();
}

unsigned default_workers() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace zetacert
