#pragma once

#include "zetacert/interval.hpp"
#include "zetacert/zeros.hpp"

namespace zetacert {

// The two smallest doubles not below 2 pi e and 4 pi e.
inline constexpr double kTwoPiE = 17.079468445347135;
inline constexpr double kFourPiE = 34.15893689069427;

struct TailParams {
  double T;
  Interval L;     // log T
  Interval Lhat;  // log(T / 2 pi)
  double A = kDefaultCountingConstant;

  static TailParams at(double T, double A = kDefaultCountingConstant);
};

enum class LogPowerMode { over_t2, over_t3 };

// over_t2: T * int_T^inf log^k t / t^2 dt, k = 0..3.
// over_t3: T^2 * int_T^inf log^k t / t^3 dt, k = 1, 2.
Interval log_power_integrals(int k, double T, LogPowerMode mode);

// Upper bound for sum_{gamma > T} log^k(gamma / 2 pi) / gamma^2, k = 0..2.
Interval tail_moment_bound(int k, double T);

// Upper bound for sum_{0 < gamma <= T} 1/gamma.
Interval recip_gamma_partial_bound(double T);

// sum_{gamma <= T1} 1/gamma - log^2(T1/2pi)/(4 pi) + A (2 log T1 + 1)/T1.
Interval epsilon_threshold(const ZeroTable& table, double T1, double A = kDefaultCountingConstant);

// sum_{gamma <= T} 1/gamma - log^2(T/2pi)/(4 pi). Differs from its limit by
// O(log T / T), which is not part of the enclosure.
Interval h_constant_estimate(const ZeroTable& table, double T);

// Truncation error bound (10 L^3 + 11 L^2) / (pi^2 T) for the B series.
Interval b_tail_bound(double T);

// (log^2(g/2pi) + 2.46 log(g/2pi) + 2.22) / (pi g^2), g = gamma1.
Interval inner_abcd_bound(const Interval& gamma1);

// h_lambda(t) for t > gamma1 + lambda: the majorant of
// (|g(t - gamma1)| + |g(-t - gamma1)|) / t.
Interval delta_tail_h(const Interval& t, double lambda, const Interval& gamma1);

// Upper bound for sum_{gamma > T} (|g(gamma - gamma1)| + |g(-gamma - gamma1)|)/|rho|.
Interval delta_tail_bound(double T, double lambda, const Interval& gamma1);

}  // namespace zetacert
