#include "zetacert/tails.hpp"

#include <cmath>
#include <string>

namespace zetacert {

namespace {

Interval dec(const char* s) { return parse_decimal(s, 0); }

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

Interval sum_over_table(const ZeroTable& table, std::size_t n, Interval (*f)(const Interval&)) {
  IntervalAccumulator acc;
  for (std::size_t i = 0; i < n; ++i) acc.add(f(table[i]));
  return acc.value();
}

Interval recip(const Interval& g) { return Interval(1) / g; }

std::size_t zeros_below(const ZeroTable& table, double T) {
  if (!(T <= table.max_height())) {
    throw HeightError("height " + std::to_string(T) + " exceeds the zero table ceiling " +
                      std::to_string(table.max_height()));
  }
  return count_zeros(table, T);
}

Interval alpha() { return log_two() / Interval(6); }

}  // namespace

TailParams TailParams::at(double T, double A) {
  require(T >= 2 * pi().hi(), "tail parameters need T >= 2 pi");
  return {T, log(Interval(T)), log(Interval(T) / two_pi()), A};
}

Interval log_power_integrals(int k, double T, LogPowerMode mode) {
  require(T >= 1, "log power integrals need T >= 1");
  Interval L = log(Interval(T));
  if (mode == LogPowerMode::over_t2) {
    require(k >= 0 && k <= 3, "over_t2 integrals are defined for k = 0..3");
    Interval I(1);
    for (int j = 1; j <= k; ++j) I = powi(L, j) + Interval(j) * I;
    return I;
  }
  if (k == 1) return (Interval(2) * L + 1) / Interval(4);
  if (k == 2) return (Interval(2) * sqr(L) + Interval(2) * L + 1) / Interval(4);
  throw DomainError("over_t3 integrals are defined for k = 1, 2");
}

Interval tail_moment_bound(int k, double T) {
  Interval L = log(Interval(T));
  Interval denom = two_pi() * Interval(T);
  switch (k) {
    case 0:
      require(T >= kTwoPiE, "sum of 1/gamma^2 above T needs T >= 2 pi e");
      return L / denom;
    case 1:
      require(T >= kFourPiE, "sum of log(gamma/2pi)/gamma^2 above T needs T >= 4 pi e");
      return (sqr(L) - L) / denom;
    case 2:
      require(T >= 100, "sum of log^2(gamma/2pi)/gamma^2 above T needs T >= 100");
      return (powi(L, 3) - dec("1.39") * sqr(L)) / denom;
    default:
      throw DomainError("tail moments are defined for k = 0..2");
  }
}

Interval recip_gamma_partial_bound(double T) {
  require(T >= kFourPiE, "reciprocal ordinate sum bound needs T >= 4 pi e");
  Interval Lhat = log(Interval(T) / two_pi());
  return sqr(Lhat) / (Interval(2) * two_pi());
}

Interval epsilon_threshold(const ZeroTable& table, double T1, double A) {
  require(T1 >= kFourPiE, "epsilon threshold needs T1 >= 4 pi e");
  std::size_t n = zeros_below(table, T1);
  Interval lt = log(Interval(T1));
  Interval Lhat = log(Interval(T1) / two_pi());
  Interval main = sqr(Lhat) / (Interval(2) * two_pi());
  return sum_over_table(table, n, recip) - main + Interval(A) * (Interval(2) * lt + 1) / Interval(T1);
}

Interval h_constant_estimate(const ZeroTable& table, double T) {
  require(T >= kFourPiE, "H estimate needs T >= 4 pi e");
  std::size_t n = zeros_below(table, T);
  Interval Lhat = log(Interval(T) / two_pi());
  return sum_over_table(table, n, recip) - sqr(Lhat) / (Interval(2) * two_pi());
}

Interval b_tail_bound(double T) {
  require(T >= 100, "B tail bound needs T >= 100");
  Interval L = log(Interval(T));
  return (Interval(10) * powi(L, 3) + Interval(11) * sqr(L)) / (sqr(pi()) * Interval(T));
}

Interval inner_abcd_bound(const Interval& gamma1) {
  require(gamma1.lo() >= 100, "inner sum bound needs gamma1 >= 100");
  Interval l = log(gamma1 / two_pi());
  return (sqr(l) + dec("2.46") * l + dec("2.22")) / (pi() * sqr(gamma1));
}

Interval delta_tail_h(const Interval& t, double lambda, const Interval& gamma1) {
  Interval lam(lambda);
  Interval a = alpha();
  Interval minus = t - gamma1;
  Interval plus = t + gamma1;
  Interval first = (minus - lam) / (lam * t * powi(a * minus, 3));
  Interval second = (plus + lam) / (lam * t * powi(a * plus, 3));
  return first + second;
}

Interval delta_tail_bound(double T, double lambda, const Interval& gamma1) {
  require(lambda > 0, "lambda must be positive");
  require(T > gamma1.hi() + lambda && T > kTwoPiE, "delta tail needs T > max(gamma1 + lambda, 2 pi e)");
  const double g = gamma1.hi();
  const double t_cut = std::max(4 * T, 20 * (g + lambda));
  constexpr int kPieces = 1 << 16;
  const Interval two_pi_i = two_pi();
  const Interval c028 = dec("0.28");

  // int_T^Tcut h(t) (log(t/2pi) + 0.28/t) dt as an upper Riemann sum over a geometric grid
  const double ratio = std::pow(t_cut / T, 1.0 / kPieces);
  IntervalAccumulator body;
  double left = T;
  for (int i = 1; i <= kPieces; ++i) {
    double right = i == kPieces ? t_cut : T * std::pow(ratio, i);
    Interval t = Interval::raw(left, right);
    Interval f = delta_tail_h(t, lambda, gamma1) * (log(t / two_pi_i) + c028 / t);
    Interval width = Interval(right) - Interval(left);
    body.add(Interval::raw(0, (f * width).hi()));
    left = right;
  }

  // beyond Tcut: h(t) <= M/(t-g)^3 with M = (2 + (lambda+g)/Tcut)/(lambda alpha^3); then
  // log((u+g)/2pi) + 0.28/(u+g) <= log u - log 2pi + (g + 0.28)/U for u = t - g >= U
  Interval a3 = powi(alpha(), 3);
  Interval M = (Interval(2) + (Interval(lambda) + Interval(g)) / Interval(t_cut)) / (Interval(lambda) * a3);
  Interval U = Interval(t_cut) - Interval(g);
  Interval logU = log(U);
  Interval U2 = sqr(U);
  Interval beyond = M * ((Interval(2) * logU + 1) / (Interval(4) * U2) +
                         (-log(two_pi_i) + (Interval(g) + c028) / U) / (Interval(2) * U2));

  Interval boundary = dec("0.56") * delta_tail_h(Interval(T), lambda, gamma1) * log(Interval(T));
  Interval total = body.value() + beyond + boundary;
  return Interval::raw(0, total.hi());
}

}  // namespace zetacert
