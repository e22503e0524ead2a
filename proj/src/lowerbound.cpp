#include "zetacert/lowerbound.hpp"

#include "zetacert/certificate.hpp"
#include "zetacert/parallel.hpp"
#include "zetacert/tails.hpp"

namespace zetacert {

namespace {

Interval sinc(const Interval& x) {
  if (x.contains(0.0)) {
    // 1 - x^2/6 <= sinc(x) <= 1 for all real x
    Interval drop = sqr(x) / Interval(6);
    return Interval::raw(rounding::sub_down(1, drop.hi()), 1);
  }
  return intersect(sin(x) / x, Interval::raw(-1, 1));
}

Interval reciprocal_modulus(const Interval& g) { return Interval(1) / sqrt(Interval(0.25) + sqr(g)); }

}  // namespace

TestFunctionParams TestFunctionParams::with_lambda(double lambda) {
  if (!(lambda > 0)) throw DomainError("lambda must be positive");
  return {log_two() / Interval(6), lambda};
}

Interval test_function_g(const Interval& z, const TestFunctionParams& params) {
  Interval s = sinc(params.alpha * z);
  return powi(s, 3) * (Interval(1) - z / Interval(params.lambda));
}

Interval g_hat_maximum() { return Interval(9) / (Interval(4) * log_two()); }

Interval delta_finite(const ZeroTable& table, std::size_t n_zeros, double lambda, const SumOptions& opt) {
  if (n_zeros == 0 || n_zeros > table.size()) {
    throw HeightError("delta sum over " + std::to_string(n_zeros) + " zeros, table holds " +
                      std::to_string(table.size()));
  }
  auto params = TestFunctionParams::with_lambda(lambda);
  const Interval g1 = table[0];
  std::size_t block = opt.block == 0 ? 1024 : opt.block;
  std::size_t blocks = (n_zeros + block - 1) / block;
  auto partial = parallel_map<Interval>(blocks, opt.workers, [&](std::size_t b) {
    IntervalAccumulator acc;
    std::size_t end = std::min(n_zeros, (b + 1) * block);
    for (std::size_t n = b * block; n < end; ++n) {
      const Interval& g = table[n];
      Interval r = reciprocal_modulus(g);
      Interval term = abs(test_function_g(-g - g1, params));
      if (n > 0) term += abs(test_function_g(g - g1, params));
      acc.add(term * r);
    }
    return acc.value();
  });
  IntervalAccumulator total;
  for (const auto& p : partial) total.add(p);
  return reciprocal_modulus(g1) - total.value();
}

LowerBoundCertificate certify_lower_bound(const ZeroTable& table, double T, double lambda, const SumOptions& opt) {
  if (!(lambda > 0)) throw DomainError("lambda must be positive");
  const Interval g1 = table[0];
  if (!(T > g1.hi() + lambda)) throw DomainError("delta certificate needs T > gamma1 + lambda");
  if (!(T <= table.max_height())) {
    throw HeightError("height " + std::to_string(T) + " exceeds the zero table ceiling " +
                      std::to_string(table.max_height()));
  }
  LowerBoundCertificate c;
  c.T = c.requested_T = T;
  c.lambda = lambda;
  c.source = table.source_path();
  c.zeros_used = count_zeros(table, T);
  c.delta_finite = delta_finite(table, c.zeros_used, lambda, opt);
  c.delta_tail = delta_tail_bound(T, lambda, g1);
  c.delta = rounding::sub_down(c.delta_finite.lo(), c.delta_tail.hi());
  Interval ghat = g_hat_maximum();
  c.h_bound = c.delta > 0 ? rounding::div_down(c.delta, ghat.hi()) : rounding::div_down(c.delta, ghat.lo());
  c.i_constant = c.h_bound > 0 ? rounding::mul_down(c.h_bound, c.h_bound) : 0;
  c.valid = c.delta > 0 && c.h_bound > 0 && c.i_constant > 0;
  return c;
}

std::string LowerBoundCertificate::serialize() const {
  KeyValueText kv;
  kv.add("name", "delta");
  kv.add_number("T", T);
  if (snapped) kv.add_number("requested_T", requested_T);
  kv.add_number("lambda", lambda);
  kv.add("zeros_used", std::to_string(zeros_used));
  kv.add("source", source);
  kv.add_number("delta_finite_lo", delta_finite.lo());
  kv.add_number("delta_finite_hi", delta_finite.hi());
  kv.add_number("delta_tail_hi", delta_tail.hi());
  kv.add_number("delta_lo", delta);
  kv.add_number("h_bound", h_bound);
  kv.add_number("i_constant", i_constant);
  kv.add("valid", valid ? "true" : "false");
  if (valid) {
    kv.add("claim_delta", "delta ≥ " + format_down(delta));
    kv.add("claim_h", "|H(X)| ≥ " + format_down(h_bound));
    kv.add("claim_i", "liminf I(X)/X^2 ≥ " + format_down(i_constant) + " ≥ 1/" +
                          format_up(rounding::div_up(1, i_constant), 6));
  }
  kv.add("note", "denominators use |rho_n|; |H(X)| to I(X)/X^2 rests on the Stechkin-Popov reduction and Cauchy-Schwarz");
  return kv.str();
}

}  // namespace zetacert
