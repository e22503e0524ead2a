#pragma once

#include <cstddef>
#include <string>

#include "zetacert/constants.hpp"
#include "zetacert/interval.hpp"
#include "zetacert/zeros.hpp"

namespace zetacert {

struct TestFunctionParams {
  Interval alpha;  // log 2 / 6
  double lambda;

  static TestFunctionParams with_lambda(double lambda);
};

// (sin(alpha z)/(alpha z))^3 (1 - z/lambda).
Interval test_function_g(const Interval& z, const TestFunctionParams& params);

// Maximum of the Fourier transform of g, 9/(4 log 2).
Interval g_hat_maximum();

// 1/|rho_1| - sum_{n=2..N} |g(gamma_n - gamma_1)|/|rho_n| - sum_{n=1..N} |g(-gamma_n - gamma_1)|/|rho_n|.
Interval delta_finite(const ZeroTable& table, std::size_t n_zeros, double lambda, const SumOptions& opt = {});

struct LowerBoundCertificate {
  double T = 0;
  double requested_T = 0;
  bool snapped = false;
  double lambda = 0;
  std::size_t zeros_used = 0;
  std::string source;
  Interval delta_finite;
  Interval delta_tail;
  double delta = 0;       // lower bound
  double h_bound = 0;     // lower bound on |H(X)|
  double i_constant = 0;  // lower bound on liminf I(X)/X^2
  bool valid = false;

  std::string serialize() const;
};

LowerBoundCertificate certify_lower_bound(const ZeroTable& table, double T, double lambda,
                                          const SumOptions& opt = {});

}  // namespace zetacert
