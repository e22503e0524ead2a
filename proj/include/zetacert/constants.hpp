#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zetacert/interval.hpp"
#include "zetacert/zeros.hpp"

namespace zetacert {

struct SumOptions {
  unsigned workers = 1;
  std::size_t block = 1024;  // gamma1 indices per work unit
};

struct BoundCertificate {
  std::string name;
  std::string height_key = "T";
  double height = 0;
  double requested_height = 0;  // before snapping
  bool snapped = false;
  std::optional<double> lambda;
  std::size_t zeros_used = 0;
  std::string source;
  Interval finite_part;
  Interval tail_part;
  double total_lower = 0;
  double total_upper = 0;
  bool has_upper = true;

  std::string serialize() const;
};

// |2^{2+i theta} - 1| / (|rho1| |rho2| |2 + i theta|), theta = gamma1 - gamma2. The
// numerator comes from |2^{2+i theta} - 1|^2 = (4 cos(theta log 2) - 1)^2 +
// 16 sin^2(theta log 2) = 17 - 8 cos(theta log 2).
Interval b_term(const Interval& gamma1, const Interval& gamma2);

// Sum of b_term over all signed pairs with |gamma1|, |gamma2| <= T.
Interval b_finite_sum(const ZeroTable& table, double T, const SumOptions& opt = {});

BoundCertificate b_bounds(const ZeroTable& table, double T, const SumOptions& opt = {});

// The same double sum with numerator 1.
Interval s_kernel_sum(const ZeroTable& table, double T, const SumOptions& opt = {});

// 2(1 + 6 g1 g2 - g1^2 - g2^2) / ((1/4 + g1^2)(1/4 + g2^2)(4 + (g1 - g2)^2)).
Interval c2_term(const Interval& gamma1, const Interval& gamma2);

// Sum of c2_term over 0 < gamma1 <= Y, -Y <= gamma2 <= Y.
Interval s_of_y(const ZeroTable& table, double Y, const SumOptions& opt = {});
BoundCertificate c2_bound(const ZeroTable& table, double Y, const SumOptions& opt = {});

struct Jump {
  Interval total;
  Interval diagonal;
  Interval antidiagonal;
  Interval sum_a;  // gamma2 in (-gamma, 0]
  Interval sum_b;  // gamma2 in (0, (3 - sqrt 8) gamma)
  Interval sum_c;  // gamma2 in [(3 - sqrt 8) gamma, gamma)
};

// Jump of S(Y) at the k-th ordinate, k >= 1.
Jump jump_at(const ZeroTable& table, std::size_t k);

BoundCertificate c1_bound(const ZeroTable& table, double T);
BoundCertificate c3_bound(const ZeroTable& table, double T);

}  // namespace zetacert
