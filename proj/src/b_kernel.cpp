// Every operation here runs in round-to-nearest. All quantities are positive,
// so each computed bound is off from the exact value of the same expression by
// a relative factor of at most (1 + u)^k, u = 2^-53. Per term k <= 16 (the
// numerator contributes 4u relative since its absolute error is below 33u and
// it is at least 9; the square root halves the rest). The row sum adds
// gamma_m for m terms. Both are absorbed by one scaling per row.

#include "b_kernel.hpp"

#include <algorithm>
#include <cmath>

namespace zetacert::detail {

namespace {

// |true cos - computed midpoint formula| <= (r_i + r_j) kSlopRel + kSlopAbs.
constexpr double kSlopRel = 1 + 0x1p-20;
constexpr double kSlopAbs = 0x1p-49;
constexpr std::size_t kLanes = 4;

}  // namespace

void BKernelZeros::push(const Interval& g, const Interval& w, const Interval& c, const Interval& s) {
  glo.push_back(g.lo());
  ghi.push_back(g.hi());
  wlo.push_back(w.lo());
  whi.push_back(w.hi());
  cm.push_back(c.mid());
  sm.push_back(s.mid());
  r.push_back(rounding::add_up(c.rad(), s.rad()));
}

Interval b_row(const BKernelZeros& z, std::size_t i, bool with_numerator) {
  const double gl = z.glo[i], gh = z.ghi[i], wl = z.wlo[i], wh = z.whi[i];
  const double ci = z.cm[i], si = z.sm[i], ri = z.r[i];
  const double* glo = z.glo.data();
  const double* ghi = z.ghi.data();
  const double* wlo = z.wlo.data();
  const double* whi = z.whi.data();
  const double* cm = z.cm.data();
  const double* sm = z.sm.data();
  const double* rr = z.r.data();

  double lo[kLanes] = {0, 0, 0, 0};
  double hi[kLanes] = {0, 0, 0, 0};
  auto term = [&](std::size_t j, double& acc_lo, double& acc_hi) {
    double wwl = wl * wlo[j];
    double wwh = wh * whi[j];
    double tml = gl - ghi[j];
    double tmh = gh - glo[j];
    double tpl = gl + glo[j];
    double tph = gh + ghi[j];
    double dml = 4 + tml * tml, dmh = 4 + tmh * tmh;
    double dpl = 4 + tpl * tpl, dph = 4 + tph * tph;
    double nml = 1, nmh = 1, npl = 1, nph = 1;
    if (with_numerator) {
      double cc = ci * cm[j];
      double ss = si * sm[j];
      double e = (ri + rr[j]) * kSlopRel + kSlopAbs;
      double cmn = cc + ss, cpl = cc - ss;
      nml = std::max(17 - 8 * (cmn + e), 9.0);
      nmh = std::min(17 - 8 * (cmn - e), 25.0);
      npl = std::max(17 - 8 * (cpl + e), 9.0);
      nph = std::min(17 - 8 * (cpl - e), 25.0);
    }
    acc_lo += std::sqrt(nml * wwl / dmh) + std::sqrt(npl * wwl / dph);
    acc_hi += std::sqrt(nmh * wwh / dml) + std::sqrt(nph * wwh / dpl);
  };

  std::size_t j = 0;
  for (; j + kLanes <= i; j += kLanes) {
    for (std::size_t k = 0; k < kLanes; ++k) term(j + k, lo[k], hi[k]);
  }
  for (std::size_t k = 0; j < i; ++j, ++k) term(j, lo[k], hi[k]);

  double sl = (lo[0] + lo[1]) + (lo[2] + lo[3]);
  double sh = (hi[0] + hi[1]) + (hi[2] + hi[3]);
  const double slack = static_cast<double>(2 * i + 64) * 0x1p-52;
  return Interval::raw(rounding::mul_down(sl, 1 - slack), rounding::mul_up(sh, 1 + slack));
}

// With theta = g1 -+ g2 the pair bracket is -2 + (5 + 4 g1 g2)/(4 + theta-^2) +
// (5 - 4 g1 g2)/(4 + theta+^2); both fractions are monotone in the endpoints. Signs
// vary, so rounding is covered by an absolute budget: each term is off by at most
// 16u of its magnitude bound m_j and the row sum by i u sum m_j.
Interval c2_row(const BKernelZeros& z, std::size_t i) {
  const double gl = z.glo[i], gh = z.ghi[i], wl = z.wlo[i], wh = z.whi[i];
  const double* glo = z.glo.data();
  const double* ghi = z.ghi.data();
  const double* wlo = z.wlo.data();
  const double* whi = z.whi.data();

  double lo[kLanes] = {0, 0, 0, 0};
  double hi[kLanes] = {0, 0, 0, 0};
  double mag[kLanes] = {0, 0, 0, 0};
  auto term = [&](std::size_t j, double& acc_lo, double& acc_hi, double& acc_mag) {
    double wwl = wl * wlo[j];
    double wwh = wh * whi[j];
    double tml = gl - ghi[j], tmh = gh - glo[j];
    double tpl = gl + glo[j], tph = gh + ghi[j];
    double pl = gl * glo[j], ph = gh * ghi[j];
    double al = (5 + 4 * pl) / (4 + tmh * tmh);
    double ah = (5 + 4 * ph) / (4 + tml * tml);
    double bl = (5 - 4 * ph) / (4 + tpl * tpl);
    double bh = (5 - 4 * pl) / (4 + tph * tph);
    double xl = (al - 2) + bl;
    double xh = (ah - 2) + bh;
    acc_lo += 2 * xl * (xl >= 0 ? wwl : wwh);
    acc_hi += 2 * xh * (xh >= 0 ? wwh : wwl);
    acc_mag += 2 * ((2 + ah) - bl) * wwh;
  };

  std::size_t j = 0;
  for (; j + kLanes <= i; j += kLanes) {
    for (std::size_t k = 0; k < kLanes; ++k) term(j + k, lo[k], hi[k], mag[k]);
  }
  for (std::size_t k = 0; j < i; ++j, ++k) term(j, lo[k], hi[k], mag[k]);

  double sl = (lo[0] + lo[1]) + (lo[2] + lo[3]);
  double sh = (hi[0] + hi[1]) + (hi[2] + hi[3]);
  double m = rounding::mul_up((mag[0] + mag[1]) + (mag[2] + mag[3]), 1 + 0x1p-30);
  double eps = rounding::mul_up(m, static_cast<double>(i + 64) * 0x1p-52);
  return Interval::raw(rounding::sub_down(sl, eps), rounding::add_up(sh, eps));
}

}  // namespace zetacert::detail
