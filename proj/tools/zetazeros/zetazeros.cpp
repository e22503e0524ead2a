// zetazeros: computes the ordinates of the first zeros of zeta(1/2 + it) and
// writes them one per line, ascending, in the zero-table text format.
//
// Z(t) = exp(i theta(t)) zeta(1/2 + it) is evaluated with Euler-Maclaurin
// summation below kSwitchHeight and with the Riemann-Siegel formula (remainder
// terms C0..C4) above it. Zeros are isolated block by block between good Gram
// points (Rosser's rule, which holds far beyond the heights this tool is meant
// for); every block must show exactly as many sign changes as Gram intervals,
// otherwise the run aborts. Located sign changes are refined by bracketing in
// 80-bit long double.
//
// This is a fixture generator. The resulting table is an input to the
// certification library, not something the library certifies.

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace {

using real = long double;
using complex = std::complex<real>;

#include "rs_coefficients.inc"

constexpr real kPi = 3.141592653589793238462643383279502884L;
constexpr real kTwoPi = 2 * kPi;
constexpr real kSwitchHeight = 5000;

// B_{2k} for k = 1..15.
constexpr real kBernoulli[] = {
    1.0L / 6,
    -1.0L / 30,
    1.0L / 42,
    -1.0L / 30,
    5.0L / 66,
    -691.0L / 2730,
    7.0L / 6,
    -3617.0L / 510,
    43867.0L / 798,
    -174611.0L / 330,
    854513.0L / 138,
    -236364091.0L / 2730,
    8553103.0L / 6,
    -23749461029.0L / 870,
    8615841276005.0L / 14322,
};
constexpr int kBernoulliCount = sizeof(kBernoulli) / sizeof(kBernoulli[0]);

double reduce_two_pi(real x) {
  constexpr real kInvTwoPi = 1 / kTwoPi;
  auto k = static_cast<long long>(x * kInvTwoPi + (x < 0 ? -0.5L : 0.5L));
  return static_cast<double>(x - static_cast<real>(k) * kTwoPi);
}

double cos_reduced(real x) { return std::cos(reduce_two_pi(x)); }

// Im log Gamma(1/4 + it/2) - (t/2) log pi, by shifting to |w| >= 16 and
// applying Stirling's series.
real theta_loggamma(real t) {
  constexpr int kShift = 16;
  complex z(0.25L, t / 2);
  real arg_sum = 0;
  for (int k = 0; k < kShift; ++k) arg_sum += std::arg(z + static_cast<real>(k));
  complex w = z + static_cast<real>(kShift);
  complex lg = (w - 0.5L) * std::log(w) - w + 0.5L * std::log(kTwoPi);
  complex wpow = w;
  complex w2 = w * w;
  for (int k = 1; k <= 10; ++k) {
    lg += kBernoulli[k - 1] / (static_cast<real>(2 * k) * (2 * k - 1) * wpow);
    wpow *= w2;
  }
  return lg.imag() - arg_sum - t / 2 * std::log(kPi);
}

real theta(real t) {
  if (t < 100) return theta_loggamma(t);
  real inv = 1 / t;
  real inv2 = inv * inv;
  return t / 2 * std::log(t / kTwoPi) - t / 2 - kPi / 8 +
         inv * (1.0L / 48 + inv2 * (7.0L / 5760 + inv2 * (31.0L / 80640 + inv2 * (127.0L / 430080))));
}

real theta_prime(real t) { return 0.5L * std::log(t / kTwoPi); }

struct Tables {
  std::vector<real> log_n;
  std::vector<real> rsqrt_n;
  explicit Tables(int n) : log_n(n + 1), rsqrt_n(n + 1) {
    for (int k = 1; k <= n; ++k) {
      log_n[k] = std::log(static_cast<real>(k));
      rsqrt_n[k] = 1 / std::sqrt(static_cast<real>(k));
    }
  }
};

real z_euler_maclaurin(real t, const Tables& tab) {
  complex s(0.5L, t);
  int n_terms = static_cast<int>(t / 2) + 30;
  double re = 0, im = 0;
  for (int n = 1; n < n_terms; ++n) {
    double phd = reduce_two_pi(t * tab.log_n[n]);
    double w = static_cast<double>(tab.rsqrt_n[n]);
    re += w * std::cos(phd);
    im -= w * std::sin(phd);
  }
  complex sum(re, im);
  real big_n = n_terms;
  real ln_n = tab.log_n[n_terms];
  complex n_minus_s = std::exp(-s * ln_n);
  sum += n_minus_s * big_n / (s - 1.0L);
  sum += 0.5L * n_minus_s;
  // sum_k B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
  complex rising = s;
  complex npow = n_minus_s / big_n;
  real fact = 2;
  for (int k = 1; k <= kBernoulliCount; ++k) {
    sum += kBernoulli[k - 1] / fact * rising * npow;
    rising *= (s + static_cast<real>(2 * k - 1)) * (s + static_cast<real>(2 * k));
    npow /= big_n * big_n;
    fact *= static_cast<real>(2 * k + 1) * (2 * k + 2);
  }
  real th = theta(t);
  complex rot(std::cos(th), std::sin(th));
  return (rot * sum).real();
}

real rs_remainder(int k, real z) {
  real acc = 0;
  for (int n = kRsTerms - 1; n >= 0; --n) acc = acc * z + kRsCoeff[k][n];
  return acc;
}

real z_riemann_siegel(real t, const Tables& tab) {
  real tau = std::sqrt(t / kTwoPi);
  int n_main = static_cast<int>(tau);
  real p = tau - n_main;
  real th = theta(t);
  real sum = 0;
  for (int n = 1; n <= n_main; ++n) sum += tab.rsqrt_n[n] * cos_reduced(th - t * tab.log_n[n]);
  sum *= 2;
  real z = p - 0.5L;
  real inv_tau = 1 / tau;
  real rem = 0;
  for (int k = 4; k >= 0; --k) rem = rem * inv_tau + rs_remainder(k, z);
  rem *= std::sqrt(inv_tau);
  if ((n_main - 1) % 2 != 0) rem = -rem;
  return sum + rem;
}

class HardyZ {
 public:
  explicit HardyZ(real max_height)
      : tab_(std::max(static_cast<int>(kSwitchHeight / 2) + 64,
                      static_cast<int>(std::sqrt(max_height / kTwoPi)) + 8)) {}

  real operator()(real t) const {
    ++evaluations;
    return t < kSwitchHeight ? z_euler_maclaurin(t, tab_) : z_riemann_siegel(t, tab_);
  }

  mutable long long evaluations = 0;

 private:
  Tables tab_;
};

real gram_point(long long n, real guess) {
  real target = static_cast<real>(n) * kPi;
  real g = guess;
  for (int it = 0; it < 60; ++it) {
    real step = (theta(g) - target) / theta_prime(g);
    g -= step;
    if (std::fabs(step) < 1e-17L * g) break;
  }
  return g;
}

struct Sample {
  real t;
  real z;
};

// Illinois-modified regula falsi on a bracketing pair.
real refine(const HardyZ& zfun, Sample a, Sample b) {
  int side = 0;
  for (int it = 0; it < 200; ++it) {
    if (b.t - a.t < 4e-13L) break;
    real c = (a.t * b.z - b.t * a.z) / (b.z - a.z);
    if (!(c > a.t && c < b.t)) c = (a.t + b.t) / 2;
    real fc = zfun(c);
    if (fc == 0) return c;
    if ((fc < 0) == (a.z < 0)) {
      a = {c, fc};
      if (side == -1) b.z /= 2;
      side = -1;
    } else {
      b = {c, fc};
      if (side == 1) a.z /= 2;
      side = 1;
    }
  }
  return (a.t + b.t) / 2;
}

int count_changes(const std::vector<Sample>& s) {
  int c = 0;
  for (size_t i = 1; i < s.size(); ++i)
    if ((s[i - 1].z < 0) != (s[i].z < 0)) ++c;
  return c;
}

// Locates the zeros between two good Gram points; pts holds the Gram points
// from the left good point to the right good point inclusive.
std::vector<real> solve_block(const HardyZ& zfun, std::vector<Sample> pts, long long first_index) {
  int expected = static_cast<int>(pts.size()) - 1;
  for (int depth = 0; count_changes(pts) < expected; ++depth) {
    if (depth > 14) {
      throw std::runtime_error("could not separate zeros in the Gram block starting at index " +
                               std::to_string(first_index));
    }
    std::vector<Sample> finer;
    finer.reserve(pts.size() * 2);
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
      finer.push_back(pts[i]);
      // A pair hides most often where no sign change shows; later passes split everything.
      if (depth >= 6 || (pts[i].z < 0) == (pts[i + 1].z < 0)) {
        real m = (pts[i].t + pts[i + 1].t) / 2;
        finer.push_back({m, zfun(m)});
      }
    }
    finer.push_back(pts.back());
    pts = std::move(finer);
  }
  if (count_changes(pts) > expected) {
    throw std::runtime_error("more sign changes than Gram intervals near index " +
                             std::to_string(first_index));
  }
  std::vector<real> zeros;
  for (size_t i = 1; i < pts.size(); ++i)
    if ((pts[i - 1].z < 0) != (pts[i].z < 0)) zeros.push_back(refine(zfun, pts[i - 1], pts[i]));
  return zeros;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compute zeta zero ordinates into a zero-table file"};
  long long count = 100000;
  double height = 0;
  std::string out_path = "-";
  std::vector<double> eval_points;
  app.add_option("-n,--count", count, "number of zeros to emit");
  app.add_option("--height", height, "emit every zero up to this height instead of a fixed count");
  app.add_option("-o,--out", out_path, "output file, - for stdout");
  app.add_option("--eval", eval_points, "print Z(t) at these points and exit");
  CLI11_PARSE(app, argc, argv);

  real top = height > 0 ? static_cast<real>(height) : 1.2L * (kTwoPi * count / std::log(count + 10.0L)) + 1000;
  HardyZ zfun(top + 5000);

  if (!eval_points.empty()) {
    for (double t : eval_points) std::printf("%.17g %.21Lg %.21Lg\n", t, zfun(static_cast<real>(t)), theta(t));
    return 0;
  }

  std::FILE* out = out_path == "-" ? stdout : std::fopen(out_path.c_str(), "w");
  if (!out) {
    std::fprintf(stderr, "cannot open %s\n", out_path.c_str());
    return 2;
  }
  std::fprintf(out, "# zeta zero ordinates, 1/2 + i*gamma, gamma ascending\n");
  std::fprintf(out, "# computed with Riemann-Siegel/Euler-Maclaurin in 80-bit precision\n");

  long long emitted = 0;
  bool done = false;
  long long n = -1;
  real g = gram_point(-1, 9.67L);
  Sample prev{g, zfun(g)};
  if (!(prev.z < 0)) {
    std::fprintf(stderr, "g_{-1} is not a good Gram point\n");
    return 1;
  }
  std::vector<Sample> block{prev};
  long long block_start = n;
  try {
    while (!done) {
      ++n;
      g = gram_point(n, g + kPi / theta_prime(g));
      Sample s{g, zfun(g)};
      block.push_back(s);
      bool good = (n % 2 == 0) ? s.z > 0 : s.z < 0;
      if (!good) continue;
      for (real zero : solve_block(zfun, block, block_start)) {
        bool within = height > 0 ? zero <= static_cast<real>(height) : emitted < count;
        if (!within) {
          done = true;
          break;
        }
        std::fprintf(out, "%.12Lf\n", zero);
        ++emitted;
      }
      block.assign(1, s);
      block_start = n;
      if (height <= 0 && emitted >= count) done = true;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "zetazeros: %s\n", e.what());
    return 1;
  }
  if (out != stdout) std::fclose(out);
  std::fprintf(stderr, "zetazeros: %lld zeros, %lld evaluations of Z\n", emitted, zfun.evaluations);
  return 0;
}
