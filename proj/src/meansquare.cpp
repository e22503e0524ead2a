#include "zetacert/meansquare.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "zetacert/parallel.hpp"

namespace zetacert {

namespace {

std::vector<std::uint32_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint8_t> composite(n + 1, 0);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = 1;
  }
  return out;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Lambda(m) for 0 <= m <= n from a plain sieve.
std::vector<DoubleWord> lambda_table(std::uint64_t n) {
  std::vector<DoubleWord> lam(n + 1);
  std::vector<std::uint8_t> composite(n + 1, 0);
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    DoubleWord lp = log_dw(p);
    lam[p] = lp;
    for (std::uint64_t j = p * p; j <= n; j += p) composite[j] = 1;
    for (std::uint64_t q = p; q <= n / p;) {
      q *= p;
      lam[q] = lp;
    }
  }
  return lam;
}

}  // namespace

VonMangoldt von_mangoldt(std::uint64_t n) {
  if (n < 2) return {};
  std::uint64_t p = n;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  std::uint64_t m = n;
  while (m % p == 0) m /= p;
  if (m != 1) return {};
  return {p, true};
}

DoubleWord log_dw(std::uint64_t x) {
  __float128 q = logq(static_cast<__float128>(x));
  double hi = static_cast<double>(q);
  double lo = static_cast<double>(q - static_cast<__float128>(hi));
  return {hi, lo};
}

DoubleWord piece(std::uint64_t n, const DoubleWord& psi_n) {
  DoubleWord d = DoubleWord(static_cast<double>(n)) - psi_n;
  return d * d + d + kOneThird;
}

PsiCursor::PsiCursor(std::uint64_t limit) : limit_(limit) {
  auto primes = primes_up_to(isqrt(limit) + 1);
  base_primes_ = std::move(primes);
  base_logs_.reserve(base_primes_.size());
  for (auto p : base_primes_) base_logs_.push_back(log_dw(p));
}

void PsiCursor::load_window(std::uint64_t w) {
  const std::uint64_t lo = w * kWindow;
  const std::uint64_t hi = lo + kWindow;
  window_lambda_.assign(kWindow, DoubleWord());
  std::vector<std::uint8_t> composite(kWindow, 0);
  if (lo == 0) composite[0] = composite[1] = 1;
  for (auto p32 : base_primes_) {
    std::uint64_t p = p32;
    if (p * p >= hi) break;
    std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
    for (std::uint64_t j = start; j < hi; j += p) composite[j - lo] = 1;
  }
  for (std::uint64_t i = 0; i < kWindow; ++i) {
    if (!composite[i]) window_lambda_[i] = log_dw(lo + i);
  }
  for (std::size_t k = 0; k < base_primes_.size(); ++k) {
    std::uint64_t p = base_primes_[k];
    if (p * p >= hi) break;
    for (std::uint64_t q = p * p;; q *= p) {
      if (q >= lo && q < hi) window_lambda_[q - lo] = base_logs_[k];
      if (q >= hi || q > hi / p) break;
    }
  }
  window_ = w;
}

void PsiCursor::advance_to(std::uint64_t n) {
  if (n > limit_ + 1) throw DomainError("cursor limit " + std::to_string(limit_) + " exceeded");
  if (n < n_) throw DomainError("cursor cannot move backwards");
  while (n_ < n) {
    std::uint64_t w = n_ / kWindow;
    if (w != window_) {
      if (window_ != UINT64_MAX) {
        psi_base_ += psi_local_;
        p_base_ += p_local_;
        psi_local_ = p_local_ = DoubleWord();
      }
      load_window(w);
    }
    std::uint64_t end = std::min(n, (w + 1) * kWindow);
    const std::uint64_t lo = w * kWindow;
    for (; n_ < end; ++n_) {
      psi_local_ += window_lambda_[n_ - lo];
      p_local_ += piece(n_, psi_base_ + psi_local_);
    }
  }
}

DoubleWord PsiCursor::psi_before() const { return psi_base_ + psi_local_; }

DoubleWord PsiCursor::p_value() const { return p_base_ + p_local_; }

DoubleWord psi_prefix(std::uint64_t n) {
  if (n < 2) return {};
  auto lam = lambda_table(n);
  DoubleWord s;
  for (std::uint64_t m = 2; m <= n; ++m) s += lam[m];
  return s;
}

double mean_square_I(std::uint64_t X) {
  if (X < 1) throw DomainError("I(X) needs X >= 1");
  auto lam = lambda_table(2 * X);
  DoubleWord psi;
  DoubleWord sum;
  for (std::uint64_t n = 0; n < 2 * X; ++n) {
    psi += lam[n];
    if (n >= X) sum += piece(n, psi);
  }
  return sum.value();
}

double j_prefix(std::uint64_t X) {
  if (X < 1) throw DomainError("J(X) needs X >= 1");
  PsiCursor c(X);
  c.advance_to(X);
  return c.p_value().value();
}

MeanSquareSummary stream_mean_square(std::uint64_t X_lo, std::uint64_t X_hi, std::uint64_t stride,
                                     const RecordSink& sink, unsigned workers) {
  if (X_lo < 1 || X_hi < X_lo) throw DomainError("mean square range needs 1 <= from <= to");
  if (stride < 1) throw DomainError("stride must be >= 1");
  const std::uint64_t count = (X_hi - X_lo) / stride + 1;
  const std::uint64_t last = X_lo + (count - 1) * stride;
  MeanSquareSummary sum;

  auto run_block = [&](std::uint64_t first, std::uint64_t n, auto&& emit) {
    PsiCursor at_x(last);
    PsiCursor at_2x(2 * last);
    for (std::uint64_t r = 0; r < n; ++r) {
      std::uint64_t X = X_lo + (first + r) * stride;
      at_x.advance_to(X);
      at_2x.advance_to(2 * X);
      double I = (at_2x.p_value() - at_x.p_value()).value();
      double xd = static_cast<double>(X);
      emit(MeanSquareRecord{X, I, I / (xd * xd)});
    }
  };
  auto consume = [&](const MeanSquareRecord& rec) {
    if (sum.count == 0 || rec.I_over_X2 < sum.min_ratio) {
      sum.min_ratio = rec.I_over_X2;
      sum.argmin = rec.X;
    }
    if (sum.count == 0 || rec.I_over_X2 > sum.max_ratio) {
      sum.max_ratio = rec.I_over_X2;
      sum.argmax = rec.X;
    }
    ++sum.count;
    if (sink && !sink(rec)) throw Error("mean square sink stopped the stream");
  };

  if (workers <= 1) {
    run_block(0, count, consume);
    return sum;
  }
  const std::uint64_t blocks = std::min<std::uint64_t>(count, std::uint64_t{workers} * 4);
  const std::uint64_t per = (count + blocks - 1) / blocks;
  for (std::uint64_t wave = 0; wave * per < count; wave += workers) {
    std::uint64_t in_wave = std::min<std::uint64_t>(workers, (count - wave * per + per - 1) / per);
    auto out = parallel_map<std::vector<MeanSquareRecord>>(in_wave, workers, [&](std::size_t b) {
      std::uint64_t first = (wave + b) * per;
      std::uint64_t n = std::min(per, count - first);
      std::vector<MeanSquareRecord> recs;
      recs.reserve(n);
      run_block(first, n, [&](const MeanSquareRecord& r) { recs.push_back(r); });
      return recs;
    });
    for (const auto& recs : out)
      for (const auto& r : recs) consume(r);
  }
  return sum;
}

MeanSquareSeries mean_square_series(std::uint64_t X_lo, std::uint64_t X_hi, std::uint64_t stride, unsigned workers) {
  MeanSquareSeries s;
  s.stride = stride;
  stream_mean_square(
      X_lo, X_hi, stride,
      [&](const MeanSquareRecord& r) {
        s.records.push_back(r);
        return true;
      },
      workers);
  return s;
}

double explicit_formula_residual(double x, const ZeroTable& table, double T) {
  if (!(x > 1) || x == std::floor(x)) throw DomainError("explicit formula needs a non-integer x > 1");
  std::size_t n = count_zeros(table, T);
  double lx = std::log(x);
  double sx = std::sqrt(x);
  double zero_sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double g = table[i].mid();
    zero_sum += sx * (0.5 * std::cos(g * lx) + g * std::sin(g * lx)) / (0.25 + g * g);
  }
  double psi = psi_prefix(static_cast<std::uint64_t>(std::floor(x))).value();
  return psi - x + 2 * zero_sum + std::log(2 * M_PI) + 0.5 * std::log(1 - 1 / (x * x));
}

}  // namespace zetacert
