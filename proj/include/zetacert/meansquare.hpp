#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "zetacert/double_word.hpp"
#include "zetacert/zeros.hpp"

namespace zetacert {

// Lambda(n) = log p when n = p^k, else 0. `p` is 0 when n is not a prime power.
struct VonMangoldt {
  std::uint64_t p = 0;
  bool prime_power = false;
};

VonMangoldt von_mangoldt(std::uint64_t n);

// log x for an integer x, to about 106 bits.
DoubleWord log_dw(std::uint64_t x);

// Walks n = 0, 1, 2, ... keeping psi and P(n) = sum_{m<n} piece(m), where
// piece(m) = int_m^{m+1} (psi(m) - x)^2 dx = d^2 + d + 1/3 with d = m - psi(m).
// Sums are formed window by window (2^20 integers), so the state at a given n
// does not depend on how the cursor got there.
class PsiCursor {
 public:
  static constexpr std::uint64_t kWindow = std::uint64_t{1} << 20;

  explicit PsiCursor(std::uint64_t limit);

  std::uint64_t position() const noexcept { return n_; }
  // Moves forward so that position() == n. Throws DomainError past the limit.
  void advance_to(std::uint64_t n);

  DoubleWord psi_before() const;  // sum_{m < n} Lambda(m) = psi(n - 1)
  DoubleWord p_value() const;     // P(n)

 private:
  void load_window(std::uint64_t w);

  std::uint64_t limit_;
  std::vector<std::uint32_t> base_primes_;
  std::vector<DoubleWord> base_logs_;
  std::vector<DoubleWord> window_lambda_;
  std::uint64_t window_ = UINT64_MAX;
  std::uint64_t n_ = 0;
  DoubleWord psi_base_, p_base_;    // totals of earlier windows
  DoubleWord psi_local_, p_local_;  // inside the current window
};

DoubleWord piece(std::uint64_t n, const DoubleWord& psi_n);

// psi(n) by a separate plain sieve and sequential summation.
DoubleWord psi_prefix(std::uint64_t n);

// I(X) = int_X^{2X} (psi(x) - x)^2 dx, summed piece by piece from scratch.
double mean_square_I(std::uint64_t X);

// J(X) = int_0^X (psi(x) - x)^2 dx.
double j_prefix(std::uint64_t X);

struct MeanSquareRecord {
  std::uint64_t X;
  double I;
  double I_over_X2;
};

struct MeanSquareSeries {
  std::vector<MeanSquareRecord> records;
  std::uint64_t stride = 1;
};

struct MeanSquareSummary {
  std::uint64_t count = 0;
  double min_ratio = 0, max_ratio = 0;
  std::uint64_t argmin = 0, argmax = 0;
};

// Returning false stops the stream, which then throws Error.
using RecordSink = std::function<bool(const MeanSquareRecord&)>;

// I(X) = P(2X) - P(X) at X = X_lo, X_lo + stride, ... <= X_hi. With workers > 1 the
// range is cut into blocks that start their own cursors; output is identical.
MeanSquareSummary stream_mean_square(std::uint64_t X_lo, std::uint64_t X_hi, std::uint64_t stride,
                                     const RecordSink& sink, unsigned workers = 1);

MeanSquareSeries mean_square_series(std::uint64_t X_lo, std::uint64_t X_hi, std::uint64_t stride,
                                    unsigned workers = 1);

// psi(x) - x + 2 sum_{0<gamma<=T} Re(x^rho/rho) + log 2 pi + log(1 - x^-2)/2.
double explicit_formula_residual(double x, const ZeroTable& table, double T);

}  // namespace zetacert
