// Acceptance suite: one PASS/FAIL line per criterion.
//
//   ZEROS_PATH          table with at least the first 100000 ordinates (required)
//   ZETACERT_FULL_ZEROS table with at least 721913 ordinates; enables the FULL lines
//   ZETACERT_FULL_RADIUS radius for that table (default 1e-10)
//   ZETACERT_WORKERS    worker threads (default: hardware concurrency)
//
// Exit status is nonzero when a criterion fails that is not listed in kKnownRed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "zetacert/constants.hpp"
#include "zetacert/lowerbound.hpp"
#include "zetacert/meansquare.hpp"
#include "zetacert/tails.hpp"
#include "zetacert/zeros.hpp"

using namespace zetacert;

namespace {

// Unattainable as stated; see the decisions notes.
const std::set<std::string> kKnownRed = {"4", "8F", "9"};

constexpr double kDesk = 74920.83;
constexpr double kLambda = 10.876;

struct Outcome {
  bool pass;
  std::string detail;
};

struct Result {
  std::string id;
  std::string title;
  std::optional<Outcome> outcome;  // empty: skipped
  double seconds = 0;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string g10(double v) { return fmt("%.10g", v); }

unsigned workers() {
  if (const char* w = std::getenv("ZETACERT_WORKERS")) return static_cast<unsigned>(std::max(1, std::atoi(w)));
  return std::max(1u, std::thread::hardware_concurrency());
}

double gap_after(const ZeroTable& z, std::size_t n) { return (z[n - 1].hi() + z[n].lo()) / 2; }

Outcome within_time(Outcome o, double seconds, double budget) {
  if (seconds > budget) {
    o.pass = false;
    o.detail += "; runtime " + fmt("%.1f", seconds) + " s over " + fmt("%.0f", budget) + " s";
  }
  return o;
}

// 1
Outcome counting(const ZeroTable& z) {
  auto t0 = std::chrono::steady_clock::now();
  auto rep = validate_counting(z.prefix(100000), 0.28);
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Outcome o{rep.passed && rep.failures == 0,
            std::to_string(rep.checkpoints.size()) + " checkpoints, " + std::to_string(rep.failures) +
                " failures, worst margin [" + g10(rep.worst_margin.lo()) + ", " + g10(rep.worst_margin.hi()) +
                "] at T = " + g10(rep.worst_T)};
  return within_time(o, s, 10);
}

// 2
Outcome tail_domination(const ZeroTable& z) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(std::log(100.0), std::log(z.max_height() - 1));
  std::vector<double> Ts;
  for (int i = 0; i < 50; ++i) {
    double T = std::exp(u(rng));
    while (z.collides(T)) T = std::nextafter(T + 1e-7, INFINITY);
    Ts.push_back(T);
  }
  std::sort(Ts.begin(), Ts.end());

  // suffix sums of gamma^-2 log^k(gamma/2 pi) from the top, prefix sums of 1/gamma from the bottom
  std::vector<Interval> above[3], below(Ts.size());
  for (auto& a : above) a.resize(Ts.size());
  IntervalAccumulator acc[3];
  std::size_t t = Ts.size();
  for (std::size_t i = z.size(); i-- > 0;) {
    while (t > 0 && z[i].hi() < Ts[t - 1]) {
      --t;
      for (int k = 0; k < 3; ++k) above[k][t] = acc[k].value();
    }
    Interval inv2 = Interval(1.0) / sqr(z[i]);
    Interval L = log(z[i] / two_pi());
    acc[0].add(inv2);
    acc[1].add(inv2 * L);
    acc[2].add(inv2 * sqr(L));
  }
  while (t > 0) {
    --t;
    for (int k = 0; k < 3; ++k) above[k][t] = acc[k].value();
  }
  IntervalAccumulator rec;
  std::size_t i = 0;
  for (std::size_t s = 0; s < Ts.size(); ++s) {
    while (i < z.size() && z[i].hi() < Ts[s]) rec.add(Interval(1.0) / z[i++]);
    below[s] = rec.value();
  }

  int bad = 0;
  double worst = 0;
  for (std::size_t s = 0; s < Ts.size(); ++s) {
    for (int k = 0; k < 3; ++k) {
      double b = tail_moment_bound(k, Ts[s]).hi();
      if (!(above[k][s].hi() <= b)) ++bad;
      worst = std::max(worst, above[k][s].hi() / b);
    }
    double r = recip_gamma_partial_bound(Ts[s]).hi();
    if (!(below[s].hi() <= r)) ++bad;
    worst = std::max(worst, below[s].hi() / r);
  }
  return {bad == 0, "200 comparisons, " + std::to_string(bad) + " violations, largest sum/bound = " + g10(worst)};
}

// 3
Outcome epsilon_and_h(const ZeroTable& z) {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t n = count_zeros(z, 202);
  Interval e = epsilon_threshold(z, 202);
  Interval H = h_constant_estimate(z, kDesk);
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  double off = std::fabs(H.mid() - -0.0171594) + H.rad();
  Outcome o{n == 80 && e.hi() < 0 && off <= 5e-4, "zeros below 202 = " + std::to_string(n) + ", eps(202) <= " +
                                                      g10(e.hi()) + ", H = " + g10(H.mid()) + " (off by " +
                                                      g10(off) + ")"};
  return within_time(o, s, 1);
}

// 4
Outcome b_desk(const ZeroTable& z, unsigned w) {
  auto c = b_bounds(z, 18000, {w});
  return {c.total_lower >= 0.84 && c.total_upper <= 0.92,
          std::to_string(c.zeros_used) + " zeros, total_lower = " + g10(c.total_lower) +
              " (need >= 0.84), total_upper = " + g10(c.total_upper) + " (need <= 0.92)"};
}

// 4 FULL
Outcome b_full(const ZeroTable& z, unsigned w) {
  auto c = b_bounds(z, 260877, {w});
  bool inside = c.finite_part.lo() >= 0.852089 - 1e-5 && c.finite_part.hi() <= 0.852098 + 1e-5;
  // the 400001st ordinate is 260877.21, just above T
  return {z.size() >= 400001 && inside && c.total_upper <= 0.860297 + 1e-5,
          std::to_string(c.zeros_used) + " zeros, finite [" + g10(c.finite_part.lo()) + ", " +
              g10(c.finite_part.hi()) + "], total_upper = " + g10(c.total_upper)};
}

// 5
Outcome brute_force(const ZeroTable& z) {
  int bad = 0;
  for (std::size_t n : {1u, 2u, 7u, 50u, 200u}) {
    IntervalAccumulator b, s;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (double si : {1.0, -1.0}) {
          for (double sj : {1.0, -1.0}) b.add(b_term(si * z[i], sj * z[j]));
          s.add(c2_term(z[i], si * z[j]));
        }
      }
    }
    double T = gap_after(z, n);
    if (!b_finite_sum(z, T).overlaps(b.value())) ++bad;
    if (!s_of_y(z, T).overlaps(s.value())) ++bad;
  }
  return {bad == 0, "prefixes 1, 2, 7, 50, 200: " + std::to_string(bad) + " disagreements"};
}

// 6
Outcome section_constants(const ZeroTable& z, unsigned w) {
  auto s = c2_bound(z, 70, {w});
  auto c1 = c1_bound(z, kDesk);
  auto c3 = c3_bound(z, kDesk);
  bool ok = s.zeros_used == 17 && s.total_lower > 0.0466 && c1.total_upper < 0.0462 && c1.total_lower > 0.0455 &&
            c3.total_upper <= 0.023105 + 3e-5;
  return {ok, "S(70) >= " + g10(s.total_lower) + " with " + std::to_string(s.zeros_used) + " zeros, c1 in [" +
                  g10(c1.total_lower) + ", " + g10(c1.total_upper) + "], c3 <= " + g10(c3.total_upper)};
}

// 6 FULL
Outcome s_full(const ZeroTable& z, unsigned w) {
  auto t0 = std::chrono::steady_clock::now();
  auto s = c2_bound(z, kDesk, {w});
  double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return within_time({s.total_lower > 0.104004, "S(74920.83) >= " + fmt("%.12g", s.total_lower) + " with " +
                                                    std::to_string(s.zeros_used) + " zeros"},
                     sec, 1800);
}

// 7
Outcome jumps(const ZeroTable& z) {
  double c3 = c3_bound(z, kDesk).total_upper;
  Interval rb = Interval(3.0) + sqrt(Interval(8.0));
  int bad = 0;
  double worst = INFINITY;
  for (std::size_t k = 1; k <= 1000; ++k) {
    auto j = jump_at(z, k);
    Interval g2 = sqr(z[k - 1]);
    double need = (Interval(1.11) / g2).hi();
    worst = std::min(worst, j.total.lo() / need);
    bool ok = j.total.lo() >= need && j.diagonal.lo() >= (Interval(1.99) / g2).hi() &&
              (abs(j.antidiagonal) / Interval(2.0) + abs(j.sum_a)).hi() <= (Interval(16.0 * c3) / g2).lo() &&
              abs(j.sum_b).hi() <= (rb * Interval(c3) / (Interval(2.0) * g2)).lo() && j.sum_c.lo() >= 0;
    if (!ok) ++bad;
  }
  return {bad == 0, "k = 1..1000: " + std::to_string(bad) + " failures, min total.lo / (1.11/gamma^2) = " + g10(worst)};
}

// 8
Outcome delta_desk(const ZeroTable& z, unsigned w) {
  auto c = certify_lower_bound(z, kDesk, kLambda, {w});
  return {c.valid && c.zeros_used == 100000 && c.delta >= 0.0442 && c.i_constant >= 1.85e-4,
          "delta >= " + g10(c.delta) + ", i_constant >= " + g10(c.i_constant) + ", valid = " +
              (c.valid ? "true" : "false")};
}

// 8 FULL
Outcome delta_full(const ZeroTable& z, unsigned w) {
  auto t0 = std::chrono::steady_clock::now();
  auto c = certify_lower_bound(z, 446000, kLambda, {w});
  double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool ok = c.zeros_used == 721913 && c.delta_tail.hi() <= 3.5e-9 && c.delta >= 0.044282252 &&
            c.h_bound >= 0.01364183 && c.i_constant >= 1.0 / 5374;
  return within_time({ok, std::to_string(c.zeros_used) + " zeros, tail <= " + g10(c.delta_tail.hi()) +
                              ", delta >= " + g10(c.delta) + ", h >= " + g10(c.h_bound) + ", i >= " +
                              g10(c.i_constant) + " = 1/" + g10(1 / c.i_constant)},
                     sec, 600);
}

// 9
Outcome mean_square(unsigned w) {
  std::vector<std::string> notes;
  bool ok = mean_square_I(1) == 7.0 / 3.0;

  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::uint64_t> big(1, 1000000), small(1, 100000);
  std::vector<std::uint64_t> xs;
  for (int i = 0; i < 100; ++i) xs.push_back(big(rng));
  std::sort(xs.begin(), xs.end());
  std::size_t next = 0;
  double worst_rel = 0;
  stream_mean_square(1, xs.back(), 1, [&](const MeanSquareRecord& r) {
    while (next < xs.size() && xs[next] == r.X) {
      worst_rel = std::max(worst_rel, std::fabs(r.I - mean_square_I(r.X)) / r.I);
      ++next;
    }
    return true;
  });
  ok = ok && next == xs.size() && worst_rel <= 1e-9;

  int non_exact = 0;
  for (int i = 0; i < 100; ++i) {
    std::uint64_t X = small(rng);
    PsiCursor a(2 * X + 1), b(2 * X + 1);
    a.advance_to(X);
    b.advance_to(2 * X);
    double streamed = mean_square_series(X, X, 1).records.at(0).I;
    if ((b.p_value() - a.p_value()).value() != streamed) ++non_exact;
  }
  ok = ok && non_exact == 0;

  auto t0 = std::chrono::steady_clock::now();
  double tail_min = INFINITY, tail_max = 0;
  std::uint64_t first_inside = 0;
  auto sum = stream_mean_square(
      1, 10000000, 1,
      [&](const MeanSquareRecord& r) {
        if (!(r.I_over_X2 > 1.8e-4 && r.I_over_X2 < 0.8603)) first_inside = r.X + 1;
        if (r.X >= 5) {
          tail_min = std::min(tail_min, r.I_over_X2);
          tail_max = std::max(tail_max, r.I_over_X2);
        }
        return true;
      },
      w);
  double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool inside = sum.min_ratio > 1.8e-4 && sum.max_ratio < 0.8603;
  ok = ok && inside && sec <= 300;
  return {ok, "I(1) = 7/3, stream vs direct rel <= " + g10(worst_rel) + ", " + std::to_string(non_exact) +
                  " inexact dyadic differences, scan [1, 1e7] in " + fmt("%.1f", sec) + " s: I/X^2 in [" +
                  g10(sum.min_ratio) + ", " + g10(sum.max_ratio) + "] (max at X = " + std::to_string(sum.argmax) +
                  "); inside (1.8e-4, 0.8603) from X = " + std::to_string(first_inside) + " on, range [" +
                  g10(tail_min) + ", " + g10(tail_max) + "]"};
}

// 10
Outcome explicit_formula(const ZeroTable& z) {
  double high = 0, low = 0;
  for (int k = 0; k < 20; ++k) {
    double x = std::floor(std::pow(10.0, 3 + k / 19.0)) + 0.5;
    if (x > 1e4) x = 9999.5;
    high += std::fabs(explicit_formula_residual(x, z, kDesk));
    low += std::fabs(explicit_formula_residual(x, z, 100));
  }
  high /= 20;
  low /= 20;
  return {high < 0.5 && high < low, "mean |residual| " + g10(high) + " at T = 74920.83, " + g10(low) + " at T = 100"};
}

// 11
Outcome determinism(const ZeroTable& z) {
  auto texts = [&](unsigned w) {
    SumOptions o{w};
    return b_bounds(z, 18000, o).serialize() + c2_bound(z, 70, o).serialize() + c1_bound(z, kDesk).serialize() +
           c3_bound(z, kDesk).serialize() + certify_lower_bound(z, kDesk, kLambda, o).serialize();
  };
  std::string one = texts(1);
  bool same = one == texts(4) && one == texts(8);
  return {same, same ? "B, S(70), c1, c3 and delta certificates identical for 1, 4, 8 workers"
                     : "certificates differ between worker counts"};
}

}  // namespace

int main() {
  const char* path = std::getenv("ZEROS_PATH");
  if (!path) {
    std::fprintf(stderr, "acceptance: ZEROS_PATH is not set\n");
    return 2;
  }
  const unsigned w = workers();
  const ZeroTable desk = ZeroTable::load(path);
  std::optional<ZeroTable> full;
  if (const char* fp = std::getenv("ZETACERT_FULL_ZEROS")) {
    const char* fr = std::getenv("ZETACERT_FULL_RADIUS");
    full = ZeroTable::load(fp, fr ? std::atof(fr) : 1e-10);
  }
  std::printf("acceptance: %zu desk ordinates, %s, %u workers\n", desk.size(),
              full ? (std::to_string(full->size()) + " FULL ordinates").c_str() : "no FULL table", w);

  struct Item {
    const char* id;
    const char* title;
    bool needs_full;
    std::function<Outcome()> run;
  };
  const std::vector<Item> items = {
      {"1", "counting validation, A = 0.28", false, [&] { return counting(desk); }},
      {"2", "tail bounds dominate tabulated sums", false, [&] { return tail_domination(desk); }},
      {"3", "eps(202) < 0 and H estimate", false, [&] { return epsilon_and_h(desk); }},
      {"4", "B desk bound at T = 18000", false, [&] { return b_desk(desk, w); }},
      {"4F", "B at T = 260877", true, [&] { return b_full(*full, w); }},
      {"5", "symmetry-reduced sums vs unreduced loops", false, [&] { return brute_force(desk); }},
      {"6", "S(70), c1, c3", false, [&] { return section_constants(desk, w); }},
      {"6F", "S(74920.83) > 0.104004", false, [&] { return s_full(desk, w); }},
      {"7", "jump bounds for k <= 1000", false, [&] { return jumps(desk); }},
      {"8", "lower bound pipeline at T = 74920.83", false, [&] { return delta_desk(desk, w); }},
      {"8F", "lower bound pipeline at T = 446000", true, [&] { return delta_full(*full, w); }},
      {"9", "mean-square series", false, [&] { return mean_square(w); }},
      {"10", "explicit formula residuals", false, [&] { return explicit_formula(desk); }},
      {"11", "determinism across worker counts", false, [&] { return determinism(desk); }},
  };

  int unexpected = 0, known = 0, passed = 0, skipped = 0;
  for (const auto& it : items) {
    Result r{it.id, it.title, std::nullopt, 0};
    auto t0 = std::chrono::steady_clock::now();
    if (!it.needs_full || full) {
      try {
        r.outcome = it.run();
      } catch (const std::exception& e) {
        r.outcome = Outcome{false, std::string("error: ") + e.what()};
      }
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const char* tag = "SKIP";
    if (!r.outcome) {
      ++skipped;
    } else if (r.outcome->pass) {
      tag = "PASS";
      ++passed;
    } else if (kKnownRed.count(r.id)) {
      tag = "FAIL";
      ++known;
    } else {
      tag = "FAIL";
      ++unexpected;
    }
    std::printf("%s %-3s %s: %s [%.1f s]\n", tag, r.id.c_str(), r.title.c_str(),
                r.outcome ? r.outcome->detail.c_str() : "needs ZETACERT_FULL_ZEROS", r.seconds);
    std::fflush(stdout);
  }
  std::printf("acceptance: %d passed, %d failed (%d known unattainable), %d skipped\n", passed, unexpected + known,
              known, skipped);
  return unexpected == 0 ? 0 : 1;
}
