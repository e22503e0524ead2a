#include "zetacert/constants.hpp"

#include <limits>

#include "b_kernel.hpp"
#include "zetacert/certificate.hpp"
#include "zetacert/parallel.hpp"
#include "zetacert/tails.hpp"

namespace zetacert {

namespace {

struct Prepared {
  Interval g;
  Interval w;  // 1 / (1/4 + g^2)
  Interval c;  // cos(g log 2)
  Interval s;  // sin(g log 2)
};

const Interval kQuarter(0.25);
const Interval kNumeratorRange = Interval::raw(9, 25);
const Interval kUnit = Interval::raw(-1, 1);

std::vector<Prepared> prepare(const ZeroTable& table, std::size_t n) {
  std::vector<Prepared> out(n);
  Interval l2 = log_two();
  for (std::size_t i = 0; i < n; ++i) {
    const Interval& g = table[i];
    Interval arg = g * l2;
    if (arg.hi() > kMaxTrigArgument) throw DomainError("ordinate too large for trusted cosine range");
    out[i] = {g, Interval(1) / (kQuarter + sqr(g)), cos(arg), sin(arg)};
  }
  return out;
}

std::size_t zeros_below(const ZeroTable& table, double T) {
  if (!(T <= table.max_height())) {
    throw HeightError("height " + std::to_string(T) + " exceeds the zero table ceiling " +
                      std::to_string(table.max_height()));
  }
  return count_zeros(table, T);
}

// sum_i diag(i) + 2 sum_i row(i), rows grouped in fixed blocks and all
// partial sums combined in index order.
template <class Diag, class Row>
Interval symmetric_rows(std::size_t n, const SumOptions& opt, Diag diag, Row row) {
  std::size_t block = opt.block == 0 ? 1024 : opt.block;
  std::size_t blocks = (n + block - 1) / block;
  auto partial = parallel_map<Interval>(blocks, opt.workers, [&](std::size_t b) {
    IntervalAccumulator acc;
    std::size_t end = std::min(n, (b + 1) * block);
    for (std::size_t i = b * block; i < end; ++i) acc.add(diag(i) + Interval(2) * row(i));
    return acc.value();
  });
  IntervalAccumulator total;
  for (const auto& p : partial) total.add(p);
  return total.value();
}

Interval clamp_unit(const Interval& x) { return intersect(x, kUnit); }

Interval b_numerator(const Interval& cos_value) {
  return sqrt(intersect(Interval(17) - Interval(8) * clamp_unit(cos_value), kNumeratorRange));
}

Interval b_pair_sum(const std::vector<Prepared>& z, std::size_t n, const SumOptions& opt, bool with_numerator) {
  detail::BKernelZeros k;
  for (std::size_t i = 0; i < n; ++i) k.push(z[i].g, z[i].w, z[i].c, z[i].s);
  return symmetric_rows(
      n, opt,
      [&](std::size_t i) {
        const Prepared& a = z[i];
        // gamma2 = gamma1: theta = 0, numerator 3, |2 + i theta| = 2
        Interval same = with_numerator ? Interval(1.5) * a.w : Interval(0.5) * a.w;
        Interval theta = Interval(2) * a.g;
        Interval num2 = with_numerator ? Interval(17) - Interval(8) * clamp_unit(sqr(a.c) - sqr(a.s)) : Interval(1);
        if (with_numerator) num2 = intersect(num2, kNumeratorRange);
        Interval opposite = sqrt(num2 * sqr(a.w) / (Interval(4) + sqr(theta)));
        return same + opposite;
      },
      [&](std::size_t i) { return detail::b_row(k, i, with_numerator); });
}

// T(g, -g) = 2(1 - 8 g^2) w^2 / (4 + 4 g^2)
Interval c2_anti(const Prepared& a) {
  Interval g2 = sqr(a.g);
  return Interval(2) * (Interval(1) - Interval(8) * g2) * sqr(a.w) / (Interval(4) + Interval(4) * g2);
}

// T(g, g) + T(g, -g), where T(g, g) = 2/(1/4 + g^2)
Interval c2_diag(const Prepared& a) { return Interval(2) * a.w + c2_anti(a); }

Interval c2_from(const Interval& g1, const Interval& g2, const Interval& ww) {
  Interval theta = g1 - g2;
  Interval num = Interval(2) * (Interval(1) + Interval(4) * g1 * g2 - sqr(theta));
  return num * ww / (Interval(4) + sqr(theta));
}

void fill_totals(BoundCertificate& c) {
  c.total_lower = c.finite_part.lo();
  c.total_upper = c.has_upper ? rounding::add_up(c.finite_part.hi(), c.tail_part.hi())
                              : std::numeric_limits<double>::infinity();
}

}  // namespace

std::string BoundCertificate::serialize() const {
  KeyValueText kv;
  kv.add("name", name);
  kv.add_number(height_key, height);
  if (snapped) kv.add_number("requested_" + height_key, requested_height);
  if (lambda) kv.add_number("lambda", *lambda);
  kv.add("zeros_used", std::to_string(zeros_used));
  kv.add("source", source);
  kv.add_number("finite_lo", finite_part.lo());
  kv.add_number("finite_hi", finite_part.hi());
  kv.add_number("tail_hi", has_upper ? tail_part.hi() : std::numeric_limits<double>::infinity());
  kv.add_number("total_lower", total_lower);
  kv.add_number("total_upper", total_upper);
  kv.add("claim_lower", name + " ≥ " + format_down(total_lower));
  if (has_upper) kv.add("claim_upper", name + " ≤ " + format_up(total_upper));
  return kv.str();
}

Interval b_term(const Interval& gamma1, const Interval& gamma2) {
  Interval theta = gamma1 - gamma2;
  Interval arg = theta * log_two();
  if (std::fabs(arg.lo()) > kMaxTrigArgument || std::fabs(arg.hi()) > kMaxTrigArgument) {
    throw DomainError("theta log 2 outside the trusted cosine range");
  }
  Interval num = b_numerator(cos(arg));
  Interval den = sqrt(kQuarter + sqr(gamma1)) * sqrt(kQuarter + sqr(gamma2)) * sqrt(Interval(4) + sqr(theta));
  return num / den;
}

Interval b_finite_sum(const ZeroTable& table, double T, const SumOptions& opt) {
  std::size_t n = zeros_below(table, T);
  auto z = prepare(table, n);
  return Interval(2) * b_pair_sum(z, n, opt, true);
}

BoundCertificate b_bounds(const ZeroTable& table, double T, const SumOptions& opt) {
  BoundCertificate c;
  c.name = "B";
  c.height = c.requested_height = T;
  c.zeros_used = zeros_below(table, T);
  c.source = table.source_path();
  c.tail_part = b_tail_bound(T);
  c.finite_part = b_finite_sum(table, T, opt);
  fill_totals(c);
  return c;
}

Interval s_kernel_sum(const ZeroTable& table, double T, const SumOptions& opt) {
  std::size_t n = zeros_below(table, T);
  auto z = prepare(table, n);
  return Interval(2) * b_pair_sum(z, n, opt, false);
}

Interval c2_term(const Interval& gamma1, const Interval& gamma2) {
  Interval ww = Interval(1) / ((kQuarter + sqr(gamma1)) * (kQuarter + sqr(gamma2)));
  return c2_from(gamma1, gamma2, ww);
}

Interval s_of_y(const ZeroTable& table, double Y, const SumOptions& opt) {
  std::size_t n = zeros_below(table, Y);
  auto z = prepare(table, n);
  detail::BKernelZeros k;
  for (std::size_t i = 0; i < n; ++i) k.push(z[i].g, z[i].w, z[i].c, z[i].s);
  return symmetric_rows(
      n, opt, [&](std::size_t i) { return c2_diag(z[i]); }, [&](std::size_t i) { return detail::c2_row(k, i); });
}

BoundCertificate c2_bound(const ZeroTable& table, double Y, const SumOptions& opt) {
  BoundCertificate c;
  c.name = "c2";
  c.height_key = "Y";
  c.height = c.requested_height = Y;
  c.zeros_used = zeros_below(table, Y);
  c.source = table.source_path();
  c.finite_part = s_of_y(table, Y, opt);
  c.tail_part = Interval::raw(0, std::numeric_limits<double>::infinity());
  c.has_upper = false;
  fill_totals(c);
  return c;
}

Jump jump_at(const ZeroTable& table, std::size_t k) {
  if (k == 0 || k > table.size()) throw DomainError("zero index " + std::to_string(k) + " outside the table");
  Prepared a{table[k - 1], Interval(1) / (kQuarter + sqr(table[k - 1])), {}, {}};
  Jump out;
  out.diagonal = Interval(2) * a.w;
  out.antidiagonal = c2_anti(a);
  Interval split = (Interval(3) - sqrt(Interval(8))) * a.g;
  IntervalAccumulator sa, sb, sc;
  for (std::size_t j = 0; j + 1 < k; ++j) {
    const Interval& g2 = table[j];
    Interval ww = a.w / (kQuarter + sqr(g2));
    sa.add(c2_from(a.g, -g2, ww));
    Interval t = c2_from(a.g, g2, ww);
    if (g2.hi() < split.lo()) {
      sb.add(t);
    } else {
      sc.add(t);
    }
  }
  out.sum_a = sa.value();
  out.sum_b = sb.value();
  out.sum_c = sc.value();
  out.total = out.diagonal + out.antidiagonal + Interval(2) * (out.sum_a + out.sum_b + out.sum_c);
  return out;
}

BoundCertificate c1_bound(const ZeroTable& table, double T) {
  BoundCertificate c;
  c.name = "c1";
  c.height = c.requested_height = T;
  c.zeros_used = zeros_below(table, T);
  c.source = table.source_path();
  c.tail_part = Interval(2) * tail_moment_bound(0, T);
  IntervalAccumulator acc;
  for (std::size_t i = 0; i < c.zeros_used; ++i) acc.add(Interval(1) / (kQuarter + sqr(table[i])));
  c.finite_part = Interval(2) * acc.value();
  fill_totals(c);
  return c;
}

BoundCertificate c3_bound(const ZeroTable& table, double T) {
  BoundCertificate c;
  c.name = "c3";
  c.height = c.requested_height = T;
  c.zeros_used = zeros_below(table, T);
  c.source = table.source_path();
  c.tail_part = tail_moment_bound(0, T);
  IntervalAccumulator acc;
  for (std::size_t i = 0; i < c.zeros_used; ++i) acc.add(Interval(1) / sqr(table[i]));
  c.finite_part = acc.value();
  fill_totals(c);
  return c;
}

}  // namespace zetacert
