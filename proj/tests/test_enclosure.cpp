#include <mpfr.h>

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "doctest.h"
#include "zetacert/interval.hpp"

using zetacert::Interval;

namespace {

constexpr int kSamples = 100000;
constexpr mpfr_prec_t kPrec = 256;

class Mp {
 public:
  Mp() { mpfr_init2(v_, kPrec); }
  explicit Mp(double x) : Mp() { mpfr_set_d(v_, x, MPFR_RNDN); }
  ~Mp() { mpfr_clear(v_); }
  Mp(const Mp&) = delete;
  Mp& operator=(const Mp&) = delete;
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

bool inside(const Mp& v, const Interval& r) {
  return mpfr_cmp_d(v.get(), r.lo()) >= 0 && mpfr_cmp_d(v.get(), r.hi()) <= 0;
}

struct Gen {
  std::mt19937_64 rng{20240601};

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }
  double magnitude(int lo_exp, int hi_exp) {
    return std::ldexp(uniform(1, 2), std::uniform_int_distribution<int>(lo_exp, hi_exp)(rng));
  }
  double signed_value() { return (rng() & 1 ? 1 : -1) * magnitude(-30, 30); }
  // Point, one-ulp or random-width interval around x.
  Interval around(double x) {
    switch (rng() % 3) {
      case 0: return Interval(x);
      case 1: return Interval(x, std::nextafter(x, INFINITY));
      default: return Interval(x, x + std::fabs(x) * uniform(0, 1e-3));
    }
  }
  double pick(const Interval& a) {
    switch (rng() % 3) {
      case 0: return a.lo();
      case 1: return a.hi();
      default: return uniform(a.lo(), a.hi());
    }
  }
};

using Unary = std::function<void(Mp&, double)>;
using Binary = std::function<void(Mp&, double, double)>;

void check_binary(const char* name, Gen& g, const std::function<Interval(const Interval&, const Interval&)>& op,
                  const Binary& oracle, bool nonzero_b) {
  Mp v;
  int bad = 0;
  for (int n = 0; n < kSamples; ++n) {
    Interval a = g.around(g.signed_value());
    Interval b = g.around(g.signed_value());
    if (nonzero_b && b.contains(0.0)) continue;
    Interval r = op(a, b);
    for (int k = 0; k < 3; ++k) {
      double x = g.pick(a), y = g.pick(b);
      oracle(v, x, y);
      if (!inside(v, r)) ++bad;
    }
  }
  INFO(name);
  CHECK(bad == 0);
}

void check_unary(const char* name, Gen& g, const std::function<double(Gen&)>& arg,
                 const std::function<Interval(const Interval&)>& op, const Unary& oracle) {
  Mp v;
  int bad = 0;
  for (int n = 0; n < kSamples; ++n) {
    Interval a = g.around(arg(g));
    Interval r = op(a);
    for (int k = 0; k < 3; ++k) {
      oracle(v, g.pick(a));
      if (!inside(v, r)) ++bad;
    }
  }
  INFO(name);
  CHECK(bad == 0);
}

}  // namespace

TEST_CASE("arithmetic encloses the high-precision result") {
  Gen g;
  check_binary(
      "add", g, [](auto& a, auto& b) { return a + b; },
      [](Mp& v, double x, double y) { mpfr_set_d(v.get(), x, MPFR_RNDN), mpfr_add_d(v.get(), v.get(), y, MPFR_RNDN); },
      false);
  check_binary(
      "sub", g, [](auto& a, auto& b) { return a - b; },
      [](Mp& v, double x, double y) { mpfr_set_d(v.get(), x, MPFR_RNDN), mpfr_sub_d(v.get(), v.get(), y, MPFR_RNDN); },
      false);
  check_binary(
      "mul", g, [](auto& a, auto& b) { return a * b; },
      [](Mp& v, double x, double y) { mpfr_set_d(v.get(), x, MPFR_RNDN), mpfr_mul_d(v.get(), v.get(), y, MPFR_RNDN); },
      false);
  check_binary(
      "div", g, [](auto& a, auto& b) { return a / b; },
      [](Mp& v, double x, double y) { mpfr_set_d(v.get(), x, MPFR_RNDN), mpfr_div_d(v.get(), v.get(), y, MPFR_RNDN); },
      true);
}

TEST_CASE("elementary functions enclose the high-precision result") {
  Gen g;
  auto positive = [](Gen& r) { return r.magnitude(-40, 40); };
  check_unary(
      "sqrt", g, positive, [](auto& a) { return zetacert::sqrt(a); },
      [](Mp& v, double x) { mpfr_set_d(v.get(), x, MPFR_RNDN), mpfr_sqrt(v.get(), v.get(), MPFR_RNDN); });
  check_unary(
      "log", g, positive, [](auto& a) { return zetacert::log(a); },
      [](Mp& v, double x) { mpfr_set_d(v.get(), x, MPFR_RNDN), mpfr_log(v.get(), v.get(), MPFR_RNDN); });
  check_unary(
      "log near 1", g, [](Gen& r) { return 1 + r.uniform(-1e-6, 1e-6); }, [](auto& a) { return zetacert::log(a); },
      [](Mp& v, double x) { mpfr_set_d(v.get(), x, MPFR_RNDN), mpfr_log(v.get(), v.get(), MPFR_RNDN); });

  // Arguments up to the trusted ceiling, plus doubles next to multiples of pi/2.
  auto trig_arg = [](Gen& r) {
    if (r.rng() % 2) return r.uniform(-zetacert::kMaxTrigArgument, zetacert::kMaxTrigArgument) / 1.01;
    double k = std::floor(r.uniform(-6e6, 6e6));
    return std::nextafter(k * M_PI_2, (r.rng() & 1) ? INFINITY : -INFINITY);
  };
  check_unary(
      "sin", g, trig_arg, [](auto& a) { return zetacert::sin(a); },
      [](Mp& v, double x) { mpfr_set_d(v.get(), x, MPFR_RNDN), mpfr_sin(v.get(), v.get(), MPFR_RNDN); });
  check_unary(
      "cos", g, trig_arg, [](auto& a) { return zetacert::cos(a); },
      [](Mp& v, double x) { mpfr_set_d(v.get(), x, MPFR_RNDN), mpfr_cos(v.get(), v.get(), MPFR_RNDN); });
  check_unary(
      "sin small", g, [](Gen& r) { return r.uniform(-8, 8); }, [](auto& a) { return zetacert::sin(a); },
      [](Mp& v, double x) { mpfr_set_d(v.get(), x, MPFR_RNDN), mpfr_sin(v.get(), v.get(), MPFR_RNDN); });

  for (int n = 0; n <= 7; ++n) {
    check_unary(
        "powi", g, [](Gen& r) { return r.uniform(-1, 1) * r.magnitude(-20, 20); },
        [n](auto& a) { return zetacert::powi(a, n); },
        [n](Mp& v, double x) { mpfr_set_d(v.get(), x, MPFR_RNDN), mpfr_pow_si(v.get(), v.get(), n, MPFR_RNDN); });
  }
}

TEST_CASE("trig output stays inside [-1, 1] and covers interior extrema") {
  for (double w : {0.5, 1.0, 3.0, 6.0, 7.0}) {
    for (double a = -20; a < 20; a += 0.37) {
      Interval x(a, a + w);
      Interval s = zetacert::sin(x), c = zetacert::cos(x);
      CHECK(s.lo() >= -1 - 0x1p-52);
      CHECK(s.hi() <= 1 + 0x1p-52);
      CHECK(c.lo() >= -1 - 0x1p-52);
      CHECK(c.hi() <= 1 + 0x1p-52);
      for (double t = a; t <= a + w; t += w / 64) {
        CHECK(s.contains(std::sin(t)) == true);
        CHECK(c.contains(std::cos(t)) == true);
      }
    }
  }
  CHECK(zetacert::sin(Interval(1.5, 1.6)).hi() >= 1.0);
  CHECK(zetacert::cos(Interval(3.1, 3.2)).lo() <= -1.0);
}

TEST_CASE("monotone inclusion") {
  Gen g;
  for (int n = 0; n < 20000; ++n) {
    double x = g.uniform(0.5, 50), y = g.uniform(0.5, 50);
    Interval a(x, x + g.uniform(0, 1)), b(y, y + g.uniform(0, 1));
    Interval A(a.lo() - g.uniform(0, 0.2), a.hi() + g.uniform(0, 1)), B(b.lo() - g.uniform(0, 0.2), b.hi() + 1);
    CHECK((A + B).contains(a + b));
    CHECK((A - B).contains(a - b));
    CHECK((A * B).contains(a * b));
    CHECK((A / B).contains(a / b));
    CHECK(zetacert::sqrt(A).contains(zetacert::sqrt(a)));
    CHECK(zetacert::log(A).contains(zetacert::log(a)));
    CHECK(zetacert::sin(A).contains(zetacert::sin(a)));
    CHECK(zetacert::cos(A).contains(zetacert::cos(a)));
  }
}

TEST_CASE("make_interval") {
  Interval a = zetacert::parse_decimal("14.134725142", 1e-8);
  CHECK(a.contains(14.134725142));
  CHECK(a.width() <= 2e-8 + 4 * 0x1p-49);
  CHECK(zetacert::parse_decimal("0", 0) == Interval(0.0));
  Interval tenth = zetacert::parse_decimal("0.1", 0);
  Mp v, lo(tenth.lo()), hi(tenth.hi());
  mpfr_set_str(v.get(), "0.1", 10, MPFR_RNDN);
  CHECK(mpfr_cmp(lo.get(), v.get()) < 0);
  CHECK(mpfr_cmp(hi.get(), v.get()) > 0);
  CHECK(std::nextafter(std::nextafter(tenth.lo(), 1), 1) >= tenth.hi());
  CHECK(zetacert::parse_decimal("-2.5e3", 0).contains(-2500.0));
  CHECK(zetacert::parse_decimal("17", 0) == Interval(17.0));
  for (const char* bad : {"", "abc", "1.2.3", "1e", "--1", "0x10", "1,5", "nan", "inf", " 1"}) {
    CHECK_THROWS_AS(zetacert::parse_decimal(bad, 0), zetacert::ParseError);
  }
  CHECK_THROWS_AS(zetacert::parse_decimal("1", -1), zetacert::DomainError);
}

TEST_CASE("arithmetic examples and domain errors") {
  CHECK(Interval(1, 2) + Interval(3, 4) == Interval(4, 6));
  CHECK(Interval(-1, 2) * Interval(3, 4) == Interval(-4, 8));
  Interval q = Interval(1.0) / Interval(4.0);
  CHECK(q.contains(0.25));
  CHECK(q.width() <= 2 * 0x1p-54);
  CHECK_THROWS_AS(Interval(1.0) / Interval(-1, 1), zetacert::DomainError);
  CHECK_THROWS_AS(zetacert::log(Interval(0, 1)), zetacert::DomainError);
  CHECK_THROWS_AS(zetacert::sqrt(Interval(-1, 1)), zetacert::DomainError);
  CHECK_THROWS_AS(zetacert::sin(Interval(2e7)), zetacert::DomainError);
  CHECK_THROWS_AS(zetacert::cos(Interval(-2e7, 0)), zetacert::DomainError);

  Interval le = zetacert::log(zetacert::euler_e());
  CHECK(le.contains(1.0));
  CHECK(le.width() <= 1e-12);
  CHECK(zetacert::cos(Interval(0.0)).contains(1.0));
  CHECK(zetacert::sqrt(Interval(9.0)).contains(3.0));
  CHECK(zetacert::powi(Interval(-2, 3), 3) == Interval(-8, 27));
  CHECK(zetacert::powi(Interval(-2, 3), 2).contains(Interval(0, 9)));
}

TEST_CASE("constants enclose their values") {
  Mp v;
  mpfr_const_pi(v.get(), MPFR_RNDN);
  CHECK(inside(v, zetacert::pi()));
  mpfr_mul_ui(v.get(), v.get(), 2, MPFR_RNDN);
  CHECK(inside(v, zetacert::two_pi()));
  mpfr_const_log2(v.get(), MPFR_RNDN);
  CHECK(inside(v, zetacert::log_two()));
  mpfr_set_ui(v.get(), 1, MPFR_RNDN);
  mpfr_exp(v.get(), v.get(), MPFR_RNDN);
  CHECK(inside(v, zetacert::euler_e()));
  for (const Interval& c : {zetacert::pi(), zetacert::two_pi(), zetacert::log_two(), zetacert::euler_e()}) {
    CHECK(std::nextafter(c.lo(), INFINITY) >= c.hi());
  }
}

TEST_CASE("sum_enclosure") {
  std::vector<Interval> three{Interval(1.0), Interval(2.0), Interval(3.0)};
  CHECK(zetacert::sum_enclosure(three).contains(6.0));
  CHECK(zetacert::sum_enclosure({}) == Interval(0.0));

  std::vector<Interval> many(1000000, Interval(1e-6));
  Interval s = zetacert::sum_enclosure(many);
  Mp exact(1e-6);
  mpfr_mul_ui(exact.get(), exact.get(), 1000000, MPFR_RNDN);
  CHECK(inside(exact, s));
  CHECK(s.contains(1.0));
  CHECK(s.width() <= 1e-9);

  std::mt19937_64 rng(7);
  std::vector<Interval> terms;
  for (int i = 0; i < 100000; ++i) {
    double x = std::uniform_real_distribution<double>(-1, 1)(rng);
    terms.push_back(Interval(x, x + 1e-9));
  }
  Interval one = zetacert::sum_enclosure(terms, zetacert::SumPolicy::chunked(1024, 1));
  for (unsigned w : {2u, 4u, 8u}) {
    Interval par = zetacert::sum_enclosure(terms, zetacert::SumPolicy::chunked(1024, w));
    CHECK(par.lo() == one.lo());
    CHECK(par.hi() == one.hi());
  }
}
