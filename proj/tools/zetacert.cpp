// zetacert command-line front end. Talks to the library only through the C API.

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zetacert/zetacert.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitInput = 2;

struct Common {
  std::string zeros;
  double radius = 1e-8;
  unsigned workers = 1;
  bool deterministic = false;
  std::string out;
};

struct Output {
  std::FILE* f = stdout;
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") f = std::fopen(path.c_str(), "w");
  }
  ~Output() {
    if (f && f != stdout) std::fclose(f);
  }
  bool ok() const { return f != nullptr; }
};

// Shortest text that reads back as the same double.
std::string num(double v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

int report(zc_status s) {
  std::fprintf(stderr, "zetacert: %s: %s\n", zc_status_name(s), zc_last_error());
  return kExitInput;
}

class Table {
 public:
  zc_status open(const Common& c) {
    std::string path = c.zeros;
    if (path.empty()) {
      const char* env = std::getenv("ZEROS_PATH");
      if (env) path = env;
    }
    if (path.empty()) {
      std::fprintf(stderr, "zetacert: no zero table (use --zeros or set ZEROS_PATH)\n");
      return ZC_ERR_ARG;
    }
    return zc_table_load(path.c_str(), c.radius, &t_);
  }
  ~Table() { zc_table_free(t_); }
  const zc_table* get() const { return t_; }

 private:
  zc_table* t_ = nullptr;
};

using Clock = std::chrono::steady_clock;

int emit_certificate(const Common& c, zc_certificate* cert, Clock::time_point start) {
  Output out(c.out);
  if (!out.ok()) {
    std::fprintf(stderr, "zetacert: cannot open %s\n", c.out.c_str());
    zc_certificate_free(cert);
    return kExitInput;
  }
  std::fputs(zc_certificate_text(cert), out.f);
  if (!c.deterministic) {
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::fprintf(out.f, "workers = %u\nelapsed_seconds = %.3f\n", c.workers, secs);
  }
  int code = zc_certificate_valid(cert) ? kExitOk : kExitInvalid;
  zc_certificate_free(cert);
  return code;
}

int run_constant(const Common& c, const char* which, double height) {
  auto start = Clock::now();
  Table table;
  if (zc_status s = table.open(c); s != ZC_OK) return s == ZC_ERR_ARG ? kExitInput : report(s);
  zc_run_options opts{c.workers, 1};
  zc_certificate* cert = nullptr;
  if (zc_status s = zc_certify_constant(table.get(), which, height, &opts, &cert); s != ZC_OK) return report(s);
  return emit_certificate(c, cert, start);
}

int run_delta(const Common& c, double T, double lambda) {
  auto start = Clock::now();
  Table table;
  if (zc_status s = table.open(c); s != ZC_OK) return s == ZC_ERR_ARG ? kExitInput : report(s);
  zc_run_options opts{c.workers, 1};
  zc_certificate* cert = nullptr;
  if (zc_status s = zc_certify_delta(table.get(), T, lambda, &opts, &cert); s != ZC_OK) return report(s);
  return emit_certificate(c, cert, start);
}

int run_validate(const Common& c, double A) {
  Table table;
  if (zc_status s = table.open(c); s != ZC_OK) return s == ZC_ERR_ARG ? kExitInput : report(s);
  zc_validation_summary v{};
  if (zc_status s = zc_validate_counting(table.get(), A, &v); s != ZC_OK) return report(s);
  Output out(c.out);
  if (!out.ok()) return kExitInput;
  std::fprintf(out.f, "name = counting validation\n");
  std::fprintf(out.f, "A = %s\n", num(A).c_str());
  std::fprintf(out.f, "zeros = %zu\n", zc_table_size(table.get()));
  std::fprintf(out.f, "checkpoints = %zu\n", v.checkpoints);
  std::fprintf(out.f, "failures = %zu\n", v.failures);
  std::fprintf(out.f, "worst_T = %s\n", num(v.worst_T).c_str());
  std::fprintf(out.f, "worst_margin_lo = %s\n", num(v.worst_margin.lo).c_str());
  std::fprintf(out.f, "worst_margin_hi = %s\n", num(v.worst_margin.hi).c_str());
  std::fprintf(out.f, "worst_slack = %s\n", num(v.worst_slack).c_str());
  std::fprintf(out.f, "validated_up_to = %s\n", num(v.ceiling).c_str());
  std::fprintf(out.f, "passed = %s\n", v.passed ? "true" : "false");
  return v.passed ? kExitOk : kExitInvalid;
}

struct CsvSink {
  std::FILE* f;
};

int write_record(void* user, uint64_t X, double I, double ratio) {
  auto* s = static_cast<CsvSink*>(user);
  return std::fprintf(s->f, "%llu,%s,%s\n", static_cast<unsigned long long>(X), num(I).c_str(),
                      num(ratio).c_str()) > 0;
}

int run_meansquare(const Common& c, uint64_t from, uint64_t to, uint64_t stride) {
  Output out(c.out);
  if (!out.ok()) {
    std::fprintf(stderr, "zetacert: cannot open %s\n", c.out.c_str());
    return kExitInput;
  }
  std::fputs("X,I,I_over_X2\n", out.f);
  CsvSink sink{out.f};
  if (zc_status s = zc_stream_mean_square(from, to, stride, c.workers, write_record, &sink); s != ZC_OK) {
    return report(s);
  }
  return kExitOk;
}

int run_tails(const Common& c, double lo, double hi, int points) {
  if (!(lo > 0) || !(hi >= lo) || points < 1) {
    std::fprintf(stderr, "zetacert: tails needs 0 < from <= to and points >= 1\n");
    return kExitInput;
  }
  Output out(c.out);
  if (!out.ok()) return kExitInput;
  std::fputs("T,moment0,moment1,moment2,recip_partial,b_tail\n", out.f);
  for (int i = 0; i < points; ++i) {
    double T = points == 1 ? lo : lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1));
    if (i == points - 1) T = hi;
    zc_tail_row row{};
    if (zc_status s = zc_tail_bounds(T, &row); s != ZC_OK) return report(s);
    std::string line = num(row.T);
    for (double v : {row.moment0, row.moment1, row.moment2, row.recip_partial, row.b_tail}) line += "," + num(v);
    std::fprintf(out.f, "%s\n", line.c_str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified bounds from zeta zero tables"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub, bool needs_table) {
    if (needs_table) {
      sub->add_option("--zeros", common.zeros, "zero table file (default: $ZEROS_PATH)");
      sub->add_option("--radius", common.radius, "accuracy radius of tabulated ordinates")->check(CLI::NonNegativeNumber);
    }
    sub->add_option("--workers", common.workers, "worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--deterministic", common.deterministic, "omit run-dependent lines from the output");
    sub->add_option("--out", common.out, "output file (default: stdout)");
  };

  double A = 0.28;
  auto* validate = app.add_subcommand("validate-zeros", "check the zero-counting formula at every gap");
  add_common(validate, true);
  validate->add_option("--A", A, "counting constant");

  double T = 0;
  auto* bound_b = app.add_subcommand("bound-b", "certify the upper bound for B");
  add_common(bound_b, true);
  bound_b->add_option("--T", T, "truncation height")->required();

  std::string which;
  double cT = 0, cY = 0;
  auto* constants = app.add_subcommand("constants", "certify c1, c2 or c3");
  add_common(constants, true);
  constants->add_option("--which", which, "constant")->required()->check(CLI::IsMember({"c1", "c2", "c3"}));
  auto* cT_opt = constants->add_option("--T", cT, "height for c1, c3 (or Y for c2)");
  auto* cY_opt = constants->add_option("--Y", cY, "height for c2");

  double Y = 0;
  auto* sofy = app.add_subcommand("s-of-y", "certify S(Y), a lower bound for c2");
  add_common(sofy, true);
  sofy->add_option("--Y", Y, "height")->required();

  double dT = 0, lambda = 10.876;
  auto* delta = app.add_subcommand("delta", "certify delta and the lower bound for I(X)/X^2");
  add_common(delta, true);
  delta->add_option("--T", dT, "height")->required();
  delta->add_option("--lambda", lambda, "test function parameter")->check(CLI::PositiveNumber);

  uint64_t from = 1, to = 10000000, stride = 1;
  auto* ms = app.add_subcommand("meansquare", "stream X, I(X), I(X)/X^2 as CSV");
  add_common(ms, false);
  ms->add_option("--from", from)->check(CLI::PositiveNumber);
  ms->add_option("--to", to)->check(CLI::PositiveNumber);
  ms->add_option("--stride", stride)->check(CLI::PositiveNumber);

  bool tail_table = false;
  double t_from = 100, t_to = 446000;
  int points = 13;
  auto* tails = app.add_subcommand("tails", "closed-form tail bounds on a geometric T grid");
  add_common(tails, false);
  tails->add_flag("--table", tail_table, "print the table (default)");
  tails->add_option("--from", t_from);
  tails->add_option("--to", t_to);
  tails->add_option("--points", points);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::fprintf(stderr, "zetacert: %s\n\n%s", e.what(), app.help().c_str());
    return kExitInput;
  }

  if (*validate) return run_validate(common, A);
  if (*bound_b) return run_constant(common, "B", T);
  if (*constants) {
    double h = which == "c2" ? (*cY_opt ? cY : cT) : (*cT_opt ? cT : cY);
    if (!*cT_opt && !*cY_opt) {
      std::fprintf(stderr, "zetacert: constants needs --T (or --Y for c2)\n");
      return kExitInput;
    }
    return run_constant(common, which.c_str(), h);
  }
  if (*sofy) return run_constant(common, "c2", Y);
  if (*delta) return run_delta(common, dT, lambda);
  if (*ms) {
    if (to < from) {
      std::fprintf(stderr, "zetacert: meansquare needs --from <= --to\n");
      return kExitInput;
    }
    return run_meansquare(common, from, to, stride);
  }
  if (*tails) return run_tails(common, t_from, t_to, points);
  return kExitInput;
}
