#include "zetacert/zetacert.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <map>
#include <new>
#include <string>

#include "zetacert/constants.hpp"
#include "zetacert/lowerbound.hpp"
#include "zetacert/meansquare.hpp"
#include "zetacert/tails.hpp"
#include "zetacert/zeros.hpp"

struct zc_table {
  zetacert::ZeroTable table;
};

struct zc_certificate {
  std::string text;
  bool valid = false;
  std::map<std::string, double> numbers;
};

namespace {

thread_local std::string g_last_error;

zc_status fail(zc_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <class Fn>
zc_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const zetacert::ParseError& e) {
    return fail(ZC_ERR_PARSE, e.what());
  } catch (const zetacert::IngestionError& e) {
    return fail(e.line() == 0 ? ZC_ERR_IO : ZC_ERR_PARSE, e.what());
  } catch (const zetacert::HeightError& e) {
    return fail(ZC_ERR_HEIGHT, e.what());
  } catch (const zetacert::AmbiguityError& e) {
    return fail(ZC_ERR_AMBIGUOUS, e.what());
  } catch (const zetacert::DomainError& e) {
    return fail(ZC_ERR_DOMAIN, e.what());
  } catch (const zetacert::Error& e) {
    return fail(ZC_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ZC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ZC_ERR_INTERNAL, e.what());
  }
}

zc_interval to_c(const zetacert::Interval& x) { return {x.lo(), x.hi()}; }

zetacert::SumOptions sum_options(const zc_run_options* o) {
  zetacert::SumOptions s;
  s.workers = (o && o->workers > 0) ? o->workers : 1;
  return s;
}

double resolve_height(const zetacert::ZeroTable& t, double h, const zc_run_options* o, bool* snapped) {
  *snapped = false;
  if (o && o->snap_to_gap) return zetacert::snap_height(t, h, snapped);
  return h;
}

zc_certificate* wrap(const std::string& text, bool valid) {
  auto* c = new zc_certificate;
  c->text = text;
  c->valid = valid;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(pos, end - pos);
    pos = end + 1;
    std::size_t eq = line.find(" = ");
    if (eq == std::string::npos) continue;
    std::string value = line.substr(eq + 3);
    char* stop = nullptr;
    double v = std::strtod(value.c_str(), &stop);
    if (stop && *stop == '\0' && !value.empty()) c->numbers[line.substr(0, eq)] = v;
  }
  return c;
}

}  // namespace

extern "C" {

const char* zc_version(void) { return "1.0.0"; }

const char* zc_last_error(void) { return g_last_error.c_str(); }

const char* zc_status_name(zc_status s) {
  switch (s) {
    case ZC_OK: return "ok";
    case ZC_ERR_PARSE: return "parse error";
    case ZC_ERR_DOMAIN: return "domain error";
    case ZC_ERR_HEIGHT: return "height error";
    case ZC_ERR_AMBIGUOUS: return "ambiguous height";
    case ZC_ERR_IO: return "i/o error";
    case ZC_ERR_ARG: return "invalid argument";
    case ZC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

zc_status zc_interval_from_decimal(const char* text, double radius, zc_interval* out) {
  if (!text || !out) return fail(ZC_ERR_ARG, "null argument");
  return guarded([&] {
    *out = to_c(zetacert::parse_decimal(text, radius));
    return ZC_OK;
  });
}

zc_status zc_table_load(const char* path, double radius, zc_table** out) {
  if (!path || !out) return fail(ZC_ERR_ARG, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new zc_table{zetacert::ZeroTable::load(path, radius)};
    return ZC_OK;
  });
}

void zc_table_free(zc_table* t) { delete t; }

size_t zc_table_size(const zc_table* t) { return t ? t->table.size() : 0; }

double zc_table_max_height(const zc_table* t) { return t ? t->table.max_height() : 0; }

zc_status zc_table_ordinate(const zc_table* t, size_t index, zc_interval* out) {
  if (!t || !out) return fail(ZC_ERR_ARG, "null argument");
  if (index >= t->table.size()) return fail(ZC_ERR_ARG, "ordinate index out of range");
  *out = to_c(t->table[index]);
  return ZC_OK;
}

zc_status zc_count_zeros(const zc_table* t, double T, size_t* out) {
  if (!t || !out) return fail(ZC_ERR_ARG, "null argument");
  return guarded([&] {
    *out = zetacert::count_zeros(t->table, T);
    return ZC_OK;
  });
}

zc_status zc_validate_counting(const zc_table* t, double A, zc_validation_summary* out) {
  if (!t || !out) return fail(ZC_ERR_ARG, "null argument");
  return guarded([&] {
    auto rep = zetacert::validate_counting(t->table, A);
    out->checkpoints = rep.checkpoints.size();
    out->failures = rep.failures;
    out->worst_T = rep.worst_T;
    out->worst_margin = to_c(rep.worst_margin);
    out->worst_slack = rep.worst_slack;
    out->ceiling = rep.ceiling;
    out->passed = rep.passed ? 1 : 0;
    return ZC_OK;
  });
}

zc_status zc_tail_bounds(double T, zc_tail_row* out) {
  if (!out) return fail(ZC_ERR_ARG, "null argument");
  return guarded([&] {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    auto upper = [&](auto&& f) {
      try {
        return f().hi();
      } catch (const zetacert::DomainError&) {
        return nan;
      }
    };
    out->T = T;
    out->moment0 = upper([&] { return zetacert::tail_moment_bound(0, T); });
    out->moment1 = upper([&] { return zetacert::tail_moment_bound(1, T); });
    out->moment2 = upper([&] { return zetacert::tail_moment_bound(2, T); });
    out->recip_partial = upper([&] { return zetacert::recip_gamma_partial_bound(T); });
    out->b_tail = upper([&] { return zetacert::b_tail_bound(T); });
    return ZC_OK;
  });
}

zc_status zc_delta_tail(double T, double lambda, zc_interval gamma1, zc_interval* out) {
  if (!out) return fail(ZC_ERR_ARG, "null argument");
  return guarded([&] {
    zetacert::Interval g(gamma1.lo, gamma1.hi);
    *out = to_c(zetacert::delta_tail_bound(T, lambda, g));
    return ZC_OK;
  });
}

zc_status zc_certify_constant(const zc_table* t, const char* which, double height, const zc_run_options* opts,
                              zc_certificate** out) {
  if (!t || !which || !out) return fail(ZC_ERR_ARG, "null argument");
  *out = nullptr;
  return guarded([&] {
    const auto& table = t->table;
    bool snapped = false;
    double h = resolve_height(table, height, opts, &snapped);
    auto opt = sum_options(opts);
    std::string w = which;
    zetacert::BoundCertificate c;
    if (w == "B") {
      c = zetacert::b_bounds(table, h, opt);
    } else if (w == "S") {
      c.name = "S";
      c.height = h;
      c.zeros_used = zetacert::count_zeros(table, h);
      c.source = table.source_path();
      c.tail_part = zetacert::b_tail_bound(h) / zetacert::Interval(5);
      c.finite_part = zetacert::s_kernel_sum(table, h, opt);
      c.total_lower = c.finite_part.lo();
      c.total_upper = zetacert::rounding::add_up(c.finite_part.hi(), c.tail_part.hi());
    } else if (w == "c1") {
      c = zetacert::c1_bound(table, h);
    } else if (w == "c2") {
      c = zetacert::c2_bound(table, h, opt);
    } else if (w == "c3") {
      c = zetacert::c3_bound(table, h);
    } else {
      return fail(ZC_ERR_ARG, "unknown constant '" + w + "' (expected B, S, c1, c2 or c3)");
    }
    c.snapped = snapped;
    c.requested_height = height;
    bool valid = c.total_lower <= c.total_upper && std::isfinite(c.total_lower) &&
                 (w == "c2" ? c.total_lower > 0 : std::isfinite(c.total_upper));
    *out = wrap(c.serialize(), valid);
    return ZC_OK;
  });
}

zc_status zc_certify_delta(const zc_table* t, double T, double lambda, const zc_run_options* opts,
                           zc_certificate** out) {
  if (!t || !out) return fail(ZC_ERR_ARG, "null argument");
  *out = nullptr;
  return guarded([&] {
    bool snapped = false;
    double h = resolve_height(t->table, T, opts, &snapped);
    auto c = zetacert::certify_lower_bound(t->table, h, lambda, sum_options(opts));
    c.snapped = snapped;
    c.requested_T = T;
    *out = wrap(c.serialize(), c.valid);
    return ZC_OK;
  });
}

const char* zc_certificate_text(const zc_certificate* c) { return c ? c->text.c_str() : ""; }

int zc_certificate_valid(const zc_certificate* c) { return c && c->valid ? 1 : 0; }

zc_status zc_certificate_number(const zc_certificate* c, const char* key, double* out) {
  if (!c || !key || !out) return fail(ZC_ERR_ARG, "null argument");
  auto it = c->numbers.find(key);
  if (it == c->numbers.end()) return fail(ZC_ERR_ARG, std::string("certificate has no numeric key ") + key);
  *out = it->second;
  return ZC_OK;
}

void zc_certificate_free(zc_certificate* c) { delete c; }

zc_status zc_jump_at(const zc_table* t, size_t k, zc_jump* out) {
  if (!t || !out) return fail(ZC_ERR_ARG, "null argument");
  return guarded([&] {
    auto j = zetacert::jump_at(t->table, k);
    *out = {to_c(j.total), to_c(j.diagonal), to_c(j.antidiagonal), to_c(j.sum_a), to_c(j.sum_b), to_c(j.sum_c)};
    return ZC_OK;
  });
}

zc_status zc_psi(uint64_t n, double* hi, double* lo) {
  if (!hi || !lo) return fail(ZC_ERR_ARG, "null argument");
  return guarded([&] {
    auto v = zetacert::psi_prefix(n);
    *hi = v.hi;
    *lo = v.lo;
    return ZC_OK;
  });
}

zc_status zc_mean_square_I(uint64_t X, double* out) {
  if (!out) return fail(ZC_ERR_ARG, "null argument");
  return guarded([&] {
    *out = zetacert::mean_square_I(X);
    return ZC_OK;
  });
}

zc_status zc_j_prefix(uint64_t X, double* out) {
  if (!out) return fail(ZC_ERR_ARG, "null argument");
  return guarded([&] {
    *out = zetacert::j_prefix(X);
    return ZC_OK;
  });
}

zc_status zc_stream_mean_square(uint64_t from, uint64_t to, uint64_t stride, unsigned workers, zc_record_sink sink,
                                void* user) {
  if (!sink) return fail(ZC_ERR_ARG, "null sink");
  return guarded([&] {
    zetacert::stream_mean_square(
        from, to, stride,
        [&](const zetacert::MeanSquareRecord& r) { return sink(user, r.X, r.I, r.I_over_X2) != 0; },
        workers == 0 ? 1 : workers);
    return ZC_OK;
  });
}

zc_status zc_explicit_residual(const zc_table* t, double x, double T, double* out) {
  if (!t || !out) return fail(ZC_ERR_ARG, "null argument");
  return guarded([&] {
    *out = zetacert::explicit_formula_residual(x, t->table, T);
    return ZC_OK;
  });
}

}  // extern "C"
