#include "zetacert/certificate.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace zetacert {

namespace {

std::string print_sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

}  // namespace

std::string format_exact(double v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string format_down(double v, int digits) {
  if (!std::isfinite(v) || v == 0) return print_sig(v, digits);
  double probe = v;
  for (int i = 0; i < 64; ++i) {
    std::string s = print_sig(probe, digits);
    // strtod(s) < v forces the exact decimal below v
    if (std::strtod(s.c_str(), nullptr) < v) return s;
    probe -= std::fabs(probe) * std::pow(10.0, 1 - digits) / 2;
  }
  return print_sig(-HUGE_VAL, digits);
}

std::string format_up(double v, int digits) {
  if (v == 0) return "0";
  std::string s = format_down(-v, digits);
  if (!s.empty() && s.front() == '-') return s.substr(1);
  return "-" + s;
}

void KeyValueText::add(std::string_view key, std::string value) { entries_.emplace_back(std::string(key), std::move(value)); }

std::string KeyValueText::str() const {
  std::string out;
  for (const auto& [k, v] : entries_) {
    out += k;
    out += " = ";
    out += v;
    out += '\n';
  }
  return out;
}

}  // namespace zetacert
