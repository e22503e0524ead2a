#include "zetacert/zeros.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

namespace zetacert {

namespace {

constexpr double kFirstOrdinateLo = 14.13472514;
constexpr double kFirstOrdinateHi = 14.13472515;

std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

void check_entry(const std::vector<Interval>& seen, const Interval& v, const std::string& source, std::size_t line) {
  if (!(v.lo() > 14)) throw IngestionError(source, line, "ordinate enclosure does not lie above 14");
  if (seen.empty()) {
    if (!v.overlaps(Interval::raw(kFirstOrdinateLo, kFirstOrdinateHi))) {
      throw IngestionError(source, line, "first entry does not enclose the first zero ordinate 14.13472514...");
    }
    return;
  }
  const Interval& prev = seen.back();
  if (!(v.mid() > prev.mid())) throw IngestionError(source, line, "entries are not strictly ascending");
  if (!(prev.hi() < v.lo())) throw IngestionError(source, line, "enclosure overlaps the previous entry");
}

}  // namespace

ZeroTable ZeroTable::from_text(const std::string& text, double radius, const std::string& source) {
  if (!(radius >= 0)) throw DomainError("radius must be nonnegative");
  ZeroTable t;
  t.source_ = source;
  t.radius_ = radius;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    ++line_no;
    std::string_view line = trim(std::string_view(text).substr(pos, end - pos));
    pos = end + 1;
    if (line.empty() || line.front() == '#') continue;
    Interval v;
    try {
      v = parse_decimal(line, radius);
    } catch (const ParseError& e) {
      throw IngestionError(source, line_no, e.what());
    }
    check_entry(t.ordinates_, v, source, line_no);
    t.ordinates_.push_back(v);
  }
  if (t.ordinates_.empty()) throw IngestionError(source, line_no, "table contains no ordinates");
  return t;
}

ZeroTable ZeroTable::load(const std::string& path, double radius) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestionError(path, 0, "cannot open zero table");
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str(), radius, path);
}

ZeroTable ZeroTable::from_intervals(std::vector<Interval> ordinates, double radius, const std::string& source) {
  ZeroTable t;
  t.source_ = source;
  t.radius_ = radius;
  t.ordinates_.reserve(ordinates.size());
  for (std::size_t i = 0; i < ordinates.size(); ++i) {
    check_entry(t.ordinates_, ordinates[i], source, i + 1);
    t.ordinates_.push_back(ordinates[i]);
  }
  if (t.ordinates_.empty()) throw IngestionError(source, 0, "table contains no ordinates");
  return t;
}

ZeroTable ZeroTable::prefix(std::size_t n) const {
  if (n == 0 || n > size()) throw DomainError("prefix length must be between 1 and the table size");
  ZeroTable t;
  t.source_ = source_;
  t.radius_ = radius_;
  t.ordinates_.assign(ordinates_.begin(), ordinates_.begin() + static_cast<std::ptrdiff_t>(n));
  return t;
}

std::size_t ZeroTable::lower_index(double T) const noexcept {
  auto it = std::lower_bound(ordinates_.begin(), ordinates_.end(), T,
                             [](const Interval& g, double x) { return g.hi() < x; });
  return static_cast<std::size_t>(it - ordinates_.begin());
}

bool ZeroTable::collides(double T) const noexcept {
  std::size_t i = lower_index(T);
  return i < size() && ordinates_[i].lo() <= T;
}

std::string default_zeros_path() {
  const char* p = std::getenv("ZEROS_PATH");
  return p ? std::string(p) : std::string();
}

std::size_t count_zeros(const ZeroTable& table, double T) {
  if (!(T <= table.max_height())) {
    throw HeightError("height " + std::to_string(T) + " exceeds the zero table ceiling " +
                      std::to_string(table.max_height()));
  }
  if (table.collides(T)) {
    throw AmbiguityError("height " + std::to_string(T) + " lies inside an ordinate enclosure");
  }
  return table.lower_index(T);
}

Interval counting_main_term(double T) {
  Interval t(T);
  Interval u = t / two_pi();
  if (u.hi() < 1) throw DomainError("counting main term needs T >= 2 pi");
  return u * log(u) - u + Interval(0.875);
}

ValidationReport validate_counting(const ZeroTable& table, double A) {
  if (table.size() == 0) throw DomainError("empty zero table");
  if (!(A > 0)) throw DomainError("counting constant A must be positive");
  ValidationReport rep;
  rep.counting_constant = A;
  Interval a(A);
  auto check = [&](double T, std::size_t count) {
    Checkpoint c;
    c.T = T;
    c.count = count;
    c.main_term = counting_main_term(T);
    c.margin = abs(Interval(static_cast<double>(count)) - c.main_term);
    c.allowance = a * log(Interval(T));
    c.ok = c.margin.hi() <= c.allowance.lo();
    double slack = c.allowance.lo() - c.margin.hi();
    if (rep.checkpoints.empty() || slack < rep.worst_slack) {
      rep.worst_slack = slack;
      rep.worst_margin = c.margin;
      rep.worst_T = T;
    }
    if (!c.ok) ++rep.failures;
    rep.checkpoints.push_back(c);
  };
  rep.checkpoints.reserve(table.size() + 1);
  // 2 pi itself, where the main term is -1/8
  double two_pi_up = two_pi().hi();
  if (two_pi_up < table[0].lo()) check(two_pi_up, 0);
  for (std::size_t k = 1; k < table.size(); ++k) {
    double mid = table[k - 1].hi() + (table[k].lo() - table[k - 1].hi()) / 2;
    if (!(table[k - 1].hi() < mid && mid < table[k].lo())) {
      throw DomainError("no representable checkpoint between entries " + std::to_string(k) + " and " +
                        std::to_string(k + 1));
    }
    check(mid, k);
  }
  double top = rounding::next_up(table.max_height());
  check(top, table.size());
  rep.ceiling = top;
  rep.passed = rep.failures == 0;
  return rep;
}

double snap_height(const ZeroTable& table, double T, bool* snapped) {
  if (snapped) *snapped = false;
  if (!table.collides(T)) return T;
  std::size_t i = table.lower_index(T);
  const Interval& hit = table[i];
  double below = i > 0 ? table[i - 1].hi() + (hit.lo() - table[i - 1].hi()) / 2
                       : -std::numeric_limits<double>::infinity();
  double above = i + 1 < table.size() ? hit.hi() + (table[i + 1].lo() - hit.hi()) / 2
                                      : rounding::next_up(hit.hi());
  if (snapped) *snapped = true;
  return (T - below <= above - T) ? below : above;
}

}  // namespace zetacert
