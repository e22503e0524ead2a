#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "zetacert/interval.hpp"

namespace zetacert {

inline constexpr double kDefaultRadius = 1e-8;
inline constexpr double kDefaultCountingConstant = 0.28;

// Positive zero ordinates, ascending, each held as an enclosure.
class ZeroTable {
 public:
  static ZeroTable load(const std::string& path, double radius = kDefaultRadius);
  // Same checks as load(); `source` names the origin in error messages.
  static ZeroTable from_text(const std::string& text, double radius, const std::string& source = "<memory>");
  static ZeroTable from_intervals(std::vector<Interval> ordinates, double radius, const std::string& source);

  std::size_t size() const noexcept { return ordinates_.size(); }
  // 0-based: at(0) is the first zero.
  const Interval& at(std::size_t i) const { return ordinates_.at(i); }
  const Interval& operator[](std::size_t i) const noexcept { return ordinates_[i]; }
  std::span<const Interval> ordinates() const noexcept { return ordinates_; }
  const std::string& source_path() const noexcept { return source_; }
  double stated_radius() const noexcept { return radius_; }
  double max_height() const noexcept { return ordinates_.back().hi(); }

  ZeroTable prefix(std::size_t n) const;

  // Index of the first entry whose hi >= T, i.e. the count of entries below T.
  std::size_t lower_index(double T) const noexcept;
  // Whether T lies inside some entry's enclosure.
  bool collides(double T) const noexcept;

  friend bool operator==(const ZeroTable&, const ZeroTable&) = default;

 private:
  ZeroTable() = default;
  std::vector<Interval> ordinates_;
  std::string source_;
  double radius_ = 0;
};

// Value of ZEROS_PATH, or empty.
std::string default_zeros_path();

// Count of tabulated ordinates below T. Throws HeightError above the table and
// AmbiguityError when T falls inside an enclosure.
std::size_t count_zeros(const ZeroTable& table, double T);

// Enclosure of (T/2 pi) log(T/2 pi) - T/2 pi + 7/8.
Interval counting_main_term(double T);

struct Checkpoint {
  double T;
  std::size_t count;
  Interval main_term;
  Interval margin;     // |N(T) - main term|
  Interval allowance;  // A log T
  bool ok;
};

struct ValidationReport {
  std::vector<Checkpoint> checkpoints;
  // margin at the checkpoint with the least room below its allowance
  Interval worst_margin;
  double worst_T = 0;
  double worst_slack = 0;  // allowance.lo - margin.hi there
  double counting_constant = kDefaultCountingConstant;
  double ceiling = 0;       // validation says nothing above this height
  std::size_t failures = 0;
  bool passed = false;
};

ValidationReport validate_counting(const ZeroTable& table, double A = kDefaultCountingConstant);

// Returns T unchanged unless it falls inside an enclosure, in which case the
// nearest midpoint between neighbouring enclosures is returned and *snapped
// is set.
double snap_height(const ZeroTable& table, double T, bool* snapped = nullptr);

}  // namespace zetacert
