#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "zetacert/zeros.hpp"

namespace zctest {

// The first 100100 ordinates, produced by the zetazeros fixture step.
inline const zetacert::ZeroTable& fixture_table() {
  static const zetacert::ZeroTable table = [] {
    std::string path = zetacert::default_zeros_path();
    if (path.empty()) throw std::runtime_error("ZEROS_PATH is not set");
    return zetacert::ZeroTable::load(path, zetacert::kDefaultRadius);
  }();
  return table;
}

// Height just above the 100000th ordinate.
inline constexpr double kDeskHeight = 74920.83;

}  // namespace zctest
