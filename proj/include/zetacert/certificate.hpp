#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zetacert {

// %.17g, which round-trips every double.
std::string format_exact(double v);

// Decimal with `digits` significant digits that is <= v (resp. >= v).
std::string format_down(double v, int digits = 10);
std::string format_up(double v, int digits = 10);

// Ordered "key = value" lines.
class KeyValueText {
 public:
  void add(std::string_view key, std::string value);
  void add_number(std::string_view key, double v) { add(key, format_exact(v)); }
  std::string str() const;
  const std::vector<std::pair<std::string, std::string>>& entries() const noexcept { return entries_; }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace zetacert
