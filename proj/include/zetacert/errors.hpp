#pragma once

#include <stdexcept>
#include <string>

namespace zetacert {

// Every failure raised by the library derives from Error; the C API maps the
// concrete type onto a status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the domain of an operation (log of a nonpositive
// enclosure, a height below a bound's threshold, division by an enclosure of 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Malformed zero-table file; the message names the offending line.
class IngestionError : public Error {
 public:
  IngestionError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A height beyond what the ingested zero table covers.
class HeightError : public Error {
 public:
  using Error::Error;
};

// A height that falls inside an ordinate enclosure, so the zero count is not
// determined.
class AmbiguityError : public Error {
 public:
  using Error::Error;
};

}  // namespace zetacert
