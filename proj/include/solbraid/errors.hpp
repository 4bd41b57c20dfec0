#pragma once

#include <stdexcept>
#include <string>

namespace solbraid {

/// Raised when a computation would exceed a configured resource cap
/// (crossing cap on state sums, orbit cap on conjugacy searches, exact
/// integer overflow).  Callers may retry with a larger cap; the library
/// never silently truncates.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// Raised by the text-format parsers.  `line` is 1-based; 0 means the
/// error is not tied to a specific line.
class parse_error : public std::runtime_error {
 public:
  parse_error(int line_no, const std::string& what)
      : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) +
                                             ": " + what
                                       : what),
        line(line_no) {}
  int line;
};

}  // namespace solbraid
