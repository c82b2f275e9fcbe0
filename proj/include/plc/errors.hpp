#pragma once

#include <stdexcept>
#include <string>

namespace plc {

/// Thrown when an exhaustive search is asked to run above its hard input cap.
struct cap_exceeded : std::runtime_error {
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an enumeration would exceed its work budget.
struct budget_exceeded : std::runtime_error {
  explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Text-format violation. `line` is 1-based within the parsed document.
struct parse_error : std::runtime_error {
  int line;
  parse_error(int line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
};

}  // namespace plc
