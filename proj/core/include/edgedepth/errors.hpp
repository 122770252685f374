#pragma once

#include <stdexcept>
#include <string>

namespace edgedepth {

/// Base class for all library errors.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text (edge lists, ideal files). Carries the 1-based line.
struct parse_error : error {
  parse_error(const std::string& what, int line_no)
      : error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
  int line;
};

/// Instance exceeds a configured feasibility cap; refusing rather than hanging.
struct infeasible_error : error {
  explicit infeasible_error(const std::string& what) : error(what) {}
};

}  // namespace edgedepth
