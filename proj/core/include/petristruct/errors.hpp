#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace petristruct {

/// Base class of every error raised by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed net text. Line and column are 1-based.
struct parse_error : error {
  parse_error(std::size_t line, std::size_t column, const std::string& msg)
      : error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

/// Unknown identifier, dimension mismatch, malformed net values.
struct domain_error : error {
  using error::error;
};

/// Firing a transition that is not enabled.
struct not_enabled_error : error {
  not_enabled_error(const std::string& msg, std::size_t index, std::string place)
      : error(msg), index(index), place(std::move(place)) {}
  /// Position in the firing sequence (0 for single firings).
  std::size_t index;
  /// First place whose marking is below the Pre weight.
  std::string place;
};

/// An operation whose precondition was violated by the caller.
struct precondition_error : error {
  using error::error;
};

/// Analysis on an exploration truncated by its state cap.
struct incomplete_graph_error : error {
  using error::error;
};

}  // namespace petristruct
