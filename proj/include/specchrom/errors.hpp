#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specchrom {

/// Invalid arguments: bad vertex ids, self-loops, mismatched dimensions,
/// improper colorings, out-of-range generator parameters.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed graph file; carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// An iterative kernel failed to reach its convergence criterion.
class NumericalError : public std::runtime_error {
public:
  NumericalError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

private:
  double achieved_;
};

}  // namespace specchrom
