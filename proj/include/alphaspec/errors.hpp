#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alphaspec {

/// Invalid graph construction or a violated operation precondition.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds an exact-search or enumeration cap.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input; offset is the byte position of the first bad byte.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An iterative numeric routine failed to converge or bracket.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, int iterations, double residual)
      : std::runtime_error(what + " [iterations=" + std::to_string(iterations) +
                           ", residual=" + std::to_string(residual) + "]"),
        iterations_(iterations),
        residual_(residual) {}

  int iterations() const noexcept { return iterations_; }
  double residual() const noexcept { return residual_; }

 private:
  int iterations_;
  double residual_;
};

}  // namespace alphaspec
