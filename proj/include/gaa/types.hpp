#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace gaa {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using VectorXd = VectorX<double>;

/// Marker for the Δ/J → ∞ (zero-width) limit.
inline constexpr double kInfiniteDelta = std::numeric_limits<double>::infinity();

/// Raised when an argument violates a documented precondition.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the tridiagonal eigensolver; carries the eigenvalue index that
/// failed to converge.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string& what, std::size_t index)
      : std::runtime_error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

private:
  std::size_t index_;
};

/// Malformed configuration or dataset text. `line` is 1-based, 0 if unknown.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t line, std::string field)
      : std::runtime_error(what), line_(line), field_(std::move(field)) {}
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

private:
  std::size_t line_;
  std::string field_;
};

}  // namespace gaa
