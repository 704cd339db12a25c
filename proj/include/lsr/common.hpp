#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace lsr {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Relative singular-value cutoff shared by every rank decision.
inline constexpr double kDefaultRankTol = 1e-9;

/// Absolute output tolerance for convolution-representation checks.
inline constexpr double kDefaultGcrTol = 1e-9;

/// Default tolerance on morphism and isomorphism residuals.
inline constexpr double kDefaultMorphismTol = 1e-9;

/// Refuse to materialize dense matrices with more entries than this.
inline constexpr std::int64_t kDefaultEntryCap = 100'000'000;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mode or letter outside the declared alphabet.
class ModeError : public Error {
 public:
  using Error::Error;
};

/// Incompatible matrix or vector dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A lookup past the depth a finite table covers.
class DepthError : public Error {
 public:
  using Error::Error;
};

/// An allocation that would exceed the configured entry cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A malformed input file; the message names the offending field.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Raised when data fails a post-hoc consistency check, e.g. when a finite
/// Hankel matrix was too shallow for the requested reconstruction.
class HypothesisError : public Error {
 public:
  HypothesisError(const std::string& what, double max_residual)
      : Error(what), max_residual_(max_residual) {}
  double max_residual() const noexcept { return max_residual_; }

 private:
  double max_residual_;
};

}  // namespace lsr
