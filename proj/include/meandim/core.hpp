#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace meandim {

using Complex = std::complex<double>;

/// Base class of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument or configuration was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
/// Carries the best value reached and its error estimate.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double partial_value, double error_estimate)
      : Error(what), partial_value_(partial_value), error_estimate_(error_estimate) {}

  double partial_value() const noexcept { return partial_value_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double partial_value_;
  double error_estimate_;
};

/// Evaluation requested too close to a pole; the caller must switch charts.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Exact search refused an instance that exceeds its hard size limit.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// An iterative solver stopped without reaching its residual target.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Axis-aligned closed rectangle in the plane.
struct Rect {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;

  double width() const noexcept { return x_max - x_min; }
  double height() const noexcept { return y_max - y_min; }
  Complex center() const noexcept { return {0.5 * (x_min + x_max), 0.5 * (y_min + y_max)}; }

  static Rect centered_square(double half_width) {
    return {-half_width, half_width, -half_width, half_width};
  }
};

}  // namespace meandim
