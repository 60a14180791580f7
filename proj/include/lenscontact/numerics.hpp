#pragma once

#include <cstdint>
#include <functional>
#include <random>

namespace lenscontact::numerics {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Adaptive 15-point Gauss–Kronrod on [lo, hi]. Throws Error(Numeric) when the
/// error estimate stays above `abs_tol` (plus a relative floor at the working
/// precision of the integral).
QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, double abs_tol = 1e-12);

/// Solves target(x) = y for x in [lo, hi], where target is strictly increasing.
/// Bisection until the bracket is narrower than `bisect_width`, then Newton
/// polish to `tol` using `slope`; falls back to bisection whenever a Newton
/// step leaves the bracket.
double invert_increasing(const std::function<double(double)>& target,
                         const std::function<double(double)>& slope, double y,
                         double lo, double hi, double bisect_width = 1e-6,
                         double tol = 1e-13);

/// Deterministic sampler used by every randomized residual check.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in the open interval (lo, hi).
  double open(double lo, double hi);
  double angle() { return open(0.0, kTwoPi); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace lenscontact::numerics
