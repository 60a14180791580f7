#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

namespace lenscontact {

/// Exact arbitrary-precision rational.
using Rational = boost::multiprecision::cpp_rational;

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// Continued-fraction convergents h_n/k_n of x, stopping after `max_count`
/// terms, once k_n would exceed `max_den`, or when the expansion terminates.
std::vector<Fraction> convergents(double x, std::int64_t max_den,
                                  std::size_t max_count = 64);

/// The reduced fraction n/d with d ≤ max_den such that |d·x − n| < tol, found
/// along the convergents of x (the first convergent that clears the test).
/// std::nullopt certifies that no such fraction exists at this resolution.
std::optional<Fraction> rational_detect(double x, std::int64_t max_den, double tol);

/// x mod 1 in [0, 1).
double mod1(double x);

/// Circle distance on ℝ/ℤ.
double mod1_distance(double a, double b);

}  // namespace lenscontact
