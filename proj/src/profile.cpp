#include "lenscontact/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lenscontact/error.hpp"
#include "lenscontact/numerics.hpp"

namespace lenscontact {

namespace {

using numerics::kPi;
using numerics::kTwoPi;

constexpr double kAnalyticTol = 1e-12;
constexpr double kFiniteDifferenceTol = 1e-8;
constexpr double kNormalizationTol = 1e-10;

double binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// Central difference of odd order n at x with half-integer offsets.
double central_difference(const std::function<double(double)>& f, double x, int n,
                          double h) {
  // Pair the mirrored samples first so symmetric inputs cancel exactly.
  double acc = 0.0;
  for (int k = 0; 2 * k < n; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double offset = (0.5 * n - k) * h;
    acc += sign * binomial(n, k) * (f(x + offset) - f(x - offset));
  }
  return acc / std::pow(h, n);
}

double richardson_odd_derivative(const std::function<double(double)>& f, double x,
                                 int n, double h) {
  const double coarse = central_difference(f, x, n, h);
  const double fine = central_difference(f, x, n, 0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

bool slope_positive_on_unit(const ProfileSpec& profile) {
  constexpr int kSamples = 4096;
  for (int i = 0; i <= kSamples; ++i) {
    if (!(profile.poly_slope(static_cast<double>(i) / kSamples) > 0.0)) return false;
  }
  return true;
}

}  // namespace

BoundaryData BoundaryData::from_triple(const LensParams& lens, double tau0, double phi0) {
  if (!(tau0 > 0.0)) {
    throw Error(ErrorKind::InvalidRotation, "tau0 must be positive");
  }
  const double factor = static_cast<double>(lens.q) + static_cast<double>(lens.p) * phi0;
  if (!(factor > 0.0)) {
    throw Error(ErrorKind::InvalidRotation,
                "p*phi0 + q = " + std::to_string(factor) + " is not positive");
  }
  BoundaryData b;
  b.lens = lens;
  b.tau0 = tau0;
  b.phi0 = phi0;
  b.a_end = static_cast<double>(lens.p) * tau0 / (kTwoPi * factor);
  b.app0 = 1.0;
  b.app1 = -1.0 / factor;
  return b;
}

double BoundaryData::rotation_factor() const {
  return static_cast<double>(lens.q) + static_cast<double>(lens.p) * phi0;
}

double BoundaryData::tau1() const { return tau0 / rotation_factor(); }

Jet u_jet(double r) {
  const bool far = r > 0.5;
  const double t = far ? 1.0 - r : r;
  const double sin_pr = std::sin(kPi * t);
  const double cos_pr = far ? -std::cos(kPi * t) : std::cos(kPi * t);
  double u = 0.0;
  if (far) {
    const double c = std::cos(0.5 * kPi * t);
    u = c * c;
  } else {
    const double s = std::sin(0.5 * kPi * t);
    u = s * s;
  }
  const double p2 = kPi * kPi;
  return Jet({u, 0.5 * kPi * sin_pr, 0.5 * p2 * cos_pr, -0.5 * p2 * kPi * sin_pr,
              -0.5 * p2 * p2 * cos_pr});
}

ProfileSpec::ProfileSpec(std::vector<double> coeffs, BoundaryData boundary)
    : coeffs_(std::move(coeffs)), boundary_(boundary) {
  if (coeffs_.empty()) {
    throw Error(ErrorKind::InvalidProfile, "profile needs at least one coefficient");
  }
}

Jet ProfileSpec::jet(double r) const {
  const Jet u = u_jet(r);
  Jet acc = Jet::constant(coeffs_.back());
  for (auto i = coeffs_.size() - 1; i-- > 0;) acc = acc * u + coeffs_[i];
  return acc * u;
}

double ProfileSpec::eval(double r, int order) const {
  if (order < 0 || order > static_cast<int>(Jet::kOrder)) {
    throw Error(ErrorKind::UnsupportedOrder,
                "derivative order " + std::to_string(order) + " > 4");
  }
  return jet(r)[static_cast<std::size_t>(order)];
}

double ProfileSpec::poly(double u) const {
  double acc = 0.0;
  for (auto i = coeffs_.size(); i-- > 0;) acc = acc * u + coeffs_[i];
  return acc * u;
}

double ProfileSpec::poly_slope(double u) const {
  double acc = 0.0;
  for (auto i = coeffs_.size(); i-- > 0;) acc = acc * u + static_cast<double>(i + 1) * coeffs_[i];
  return acc;
}

ProfileSpec bernstein_profile(const BoundaryData& boundary, int k, double slope0,
                              double slope1) {
  if (k < 2) throw Error(ErrorKind::ProfileConstruction, "k must be at least 2");
  const double c = 6.0 * (boundary.a_end - (slope0 + slope1) / (k + 1));
  std::vector<double> coeffs(static_cast<std::size_t>(k + 1), 0.0);
  for (int j = 0; j <= k; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    coeffs[static_cast<std::size_t>(j)] += slope0 * sign * binomial(k, j) / (j + 1);
  }
  coeffs[static_cast<std::size_t>(k)] += slope1 / (k + 1);
  coeffs[1] += c / 2.0;
  coeffs[2] -= c / 3.0;
  double total = 0.0;
  for (double v : coeffs) total += v;
  coeffs.back() += boundary.a_end - total;
  return ProfileSpec(std::move(coeffs), boundary);
}

namespace {

BoundaryData boundary_for_periods(const LensParams& lens, double tau0, double tau1) {
  if (!(tau0 > 0.0) || !(tau1 > 0.0)) {
    throw Error(ErrorKind::ProfileConstruction, "periods must be positive");
  }
  const double phi0 = (tau0 / tau1 - static_cast<double>(lens.q)) / static_cast<double>(lens.p);
  return BoundaryData::from_triple(lens, tau0, phi0);
}

// a''(0) = P'(0)·π²/2 and a''(1) = −P'(1)·π²/2.
double slope_for_second_derivative(double app) { return 2.0 * std::abs(app) / (kPi * kPi); }

}  // namespace

ProfileSpec profile_with_degree(const LensParams& lens, double tau0, double tau1,
                                int degree) {
  if (degree < 3 || degree > 9) {
    throw Error(ErrorKind::ProfileConstruction,
                "degree " + std::to_string(degree) + " outside 3..9");
  }
  const BoundaryData b = boundary_for_periods(lens, tau0, tau1);
  return bernstein_profile(b, degree - 1, slope_for_second_derivative(b.app0),
                           slope_for_second_derivative(b.app1));
}

ProfileSpec default_profile(const LensParams& lens, double tau0, double tau1) {
  for (int degree = 3; degree <= 9; ++degree) {
    ProfileSpec candidate = profile_with_degree(lens, tau0, tau1, degree);
    if (slope_positive_on_unit(candidate)) return candidate;
  }
  throw Error(ErrorKind::ProfileConstruction,
              "no monotone profile up to degree 9 for tau0 = " + std::to_string(tau0) +
                  ", tau1 = " + std::to_string(tau1));
}

SmoothnessReport validate_smoothness(const ProfileSpec& profile, int max_order, double h) {
  if (max_order > static_cast<int>(Jet::kOrder)) {
    SmoothnessReport report = validate_smoothness(
        [&profile](double r) { return profile.eval(r, 0); }, profile.boundary(), max_order, h);
    const Jet j0 = profile.jet(0.0);
    const Jet j1 = profile.jet(1.0);
    report.app0_residual = std::abs(j0[2] - profile.boundary().app0);
    report.app1_residual = std::abs(j1[2] - profile.boundary().app1);
    report.metric_normalized = report.app0_residual < kNormalizationTol &&
                               report.app1_residual < kNormalizationTol;
    return report;
  }
  const BoundaryData& b = profile.boundary();
  const Jet j0 = profile.jet(0.0);
  const Jet j1 = profile.jet(1.0);
  SmoothnessReport report;
  report.tolerance = kAnalyticTol;
  report.a0_residual = std::abs(j0[0]);
  report.a1_residual = std::abs(j1[0] - b.a_end);
  for (int n = 1; n <= max_order; n += 2) {
    report.odd_at_0 = std::max(report.odd_at_0, std::abs(j0[static_cast<std::size_t>(n)]));
    report.odd_at_1 = std::max(report.odd_at_1, std::abs(j1[static_cast<std::size_t>(n)]));
  }
  report.app0_residual = std::abs(j0[2] - b.app0);
  report.app1_residual = std::abs(j1[2] - b.app1);
  report.metric_normalized =
      report.app0_residual < kNormalizationTol && report.app1_residual < kNormalizationTol;
  if (report.a0_residual >= report.tolerance) {
    report.failure = "a(0) != 0";
  } else if (report.a1_residual >= report.tolerance) {
    report.failure = "a(1) != p*tau0/(2*pi*(p*phi0+q))";
  } else if (report.odd_at_0 >= report.tolerance) {
    report.failure = "odd derivative nonzero at r=0";
  } else if (report.odd_at_1 >= report.tolerance) {
    report.failure = "odd derivative nonzero at r=1";
  }
  report.pass = report.failure.empty();
  return report;
}

SmoothnessReport validate_smoothness(const std::function<double(double)>& a,
                                     const BoundaryData& boundary, int max_order,
                                     double h) {
  SmoothnessReport report;
  report.tolerance = kFiniteDifferenceTol;
  report.a0_residual = std::abs(a(0.0));
  report.a1_residual = std::abs(a(1.0) - boundary.a_end);
  for (int n = 1; n <= max_order; n += 2) {
    report.odd_at_0 =
        std::max(report.odd_at_0, std::abs(richardson_odd_derivative(a, 0.0, n, h)));
    report.odd_at_1 =
        std::max(report.odd_at_1, std::abs(richardson_odd_derivative(a, 1.0, n, h)));
  }
  if (report.a0_residual >= report.tolerance) {
    report.failure = "a(0) != 0";
  } else if (report.a1_residual >= report.tolerance) {
    report.failure = "a(1) != p*tau0/(2*pi*(p*phi0+q))";
  } else if (report.odd_at_0 >= report.tolerance) {
    report.failure = "odd derivative nonzero at r=0";
  } else if (report.odd_at_1 >= report.tolerance) {
    report.failure = "odd derivative nonzero at r=1";
  }
  report.pass = report.failure.empty();
  return report;
}

bool validate_monotone(const std::function<double(double)>& slope, int n, double margin) {
  if (n < 1) return false;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < n; ++k) {
    const double r = 0.5 * (1.0 - std::cos(kPi * (2.0 * k + 1.0) / (2.0 * n)));
    const double v = slope(r);
    if (!(v > 0.0)) return false;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return lo >= margin * hi;
}

bool validate_monotone(const ProfileSpec& profile, int n, double margin) {
  return validate_monotone([&profile](double r) { return profile.eval(r, 1); }, n, margin);
}

RadialFn induced_a1(const ProfileSpec& profile) {
  const BoundaryData& b = profile.boundary();
  const double constant = static_cast<double>(b.lens.p) * b.tau0 / kTwoPi;
  const double factor = b.rotation_factor();
  return [profile, constant, factor](double r) {
    return constant - factor * profile.jet(1.0 - r).reflected();
  };
}

}  // namespace lenscontact
