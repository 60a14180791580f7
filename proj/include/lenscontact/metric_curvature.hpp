#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>

#include "lenscontact/contact_form.hpp"
#include "lenscontact/reeb_dynamics.hpp"

namespace lenscontact {

/// Reeb-invariant metric dr² + w(r)²(dθ − φ dz)² + α⊗α of one chart, with
/// w = (chart profile)'.
class ChartMetric {
 public:
  static ChartMetric from_form(const ContactForm& form, Chart chart);

  Chart chart() const { return coeffs_.chart; }
  double phi() const { return phi_; }
  const FormCoefficients& coefficients() const { return coeffs_; }
  double w(double r) const;

  /// Copy with w multiplied by `factor` (sensitivity checks).
  ChartMetric with_w_scale(double factor) const;

  /// Gram matrix in the (∂r, ∂θ, ∂z) frame; r must lie in (0, 1).
  Eigen::Matrix3d gram(double r) const;

  /// Gram matrix in Cartesian (∂x, ∂y, ∂z) coordinates, x + iy = re^{iθ};
  /// valid at the core r = 0 as well.
  Eigen::Matrix3d gram_cartesian(double x, double y) const;

 private:
  ChartMetric(FormCoefficients coeffs, RadialFn profile, double phi)
      : coeffs_(std::move(coeffs)), profile_(std::move(profile)), phi_(phi) {}

  FormCoefficients coeffs_;
  RadialFn profile_;
  double phi_;
  double w_scale_ = 1.0;
};

/// Polar Gram matrix at pt for 0 < r < 1; at r = 0 the Cartesian matrix at
/// the core.
Eigen::Matrix3d metric_at(const ContactForm& form, const ChartPoint& pt);

struct CompatibilityReport {
  double reeb_dual = 0.0;  // max |g(R, ·) − α|
  double volume = 0.0;     // max |√det g − (f g' − g f')| / density
  double radial = 0.0;     // max |g(R, ∂r)|
  double spd_failures = 0; // points where Cholesky failed
  double max_residual() const;
};

/// Residuals at n points with 0 < r < 1/2 (the canonical half of the chart).
CompatibilityReport verify_compatibility(const ChartMetric& metric, int n_samples,
                                         std::uint64_t seed = 1);
CompatibilityReport verify_compatibility(const ContactForm& form, int n_samples,
                                         std::uint64_t seed = 1);

/// Metric field on a chart, as a function of the full point.
using MetricField = std::function<Eigen::Matrix3d(const ChartPoint&)>;

/// Max entry of the symmetric finite-difference Lie derivative of `metric`
/// along the translation flow with constant velocity `v` (the Jacobian of the
/// flow is the identity in (r, θ, z)).
double lie_derivative_residual(const MetricField& metric, Chart chart,
                               ReebVelocity v, int n_samples, double h,
                               std::uint64_t seed = 1);

/// Lie derivative of the form's chart-0 and chart-1 metrics along R.
double reeb_invariance_check(const ContactForm& form, int n_samples, double h = 1e-4,
                             std::uint64_t seed = 1);

/// Gaussian curvature −w''/w of dr² + w²dψ² with w = profile'. Within
/// r_min = 1e−3 of an endpoint where w vanishes, the even interpolant
/// κ(e) + (κ(r_min) − κ(e))·(d/r_min)² is used, with κ(e) = −a''''(e)/a''(e)
/// and d the distance to the endpoint.
double quotient_curvature(const RadialFn& profile, double r);

/// Curvature of the chart quotient metric. Error(MetricGauge) when the chart
/// metric is not smooth at the cores (a''(0) ≠ 1 or g₁''(0) ≠ 1).
double kappa(const ContactForm& form, Chart chart, double r);

/// |a''(0) − 1| and |g₁''(0) − 1| both below 1e−8.
bool metric_is_smooth(const ContactForm& form);

/// ∫ κ α∧dα over chart 0 by quadrature.
double total_curvature(const ContactForm& form);

/// Telescoped value 2πτ₀(a''(0) − a''(1)) of the same integral.
double total_curvature_closed_form(const ContactForm& form);

}  // namespace lenscontact
