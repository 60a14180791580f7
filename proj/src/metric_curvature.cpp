#include "lenscontact/metric_curvature.hpp"

#include <Eigen/Cholesky>
#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <string>

#include "lenscontact/error.hpp"
#include "lenscontact/numerics.hpp"

namespace lenscontact {

namespace {

using numerics::kTwoPi;

constexpr double kRMin = 1e-3;
constexpr double kGaugeTol = 1e-8;

}  // namespace

ChartMetric ChartMetric::from_form(const ContactForm& form, Chart chart) {
  return ChartMetric(lenscontact::coefficients(form, chart), form.chart_profile(chart), form.phi(chart));
}

double ChartMetric::w(double r) const { return w_scale_ * profile_(r)[1]; }

ChartMetric ChartMetric::with_w_scale(double factor) const {
  ChartMetric copy = *this;
  copy.w_scale_ *= factor;
  return copy;
}

Eigen::Matrix3d ChartMetric::gram(double r) const {
  if (!(r > 0.0 && r < 1.0)) {
    throw Error(ErrorKind::Domain, "polar gram needs 0 < r < 1, got " + std::to_string(r));
  }
  const double f = coeffs_.f(r)[0];
  const double g = coeffs_.g(r)[0];
  const double ww = w(r) * w(r);
  Eigen::Matrix3d m;
  m << 1.0, 0.0, 0.0,
       0.0, ww + g * g, f * g - ww * phi_,
       0.0, f * g - ww * phi_, ww * phi_ * phi_ + f * f;
  return m;
}

Eigen::Matrix3d ChartMetric::gram_cartesian(double x, double y) const {
  const double r = std::hypot(x, y);
  if (r == 0.0) {
    const double f = coeffs_.f(0.0)[0];
    return Eigen::Vector3d(1.0, 1.0, f * f).asDiagonal();
  }
  // Rows: dr, dθ, dz in terms of dx, dy, dz.
  Eigen::Matrix3d jac;
  jac << x / r, y / r, 0.0,
         -y / (r * r), x / (r * r), 0.0,
         0.0, 0.0, 1.0;
  return jac.transpose() * gram(r) * jac;
}

Eigen::Matrix3d metric_at(const ContactForm& form, const ChartPoint& pt) {
  const ChartMetric metric = ChartMetric::from_form(form, pt.chart);
  if (pt.r == 0.0) return metric.gram_cartesian(0.0, 0.0);
  return metric.gram(pt.r);
}

double CompatibilityReport::max_residual() const {
  return std::max({reeb_dual, volume, radial, spd_failures});
}

CompatibilityReport verify_compatibility(const ChartMetric& metric, int n_samples,
                                         std::uint64_t seed) {
  numerics::Sampler sampler(seed);
  CompatibilityReport report;
  const FormCoefficients& c = metric.coefficients();
  for (int i = 0; i < n_samples; ++i) {
    // Canonical half of the chart; past r = 1/2 the frame degenerates
    // towards the other core and det g loses relative precision.
    const double r = sampler.open(0.0, 0.5);
    const Eigen::Matrix3d g = metric.gram(r);
    const ReebVelocity v = reeb_generic(c, r);
    const Eigen::Vector3d reeb(0.0, v.dtheta, v.dz);
    const Eigen::Vector3d alpha(0.0, c.g(r)[0], c.f(r)[0]);
    const Eigen::Vector3d dual = g * reeb;
    report.reeb_dual = std::max(report.reeb_dual, (dual - alpha).cwiseAbs().maxCoeff());
    report.radial = std::max(report.radial, std::abs(dual[0]));
    const double density = wronskian(c, r);
    report.volume = std::max(report.volume,
                             std::abs(std::sqrt(g.determinant()) - density) / std::abs(density));
    if (g.llt().info() != Eigen::Success) report.spd_failures += 1.0;
  }
  return report;
}

CompatibilityReport verify_compatibility(const ContactForm& form, int n_samples,
                                         std::uint64_t seed) {
  CompatibilityReport a = verify_compatibility(ChartMetric::from_form(form, Chart::Zero),
                                               n_samples, seed);
  const CompatibilityReport b = verify_compatibility(ChartMetric::from_form(form, Chart::One),
                                                     n_samples, seed + 1);
  a.reeb_dual = std::max(a.reeb_dual, b.reeb_dual);
  a.volume = std::max(a.volume, b.volume);
  a.radial = std::max(a.radial, b.radial);
  a.spd_failures += b.spd_failures;
  return a;
}

double lie_derivative_residual(const MetricField& metric, Chart chart, ReebVelocity v,
                               int n_samples, double h, std::uint64_t seed) {
  numerics::Sampler sampler(seed);
  double worst = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    const double r = sampler.open(0.05, 0.95);
    const double theta = sampler.angle();
    const double z = sampler.angle();
    const ChartPoint ahead(chart, r, Angle(theta + v.dtheta * h), Angle(z + v.dz * h));
    const ChartPoint behind(chart, r, Angle(theta - v.dtheta * h), Angle(z - v.dz * h));
    const Eigen::Matrix3d lie = (metric(ahead) - metric(behind)) / (2.0 * h);
    worst = std::max(worst, lie.cwiseAbs().maxCoeff());
  }
  return worst;
}

double reeb_invariance_check(const ContactForm& form, int n_samples, double h,
                             std::uint64_t seed) {
  double worst = 0.0;
  for (Chart chart : {Chart::Zero, Chart::One}) {
    const ChartMetric metric = ChartMetric::from_form(form, chart);
    const MetricField field = [metric](const ChartPoint& pt) { return metric.gram(pt.r); };
    worst = std::max(worst, lie_derivative_residual(field, chart, reeb_field(form, chart),
                                                    n_samples, h, seed + index(chart)));
  }
  return worst;
}

double quotient_curvature(const RadialFn& profile, double r) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw Error(ErrorKind::Domain, "curvature needs 0 <= r <= 1");
  }
  for (double end : {0.0, 1.0}) {
    const double d = std::abs(r - end);
    if (d >= kRMin) continue;
    const Jet at_end = profile(end);
    const Jet at_min = profile(end == 0.0 ? kRMin : 1.0 - kRMin);
    const double k_end = -at_end[4] / at_end[2];
    const double k_min = -at_min[3] / at_min[1];
    return k_end + (k_min - k_end) * (d / kRMin) * (d / kRMin);
  }
  const Jet j = profile(r);
  if (j[1] == 0.0) throw Error(ErrorKind::MetricGauge, "w vanishes inside (0, 1)");
  return -j[3] / j[1];
}

bool metric_is_smooth(const ContactForm& form) {
  const double app0 = form.chart_profile(Chart::Zero)(0.0)[2];
  const double gpp0 = form.chart_profile(Chart::One)(0.0)[2];
  return std::abs(app0 - 1.0) < kGaugeTol && std::abs(gpp0 - 1.0) < kGaugeTol;
}

double kappa(const ContactForm& form, Chart chart, double r) {
  if (!metric_is_smooth(form)) {
    throw Error(ErrorKind::MetricGauge, "metric is singular at a core: a''(0) or g1''(0) != 1");
  }
  return quotient_curvature(form.chart_profile(chart), r);
}

double total_curvature(const ContactForm& form) {
  if (!metric_is_smooth(form)) {
    throw Error(ErrorKind::MetricGauge, "metric is singular at a core");
  }
  const RadialFn profile = form.chart_profile(Chart::Zero);
  const double scale = form.tau0() / kTwoPi;
  const auto integrand = [&](double r) {
    return quotient_curvature(profile, r) * scale * profile(r)[1];
  };
  double total = 0.0;
  for (auto [lo, hi] : {std::pair{0.0, kRMin}, std::pair{kRMin, 1.0 - kRMin},
                        std::pair{1.0 - kRMin, 1.0}}) {
    total += numerics::integrate(integrand, lo, hi).value;
  }
  return kTwoPi * kTwoPi * total;
}

double total_curvature_closed_form(const ContactForm& form) {
  const RadialFn profile = form.chart_profile(Chart::Zero);
  return kTwoPi * form.tau0() * (profile(0.0)[2] - profile(1.0)[2]);
}

}  // namespace lenscontact
