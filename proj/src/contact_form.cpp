#include "lenscontact/contact_form.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lenscontact/error.hpp"
#include "lenscontact/numerics.hpp"

namespace lenscontact {

namespace {

using numerics::kTwoPi;

constexpr double kBoundaryTol = 1e-12;

}  // namespace

ContactForm::ContactForm(ProfileSpec profile, double tau0, double phi0, const LensParams& lens)
    : lens_(lens), tau0_(tau0), phi0_(phi0), profile_(std::move(profile)) {}

ContactForm ContactForm::from_triple(ProfileSpec profile, double tau0, double phi0,
                                     const LensParams& lens) {
  const BoundaryData boundary = BoundaryData::from_triple(lens, tau0, phi0);
  std::vector<double> coeffs(profile.coeffs().begin(), profile.coeffs().end());
  ProfileSpec rebound(std::move(coeffs), boundary);

  const SmoothnessReport smooth = validate_smoothness(rebound);
  if (!smooth.pass) {
    throw Error(ErrorKind::InvalidProfile, smooth.failure);
  }
  if (std::abs(rebound.eval(1.0, 0) - boundary.a_end) > kBoundaryTol) {
    throw Error(ErrorKind::InvalidProfile, "a(1) does not match the rotation data");
  }
  if (!validate_monotone(rebound)) {
    throw Error(ErrorKind::NotContact, "a' is not positive on (0, 1)");
  }
  return ContactForm(std::move(rebound), tau0, phi0, lens);
}

ContactForm ContactForm::from_periods(const LensParams& lens, double tau0, double tau1) {
  ProfileSpec profile = default_profile(lens, tau0, tau1);
  const double phi0 = profile.boundary().phi0;
  return from_triple(std::move(profile), tau0, phi0, lens);
}

double ContactForm::tau1() const {
  return tau0_ / (static_cast<double>(lens_.q) + static_cast<double>(lens_.p) * phi0_);
}

double ContactForm::phi1() const {
  return (static_cast<double>(lens_.m) - static_cast<double>(lens_.s) * phi0_) /
         (static_cast<double>(lens_.q) + static_cast<double>(lens_.p) * phi0_);
}

RadialFn ContactForm::chart_profile(Chart c) const {
  if (c == Chart::One) return induced_a1(profile_);
  return [profile = profile_](double r) { return profile.jet(r); };
}

FormCoefficients coefficients(const ContactForm& form, Chart chart) {
  const double base = form.tau(chart) / kTwoPi;
  const double phi = form.phi(chart);
  RadialFn g = form.chart_profile(chart);
  RadialFn f = [g, base, phi](double r) { return base - phi * g(r); };
  return {chart, std::move(f), std::move(g)};
}

FormCoefficients pulled_back_chart1(const ContactForm& form) {
  const LensParams& lens = form.lens();
  const ProfileSpec profile = form.profile();
  const double tau0 = form.tau0();
  const double phi0 = form.phi0();
  const double p = static_cast<double>(lens.p);
  const double q = static_cast<double>(lens.q);
  const double m = static_cast<double>(lens.m);
  const double s = static_cast<double>(lens.s);
  RadialFn f = [=](double r) {
    return s * tau0 / kTwoPi + (m - s * phi0) * profile.jet(1.0 - r).reflected();
  };
  RadialFn g = [=](double r) {
    return p * tau0 / kTwoPi - (q + p * phi0) * profile.jet(1.0 - r).reflected();
  };
  return {Chart::One, std::move(f), std::move(g)};
}

double wronskian(const FormCoefficients& c, double r) {
  const Jet f = c.f(r);
  const Jet g = c.g(r);
  return f[0] * g[1] - g[0] * f[1];
}

double volume_density(const ContactForm& form, Chart chart, double r) {
  return form.tau(chart) / kTwoPi * form.chart_profile(chart)(r)[1];
}

double contact_volume(const FormCoefficients& chart0) {
  const auto result =
      numerics::integrate([&chart0](double r) { return wronskian(chart0, r); }, 0.0, 1.0);
  return kTwoPi * kTwoPi * result.value;
}

double total_volume(const ContactForm& form) {
  return contact_volume(coefficients(form, Chart::Zero));
}

double overlap_consistency(const LensParams& lens, const FormCoefficients& chart0,
                           const FormCoefficients& chart1, int n_samples,
                           std::uint64_t seed) {
  const double p = static_cast<double>(lens.p);
  const double q = static_cast<double>(lens.q);
  const double m = static_cast<double>(lens.m);
  const double s = static_cast<double>(lens.s);
  numerics::Sampler sampler(seed);
  double worst = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    const double r = sampler.open(0.0, 1.0);
    const double f0 = chart0.f(1.0 - r)[0];
    const double g0 = chart0.g(1.0 - r)[0];
    const double f_pull = s * f0 + m * g0;
    const double g_pull = p * f0 - q * g0;
    worst = std::max({worst, std::abs(f_pull - chart1.f(r)[0]),
                      std::abs(g_pull - chart1.g(r)[0])});
  }
  return worst;
}

double overlap_consistency(const ContactForm& form, int n_samples, std::uint64_t seed) {
  return overlap_consistency(form.lens(), coefficients(form, Chart::Zero),
                             coefficients(form, Chart::One), n_samples, seed);
}

}  // namespace lenscontact
