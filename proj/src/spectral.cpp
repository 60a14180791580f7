#include "lenscontact/spectral.hpp"

#include <cmath>
#include <string>

#include "lenscontact/error.hpp"
#include "lenscontact/metric_curvature.hpp"
#include "lenscontact/numerics.hpp"

namespace lenscontact {

namespace {

using numerics::kTwoPi;

constexpr std::int64_t kRotationMaxDen = 1'000'000;
constexpr std::int64_t kApproximantMaxDen = 100'000'000;
constexpr double kDeformedConsistencyTol = 1e-10;

double closed_volume(const ContactForm& form) {
  return static_cast<double>(form.lens().p) * form.tau0() * form.tau1();
}

double relative(double check, double value) {
  return std::abs(check - value) / std::abs(value);
}

std::optional<double> curvature_check(const ContactForm& form) {
  if (!metric_is_smooth(form)) return std::nullopt;
  return total_curvature(form);
}

}  // namespace

std::string_view to_string(CoefficientSource s) {
  switch (s) {
    case CoefficientSource::ClosedForm: return "closed-form";
    case CoefficientSource::Quadrature: return "quadrature";
    case CoefficientSource::DeformationLimit: return "deformation-limit";
  }
  return "unknown";
}

double HeatTraceCoefficients::c0_residual() const {
  return c0_check ? relative(*c0_check, c0) : 0.0;
}

double HeatTraceCoefficients::c1_residual() const {
  return c1_check ? relative(*c1_check, c1) : 0.0;
}

HeatTraceCoefficients heat_coeffs_irregular(const ContactForm& form) {
  if (classify(form).verdict.kind != Regularity::Irregular) {
    throw Error(ErrorKind::WrongClass,
                "form is quasi-regular; use the quasi-regular coefficients");
  }
  HeatTraceCoefficients out;
  out.c0 = closed_volume(form);
  out.c1 = kTwoPi * (form.tau0() + form.tau1());
  out.source = CoefficientSource::ClosedForm;
  out.c0_check = total_volume(form);
  out.c1_check = curvature_check(form);
  return out;
}

SeifertData seifert_data(const CoreData& cores, double volume, std::int64_t max_den,
                         double tol, double consistency_tol) {
  const auto f0 = rational_detect(mod1(cores.phi0), max_den, tol);
  const auto f1 = rational_detect(mod1(cores.phi1), max_den, tol);
  if (!f0 || !f1) {
    throw Error(ErrorKind::WrongClass, "form is irregular; no Seifert fibration");
  }
  SeifertData out;
  out.a0 = f0->den;
  out.a1 = f1->den;
  out.tau = static_cast<double>(out.a0) * cores.tau0;
  const double other = static_cast<double>(out.a1) * cores.tau1;
  if (std::abs(other - out.tau) > consistency_tol * out.tau) {
    throw Error(ErrorKind::ModelViolation,
                "a0*tau0 = " + std::to_string(out.tau) + " but a1*tau1 = " +
                    std::to_string(other));
  }
  out.chi_orb = Rational(1, out.a0) + Rational(1, out.a1);
  out.volume = volume;
  out.e_vol = -volume / out.tau;
  return out;
}

SeifertData seifert_data(const ContactForm& form) {
  if (classify(form).verdict.kind != Regularity::QuasiRegular) {
    throw Error(ErrorKind::WrongClass, "form is irregular; no Seifert fibration");
  }
  return seifert_data(core_data(form), closed_volume(form));
}

HeatTraceCoefficients heat_coeffs_quasiregular(const SeifertData& data) {
  HeatTraceCoefficients out;
  out.c0 = -data.tau * data.e_vol;
  out.c1 = kTwoPi * data.tau * static_cast<double>(data.chi_orb);
  out.source = CoefficientSource::ClosedForm;
  return out;
}

HeatTraceCoefficients heat_coeffs_quasiregular(const ContactForm& form) {
  HeatTraceCoefficients out = heat_coeffs_quasiregular(seifert_data(form));
  out.c0_check = total_volume(form);
  out.c1_check = curvature_check(form);
  return out;
}

Jet DeformedForm::mu(Chart chart, double r) const {
  const double scale = kTwoPi * base_.tau0();
  if (chart == Chart::Zero) return scale * base_.profile().jet(r);
  return scale * base_.profile().jet(1.0 - r).reflected();
}

FormCoefficients DeformedForm::coefficients(Chart chart) const {
  const FormCoefficients c = lenscontact::coefficients(base_, chart);
  const DeformedForm self = *this;
  auto factor = [self, chart](double r) {
    return (1.0 + self.epsilon_ * self.mu(chart, r)).reciprocal();
  };
  RadialFn f = [f0 = c.f, factor](double r) { return f0(r) * factor(r); };
  RadialFn g = [g0 = c.g, factor](double r) { return g0(r) * factor(r); };
  return {chart, std::move(f), std::move(g)};
}

double DeformedForm::core_period(Chart chart) const {
  return kTwoPi * coefficients(chart).f(0.0)[0];
}

double DeformedForm::predicted_core_period(Chart chart) const {
  if (chart == Chart::Zero) return base_.tau0();
  return base_.tau1() / (1.0 + epsilon_ * closed_volume(base_));
}

DeformedForm deform(const ContactForm& form, double epsilon) {
  // μ increases from 0 to vol, so 1 + εμ > 0 on [0, 1] iff 1 + ε·vol > 0.
  if (!std::isfinite(epsilon) || !(1.0 + epsilon * closed_volume(form) > 0.0)) {
    throw Error(ErrorKind::InvalidDeformation,
                "1 + eps*mu must stay positive; eps = " + std::to_string(epsilon));
  }
  return DeformedForm(form, epsilon);
}

std::vector<Approximant> rational_approximants(const ContactForm& form, int count) {
  if (count < 1) throw Error(ErrorKind::Domain, "count must be positive");
  const double ratio = form.tau0() / form.tau1();
  const double volume = closed_volume(form);
  const std::vector<Fraction> conv = convergents(ratio, kApproximantMaxDen);
  std::vector<Approximant> out;
  for (std::size_t i = 2; i < conv.size() && static_cast<int>(out.size()) < count; ++i) {
    const double eps = (conv[i].value() / ratio - 1.0) / volume;
    if (!(1.0 + eps * volume > 0.0)) continue;
    out.push_back({eps, conv[i]});
  }
  return out;
}

std::vector<ConvergenceRow> convergence_study(const ContactForm& form, int count) {
  const double c0_target = closed_volume(form);
  const double c1_target = kTwoPi * (form.tau0() + form.tau1());
  std::vector<ConvergenceRow> rows;
  int n = 0;
  for (const Approximant& ap : rational_approximants(form, count)) {
    const DeformedForm d = deform(form, ap.epsilon);
    const FormCoefficients c0 = d.coefficients(Chart::Zero);
    const FormCoefficients c1 = d.coefficients(Chart::One);

    ConvergenceRow row;
    row.n = ++n;
    row.epsilon = ap.epsilon;
    row.ratio = ap.ratio;
    row.phi0 = monodromy_rotation(c0).rotation;
    row.phi1 = monodromy_rotation(c1).rotation;
    row.tau1_measured = d.core_period(Chart::One);
    row.tau1_predicted = d.predicted_core_period(Chart::One);

    const CoreData cores{d.core_period(Chart::Zero), row.tau1_measured, row.phi0, row.phi1};
    const Classification cls = classify(cores, kRotationMaxDen, kDeformedRotationTol);
    row.regularity = cls.verdict.kind;
    if (row.regularity != Regularity::QuasiRegular) {
      throw Error(ErrorKind::DeformationPipeline,
                  "deformed form " + std::to_string(row.n) + " classified irregular");
    }
    const double volume = contact_volume(c0);
    const SeifertData data = seifert_data(cores, volume, kRotationMaxDen,
                                          kDeformedRotationTol, kDeformedConsistencyTol);
    const HeatTraceCoefficients coeffs = heat_coeffs_quasiregular(data);
    row.a0 = data.a0;
    row.a1 = data.a1;
    row.tau = data.tau;
    row.c0 = coeffs.c0;
    row.c1 = coeffs.c1;
    row.resid_c0 = std::abs(row.c0 - c0_target);
    row.resid_c1 = std::abs(row.c1 - c1_target);
    rows.push_back(row);
  }
  return rows;
}

double heat_trace_eval(const HeatTraceCoefficients& coeffs, double t) {
  if (!(t > 0.0)) throw Error(ErrorKind::Domain, "heat trace needs t > 0");
  return (coeffs.c0 + coeffs.c1 * t) / (16.0 * t * t);
}

}  // namespace lenscontact
