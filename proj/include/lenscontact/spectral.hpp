#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lenscontact/contact_form.hpp"
#include "lenscontact/rational.hpp"
#include "lenscontact/reeb_dynamics.hpp"

namespace lenscontact {

enum class CoefficientSource { ClosedForm, Quadrature, DeformationLimit };

std::string_view to_string(CoefficientSource s);

/// Leading heat-trace coefficients: trace ≈ (C0 + C1·t)/(16t²).
struct HeatTraceCoefficients {
  double c0 = 0.0;
  double c1 = 0.0;
  CoefficientSource source = CoefficientSource::ClosedForm;
  std::optional<double> c0_check;  // independent quadrature value of C0
  std::optional<double> c1_check;  // independent quadrature value of C1

  double c0_residual() const;  // relative, 0 when no check
  double c1_residual() const;
};

/// (pτ₀τ₁, 2π(τ₀ + τ₁)), cross-checked by volume and curvature quadrature.
/// Error(WrongClass) for quasi-regular forms.
HeatTraceCoefficients heat_coeffs_irregular(const ContactForm& form);

/// Seifert invariants of a quasi-regular Reeb flow on L(p,q).
struct SeifertData {
  double tau = 0.0;  // generic minimal period
  std::int64_t a0 = 1;
  std::int64_t a1 = 1;
  Rational chi_orb;  // 1/a₀ + 1/a₁
  double volume = 0.0;
  double e_vol = 0.0;  // −volume/τ
};

/// Error(WrongClass) for irregular forms.
SeifertData seifert_data(const ContactForm& form);

/// From core periods and rotation numbers plus the contact volume. The
/// rotation numbers are detected rational at (max_den, tol); consistency
/// a₀τ₀ = a₁τ₁ is required to `consistency_tol` (relative).
SeifertData seifert_data(const CoreData& cores, double volume,
                         std::int64_t max_den = 1'000'000, double tol = 1e-12,
                         double consistency_tol = 1e-12);

/// C0 = −τ·e_vol, C1 = 2πτχ_orb.
HeatTraceCoefficients heat_coeffs_quasiregular(const SeifertData& data);

/// Quasi-regular coefficients with quadrature cross-checks against the form.
HeatTraceCoefficients heat_coeffs_quasiregular(const ContactForm& form);

/// α_ε = α/(1 + εμ) with μ = 2πτ₀·a in chart 0 and μ = 2πτ₀·a(1 − r) in
/// chart 1.
class DeformedForm {
 public:
  const ContactForm& base() const { return base_; }
  double epsilon() const { return epsilon_; }

  Jet mu(Chart chart, double r) const;
  FormCoefficients coefficients(Chart chart) const;

  /// Minimal period of core `chart`: 2π·f_ε(0).
  double core_period(Chart chart) const;

  /// Exact perturbed periods τ₀ and τ₁/(1 + ε·pτ₀τ₁).
  double predicted_core_period(Chart chart) const;

 private:
  friend DeformedForm deform(const ContactForm& form, double epsilon);
  DeformedForm(ContactForm base, double epsilon)
      : base_(std::move(base)), epsilon_(epsilon) {}

  ContactForm base_;
  double epsilon_;
};

/// Error(InvalidDeformation) unless 1 + εμ > 0 on [0, 1], i.e. ε > −1/vol.
DeformedForm deform(const ContactForm& form, double epsilon);

struct Approximant {
  double epsilon = 0.0;
  Fraction ratio;  // τ₀/τ_ε(ℓ₁) = num/den
};

/// ε_n = (r_n τ₁/τ₀ − 1)/(pτ₀τ₁) for continued-fraction convergents r_n of
/// τ₀/τ₁, skipping the two coarsest convergents and any inadmissible ε.
std::vector<Approximant> rational_approximants(const ContactForm& form, int count);

struct ConvergenceRow {
  int n = 0;
  double epsilon = 0.0;
  Fraction ratio;
  Regularity regularity = Regularity::QuasiRegular;
  double phi0 = 0.0;  // core rotation numbers by monodromy
  double phi1 = 0.0;
  double tau1_measured = 0.0;   // 2π f_ε(core 1)
  double tau1_predicted = 0.0;  // τ₁/(1 + εpτ₀τ₁)
  std::int64_t a0 = 1;
  std::int64_t a1 = 1;
  double tau = 0.0;
  double c0 = 0.0;  // deformed contact volume by quadrature
  double c1 = 0.0;  // 2πτχ_orb
  double resid_c0 = 0.0;
  double resid_c1 = 0.0;
};

/// Monodromy rotation numbers of deformed forms are detected rational at
/// (1e6, 1e−9): the integrated return map carries ~1e−14 error, which the
/// denominator scaling of rational_detect amplifies.
inline constexpr double kDeformedRotationTol = 1e-9;

/// One row per rational approximant; Error(DeformationPipeline) when a
/// deformed form does not classify quasi-regular.
std::vector<ConvergenceRow> convergence_study(const ContactForm& form, int count);

/// (C0 + C1·t)/(16t²); Error(Domain) for t ≤ 0.
double heat_trace_eval(const HeatTraceCoefficients& coeffs, double t);

}  // namespace lenscontact
