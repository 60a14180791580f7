#pragma once

#include <cstdint>

#include "lenscontact/jet.hpp"
#include "lenscontact/lens_atlas.hpp"
#include "lenscontact/profile.hpp"

namespace lenscontact {

/// Coefficients of α = f(r)dz + g(r)dθ in one chart.
struct FormCoefficients {
  Chart chart = Chart::Zero;
  RadialFn f;
  RadialFn g;
};

/// Contact form associated with the triple (a, τ₀, φ₀) on L(p,q). Only
/// (lens, τ₀, φ₀, profile) are stored; τ₁ and φ₁ are always derived.
class ContactForm {
 public:
  /// Validating constructor. Errors: InvalidRotation (p·φ₀ + q ≤ 0),
  /// InvalidProfile (boundary or parity violation), NotContact (a' ≤ 0).
  static ContactForm from_triple(ProfileSpec profile, double tau0, double phi0,
                                 const LensParams& lens);

  /// Default profile for the two core periods, then from_triple.
  static ContactForm from_periods(const LensParams& lens, double tau0, double tau1);

  const LensParams& lens() const { return lens_; }
  const ProfileSpec& profile() const { return profile_; }
  double tau0() const { return tau0_; }
  double phi0() const { return phi0_; }
  double tau1() const;  // τ₀/(q + pφ₀)
  double phi1() const;  // (m − sφ₀)/(q + pφ₀)

  double tau(Chart c) const { return c == Chart::Zero ? tau0() : tau1(); }
  double phi(Chart c) const { return c == Chart::Zero ? phi0() : phi1(); }

  /// Profile of the given chart: a for chart 0, g₁ for chart 1.
  RadialFn chart_profile(Chart c) const;

 private:
  ContactForm(ProfileSpec profile, double tau0, double phi0, const LensParams& lens);

  LensParams lens_;
  double tau0_;
  double phi0_;
  ProfileSpec profile_;
};

/// f₀ = τ₀/2π − φ₀a, g₀ = a in chart 0; f₁ = τ₁/2π − φ₁g₁, g₁ in chart 1.
FormCoefficients coefficients(const ContactForm& form, Chart chart);

/// Chart-1 coefficients written as the literal pullback of chart 0:
/// (sτ₀/2π + (m − sφ₀)a(1−r))dz + (pτ₀/2π − (q + pφ₀)a(1−r))dθ.
FormCoefficients pulled_back_chart1(const ContactForm& form);

/// f·g' − g·f', the dr∧dθ∧dz density of α∧dα.
double wronskian(const FormCoefficients& c, double r);

/// (τ_chart/2π)·(chart profile)'(r).
double volume_density(const ContactForm& form, Chart chart, double r);

/// ∫ α∧dα over chart 0 by adaptive quadrature.
double total_volume(const ContactForm& form);

/// ∫ (f g' − g f') dr · (2π)² for arbitrary chart-0 coefficients.
double contact_volume(const FormCoefficients& chart0);

/// Max |ψ*α₀ − α₁| over n random overlap points, where ψ is the chart
/// transition and ψ*dz = s dz + p dθ, ψ*dθ = −q dθ + m dz.
double overlap_consistency(const LensParams& lens, const FormCoefficients& chart0,
                           const FormCoefficients& chart1, int n_samples,
                           std::uint64_t seed = 1);
double overlap_consistency(const ContactForm& form, int n_samples,
                           std::uint64_t seed = 1);

}  // namespace lenscontact
