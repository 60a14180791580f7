#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lenscontact/jet.hpp"
#include "lenscontact/lens_atlas.hpp"

namespace lenscontact {

/// Boundary targets a radial profile must meet for the triple (a, τ₀, φ₀).
struct BoundaryData {
  LensParams lens;
  double tau0 = 1.0;
  double phi0 = 0.0;
  double a_end = 0.0;  // p·τ₀ / (2π(p·φ₀ + q))
  double app0 = 1.0;   // target a''(0)
  double app1 = -1.0;  // target a''(1) = −τ₁/τ₀

  /// Throws Error(InvalidRotation) when p·φ₀ + q ≤ 0 or τ₀ ≤ 0.
  static BoundaryData from_triple(const LensParams& lens, double tau0, double phi0);

  double rotation_factor() const;  // q + p·φ₀ = τ₀/τ₁
  double tau1() const;
};

/// a(r) = P(u(r)) with u(r) = (1 − cos πr)/2 and P(u) = Σ_{i≥1} cᵢ uⁱ.
/// a(0) = 0 and the vanishing of all odd derivatives at r ∈ {0, 1} hold by
/// construction.
class ProfileSpec {
 public:
  ProfileSpec(std::vector<double> coeffs, BoundaryData boundary);

  std::span<const double> coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()); }
  const BoundaryData& boundary() const { return boundary_; }

  /// dᵏa/drᵏ at r for k ≤ 4; Error(UnsupportedOrder) otherwise.
  double eval(double r, int order) const;
  Jet jet(double r) const;

  /// P and its u-derivative, used by construction and monotonicity checks.
  double poly(double u) const;
  double poly_slope(double u) const;

 private:
  std::vector<double> coeffs_;
  BoundaryData boundary_;
};

/// Jet of u(r) = (1 − cos πr)/2, evaluated symmetrically about r = 0 and r = 1.
Jet u_jet(double r);

/// Member k of the monotone family P'(u) = slope0·(1−u)^k + slope1·u^k + c·u(1−u),
/// with c chosen so that P(1) = a_end. Degree of P is k + 1.
ProfileSpec bernstein_profile(const BoundaryData& boundary, int k, double slope0,
                              double slope1);

/// Canonical profile for prescribed periods with a''(0) = 1 and
/// a''(1) = −τ₁/τ₀. Starts from the cubic and raises the degree until P' > 0 on
/// [0, 1]; Error(ProfileConstruction) beyond degree 9.
ProfileSpec default_profile(const LensParams& lens, double tau0, double tau1);

/// Same boundary and metric normalization as default_profile but a fixed degree
/// (3..9). Not checked for monotonicity.
ProfileSpec profile_with_degree(const LensParams& lens, double tau0, double tau1,
                                int degree);

struct SmoothnessReport {
  double a0_residual = 0.0;    // |a(0)|
  double a1_residual = 0.0;    // |a(1) − a_end|
  double odd_at_0 = 0.0;       // max |a^(2k+1)(0)|
  double odd_at_1 = 0.0;       // max |a^(2k+1)(1)|
  double app0_residual = 0.0;  // |a''(0) − 1|, metric gauge, reported only
  double app1_residual = 0.0;  // |a''(1) + τ₁/τ₀|
  double tolerance = 0.0;
  bool metric_normalized = false;
  bool pass = false;
  std::string failure;  // empty on pass
};

/// Boundary values and odd derivatives at both ends. Orders ≤ 4 use the
/// analytic jet (tolerance 1e−12); any order above 4 (K > 4) switches the whole
/// report to central finite differences with step h (tolerance 1e−8).
SmoothnessReport validate_smoothness(const ProfileSpec& profile, int max_order = 4,
                                     double h = 1.0 / 128.0);

/// Finite-difference path for an arbitrary profile function, defined on a
/// neighborhood of [0, 1].
SmoothnessReport validate_smoothness(const std::function<double(double)>& a,
                                     const BoundaryData& boundary, int max_order,
                                     double h);

/// a'(r) > 0 at n Chebyshev-spaced samples and min ≥ margin·max.
bool validate_monotone(const ProfileSpec& profile, int n = 200, double margin = 1e-8);
bool validate_monotone(const std::function<double(double)>& slope, int n = 200,
                       double margin = 1e-8);

/// Chart-1 profile g₁(r) = pτ₀/2π − (q + pφ₀)·a(1 − r).
RadialFn induced_a1(const ProfileSpec& profile);

}  // namespace lenscontact
