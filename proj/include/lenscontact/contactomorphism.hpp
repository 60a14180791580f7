#pragma once

#include <array>
#include <cstdint>
#include <functional>

#include "lenscontact/contact_form.hpp"
#include "lenscontact/rational.hpp"

namespace lenscontact {

/// Radial diffeomorphism Ψ with Ψ*β = α, fixing θ and z in both charts. In
/// chart i it sends r to bᵢ⁻¹(aᵢ(r)), where aᵢ, bᵢ are the chart profiles of α
/// and β.
class RadialMap {
 public:
  using ChartMap = std::function<double(double)>;

  RadialMap(LensParams lens, ChartMap chart0, ChartMap chart1)
      : lens_(lens), maps_{std::move(chart0), std::move(chart1)} {}

  const LensParams& lens() const { return lens_; }
  double operator()(Chart chart, double r) const { return maps_[index(chart)](r); }
  ChartPoint operator()(const ChartPoint& pt) const;

  /// Copy with one chart map replaced (sensitivity checks).
  RadialMap with_chart(Chart chart, ChartMap map) const;

 private:
  LensParams lens_;
  std::array<ChartMap, 2> maps_;
};

/// Error(NotComparable) unless the lenses agree and τ₀, φ₀ match to 1e−12.
RadialMap build_psi_map(const ContactForm& alpha, const ContactForm& beta);

/// Max |β(Ψ(r)) − α(r)| over f and g coefficients in both charts.
double verify_pullback(const RadialMap& map, const ContactForm& alpha,
                       const ContactForm& beta, int n_samples, std::uint64_t seed = 1);

/// Max residual of ψ⁻¹∘Ψ₀∘ψ = Ψ₁ at n random overlap points.
double verify_cocycle(const RadialMap& map, int n_samples, std::uint64_t seed = 1);

/// a + b√d with exact rational a, b and a positive integer d.
struct QuadraticIrrational {
  Rational a{0};
  Rational b{0};
  std::int64_t d = 2;

  bool is_irrational() const;
  double to_double() const;
};

struct EquivalenceVerdict {
  int count = 2;  // strict-contactomorphism classes for unordered {τ₀, τ₁}
  std::int64_t q_squared_mod_p = 0;
  double phi_q = 0.0;  // (τ₀/τ₁ − q)/p mod 1
  double phi_s = 0.0;  // (τ₀/τ₁ − s)/p mod 1
  bool candidates_coincide = false;
};

/// Count 1 iff q² ≡ 1 mod p. Error(WrongClass) when τ₀/τ₁ is detected rational.
EquivalenceVerdict classify_pair(const LensParams& lens, double tau0, double tau1);

/// Exact variant for a symbolic period ratio τ₀/τ₁.
EquivalenceVerdict classify_pair(const LensParams& lens, const QuadraticIrrational& ratio);

/// Some pairing of cores matches (period, rotation number mod 1) within tol.
bool strict_equivalence_predicate(const ContactForm& alpha, const ContactForm& beta,
                                  double tol = 1e-10);

}  // namespace lenscontact
