#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "lenscontact/contact_form.hpp"
#include "lenscontact/rational.hpp"

namespace lenscontact {

/// Reeb velocity (dθ/dt, dz/dt) of a rotationally symmetric form; the radial
/// component is identically zero.
struct ReebVelocity {
  double dtheta = 0.0;
  double dz = 0.0;
};

/// Solves α(R) = 1, dα(R, ·) = 0 for α = f dz + g dθ:
/// R = (g' ∂z − f' ∂θ)/(f g' − g f'). At r = 0 the limit
/// dz/dt = 1/f(0), dθ/dt = −f''(0)/(f(0) g''(0)) is used.
/// Error(NotContact) when the Wronskian degenerates.
ReebVelocity reeb_generic(const FormCoefficients& c, double r);

/// (2π/τᵢ)(∂z + φᵢ∂θ).
ReebVelocity reeb_field(const ContactForm& form, Chart chart);

struct ReebResiduals {
  double alpha = 0.0;     // |α(R) − 1|
  double d_alpha = 0.0;   // |dα(R,∂r)| + |dα(R,∂θ)| + |dα(R,∂z)|
};

ReebResiduals reeb_residuals(const FormCoefficients& c, double r, ReebVelocity v);

/// Exact linear flow in the chart of `pt`.
ChartPoint flow(const ContactForm& form, const ChartPoint& pt, double t);

/// Fixed-step RK4 integration of reeb_generic; r is carried, never updated.
/// Negative t integrates backwards. Error(Numeric) past `max_steps`.
ChartPoint flow_ode(const FormCoefficients& c, const ChartPoint& pt, double t,
                    double dt, std::int64_t max_steps = 100'000'000);

struct OrbitSample {
  double t = 0.0;
  ChartPoint point;
};

/// n + 1 equally spaced samples of the exact flow on [0, horizon].
std::vector<OrbitSample> sample_orbit(const ContactForm& form, const ChartPoint& pt,
                                      double horizon, int n);

struct Monodromy {
  double rotation = 0.0;  // in turns, reduced mod 1
  std::array<std::array<double, 2>, 2> return_map{};
  double orthogonality_residual = 0.0;
  double period = 0.0;
};

/// Linearized return map of the core circle r = 0. The variational equations
/// of the Reeb field in Cartesian chart coordinates (x, y, z) are integrated
/// with RK4 over one minimal period (`steps` steps); the rotation angle of the
/// 2×2 transverse block, in turns, is the rotation number.
/// Error(ModelViolation) when the return map is not a rotation within 1e−8.
Monodromy monodromy_rotation(const FormCoefficients& c, std::int64_t steps = 10'000);
Monodromy monodromy_rotation(const ContactForm& form, Chart chart,
                             std::int64_t steps = 10'000);

struct OrbitClassification {
  bool periodic = false;
  std::optional<double> minimal_period;
  std::optional<double> rotation_number;
  bool is_core = false;
  double radius = 0.0;
  Chart chart = Chart::Zero;
};

enum class Regularity { QuasiRegular, Irregular };

struct ConvergentCheck {
  Fraction fraction;
  double residual = 0.0;  // |d·x − n|
};

struct RegularityVerdict {
  Regularity kind = Regularity::Irregular;
  std::optional<Fraction> phi0_fraction;     // quasi-regular evidence
  std::vector<ConvergentCheck> certificate;  // irregular: every convergent rejected
  std::int64_t max_den = 0;
  double tol = 0.0;
};

/// Period and rotation number data of the two cores.
struct CoreData {
  double tau0 = 0.0;
  double tau1 = 0.0;
  double phi0 = 0.0;
  double phi1 = 0.0;
};

CoreData core_data(const ContactForm& form);

struct Classification {
  RegularityVerdict verdict;
  std::vector<OrbitClassification> orbits;  // two cores then generic samples
  std::optional<double> generic_period;     // d·τ₀ for quasi-regular forms
  std::optional<std::int64_t> a0;           // den(φ₀ mod 1)
  std::optional<std::int64_t> a1;           // den(φ₁ mod 1)

  int periodic_count() const;
};

/// Quasi-regular iff φ₀ mod 1 is detected rational at (max_den, tol).
Classification classify(const CoreData& cores, std::int64_t max_den = 1'000'000,
                        double tol = 1e-12);
Classification classify(const ContactForm& form, std::int64_t max_den = 1'000'000,
                        double tol = 1e-12);

/// Minimum torus distance between `pt` and exact-flow samples at k·dt over
/// (exclusion, horizon]. Default exclusion is half the chart period.
double recurrence_gap(const ContactForm& form, const ChartPoint& pt, double horizon,
                      double dt, std::optional<double> exclusion = std::nullopt);

/// Poincaré-section oracle: RK4-integrates the Reeb flow of `c` from `pt`,
/// detects each return of z to its starting value and reports the first time
/// at which θ also returns within `tol`.
std::optional<double> first_return_time(const FormCoefficients& c,
                                        const ChartPoint& pt, double t_max,
                                        double dt, double tol = 1e-9);

}  // namespace lenscontact
