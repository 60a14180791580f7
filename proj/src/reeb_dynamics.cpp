#include "lenscontact/reeb_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lenscontact/error.hpp"
#include "lenscontact/numerics.hpp"

namespace lenscontact {

namespace {

using numerics::kTwoPi;

constexpr double kRotationTol = 1e-8;
constexpr double kDegenerate = 1e-300;

struct Unwrapped {
  double theta;
  double z;
};

Unwrapped rk4_increment(const FormCoefficients& c, double r, Unwrapped y, double h) {
  auto rhs = [&](const Unwrapped&) { return reeb_generic(c, r); };
  const ReebVelocity k1 = rhs(y);
  const ReebVelocity k2 = rhs({y.theta + 0.5 * h * k1.dtheta, y.z + 0.5 * h * k1.dz});
  const ReebVelocity k3 = rhs({y.theta + 0.5 * h * k2.dtheta, y.z + 0.5 * h * k2.dz});
  const ReebVelocity k4 = rhs({y.theta + h * k3.dtheta, y.z + h * k3.dz});
  return {h / 6.0 * (k1.dtheta + 2.0 * k2.dtheta + 2.0 * k3.dtheta + k4.dtheta),
          h / 6.0 * (k1.dz + 2.0 * k2.dz + 2.0 * k3.dz + k4.dz)};
}

Unwrapped rk4_step(const FormCoefficients& c, double r, Unwrapped y, double h) {
  const Unwrapped d = rk4_increment(c, r, y, h);
  return {y.theta + d.theta, y.z + d.z};
}

// Kahan-compensated accumulator for long integrations.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

using Mat2 = std::array<std::array<double, 2>, 2>;

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

Mat2 mat_axpy(const Mat2& a, double s, const Mat2& b) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][j] + s * b[i][j];
  return c;
}

OrbitClassification core_orbit(Chart chart, double tau, double phi) {
  OrbitClassification o;
  o.periodic = true;
  o.minimal_period = tau;
  o.rotation_number = mod1(phi);
  o.is_core = true;
  o.chart = chart;
  return o;
}

}  // namespace

ReebVelocity reeb_generic(const FormCoefficients& c, double r) {
  const Jet f = c.f(r);
  const Jet g = c.g(r);
  if (r <= 0.0 || r >= 1.0) {
    // Both first derivatives vanish at a core; take the l'Hôpital limit.
    const double w2 = f[0] * g[2] - g[0] * f[2];
    if (!(std::abs(w2) > kDegenerate) || !std::isfinite(w2)) {
      throw Error(ErrorKind::NotContact, "degenerate form at the core");
    }
    return {-f[2] / w2, g[2] / w2};
  }
  const double w = f[0] * g[1] - g[0] * f[1];
  if (!(std::abs(w) > kDegenerate) || !std::isfinite(w)) {
    throw Error(ErrorKind::NotContact, "alpha ^ d alpha vanishes at r = " + std::to_string(r));
  }
  return {-f[1] / w, g[1] / w};
}

ReebVelocity reeb_field(const ContactForm& form, Chart chart) {
  const double rate = kTwoPi / form.tau(chart);
  return {rate * form.phi(chart), rate};
}

ReebResiduals reeb_residuals(const FormCoefficients& c, double r, ReebVelocity v) {
  const Jet f = c.f(r);
  const Jet g = c.g(r);
  return {std::abs(f[0] * v.dz + g[0] * v.dtheta - 1.0),
          std::abs(f[1] * v.dz + g[1] * v.dtheta)};
}

ChartPoint flow(const ContactForm& form, const ChartPoint& pt, double t) {
  const ReebVelocity v = reeb_field(form, pt.chart);
  return ChartPoint(pt.chart, pt.r, Angle(pt.theta.value() + v.dtheta * t),
                    Angle(pt.z.value() + v.dz * t));
}

ChartPoint flow_ode(const FormCoefficients& c, const ChartPoint& pt, double t, double dt,
                    std::int64_t max_steps) {
  if (!(dt > 0.0)) throw Error(ErrorKind::Domain, "step size must be positive");
  const double n_real = std::ceil(std::abs(t) / dt);
  if (n_real > static_cast<double>(max_steps)) {
    throw Error(ErrorKind::Numeric, "flow_ode exceeds the step budget");
  }
  const auto n = static_cast<std::int64_t>(n_real);
  CompensatedSum theta{pt.theta.value()};
  CompensatedSum z{pt.z.value()};
  if (n > 0) {
    const double h = t / static_cast<double>(n);
    for (std::int64_t i = 0; i < n; ++i) {
      const Unwrapped d = rk4_increment(c, pt.r, {theta.sum, z.sum}, h);
      theta.add(d.theta);
      z.add(d.z);
    }
  }
  return ChartPoint(pt.chart, pt.r, Angle(theta.sum), Angle(z.sum));
}

std::vector<OrbitSample> sample_orbit(const ContactForm& form, const ChartPoint& pt,
                                      double horizon, int n) {
  if (n < 1) throw Error(ErrorKind::Domain, "need at least one sample interval");
  std::vector<OrbitSample> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const double t = horizon * k / n;
    out.push_back({t, flow(form, pt, t)});
  }
  return out;
}

Monodromy monodromy_rotation(const FormCoefficients& c, std::int64_t steps) {
  if (steps < 1) throw Error(ErrorKind::Domain, "steps must be positive");
  const Jet f = c.f(0.0);
  const ReebVelocity v0 = reeb_generic(c, 0.0);
  // Near the core x + iy = re^{iθ} rotates at dθ/dt, so the transverse
  // linearization is the constant generator [[0, −ω], [ω, 0]].
  const double omega = v0.dtheta;
  const Mat2 gen{{{0.0, -omega}, {omega, 0.0}}};
  const double period = kTwoPi * f[0];
  const double h = period / static_cast<double>(steps);

  Mat2 m{{{1.0, 0.0}, {0.0, 1.0}}};
  for (std::int64_t i = 0; i < steps; ++i) {
    const Mat2 k1 = mat_mul(gen, m);
    const Mat2 k2 = mat_mul(gen, mat_axpy(m, 0.5 * h, k1));
    const Mat2 k3 = mat_mul(gen, mat_axpy(m, 0.5 * h, k2));
    const Mat2 k4 = mat_mul(gen, mat_axpy(m, h, k3));
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        m[a][b] += h / 6.0 * (k1[a][b] + 2.0 * k2[a][b] + 2.0 * k3[a][b] + k4[a][b]);
  }

  Monodromy out;
  out.return_map = m;
  out.period = period;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const double gram = m[0][a] * m[0][b] + m[1][a] * m[1][b];
      out.orthogonality_residual =
          std::max(out.orthogonality_residual, std::abs(gram - (a == b ? 1.0 : 0.0)));
    }
  }
  const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (out.orthogonality_residual > kRotationTol || det < 0.0) {
    throw Error(ErrorKind::ModelViolation, "core return map is not a rotation");
  }
  out.rotation = mod1(std::atan2(m[1][0], m[0][0]) / kTwoPi);
  return out;
}

Monodromy monodromy_rotation(const ContactForm& form, Chart chart, std::int64_t steps) {
  return monodromy_rotation(coefficients(form, chart), steps);
}

CoreData core_data(const ContactForm& form) {
  return {form.tau0(), form.tau1(), form.phi0(), form.phi1()};
}

int Classification::periodic_count() const {
  return static_cast<int>(
      std::count_if(orbits.begin(), orbits.end(), [](const auto& o) { return o.periodic; }));
}

Classification classify(const CoreData& cores, std::int64_t max_den, double tol) {
  Classification out;
  out.verdict.max_den = max_den;
  out.verdict.tol = tol;
  out.orbits.push_back(core_orbit(Chart::Zero, cores.tau0, cores.phi0));
  out.orbits.push_back(core_orbit(Chart::One, cores.tau1, cores.phi1));

  const double x0 = mod1(cores.phi0);
  const auto frac0 = rational_detect(x0, max_den, tol);
  if (frac0) {
    const auto frac1 = rational_detect(mod1(cores.phi1), max_den, tol);
    if (!frac1) {
      throw Error(ErrorKind::ModelViolation,
                  "phi0 is rational but phi1 is not detected rational");
    }
    out.verdict.kind = Regularity::QuasiRegular;
    out.verdict.phi0_fraction = *frac0;
    out.a0 = frac0->den;
    out.a1 = frac1->den;
    out.generic_period = static_cast<double>(frac0->den) * cores.tau0;
  } else {
    out.verdict.kind = Regularity::Irregular;
    for (const Fraction& c : convergents(x0, max_den)) {
      out.verdict.certificate.push_back(
          {c, std::abs(std::fma(static_cast<double>(c.den), x0, -static_cast<double>(c.num)))});
    }
  }

  for (double r : {0.25, 0.5, 0.75}) {
    OrbitClassification o;
    o.radius = r;
    o.chart = Chart::Zero;
    o.periodic = out.generic_period.has_value();
    o.minimal_period = out.generic_period;
    out.orbits.push_back(o);
  }
  return out;
}

Classification classify(const ContactForm& form, std::int64_t max_den, double tol) {
  return classify(core_data(form), max_den, tol);
}

double recurrence_gap(const ContactForm& form, const ChartPoint& pt, double horizon,
                      double dt, std::optional<double> exclusion) {
  if (!(dt > 0.0)) throw Error(ErrorKind::Domain, "dt must be positive");
  const double skip = exclusion.value_or(0.5 * form.tau(pt.chart));
  double best = std::numeric_limits<double>::infinity();
  const auto n = static_cast<std::int64_t>(std::floor(horizon / dt));
  for (std::int64_t k = 1; k <= n; ++k) {
    const double t = static_cast<double>(k) * dt;
    if (t <= skip) continue;
    best = std::min(best, point_distance(pt, flow(form, pt, t)));
  }
  return best;
}

std::optional<double> first_return_time(const FormCoefficients& c, const ChartPoint& pt,
                                        double t_max, double dt, double tol) {
  if (!(dt > 0.0)) throw Error(ErrorKind::Domain, "dt must be positive");
  const double theta0 = pt.theta.value();
  const double z0 = pt.z.value();
  Unwrapped y{theta0, z0};
  double t = 0.0;
  double laps = 0.0;
  while (t < t_max) {
    const double h = std::min(dt, t_max - t);
    const Unwrapped next = rk4_step(c, pt.r, y, h);
    const double next_laps = std::floor((next.z - z0) / kTwoPi);
    if (next_laps != laps && next.z != y.z) {
      // Section z = z0 crossed inside this step; interpolate.
      const double target = z0 + kTwoPi * std::max(laps, next_laps);
      const double frac = (target - y.z) / (next.z - y.z);
      const double t_hit = t + frac * h;
      const double theta_hit = y.theta + frac * (next.theta - y.theta);
      if (pt.r == 0.0 || circle_distance(Angle(theta_hit), pt.theta) < tol) return t_hit;
      laps = next_laps;
    }
    y = next;
    t += h;
  }
  return std::nullopt;
}

}  // namespace lenscontact
