#include "lenscontact/contactomorphism.hpp"

#include <algorithm>
#include <cmath>

#include "lenscontact/error.hpp"
#include "lenscontact/numerics.hpp"

namespace lenscontact {

namespace {

constexpr double kMatchTol = 1e-12;
constexpr std::int64_t kIrrationalMaxDen = 1'000'000;
constexpr double kIrrationalTol = 1e-12;

std::int64_t mod_p(std::int64_t x, std::int64_t p) {
  const std::int64_t r = x % p;
  return r < 0 ? r + p : r;
}

RadialMap::ChartMap chart_inverse_map(RadialFn a, RadialFn b) {
  return [a = std::move(a), b = std::move(b)](double r) {
    if (r <= 0.0) return 0.0;
    if (r >= 1.0) return 1.0;
    const double target = a(r)[0];
    return numerics::invert_increasing([&b](double x) { return b(x)[0]; },
                                       [&b](double x) { return b(x)[1]; }, target, 0.0, 1.0);
  };
}

EquivalenceVerdict base_verdict(const LensParams& lens) {
  EquivalenceVerdict v;
  v.q_squared_mod_p = mod_p(lens.q * lens.q, lens.p);
  v.count = v.q_squared_mod_p == mod_p(1, lens.p) ? 1 : 2;
  return v;
}

}  // namespace

ChartPoint RadialMap::operator()(const ChartPoint& pt) const {
  return ChartPoint(pt.chart, (*this)(pt.chart, pt.r), pt.theta, pt.z);
}

RadialMap RadialMap::with_chart(Chart chart, ChartMap map) const {
  RadialMap copy = *this;
  copy.maps_[index(chart)] = std::move(map);
  return copy;
}

RadialMap build_psi_map(const ContactForm& alpha, const ContactForm& beta) {
  if (!(alpha.lens() == beta.lens())) {
    throw Error(ErrorKind::NotComparable, "forms live on different lens spaces");
  }
  if (std::abs(alpha.tau0() - beta.tau0()) >= kMatchTol ||
      std::abs(alpha.phi0() - beta.phi0()) >= kMatchTol) {
    throw Error(ErrorKind::NotComparable, "forms differ in (tau0, phi0)");
  }
  return RadialMap(alpha.lens(),
                   chart_inverse_map(alpha.chart_profile(Chart::Zero),
                                     beta.chart_profile(Chart::Zero)),
                   chart_inverse_map(alpha.chart_profile(Chart::One),
                                     beta.chart_profile(Chart::One)));
}

double verify_pullback(const RadialMap& map, const ContactForm& alpha,
                       const ContactForm& beta, int n_samples, std::uint64_t seed) {
  numerics::Sampler sampler(seed);
  double worst = 0.0;
  for (Chart chart : {Chart::Zero, Chart::One}) {
    const FormCoefficients ca = coefficients(alpha, chart);
    const FormCoefficients cb = coefficients(beta, chart);
    for (int i = 0; i < n_samples; ++i) {
      const double r = sampler.open(0.0, 1.0);
      const double image = map(chart, r);
      worst = std::max({worst, std::abs(cb.f(image)[0] - ca.f(r)[0]),
                        std::abs(cb.g(image)[0] - ca.g(r)[0])});
    }
  }
  return worst;
}

double verify_cocycle(const RadialMap& map, int n_samples, std::uint64_t seed) {
  numerics::Sampler sampler(seed);
  const LensParams& lens = map.lens();
  double worst = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    const ChartPoint pt(Chart::One, sampler.open(0.0, 1.0), Angle(sampler.angle()),
                        Angle(sampler.angle()));
    const ChartPoint lhs = transition_inverse(lens, map(transition(lens, pt)));
    worst = std::max(worst, point_distance(lhs, map(pt)));
  }
  return worst;
}

bool QuadraticIrrational::is_irrational() const {
  if (b == 0 || d <= 0) return false;
  const auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(d))));
  for (std::int64_t k = std::max<std::int64_t>(root - 1, 0); k <= root + 1; ++k) {
    if (k * k == d) return false;
  }
  return true;
}

double QuadraticIrrational::to_double() const {
  return static_cast<double>(a) + static_cast<double>(b) * std::sqrt(static_cast<double>(d));
}

EquivalenceVerdict classify_pair(const LensParams& lens, double tau0, double tau1) {
  const double x = tau0 / tau1;
  if (rational_detect(x, kIrrationalMaxDen, kIrrationalTol)) {
    throw Error(ErrorKind::WrongClass, "tau0/tau1 is rational; the forms are quasi-regular");
  }
  EquivalenceVerdict v = base_verdict(lens);
  const double p = static_cast<double>(lens.p);
  v.phi_q = mod1((x - static_cast<double>(lens.q)) / p);
  v.phi_s = mod1((x - static_cast<double>(lens.s)) / p);
  v.candidates_coincide = mod1_distance(v.phi_q, v.phi_s) < kMatchTol;
  return v;
}

EquivalenceVerdict classify_pair(const LensParams& lens, const QuadraticIrrational& ratio) {
  if (!ratio.is_irrational()) {
    throw Error(ErrorKind::WrongClass, "period ratio is rational");
  }
  EquivalenceVerdict v = base_verdict(lens);
  const double x = ratio.to_double();
  const double p = static_cast<double>(lens.p);
  v.phi_q = mod1((x - static_cast<double>(lens.q)) / p);
  v.phi_s = mod1((x - static_cast<double>(lens.s)) / p);
  // The candidates differ by the exact rational (s − q)/p.
  const Rational gap = Rational(lens.s - lens.q, lens.p);
  v.candidates_coincide = denominator(gap) == 1;
  return v;
}

bool strict_equivalence_predicate(const ContactForm& alpha, const ContactForm& beta,
                                  double tol) {
  if (!(alpha.lens() == beta.lens())) return false;
  for (Chart i : {Chart::Zero, Chart::One}) {
    for (Chart j : {Chart::Zero, Chart::One}) {
      if (std::abs(alpha.tau(i) - beta.tau(j)) < tol &&
          mod1_distance(alpha.phi(i), beta.phi(j)) < tol) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace lenscontact
