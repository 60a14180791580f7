#include <cmath>
#include <random>

#include "doctest.h"
#include "lenscontact/error.hpp"
#include "lenscontact/numerics.hpp"
#include "lenscontact/rational.hpp"
#include "lenscontact/reeb_dynamics.hpp"
#include "oracles.hpp"

using namespace lenscontact;

namespace {

constexpr double kPi = oracle::kPi;

ContactForm random_contact_form(std::mt19937_64& rng) {
  const auto rf = oracle::random_form(rng);
  return ContactForm::from_periods(make_lens(rf.p, rf.q), rf.tau0, rf.tau1);
}

}  // namespace

TEST_CASE("convergents match a long-double expansion") {
  for (double x : {1 / std::sqrt(2.0), kPi - 3, 0.6180339887498949, 2.0 / 7, 0.999}) {
    const auto got = convergents(x, 100000000);
    const auto ref = oracle::convergents(static_cast<long double>(x), 100000000);
    const std::size_t n = std::min(got.size(), ref.size());
    REQUIRE(n >= 2);
    for (std::size_t i = 0; i < std::min<std::size_t>(n, 12); ++i) {
      CHECK(got[i].num == ref[i].first);
      CHECK(got[i].den == ref[i].second);
    }
  }
  const auto two_sevenths = convergents(2.0 / 7, 1000);
  CHECK(two_sevenths.back() == Fraction{2, 7});
}

TEST_CASE("rational_detect examples") {
  const auto two_thirds = rational_detect(2.0 / 3, 10, 1e-12);
  REQUIRE(two_thirds);
  CHECK(*two_thirds == Fraction{2, 3});
  CHECK_FALSE(rational_detect(1 / std::sqrt(2.0), 1000000, 1e-12));
  const auto half = rational_detect(0.5 + 1e-13, 10, 1e-12);
  REQUIRE(half);
  CHECK(*half == Fraction{1, 2});
  CHECK_FALSE(rational_detect(0.5 + 1e-9, 10, 1e-12));
  const auto zero = rational_detect(0.0, 10, 1e-12);
  REQUIRE(zero);
  CHECK(zero->den == 1);
}

TEST_CASE("rational_detect returns reduced fractions that pass the test") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::int64_t> den(1, 5000);
  for (int i = 0; i < 200; ++i) {
    const std::int64_t d = den(rng);
    std::uniform_int_distribution<std::int64_t> num(0, d - 1);
    const std::int64_t n = num(rng);
    const double x = static_cast<double>(n) / static_cast<double>(d);
    const auto f = rational_detect(x, 1000000, 1e-12);
    REQUIRE(f);
    const std::int64_t g = std::gcd(n, d);
    CHECK(f->num == n / g);
    CHECK(f->den == d / g);
  }
}

TEST_CASE("mod1 helpers") {
  CHECK(mod1(1.25) == doctest::Approx(0.25));
  CHECK(mod1(-0.25) == doctest::Approx(0.75));
  CHECK(mod1(3.0) == 0.0);
  CHECK(mod1_distance(0.99, 0.01) == doctest::Approx(0.02));
}

TEST_CASE("Reeb equations hold on 1000 points") {
  std::mt19937_64 rng(4);
  numerics::Sampler s(8);
  for (int form_i = 0; form_i < 5; ++form_i) {
    const ContactForm form = random_contact_form(rng);
    for (Chart chart : {Chart::Zero, Chart::One}) {
      const FormCoefficients c = coefficients(form, chart);
      const ReebVelocity exact = reeb_field(form, chart);
      double worst = 0.0, eq = 0.0;
      for (int i = 0; i < 200; ++i) {
        const double r = s.open(0.0, 1.0);
        const ReebVelocity v = reeb_generic(c, r);
        worst = std::max({worst, std::abs(v.dtheta - exact.dtheta), std::abs(v.dz - exact.dz)});
        const ReebResiduals res = reeb_residuals(c, r, v);
        eq = std::max({eq, res.alpha, res.d_alpha});
      }
      CHECK(worst < 1e-10);
      CHECK(eq < 1e-10);
    }
  }
}

TEST_CASE("Reeb field on the cores") {
  const ContactForm form = ContactForm::from_periods(make_lens(7, 3), 1.0, 0.4);
  for (Chart chart : {Chart::Zero, Chart::One}) {
    const FormCoefficients c = coefficients(form, chart);
    const ReebVelocity at0 = reeb_generic(c, 0.0);
    const ReebVelocity near0 = reeb_generic(c, 1e-6);
    CHECK(at0.dz == doctest::Approx(2 * kPi / form.tau(chart)).epsilon(1e-12));
    CHECK(std::abs(at0.dtheta - near0.dtheta) < 1e-8);
    const ReebVelocity at1 = reeb_generic(c, 1.0);
    CHECK(std::abs(at1.dtheta - reeb_generic(c, 1 - 1e-6).dtheta) < 1e-8);
    CHECK(std::abs(at1.dz - reeb_generic(c, 1 - 1e-6).dz) < 1e-8);
  }
}

TEST_CASE("degenerate coefficients are not contact") {
  FormCoefficients c;
  c.f = [](double) { return Jet::constant(1.0); };
  c.g = [](double) { return Jet::constant(0.0); };
  CHECK_THROWS_AS(reeb_generic(c, 0.5), Error);
  CHECK_THROWS_AS(reeb_generic(c, 0.0), Error);
}

TEST_CASE("flow_ode agrees with the exact flow and reverses") {
  const ContactForm form = ContactForm::from_periods(make_lens(7, 3), 1.0, 0.4);
  numerics::Sampler s(12);
  for (Chart chart : {Chart::Zero, Chart::One}) {
    const FormCoefficients c = coefficients(form, chart);
    for (int i = 0; i < 3; ++i) {
      const ChartPoint pt(chart, s.open(0.0, 1.0), Angle(s.angle()), Angle(s.angle()));
      const ChartPoint numeric = flow_ode(c, pt, 100.0, 1e-3);
      const ChartPoint exact = flow(form, pt, 100.0);
      CHECK(point_distance(numeric, exact) < 1e-9);
      CHECK(point_distance(flow_ode(c, numeric, -100.0, 1e-3), pt) < 1e-9);
    }
  }
  CHECK_THROWS_AS(flow_ode(coefficients(form, Chart::Zero),
                           ChartPoint(Chart::Zero, 0.3, Angle(0), Angle(0)), 1.0, 1e-3, 10),
                  Error);
}

TEST_CASE("sample_orbit") {
  const ContactForm form = ContactForm::from_periods(make_lens(1, 0), 2.0, 3.0);
  const ChartPoint pt(Chart::Zero, 0.4, Angle(0.1), Angle(0.2));
  const auto orbit = sample_orbit(form, pt, 6.0, 60);
  REQUIRE(orbit.size() == 61);
  CHECK(orbit.front().t == 0.0);
  CHECK(orbit.back().t == doctest::Approx(6.0));
  CHECK(point_distance(orbit.back().point, pt) < 1e-12);
  CHECK(point_distance(orbit[30].point, pt) > 1e-3);
}

TEST_CASE("monodromy rotation number on 20 random forms") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 20; ++i) {
    const ContactForm form = random_contact_form(rng);
    for (Chart chart : {Chart::Zero, Chart::One}) {
      const Monodromy mono = monodromy_rotation(form, chart);
      CHECK(mod1_distance(mono.rotation, mod1(form.phi(chart))) < 1e-8);
      CHECK(mono.period == doctest::Approx(form.tau(chart)).epsilon(1e-12));
      CHECK(mono.orthogonality_residual < 1e-8);
    }
  }
}

TEST_CASE("monodromy agrees with a displaced orbit") {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 5; ++i) {
    const ContactForm form = random_contact_form(rng);
    for (Chart chart : {Chart::Zero, Chart::One}) {
      const FormCoefficients c = coefficients(form, chart);
      const ChartPoint start(chart, 1e-5, Angle(0.0), Angle(0.0));
      const ChartPoint end = flow_ode(c, start, form.tau(chart), form.tau(chart) / 20000);
      CHECK(circle_distance(end.z, start.z) < 1e-9);
      const double turns = mod1(end.theta.value() / (2 * kPi));
      CHECK(mod1_distance(turns, monodromy_rotation(form, chart).rotation) < 1e-8);
    }
  }
}

TEST_CASE("classify L(1,0) with periods (2, 3)") {
  const ContactForm form = ContactForm::from_periods(make_lens(1, 0), 2.0, 3.0);
  const Classification cls = classify(form);
  CHECK(cls.verdict.kind == Regularity::QuasiRegular);
  REQUIRE(cls.generic_period);
  CHECK(*cls.generic_period == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(*cls.a0 == 3);
  CHECK(*cls.a1 == 2);
  CHECK(cls.verdict.phi0_fraction->num == 2);
  CHECK(cls.periodic_count() == 5);

  const auto ret = first_return_time(coefficients(form, Chart::Zero),
                                     ChartPoint(Chart::Zero, 0.5, Angle(0.3), Angle(0.7)),
                                     20.0, 1e-3);
  REQUIRE(ret);
  CHECK(std::abs(*ret - 6.0) < 1e-9);
}

TEST_CASE("equal periods give a regular form") {
  const ContactForm form = ContactForm::from_periods(make_lens(1, 0), 1.0, 1.0);
  const Classification cls = classify(form);
  CHECK(cls.verdict.kind == Regularity::QuasiRegular);
  CHECK(*cls.a0 == 1);
  CHECK(*cls.a1 == 1);
  CHECK(*cls.generic_period == doctest::Approx(1.0));
}

TEST_CASE("irrational period ratio gives exactly two periodic orbits") {
  const ContactForm form = ContactForm::from_periods(make_lens(7, 3), 1.0, std::sqrt(2.0));
  const Classification cls = classify(form);
  CHECK(cls.verdict.kind == Regularity::Irregular);
  CHECK(cls.periodic_count() == 2);
  CHECK_FALSE(cls.generic_period);
  REQUIRE_FALSE(cls.verdict.certificate.empty());
  for (const auto& c : cls.verdict.certificate) CHECK(c.residual >= 1e-12);

  const ChartPoint pt(Chart::Zero, 0.5, Angle(0.3), Angle(0.7));
  CHECK(recurrence_gap(form, pt, 50.0, 1e-3) > 1e-6);
  CHECK_FALSE(first_return_time(coefficients(form, Chart::Zero), pt, 50.0, 1e-3));
}

TEST_CASE("quasi-regular recurrence") {
  const ContactForm form = ContactForm::from_periods(make_lens(1, 0), 2.0, 3.0);
  const ChartPoint pt(Chart::Zero, 0.5, Angle(0.3), Angle(0.7));
  CHECK(recurrence_gap(form, pt, 7.0, 1e-3) < 1e-9);
}

TEST_CASE("core orbits") {
  const ContactForm form = ContactForm::from_periods(make_lens(7, 3), 1.0, 0.4);
  const Classification cls = classify(form);
  REQUIRE(cls.orbits.size() >= 2);
  CHECK(cls.orbits[0].is_core);
  CHECK(cls.orbits[1].is_core);
  CHECK(*cls.orbits[0].minimal_period == doctest::Approx(1.0));
  CHECK(*cls.orbits[1].minimal_period == doctest::Approx(0.4));
  CHECK(cls.orbits[1].chart == Chart::One);
}
