#include <cmath>
#include <vector>

#include "doctest.h"
#include "lenscontact/contactomorphism.hpp"
#include "lenscontact/error.hpp"
#include "oracles.hpp"

using namespace lenscontact;

namespace {

struct Pair {
  ContactForm alpha;
  ContactForm beta;
};

// Same (lens, τ₀, φ₀), different profiles: the default one and a higher-degree
// member of the same family.
std::vector<Pair> same_triple_pairs() {
  std::vector<Pair> out;
  const std::tuple<int, int, double, double> cases[] = {
      {7, 3, 1.0, std::sqrt(2.0)}, {8, 3, 1.0, 1.3}, {1, 0, 1.0, 1.0},
      {5, 2, 0.8, 1.1},            {2, 1, 1.2, 0.9}, {7, 3, 1.0, 1.5}};
  for (auto [p, q, t0, t1] : cases) {
    const LensParams lens = make_lens(p, q);
    const ContactForm alpha = ContactForm::from_periods(lens, t0, t1);
    for (int degree = alpha.profile().degree() + 1; degree <= 9; ++degree) {
      const ProfileSpec prof = profile_with_degree(lens, t0, t1, degree);
      if (!validate_monotone(prof)) continue;
      out.push_back({alpha, ContactForm::from_triple(prof, t0, alpha.phi0(), lens)});
      break;
    }
  }
  return out;
}

// Inverse of b by dense tabulation and linear interpolation.
double tabulated_inverse(const RadialFn& b, double y, int n = 200000) {
  double lo_r = 0.0, lo_v = b(0.0)[0];
  for (int i = 1; i <= n; ++i) {
    const double r = static_cast<double>(i) / n;
    const double v = b(r)[0];
    if (v >= y) return lo_r + (r - lo_r) * (y - lo_v) / (v - lo_v);
    lo_r = r;
    lo_v = v;
  }
  return 1.0;
}

}  // namespace

TEST_CASE("same-triple pairs are strictly contactomorphic") {
  const auto pairs = same_triple_pairs();
  REQUIRE(pairs.size() >= 5);
  for (const Pair& pr : pairs) {
    CHECK(pr.alpha.profile().degree() != pr.beta.profile().degree());
    const RadialMap psi = build_psi_map(pr.alpha, pr.beta);
    CHECK(verify_pullback(psi, pr.alpha, pr.beta, 500) < 1e-8);
    CHECK(verify_cocycle(psi, 500) < 1e-8);
    CHECK(strict_equivalence_predicate(pr.alpha, pr.beta));
    CHECK(psi(Chart::Zero, 0.0) == 0.0);
    CHECK(psi(Chart::Zero, 1.0) == 1.0);
  }
}

TEST_CASE("radial map against a tabulated inverse") {
  const auto pairs = same_triple_pairs();
  const Pair& pr = pairs.front();
  const RadialMap psi = build_psi_map(pr.alpha, pr.beta);
  const RadialFn a = pr.alpha.chart_profile(Chart::Zero);
  const RadialFn b = pr.beta.chart_profile(Chart::Zero);
  for (double r : {0.1, 0.35, 0.6, 0.9}) {
    CHECK(std::abs(psi(Chart::Zero, r) - tabulated_inverse(b, a(r)[0])) < 1e-8);
  }
}

TEST_CASE("chart-1 map is the reflected chart-0 map") {
  const auto pairs = same_triple_pairs();
  const RadialMap psi = build_psi_map(pairs[0].alpha, pairs[0].beta);
  for (double r : {0.05, 0.4, 0.77}) {
    CHECK(std::abs(psi(Chart::One, r) - (1.0 - psi(Chart::Zero, 1.0 - r))) < 1e-10);
  }
}

TEST_CASE("a perturbed chart map breaks the cocycle") {
  const auto pairs = same_triple_pairs();
  const RadialMap psi = build_psi_map(pairs[0].alpha, pairs[0].beta);
  const RadialMap bent = psi.with_chart(Chart::One, [psi](double r) {
    return psi(Chart::One, r) + 1e-3 * std::sin(3.14159265358979 * r);
  });
  CHECK(verify_cocycle(bent, 500) > 1e-4);
  CHECK(verify_pullback(bent, pairs[0].alpha, pairs[0].beta, 500) > 1e-6);
}

TEST_CASE("incomparable forms") {
  const ContactForm a = ContactForm::from_periods(make_lens(7, 3), 1.0, std::sqrt(2.0));
  const ContactForm b = ContactForm::from_periods(make_lens(7, 3), 1.0, 1.5);
  const ContactForm c = ContactForm::from_periods(make_lens(8, 3), 1.0, std::sqrt(2.0));
  for (const ContactForm* other : {&b, &c}) {
    try {
      build_psi_map(a, *other);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotComparable);
    }
  }
  CHECK_FALSE(strict_equivalence_predicate(a, c));
}

TEST_CASE("swapped periods") {
  const double r2 = std::sqrt(2.0);
  const ContactForm a73 = ContactForm::from_periods(make_lens(7, 3), 1.0, r2);
  const ContactForm b73 = ContactForm::from_periods(make_lens(7, 3), r2, 1.0);
  CHECK_FALSE(strict_equivalence_predicate(a73, b73));
  const ContactForm a83 = ContactForm::from_periods(make_lens(8, 3), 1.0, r2);
  const ContactForm b83 = ContactForm::from_periods(make_lens(8, 3), r2, 1.0);
  CHECK(strict_equivalence_predicate(a83, b83));
}

TEST_CASE("classify_pair counts") {
  const double r2 = std::sqrt(2.0);
  const QuadraticIrrational sqrt2{Rational(0), Rational(1), 2};
  CHECK(classify_pair(make_lens(7, 3), 1.0, r2).count == 2);
  CHECK(classify_pair(make_lens(8, 3), 1.0, r2).count == 1);
  CHECK(classify_pair(make_lens(1, 0), 1.0, r2).count == 1);
  CHECK(classify_pair(make_lens(7, 3), 1.0, r2).q_squared_mod_p == 2);
  for (auto [p, q] : {std::pair{7, 3}, {8, 3}, {1, 0}, {5, 2}, {5, 4}, {12, 5}}) {
    const LensParams lens = make_lens(p, q);
    const EquivalenceVerdict exact = classify_pair(lens, sqrt2);
    const EquivalenceVerdict num = classify_pair(lens, r2, 1.0);
    CHECK(exact.count == num.count);
    CHECK(exact.candidates_coincide == num.candidates_coincide);
    CHECK(exact.candidates_coincide == (lens.s == lens.q));
    CHECK(exact.phi_q == doctest::Approx(num.phi_q));
    // Count from the congruence directly.
    const bool involution = (static_cast<std::int64_t>(q) * q - 1) % p == 0;
    CHECK(exact.count == (involution ? 1 : 2));
  }
}

TEST_CASE("quadratic irrationals") {
  CHECK(QuadraticIrrational{Rational(1), Rational(2), 3}.is_irrational());
  CHECK_FALSE(QuadraticIrrational{Rational(1), Rational(2), 4}.is_irrational());
  CHECK_FALSE(QuadraticIrrational{Rational(1), Rational(0), 3}.is_irrational());
  CHECK(QuadraticIrrational{Rational(1, 2), Rational(1), 2}.to_double() ==
        doctest::Approx(0.5 + std::sqrt(2.0)));
  try {
    classify_pair(make_lens(7, 3), QuadraticIrrational{Rational(3, 2), Rational(1), 9});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WrongClass);
  }
  CHECK_THROWS_AS(classify_pair(make_lens(7, 3), 2.0, 3.0), Error);
}
