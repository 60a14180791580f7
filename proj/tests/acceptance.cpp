// End-to-end acceptance suite. One line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lenscontact/contactomorphism.hpp"
#include "lenscontact/error.hpp"
#include "lenscontact/metric_curvature.hpp"
#include "lenscontact/numerics.hpp"
#include "lenscontact/spectral.hpp"
#include "oracles.hpp"

using namespace lenscontact;

namespace {

using Clock = std::chrono::steady_clock;
constexpr double kPi = oracle::kPi;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// 1. Volume identity.
void volume_identity(Outcome& out) {
  const std::tuple<int, int, double, double> sets[] = {
      {1, 0, 1.0, 1.0},   {1, 0, 0.7, 1.6},  {2, 1, 1.0, std::sqrt(2.0)}, {2, 1, 1.5, 0.8},
      {7, 3, 1.0, std::sqrt(2.0)}, {7, 3, 1.0, 1.5}, {7, 2, 0.9, 1.2}, {8, 3, 1.0, 0.7},
      {8, 5, 1.3, 1.1},   {8, 1, 0.6, 0.9}};
  double worst = 0.0, slowest = 0.0;
  for (auto [p, q, t0, t1] : sets) {
    const auto start = Clock::now();
    const ContactForm form = ContactForm::from_periods(make_lens(p, q), t0, t1);
    const double vol = total_volume(form);
    slowest = std::max(slowest, seconds_since(start));
    worst = std::max(worst, rel(vol, p * t0 * t1));
  }
  out.detail << "max rel err " << worst << ", slowest " << slowest << " s";
  out.require(worst < 1e-8, "relative error < 1e-8");
  out.require(slowest < 0.1, "each set < 0.1 s");
}

// 2. Total curvature 2π(τ₀ + τ₁).
void curvature_coefficient(Outcome& out) {
  std::vector<std::tuple<int, int, double, double>> sets = {
      {7, 3, 1.0, std::sqrt(2.0)}, {1, 0, 1.0, 1.0}, {8, 3, 1.0, 0.7}, {2, 1, 1.4, 0.9}};
  std::mt19937_64 rng(2);
  for (int i = 0; i < 6; ++i) {
    const auto rf = oracle::random_form(rng);
    sets.emplace_back(rf.p, rf.q, rf.tau0, rf.tau1);
  }
  double worst = 0.0, slowest = 0.0, headline = 0.0;
  for (auto [p, q, t0, t1] : sets) {
    const auto start = Clock::now();
    const ContactForm form = ContactForm::from_periods(make_lens(p, q), t0, t1);
    const double c1 = total_curvature(form);
    slowest = std::max(slowest, seconds_since(start));
    worst = std::max(worst, rel(c1, 2 * kPi * (t0 + t1)));
    if (headline == 0.0) headline = c1;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", headline);
  out.detail << "L(7,3) (1,sqrt2) C1 = " << buf << ", max rel err " << worst << ", slowest "
             << slowest << " s";
  out.require(worst < 1e-6, "relative error < 1e-6");
  out.require(slowest < 0.5, "each form < 0.5 s");
}

// 3. Core rotation numbers by monodromy.
void rotation_numbers(Outcome& out) {
  std::mt19937_64 rng(3);
  double worst = 0.0, slowest = 0.0;
  for (int i = 0; i < 20; ++i) {
    const auto rf = oracle::random_form(rng);
    const auto start = Clock::now();
    const LensParams lens = make_lens(rf.p, rf.q);
    const ContactForm form = ContactForm::from_periods(lens, rf.tau0, rf.tau1);
    const double rot0 = monodromy_rotation(form, Chart::Zero).rotation;
    const double rot1 = monodromy_rotation(form, Chart::One).rotation;
    slowest = std::max(slowest, seconds_since(start));
    const double want0 = mod1((rf.tau0 / rf.tau1 - static_cast<double>(lens.q)) / lens.p);
    const double want1 = mod1((rf.tau1 / rf.tau0 - static_cast<double>(lens.s)) / lens.p);
    worst = std::max({worst, mod1_distance(rot0, want0), mod1_distance(rot1, want1)});
  }
  out.detail << "max err " << worst << " turns, slowest " << slowest << " s";
  out.require(worst < 1e-8, "rotation numbers within 1e-8");
  out.require(slowest < 1.0, "each form < 1 s");
}

// 4. Periodic orbit dichotomy.
void orbit_dichotomy(Outcome& out) {
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0);
  const std::tuple<int, int, double, double> irrational[] = {
      {7, 3, 1.0, r2}, {1, 0, 1.0, r3}, {8, 3, 1.0, kPi / 3}, {2, 1, r2, 1.0}, {5, 2, 1.0, std::exp(0.5)}};
  const std::tuple<int, int, double, double> rational[] = {
      {1, 0, 2.0, 3.0}, {7, 3, 1.0, 1.5}, {1, 0, 1.0, 1.0}, {8, 3, 1.0, 0.5}, {5, 2, 0.75, 1.0}};
  int irregular_ok = 0, quasi_ok = 0;
  double worst_return = 0.0;
  for (auto [p, q, t0, t1] : irrational) {
    const Classification c = classify(ContactForm::from_periods(make_lens(p, q), t0, t1));
    if (c.verdict.kind == Regularity::Irregular && c.periodic_count() == 2 && c.orbits[0].is_core &&
        c.orbits[1].is_core) {
      ++irregular_ok;
    }
  }
  for (auto [p, q, t0, t1] : rational) {
    const ContactForm form = ContactForm::from_periods(make_lens(p, q), t0, t1);
    const Classification c = classify(form);
    if (c.verdict.kind != Regularity::QuasiRegular || !c.generic_period) continue;
    const double expected = static_cast<double>(c.verdict.phi0_fraction->den) * t0;
    const ChartPoint start(Chart::Zero, 0.5, Angle(0.4), Angle(1.1));
    const auto ret =
        first_return_time(coefficients(form, Chart::Zero), start, 1.5 * expected, 1e-3);
    if (!ret) continue;
    const double err = std::max(std::abs(*ret - expected), std::abs(*c.generic_period - expected));
    worst_return = std::max(worst_return, err);
    if (err < 1e-9) ++quasi_ok;
  }
  out.detail << irregular_ok << "/5 irregular with two periodic cores, " << quasi_ok
             << "/5 quasi-regular with first return within " << worst_return;
  out.require(irregular_ok == 5, "irregular forms");
  out.require(quasi_ok == 5, "quasi-regular first return to 1e-9");
}

// 5. Quasi-regular expansion on L(1,0) with periods (2, 3).
void quasi_regular_expansion(Outcome& out) {
  const ContactForm form = ContactForm::from_periods(make_lens(1, 0), 2.0, 3.0);
  const SeifertData sd = seifert_data(form);
  const HeatTraceCoefficients hc = heat_coeffs_quasiregular(form);
  const double quad = total_curvature(form);
  out.detail << "a0=" << sd.a0 << " a1=" << sd.a1 << " tau=" << sd.tau << " chi="
             << sd.chi_orb.str() << " e=" << sd.e_vol << " C1=" << hc.c1
             << " (quadrature rel err " << rel(quad, hc.c1) << ")";
  out.require(sd.a0 == 3 && sd.a1 == 2, "isotropy orders (3, 2)");
  out.require(std::abs(sd.tau - 6.0) < 1e-12, "tau = 6");
  out.require(sd.chi_orb == Rational(5, 6), "chi_orb = 5/6 exactly");
  out.require(std::abs(sd.e_vol + 1.0) < 1e-12, "e = -1");
  out.require(std::abs(hc.c1 - 10 * kPi) < 1e-12, "C1 = 10 pi");
  out.require(rel(quad, hc.c1) < 1e-6, "C1 against curvature quadrature");
}

// 6. Deformation convergence on L(7,3) with periods (1, √2).
void deformation_convergence(Outcome& out) {
  const auto start = Clock::now();
  const ContactForm form = ContactForm::from_periods(make_lens(7, 3), 1.0, std::sqrt(2.0));
  const auto rows = convergence_study(form, 6);
  const double elapsed = seconds_since(start);
  bool all_quasi = true;
  double period_err = 0.0;
  for (const ConvergenceRow& row : rows) {
    all_quasi = all_quasi && row.regularity == Regularity::QuasiRegular;
    period_err = std::max(period_err, std::abs(row.tau1_measured - row.tau1_predicted));
  }
  const double final_resid = rows.empty() ? INFINITY : rows.back().resid_c1;
  out.detail << rows.size() << " steps, period err " << period_err << ", C1 residual "
             << (rows.empty() ? INFINITY : rows.front().resid_c1) << " -> " << final_resid << ", "
             << elapsed << " s";
  out.require(rows.size() >= 6, "at least 6 steps");
  out.require(all_quasi, "every step quasi-regular");
  out.require(period_err < 1e-10, "perturbed period to 1e-10");
  out.require(final_resid < 1e-3, "final C1 residual < 1e-3");
  out.require(elapsed < 30.0, "total < 30 s");
}

// 7. Strict contactomorphisms and their classification.
void contactomorphisms(Outcome& out) {
  const double r2 = std::sqrt(2.0);
  const std::tuple<int, int, double, double> cases[] = {
      {7, 3, 1.0, r2}, {8, 3, 1.0, 1.3}, {1, 0, 1.0, 1.0}, {5, 2, 0.8, 1.1}, {2, 1, 1.2, 0.9},
      {7, 3, 1.0, 1.5}, {1, 0, 1.0, 2.0}};
  int pairs = 0;
  double pullback = 0.0, cocycle = 0.0;
  for (auto [p, q, t0, t1] : cases) {
    if (pairs == 5) break;
    const LensParams lens = make_lens(p, q);
    const ContactForm alpha = ContactForm::from_periods(lens, t0, t1);
    for (int degree = alpha.profile().degree() + 1; degree <= 9; ++degree) {
      const ProfileSpec prof = profile_with_degree(lens, t0, t1, degree);
      if (!validate_monotone(prof)) continue;
      const ContactForm beta = ContactForm::from_triple(prof, t0, alpha.phi0(), lens);
      const RadialMap psi = build_psi_map(alpha, beta);
      pullback = std::max(pullback, verify_pullback(psi, alpha, beta, 1000));
      cocycle = std::max(cocycle, verify_cocycle(psi, 1000));
      ++pairs;
      break;
    }
  }
  const bool swapped = strict_equivalence_predicate(
      ContactForm::from_periods(make_lens(7, 3), 1.0, r2),
      ContactForm::from_periods(make_lens(7, 3), r2, 1.0));
  const QuadraticIrrational sqrt2{Rational(0), Rational(1), 2};
  const int count83 = classify_pair(make_lens(8, 3), sqrt2).count;
  const int count73 = classify_pair(make_lens(7, 3), sqrt2).count;
  out.detail << pairs << " pairs, pullback " << pullback << ", cocycle " << cocycle
             << ", swapped L(7,3) predicate " << (swapped ? "true" : "false") << ", counts L(8,3)="
             << count83 << " L(7,3)=" << count73;
  out.require(pairs == 5, "5 same-triple pairs");
  out.require(pullback < 1e-8, "pullback < 1e-8");
  out.require(cocycle < 1e-8, "cocycle < 1e-8");
  out.require(!swapped, "swapped L(7,3) not strictly equivalent");
  out.require(count83 == 1 && count73 == 2, "class counts");
}

// 8. Structural residuals.
void structural(Outcome& out) {
  numerics::Sampler s(8);
  double transitions = 0.0, action = 0.0;
  for (auto [p, q] : {std::pair{7, 3}, {8, 3}, {1, 0}}) {
    const LensParams lens = make_lens(p, q);
    for (int i = 0; i < 1000; ++i) {
      const ChartPoint pt(Chart::One, s.open(0.0, 1.0), Angle(s.angle()), Angle(s.angle()));
      transitions = std::max(transitions,
                             point_distance(transition_inverse(lens, transition(lens, pt)), pt));
      const Angle a(s.angle()), b(s.angle());
      const ChartPoint via0 = transition_inverse(lens, torus_action(lens, a, b, transition(lens, pt)));
      action = std::max(action, point_distance(via0, torus_action(lens, a, b, pt)));
    }
  }
  std::mt19937_64 rng(81);
  double reeb = 0.0, compat = 0.0, invariance = 0.0;
  for (int i = 0; i < 5; ++i) {
    const auto rf = oracle::random_form(rng);
    const ContactForm form = ContactForm::from_periods(make_lens(rf.p, rf.q), rf.tau0, rf.tau1);
    for (Chart chart : {Chart::Zero, Chart::One}) {
      const FormCoefficients c = coefficients(form, chart);
      for (int k = 0; k < 1000; ++k) {
        const double r = s.open(0.0, 1.0);
        const ReebResiduals res = reeb_residuals(c, r, reeb_generic(c, r));
        reeb = std::max({reeb, res.alpha, res.d_alpha});
      }
    }
    compat = std::max(compat, verify_compatibility(form, 1000).max_residual());
    invariance = std::max(invariance, reeb_invariance_check(form, 200));
  }
  out.detail << "transition " << transitions << ", action " << action << ", Reeb " << reeb
             << ", compatibility " << compat << ", invariance " << invariance;
  out.require(transitions < 1e-12, "transition round trip < 1e-12");
  out.require(action < 1e-12, "torus action equivariance < 1e-12");
  out.require(reeb < 1e-10, "Reeb equations < 1e-10");
  out.require(compat < 1e-10, "metric compatibility < 1e-10");
  out.require(invariance < 1e-10, "Reeb invariance < 1e-10");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"volume identity", volume_identity},
      {"curvature coefficient", curvature_coefficient},
      {"core rotation numbers", rotation_numbers},
      {"periodic orbit dichotomy", orbit_dichotomy},
      {"quasi-regular expansion", quasi_regular_expansion},
      {"deformation convergence", deformation_convergence},
      {"strict contactomorphisms", contactomorphisms},
      {"structural residuals", structural},
  };
  const auto suite_start = Clock::now();
  int failures = 0;
  int n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    Outcome out;
    const auto start = Clock::now();
    try {
      run(out);
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail << " [exception: " << e.what() << "]";
    }
    std::printf("criterion %d %-26s %s  (%.2f s)  %s\n", n, name, out.pass ? "PASS" : "FAIL",
                seconds_since(start), out.detail.str().c_str());
    if (!out.pass) ++failures;
  }
  const double total = seconds_since(suite_start);
  std::printf("acceptance: %d/%d passed in %.2f s\n", n - failures, n, total);
  return failures == 0 ? 0 : 1;
}
