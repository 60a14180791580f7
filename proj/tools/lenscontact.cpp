// lenscontact: build, validate and analyse K-contact forms on lens spaces.

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lenscontact/contactomorphism.hpp"
#include "lenscontact/descriptor.hpp"
#include "lenscontact/error.hpp"
#include "lenscontact/metric_curvature.hpp"
#include "lenscontact/numerics.hpp"
#include "lenscontact/report.hpp"
#include "lenscontact/spectral.hpp"

using namespace lenscontact;
using nlohmann::json;

namespace {

enum ExitCode { kPass = 0, kCheckFailure = 1, kUsage = 2 };

struct Output {
  bool json = false;
  bool csv = false;
  std::uint64_t seed = 1;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string num(double x) { return format_double(x); }
std::string num(std::int64_t x) { return std::to_string(x); }

void print_csv(const Table& t) {
  auto line = [](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) std::cout << (i ? "," : "") << cells[i];
    std::cout << "\n";
  };
  line(t.header);
  for (const auto& row : t.rows) line(row);
}

Table checks_table(const Report& r) {
  Table t{{"name", "claim", "residual", "tolerance", "pass"}, {}};
  for (const Check& c : r.checks) {
    t.rows.push_back({c.name, c.claim, num(c.residual), num(c.tolerance), c.pass ? "1" : "0"});
  }
  return t;
}

int emit(Report& report, const Output& out, std::chrono::steady_clock::time_point start,
         const std::optional<Table>& table = std::nullopt) {
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.json) {
    std::cout << report.to_json().dump(2) << "\n";
  } else if (out.csv) {
    print_csv(table ? *table : checks_table(report));
  } else {
    std::cout << report.to_text();
  }
  spdlog::info("{} finished in {:.3f} s", report.command, report.wall_seconds);
  return report.pass() ? kPass : kCheckFailure;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Schema, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void configure_logging() {
  auto logger = spdlog::stderr_color_mt("lenscontact");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("LENSCONTACT_LOG")) {
    const std::string level = env;
    if (level == "error") spdlog::set_level(spdlog::level::err);
    else if (level == "warn") spdlog::set_level(spdlog::level::warn);
    else if (level == "info") spdlog::set_level(spdlog::level::info);
    else if (level == "debug") spdlog::set_level(spdlog::level::debug);
    else spdlog::warn("ignoring LENSCONTACT_LOG={}", level);
  }
}

void add_output_flags(CLI::App* cmd, Output& out) {
  auto* j = cmd->add_flag("--json", out.json, "Print the report as JSON");
  auto* c = cmd->add_flag("--csv", out.csv, "Print the table as CSV");
  j->excludes(c);
  cmd->add_option("--seed", out.seed, "Seed for randomized sampling");
}

// build ------------------------------------------------------------------

struct BuildArgs {
  std::int64_t p = 1;
  std::int64_t q = 0;
  double tau0 = 1.0;
  std::optional<double> tau1;
  std::optional<double> phi0;
  std::optional<int> degree;
  std::string out_path;
};

int run_build(const BuildArgs& a, const Output& out) {
  const auto start = std::chrono::steady_clock::now();
  const LensParams lens = make_lens(a.p, a.q);
  double tau1 = 0.0;
  if (a.tau1) {
    tau1 = *a.tau1;
  } else {
    tau1 = BoundaryData::from_triple(lens, a.tau0, *a.phi0).tau1();
  }
  ProfileSpec profile = a.degree ? profile_with_degree(lens, a.tau0, tau1, *a.degree)
                                 : default_profile(lens, a.tau0, tau1);
  const double phi0 = a.phi0 ? *a.phi0 : profile.boundary().phi0;
  const ContactForm form = ContactForm::from_triple(std::move(profile), a.tau0, phi0, lens);

  json meta = {{"tau1", tau1}, {"degree", form.profile().degree()}};
  const FormDescriptor d = describe(form, meta);
  const std::string text = print_descriptor(d);
  if (!a.out_path.empty()) save_descriptor(d, a.out_path);

  Report report;
  report.command = "build";
  report.inputs_digest = digest(text);
  const SmoothnessReport smooth = validate_smoothness(form.profile());
  report.add("smoothness", "profile-extends-smoothly",
             std::max({smooth.a0_residual, smooth.a1_residual, smooth.odd_at_0, smooth.odd_at_1}),
             smooth.tolerance);
  report.add_flag("monotone", "a-prime-positive", validate_monotone(form.profile()));
  report.values = {{"p", lens.p},          {"q", lens.q},
                   {"tau0", form.tau0()},  {"tau1", form.tau1()},
                   {"phi0", form.phi0()},  {"phi1", form.phi1()},
                   {"degree", form.profile().degree()}};
  if (a.out_path.empty() && !out.json && !out.csv) {
    std::cout << text;
    return report.pass() ? kPass : kCheckFailure;
  }
  if (!a.out_path.empty()) report.values["descriptor"] = a.out_path;
  return emit(report, out, start);
}

// validate ---------------------------------------------------------------

int run_validate(const std::string& path, int samples, const Output& out) {
  const auto start = std::chrono::steady_clock::now();
  const std::string text = read_text(path);
  const FormDescriptor d = parse_descriptor(text);
  Report report;
  report.command = "validate";
  report.inputs_digest = digest(text);

  const LensParams lens = make_lens(d.lens.p, d.lens.q);
  report.add_flag("lens", "lens-arithmetic", lens == d.lens);
  const ProfileSpec profile(d.profile_coeffs, BoundaryData::from_triple(lens, d.tau0, d.phi0));
  const SmoothnessReport smooth = validate_smoothness(profile);
  report.add("smoothness.a0", "profile-vanishes-at-core", smooth.a0_residual, smooth.tolerance);
  report.add("smoothness.a1", "profile-endpoint-value", smooth.a1_residual, smooth.tolerance);
  report.add("smoothness.odd0", "odd-derivatives-vanish-at-0", smooth.odd_at_0, smooth.tolerance);
  report.add("smoothness.odd1", "odd-derivatives-vanish-at-1", smooth.odd_at_1, smooth.tolerance);
  report.add_flag("monotone", "a-prime-positive", validate_monotone(profile));
  report.values["metric_normalized"] = smooth.metric_normalized;

  try {
    const ContactForm form = to_form(d);
    report.add("overlap", "chart-transition-pullback",
               overlap_consistency(form, samples, out.seed), 1e-12);
    const CompatibilityReport compat = verify_compatibility(form, samples, out.seed);
    report.add("compat.reeb_dual", "metric-dual-of-reeb-is-alpha", compat.reeb_dual, 1e-10);
    report.add("compat.volume", "metric-volume-is-contact-volume", compat.volume, 1e-10);
    report.add("compat.spd", "metric-positive-definite", compat.spd_failures, 0.0);
    report.add("k_contact", "reeb-flow-preserves-metric",
               reeb_invariance_check(form, samples, 1e-4, out.seed), 1e-8);
    const double vol = total_volume(form);
    const double closed = static_cast<double>(lens.p) * form.tau0() * form.tau1();
    report.add("volume", "volume-identity", std::abs(vol - closed) / closed, 1e-8);
  } catch (const Error& e) {
    spdlog::warn("form rejected: {}", e.what());
    report.add_flag("form", std::string("form-construction: ") + std::string(to_string(e.kind())),
                    false);
  }
  return emit(report, out, start);
}

// classify ---------------------------------------------------------------

int run_classify(const std::string& path, std::int64_t max_den, double tol, const Output& out) {
  const auto start = std::chrono::steady_clock::now();
  const std::string text = read_text(path);
  const ContactForm form = to_form(parse_descriptor(text));
  const Classification c = classify(form, max_den, tol);
  Report report;
  report.command = "classify";
  report.inputs_digest = digest(text);

  const bool irregular = c.verdict.kind == Regularity::Irregular;
  std::ostringstream summary;
  summary << (irregular ? "irregular" : "quasi-regular") << "; ";
  if (irregular) {
    summary << c.periodic_count() << " periodic orbits; certificate Dmax=" << max_den;
  } else {
    summary << "all orbits periodic; generic period " << num(*c.generic_period);
  }
  report.values = {{"verdict", irregular ? "irregular" : "quasi-regular"},
                   {"summary", summary.str()},
                   {"periodic_cores", 2},
                   {"max_den", max_den},
                   {"tol", tol}};

  for (Chart chart : {Chart::Zero, Chart::One}) {
    const Monodromy m = monodromy_rotation(form, chart);
    const std::string tag = chart == Chart::Zero ? "0" : "1";
    report.add("rotation" + tag, "core-rotation-by-monodromy",
               mod1_distance(m.rotation, form.phi(chart)), 1e-8);
  }
  Table table{{"convergent_num", "convergent_den", "residual"}, {}};
  if (irregular) {
    report.add_flag("periodic_count", "exactly-two-periodic-orbits", c.periodic_count() == 2);
    json cert = json::array();
    for (const ConvergentCheck& cc : c.verdict.certificate) {
      cert.push_back({{"num", cc.fraction.num}, {"den", cc.fraction.den}, {"residual", cc.residual}});
      table.rows.push_back({num(cc.fraction.num), num(cc.fraction.den), num(cc.residual)});
    }
    report.values["certificate"] = cert;
  } else {
    report.values["a0"] = *c.a0;
    report.values["a1"] = *c.a1;
    report.values["generic_period"] = *c.generic_period;
    const ChartPoint pt(Chart::Zero, 0.5, Angle(0.3), Angle(0.7));
    const auto t = first_return_time(coefficients(form, Chart::Zero), pt,
                                     1.5 * *c.generic_period, 1e-3 * form.tau0());
    report.add("generic_period", "generic-orbits-return-after-den-phi0-turns",
               t ? std::abs(*t - *c.generic_period) : INFINITY, 1e-9);
    table.header = {"a0", "a1", "generic_period"};
    table.rows.push_back({num(*c.a0), num(*c.a1), num(*c.generic_period)});
  }
  if (!out.json && !out.csv) std::cout << summary.str() << "\n";
  return emit(report, out, start, table);
}

// flow -------------------------------------------------------------------

struct FlowArgs {
  std::string path;
  int chart = 0;
  std::optional<double> r;
  std::optional<double> theta;
  std::optional<double> z;
  double horizon = 0.0;
  int n = 200;
};

int run_flow(const FlowArgs& a, const Output& out) {
  const auto start = std::chrono::steady_clock::now();
  const std::string text = read_text(a.path);
  const ContactForm form = to_form(parse_descriptor(text));
  numerics::Sampler sampler(out.seed);
  const Chart chart = a.chart == 0 ? Chart::Zero : Chart::One;
  const double r = a.r ? *a.r : sampler.open(0.0, 0.5);
  const double theta = a.theta ? *a.theta : sampler.angle();
  const double z = a.z ? *a.z : sampler.angle();
  if (!(r >= 0.0 && r <= 1.0)) throw Error(ErrorKind::Domain, "--r must lie in [0, 1]");
  const ChartPoint pt(chart, r, Angle(theta), Angle(z));
  const double horizon = a.horizon > 0.0 ? a.horizon : 2.0 * form.tau(chart);

  Report report;
  report.command = "flow";
  report.inputs_digest = digest(text + std::to_string(out.seed));
  const std::vector<OrbitSample> samples = sample_orbit(form, pt, horizon, a.n);
  Table table{{"t", "chart", "r", "theta", "z"}, {}};
  for (const OrbitSample& s : samples) {
    table.rows.push_back({num(s.t), std::to_string(index(s.point.chart)), num(s.point.r),
                          num(s.point.theta.value()), num(s.point.z.value())});
  }
  const FormCoefficients c = coefficients(form, chart);
  const ChartPoint numeric = flow_ode(c, pt, horizon, horizon / 1e4);
  report.add("ode_vs_exact", "reeb-flow-is-linear", point_distance(numeric, samples.back().point),
             1e-9);
  const ReebResiduals res = reeb_residuals(c, r, reeb_field(form, chart));
  report.add("reeb.alpha", "alpha-of-reeb-is-one", res.alpha, 1e-10);
  report.add("reeb.d_alpha", "reeb-in-kernel-of-d-alpha", res.d_alpha, 1e-10);
  report.values = {{"chart", a.chart}, {"r", r}, {"theta", theta}, {"z", z},
                   {"horizon", horizon}, {"samples", a.n + 1}};
  return emit(report, out, start, table);
}

// heat-trace -------------------------------------------------------------

int run_heat_trace(const std::string& path, const Output& out) {
  const auto start = std::chrono::steady_clock::now();
  const std::string text = read_text(path);
  const ContactForm form = to_form(parse_descriptor(text));
  Report report;
  report.command = "heat-trace";
  report.inputs_digest = digest(text);
  const bool irregular = classify(form).verdict.kind == Regularity::Irregular;
  const HeatTraceCoefficients h =
      irregular ? heat_coeffs_irregular(form) : heat_coeffs_quasiregular(form);
  report.values = {{"class", irregular ? "irregular" : "quasi-regular"},
                   {"C0", h.c0},
                   {"C1", h.c1},
                   {"source", std::string(to_string(h.source))}};
  if (h.c0_check) report.values["C0_quadrature"] = *h.c0_check;
  if (h.c1_check) report.values["C1_quadrature"] = *h.c1_check;
  if (!irregular) {
    const SeifertData s = seifert_data(form);
    report.values["a0"] = s.a0;
    report.values["a1"] = s.a1;
    report.values["tau"] = s.tau;
    report.values["chi_orb"] = s.chi_orb.str();
    report.values["e_vol"] = s.e_vol;
    report.values["e_vol_note"] = "-vol/tau; scales with the periods";
  }
  report.add("C0", "volume-coefficient", h.c0_residual(), 1e-8);
  if (h.c1_check) {
    report.add("C1", "curvature-coefficient", h.c1_residual(), 1e-6);
  } else {
    report.add_flag("C1", "curvature-coefficient (metric not normalized)", false);
  }
  if (!metric_is_smooth(form)) {
    Table table{{"C0", "C1", "C0_quadrature"},
                {{num(h.c0), num(h.c1), h.c0_check ? num(*h.c0_check) : ""}}};
    return emit(report, out, start, table);
  }
  report.values["C1_telescoped"] = total_curvature_closed_form(form);
  // Curvature profile of the chart-0 quotient metric.
  Table table{{"r", "kappa", "density"}, {}};
  for (int i = 0; i <= 200; ++i) {
    const double r = i / 200.0;
    table.rows.push_back({num(r), num(kappa(form, Chart::Zero, r)),
                          num(volume_density(form, Chart::Zero, r))});
  }
  return emit(report, out, start, table);
}

// contacto ---------------------------------------------------------------

int run_contacto(const std::string& path_a, const std::string& path_b, int samples,
                 const Output& out) {
  const auto start = std::chrono::steady_clock::now();
  const std::string text_a = read_text(path_a);
  const std::string text_b = read_text(path_b);
  const ContactForm alpha = to_form(parse_descriptor(text_a));
  const ContactForm beta = to_form(parse_descriptor(text_b));
  Report report;
  report.command = "contacto";
  report.inputs_digest = digest(text_a + text_b);

  const bool strict = strict_equivalence_predicate(alpha, beta);
  report.values["strict_equivalent"] = strict;
  if (classify(alpha).verdict.kind == Regularity::Irregular) {
    const EquivalenceVerdict v = classify_pair(alpha.lens(), alpha.tau0(), alpha.tau1());
    report.values["classes_for_periods"] = v.count;
    report.values["q_squared_mod_p"] = v.q_squared_mod_p;
  }
  Table table{{"chart", "r", "image_r"}, {}};
  try {
    const RadialMap map = build_psi_map(alpha, beta);
    report.add("pullback", "psi-pulls-beta-back-to-alpha",
               verify_pullback(map, alpha, beta, samples, out.seed), 1e-8);
    report.add("cocycle", "psi-commutes-with-transition", verify_cocycle(map, samples, out.seed),
               1e-8);
    for (Chart chart : {Chart::Zero, Chart::One}) {
      for (int i = 0; i <= 100; ++i) {
        const double r = i / 100.0;
        table.rows.push_back({std::to_string(index(chart)), num(r), num(map(chart, r))});
      }
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotComparable) throw;
    report.add_flag("comparable", "matching-tau0-and-phi0", false);
  }
  return emit(report, out, start, table);
}

// deform -----------------------------------------------------------------

int run_deform(const std::string& path, int count, const Output& out) {
  const auto start = std::chrono::steady_clock::now();
  const std::string text = read_text(path);
  const ContactForm form = to_form(parse_descriptor(text));
  Report report;
  report.command = "deform";
  report.inputs_digest = digest(text + std::to_string(count));
  const std::vector<ConvergenceRow> rows = convergence_study(form, count);

  Table table{{"n", "epsilon", "ratio_n_num", "ratio_n_den", "a0", "a1", "tau", "C0", "C1",
               "resid_C0", "resid_C1"},
              {}};
  double period_err = 0.0;
  for (const ConvergenceRow& r : rows) {
    table.rows.push_back({std::to_string(r.n), num(r.epsilon), num(r.ratio.num),
                          num(r.ratio.den), num(r.a0), num(r.a1), num(r.tau), num(r.c0),
                          num(r.c1), num(r.resid_c0), num(r.resid_c1)});
    period_err = std::max(period_err, std::abs(r.tau1_measured - r.tau1_predicted));
  }
  report.add_flag("rows", "deformations-are-quasi-regular", !rows.empty());
  report.add("perturbed_period", "perturbed-core-period", period_err, 1e-10);
  if (!rows.empty()) {
    report.add("final_C1", "C1-converges", rows.back().resid_c1, 1e-3);
    report.values["final_resid_C1"] = rows.back().resid_c1;
  }
  report.values["steps"] = rows.size();
  return emit(report, out, start, table);
}

}  // namespace

int main(int argc, char** argv) {
  configure_logging();
  CLI::App app{"Contact forms on lens spaces: construction and verification"};
  app.require_subcommand(1);
  Output out;

  BuildArgs build;
  auto* cmd_build = app.add_subcommand("build", "Construct a form and write its descriptor");
  cmd_build->add_option("--p", build.p, "Lens order p")->required();
  cmd_build->add_option("--q", build.q, "Lens parameter q")->required();
  cmd_build->add_option("--tau0", build.tau0, "Period of the core of chart 0")->required();
  auto* opt_tau1 = cmd_build->add_option("--tau1", build.tau1, "Period of the core of chart 1");
  auto* opt_phi0 = cmd_build->add_option("--phi0", build.phi0, "Rotation number of core 0");
  opt_tau1->excludes(opt_phi0);
  cmd_build->add_option("--degree", build.degree, "Fixed profile degree (3..9)");
  cmd_build->add_option("--out", build.out_path, "Descriptor output path");
  add_output_flags(cmd_build, out);

  std::string in_path;
  int samples = 200;
  auto* cmd_validate = app.add_subcommand("validate", "Run structural checks on a descriptor");
  cmd_validate->add_option("--in", in_path, "Descriptor path")->required();
  cmd_validate->add_option("--samples", samples, "Random sample count");
  add_output_flags(cmd_validate, out);

  std::int64_t max_den = 1'000'000;
  double tol = 1e-12;
  auto* cmd_classify = app.add_subcommand("classify", "Regularity of the Reeb flow");
  cmd_classify->add_option("--in", in_path, "Descriptor path")->required();
  cmd_classify->add_option("--max-den", max_den, "Largest denominator tested");
  cmd_classify->add_option("--tol", tol, "Tolerance on |d*x - n|");
  add_output_flags(cmd_classify, out);

  FlowArgs flow_args;
  auto* cmd_flow = app.add_subcommand("flow", "Sample a Reeb orbit");
  cmd_flow->add_option("--in", flow_args.path, "Descriptor path")->required();
  cmd_flow->add_option("--chart", flow_args.chart, "Chart index")->check(CLI::Range(0, 1));
  cmd_flow->add_option("--r", flow_args.r, "Radius (random if omitted)");
  cmd_flow->add_option("--theta", flow_args.theta, "Angle theta (random if omitted)");
  cmd_flow->add_option("--z", flow_args.z, "Angle z (random if omitted)");
  cmd_flow->add_option("--horizon", flow_args.horizon, "Time horizon (default two periods)");
  cmd_flow->add_option("--n", flow_args.n, "Sample intervals")->check(CLI::PositiveNumber);
  add_output_flags(cmd_flow, out);

  auto* cmd_heat = app.add_subcommand("heat-trace", "Leading heat-trace coefficients");
  cmd_heat->add_option("--in", in_path, "Descriptor path")->required();
  add_output_flags(cmd_heat, out);

  std::string path_b;
  auto* cmd_contacto = app.add_subcommand("contacto", "Strict contactomorphism between two forms");
  cmd_contacto->add_option("--a", in_path, "Descriptor of the source form")->required();
  cmd_contacto->add_option("--b", path_b, "Descriptor of the target form")->required();
  cmd_contacto->add_option("--samples", samples, "Random sample count");
  add_output_flags(cmd_contacto, out);

  int count = 6;
  auto* cmd_deform = app.add_subcommand("deform", "Quasi-regular approximation study");
  cmd_deform->add_option("--in", in_path, "Descriptor path")->required();
  cmd_deform->add_option("--count", count, "Number of approximants")->check(CLI::PositiveNumber);
  add_output_flags(cmd_deform, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*cmd_build) {
      if (!build.tau1 && !build.phi0) {
        std::cerr << "build: one of --tau1 or --phi0 is required\n";
        return kUsage;
      }
      return run_build(build, out);
    }
    if (*cmd_validate) return run_validate(in_path, samples, out);
    if (*cmd_classify) return run_classify(in_path, max_den, tol, out);
    if (*cmd_flow) return run_flow(flow_args, out);
    if (*cmd_heat) return run_heat_trace(in_path, out);
    if (*cmd_contacto) return run_contacto(in_path, path_b, samples, out);
    if (*cmd_deform) return run_deform(in_path, count, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
