// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "chshkit/chshkit.hpp"
#include "report.hpp"

namespace chshkit::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Flag values outside their documented domain.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unreadable or unwritable files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TripleFlags {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta3 = 0.0;
};

struct CandidateFlags {
  std::string candidate = "locality";
  std::string grid;
};

struct SimulateFlags {
  double theta = 0.0;
  std::size_t n = 1000000;
  std::uint64_t seed = 0;
  std::string out;
};

struct LhvFlags {
  double theta_a = 0.0;
  double theta_b = 0.0;
  std::size_t n = 1000000;
  std::uint64_t seed = 0;
  std::string out;
};

struct OctetFlags {
  TripleFlags theta;
  std::optional<double> f;
  std::size_t n = 1000000;
  std::uint64_t seed = 0;
  std::string out;
};

struct ChshFlags {
  TripleFlags theta;
  CandidateFlags candidate;
  std::optional<double> c1, c2, c3, c4;
};

struct LpFlags {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
};

struct AnalyzeFlags {
  CandidateFlags candidate;
  double radius = 0.1;
  int samples = 200;
  std::uint64_t seed = 0;
  double jump_step = 1e-2;
  int directions = 64;
  std::string out;
};

struct ScanFlags {
  CandidateFlags candidate;
  int resolution = 25;
  int limit = 50;
  std::string out;
};

double angle_value(double v, bool degrees) {
  return degrees ? v * kPi / 180.0 : v;
}

double finite_angle(double v, bool degrees, const char* flag) {
  const double r = angle_value(v, degrees);
  if (!std::isfinite(r)) {
    throw UsageError(std::string(flag) + " must be finite");
  }
  return r;
}

AngleTriple resolve_triple(const TripleFlags& f, bool degrees) {
  const AngleTriple t(finite_angle(f.theta1, degrees, "--theta1"),
                      finite_angle(f.theta2, degrees, "--theta2"),
                      finite_angle(f.theta3, degrees, "--theta3"));
  if (!t.in_q_plus()) {
    throw UsageError("--theta1/--theta2/--theta3 must each lie in [0, pi] radians");
  }
  return t;
}

Json triple_json(const AngleTriple& t) {
  return Json{{"theta1", t.theta1()}, {"theta2", t.theta2()}, {"theta3", t.theta3()}};
}

void require_count(std::size_t n) {
  if (n == 0) {
    throw UsageError("--n must be at least 1");
  }
}

void require_correlation(double c, const char* flag) {
  if (!std::isfinite(c) || c < -1.0 || c > 1.0) {
    throw UsageError(std::string(flag) + " must lie in [-1, 1]");
  }
}

F4Candidate resolve_candidate(const CandidateFlags& f) {
  if (!f.grid.empty()) {
    std::ifstream in(f.grid);
    if (!in) {
      throw IoError("cannot read grid file '" + f.grid + "'");
    }
    return read_grid_candidate(in);
  }
  if (f.candidate == "grid") {
    throw UsageError("--candidate grid requires --grid FILE");
  }
  return F4Candidate::builtin(f.candidate);
}

Json candidate_config(const CandidateFlags& f) {
  return Json{{"candidate", f.grid.empty() ? f.candidate : "grid"},
              {"grid", f.grid.empty() ? Json(nullptr) : Json(f.grid)}};
}

void write_file(const std::string& path,
                const std::function<void(std::ostream&)>& writer) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  writer(file);
  file.flush();
  if (!file) {
    throw IoError("failed writing '" + path + "'");
  }
}

Json path_or_null(const std::string& path) {
  return path.empty() ? Json(nullptr) : Json(path);
}

Json envelope(const std::string& command, Json config, Json result) {
  return Json{{"tool", "chshkit"},
              {"version", kVersion},
              {"command", command},
              {"config", std::move(config)},
              {"result", std::move(result)}};
}

void emit_report(std::ostream& out, const Json& doc, const std::string& path) {
  const std::string text = to_report_text(doc);
  if (!path.empty()) {
    write_file(path, [&](std::ostream& f) { f << text; });
  }
  out << text;
}

Json distribution_json(const JointDistribution4& d) {
  Json arr = Json::array();
  for (double p : d.p) {
    arr.push_back(p);
  }
  return arr;
}

Json correlation_vector_json(const CorrelationVector& c) {
  return Json::array({c.c1, c.c2, c.c3, c.c4});
}

// --- subcommands -----------------------------------------------------------

void run_simulate(const SimulateFlags& f, bool degrees, std::ostream& out) {
  const double theta = finite_angle(f.theta, degrees, "--theta");
  require_count(f.n);
  const SequencePair pair = sample_singlet_pairs(theta, f.n, Seed{f.seed});
  if (!f.out.empty()) {
    write_file(f.out, [&](std::ostream& s) { write_pair_csv(s, pair); });
  }
  const double emp = empirical_correlation(pair.a, pair.b);
  const double expected = twisted_malus(theta);
  Json config{{"theta", theta}, {"degrees", degrees}, {"n", f.n},
              {"seed", f.seed}, {"out", path_or_null(f.out)}};
  Json result{{"empirical_correlation", emp},
              {"expected_correlation", expected},
              {"abs_error", std::abs(emp - expected)}};
  emit_report(out, envelope("simulate", std::move(config), std::move(result)), "");
}

void run_lhv(const LhvFlags& f, bool degrees, std::ostream& out) {
  const double ta = finite_angle(f.theta_a, degrees, "--theta-a");
  const double tb = finite_angle(f.theta_b, degrees, "--theta-b");
  require_count(f.n);
  const SequencePair pair = sample_lhv_pairs(ta, tb, f.n, Seed{f.seed});
  if (!f.out.empty()) {
    write_file(f.out, [&](std::ostream& s) { write_pair_csv(s, pair); });
  }
  const double emp = empirical_correlation(pair.a, pair.b);
  const double expected = lhv_expected_correlation(ta, tb);
  Json config{{"theta_a", ta}, {"theta_b", tb}, {"degrees", degrees},
              {"n", f.n},      {"seed", f.seed}, {"out", path_or_null(f.out)}};
  Json result{{"empirical_correlation", emp},
              {"expected_correlation", expected},
              {"quantum_correlation", twisted_malus(ta - tb)},
              {"abs_error", std::abs(emp - expected)}};
  emit_report(out, envelope("lhv", std::move(config), std::move(result)), "");
}

void run_octet(const OctetFlags& f, bool degrees, std::ostream& out) {
  const AngleTriple theta = resolve_triple(f.theta, degrees);
  require_count(f.n);
  const Interval band = feasible_band(theta);
  const double target_f = f.f.value_or(band.midpoint());
  require_correlation(target_f, "--f");

  const double c1 = twisted_malus(theta.theta1());
  const double c2 = twisted_malus(theta.theta2());
  const double c3 = twisted_malus(theta.theta3());
  const JointDistribution4 dist = feasible_distribution(c1, c2, c3, target_f);
  const OctetSequences oct = sample_octet(dist, f.n, Seed{f.seed});
  if (!f.out.empty()) {
    write_file(f.out, [&](std::ostream& s) { write_octet_csv(s, oct); });
  }

  const CorrelationVector target{c1, c2, c3, target_f};
  const CorrelationVector emp{empirical_correlation(oct.a_oo(), oct.b_oo()),
                              empirical_correlation(oct.a_bo(), oct.b_oo()),
                              empirical_correlation(oct.a_oo(), oct.b_ob()),
                              empirical_correlation(oct.a_bo(), oct.b_ob())};
  const double max_err = std::max({std::abs(emp.c1 - target.c1), std::abs(emp.c2 - target.c2),
                                   std::abs(emp.c3 - target.c3), std::abs(emp.c4 - target.c4)});
  const BooleResult boole = boole_check(oct.a_oo(), oct.b_oo(), oct.a_bo(), oct.b_ob());

  Json config = triple_json(theta);
  config["degrees"] = degrees;
  config["f"] = target_f;
  config["f_source"] = f.f ? "flag" : "band-midpoint";
  config["n"] = f.n;
  config["seed"] = f.seed;
  config["out"] = path_or_null(f.out);
  Json result{{"band", {{"lo", band.lo()}, {"hi", band.hi()}}},
              {"target_correlations", correlation_vector_json(target)},
              {"empirical_correlations", correlation_vector_json(emp)},
              {"max_abs_error", max_err},
              {"boole", {{"lhs1", boole.lhs1}, {"lhs2", boole.lhs2}, {"holds", boole.holds}}}};
  emit_report(out, envelope("octet", std::move(config), std::move(result)), "");
}

void run_boole(const std::string& path, std::ostream& out) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot read sequence file '" + path + "'");
  }
  const NamedSequences seqs = read_sequences_csv(in);
  if (seqs.columns.size() != 4) {
    throw FormatError("boole: expected 4 columns (u, x, v, y), found " +
                      std::to_string(seqs.columns.size()));
  }
  const auto& u = seqs.columns[0];
  const auto& x = seqs.columns[1];
  const auto& v = seqs.columns[2];
  const auto& y = seqs.columns[3];
  const BooleResult r = boole_check(u, x, v, y);
  Json config{{"in", path}, {"columns", seqs.names}};
  Json result{{"n", u.size()},
              {"correlations",
               {{"ux", empirical_correlation(u, x)},
                {"vx", empirical_correlation(v, x)},
                {"uy", empirical_correlation(u, y)},
                {"vy", empirical_correlation(v, y)}}},
              {"lhs1", r.lhs1},
              {"lhs2", r.lhs2},
              {"holds", r.holds}};
  emit_report(out, envelope("boole", std::move(config), std::move(result)), "");
}

void run_chsh(const ChshFlags& f, bool degrees, bool theta_given,
              std::ostream& out) {
  const bool direct = f.c1 || f.c2 || f.c3 || f.c4;
  CorrelationVector c;
  Json config;
  if (direct) {
    if (!(f.c1 && f.c2 && f.c3 && f.c4)) {
      throw UsageError("--c1 .. --c4 must be given together");
    }
    if (theta_given) {
      throw UsageError("give either --c1 .. --c4 or angles, not both");
    }
    c = CorrelationVector{*f.c1, *f.c2, *f.c3, *f.c4};
    require_correlation(c.c1, "--c1");
    require_correlation(c.c2, "--c2");
    require_correlation(c.c3, "--c3");
    require_correlation(c.c4, "--c4");
    config = Json{{"mode", "correlations"}};
  } else {
    const AngleTriple theta = resolve_triple(f.theta, degrees);
    const F4Candidate candidate = resolve_candidate(f.candidate);
    c = correlations_from_angles(theta, candidate);
    config = triple_json(theta);
    config["mode"] = "angles";
    config["degrees"] = degrees;
    config.update(candidate_config(f.candidate));
  }
  const double value = chsh_value(c);
  const bool member = polytope_member(c);
  Json result{{"correlations", correlation_vector_json(c)},
              {"chsh_value", value},
              {"polytope_member", member},
              {"violated", !member}};
  emit_report(out, envelope("chsh", std::move(config), std::move(result)), "");
}

void run_band(const TripleFlags& f, bool degrees, std::ostream& out) {
  const AngleTriple theta = resolve_triple(f, degrees);
  const Interval band = feasible_band(theta);
  Json config = triple_json(theta);
  config["degrees"] = degrees;
  Json result{{"lo", band.lo()}, {"hi", band.hi()}, {"width", band.width()}};
  emit_report(out, envelope("band", std::move(config), std::move(result)), "");
}

void run_band_map(int resolution, const std::string& path, std::ostream& out,
                  std::ostream& err) {
  if (resolution < 2) {
    throw UsageError("--resolution must be at least 2");
  }
  const auto rows = band_map(resolution);
  std::size_t argmax = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].band.width() > rows[argmax].band.width()) {
      argmax = i;
    }
  }
  Json config{{"resolution", resolution}, {"out", path_or_null(path)}};
  Json result{{"rows", rows.size()},
              {"max_width", rows[argmax].band.width()},
              {"max_width_at", triple_json(rows[argmax].theta)}};
  const Json doc = envelope("band-map", std::move(config), std::move(result));
  if (path.empty()) {
    // CSV owns stdout; the run summary goes to the diagnostic stream.
    write_band_map_csv(out, rows);
    err << to_report_text(doc);
  } else {
    write_file(path, [&](std::ostream& s) { write_band_map_csv(s, rows); });
    out << to_report_text(doc);
  }
}

void run_lp_band(const LpFlags& f, std::ostream& out) {
  require_correlation(f.c1, "--c1");
  require_correlation(f.c2, "--c2");
  require_correlation(f.c3, "--c3");
  const auto lp = lp_band(f.c1, f.c2, f.c3);
  Json config{{"c1", f.c1}, {"c2", f.c2}, {"c3", f.c3}};
  Json result;
  if (!lp) {
    result = Json{{"feasible", false}};
  } else {
    result = Json{{"feasible", true},
                  {"min", lp->min_value},
                  {"max", lp->max_value},
                  {"witness_min", distribution_json(lp->witness_min)},
                  {"witness_max", distribution_json(lp->witness_max)}};
  }
  emit_report(out, envelope("lp-band", std::move(config), std::move(result)), "");
}

Json fit_json(const QuadraticFit& fit) {
  return Json{{"c0", fit.c0},
              {"c_lin", Json::array({fit.c_lin[0], fit.c_lin[1], fit.c_lin[2]})},
              {"c_quad",
               {{"c11", fit.quad(0, 0)}, {"c12", fit.quad(0, 1)}, {"c13", fit.quad(0, 2)},
                {"c22", fit.quad(1, 1)}, {"c23", fit.quad(1, 2)}, {"c33", fit.quad(2, 2)}}},
              {"residual", fit.residual}};
}

void run_analyze(const AnalyzeFlags& f, std::ostream& out) {
  if (!(f.radius > 0.0 && f.radius <= 0.3)) {
    throw UsageError("--radius must lie in (0, 0.3]");
  }
  if (f.samples < 10) {
    throw UsageError("--samples must be at least 10");
  }
  if (!(f.jump_step > 0.0 && f.jump_step <= 0.1)) {
    throw UsageError("--jump-step must lie in (0, 0.1]");
  }
  if (f.directions < 8) {
    throw UsageError("--directions must be at least 8");
  }
  const F4Candidate candidate = resolve_candidate(f.candidate);
  AnalysisTolerances tol;
  tol.fit_radius = f.radius;
  tol.fit_samples = f.samples;
  tol.seed = Seed{f.seed};
  tol.jump_step = f.jump_step;
  tol.jump_directions = f.directions;
  const AnalysisReport rep = contradiction_report(candidate, tol);

  Json config = candidate_config(f.candidate);
  config["radius"] = tol.fit_radius;
  config["samples"] = tol.fit_samples;
  config["seed"] = f.seed;
  config["jump_step"] = tol.jump_step;
  config["directions"] = tol.jump_directions;
  config["gradient_step"] = tol.gradient_step;
  config["axis_point"] = tol.axis_point;
  config["coefficient_tolerance"] = tol.coefficient_tolerance;
  config["residual_threshold"] = tol.residual_threshold;
  config["jump_tolerance"] = tol.jump_tolerance;
  config["probe_x"] = tol.probe_x;
  config["probe_k"] = tol.probe_k;
  config["out"] = path_or_null(f.out);

  const auto& g = rep.gradient_at_origin;
  const auto& a = rep.axis_residuals;
  Json result{
      {"candidate", rep.candidate},
      {"value_at_origin", rep.value_at_origin},
      {"gradient_at_origin", Json::array({g[0], g[1], g[2]})},
      {"axis_residuals", Json::array({a[0], a[1], a[2]})},
      {"second_quotient_bound", rep.second_quotient_bound},
      {"fit", fit_json(rep.fit)},
      {"diagonal_sum", rep.diagonal_sum},
      {"axis_forced_sum", rep.axis_forced_sum},
      {"cross_term_max", rep.cross_term_max},
      {"cross_probe",
       {{"max_slack", rep.cross_probe.max_slack},
        {"admissible", Json::array({rep.cross_probe.admissible_lo,
                                    rep.cross_probe.admissible_hi})}}},
      {"axis_sum_consistent", rep.axis_sum_consistent},
      {"cross_terms_admissible", rep.cross_terms_admissible},
      {"diagonal_violated", rep.diagonal_violated},
      {"contradiction", rep.contradiction},
      {"jump_spread", rep.jump_spread},
      {"jump_detected", rep.jump_detected},
      {"disclaimer", rep.disclaimer ? Json(*rep.disclaimer) : Json(nullptr)}};
  emit_report(out, envelope("analyze", std::move(config), std::move(result)), f.out);
}

void run_scan(const ScanFlags& f, std::ostream& out) {
  if (f.resolution < 2) {
    throw UsageError("--resolution must be at least 2");
  }
  if (f.limit < 0) {
    throw UsageError("--limit must be nonnegative");
  }
  const F4Candidate candidate = resolve_candidate(f.candidate);
  const auto violations = inequality_scan(candidate, f.resolution);
  std::size_t band_count = 0;
  std::size_t diagonal_count = 0;
  Json listed = Json::array();
  for (const auto& v : violations) {
    (v.kind == ViolationKind::band ? band_count : diagonal_count) += 1;
    if (f.limit == 0 || listed.size() < static_cast<std::size_t>(f.limit)) {
      Json item = triple_json(v.theta);
      item["kind"] = v.kind == ViolationKind::band ? "band" : "diagonal";
      item["value"] = v.value;
      item["lo"] = v.lo;
      item["hi"] = v.hi;
      listed.push_back(std::move(item));
    }
  }
  Json config = candidate_config(f.candidate);
  config["resolution"] = f.resolution;
  config["limit"] = f.limit;
  config["out"] = path_or_null(f.out);
  Json result{{"band_violations", band_count},
              {"diagonal_violations", diagonal_count},
              {"total", violations.size()},
              {"listed", listed.size()},
              {"violations", std::move(listed)}};
  emit_report(out, envelope("scan", std::move(config), std::move(result)), f.out);
}

void add_triple_options(CLI::App* cmd, TripleFlags& f, bool required) {
  auto* o1 = cmd->add_option("--theta1", f.theta1, "theta_ab, in [0, pi]");
  auto* o2 = cmd->add_option("--theta2", f.theta2, "theta_a'b, in [0, pi]");
  auto* o3 = cmd->add_option("--theta3", f.theta3, "theta_ab', in [0, pi]");
  if (required) {
    o1->required();
    o2->required();
    o3->required();
  }
}

void add_candidate_options(CLI::App* cmd, CandidateFlags& f) {
  cmd->add_option("--candidate", f.candidate, "Builtin candidate for F4")
      ->check(CLI::IsMember({"locality", "product", "product-diagonal", "grid"}))
      ->capture_default_str();
  cmd->add_option("--grid", f.grid, "Grid candidate file (JSON)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Numerical toolkit for CHSH constraints on EPRB correlations",
               "chshkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  bool degrees = false;
  app.add_flag("--degrees", degrees, "Read angle flags in degrees");

  SimulateFlags sim_f;
  auto* sim = app.add_subcommand("simulate", "Sample singlet pairs");
  sim->add_option("--theta", sim_f.theta, "Relative detector angle")->required();
  sim->add_option("--n", sim_f.n, "Number of pairs")->capture_default_str();
  sim->add_option("--seed", sim_f.seed, "64-bit seed")->capture_default_str();
  sim->add_option("--out", sim_f.out, "Sequence CSV path");

  LhvFlags lhv_f;
  auto* lhv = app.add_subcommand("lhv", "Sample the local hidden-variable model");
  lhv->add_option("--theta-a", lhv_f.theta_a, "Alice's setting")->required();
  lhv->add_option("--theta-b", lhv_f.theta_b, "Bob's setting")->required();
  lhv->add_option("--n", lhv_f.n, "Number of pairs")->capture_default_str();
  lhv->add_option("--seed", lhv_f.seed, "64-bit seed")->capture_default_str();
  lhv->add_option("--out", lhv_f.out, "Sequence CSV path");

  OctetFlags oct_f;
  auto* oct = app.add_subcommand("octet", "Sample the four CHSH sequences");
  add_triple_options(oct, oct_f.theta, true);
  oct->add_option("--f", oct_f.f, "Target <a_bo,b_ob> (default: band midpoint)");
  oct->add_option("--n", oct_f.n, "Number of trials")->capture_default_str();
  oct->add_option("--seed", oct_f.seed, "64-bit seed")->capture_default_str();
  oct->add_option("--out", oct_f.out, "Sequence CSV path");

  std::string boole_in;
  auto* boole = app.add_subcommand("boole", "Check Boole's inequalities on a 4-column CSV");
  boole->add_option("--in", boole_in, "Sequence CSV with columns u,x,v,y")->required();

  ChshFlags chsh_f;
  auto* chsh = app.add_subcommand("chsh", "CHSH value of a correlation vector");
  add_triple_options(chsh, chsh_f.theta, false);
  add_candidate_options(chsh, chsh_f.candidate);
  chsh->add_option("--c1", chsh_f.c1, "<a_oo,b_oo>");
  chsh->add_option("--c2", chsh_f.c2, "<a_bo,b_oo>");
  chsh->add_option("--c3", chsh_f.c3, "<a_oo,b_ob>");
  chsh->add_option("--c4", chsh_f.c4, "<a_bo,b_ob>");

  TripleFlags band_f;
  auto* band = app.add_subcommand("band", "Feasible band of F4 at one angle triple");
  add_triple_options(band, band_f, true);

  int map_resolution = 25;
  std::string map_out;
  auto* map = app.add_subcommand("band-map", "Feasible band on a uniform grid (CSV)");
  map->add_option("--resolution", map_resolution, "Nodes per axis")->capture_default_str();
  map->add_option("--out", map_out, "CSV path (default: stdout)");

  LpFlags lp_f;
  auto* lp = app.add_subcommand("lp-band", "LP extremes of <a_bo,b_ob>");
  lp->add_option("--c1", lp_f.c1, "<a_oo,b_oo>")->required();
  lp->add_option("--c2", lp_f.c2, "<a_bo,b_oo>")->required();
  lp->add_option("--c3", lp_f.c3, "<a_oo,b_ob>")->required();

  AnalyzeFlags an_f;
  auto* analyze = app.add_subcommand("analyze", "Differentiability report for a candidate");
  add_candidate_options(analyze, an_f.candidate);
  analyze->add_option("--radius", an_f.radius, "Fit radius")->capture_default_str();
  analyze->add_option("--samples", an_f.samples, "Fit samples")->capture_default_str();
  analyze->add_option("--seed", an_f.seed, "64-bit seed")->capture_default_str();
  analyze->add_option("--jump-step", an_f.jump_step, "Step for the jump probe")
      ->capture_default_str();
  analyze->add_option("--directions", an_f.directions, "Directions for the jump probe")
      ->capture_default_str();
  analyze->add_option("--out", an_f.out, "Also write the report here");

  ScanFlags scan_f;
  auto* scan = app.add_subcommand("scan", "Grid scan for band and diagonal violations");
  add_candidate_options(scan, scan_f.candidate);
  scan->add_option("--resolution", scan_f.resolution, "Nodes per axis")->capture_default_str();
  scan->add_option("--limit", scan_f.limit, "Violations to list (0 = all)")
      ->capture_default_str();
  scan->add_option("--out", scan_f.out, "Also write the report here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sim->parsed()) {
      run_simulate(sim_f, degrees, out);
    } else if (lhv->parsed()) {
      run_lhv(lhv_f, degrees, out);
    } else if (oct->parsed()) {
      run_octet(oct_f, degrees, out);
    } else if (boole->parsed()) {
      run_boole(boole_in, out);
    } else if (chsh->parsed()) {
      const bool theta_given = chsh->count("--theta1") + chsh->count("--theta2") +
                                   chsh->count("--theta3") > 0;
      if (!theta_given && !(chsh_f.c1 || chsh_f.c2 || chsh_f.c3 || chsh_f.c4)) {
        throw UsageError("chsh needs --theta1 --theta2 --theta3 or --c1 .. --c4");
      }
      if (theta_given && chsh->count("--theta1") * chsh->count("--theta2") *
                                 chsh->count("--theta3") == 0) {
        throw UsageError("--theta1, --theta2 and --theta3 must be given together");
      }
      run_chsh(chsh_f, degrees, theta_given, out);
    } else if (band->parsed()) {
      run_band(band_f, degrees, out);
    } else if (map->parsed()) {
      run_band_map(map_resolution, map_out, out, err);
    } else if (lp->parsed()) {
      run_lp_band(lp_f, out);
    } else if (analyze->parsed()) {
      run_analyze(an_f, out);
    } else if (scan->parsed()) {
      run_scan(scan_f, out);
    }
  } catch (const UsageError& e) {
    err << "chshkit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "chshkit: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace chshkit::cli
