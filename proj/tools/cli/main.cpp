#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "cookie/chain.hpp"
#include "cookie/errors.hpp"
#include "cookie/gf.hpp"
#include "cookie/kernel.hpp"
#include "cookie/walk.hpp"
#include "cookie_suite/suite.hpp"
#include "output.hpp"
#include "run_config.hpp"

using nlohmann::json;

namespace cookie::cli {

namespace {

void announce_seed(const RunConfig& c) {
  if (!c.seed_given) {
    std::cerr << "cookiewalk: no --seed given, using default seed 0xC00C1E\n";
  }
}

SolverConfig solver_config(const RunConfig& c) {
  SolverConfig s;
  s.cap = c.cap;
  s.tol = c.tol;
  return s;
}

WalkOptions walk_options(const RunConfig& c) {
  WalkOptions o;
  o.step_cap = c.step_cap;
  o.threads = c.threads;
  return o;
}

// Flattens a JSON object into key,value CSV rows (nested keys joined by '.').
void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else {
    out << prefix << ',' << (j.is_string() ? "\"" + j.get<std::string>() + "\"" : j.dump()) << '\n';
  }
}

void emit_summary(const RunConfig& c, const json& result) {
  Sink sink(c.output);
  if (c.format == Format::Json) {
    write_json(sink.stream(), c, result);
  } else {
    write_csv_header(sink.stream(), c);
    sink.stream() << "key,value\n";
    flatten(result, "", sink.stream());
  }
}

int run_analyze(const RunConfig& c) {
  const CookieEnv env = c.environment();
  const SolverConfig sc = solver_config(c);
  json errors = json::array();
  SpeedReport report;
  report.alpha = alpha(env);
  report.label = classify(env, sc.critical_band);
  json extra;
  std::optional<StationarySolve> solve;
  try {
    if (report.alpha > 0.0 || !z_unbounded_condition(env)) solve = stationary_distribution(env, sc);
  } catch (const Error& e) {
    errors.push_back(std::string("stationary solve: ") + e.what());
  }
  try {
    const SpeedReport a = speed_route_a(env, sc, solve ? &*solve : nullptr);
    report.v_route_a = a.v_route_a;
    report.e_z_inf = a.e_z_inf;
    report.warnings = a.warnings;
  } catch (const Error& e) {
    errors.push_back(std::string("route A: ") + e.what());
  }
  if (solve) {
    report.g0 = solve->pi.at(0);
    try {
      const AbPair ab = build_ab(env, *solve);
      const TaylorAt1 t = derivatives_at_1(ab);
      report.b2_at_1 = t.b2;
      extra["taylor_at_1"] = {{"a1", t.a1}, {"a2", t.a2}, {"b0", t.b0}, {"b1", t.b1}, {"b2", t.b2}};
      extra["functional_equation_residual"] = functional_equation_residual(ab, *solve, parse_grid(c.grid));
      if (report.alpha > 1.0) report.v_route_b = speed_route_b(env, *solve);
      if (env.cookies() == 2 && report.alpha > 0.0) extra["g0_explicit"] = solve_g0_m2(env);
    } catch (const Error& e) {
      errors.push_back(std::string("generating functions: ") + e.what());
    }
    extra["stationary"] = {{"cap", c.cap}, {"residual", solve->pi.residual}, {"tv_gap", solve->tv_gap},
                           {"trusted_cap", solve->trusted_cap}, {"bounded", solve->bounded}};
    if (solve->tail_fit) extra["stationary"]["fitted_exponent"] = solve->tail_fit->exponent;
    try {
      const TailExponent te = tail_exponent(*solve, std::max<std::size_t>(c.cap / 16, 1), c.cap / 4);
      extra["tail_exponent"] = {{"exponent", te.exponent}, {"r2", te.r2}, {"log_model", te.log_model},
                                {"window", {te.window_lo, te.window_hi}}};
    } catch (const Error& e) {
      errors.push_back(std::string("tail exponent: ") + e.what());
    }
  }
  if (c.mc) {
    announce_seed(c);
    try {
      report.v_mc = estimate_speed_mc(env, c.mc_level, c.mc_reps, c.seed, walk_options(c));
    } catch (const Error& e) {
      errors.push_back(std::string("monte carlo: ") + e.what());
    }
  }
  json result = to_json(report);
  result["environment"] = {{"m", env.cookies()}, {"p", std::vector<double>(env.strengths().begin(), env.strengths().end())}};
  result["diagnostics"] = extra;
  result["errors"] = errors;
  emit_summary(c, result);
  return report.v_route_a ? 0 : 1;
}

int run_simulate_walk(const RunConfig& c) {
  const CookieEnv env = c.environment();
  announce_seed(c);
  const WalkOptions opts = walk_options(c);
  Sink sink(c.output);
  std::vector<json> rows;
  std::vector<double> speeds;
  std::size_t capped = 0;
  if (c.format == Format::Csv) {
    write_csv_header(sink.stream(), c);
    sink.stream() << "rep,T_n,U0,K_n,returns,hit_minus_one,step_cap_exceeded\n";
  }
  for (std::size_t r = 0; r < c.reps; ++r) {
    SplitMix64 rng = SplitMix64::for_stream(c.seed, r);
    try {
      const WalkRecord rec = simulate_to_level(env, c.level, rng, opts);
      speeds.push_back(static_cast<double>(c.level) / static_cast<double>(std::max<std::uint64_t>(rec.hitting_time, 1)));
      if (c.format == Format::Csv) {
        sink.stream() << r << ',' << rec.hitting_time << ',' << rec.left_jumps[0] << ',' << rec.negative_time
                      << ',' << rec.returns_to_origin << ',' << (rec.hit_minus_one ? 1 : 0) << ",0\n";
      } else {
        rows.push_back({{"rep", r}, {"T_n", rec.hitting_time}, {"U0", rec.left_jumps[0]},
                        {"K_n", rec.negative_time}, {"returns", rec.returns_to_origin},
                        {"hit_minus_one", rec.hit_minus_one}, {"step_cap_exceeded", false}});
      }
    } catch (const StepCapExceeded&) {
      ++capped;
      if (c.format == Format::Csv) {
        sink.stream() << r << ",,,,,,1\n";
      } else {
        rows.push_back({{"rep", r}, {"step_cap_exceeded", true}});
      }
    }
  }
  if (c.format == Format::Json) {
    const McEstimate est = summarize(speeds, c.seed);
    json result{{"level", c.level}, {"reps", c.reps}, {"step_cap", c.step_cap},
                {"step_cap_exceeded", capped}, {"speed", to_json(est)}, {"records", rows}};
    write_json(sink.stream(), c, result);
  }
  return 0;
}

int run_simulate_chain(const RunConfig& c) {
  const CookieEnv env = c.environment();
  announce_seed(c);
  const auto path = simulate_chain(env, c.steps, c.seed, c.z0);
  Sink sink(c.output);
  if (c.format == Format::Csv) {
    write_csv_header(sink.stream(), c);
    sink.stream() << "step,state\n";
    for (std::size_t t = 0; t < path.size(); ++t) sink.stream() << t << ',' << path[t] << '\n';
  } else {
    double mean = 0.0;
    for (auto z : path) mean += static_cast<double>(z);
    mean /= static_cast<double>(path.size());
    write_json(sink.stream(), c, {{"steps", c.steps}, {"z0", c.z0}, {"mean_state", mean}, {"trajectory", path}});
  }
  return 0;
}

int run_chain_stationary(const RunConfig& c) {
  const CookieEnv env = c.environment();
  const StationarySolve s = stationary_distribution(env, solver_config(c));
  Sink sink(c.output);
  const auto [e, partial] = expected_z_inf(s);
  json diag{{"alpha", s.alpha}, {"cap", c.cap}, {"iterations", s.iterations}, {"tv_gap", s.tv_gap},
            {"residual", s.pi.residual}, {"trusted_cap", s.trusted_cap}, {"bounded", s.bounded},
            {"e_z_inf", number_or_inf(e)}, {"e_z_inf_partial", partial}};
  if (s.tail_fit) {
    diag["tail_fit"] = {{"exponent", s.tail_fit->exponent}, {"c", s.tail_fit->c},
                        {"rms", s.tail_fit->model.rms}, {"log_terms", s.tail_fit->model.has_log_terms()}};
  }
  if (c.format == Format::Csv) {
    write_csv_header(sink.stream(), c);
    sink.stream() << "# diagnostics: " << diag.dump() << '\n';
    sink.stream() << "state,prob\n";
    sink.stream().precision(17);
    for (std::size_t k = 0; k < s.pi.atoms.size(); ++k) sink.stream() << k << ',' << s.pi.atoms[k] << '\n';
  } else {
    diag["atoms_head"] = std::vector<double>(s.pi.atoms.begin(),
                                             s.pi.atoms.begin() + std::min<std::ptrdiff_t>(32, static_cast<std::ptrdiff_t>(s.pi.atoms.size())));
    write_json(sink.stream(), c, diag);
  }
  return 0;
}

int run_kernel(const RunConfig& c) {
  const CookieEnv env = c.environment();
  Sink sink(c.output);
  sink.stream().precision(17);
  if (c.pgf) {
    const PgfClosedForm form = a_pgf_form(env, c.j);
    if (c.format == Format::Csv) {
      write_csv_header(sink.stream(), c);
      sink.stream() << "coef,f,r\n";
      for (const auto& t : form.terms) sink.stream() << t.coef << ',' << t.s_power << ',' << t.nb_order << '\n';
    } else {
      json terms = json::array();
      for (const auto& t : form.terms) terms.push_back({{"coef", t.coef}, {"f", t.s_power}, {"r", t.nb_order}});
      write_json(sink.stream(), c, {{"j", c.j}, {"terms", terms}, {"derivatives_at_1", a_pgf_derivatives_at_1(form, 4)}});
    }
    return 0;
  }
  const DistTable t = a_distribution(env, c.j, c.kernel_cap);
  if (c.format == Format::Csv) {
    write_csv_header(sink.stream(), c);
    sink.stream() << "# residual: " << t.residual << (t.truncated ? " (cap too small)" : "") << '\n';
    sink.stream() << "index,prob\n";
    for (std::size_t i = 0; i < t.atoms.size(); ++i) sink.stream() << i << ',' << t.atoms[i] << '\n';
  } else {
    write_json(sink.stream(), c, {{"j", c.j}, {"cap", c.kernel_cap}, {"residual", t.residual},
                                  {"cap_too_small", t.truncated}, {"mean", t.mean()}, {"atoms", t.atoms}});
  }
  return 0;
}

int run_gf_residual(const RunConfig& c) {
  const CookieEnv env = c.environment();
  const StationarySolve s = stationary_distribution(env, solver_config(c));
  const AbPair ab = build_ab(env, s);
  const auto grid = parse_grid(c.grid);
  Sink sink(c.output);
  sink.stream().precision(17);
  if (c.format == Format::Csv) {
    write_csv_header(sink.stream(), c);
    sink.stream() << "s,lhs,rhs,residual\n";
    for (double x : grid) {
      const double lhs = 1.0 - g_eval(s, 1.0 / (2.0 - x));
      const double rhs = ab.a(x) * (1.0 - g_eval(s, x)) + ab.b(x);
      sink.stream() << x << ',' << lhs << ',' << rhs << ',' << std::abs(lhs - rhs) << '\n';
    }
  } else {
    write_json(sink.stream(), c, {{"grid", grid}, {"max_residual", functional_equation_residual(ab, s, grid)},
                                  {"atoms_used", ab.atoms_used}});
  }
  return 0;
}

int run_gf_speed(const RunConfig& c) {
  const CookieEnv env = c.environment();
  const SolverConfig sc = solver_config(c);
  SpeedReport report;
  std::optional<StationarySolve> solve;
  if (alpha(env) > 0.0 || !z_unbounded_condition(env)) solve = stationary_distribution(env, sc);
  report = speed_route_a(env, sc, solve ? &*solve : nullptr);
  if (solve) {
    const TaylorAt1 t = derivatives_at_1(build_ab(env, *solve));
    report.b2_at_1 = t.b2;
    report.g0 = solve->pi.at(0);
    if (alpha(env) > 1.0) report.v_route_b = speed_route_b(env, *solve);
  }
  emit_summary(c, to_json(report));
  return report.v_route_a ? 0 : 1;
}

int run_gf_g0(const RunConfig& c) {
  const CookieEnv env = c.environment();
  const double g0 = solve_g0_m2(env);
  json result{{"g0", g0}};
  const StationarySolve s = stationary_distribution(env, solver_config(c));
  result["stationary_pi0"] = s.pi.at(0);
  result["difference"] = g0 - s.pi.at(0);
  emit_summary(c, result);
  return 0;
}

int run_scan(const RunConfig& c) {
  const long long m = c.m > 0 ? c.m : 3;
  SolverConfig sc = solver_config(c);
  sc.cap = c.scan_cap;
  const auto grid = critical_grid(m, c.from, c.to, c.step, c.halvings);
  const ScanResult scan = critical_scan(m, grid, c.step, sc);
  Sink sink(c.output);
  sink.stream().precision(12);
  if (c.format == Format::Csv) {
    write_csv_header(sink.stream(), c);
    sink.stream() << "p,alpha,phase,v,ratio,b2,refinement,error\n";
    auto& out = sink.stream();
    auto optional_cell = [&out](const std::optional<double>& v) {
      if (v) out << *v;
      out << ',';
    };
    for (const auto& r : scan.rows) {
      out << r.p << ',' << r.alpha << ',' << to_string(r.phase) << ',' << r.v << ',';
      optional_cell(r.ratio);
      optional_cell(r.b2);
      out << r.refinement << ",\"" << r.error << "\"\n";
    }
  } else {
    json rows = json::array();
    for (const auto& r : scan.rows) {
      rows.push_back({{"p", r.p}, {"alpha", r.alpha}, {"phase", std::string(to_string(r.phase))}, {"v", r.v},
                      {"ratio", r.ratio ? json(*r.ratio) : json(nullptr)},
                      {"b2", r.b2 ? json(*r.b2) : json(nullptr)}, {"refinement", r.refinement},
                      {"error", r.error}});
    }
    write_json(sink.stream(), c, {{"m", m}, {"rows", rows}, {"max_jump", scan.max_jump},
                                  {"max_ratio", scan.max_ratio}, {"monotone", scan.monotone},
                                  {"finest_ratio", scan.finest_ratio ? json(*scan.finest_ratio) : json(nullptr)},
                                  {"next_ratio", scan.next_ratio ? json(*scan.next_ratio) : json(nullptr)}});
  }
  return 0;
}

int run_suite_command(const RunConfig& c) {
  announce_seed(c);
  suite::SuiteConfig sc;
  sc.seed = c.seed;
  sc.cap = c.cap;
  sc.scan_cap = c.scan_cap;
  sc.reps_scale = c.reps_scale;
  sc.threads = c.threads;
  sc.artifact_dir = c.out_dir;
  if (!c.only.empty()) {
    for (double v : parse_strength_list(c.only)) sc.only.push_back(static_cast<int>(v));
  }
  const auto results = suite::run_suite(sc, [](const suite::CriterionResult& r) {
    std::cout << "[" << suite::to_string(r.status) << "] criterion " << r.id << ": " << r.title << " -- "
              << r.detail << '\n';
    for (const auto& n : r.notes) std::cout << "    " << n << '\n';
    std::cout.flush();
  });
  std::filesystem::create_directories(c.out_dir);
  std::ofstream csv(std::filesystem::path(c.out_dir) / "summary.csv");
  write_csv_header(csv, c);
  csv << "criterion,status,seconds,title,detail\n";
  json rows = json::array();
  for (const auto& r : results) {
    csv << r.id << ',' << suite::to_string(r.status) << ',' << r.seconds << ",\"" << r.title << "\",\"" << r.detail << "\"\n";
    rows.push_back({{"criterion", r.id}, {"status", std::string(suite::to_string(r.status))}, {"title", r.title},
                    {"detail", r.detail}, {"notes", r.notes}, {"seconds", r.seconds}});
  }
  std::ofstream js(std::filesystem::path(c.out_dir) / "summary.json");
  write_json(js, c, {{"criteria", rows}, {"all_passed", suite::all_passed(results)}});
  return suite::all_passed(results) ? 0 : 1;
}

std::string find_config_path(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--config") == 0 && i + 1 < argc) return argv[i + 1];
    if (std::strncmp(argv[i], "--config=", 9) == 0) return argv[i] + 9;
  }
  return {};
}

void add_env(CLI::App* sub, RunConfig& c) {
  sub->add_option("--m", c.m, "Cookies per site M (defaults to the length of --p)")->capture_default_str();
  sub->add_option("--p", c.p, "Cookie strengths, comma separated, e.g. 0.9,0.9,0.9");
}

void add_seed(CLI::App* sub, RunConfig& c) {
  sub->add_option_function<std::string>("--seed", [&c](const std::string& v) {
    c.seed = std::stoull(v, nullptr, 0);
    c.seed_given = true;
  }, "64-bit seed, decimal or 0x-hex (default 0xC00C1E)");
}

void add_output(CLI::App* sub, RunConfig& c, Format default_format) {
  sub->add_option("--format", c.format_text, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->default_str(to_string(default_format));
  sub->add_option("--output,-o", c.output, "Output file (default stdout)");
  sub->add_flag("--stamp", c.stamp, "Add a UTC timestamp to the output header");
}

void add_solver(CLI::App* sub, RunConfig& c) {
  sub->add_option("--cap", c.cap, "Truncation cap of the stationary solve")->capture_default_str();
  sub->add_option("--tol", c.tol, "Solver tolerance")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig c;
  try {
    const std::string config_path = find_config_path(argc, argv);
    if (!config_path.empty()) apply_config_map(c, read_key_value_file(config_path));
  } catch (const std::exception& e) {
    std::cerr << "cookiewalk: " << e.what() << '\n';
    return 2;
  }
  // Values from --config are in place before parsing, so explicit flags
  // override them.

  CLI::App app{"Speed of one-dimensional multi-excited (cookie) random walks"};
  app.require_subcommand(1);
  app.add_option("--config", "Flat key=value file; keys are long option names without dashes");
  app.set_version_flag("--version", COOKIE_VERSION);
  app.get_formatter()->column_width(34);

  auto* analyze = app.add_subcommand("analyze", "Phase, speed by every route, and diagnostics");
  add_env(analyze, c);
  add_solver(analyze, c);
  add_seed(analyze, c);
  analyze->add_flag("--mc", c.mc, "Also run the Monte Carlo speed estimate");
  analyze->add_option("--mc-level", c.mc_level, "Level n for the Monte Carlo estimate")->capture_default_str();
  analyze->add_option("--mc-reps", c.mc_reps, "Replicates for the Monte Carlo estimate")->capture_default_str();
  analyze->add_option("--grid", c.grid, "s grid for the residual, from:to:step or a list")->capture_default_str();
  analyze->add_option("--threads", c.threads, "Worker threads (0 = all cores)")->capture_default_str();
  add_output(analyze, c, Format::Json);

  auto* walk = app.add_subcommand("simulate-walk", "Simulate walks to a level; one row per replicate");
  add_env(walk, c);
  add_seed(walk, c);
  walk->add_option("--level", c.level, "Target level n")->capture_default_str();
  walk->add_option("--reps", c.reps, "Replicates")->capture_default_str();
  walk->add_option("--cap,--step-cap", c.step_cap, "Step cap per replicate")->capture_default_str();
  add_output(walk, c, Format::Csv);

  auto setup_chain_sim = [&](CLI::App* sub) {
    add_env(sub, c);
    add_seed(sub, c);
    sub->add_option("--steps", c.steps, "Chain steps")->capture_default_str();
    sub->add_option("--z0", c.z0, "Start state")->capture_default_str();
    add_output(sub, c, Format::Csv);
  };
  auto* sim_chain = app.add_subcommand("simulate-chain", "Simulate the migration chain Z");
  setup_chain_sim(sim_chain);

  auto* chain = app.add_subcommand("chain", "Migration chain tools");
  chain->require_subcommand(1);
  auto* chain_stat = chain->add_subcommand("stationary", "Stationary law as CSV (state, prob) or JSON diagnostics");
  add_env(chain_stat, c);
  add_solver(chain_stat, c);
  add_output(chain_stat, c, Format::Csv);
  auto* chain_sim = chain->add_subcommand("simulate", "Same as simulate-chain");
  setup_chain_sim(chain_sim);

  auto* kernel = app.add_subcommand("kernel", "Row j of the kernel, or its p.g.f. terms with --pgf");
  add_env(kernel, c);
  kernel->add_option("--j", c.j, "Row index j")->capture_default_str();
  kernel->add_option("--cap", c.kernel_cap, "Support cap")->capture_default_str();
  kernel->add_flag("--pgf", c.pgf, "Dump p.g.f. terms (coef, f, r) instead of the table");
  add_output(kernel, c, Format::Csv);

  auto* gf = app.add_subcommand("gf", "Generating-function tools");
  gf->require_subcommand(1);
  auto* gf_res = gf->add_subcommand("residual", "Functional-equation residual on an s grid");
  add_env(gf_res, c);
  add_solver(gf_res, c);
  gf_res->add_option("--grid", c.grid, "s grid, from:to:step or a list")->capture_default_str();
  add_output(gf_res, c, Format::Csv);
  auto* gf_speed = gf->add_subcommand("speed", "Speed by routes A and B");
  add_env(gf_speed, c);
  add_solver(gf_speed, c);
  add_output(gf_speed, c, Format::Json);
  auto* gf_g0 = gf->add_subcommand("g0", "Explicit G(0) for M = 2");
  add_env(gf_g0, c);
  add_solver(gf_g0, c);
  add_output(gf_g0, c, Format::Json);

  auto setup_scan = [&](CLI::App* sub) {
    sub->add_option("--m", c.m, "Cookies per site (default 3)")->capture_default_str();
    sub->add_option("--from", c.from, "First p")->capture_default_str();
    sub->add_option("--to", c.to, "Last p")->capture_default_str();
    sub->add_option("--step", c.step, "Grid step")->capture_default_str();
    sub->add_option("--halvings", c.halvings, "Refinement halvings above p_c")->capture_default_str();
    sub->add_option("--cap,--scan-cap", c.scan_cap, "Solver cap per grid point")->capture_default_str();
    add_output(sub, c, Format::Csv);
  };
  auto* gf_scan = gf->add_subcommand("scan", "Speed along uniform environments around p_c");
  setup_scan(gf_scan);
  auto* scan = app.add_subcommand("scan", "Same as gf scan");
  setup_scan(scan);

  auto* suite_cmd = app.add_subcommand("suite", "Run the acceptance criteria and write artifacts");
  add_seed(suite_cmd, c);
  suite_cmd->add_option("--out", c.out_dir, "Artifact directory")->capture_default_str();
  suite_cmd->add_option("--cap", c.cap, "Stationary solve cap")->capture_default_str();
  suite_cmd->add_option("--scan-cap", c.scan_cap, "Cap per critical-scan point")->capture_default_str();
  suite_cmd->add_option("--reps-scale", c.reps_scale, "Multiplier on every replicate count")->capture_default_str();
  suite_cmd->add_option("--only", c.only, "Comma-separated criterion ids");
  suite_cmd->add_option("--threads", c.threads, "Worker threads (0 = all cores)")->capture_default_str();
  suite_cmd->add_flag("--stamp", c.stamp, "Add a UTC timestamp to the output header");

  CLI11_PARSE(app, argc, argv);
  auto use = [&](const char* name, Format fallback) {
    c.command = name;
    c.format = c.format_text.empty() ? fallback : (c.format_text == "csv" ? Format::Csv : Format::Json);
  };

  try {
    if (analyze->parsed()) { use("analyze", Format::Json); return run_analyze(c); }
    if (walk->parsed()) { use("simulate-walk", Format::Csv); return run_simulate_walk(c); }
    if (sim_chain->parsed() || chain_sim->parsed()) { use("simulate-chain", Format::Csv); return run_simulate_chain(c); }
    if (chain_stat->parsed()) { use("chain-stationary", Format::Csv); return run_chain_stationary(c); }
    if (kernel->parsed()) { use("kernel", Format::Csv); return run_kernel(c); }
    if (gf_res->parsed()) { use("gf-residual", Format::Csv); return run_gf_residual(c); }
    if (gf_speed->parsed()) { use("gf-speed", Format::Json); return run_gf_speed(c); }
    if (gf_g0->parsed()) { use("gf-g0", Format::Json); return run_gf_g0(c); }
    if (gf_scan->parsed() || scan->parsed()) { use("scan", Format::Csv); return run_scan(c); }
    if (suite_cmd->parsed()) { use("suite", Format::Csv); return run_suite_command(c); }
  } catch (const std::exception& e) {
    std::cerr << "cookiewalk: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace cookie::cli

int main(int argc, char** argv) { return cookie::cli::main(argc, argv); }
