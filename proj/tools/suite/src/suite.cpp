#include "cookie_suite/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <random>

#include "cookie/chain.hpp"
#include "cookie/errors.hpp"
#include "cookie/gf.hpp"
#include "cookie/kernel.hpp"
#include "cookie/walk.hpp"
#include "cookie_suite/oracles.hpp"

namespace cookie::suite {

namespace {

std::string format(const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  return buf;
}

CriterionResult make_result(int id, std::string title) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  return r;
}

CookieEnv env_of(std::vector<double> p) {
  const auto m = static_cast<long long>(p.size());
  return validate_environment(m, std::move(p));
}

struct Context {
  const SuiteConfig& config;
  std::map<std::string, StationarySolve> solves;

  std::size_t reps(std::size_t nominal) const {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(
                                        static_cast<double>(nominal) * config.reps_scale)));
  }

  WalkOptions walk_options() const {
    WalkOptions o;
    o.threads = config.threads;
    return o;
  }

  const StationarySolve& solve(const CookieEnv& env) {
    const std::string key = env.describe();
    auto it = solves.find(key);
    if (it == solves.end()) {
      SolverConfig sc;
      sc.cap = config.cap;
      it = solves.emplace(key, stationary_distribution(env, sc)).first;
    }
    return it->second;
  }

  bool reduced_cap() const { return config.cap < kReferenceCap; }

  std::ofstream artifact(const std::string& name) const {
    if (config.artifact_dir.empty()) return {};
    std::filesystem::create_directories(config.artifact_dir);
    return std::ofstream(std::filesystem::path(config.artifact_dir) / name);
  }
};

// Tolerances are pinned at the reference cap; below it a cap-dependent
// check is degraded whether or not its numbers happen to pass.
Status cap_status(bool ok, const Context& ctx) {
  if (ctx.reduced_cap()) return Status::Degraded;
  return ok ? Status::Pass : Status::Fail;
}

// Within k standard errors; a zero stderr demands exact equality.
bool within_sigma(double estimate, double target, double se, double k = 3.0) {
  return std::abs(estimate - target) <= k * se;
}

std::vector<CookieEnv> reference_envs() {
  return {env_of({0.9, 0.9, 0.9}), env_of({0.9, 0.9}), env_of({0.9, 0.9, 0.8}),
          env_of({0.95, 0.95, 0.95, 0.95})};
}

CriterionResult c01_mean_identity(Context& ctx) {
  CriterionResult r = make_result(1, "exact mean identity for A_{M-1}");
  std::mt19937_64 gen(ctx.config.seed);
  std::uniform_int_distribution<int> pick_m(1, 6);
  std::uniform_real_distribution<double> pick_p(0.5, 1.0);
  double worst = 0.0;
  for (int e = 0; e < 20; ++e) {
    std::vector<double> p(static_cast<std::size_t>(pick_m(gen)));
    for (auto& v : p) v = pick_p(gen);
    const CookieEnv env = env_of(p);
    const auto d = a_pgf_derivatives_at_1(a_pgf_form(env, env.cookies() - 1), 1);
    double expect = 0.0;
    for (double v : p) expect += 2.0 * (1.0 - v);
    worst = std::max(worst, std::abs(d[1] - expect));
  }
  r.status = worst < 1e-12 ? Status::Pass : Status::Fail;
  r.detail = format("max |E'(1) - 2 sum(1-p)| = %.2e over 20 envs (tol 1e-12)", worst);
  return r;
}

CriterionResult c02_kernel_oracle(Context& ctx) {
  CriterionResult r = make_result(2, "kernel DP vs string enumeration and distribution identity");
  std::mt19937_64 gen(ctx.config.seed + 2);
  std::uniform_real_distribution<double> pick_p(0.5, 1.0);
  std::vector<CookieEnv> envs{env_of({0.9}), env_of({0.9, 0.6}), env_of({0.9, 0.8, 0.7}),
                              env_of({1.0, 0.5, 0.75})};
  for (int i = 0; i < 3; ++i) envs.push_back(env_of({pick_p(gen), pick_p(gen), pick_p(gen)}));
  constexpr std::size_t kLen = 18;
  double worst_enum = 0.0, worst_identity = 0.0;
  for (const auto& env : envs) {
    for (std::size_t j = 0; j <= 4; ++j) {
      const auto brute = oracle::enumerate_a_distribution(env, j, kLen);
      const DistTable dp = a_distribution(env, j, 64);
      for (std::size_t i = 0; i < brute.size(); ++i) {
        worst_enum = std::max(worst_enum, std::abs(brute[i] - dp.at(i)));
      }
    }
    const DistTable row = a_distribution(env, env.cookies() - 1, 64);
    for (std::size_t j = 1; j <= 20; ++j) {
      worst_identity = std::max(worst_identity, std::abs(a_m1_distribution_identity(env, j) - row.at(j)));
    }
  }
  const bool ok = worst_enum < 1e-12 && worst_identity < 1e-12;
  r.status = ok ? Status::Pass : Status::Fail;
  r.detail = format("enumeration max diff %.2e, identity max diff %.2e (tol 1e-12, %zu envs)",
                    worst_enum, worst_identity, envs.size());
  return r;
}

CriterionResult c03_convolution(Context&) {
  CriterionResult r = make_result(3, "convolution identity A_j = A_{M-1} + NB(j-M+1)");
  constexpr std::size_t kCap = 512;
  double worst = 0.0;
  for (const auto& env : {env_of({0.9, 0.8, 0.7}), env_of({0.9, 0.9}), env_of({0.75}),
                          env_of({0.95, 0.6, 0.8, 0.99})}) {
    const std::size_t m = env.cookies();
    const auto base = a_distribution(env, m - 1, kCap).atoms;
    for (std::size_t j : {m, m + 3}) {
      const auto expect = oracle::convolve(base, oracle::negative_binomial_pmf(j - m + 1, kCap), kCap);
      const auto got = a_distribution(env, j, kCap).atoms;
      for (std::size_t i = 0; i <= kCap; ++i) worst = std::max(worst, std::abs(expect[i] - got[i]));
    }
  }
  r.status = worst < 1e-12 ? Status::Pass : Status::Fail;
  r.detail = format("max pointwise diff %.2e on support <= 512 (tol 1e-12)", worst);
  return r;
}

CriterionResult c04_path_identity(Context& ctx) {
  CriterionResult r = make_result(4, "path identity T_n = K_n - U_0 + n + 2 sum U_k");
  const std::vector<std::pair<CookieEnv, std::size_t>> cases{
      {env_of({0.9, 0.9, 0.9}), 500}, {env_of({0.9, 0.9}), 200},
      {env_of({0.8, 0.8, 0.8}), 300}, {env_of({0.95, 0.95, 0.95, 0.95}), 1000}};
  const std::size_t per_env = 2500;
  std::size_t checked = 0, violated = 0, tip_nonzero = 0;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const auto& [env, level] = cases[c];
    for (std::size_t rep = 0; rep < per_env; ++rep) {
      SplitMix64 rng = SplitMix64::for_stream(ctx.config.seed + c, rep);
      try {
        const WalkRecord rec = simulate_to_level(env, level, rng, ctx.walk_options());
        if (rec.identity_defect() != 0) ++violated;
        if (rec.left_jumps.back() != 0) ++tip_nonzero;
      } catch (const Error&) {
        ++violated;
      }
      ++checked;
    }
  }
  r.status = violated == 0 && tip_nonzero == 0 ? Status::Pass : Status::Fail;
  r.detail = format("%zu records, %zu identity violations, %zu with U_n != 0", checked, violated,
                    tip_nonzero);
  return r;
}

CriterionResult c05_law_equality(Context& ctx) {
  CriterionResult r = make_result(5, "law of U_0^n equals law of Z_n (chi-square)");
  const std::size_t reps = ctx.reps(100'000);
  auto csv = ctx.artifact("c05_chisq.csv");
  if (csv) csv << "env,n,statistic,dof,p_value\n";
  double worst_p = 1.0;
  std::string worst_case;
  std::uint64_t stream = 0;
  for (const auto& env : {env_of({0.9, 0.9, 0.9}), env_of({0.9, 0.9})}) {
    for (std::size_t n : {1, 3, 5}) {
      const DistTable exact = distribution_after_n_steps(env, n, 512);
      const DistTable emp =
          sample_u0_distribution(env, n, reps, ctx.config.seed + 500 + stream++, ctx.walk_options());
      const auto test = oracle::chi_square(emp.atoms, exact.atoms, reps);
      if (csv) csv << '"' << env.describe() << "\"," << n << ',' << test.statistic << ',' << test.dof << ',' << test.p_value << '\n';
      r.notes.push_back(format("%s n=%zu: chi2=%.2f dof=%zu p=%.4f", env.describe().c_str(), n,
                               test.statistic, test.dof, test.p_value));
      if (test.p_value < worst_p) {
        worst_p = test.p_value;
        worst_case = format("%s n=%zu", env.describe().c_str(), n);
      }
    }
  }
  r.status = worst_p > 0.001 ? Status::Pass : Status::Fail;
  r.detail = format("min p-value %.4f at %s (reject below 0.001, reps %zu)", worst_p,
                    worst_case.c_str(), reps);
  return r;
}

std::vector<double> s_grid() {
  std::vector<double> g;
  for (int i = 1; i <= 19; ++i) g.push_back(0.05 * i);
  return g;
}

CriterionResult c06_functional_equation(Context& ctx) {
  CriterionResult r = make_result(6, "functional equation residual");
  double worst = 0.0;
  for (const auto& env : reference_envs()) {
    const double res = functional_equation_residual(env, ctx.solve(env), s_grid());
    r.notes.push_back(format("%s residual %.2e", env.describe().c_str(), res));
    worst = std::max(worst, res);
  }
  r.status = cap_status(worst < 1e-6, ctx);
  r.detail = format("max residual %.2e on s = 0.05..0.95 (tol 1e-6, cap %zu)", worst, ctx.config.cap);
  return r;
}

CriterionResult c07_expansions(Context& ctx) {
  CriterionResult r = make_result(7, "expansions at 1: a'(1), b(1), b'(1), b''(1)");
  double worst_a1 = 0.0, worst_b0 = 0.0, worst_b1 = 0.0;
  bool b2_ok = true;
  auto envs = reference_envs();
  envs.push_back(env_of({0.99, 0.6}));
  envs.push_back(uniform_environment(3, 1.0 / 3.0 + 0.5));
  for (const auto& env : envs) {
    const StationarySolve& solve = ctx.solve(env);
    const TaylorAt1 t = derivatives_at_1(build_ab(env, solve));
    const double a = alpha(env);
    worst_a1 = std::max(worst_a1, std::abs(t.a1 - a));
    worst_b0 = std::max(worst_b0, std::abs(t.b0));
    worst_b1 = std::max(worst_b1, std::abs(t.b1));
    if (a >= 1.0 - kDefaultCriticalBand && !(t.b2 > 0.0)) b2_ok = false;
    r.notes.push_back(format("%s a1-alpha=%.1e b0=%.1e b1=%.1e b2=%.6f", env.describe().c_str(),
                             t.a1 - a, t.b0, t.b1, t.b2));
  }
  const bool exact_ok = worst_a1 < 1e-10;
  const bool solve_ok = worst_b0 < 1e-8 && worst_b1 < 1e-8;
  r.status = !exact_ok || !b2_ok ? Status::Fail : cap_status(solve_ok, ctx);
  r.detail = format("max |a1-alpha| %.1e (tol 1e-10), max |b(1)| %.1e, max |b'(1)| %.1e (tol 1e-8), "
                    "b''(1) > 0 for alpha >= 1: %s",
                    worst_a1, worst_b0, worst_b1, b2_ok ? "yes" : "no");
  return r;
}

CriterionResult c08_speed_triple(Context& ctx) {
  CriterionResult r = make_result(8, "speed: route A vs route B vs Monte Carlo");
  const std::size_t reps = std::max<std::size_t>(ctx.reps(200), 2);
  constexpr std::size_t kLevel = 100'000;
  auto csv = ctx.artifact("c08_speed.csv");
  if (csv) csv << "env,alpha,v_route_a,v_route_b,v_mc,mc_stderr,reps\n";
  double worst_ab = 0.0, worst_z = 0.0;
  bool mc_ok = true;
  std::uint64_t stream = 0;
  for (const auto& env : {env_of({0.9, 0.9, 0.8}), env_of({0.9, 0.9, 0.9}),
                          env_of({0.95, 0.95, 0.95, 0.95})}) {
    const StationarySolve& solve = ctx.solve(env);
    SolverConfig sc;
    sc.cap = ctx.config.cap;
    const SpeedReport ra = speed_route_a(env, sc, &solve);
    const double va = ra.v_route_a.value_or(0.0);
    const double vb = speed_route_b(env, solve);
    const McEstimate mc =
        estimate_speed_mc(env, kLevel, reps, ctx.config.seed + 800 + stream++, ctx.walk_options());
    worst_ab = std::max(worst_ab, std::abs(va - vb));
    const double z = mc.std_error > 0 ? (mc.mean - vb) / mc.std_error : 0.0;
    worst_z = std::max(worst_z, std::abs(z));
    if (!within_sigma(mc.mean, vb, mc.std_error)) mc_ok = false;
    if (csv) csv << '"' << env.describe() << "\"," << alpha(env) << ',' << va << ',' << vb << ',' << mc.mean << ',' << mc.std_error << ',' << reps << '\n';
    r.notes.push_back(format("%s alpha=%.2f A=%.8f B=%.8f MC=%.5f+-%.5f (z=%.2f)",
                             env.describe().c_str(), alpha(env), va, vb, mc.mean, mc.std_error, z));
  }
  const bool ab_ok = worst_ab < 1e-4;
  r.status = !mc_ok ? Status::Fail : cap_status(ab_ok, ctx);
  r.detail = format("max |A-B| %.2e (tol 1e-4), max |MC-B|/stderr %.2f (tol 3), level %zu, reps %zu",
                    worst_ab, worst_z, kLevel, reps);
  return r;
}

CriterionResult c09_phase(Context& ctx) {
  CriterionResult r = make_result(9, "phase criterion: zero speed iff alpha <= 1");
  SolverConfig sc;
  sc.cap = ctx.config.cap;
  bool ok = true;
  for (const auto& env : {env_of({0.99, 0.99}), env_of({0.8, 0.8, 0.8})}) {
    const SpeedReport rep = speed_route_a(env, sc);
    const double v = rep.v_route_a.value_or(-1.0);
    if (v != 0.0) ok = false;
    r.notes.push_back(format("%s alpha=%.2f route A v=%g", env.describe().c_str(), alpha(env), v));
  }
  for (const auto& env : {env_of({0.9, 0.9, 0.8}), env_of({0.9, 0.9, 0.9})}) {
    const SpeedReport rep = speed_route_a(env, sc, &ctx.solve(env));
    const double v = rep.v_route_a.value_or(0.0);
    if (!(v > 0.0)) ok = false;
    r.notes.push_back(format("%s alpha=%.2f route A v=%.6f", env.describe().c_str(), alpha(env), v));
  }
  const CookieEnv slow = env_of({0.8, 0.8, 0.8});
  const std::size_t reps = std::max<std::size_t>(ctx.reps(200), 2);
  const McEstimate small = estimate_speed_mc(slow, 1000, reps, ctx.config.seed + 900, ctx.walk_options());
  const McEstimate large = estimate_speed_mc(slow, 100'000, reps, ctx.config.seed + 901, ctx.walk_options());
  const bool decays = large.mean < small.mean;
  r.notes.push_back(format("alpha=0.8 MC: v(1e3)=%.5f+-%.5f, v(1e5)=%.5f+-%.5f", small.mean,
                           small.std_error, large.mean, large.std_error));
  r.status = ok && decays ? Status::Pass : Status::Fail;
  r.detail = format("route A zero/positive split %s; alpha=0.8 MC %.4f -> %.4f (%s)", ok ? "correct" : "WRONG",
                    small.mean, large.mean, decays ? "decays" : "does not decay");
  return r;
}

CriterionResult c10_tail_exponents(Context& ctx) {
  CriterionResult r = make_result(10, "stationary tail exponents match -alpha");
  const std::size_t lo = ctx.config.cap / 16, hi = ctx.config.cap / 4;
  bool ok = true;
  std::string detail;
  for (const auto& [env, tol] : {std::pair{env_of({0.8, 0.8, 0.8}), 0.1},
                                 std::pair{env_of({0.9, 0.9, 0.9}), 0.15}}) {
    const TailExponent te = tail_exponent(ctx.solve(env), lo, hi);
    const double err = std::abs(te.exponent + alpha(env));
    if (!(err < tol)) ok = false;
    detail += format("%s slope %.4f vs %.2f (tol %.2f, r2 %.6f); ", env.describe().c_str(),
                     te.exponent, -alpha(env), tol, te.r2);
  }
  r.status = cap_status(ok, ctx);
  r.detail = detail + format("window [%zu, %zu]", lo, hi);
  return r;
}

CriterionResult c11_g0_m2(Context& ctx) {
  CriterionResult r = make_result(11, "M = 2 explicit G(0) vs stationary atom vs never-hit MC");
  constexpr std::size_t kLevel = kDefaultNeverHitLevel;
  const std::size_t reps = ctx.reps(10'000);
  bool exact_ok = true, mc_ok = true;
  std::uint64_t stream = 0;
  for (const auto& env : {env_of({0.9, 0.9}), env_of({0.99, 0.6})}) {
    const double g0 = solve_g0_m2(env);
    const double pi0 = ctx.solve(env).pi.at(0);
    const McEstimate mc =
        estimate_never_hit_minus_one(env, kLevel, reps, ctx.config.seed + 1100 + stream++, ctx.walk_options());
    if (!(std::abs(g0 - pi0) < 1e-8)) exact_ok = false;
    const bool hit = within_sigma(mc.mean, g0, mc.std_error);
    if (!hit) mc_ok = false;
    r.notes.push_back(format("%s G(0)=%.10f pi0 diff %.1e MC=%.4f+-%.4f (z=%.2f)",
                             env.describe().c_str(), g0, g0 - pi0, mc.mean, mc.std_error,
                             mc.std_error > 0 ? (mc.mean - g0) / mc.std_error : 0.0));
    if (!hit) {
      // The estimator reads P{U_0^L = 0} = P{Z_L = 0}; its exact value shows
      // how much of the gap is finite-level bias.
      const auto laws = distributions_up_to(env, 2000, 1024);
      r.notes.push_back(format("  exact P{Z_L = 0} at cap 1024: L=100 %.4f, L=1000 %.4f, L=2000 %.4f "
                               "(limit %.4f)",
                               laws[99].at(0), laws[999].at(0), laws[1999].at(0), g0));
    }
  }
  r.status = !mc_ok ? Status::Fail : cap_status(exact_ok, ctx);
  r.detail = format("|G(0) - pi0| < 1e-8: %s; MC within 3 stderr at L=%zu, reps %zu: %s",
                    exact_ok ? "yes" : "no", kLevel, reps, mc_ok ? "yes" : "no");
  return r;
}

CriterionResult c12_returns_pgf(Context& ctx) {
  CriterionResult r = make_result(12, "returns p.g.f. H(0.5) vs Monte Carlo");
  constexpr std::size_t kLevel = 2000;
  const std::size_t reps = ctx.reps(100'000);
  bool ok = true;
  double worst_z = 0.0;
  std::uint64_t stream = 0;
  for (const auto& env : {env_of({0.9, 0.9, 0.9}), env_of({0.9, 0.9})}) {
    const double h = returns_pgf(env, ctx.solve(env), 0.5);
    const McEstimate mc =
        estimate_returns_pgf(env, kLevel, 0.5, reps, ctx.config.seed + 1200 + stream++, ctx.walk_options());
    const double z = mc.std_error > 0 ? (mc.mean - h) / mc.std_error : 0.0;
    worst_z = std::max(worst_z, std::abs(z));
    if (!within_sigma(mc.mean, h, mc.std_error)) ok = false;
    r.notes.push_back(format("%s H(0.5)=%.6f MC=%.6f+-%.6f (z=%.2f)", env.describe().c_str(), h,
                             mc.mean, mc.std_error, z));
  }
  r.status = ok ? Status::Pass : Status::Fail;
  r.detail = format("max |MC-H|/stderr %.2f (tol 3), level %zu, reps %zu", worst_z, kLevel, reps);
  return r;
}

CriterionResult c13_critical(Context& ctx) {
  CriterionResult r = make_result(13, "critical scan for M = 3");
  constexpr double kStep = 0.005;
  const auto grid = critical_grid(3, 0.80, 0.95, kStep, 3);
  SolverConfig sc;
  sc.cap = ctx.config.scan_cap;
  const ScanResult scan = critical_scan(3, grid, kStep, sc);
  const double pc = 1.0 / 3.0 + 0.5;
  bool split_ok = true, errors = false;
  auto csv = ctx.artifact("c13_scan.csv");
  if (csv) csv << "p,alpha,phase,v,ratio,b2,refinement,error\n";
  for (const auto& row : scan.rows) {
    const bool sub = row.p <= pc + 1e-12;
    if (sub && row.v != 0.0) split_ok = false;
    if (!sub && !(row.v > 0.0)) split_ok = false;
    if (!row.error.empty()) errors = true;
    if (csv) {
      csv << format("%.10f,%.10f,%s,%.12g,", row.p, row.alpha, std::string(to_string(row.phase)).c_str(), row.v)
          << (row.ratio ? format("%.12g", *row.ratio) : "") << ','
          << (row.b2 ? format("%.12g", *row.b2) : "") << ',' << row.refinement << ",\"" << row.error << "\"\n";
    }
  }
  bool ratio_ok = false;
  double rel = std::nan("");
  if (scan.finest_ratio && scan.next_ratio) {
    rel = std::abs(*scan.finest_ratio - *scan.next_ratio) / std::abs(*scan.next_ratio);
    ratio_ok = rel < 0.10;
  }
  const double bound = 5.0 * kStep * scan.max_ratio;
  const bool jump_ok = scan.max_jump < bound;
  r.status = split_ok && !errors && scan.monotone && ratio_ok && jump_ok ? Status::Pass : Status::Fail;
  r.detail = format("%zu points; zero/positive split %s; monotone %s; finest ratios %.4f, %.4f (rel diff %.3f, "
                    "tol 0.10); max |dv| %.4f vs 5*dp*max ratio %.4f",
                    scan.rows.size(), split_ok ? "ok" : "WRONG", scan.monotone ? "yes" : "no",
                    scan.finest_ratio.value_or(std::nan("")), scan.next_ratio.value_or(std::nan("")), rel,
                    scan.max_jump, bound);
  if (errors) {
    for (const auto& row : scan.rows) {
      if (!row.error.empty()) r.notes.push_back(format("p=%.6f error: %s", row.p, row.error.c_str()));
    }
  }
  return r;
}

CriterionResult c14_moment_divergence(Context& ctx) {
  CriterionResult r = make_result(14, "moment of order M-1 diverges");
  const CookieEnv env = env_of({0.9, 0.9, 0.9});
  const StationarySolve& solve = ctx.solve(env);
  std::vector<std::size_t> cutoffs;
  for (std::size_t c = 1024; c <= ctx.config.cap; c *= 2) cutoffs.push_back(c);
  if (cutoffs.size() < 3) {
    cutoffs.clear();
    for (std::size_t c = ctx.config.cap / 8; c <= ctx.config.cap; c *= 2) cutoffs.push_back(c);
  }
  const MomentDiagnostic d = moment_divergence_diagnostic(solve, 2, cutoffs);
  bool increasing = true;
  for (std::size_t i = 1; i < d.increments.size(); ++i) {
    if (!(d.increments[i] > d.increments[i - 1])) increasing = false;
  }
  const double expect = 2.0 - alpha(env);
  const bool consistent = std::abs(d.implied_growth - expect) < 0.15;
  auto csv = ctx.artifact("c14_moments.csv");
  if (csv) {
    csv << "cutoff,partial_sum\n";
    for (std::size_t i = 0; i < d.cutoffs.size(); ++i) csv << d.cutoffs[i] << ',' << d.partial_sums[i] << '\n';
  }
  std::string incs;
  for (double v : d.increments) incs += format("%.4f ", v);
  r.status = d.diverging && increasing && consistent ? Status::Pass : Status::Fail;
  r.detail = format("increments %sgrowth exponent %.3f vs 2 - alpha = %.2f; Cauchy test %s", incs.c_str(),
                    d.implied_growth, expect, d.diverging ? "fails (diverges)" : "passes (converges)");
  return r;
}

using Runner = CriterionResult (*)(Context&);

}  // namespace

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Degraded: return "DEGRADED";
  }
  return "?";
}

std::vector<CriterionResult> run_suite(const SuiteConfig& config, const Reporter& report) {
  static constexpr Runner kRunners[] = {
      c01_mean_identity,       c02_kernel_oracle, c03_convolution,  c04_path_identity,
      c05_law_equality,        c06_functional_equation, c07_expansions, c08_speed_triple,
      c09_phase,               c10_tail_exponents, c11_g0_m2,       c12_returns_pgf,
      c13_critical,            c14_moment_divergence};
  Context ctx{config, {}};
  std::vector<CriterionResult> results;
  for (int id = 1; id <= 14; ++id) {
    if (!config.only.empty() && std::find(config.only.begin(), config.only.end(), id) == config.only.end()) {
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    CriterionResult res;
    try {
      res = kRunners[id - 1](ctx);
    } catch (const std::exception& e) {
      res.id = id;
      res.title = "criterion " + std::to_string(id);
      res.status = Status::Fail;
      res.errored = true;
      res.detail = std::string("threw: ") + e.what();
    }
    if (res.status == Status::Degraded) {
      res.notes.push_back(format("cap too small: %zu is below the reference cap %zu", config.cap,
                                 kReferenceCap));
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (report) report(res);
    results.push_back(std::move(res));
  }
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) noexcept {
  return std::none_of(results.begin(), results.end(),
                      [](const CriterionResult& r) { return r.status == Status::Fail; });
}

}  // namespace cookie::suite
