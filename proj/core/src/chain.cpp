#include "cookie/chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

#include "cookie/errors.hpp"
#include "cookie/kernel.hpp"
#include "cookie/rng.hpp"

namespace cookie {

namespace {

constexpr std::size_t kSamplerCap = 4096;

// Inverse-CDF sampler for one row.
struct RowSampler {
  std::vector<double> cdf;

  explicit RowSampler(const DistTable& t) {
    cdf.resize(t.atoms.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < t.atoms.size(); ++i) cdf[i] = (acc += t.atoms[i]);
  }

  std::uint64_t draw(double u) const {
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) return cdf.size() - 1;
    return static_cast<std::uint64_t>(it - cdf.begin());
  }
};

// Grassmann-Taksar-Heyman elimination of the truncated chain, top state
// first. Transitions past the cap are dropped, which is a censoring of the
// chain to {0..cap}. Returns unnormalised weights with x_0 = 1.
std::vector<double> gth_weights(BandedRows& rows) {
  const std::size_t n = rows.cap() + 1;
  std::vector<double> pivot(n, 0.0);
  // first_row[k]: smallest i with hi(i) >= k. hi is nondecreasing.
  std::vector<std::size_t> first_row(n, 0);
  {
    std::size_t i = 0;
    for (std::size_t k = 0; k < n; ++k) {
      while (i < n && rows.hi(i) < k) ++i;
      first_row[k] = i;
    }
  }
  for (std::size_t k = n - 1; k >= 1; --k) {
    const auto band_k = rows.band(k);
    const std::size_t lo_k = rows.lo(k);
    const std::size_t width = k - lo_k;
    double s = 0.0;
    for (std::size_t t = 0; t < width; ++t) s += band_k[t];
    if (!(s > 0.0)) throw NoConvergence("kernel is not irreducible below state " + std::to_string(k));
    pivot[k] = s;
    const double* src = band_k.data();
    for (std::size_t i = first_row[k]; i < k; ++i) {
      auto band_i = rows.band(i);
      const std::size_t lo_i = rows.lo(i);
      const double pik = band_i[k - lo_i];
      if (pik == 0.0) continue;
      const double f = pik / s;
      double* dst = band_i.data() + (lo_k - lo_i);
      for (std::size_t t = 0; t < width; ++t) dst[t] += f * src[t];
    }
  }
  std::vector<double> x(n, 0.0);
  x[0] = 1.0;
  for (std::size_t k = 1; k < n; ++k) {
    double acc = 0.0;
    for (std::size_t i = first_row[k]; i < k; ++i) acc += x[i] * rows.at(i, k);
    x[k] = acc / pivot[k];
  }
  return x;
}

StationarySolve bounded_solve(const CookieEnv& env, const SolverConfig& config) {
  const std::size_t m = env.cookies();
  const std::size_t top = m - 1;
  std::vector<std::vector<double>> p(m);
  for (std::size_t j = 0; j < m; ++j) p[j] = a_distribution(env, j, top).atoms;
  std::vector<double> x(m, 0.0), y(m, 0.0);
  x[0] = 1.0;
  StationarySolve out;
  out.bounded = true;
  for (std::size_t it = 1; it <= config.max_iterations; ++it) {
    std::fill(y.begin(), y.end(), 0.0);
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) y[k] += x[j] * p[j][k];
    }
    double tv = 0.0, mass = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      tv += std::abs(y[k] - x[k]);
      mass += y[k];
    }
    tv *= 0.5;
    for (auto& v : y) v /= mass;
    std::swap(x, y);
    out.iterations = it;
    out.tv_gap = tv;
    if (tv < config.tol) break;
  }
  if (out.tv_gap >= config.tol) throw NoConvergence("bounded chain power iteration did not settle");
  out.pi.atoms = x;
  out.trusted_cap = top;
  return out;
}

}  // namespace

std::vector<std::uint64_t> simulate_chain(const CookieEnv& env, std::size_t steps,
                                          std::uint64_t seed, std::uint64_t z0) {
  const std::size_t m = env.cookies();
  std::vector<RowSampler> rows;
  rows.reserve(m);
  for (std::size_t j = 0; j < m; ++j) rows.emplace_back(a_distribution(env, j, kSamplerCap));
  SplitMix64 rng = SplitMix64::for_stream(seed, 0);
  std::vector<std::uint64_t> path;
  path.reserve(steps + 1);
  path.push_back(z0);
  std::uint64_t z = z0;
  for (std::size_t t = 0; t < steps; ++t) {
    if (z < m) {
      z = rows[z].draw(rng.uniform());
    } else {
      // A_j = A_{M-1} + (failures before j - M + 1 fair successes).
      const std::uint64_t base = rows[m - 1].draw(rng.uniform());
      z = base + rng.fair_failures_before(z - (m - 1));
    }
    path.push_back(z);
  }
  return path;
}

std::vector<DistTable> distributions_up_to(const CookieEnv& env, std::size_t n, std::size_t cap,
                                           std::size_t z0) {
  if (z0 > cap) throw InvalidArgument("start state lies beyond the cap");
  std::vector<DistTable> out;
  if (n == 0) return out;
  const BandedRows rows(env, cap, 0.0);
  std::vector<double> x(cap + 1, 0.0), y(cap + 1, 0.0);
  x[z0] = 1.0;
  double residual = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    residual += push_forward(rows, x, y);
    std::swap(x, y);
    DistTable d;
    d.atoms = x;
    d.residual = residual;
    d.truncated = residual > kDefaultResidualTolerance;
    out.push_back(std::move(d));
  }
  return out;
}

DistTable distribution_after_n_steps(const CookieEnv& env, std::size_t n, std::size_t cap,
                                     std::size_t z0) {
  if (n == 0) {
    if (z0 > cap) throw InvalidArgument("start state lies beyond the cap");
    DistTable d;
    d.atoms.assign(cap + 1, 0.0);
    d.atoms[z0] = 1.0;
    return d;
  }
  return std::move(distributions_up_to(env, n, cap, z0).back());
}

StationarySolve stationary_distribution(const CookieEnv& env, const SolverConfig& config) {
  const double a = alpha(env);
  if (!z_unbounded_condition(env)) {
    StationarySolve s = bounded_solve(env, config);
    s.alpha = a;
    s.cookies = env.cookies();
    return s;
  }
  if (a <= 0.0) {
    throw NotPositiveRecurrent("alpha = " + std::to_string(a) +
                               " <= 0: the chain has no invariant probability");
  }
  const std::size_t cap = config.cap;
  if (cap < 64) throw InvalidArgument("stationary solve needs cap >= 64");
  BandedRows rows(env, cap, config.prune);
  const BandedRows pristine = rows;
  std::vector<double> x = gth_weights(rows);
  rows = BandedRows();

  StationarySolve out;
  out.alpha = a;
  out.cookies = env.cookies();
  out.iterations = cap;
  const auto lo = static_cast<std::size_t>(config.fit_lo_fraction * static_cast<double>(cap));
  const auto hi = static_cast<std::size_t>(config.fit_hi_fraction * static_cast<double>(cap));
  std::optional<PowerTailModel> model;
  try {
    const bool near_integer = std::abs(a - std::round(a)) < 0.1;
    model = fit_power_tail(x, std::max<std::size_t>(lo, 1), hi, config.tail_terms,
                           std::max(0.02, a - 0.5), a + 0.5, near_integer);
  } catch (const InsufficientTail&) {
    model.reset();
  }

  out.pi.atoms.assign(cap + 1, 0.0);
  if (model) {
    double total = 0.0;
    for (std::size_t k = 0; k <= hi; ++k) total += x[k];
    total += model->tail_sum(hi + 1);
    for (std::size_t k = 0; k <= hi; ++k) out.pi.atoms[k] = x[k] / total;
    const PowerTailModel norm = model->scaled(1.0 / total);
    for (std::size_t k = hi + 1; k <= cap; ++k) out.pi.atoms[k] = norm(static_cast<double>(k));
    out.pi.residual = norm.tail_sum(cap + 1);
    out.trusted_cap = hi;
    TailFit fit;
    fit.model = norm;
    fit.exponent = norm.beta;
    fit.c = norm.coefs.empty() ? 0.0 : norm.coefs[0];
    out.tail_fit = fit;
  } else {
    double total = 0.0;
    for (double v : x) total += v;
    for (std::size_t k = 0; k <= cap; ++k) out.pi.atoms[k] = x[k] / total;
    out.trusted_cap = cap;
  }
  out.pi.truncated = out.pi.residual > config.tol;

  std::vector<double> next(cap + 1, 0.0);
  push_forward(pristine, out.pi.atoms, next);
  double gap = 0.0;
  for (std::size_t k = 0; k <= out.trusted_cap; ++k) gap += std::abs(next[k] - out.pi.atoms[k]);
  out.tv_gap = 0.5 * gap;
  return out;
}

double stationarity_defect(const CookieEnv& env, const DistTable& pi, std::size_t upto) {
  const std::size_t n = pi.atoms.size();
  std::vector<double> next(upto + 1, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double w = pi.atoms[j];
    if (w == 0.0) continue;
    const DistTable row = a_distribution(env, j, upto);
    for (std::size_t k = 0; k <= upto; ++k) next[k] += w * row.atoms[k];
  }
  double gap = 0.0;
  for (std::size_t k = 0; k <= upto; ++k) gap += std::abs(next[k] - pi.at(k));
  return 0.5 * gap;
}

std::pair<double, double> expected_z_inf(const StationarySolve& solve) {
  const auto& atoms = solve.pi.atoms;
  const std::size_t upto = solve.tail_fit ? solve.trusted_cap : atoms.size() - 1;
  double partial = 0.0;
  for (std::size_t k = 1; k <= upto; ++k) partial += static_cast<double>(k) * atoms[k];
  if (solve.bounded) return {partial, partial};
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (solve.alpha <= 1.0) return {inf, partial};
  if (!solve.tail_fit) return {partial, partial};
  const auto& model = solve.tail_fit->model;
  if (model.beta <= 1.0) return {inf, partial};
  return {partial + model.tail_sum(solve.trusted_cap + 1, 1), partial};
}

TailExponent tail_exponent(const StationarySolve& solve, std::size_t lo, std::size_t hi,
                           double tol) {
  const auto& atoms = solve.pi.atoms;
  if (lo == 0 || hi <= lo || hi >= atoms.size()) {
    throw InvalidArgument("tail window must satisfy 1 <= lo < hi <= cap - 1");
  }
  // survival[k] = P{Z > k}
  std::vector<double> survival(atoms.size(), 0.0);
  double acc = solve.pi.residual;
  for (std::size_t k = atoms.size(); k-- > 0;) {
    survival[k] = acc;
    acc += atoms[k];
  }
  if (!(survival[lo] >= 10.0 * tol) || !(survival[hi] > 0.0)) {
    throw InsufficientTail("window carries too little mass for a tail fit");
  }
  const std::size_t points = hi - lo + 1;
  std::vector<double> y(points), d1, d2;
  d1.reserve(points * 2);
  d2.reserve(points * 3);
  double mean_y = 0.0;
  for (std::size_t k = lo; k <= hi; ++k) {
    const double ln = std::log(static_cast<double>(k));
    y[k - lo] = std::log(survival[k]);
    mean_y += y[k - lo];
    d1.insert(d1.end(), {1.0, ln});
    d2.insert(d2.end(), {1.0, ln, std::log(ln)});
  }
  mean_y /= static_cast<double>(points);
  double tss = 0.0;
  for (double v : y) tss += (v - mean_y) * (v - mean_y);
  double rss1 = 0.0, rss2 = 0.0;
  const auto c1 = least_squares(d1, 2, y, &rss1);
  const auto c2 = least_squares(d2, 3, y, &rss2);
  const double np = static_cast<double>(points);
  const double aic1 = np * std::log(std::max(rss1, 1e-300) / np) + 2.0 * 2.0;
  const double aic2 = np * std::log(std::max(rss2, 1e-300) / np) + 2.0 * 3.0;
  TailExponent out;
  out.window_lo = lo;
  out.window_hi = hi;
  const bool use_log = solve.alpha > 0.0 && std::abs(solve.alpha - 1.0) < 0.1 && aic2 < aic1;
  out.log_model = use_log;
  out.exponent = use_log ? c2[1] : c1[1];
  out.r2 = tss > 0.0 ? 1.0 - (use_log ? rss2 : rss1) / tss : 1.0;
  return out;
}

MomentDiagnostic moment_divergence_diagnostic(const StationarySolve& solve, int order,
                                              const std::vector<std::size_t>& cutoffs) {
  if (order < 1) throw InvalidArgument("moment order must be at least 1");
  if (cutoffs.empty()) throw InvalidArgument("at least one cutoff is required");
  MomentDiagnostic out;
  out.bounded_support = solve.bounded;
  out.cutoffs = cutoffs;
  std::sort(out.cutoffs.begin(), out.cutoffs.end());
  const auto& atoms = solve.pi.atoms;
  if (out.cutoffs.back() >= atoms.size()) throw InvalidArgument("cutoff beyond the solved range");
  double sum = 0.0;
  std::size_t k = 0;
  for (std::size_t c : out.cutoffs) {
    for (; k <= c; ++k) sum += std::pow(static_cast<double>(k), order) * atoms[k];
    out.partial_sums.push_back(sum);
  }
  for (std::size_t i = 1; i < out.partial_sums.size(); ++i) {
    out.increments.push_back(out.partial_sums[i] - out.partial_sums[i - 1]);
  }
  for (std::size_t i = 1; i < out.increments.size(); ++i) {
    out.ratios.push_back(out.increments[i] / out.increments[i - 1]);
  }
  if (!out.ratios.empty()) {
    const std::size_t n = out.cutoffs.size();
    const double step = std::log(static_cast<double>(out.cutoffs[n - 1]) /
                                 static_cast<double>(out.cutoffs[n - 2]));
    out.implied_growth = std::log(out.ratios.back()) / step;
  }
  if (!out.bounded_support && !out.increments.empty()) {
    const double eps = std::numeric_limits<double>::epsilon();
    out.diverging = out.increments.back() >= 10.0 * eps * out.partial_sums.back();
  }
  return out;
}

SpeedReport speed_route_a(const CookieEnv& env, const SolverConfig& config,
                          const StationarySolve* solve) {
  SpeedReport report;
  report.alpha = alpha(env);
  report.label = classify(env, config.critical_band);
  if (report.label.near_critical) {
    report.warnings.push_back("alpha within the critical band; speed reported as 0");
  }
  const bool bounded = !z_unbounded_condition(env);
  if (!bounded && report.label.phase != Phase::TransientPositiveSpeed) {
    report.v_route_a = 0.0;
    if (report.alpha > 0.0) report.e_z_inf = std::numeric_limits<double>::infinity();
    return report;
  }
  StationarySolve local;
  if (!solve) {
    local = stationary_distribution(env, config);
    solve = &local;
  }
  const auto [e, partial] = expected_z_inf(*solve);
  report.e_z_inf = e;
  report.v_route_a = std::isfinite(e) ? 1.0 / (1.0 + 2.0 * e) : 0.0;
  if (bounded) {
    report.warnings.push_back("chain bounded by M-1 from 0; speed from the finite stationary law");
  }
  if (solve->tail_fit && std::abs(solve->tail_fit->exponent - report.alpha) > 0.2) {
    report.warnings.push_back("fitted tail exponent differs from alpha by more than 0.2");
  }
  if (report.alpha > 1.0 && report.alpha <= 1.05) {
    report.warnings.push_back("alpha in (1, 1.05]: tail correction dominates route A; prefer route B");
  }
  (void)partial;
  return report;
}

}  // namespace cookie
