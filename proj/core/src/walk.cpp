#include "cookie/walk.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "cookie/errors.hpp"

namespace cookie {

std::int64_t WalkRecord::identity_defect() const noexcept {
  std::int64_t sum_u = 0;
  for (auto u : left_jumps) sum_u += static_cast<std::int64_t>(u);
  const std::int64_t u0 = left_jumps.empty() ? 0 : static_cast<std::int64_t>(left_jumps[0]);
  const std::int64_t rhs = static_cast<std::int64_t>(negative_time) - u0 +
                           static_cast<std::int64_t>(n) + 2 * sum_u;
  return static_cast<std::int64_t>(hitting_time) - rhs;
}

double step_rule(const CookieEnv& env, std::uint64_t visits_so_far) noexcept {
  return env.strength(static_cast<std::size_t>(visits_so_far) + 1);
}

WalkRecord simulate_to_level(const CookieEnv& env, std::size_t n, SplitMix64& rng,
                             const WalkOptions& options) {
  WalkRecord rec;
  rec.n = n;
  rec.left_jumps.assign(n + 1, 0);
  if (n == 0) return rec;

  const auto strengths = env.strengths();
  const std::uint64_t m = strengths.size();
  // visits[x + offset] for sites -offset..n; grown leftward on demand.
  std::size_t offset = 64;
  std::vector<std::uint64_t> visits(n + 1 + offset, 0);
  std::int64_t x = 0;
  const auto target = static_cast<std::int64_t>(n);
  std::uint64_t steps = 0;

  while (x < target) {
    if (steps >= options.step_cap) {
      throw StepCapExceeded("step cap of " + std::to_string(options.step_cap) +
                            " reached before level " + std::to_string(n));
    }
    const std::size_t idx = static_cast<std::size_t>(x + static_cast<std::int64_t>(offset));
    const std::uint64_t seen = visits[idx]++;
    const double p = seen < m ? strengths[seen] : 0.5;
    const bool right = rng.uniform() < p;
    ++steps;
    if (x < 0) {
      ++rec.negative_time;
    } else if (!right) {
      ++rec.left_jumps[static_cast<std::size_t>(x)];
    }
    x += right ? 1 : -1;
    if (x == 0) ++rec.returns_to_origin;
    if (x == -1) {
      rec.hit_minus_one = true;
      if (options.stop_at_minus_one) {
        rec.stopped_at_minus_one = true;
        break;
      }
    }
    if (x < -static_cast<std::int64_t>(offset)) {
      const std::size_t grow = offset;
      visits.insert(visits.begin(), grow, 0);
      offset += grow;
    }
  }
  rec.hitting_time = steps;
  if (!rec.stopped_at_minus_one && rec.identity_defect() != 0) {
    throw Error("path identity violated; simulator bookkeeping is inconsistent");
  }
  return rec;
}

WalkRecord simulate_to_level(const CookieEnv& env, std::size_t n, std::uint64_t seed,
                             const WalkOptions& options) {
  SplitMix64 rng = SplitMix64::for_stream(seed, 0);
  return simulate_to_level(env, n, rng, options);
}

std::vector<double> run_replicates(std::size_t reps, unsigned threads,
                                   const std::function<double(std::size_t)>& f) {
  std::vector<double> out(reps, 0.0);
  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(reps, 1)));
  if (workers <= 1) {
    for (std::size_t r = 0; r < reps; ++r) out[r] = f(r);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t r = w; r < reps; r += workers) out[r] = f(r);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

McEstimate summarize(const std::vector<double>& values, std::uint64_t seed) {
  McEstimate est;
  est.reps = values.size();
  est.seed = seed;
  if (values.empty()) return est;
  double sum = 0.0;
  for (double v : values) sum += v;
  est.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - est.mean) * (v - est.mean);
    const double sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
    est.std_error = sd / std::sqrt(static_cast<double>(values.size()));
  }
  return est;
}

McEstimate estimate_speed_mc(const CookieEnv& env, std::size_t n, std::size_t reps,
                             std::uint64_t seed, const WalkOptions& options) {
  if (n == 0) throw InvalidArgument("speed estimate needs level n >= 1");
  WalkOptions run = options;
  run.stop_at_minus_one = false;
  const auto values = run_replicates(reps, options.threads, [&](std::size_t r) {
    SplitMix64 rng = SplitMix64::for_stream(seed, r);
    const WalkRecord rec = simulate_to_level(env, n, rng, run);
    return static_cast<double>(n) / static_cast<double>(rec.hitting_time);
  });
  return summarize(values, seed);
}

McEstimate estimate_never_hit_minus_one(const CookieEnv& env, std::size_t level,
                                        std::size_t reps, std::uint64_t seed,
                                        const WalkOptions& options) {
  WalkOptions run = options;
  run.stop_at_minus_one = true;
  const auto values = run_replicates(reps, options.threads, [&](std::size_t r) {
    SplitMix64 rng = SplitMix64::for_stream(seed, r);
    const WalkRecord rec = simulate_to_level(env, level, rng, run);
    return rec.hit_minus_one ? 0.0 : 1.0;
  });
  return summarize(values, seed);
}

DistTable sample_u0_distribution(const CookieEnv& env, std::size_t n, std::size_t reps,
                                 std::uint64_t seed, const WalkOptions& options) {
  if (alpha(env) <= 0.0) throw RegimeError("U_0 sampling needs a transient walk (alpha > 0)");
  if (reps == 0) throw InvalidArgument("at least one replicate is required");
  WalkOptions run = options;
  run.stop_at_minus_one = false;
  const auto values = run_replicates(reps, options.threads, [&](std::size_t r) {
    SplitMix64 rng = SplitMix64::for_stream(seed, r);
    return static_cast<double>(simulate_to_level(env, n, rng, run).left_jumps[0]);
  });
  const auto top = static_cast<std::size_t>(*std::max_element(values.begin(), values.end()));
  DistTable table;
  table.atoms.assign(top + 1, 0.0);
  for (double v : values) table.atoms[static_cast<std::size_t>(v)] += 1.0;
  for (auto& a : table.atoms) a /= static_cast<double>(reps);
  return table;
}

std::uint64_t count_returns_to_origin(const CookieEnv& env, std::size_t level, std::uint64_t seed,
                                      const WalkOptions& options) {
  if (level < 2) throw InvalidArgument("returns are counted up to a level of at least 2");
  WalkOptions run = options;
  run.stop_at_minus_one = false;
  const WalkRecord rec = simulate_to_level(env, level, seed, run);
  return rec.left_jumps[0] + rec.left_jumps[1];
}

McEstimate estimate_returns_pgf(const CookieEnv& env, std::size_t level, double s,
                                std::size_t reps, std::uint64_t seed,
                                const WalkOptions& options) {
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("returns p.g.f. is estimated on [0, 1]");
  if (level < 2) throw InvalidArgument("returns are counted up to a level of at least 2");
  WalkOptions run = options;
  run.stop_at_minus_one = false;
  const auto values = run_replicates(reps, options.threads, [&](std::size_t r) {
    SplitMix64 rng = SplitMix64::for_stream(seed, r);
    const WalkRecord rec = simulate_to_level(env, level, rng, run);
    return std::pow(s, static_cast<double>(rec.left_jumps[0] + rec.left_jumps[1]));
  });
  return summarize(values, seed);
}

}  // namespace cookie
