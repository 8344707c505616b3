#include "cookie/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <utility>

#include "cookie/errors.hpp"

namespace cookie {

namespace {

constexpr double kLn2 = 0.693147180559945309417232121458176568;

/// Probability of each (successes, failures) state that survives the first
/// M trials without reaching j + 1 successes, plus the absorbed mass by
/// failure count.
struct FirstTrials {
  // alive[u][f]; only u + f == M is populated after the sweep
  std::vector<std::vector<double>> alive;
  // absorbed[f]: reached j + 1 successes within the first M trials with f failures
  std::vector<double> absorbed;
};

FirstTrials run_first_trials(const CookieEnv& env, std::size_t j) {
  const std::size_t m = env.cookies();
  const std::size_t need = j + 1;
  FirstTrials out;
  out.alive.assign(need, std::vector<double>(m + 1, 0.0));
  out.absorbed.assign(m + 1, 0.0);
  out.alive[0][0] = 1.0;
  for (std::size_t t = 1; t <= m; ++t) {
    const double p = env.strength(t);
    // Walk states with u + f = t - 1 in an order that does not overwrite
    // unread entries: successes move u up, failures move f up.
    std::vector<std::vector<double>> next(need, std::vector<double>(m + 1, 0.0));
    for (std::size_t u = 0; u < need; ++u) {
      for (std::size_t f = 0; f + u + 1 <= t && f <= m; ++f) {
        const double prob = out.alive[u][f];
        if (prob == 0.0) continue;
        if (u + 1 == need) {
          out.absorbed[f] += prob * p;
        } else {
          next[u + 1][f] += prob * p;
        }
        next[u][f + 1] += prob * (1.0 - p);
      }
    }
    out.alive = std::move(next);
  }
  return out;
}

double nb_log_pmf(std::size_t r, std::size_t g) {
  const double rr = static_cast<double>(r);
  const double gg = static_cast<double>(g);
  return std::lgamma(gg + rr) - std::lgamma(gg + 1.0) - std::lgamma(rr) - (gg + rr) * kLn2;
}

}  // namespace

double bernoulli_prob(const CookieEnv& env, std::size_t i) {
  if (i == 0) throw InvalidArgument("Bernoulli trial index is 1-based");
  return env.strength(i);
}

std::vector<double> negative_binomial_half_pmf(std::size_t r, std::size_t cap) {
  std::vector<double> pmf(cap + 1, 0.0);
  if (r == 0) {
    pmf[0] = 1.0;
    return pmf;
  }
  const double rr = static_cast<double>(r);
  if (r <= 1000) {
    double v = std::ldexp(1.0, -static_cast<int>(r));
    for (std::size_t g = 0; g <= cap; ++g) {
      pmf[g] = v;
      v *= (static_cast<double>(g) + rr) / (2.0 * static_cast<double>(g + 1));
    }
    return pmf;
  }
  // Start from the mode so that nothing underflows on the way in.
  const std::size_t mode = r - 1;
  const std::size_t start = std::min(mode, cap);
  double v = std::exp(nb_log_pmf(r, start));
  pmf[start] = v;
  for (std::size_t g = start; g < cap; ++g) {
    v *= (static_cast<double>(g) + rr) / (2.0 * static_cast<double>(g + 1));
    pmf[g + 1] = v;
  }
  v = pmf[start];
  for (std::size_t g = start; g > 0; --g) {
    v *= 2.0 * static_cast<double>(g) / (static_cast<double>(g) - 1.0 + rr);
    pmf[g - 1] = v;
  }
  return pmf;
}

double negative_binomial_half_tail(std::size_t r, std::size_t cap) {
  if (r == 0) return 0.0;
  const double rr = static_cast<double>(r);
  if (static_cast<double>(cap) < rr) {
    // Below the mean the tail is O(1); the complement is accurate to rounding.
    const auto head = negative_binomial_half_pmf(r, cap);
    double sum = 0.0;
    for (double v : head) sum += v;
    return std::max(0.0, 1.0 - sum);
  }
  // cap >= r puts cap + 1 past the mode, so the terms decrease from here on.
  // Subnormal terms are dropped: multiplying one by about 1/2 can round back
  // to itself, and 1e-20 * sum underflows to zero.
  double v = std::exp(nb_log_pmf(r, cap + 1));
  double sum = 0.0;
  for (std::size_t g = cap + 1; v >= std::numeric_limits<double>::min(); ++g) {
    sum += v;
    if (v < 1e-20 * sum) break;
    v *= (static_cast<double>(g) + rr) / (2.0 * static_cast<double>(g + 1));
  }
  return sum;
}

DistTable a_distribution(const CookieEnv& env, std::size_t j, std::size_t cap, double tol) {
  const FirstTrials first = run_first_trials(env, j);
  const std::size_t m = env.cookies();
  DistTable out;
  out.atoms.assign(cap + 1, 0.0);
  double residual = 0.0;
  for (std::size_t f = 0; f <= m; ++f) {
    if (f <= cap) {
      out.atoms[f] += first.absorbed[f];
    } else {
      residual += first.absorbed[f];
    }
  }
  // Cache NB rows by order; at most M distinct orders occur.
  std::map<std::size_t, std::vector<double>> nb_rows;
  for (std::size_t u = 0; u < first.alive.size(); ++u) {
    for (std::size_t f = 0; f <= m; ++f) {
      const double prob = first.alive[u][f];
      if (prob == 0.0) continue;
      const std::size_t r = j + 1 - u;
      if (f > cap) {
        residual += prob;
        continue;
      }
      auto it = nb_rows.find(r);
      if (it == nb_rows.end()) it = nb_rows.emplace(r, negative_binomial_half_pmf(r, cap)).first;
      const auto& nb = it->second;
      for (std::size_t g = 0; f + g <= cap; ++g) out.atoms[f + g] += prob * nb[g];
      residual += prob * negative_binomial_half_tail(r, cap - f);
    }
  }
  out.residual = residual;
  out.truncated = residual > tol;
  return out;
}

Series5 PgfClosedForm::series_at_1() const {
  Series5 total;
  for (const auto& t : terms) {
    total += Series5::one_plus_x_pow(t.s_power) * Series5::one_minus_x_neg_pow(t.nb_order) * t.coef;
  }
  return total;
}

double PgfClosedForm::coefficient_sum() const noexcept {
  double sum = 0.0;
  for (const auto& t : terms) sum += t.coef;
  return sum;
}

PgfClosedForm a_pgf_form(const CookieEnv& env, std::size_t j) {
  const FirstTrials first = run_first_trials(env, j);
  const std::size_t m = env.cookies();
  std::map<std::pair<std::size_t, std::size_t>, double> merged;
  for (std::size_t f = 0; f <= m; ++f) {
    if (first.absorbed[f] != 0.0) merged[{f, 0}] += first.absorbed[f];
  }
  for (std::size_t u = 0; u < first.alive.size(); ++u) {
    for (std::size_t f = 0; f <= m; ++f) {
      if (first.alive[u][f] != 0.0) merged[{f, j + 1 - u}] += first.alive[u][f];
    }
  }
  PgfClosedForm form;
  form.terms.reserve(merged.size());
  for (const auto& [key, coef] : merged) form.terms.push_back({coef, key.first, key.second});
  return form;
}

double a_pgf_eval(const PgfClosedForm& form, double s) {
  if (!(s > 0.0 && s < 2.0)) throw DomainError("p.g.f. of A_j is evaluated on (0, 2) only");
  double sum = 0.0;
  for (const auto& t : form.terms) {
    sum += t.coef * std::pow(s, static_cast<double>(t.s_power)) *
           std::pow(2.0 - s, -static_cast<double>(t.nb_order));
  }
  return sum;
}

std::vector<double> a_pgf_derivatives_at_1(const PgfClosedForm& form, int order) {
  if (order < 0 || order > 4) throw InvalidArgument("derivative order must be in 0..4");
  const Series5 series = form.series_at_1();
  std::vector<double> out;
  for (int k = 0; k <= order; ++k) out.push_back(series.derivative(static_cast<std::size_t>(k)));
  return out;
}

double mean_a_closed_form(const CookieEnv& env) noexcept {
  double sum = 0.0;
  for (double p : env.strengths()) sum += 1.0 - p;
  return 2.0 * sum;
}

std::vector<double> failure_count_distribution(const CookieEnv& env) {
  std::vector<double> dist{1.0};
  for (double p : env.strengths()) {
    std::vector<double> next(dist.size() + 1, 0.0);
    for (std::size_t l = 0; l < dist.size(); ++l) {
      next[l] += dist[l] * p;
      next[l + 1] += dist[l] * (1.0 - p);
    }
    dist = std::move(next);
  }
  return dist;
}

double binomial_coefficient(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  if (n < 60) {
    std::uint64_t c = 1;
    for (std::uint64_t i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
    return static_cast<double>(c);
  }
  // Pair the largest numerator with the smallest denominator to keep the
  // running product near its final magnitude.
  double c = 1.0;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c *= static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return c;
}

double binomial_times_half_power(std::uint64_t n, std::uint64_t k, std::uint64_t e) {
  if (k > n) return 0.0;
  if (n < 60 && e < 1000) {
    return std::ldexp(binomial_coefficient(n, k), -static_cast<int>(e));
  }
  const double log_c = std::lgamma(static_cast<double>(n) + 1.0) -
                       std::lgamma(static_cast<double>(k) + 1.0) -
                       std::lgamma(static_cast<double>(n - k) + 1.0);
  return std::exp(log_c - static_cast<double>(e) * kLn2);
}

double a_m1_distribution_identity(const CookieEnv& env, std::size_t j) {
  if (j == 0) throw InvalidArgument("the identity holds for j >= 1");
  const auto law_l = failure_count_distribution(env);
  const std::size_t upper = std::min<std::size_t>(env.cookies(), j);
  double sum = 0.0;
  for (std::size_t l = 1; l <= upper; ++l) {
    sum += law_l[l] * binomial_times_half_power(j - 1, l - 1, j);
  }
  return sum;
}

}  // namespace cookie
