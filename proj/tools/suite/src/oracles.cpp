#include "cookie_suite/oracles.hpp"

#include <algorithm>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/negative_binomial.hpp>

namespace cookie::oracle {

namespace {

void walk_strings(const CookieEnv& env, std::size_t need, std::size_t max_len, std::size_t len,
                  std::size_t successes, double prob, std::vector<double>& out) {
  if (len == max_len) return;
  const double p = env.strength(len + 1);
  // success at position len + 1
  if (successes + 1 == need) {
    out[len + 1 - need] += prob * p;
  } else {
    walk_strings(env, need, max_len, len + 1, successes + 1, prob * p, out);
  }
  walk_strings(env, need, max_len, len + 1, successes, prob * (1.0 - p), out);
}

}  // namespace

std::vector<double> enumerate_a_distribution(const CookieEnv& env, std::size_t j,
                                             std::size_t max_len) {
  const std::size_t need = j + 1;
  std::vector<double> out(max_len >= need ? max_len - need + 1 : 0, 0.0);
  if (out.empty()) return out;
  walk_strings(env, need, max_len, 0, 0, 1.0, out);
  return out;
}

std::vector<double> negative_binomial_pmf(std::size_t r, std::size_t cap) {
  std::vector<double> out(cap + 1, 0.0);
  if (r == 0) {
    out[0] = 1.0;
    return out;
  }
  const boost::math::negative_binomial_distribution<double> nb(static_cast<double>(r), 0.5);
  for (std::size_t g = 0; g <= cap; ++g) out[g] = boost::math::pdf(nb, static_cast<double>(g));
  return out;
}

std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b,
                             std::size_t cap) {
  std::vector<double> out(cap + 1, 0.0);
  for (std::size_t i = 0; i < a.size() && i <= cap; ++i) {
    for (std::size_t k = 0; k < b.size() && i + k <= cap; ++k) out[i + k] += a[i] * b[k];
  }
  return out;
}

ChiSquare chi_square(const std::vector<double>& observed_freq, const std::vector<double>& expected,
                     std::size_t reps, double min_expected) {
  const double n = static_cast<double>(reps);
  const std::size_t len = std::max(observed_freq.size(), expected.size());
  auto obs = [&](std::size_t i) { return i < observed_freq.size() ? observed_freq[i] * n : 0.0; };
  auto exp = [&](std::size_t i) { return i < expected.size() ? expected[i] * n : 0.0; };
  // Pool from the right until the pooled tail has enough expected count,
  // then require the same of every remaining cell by merging leftward.
  std::vector<double> o, e;
  double tail_o = 0.0, tail_e = 0.0;
  std::size_t cut = len;
  while (cut > 0 && tail_e < min_expected) {
    --cut;
    tail_o += obs(cut);
    tail_e += exp(cut);
  }
  // Remaining expected mass outside the table counts toward the tail.
  double total_e = 0.0;
  for (std::size_t i = 0; i < len; ++i) total_e += exp(i);
  tail_e += std::max(0.0, n - total_e);
  double acc_o = 0.0, acc_e = 0.0;
  for (std::size_t i = 0; i < cut; ++i) {
    acc_o += obs(i);
    acc_e += exp(i);
    if (acc_e >= min_expected) {
      o.push_back(acc_o);
      e.push_back(acc_e);
      acc_o = acc_e = 0.0;
    }
  }
  tail_o += acc_o;
  tail_e += acc_e;
  o.push_back(tail_o);
  e.push_back(tail_e);
  ChiSquare out;
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (e[i] > 0.0) out.statistic += (o[i] - e[i]) * (o[i] - e[i]) / e[i];
  }
  out.dof = o.size() > 1 ? o.size() - 1 : 0;
  if (out.dof == 0) {
    out.p_value = 1.0;
    return out;
  }
  const boost::math::chi_squared_distribution<double> dist(static_cast<double>(out.dof));
  out.p_value = boost::math::cdf(boost::math::complement(dist, out.statistic));
  return out;
}

}  // namespace cookie::oracle
