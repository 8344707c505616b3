#include "cookie/tail_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>
#include <boost/math/tools/minima.hpp>

#include "cookie/errors.hpp"

namespace cookie {

namespace {

// Rising product s (s+1) ... (s+d-1) and its derivative in s.
void rising(double s, int d, double& value, double& deriv) {
  value = 1.0;
  deriv = 0.0;
  for (int i = 0; i < d; ++i) {
    const double f = s + i;
    deriv = deriv * f + value;
    value *= f;
  }
}

// Euler-Maclaurin for sum_{k >= n} k^{-s}, with its negated s-derivative
// when q = 1. Truncation error is O(n^{-s-7}).
double euler_maclaurin(double s, int q, double n) {
  const double ln_n = std::log(n);
  const double base = std::pow(n, 1.0 - s);
  double total = q == 0 ? base / (s - 1.0)
                        : base * (ln_n / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0)));
  // f(n)/2
  total += 0.5 * std::pow(n, -s) * (q == 0 ? 1.0 : ln_n);
  // -B_{2i}/(2i)! f^{(2i-1)}(n), with f^{(d)}(n) = (-1)^d rising(s, d) n^{-s-d}
  static constexpr double kCoef[] = {1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0};
  for (int i = 0; i < 3; ++i) {
    const int d = 2 * i + 1;
    double r = 0.0, dr = 0.0;
    rising(s, d, r, dr);
    const double pw = std::pow(n, -s - d);
    // term(s) = kCoef[i] * r(s) * n^{-s-d}
    if (q == 0) {
      total += kCoef[i] * r * pw;
    } else {
      total += -kCoef[i] * (dr - r * ln_n) * pw;
    }
  }
  return total;
}

struct Design {
  std::vector<double> matrix;
  std::size_t cols = 0;
};

// Rows k in [lo, hi]; each row is divided by x_k so the misfit is relative.
Design build_design(std::span<const double> x, std::size_t lo, std::size_t hi, double beta,
                    std::size_t terms, std::size_t log_terms) {
  Design d;
  d.cols = terms + log_terms;
  d.matrix.reserve((hi - lo + 1) * d.cols);
  const double scale = static_cast<double>(lo);
  for (std::size_t k = lo; k <= hi; ++k) {
    const double kk = static_cast<double>(k);
    const double lead = std::pow(kk, -1.0 - beta) / x[k];
    const double t = scale / kk;
    const double lk = std::log(kk);
    double tm = 1.0;
    for (std::size_t m = 0; m < terms; ++m, tm *= t) d.matrix.push_back(lead * tm);
    tm = 1.0;
    for (std::size_t m = 0; m < log_terms; ++m, tm *= t) d.matrix.push_back(lead * tm * lk);
  }
  return d;
}

struct FitResult {
  std::vector<double> coef;
  double rss = 0.0;
};

FitResult fit_at(std::span<const double> x, std::size_t lo, std::size_t hi, double beta,
                 std::size_t terms, std::size_t log_terms) {
  const Design d = build_design(x, lo, hi, beta, terms, log_terms);
  std::vector<double> ones(hi - lo + 1, 1.0);
  FitResult r;
  r.coef = least_squares(d.matrix, d.cols, ones, &r.rss);
  return r;
}

PowerTailModel fit_variant(std::span<const double> x, std::size_t lo, std::size_t hi,
                           std::size_t terms, std::size_t log_terms, double beta_min,
                           double beta_max) {
  auto objective = [&](double beta) { return fit_at(x, lo, hi, beta, terms, log_terms).rss; };
  std::uintmax_t iterations = 200;
  const auto best = boost::math::tools::brent_find_minima(
      objective, beta_min, beta_max, std::numeric_limits<double>::digits / 2, iterations);
  const double beta = best.first;
  const FitResult fit = fit_at(x, lo, hi, beta, terms, log_terms);
  const double points = static_cast<double>(hi - lo + 1);
  PowerTailModel model;
  model.beta = beta;
  model.window_lo = lo;
  model.window_hi = hi;
  const double scale = static_cast<double>(lo);
  double sm = 1.0;
  for (std::size_t m = 0; m < terms; ++m, sm *= scale) model.coefs.push_back(fit.coef[m] * sm);
  sm = 1.0;
  for (std::size_t m = 0; m < log_terms; ++m, sm *= scale) {
    model.log_coefs.push_back(fit.coef[terms + m] * sm);
  }
  model.rms = std::sqrt(fit.rss / points);
  const double params = static_cast<double>(terms + log_terms + 1);
  model.aic = points * std::log(std::max(fit.rss, 1e-300) / points) + 2.0 * params;
  return model;
}

}  // namespace

double PowerTailModel::operator()(double k) const noexcept {
  const double lk = std::log(k);
  double sum = 0.0;
  double km = 1.0;
  for (double c : coefs) {
    sum += c * km;
    km /= k;
  }
  km = 1.0;
  for (double d : log_coefs) {
    sum += d * lk * km;
    km /= k;
  }
  return std::pow(k, -1.0 - beta) * sum;
}

double PowerTailModel::tail_sum(std::size_t from, int power) const {
  if (beta <= static_cast<double>(power)) {
    throw DomainError("tail sum diverges: exponent does not exceed the moment order");
  }
  const std::size_t n = std::max<std::size_t>(from, 1);
  double total = 0.0;
  for (std::size_t m = 0; m < coefs.size(); ++m) {
    total += coefs[m] * power_log_tail_sum(1.0 + beta + m - power, 0, n);
  }
  for (std::size_t m = 0; m < log_coefs.size(); ++m) {
    total += log_coefs[m] * power_log_tail_sum(1.0 + beta + m - power, 1, n);
  }
  return total;
}

PowerTailModel PowerTailModel::scaled(double factor) const {
  PowerTailModel out = *this;
  for (auto& c : out.coefs) c *= factor;
  for (auto& d : out.log_coefs) d *= factor;
  return out;
}

double power_log_tail_sum(double s, int q, std::size_t n) {
  if (!(s > 1.0)) throw DomainError("power tail sum needs s > 1");
  if (q != 0 && q != 1) throw InvalidArgument("log power must be 0 or 1");
  if (n == 0) throw InvalidArgument("power tail sum starts at n >= 1");
  constexpr std::size_t kStart = 64;
  double head = 0.0;
  std::size_t k = n;
  for (; k < kStart; ++k) {
    const double kk = static_cast<double>(k);
    head += std::pow(kk, -s) * (q == 0 ? 1.0 : std::log(kk));
  }
  return head + euler_maclaurin(s, q, static_cast<double>(k));
}

std::vector<double> least_squares(const std::vector<double>& design, std::size_t cols,
                                  std::span<const double> y, double* rss) {
  const std::size_t rows = y.size();
  if (cols == 0 || design.size() != rows * cols) throw LengthMismatch("design matrix shape");
  if (rows < cols) throw InsufficientTail("fewer observations than parameters");
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> a(
      design.data(), static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  Eigen::Map<const Eigen::VectorXd> b(y.data(), static_cast<Eigen::Index>(rows));
  const Eigen::VectorXd coef = a.colPivHouseholderQr().solve(b);
  if (rss) *rss = (a * coef - b).squaredNorm();
  return {coef.data(), coef.data() + coef.size()};
}

PowerTailModel fit_power_tail(std::span<const double> x, std::size_t lo, std::size_t hi,
                              std::size_t terms, double beta_min, double beta_max, bool try_log) {
  if (terms == 0) throw InvalidArgument("tail model needs at least one term");
  if (lo == 0 || hi >= x.size() || lo > hi) throw InvalidArgument("tail window outside the data");
  if (hi - lo + 1 < terms + 4) throw InsufficientTail("tail window too short");
  for (std::size_t k = lo; k <= hi; ++k) {
    if (!(x[k] > 0.0)) throw InsufficientTail("tail window holds non-positive entries");
  }
  if (!(beta_min < beta_max)) throw InvalidArgument("empty exponent bracket");
  PowerTailModel best = fit_variant(x, lo, hi, terms, 0, beta_min, beta_max);
  if (try_log) {
    PowerTailModel alt = fit_variant(x, lo, hi, terms, 2, beta_min, beta_max);
    if (alt.aic < best.aic) best = std::move(alt);
  }
  return best;
}

}  // namespace cookie
