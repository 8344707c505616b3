#include "cookie/gf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cookie/errors.hpp"

namespace cookie {

namespace {

void require_unit_interval(double t, const char* what) {
  if (!(t > 0.0 && t < 1.0)) throw DomainError(std::string(what) + " left (0, 1)");
}

}  // namespace

double g_eval(const StationarySolve& solve, double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("G is evaluated on [0, 1] only");
  const auto& atoms = solve.pi.atoms;
  if (s == 0.0) return atoms.empty() ? 0.0 : atoms[0];
  double acc = 0.0;
  for (std::size_t k = atoms.size(); k-- > 0;) acc = acc * s + atoms[k];
  if (s == 1.0) acc += solve.pi.residual;
  return acc;
}

double AbPair::a(double s) const {
  const double phi = a_pgf_eval(forms[cookies - 1], s);
  return std::pow(2.0 - s, -static_cast<double>(cookies - 1)) / phi;
}

double AbPair::b(double s) const {
  const double av = a(s);
  double out = 1.0 - av;
  for (std::size_t k = 0; k < atoms_used.size(); ++k) {
    out += atoms_used[k] *
           (a_pgf_eval(forms[k], s) * av - std::pow(2.0 - s, -static_cast<double>(k)));
  }
  return out;
}

Series5 AbPair::a_series() const {
  return Series5::one_minus_x_neg_pow(cookies - 1) * reciprocal(forms[cookies - 1].series_at_1());
}

Series5 AbPair::b_series() const {
  const Series5 av = a_series();
  Series5 out = Series5::constant(1.0) - av;
  for (std::size_t k = 0; k < atoms_used.size(); ++k) {
    out += atoms_used[k] * (forms[k].series_at_1() * av - Series5::one_minus_x_neg_pow(k));
  }
  return out;
}

AbPair build_ab(const CookieEnv& env, std::vector<double> atoms) {
  const std::size_t m = env.cookies();
  if (atoms.size() != m - 1) throw LengthMismatch("b(s) needs exactly M - 1 atoms");
  AbPair pair;
  pair.cookies = m;
  for (std::size_t k = 0; k < m; ++k) pair.forms.push_back(a_pgf_form(env, k));
  pair.atoms_used = std::move(atoms);
  return pair;
}

AbPair build_ab(const CookieEnv& env, const StationarySolve& solve) {
  if (!solve.bounded && alpha(env) <= 0.0) {
    throw NotPositiveRecurrent("a(s), b(s) need a positive recurrent chain");
  }
  std::vector<double> atoms;
  for (std::size_t k = 0; k + 1 < env.cookies(); ++k) atoms.push_back(solve.pi.at(k));
  return build_ab(env, std::move(atoms));
}

double functional_equation_residual(const AbPair& pair, const StationarySolve& solve,
                                    const std::vector<double>& s_grid) {
  double worst = 0.0;
  for (double s : s_grid) {
    require_unit_interval(s, "grid point");
    const double t = 1.0 / (2.0 - s);
    require_unit_interval(t, "1/(2-s)");
    const double lhs = 1.0 - g_eval(solve, t);
    const double rhs = pair.a(s) * (1.0 - g_eval(solve, s)) + pair.b(s);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

double functional_equation_residual(const CookieEnv& env, const StationarySolve& solve,
                                    const std::vector<double>& s_grid) {
  return functional_equation_residual(build_ab(env, solve), solve, s_grid);
}

TaylorAt1 derivatives_at_1(const AbPair& pair) {
  const Series5 a = pair.a_series();
  const Series5 b = pair.b_series();
  TaylorAt1 t;
  t.a1 = a.derivative(1);
  t.a2 = a.derivative(2);
  t.b0 = b.derivative(0);
  t.b1 = b.derivative(1);
  t.b2 = b.derivative(2);
  return t;
}

double speed_route_b(const CookieEnv& env, const StationarySolve& solve) {
  const double a = alpha(env);
  if (!(a > 1.0)) throw RegimeError("route B needs alpha > 1");
  const TaylorAt1 t = derivatives_at_1(build_ab(env, solve));
  return (a - 1.0) / (a - 1.0 + t.b2);
}

double solve_g0_m2(const CookieEnv& env) {
  if (env.cookies() != 2) throw RegimeError("explicit G(0) is available for M = 2 only");
  if (!(alpha(env) > 0.0)) throw RegimeError("explicit G(0) needs alpha > 0");
  // b(s) = 1 - a(s) + pi_0 (E[s^{A_0}] a(s) - 1); b'(1) = 0 fixes pi_0.
  const AbPair pair = build_ab(env, std::vector<double>{0.0});
  const Series5 a = pair.a_series();
  const Series5 lead = pair.forms[0].series_at_1() * a;
  const double denom = lead.derivative(1);
  if (std::abs(denom) < 1e-14) throw DegenerateCoefficient("b'(1) does not depend on pi_0");
  return a.derivative(1) / denom;
}

double returns_pgf(const CookieEnv& env, const StationarySolve& solve, double s) {
  require_unit_interval(s, "s");
  const AbPair pair = build_ab(env, solve);
  const double t = s / (2.0 - s);
  require_unit_interval(t, "s/(2-s)");
  const double av = pair.a(s);
  double h = g_eval(solve, t) / av;
  for (std::size_t k = 0; k < pair.atoms_used.size(); ++k) {
    const double kk = static_cast<double>(k);
    h += pair.atoms_used[k] * std::pow(s, kk) *
         (a_pgf_eval(pair.forms[k], s) - 1.0 / (av * std::pow(2.0 - s, kk)));
  }
  return h;
}

std::vector<std::pair<double, bool>> critical_grid(long long m, double from, double to,
                                                   double step, int halvings) {
  if (m < 1) throw InvalidArgument("M must be positive");
  if (!(step > 0.0) || !(to >= from)) throw InvalidArgument("scan grid needs from <= to, step > 0");
  std::vector<std::pair<double, bool>> grid;
  const auto count = static_cast<long long>(std::floor((to - from) / step + 1e-9));
  for (long long i = 0; i <= count; ++i) grid.emplace_back(from + static_cast<double>(i) * step, false);
  const double pc = 1.0 / static_cast<double>(m) + 0.5;
  if (pc >= from && pc <= to) {
    grid.emplace_back(pc, true);
    double h = step;
    for (int i = 0; i < halvings; ++i) {
      h *= 0.5;
      if (pc + h <= to) grid.emplace_back(pc + h, true);
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end(),
                         [](const auto& x, const auto& y) { return std::abs(x.first - y.first) < 1e-12; }),
             grid.end());
  return grid;
}

ScanResult critical_scan(long long m, const std::vector<std::pair<double, bool>>& grid, double step,
                         const SolverConfig& config) {
  ScanResult result;
  result.step = step;
  for (const auto& [p, refined] : grid) {
    ScanRow row;
    row.p = p;
    row.refinement = refined;
    try {
      const CookieEnv env = uniform_environment(m, std::min(p, 1.0));
      const PhaseLabel label = classify(env, config.critical_band);
      row.alpha = label.alpha;
      row.phase = label.phase;
      if (label.phase == Phase::TransientPositiveSpeed) {
        const StationarySolve solve = stationary_distribution(env, config);
        const TaylorAt1 t = derivatives_at_1(build_ab(env, solve));
        row.b2 = t.b2;
        row.v = (row.alpha - 1.0) / (row.alpha - 1.0 + t.b2);
        row.ratio = row.v / (row.alpha - 1.0);
      }
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    result.rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    const auto& r = result.rows[i];
    if (r.ratio) result.max_ratio = std::max(result.max_ratio, *r.ratio);
    if (i > 0) {
      const double dv = r.v - result.rows[i - 1].v;
      result.max_jump = std::max(result.max_jump, std::abs(dv));
      if (dv < 0.0) result.monotone = false;
    }
  }
  for (const auto& r : result.rows) {
    if (!r.ratio) continue;
    if (!result.finest_ratio) {
      result.finest_ratio = r.ratio;
    } else {
      result.next_ratio = r.ratio;
      break;
    }
  }
  return result;
}

}  // namespace cookie
