#include "cookie/env.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "cookie/errors.hpp"

namespace cookie {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view token) {
  token = trim(token);
  // std::from_chars for double is available in libstdc++ 11.
  double value = 0.0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end || token.empty()) {
    throw InvalidArgument("not a decimal number: '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

CookieEnv validate_environment(long long m, std::vector<double> p) {
  if (m < 1) throw LengthMismatch("number of cookies must be at least 1");
  if (p.size() != static_cast<std::size_t>(m)) {
    throw LengthMismatch("expected " + std::to_string(m) + " strengths, got " +
                         std::to_string(p.size()));
  }
  bool degenerate = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double v = p[i];
    if (!(v >= 0.5 && v <= 1.0)) {
      std::ostringstream msg;
      msg << "cookie strength p_" << i + 1 << " = " << v << " is outside [1/2, 1]";
      throw OutOfRange(msg.str());
    }
    if (v == 1.0) degenerate = true;
  }
  return CookieEnv(std::move(p), degenerate);
}

CookieEnv uniform_environment(long long m, double p) {
  if (m < 1) throw LengthMismatch("number of cookies must be at least 1");
  return validate_environment(m, std::vector<double>(static_cast<std::size_t>(m), p));
}

std::string CookieEnv::describe() const {
  std::ostringstream out;
  out.precision(17);
  out << "(" << cookies() << ",(";
  for (std::size_t i = 0; i < strengths_.size(); ++i) {
    if (i) out << ",";
    out << strengths_[i];
  }
  out << "))";
  return out.str();
}

double alpha(const CookieEnv& env) noexcept {
  double sum = 0.0;
  for (double p : env.strengths()) sum += 2.0 * p - 1.0;
  return sum - 1.0;
}

std::string_view to_string(Phase phase) noexcept {
  switch (phase) {
    case Phase::Recurrent: return "Recurrent";
    case Phase::TransientZeroSpeed: return "TransientZeroSpeed";
    case Phase::Critical: return "Critical";
    case Phase::TransientPositiveSpeed: return "TransientPositiveSpeed";
  }
  return "Unknown";
}

PhaseLabel classify(const CookieEnv& env, double critical_band) noexcept {
  PhaseLabel label;
  label.alpha = alpha(env);
  label.exactly_critical = label.alpha == 1.0;
  label.near_critical = std::abs(label.alpha - 1.0) < critical_band;
  if (label.alpha <= 0.0) {
    label.phase = Phase::Recurrent;
  } else if (label.exactly_critical || label.near_critical) {
    label.phase = Phase::Critical;
  } else if (label.alpha < 1.0) {
    label.phase = Phase::TransientZeroSpeed;
  } else {
    label.phase = Phase::TransientPositiveSpeed;
  }
  return label;
}

bool z_unbounded_condition(const CookieEnv& env) noexcept {
  std::size_t ones = 0;
  const auto p = env.strengths();
  for (std::size_t i = 1; i <= p.size(); ++i) {
    if (p[i - 1] == 1.0) ++ones;
    if (2 * ones > i) return false;
  }
  return true;
}

std::vector<double> parse_strength_list(std::string_view text) {
  std::vector<double> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_double(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::map<std::string, std::string> parse_key_value(std::string_view text) {
  std::map<std::string, std::string> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidArgument("config line " + std::to_string(line_no) + ": expected key=value");
    }
    out[std::string(trim(line.substr(0, eq)))] = std::string(trim(line.substr(eq + 1)));
  }
  return out;
}

std::map<std::string, std::string> read_key_value_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open config file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_key_value(buffer.str());
}

CookieEnv environment_from_config(const std::map<std::string, std::string>& config) {
  const auto m = config.find("m");
  const auto p = config.find("p");
  if (m == config.end() || p == config.end()) {
    throw InvalidArgument("config must define both `m` and `p`");
  }
  const double m_value = parse_double(m->second);
  if (m_value != std::floor(m_value)) throw InvalidArgument("`m` must be an integer");
  return validate_environment(static_cast<long long>(m_value), parse_strength_list(p->second));
}

}  // namespace cookie
