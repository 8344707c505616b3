#include "run_config.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "cookie/errors.hpp"

namespace cookie::cli {

namespace {

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
  std::istringstream in(text);
  T value{};
  in >> value;
  if (!in || !in.eof()) throw InvalidArgument("config key '" + key + "': cannot parse '" + text + "'");
  return value;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "1" || text == "true" || text == "yes" || text == "on") return true;
  if (text == "0" || text == "false" || text == "no" || text == "off") return false;
  throw InvalidArgument("config key '" + key + "': expected a boolean, got '" + text + "'");
}

}  // namespace

std::string to_string(Format f) { return f == Format::Csv ? "csv" : "json"; }

std::string RunConfig::canonical() const {
  std::ostringstream out;
  out.precision(17);
  out << "cap=" << cap << '\n'
      << "command=" << command << '\n'
      << "format=" << to_string(format) << '\n'
      << "from=" << from << '\n'
      << "grid=" << grid << '\n'
      << "halvings=" << halvings << '\n'
      << "j=" << j << '\n'
      << "kernel_cap=" << kernel_cap << '\n'
      << "level=" << level << '\n'
      << "m=" << m << '\n'
      << "mc=" << mc << '\n'
      << "mc_level=" << mc_level << '\n'
      << "mc_reps=" << mc_reps << '\n'
      << "only=" << only << '\n'
      << "p=" << p << '\n'
      << "pgf=" << pgf << '\n'
      << "reps=" << reps << '\n'
      << "reps_scale=" << reps_scale << '\n'
      << "scan_cap=" << scan_cap << '\n'
      << "seed=" << seed << '\n'
      << "step=" << step << '\n'
      << "step_cap=" << step_cap << '\n'
      << "steps=" << steps << '\n'
      << "to=" << to << '\n'
      << "tol=" << tol << '\n'
      << "z0=" << z0 << '\n';
  return out.str();
}

std::string RunConfig::config_hash() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(canonical())));
  return buf;
}

CookieEnv RunConfig::environment() const {
  if (p.empty()) throw InvalidArgument("no cookie strengths given (use --p or the config key p)");
  auto strengths = parse_strength_list(p);
  const long long cookies = m > 0 ? m : static_cast<long long>(strengths.size());
  return validate_environment(cookies, std::move(strengths));
}

void apply_config_map(RunConfig& c, const std::map<std::string, std::string>& values) {
  using Setter = std::function<void(const std::string&, const std::string&)>;
  const std::map<std::string, Setter> setters{
      {"m", [&](auto& k, auto& v) { c.m = parse_number<long long>(k, v); }},
      {"p", [&](auto&, auto& v) { c.p = v; }},
      {"seed", [&](auto& k, auto& v) {
         c.seed = std::stoull(v, nullptr, 0);
         c.seed_given = true;
         (void)k;
       }},
      {"cap", [&](auto& k, auto& v) { c.cap = parse_number<std::size_t>(k, v); }},
      {"tol", [&](auto& k, auto& v) { c.tol = parse_number<double>(k, v); }},
      {"kernel-cap", [&](auto& k, auto& v) { c.kernel_cap = parse_number<std::size_t>(k, v); }},
      {"j", [&](auto& k, auto& v) { c.j = parse_number<std::size_t>(k, v); }},
      {"pgf", [&](auto& k, auto& v) { c.pgf = parse_bool(k, v); }},
      {"level", [&](auto& k, auto& v) { c.level = parse_number<std::size_t>(k, v); }},
      {"reps", [&](auto& k, auto& v) { c.reps = parse_number<std::size_t>(k, v); }},
      {"step-cap", [&](auto& k, auto& v) { c.step_cap = parse_number<std::uint64_t>(k, v); }},
      {"threads", [&](auto& k, auto& v) { c.threads = parse_number<unsigned>(k, v); }},
      {"steps", [&](auto& k, auto& v) { c.steps = parse_number<std::size_t>(k, v); }},
      {"z0", [&](auto& k, auto& v) { c.z0 = parse_number<std::uint64_t>(k, v); }},
      {"mc", [&](auto& k, auto& v) { c.mc = parse_bool(k, v); }},
      {"mc-level", [&](auto& k, auto& v) { c.mc_level = parse_number<std::size_t>(k, v); }},
      {"mc-reps", [&](auto& k, auto& v) { c.mc_reps = parse_number<std::size_t>(k, v); }},
      {"grid", [&](auto&, auto& v) { c.grid = v; }},
      {"from", [&](auto& k, auto& v) { c.from = parse_number<double>(k, v); }},
      {"to", [&](auto& k, auto& v) { c.to = parse_number<double>(k, v); }},
      {"step", [&](auto& k, auto& v) { c.step = parse_number<double>(k, v); }},
      {"halvings", [&](auto& k, auto& v) { c.halvings = parse_number<int>(k, v); }},
      {"scan-cap", [&](auto& k, auto& v) { c.scan_cap = parse_number<std::size_t>(k, v); }},
      {"reps-scale", [&](auto& k, auto& v) { c.reps_scale = parse_number<double>(k, v); }},
      {"only", [&](auto&, auto& v) { c.only = v; }},
      {"out", [&](auto&, auto& v) { c.out_dir = v; }},
      {"format", [&](auto& k, auto& v) {
         if (v != "csv" && v != "json") throw InvalidArgument("config key '" + k + "': format must be csv or json");
         c.format_text = v;
       }},
      {"output", [&](auto&, auto& v) { c.output = v; }},
      {"stamp", [&](auto& k, auto& v) { c.stamp = parse_bool(k, v); }},
  };
  for (const auto& [key, value] : values) {
    const auto it = setters.find(key);
    if (it == setters.end()) throw InvalidArgument("unknown config key '" + key + "'");
    it->second(key, value);
  }
}

std::vector<double> parse_grid(const std::string& text) {
  if (text.find(':') != std::string::npos) {
    double a = 0, b = 0, h = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    in >> a >> c1 >> b >> c2 >> h;
    if (!in || c1 != ':' || c2 != ':' || !(h > 0.0) || b < a) {
      throw InvalidArgument("grid must look like from:to:step with step > 0");
    }
    std::vector<double> out;
    const auto n = static_cast<long long>(std::floor((b - a) / h + 1e-9));
    for (long long i = 0; i <= n; ++i) out.push_back(a + static_cast<double>(i) * h);
    return out;
  }
  return parse_strength_list(text);
}

}  // namespace cookie::cli
