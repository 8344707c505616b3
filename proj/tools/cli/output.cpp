#include "output.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <iostream>

#include "cookie/errors.hpp"

#ifndef COOKIE_VERSION
#define COOKIE_VERSION "0.0.0"
#endif

namespace cookie::cli {

Sink::Sink(const std::string& path) : out_(&std::cout) {
  if (path.empty() || path == "-") return;
  file_ = std::make_unique<std::ofstream>(path);
  if (!*file_) throw InvalidArgument("cannot open output file '" + path + "'");
  out_ = file_.get();
}

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string seed_hex(std::uint64_t seed) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%llX", static_cast<unsigned long long>(seed));
  return buf;
}

}  // namespace

nlohmann::json header_json(const RunConfig& config) {
  nlohmann::json h;
  h["schema"] = kSchemaVersion;
  h["version"] = COOKIE_VERSION;
  h["command"] = config.command;
  h["config_hash"] = config.config_hash();
  h["seed"] = seed_hex(config.seed);
  if (config.stamp) h["timestamp"] = utc_timestamp();
  return h;
}

void write_csv_header(std::ostream& out, const RunConfig& config) {
  const nlohmann::json h = header_json(config);
  for (const auto& [key, value] : h.items()) {
    out << "# " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

void write_json(std::ostream& out, const RunConfig& config, const nlohmann::json& result) {
  nlohmann::json doc = header_json(config);
  doc["result"] = result;
  out << doc.dump(2) << '\n';
}

nlohmann::json number_or_inf(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return nullptr;
  return v;
}

nlohmann::json to_json(const McEstimate& e) {
  return {{"mean", e.mean}, {"stderr", e.std_error}, {"reps", e.reps}, {"seed", e.seed}};
}

nlohmann::json to_json(const SpeedReport& r) {
  nlohmann::json j;
  j["alpha"] = r.alpha;
  j["label"] = std::string(to_string(r.label.phase));
  j["near_critical"] = r.label.near_critical;
  j["exactly_critical"] = r.label.exactly_critical;
  j["v_route_a"] = r.v_route_a ? nlohmann::json(*r.v_route_a) : nlohmann::json(nullptr);
  j["v_route_b"] = r.v_route_b ? nlohmann::json(*r.v_route_b) : nlohmann::json(nullptr);
  j["v_mc"] = r.v_mc ? to_json(*r.v_mc) : nlohmann::json(nullptr);
  j["e_z_inf"] = r.e_z_inf ? number_or_inf(*r.e_z_inf) : nlohmann::json(nullptr);
  j["b2_at_1"] = r.b2_at_1 ? nlohmann::json(*r.b2_at_1) : nlohmann::json(nullptr);
  j["d2"] = r.b2_at_1 ? nlohmann::json(*r.b2_at_1 / 2.0) : nlohmann::json(nullptr);
  j["g0"] = r.g0 ? nlohmann::json(*r.g0) : nlohmann::json(nullptr);
  j["warnings"] = r.warnings;
  return j;
}

}  // namespace cookie::cli
