#pragma once

#include <fstream>
#include <iosfwd>
#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "cookie/chain.hpp"
#include "run_config.hpp"

namespace cookie::cli {

inline constexpr int kSchemaVersion = 1;

/// Destination chosen by --output (stdout when empty).
class Sink {
 public:
  explicit Sink(const std::string& path);
  std::ostream& stream() { return *out_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_;
};

/// Header block: schema, version, command, config hash, seed and, with
/// --stamp, a UTC timestamp.
nlohmann::json header_json(const RunConfig& config);

/// Same header as '# key: value' comment lines for CSV bodies.
void write_csv_header(std::ostream& out, const RunConfig& config);

/// Writes {header..., "result": result} with sorted keys.
void write_json(std::ostream& out, const RunConfig& config, const nlohmann::json& result);

nlohmann::json to_json(const SpeedReport& report);
nlohmann::json to_json(const McEstimate& estimate);

/// JSON cannot hold infinity; it is written as the string "inf".
nlohmann::json number_or_inf(double v);

}  // namespace cookie::cli
