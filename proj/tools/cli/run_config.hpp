#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cookie/env.hpp"
#include "cookie/rng.hpp"

namespace cookie::cli {

enum class Format { Csv, Json };

/// Every knob of every command. Unused knobs keep their defaults and still
/// enter the config hash, so the hash identifies the full run.
struct RunConfig {
  std::string command;
  long long m = 0;
  std::string p;
  std::uint64_t seed = kDefaultSeed;
  bool seed_given = false;

  std::size_t cap = 8192;
  double tol = 1e-12;
  std::size_t kernel_cap = 4096;
  std::size_t j = 0;
  bool pgf = false;

  std::size_t level = 10'000;
  std::size_t reps = 200;
  std::uint64_t step_cap = 100'000'000;
  unsigned threads = 0;

  std::size_t steps = 1000;
  std::uint64_t z0 = 0;

  bool mc = false;
  std::size_t mc_level = 100'000;
  std::size_t mc_reps = 200;

  std::string grid = "0.05:0.95:0.05";
  double from = 0.80;
  double to = 0.95;
  double step = 0.005;
  int halvings = 3;
  std::size_t scan_cap = 4096;

  double reps_scale = 1.0;
  std::string only;
  std::string out_dir = "suite-out";

  /// Raw --format value; empty selects the command's default.
  std::string format_text;
  Format format = Format::Json;
  std::string output;
  bool stamp = false;

  /// Sorted key=value lines of every knob; the input to config_hash().
  std::string canonical() const;
  /// FNV-1a 64 of canonical(), as 16 hex digits.
  std::string config_hash() const;

  CookieEnv environment() const;
};

/// Applies key=value pairs from a config file. Unknown keys throw.
void apply_config_map(RunConfig& config, const std::map<std::string, std::string>& values);

/// "a:b:h" (inclusive range) or "x,y,z".
std::vector<double> parse_grid(const std::string& text);

std::string to_string(Format f);

}  // namespace cookie::cli
