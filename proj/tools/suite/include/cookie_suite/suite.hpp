#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cookie/rng.hpp"

namespace cookie::suite {

/// Cap at which the residual and expansion tolerances are pinned.
inline constexpr std::size_t kReferenceCap = 8192;

enum class Status { Pass, Fail, Degraded };

std::string_view to_string(Status s) noexcept;

struct CriterionResult {
  int id = 0;
  std::string title;
  Status status = Status::Pass;
  /// One line of the key numbers behind the verdict.
  std::string detail;
  /// Extra lines worth printing after the verdict.
  std::vector<std::string> notes;
  double seconds = 0.0;
  /// The check threw instead of reaching a verdict; status is then Fail.
  bool errored = false;
};

struct SuiteConfig {
  std::uint64_t seed = kDefaultSeed;
  std::size_t cap = kReferenceCap;
  /// Cap for each point of the critical scan.
  std::size_t scan_cap = 4096;
  /// Multiplies every replicate count (0.1 gives the reduced suite).
  double reps_scale = 1.0;
  unsigned threads = 0;
  /// Criteria to run; empty runs all of 1..14.
  std::vector<int> only;
  /// When non-empty, per-criterion CSV artifacts are written here.
  std::string artifact_dir;
};

using Reporter = std::function<void(const CriterionResult&)>;

/// Runs the acceptance criteria in order and reports each as it finishes.
std::vector<CriterionResult> run_suite(const SuiteConfig& config, const Reporter& report = {});

/// True when no criterion failed (degraded counts as not failed).
bool all_passed(const std::vector<CriterionResult>& results) noexcept;

}  // namespace cookie::suite
