#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cookie/env.hpp"

namespace cookie {

inline constexpr double kDefaultPruneRelative = 1e-18;

/// Rows 0..cap of the migration kernel restricted to columns 0..cap, stored
/// as bands [lo(j), hi(j)].
///
/// Both lo and hi are nondecreasing in j, which keeps elimination fill-in
/// inside the band. Entries below prune * (row max) are dropped before the
/// band is chosen and stored as zeros if the monotone envelope keeps them.
class BandedRows {
 public:
  BandedRows() = default;
  BandedRows(const CookieEnv& env, std::size_t cap, double prune = kDefaultPruneRelative);

  std::size_t cap() const noexcept { return cap_; }
  std::size_t lo(std::size_t j) const noexcept { return lo_[j]; }
  std::size_t hi(std::size_t j) const noexcept { return lo_[j] + rows_[j].size() - 1; }

  double at(std::size_t j, std::size_t k) const noexcept {
    if (k < lo_[j] || k > hi(j)) return 0.0;
    return rows_[j][k - lo_[j]];
  }

  std::span<const double> band(std::size_t j) const noexcept { return rows_[j]; }
  std::span<double> band(std::size_t j) noexcept { return rows_[j]; }

  /// P{A_j > cap}; mass the truncation discards from row j.
  double overflow(std::size_t j) const noexcept { return overflow_[j]; }

  /// Total stored entries, a proxy for memory use.
  std::size_t stored_entries() const noexcept;

 private:
  std::size_t cap_ = 0;
  std::vector<std::size_t> lo_;
  std::vector<std::vector<double>> rows_;
  std::vector<double> overflow_;
};

/// One step of the truncated chain: out_k = sum_j x_j P(j, k) for k <= cap.
/// Returns the mass sent beyond the cap.
double push_forward(const BandedRows& rows, std::span<const double> x, std::span<double> out);

}  // namespace cookie
