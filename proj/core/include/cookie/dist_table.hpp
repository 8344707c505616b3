#pragma once

#include <cstddef>
#include <vector>

namespace cookie {

inline constexpr double kDefaultResidualTolerance = 1e-12;

/// A probability mass function on {0, .., N} plus the mass that lies beyond N.
struct DistTable {
  std::vector<double> atoms;
  double residual = 0.0;
  /// Set when residual exceeds the tolerance the table was built with.
  bool truncated = false;

  std::size_t support_cap() const noexcept { return atoms.empty() ? 0 : atoms.size() - 1; }
  double at(std::size_t i) const noexcept { return i < atoms.size() ? atoms[i] : 0.0; }

  /// Sum of atoms plus residual; 1 up to rounding for a valid table.
  double total_mass() const noexcept;
  double atom_mass() const noexcept;
  double mean() const noexcept;
  /// P{X > n}, counting the residual.
  double survival(std::size_t n) const noexcept;
};

DistTable point_mass(std::size_t at);

/// Total-variation distance between the atom vectors (residuals ignored).
double tv_distance(const DistTable& a, const DistTable& b) noexcept;

/// Full convolution of two atom vectors, truncated to `cap`; mass pushed past
/// the cap is added to the residual.
DistTable convolve(const DistTable& a, const DistTable& b, std::size_t cap);

}  // namespace cookie
