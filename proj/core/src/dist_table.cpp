#include "cookie/dist_table.hpp"

#include <algorithm>
#include <cmath>

namespace cookie {

double DistTable::atom_mass() const noexcept {
  double sum = 0.0;
  for (double a : atoms) sum += a;
  return sum;
}

double DistTable::total_mass() const noexcept { return atom_mass() + residual; }

double DistTable::mean() const noexcept {
  double sum = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) sum += static_cast<double>(i) * atoms[i];
  return sum;
}

double DistTable::survival(std::size_t n) const noexcept {
  double sum = residual;
  for (std::size_t i = atoms.size(); i-- > n + 1;) sum += atoms[i];
  return sum;
}

DistTable point_mass(std::size_t at) {
  DistTable t;
  t.atoms.assign(at + 1, 0.0);
  t.atoms[at] = 1.0;
  return t;
}

double tv_distance(const DistTable& a, const DistTable& b) noexcept {
  const std::size_t n = std::max(a.atoms.size(), b.atoms.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += std::abs(a.at(i) - b.at(i));
  return 0.5 * sum;
}

DistTable convolve(const DistTable& a, const DistTable& b, std::size_t cap) {
  DistTable out;
  out.atoms.assign(cap + 1, 0.0);
  double kept = 0.0;
  for (std::size_t i = 0; i < a.atoms.size() && i <= cap; ++i) {
    if (a.atoms[i] == 0.0) continue;
    const std::size_t upper = std::min(b.atoms.size(), cap - i + 1);
    for (std::size_t k = 0; k < upper; ++k) out.atoms[i + k] += a.atoms[i] * b.atoms[k];
  }
  for (double v : out.atoms) kept += v;
  out.residual = std::max(0.0, a.total_mass() * b.total_mass() - kept);
  out.truncated = a.truncated || b.truncated;
  return out;
}

}  // namespace cookie
