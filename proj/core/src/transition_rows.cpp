#include "cookie/transition_rows.hpp"

#include <algorithm>

#include "cookie/errors.hpp"
#include "cookie/kernel.hpp"

namespace cookie {

namespace {

// Below this an entry only feeds denormals into the row recurrence.
constexpr double kFlushBelow = 1e-300;

struct Extent {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

Extent significant_extent(const std::vector<double>& w, double prune) {
  const double peak = *std::max_element(w.begin(), w.end());
  const double floor = peak * prune;
  Extent e{0, 0};
  std::size_t k = 0;
  while (k < w.size() && !(w[k] >= floor && w[k] > 0.0)) ++k;
  e.lo = k < w.size() ? k : 0;
  std::size_t h = w.size();
  while (h > e.lo + 1 && !(w[h - 1] >= floor && w[h - 1] > 0.0)) --h;
  e.hi = h > 0 ? h - 1 : 0;
  if (e.hi < e.lo) e.hi = e.lo;
  return e;
}

}  // namespace

BandedRows::BandedRows(const CookieEnv& env, std::size_t cap, double prune) : cap_(cap) {
  if (!(prune >= 0.0 && prune < 1.0)) throw InvalidArgument("prune threshold must lie in [0, 1)");
  const std::size_t m = env.cookies();
  const std::size_t n = cap + 1;
  std::vector<Extent> extent(n);
  std::vector<double> row_mass(n, 0.0);
  lo_.assign(n, 0);
  rows_.assign(n, {});
  overflow_.assign(n, 0.0);

  // Rows below M-1 come straight from the DP; rows from M-1 on follow
  // A_j = A_{j-1} + Geom(1/2), i.e. q(k) = p(k)/2 + q(k-1)/2.
  std::vector<std::vector<double>> dense(std::min(n, m));
  for (std::size_t j = 0; j < std::min(n, m); ++j) {
    DistTable t = a_distribution(env, j, cap);
    dense[j] = std::move(t.atoms);
  }
  auto store = [&](std::size_t j, const std::vector<double>& w) {
    extent[j] = significant_extent(w, prune);
    double kept = 0.0;
    for (double v : w) kept += v;
    row_mass[j] = kept;
  };
  for (std::size_t j = 0; j < dense.size(); ++j) store(j, dense[j]);

  // Monotone envelope needs every extent first, so rows from M on are
  // generated twice: once for extents, once for storage. The recurrence is
  // O(cap) per row, cheap next to elimination.
  std::vector<double> w;
  if (n > m) {
    w = dense[m - 1];
    for (std::size_t j = m; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        acc = 0.5 * w[k] + 0.5 * acc;
        if (acc < kFlushBelow) acc = 0.0;
        w[k] = acc;
      }
      store(j, w);
    }
  }

  std::vector<std::size_t> lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    lo[j] = extent[j].lo;
    hi[j] = extent[j].hi;
  }
  for (std::size_t j = n - 1; j-- > 0;) lo[j] = std::min(lo[j], lo[j + 1]);
  for (std::size_t j = 1; j < n; ++j) hi[j] = std::max(hi[j], hi[j - 1]);
  // Elimination reads column j of row j from the left band only; keep the
  // diagonal inside each band.
  for (std::size_t j = 0; j < n; ++j) {
    lo[j] = std::min(lo[j], j);
    hi[j] = std::max(hi[j], j);
  }
  for (std::size_t j = n - 1; j-- > 0;) lo[j] = std::min(lo[j], lo[j + 1]);
  for (std::size_t j = 1; j < n; ++j) hi[j] = std::max(hi[j], hi[j - 1]);

  auto copy_band = [&](std::size_t j, const std::vector<double>& src) {
    lo_[j] = lo[j];
    rows_[j].assign(src.begin() + static_cast<std::ptrdiff_t>(lo[j]),
                    src.begin() + static_cast<std::ptrdiff_t>(hi[j]) + 1);
    const double peak = *std::max_element(src.begin(), src.end());
    for (auto& v : rows_[j]) {
      if (v < peak * prune) v = 0.0;
    }
    overflow_[j] = std::max(0.0, 1.0 - row_mass[j]);
  };
  for (std::size_t j = 0; j < dense.size(); ++j) copy_band(j, dense[j]);
  if (n > m) {
    w = dense[m - 1];
    for (std::size_t j = m; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        acc = 0.5 * w[k] + 0.5 * acc;
        if (acc < kFlushBelow) acc = 0.0;
        w[k] = acc;
      }
      copy_band(j, w);
    }
  }
}

std::size_t BandedRows::stored_entries() const noexcept {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.size();
  return total;
}

double push_forward(const BandedRows& rows, std::span<const double> x, std::span<double> out) {
  const std::size_t n = rows.cap() + 1;
  if (x.size() != n || out.size() != n) throw LengthMismatch("push_forward expects cap + 1 entries");
  std::fill(out.begin(), out.end(), 0.0);
  double lost = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double xj = x[j];
    if (xj == 0.0) continue;
    const auto band = rows.band(j);
    double* dst = out.data() + rows.lo(j);
    for (std::size_t i = 0; i < band.size(); ++i) dst[i] += xj * band[i];
    lost += xj * rows.overflow(j);
  }
  return lost;
}

}  // namespace cookie
