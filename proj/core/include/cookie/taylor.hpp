#pragma once

#include <array>
#include <cstddef>

namespace cookie {

/// Truncated power series c_0 + c_1 x + ... + c_{N-1} x^{N-1} around a point.
/// Used to differentiate p.g.f. expressions at s = 1 exactly (x = s - 1).
template <std::size_t N>
struct Series {
  std::array<double, N> c{};

  static constexpr std::size_t size() noexcept { return N; }

  static Series constant(double v) {
    Series s;
    s.c[0] = v;
    return s;
  }

  /// (1 + x)^f for integer f >= 0.
  static Series one_plus_x_pow(std::size_t f) {
    Series s;
    double binom = 1.0;
    for (std::size_t i = 0; i < N && i <= f; ++i) {
      s.c[i] = binom;
      binom = binom * static_cast<double>(f - i) / static_cast<double>(i + 1);
    }
    return s;
  }

  /// (1 - x)^(-r) = sum_i C(r + i - 1, i) x^i.
  static Series one_minus_x_neg_pow(std::size_t r) {
    Series s;
    double binom = 1.0;
    for (std::size_t i = 0; i < N; ++i) {
      s.c[i] = (r == 0) ? (i == 0 ? 1.0 : 0.0) : binom;
      binom = binom * static_cast<double>(r + i) / static_cast<double>(i + 1);
    }
    return s;
  }

  /// k-th derivative at the expansion point.
  double derivative(std::size_t k) const {
    double fact = 1.0;
    for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<double>(i);
    return c[k] * fact;
  }

  Series& operator+=(const Series& o) {
    for (std::size_t i = 0; i < N; ++i) c[i] += o.c[i];
    return *this;
  }
  Series& operator-=(const Series& o) {
    for (std::size_t i = 0; i < N; ++i) c[i] -= o.c[i];
    return *this;
  }
  Series& operator*=(double v) {
    for (auto& x : c) x *= v;
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, double v) { return a *= v; }
  friend Series operator*(double v, Series a) { return a *= v; }

  friend Series operator*(const Series& a, const Series& b) {
    Series out;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; i + j < N; ++j) out.c[i + j] += a.c[i] * b.c[j];
    }
    return out;
  }

  /// 1 / a, requires a.c[0] != 0.
  friend Series reciprocal(const Series& a) {
    Series out;
    out.c[0] = 1.0 / a.c[0];
    for (std::size_t n = 1; n < N; ++n) {
      double acc = 0.0;
      for (std::size_t k = 1; k <= n; ++k) acc += a.c[k] * out.c[n - k];
      out.c[n] = -acc / a.c[0];
    }
    return out;
  }
};

using Series5 = Series<6>;

}  // namespace cookie
