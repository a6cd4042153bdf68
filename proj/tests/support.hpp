#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <span>
#include <vector>

#include "fflab/polynomial.hpp"
#include "fflab/roots.hpp"

namespace testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

// Gaussian roots with every gap at least min_gap.
inline fflab::RootVector random_roots(int n, double min_gap = 1e-2) {
  std::normal_distribution<double> normal;
  for (;;) {
    std::vector<double> r(static_cast<std::size_t>(n));
    for (double& x : r) x = normal(rng());
    fflab::RootVector v(std::move(r));
    if (n < 2 || fflab::min_gap(v) >= min_gap) return v;
  }
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

// max_k |x_k - y_k| / max(1, max_k |y_k|)
inline double rel_diff(std::span<const double> x, std::span<const double> y) {
  double scale = 1.0, d = 0.0;
  for (std::size_t k = 0; k < y.size(); ++k) {
    scale = std::max(scale, std::fabs(y[k]));
    d = std::max(d, std::fabs(x[k] - y[k]));
  }
  return x.size() == y.size() ? d / scale : INFINITY;
}

inline double coeff_diff(const fflab::Polynomial& p, const fflab::Polynomial& q) {
  return rel_diff(p.coeffs(), q.coeffs());
}

}  // namespace testing
