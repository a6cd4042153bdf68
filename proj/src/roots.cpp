#include "fflab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "wide.hpp"

namespace fflab {

RootVector::RootVector(std::vector<double> values) : v_(std::move(values)) {
  for (double x : v_)
    if (!std::isfinite(x)) throw std::invalid_argument("root vector entries must be finite");
  std::sort(v_.begin(), v_.end(), std::greater<>());
}

RootVector real_roots(const Polynomial& p, double tol) {
  if (p.degree() < 1) throw std::invalid_argument("real_roots needs degree >= 1");
  return wide::real_roots(wide::promote(p.coeffs()), std::numeric_limits<double>::epsilon(), tol);
}

bool is_interlacing(const RootVector& outer, const RootVector& inner, double slack) {
  const std::size_t n = outer.size();
  if (!(inner.size() == n || inner.size() + 1 == n))
    throw std::invalid_argument("interlacing needs lengths (n, n) or (n, n-1)");
  // Merge into the alternating chain outer_1, inner_1, outer_2, inner_2, ...
  std::vector<double> chain;
  chain.reserve(n + inner.size());
  for (std::size_t i = 0; i < n; ++i) {
    chain.push_back(outer[i]);
    if (i < inner.size()) chain.push_back(inner[i]);
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (chain[i] - chain[i + 1] < -slack) return false;
  return true;
}

double min_gap(const RootVector& alpha) {
  if (alpha.size() < 2) throw std::invalid_argument("min_gap needs at least two roots");
  double g = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < alpha.size(); ++i) g = std::min(g, alpha[i] - alpha[i + 1]);
  return g;
}

std::vector<double> centered(std::span<const double> alpha) {
  if (alpha.empty()) throw std::invalid_argument("centered needs at least one entry");
  double s = 0.0;
  for (double x : alpha) s += x;
  const double m1 = s / static_cast<double>(alpha.size());
  std::vector<double> out(alpha.begin(), alpha.end());
  for (double& x : out) x -= m1;
  return out;
}

}  // namespace fflab
