#pragma once

#include <span>
#include <vector>

#include "fflab/polynomial.hpp"

namespace fflab {

// Real root vector kept sorted in descending order (alpha_1 >= ... >= alpha_n).
class RootVector {
 public:
  RootVector() = default;
  // Sorts descending; entries must be finite.
  explicit RootVector(std::vector<double> values);
  RootVector(std::initializer_list<double> values) : RootVector(std::vector<double>(values)) {}

  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  double operator[](std::size_t i) const { return v_[i]; }
  std::span<const double> values() const { return v_; }
  operator std::span<const double>() const { return v_; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  friend bool operator==(const RootVector&, const RootVector&) = default;

 private:
  std::vector<double> v_;
};

inline constexpr double kDefaultRootTol = 1e-12;
// Imaginary parts below kImagDiscard * (1 + |root|) are treated as round-off.
inline constexpr double kImagDiscard = 1e-7;
// Root vectors with min_gap below this are degenerate for differentiable-map operations.
inline constexpr double kDegenerateGap = 1e-6;

// Real roots of a monic real-rooted polynomial, descending.
//
// Starting points are the eigenvalues of the balanced companion matrix; they are
// refined by simultaneous (Aberth) iteration on the coefficients in quad precision,
// so the only error left is the conditioning of the double coefficients themselves.
// tol bounds the final relative step of every root. A root whose imaginary part
// stays above kImagDiscard * (1 + |root|) is still accepted when p vanishes to
// rounding level at its real part (a numerically multiple real root); otherwise
// NonRealRooted.
RootVector real_roots(const Polynomial& p, double tol = kDefaultRootTol);

// Interlacing test. Same length n: outer_1 >= inner_1 >= outer_2 >= ... >= outer_n >= inner_n.
// Length n vs n-1 (Rolle): outer_1 >= inner_1 >= outer_2 >= ... >= inner_{n-1} >= outer_n.
// Each inequality may be violated by at most slack.
bool is_interlacing(const RootVector& outer, const RootVector& inner, double slack = 1e-10);

// min_i (alpha_i - alpha_{i+1}). Requires n >= 2.
double min_gap(const RootVector& alpha);

// alpha - m1(alpha) * 1.
std::vector<double> centered(std::span<const double> alpha);

}  // namespace fflab
