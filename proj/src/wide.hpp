#pragma once

// Quad-precision coefficient arithmetic for the coefficient -> root path.
// Internal to the library; the public API stays in double.

#include <boost/multiprecision/float128.hpp>
#include <span>
#include <vector>

#include "fflab/roots.hpp"

namespace fflab::wide {

using Real = boost::multiprecision::float128;

// a_0..a_n in the alternating-sign convention, as in Polynomial.
using Coeffs = std::vector<Real>;

Coeffs promote(std::span<const double> a);
Coeffs from_roots(std::span<const double> alpha);
Coeffs convolve(const Coeffs& a, const Coeffs& b);
// sqrt(t)_* H_n
Coeffs scaled_hermite(int n, double t);

// Real roots of the monic polynomial a, descending.
// coef_eps is the relative precision the coefficients carry; it sets how close to
// zero p must be at the real part of a stubborn complex pair (a numerically
// multiple root) for the pair to be accepted as real.
RootVector real_roots(const Coeffs& a, double coef_eps, double tol);

}  // namespace fflab::wide
