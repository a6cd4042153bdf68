#pragma once

#include <span>
#include <vector>

#include "fflab/roots.hpp"

namespace fflab {

// Finite free information quantities of a root vector. All logarithms are natural.
//
// Degenerate inputs: when two roots coincide, fisher() returns +inf and
// entropy()/log_discriminant() return -inf (entropy_power() returns 0). Those
// sentinels are the degenerate flag; callers test with std::isinf. score()
// has no finite sentinel and throws RepeatedRoot instead.

// Entry i is sum_{j != i} 1 / (alpha_i - alpha_j). n = 1 gives (0).
std::vector<double> score(const RootVector& alpha);

// Phi_n = (1/n) || (2/(n-1)) score ||^2. Phi_1 = 0 by convention.
double fisher(const RootVector& alpha);

// chi_n = (2 / (n(n-1))) sum_{i<j} log|alpha_i - alpha_j|. Requires n >= 2.
double entropy(const RootVector& alpha);

// exp(2 chi_n).
double entropy_power(const RootVector& alpha);

// log Disc = sum_{i<j} 2 log|alpha_i - alpha_j| = n(n-1) chi_n, summed in log space.
double log_discriminant(const RootVector& alpha);

// sum_{k=1}^{n} k log k
double sum_k_log_k(int n);

// chi_n of the unit-variance Hermite polynomial in closed form:
//   -1/2 log(n-1) + (1/(n(n-1))) sum_{k=1}^{n} k log k.   Requires n >= 2.
double hermite_entropy(int n);

// C_n = chi_n[H_n normalized] - chi_{n-1}[H_{n-1} normalized], closed form:
//   1/2 log((n-2)/(n-1)) + log(n)/(n-1) - 2/(n(n-1)(n-2)) sum_{k=1}^{n-1} k log k.
// Requires n >= 3. Always negative.
double c_constant(int n);

// log Disc of the physicists' Hermite polynomial (leading coefficient 2^n),
//   Disc = a^{2(n-1)} prod_{i<j} (r_i - r_j)^2 = 2^{3n(n-1)/2} prod_{k=1}^{n} k^k.
double physicist_hermite_log_disc(int n);

}  // namespace fflab
