#pragma once

#include "fflab/dense_matrix.hpp"
#include "fflab/execution.hpp"
#include "fflab/roots.hpp"

namespace fflab {

inline constexpr double kDefaultFdStep = 1e-6;

// Gauss-Lucas matrix E[alpha|delta], the Jacobian of omega_der at a simple alpha:
//   E_ij = 1 / (Z_i (delta_i - alpha_j)^2),  Z_i = sum_j 1 / (delta_i - alpha_j)^2,
// with delta = omega_der(alpha). (n-1) x n, row-stochastic, E alpha = delta.
// Throws DegenerateInput when min_gap(alpha) <= kDegenerateGap.
DenseMatrix gauss_lucas(const RootVector& alpha);

// Entrywise square root of the Gauss-Lucas matrix with signs kept:
//   P_ij = 1 / (sqrt(Z_i) (delta_i - alpha_j)).
// Orthonormal rows, P 1 = 0, and char(P D P^T) = (1/n) char(D)' for diagonal D.
DenseMatrix differentiator(const RootVector& alpha);

// Central-difference Jacobian of omega_der, (n-1) x n.
// h must lie in [1e-8, 1e-4] and be below half the minimum gap (else PerturbationCrossing).
DenseMatrix jacobian_der_fd(const RootVector& alpha, double h = kDefaultFdStep, Exec exec = Exec::parallel);

// Central-difference Jacobian of omega_conv, n x 2n: columns [0, n) differentiate in
// alpha, columns [n, 2n) in beta. Each n x n block is doubly stochastic.
// Output roots are tracked by sorted order; a stencil that moves any output root by
// more than half the output minimum gap throws PerturbationCrossing.
DenseMatrix jacobian_conv_fd(const RootVector& alpha, const RootVector& beta, double h = kDefaultFdStep,
                             Exec exec = Exec::parallel);

}  // namespace fflab
