#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <span>
#include <vector>

#include "fflab/polynomial.hpp"
#include "fflab/roots.hpp"

namespace fflab {

using ExactRational = boost::multiprecision::cpp_rational;

// Weight of a_i b_j in coefficient c_{i+j} of the degree-n finite free convolution:
//   w(n,i,j) = (n-i)! (n-j)! / (n! (n-i-j)!),
// evaluated as a product of j ratios (n-i-m)/(n-m).
double convolution_weight(int n, int i, int j);

// p boxplus_n q. Both must have the same degree n >= 1.
//   c_k = sum_{i+j=k} w(n,i,j) a_i b_j
Polynomial convolve(const Polynomial& p, const Polynomial& q);

// sum_{i+j=k} w(n,i,j) |a_i| |b_j|: the magnitude of the terms summed into c_k.
// Rounding error in convolve() is relative to this, not to |c_k|.
std::vector<double> convolution_term_scale(const Polynomial& p, const Polynomial& q);

// Exact coefficients a_0..a_n (alternating-sign convention) of
//   (1/n!) sum_{pi in S_n} prod_i (x - alpha_i - beta_{pi(i)})
// by full permutation enumeration in rational arithmetic. Test oracle; n <= 8.
std::vector<ExactRational> convolve_oracle(std::span<const ExactRational> alpha,
                                           std::span<const ExactRational> beta);

// e^{-(t/2) d^2/dx^2} p realized as p boxplus_n sqrt(t)_* H_n. Requires t >= 0.
Polynomial heat_flow(const Polynomial& p, double t);

// The same operator summed directly: sum_{k>=0} (-t/2)^k / k! p^{(2k)}.
Polynomial heat_flow_operator(const Polynomial& p, double t);

// Descending roots of p' where p has roots alpha. Requires n >= 2.
//
// Works from the roots rather than the coefficients: a root of multiplicity m
// contributes m-1 copies of itself, and each gap between consecutive distinct
// values v_g > v_{g+1} holds exactly one zero of sum_h m_h / (x - v_h), found by
// safeguarded Newton inside the bracket.
RootVector omega_der(const RootVector& alpha);

// Descending roots of from_roots(alpha) boxplus_n from_roots(beta).
// The coefficients are formed and solved in quad precision.
RootVector omega_conv(const RootVector& alpha, const RootVector& beta);

// Descending roots of heat_flow(from_roots(alpha), t), also through quad precision.
RootVector heat_flow_roots(const RootVector& alpha, double t);

}  // namespace fflab
