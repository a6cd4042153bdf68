#include "fflab/jacobian.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "fflab/errors.hpp"
#include "fflab/finfree.hpp"

namespace fflab {

namespace {

void require_simple(const RootVector& alpha, const char* what) {
  if (alpha.size() < 2) throw std::invalid_argument(std::string(what) + " needs n >= 2");
  if (min_gap(alpha) <= kDegenerateGap) throw DegenerateInput(std::string(what) + ": roots closer than 1e-6");
}

void require_step(double h) {
  if (!(h >= 1e-8 && h <= 1e-4)) throw std::invalid_argument("finite-difference step must lie in [1e-8, 1e-4]");
}

void require_stencil_fits(const RootVector& v, double h) {
  if (v.size() >= 2 && !(2.0 * h < min_gap(v)))
    throw PerturbationCrossing("finite-difference step reorders the perturbed roots");
}

// Reciprocal distances 1/(delta_i - alpha_j) and the normalizers Z_i.
struct CauchyRows {
  DenseMatrix inv;
  std::vector<double> z;
};

CauchyRows cauchy_rows(const RootVector& alpha) {
  const RootVector delta = omega_der(alpha);
  const std::size_t n = alpha.size();
  CauchyRows c{DenseMatrix(n - 1, n), std::vector<double>(n - 1, 0.0)};
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double r = 1.0 / (delta[i] - alpha[j]);
      c.inv(i, j) = r;
      c.z[i] += r * r;
    }
  return c;
}

RootVector perturbed(const RootVector& v, std::size_t j, double dx) {
  std::vector<double> w(v.begin(), v.end());
  w[j] += dx;
  return RootVector(std::move(w));
}

void check_tracking(const RootVector& base, const RootVector& moved) {
  if (base.size() < 2) return;
  const double half_gap = 0.5 * min_gap(base);
  for (std::size_t i = 0; i < base.size(); ++i)
    if (!(std::fabs(moved[i] - base[i]) < half_gap))
      throw PerturbationCrossing("output roots moved too far to be matched by order");
}

}  // namespace

DenseMatrix gauss_lucas(const RootVector& alpha) {
  require_simple(alpha, "gauss_lucas");
  const CauchyRows c = cauchy_rows(alpha);
  DenseMatrix e(c.inv.rows(), c.inv.cols());
  for (std::size_t i = 0; i < e.rows(); ++i)
    for (std::size_t j = 0; j < e.cols(); ++j) e(i, j) = c.inv(i, j) * c.inv(i, j) / c.z[i];
  return e;
}

DenseMatrix differentiator(const RootVector& alpha) {
  require_simple(alpha, "differentiator");
  const CauchyRows c = cauchy_rows(alpha);
  DenseMatrix p(c.inv.rows(), c.inv.cols());
  for (std::size_t i = 0; i < p.rows(); ++i) {
    const double s = 1.0 / std::sqrt(c.z[i]);
    for (std::size_t j = 0; j < p.cols(); ++j) p(i, j) = c.inv(i, j) * s;
  }
  return p;
}

DenseMatrix jacobian_der_fd(const RootVector& alpha, double h, Exec exec) {
  require_step(h);
  require_simple(alpha, "jacobian_der_fd");
  require_stencil_fits(alpha, h);
  const std::size_t n = alpha.size();
  DenseMatrix jac(n - 1, n);
  for_each_index(n, exec, [&](std::size_t j) {
    const RootVector up = omega_der(perturbed(alpha, j, h));
    const RootVector down = omega_der(perturbed(alpha, j, -h));
    for (std::size_t i = 0; i + 1 < n; ++i) jac(i, j) = (up[i] - down[i]) / (2.0 * h);
  });
  return jac;
}

DenseMatrix jacobian_conv_fd(const RootVector& alpha, const RootVector& beta, double h, Exec exec) {
  require_step(h);
  const std::size_t n = alpha.size();
  if (beta.size() != n || n == 0) throw std::invalid_argument("jacobian_conv_fd needs equal lengths n >= 1");
  const bool alpha_simple = n < 2 || min_gap(alpha) > kDegenerateGap;
  const bool beta_simple = n < 2 || min_gap(beta) > kDegenerateGap;
  if (!alpha_simple && !beta_simple) throw DegenerateInput("jacobian_conv_fd needs alpha or beta simple");
  require_stencil_fits(alpha, h);
  require_stencil_fits(beta, h);

  const RootVector gamma = omega_conv(alpha, beta);
  DenseMatrix jac(n, 2 * n);
  for_each_index(2 * n, exec, [&](std::size_t col) {
    const bool in_alpha = col < n;
    const std::size_t j = in_alpha ? col : col - n;
    const RootVector& base = in_alpha ? alpha : beta;
    const RootVector& other = in_alpha ? beta : alpha;
    const RootVector up = in_alpha ? omega_conv(perturbed(base, j, h), other) : omega_conv(other, perturbed(base, j, h));
    const RootVector down =
        in_alpha ? omega_conv(perturbed(base, j, -h), other) : omega_conv(other, perturbed(base, j, -h));
    check_tracking(gamma, up);
    check_tracking(gamma, down);
    for (std::size_t i = 0; i < n; ++i) jac(i, col) = (up[i] - down[i]) / (2.0 * h);
  });
  return jac;
}

}  // namespace fflab
