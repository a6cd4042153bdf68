#include "wide.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "fflab/errors.hpp"

namespace fflab::wide {

namespace {

struct Complex {
  Real re, im;
};

Complex operator+(Complex a, Complex b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(Complex a, Complex b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(Complex a, Complex b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Complex operator/(Complex a, Complex b) {
  const Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Real abs(Complex a) { return boost::multiprecision::sqrt(a.re * a.re + a.im * a.im); }

Real signed_coeff(const Coeffs& a, std::size_t k) { return (k & 1) ? Real(-a[k]) : a[k]; }

// Diagonal similarity scaling by powers of two so row and column norms match.
void balance(Eigen::MatrixXd& A) {
  const Eigen::Index n = A.rows();
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double r = 0.0, c = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::fabs(A(j, i));
        r += std::fabs(A(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / 2.0;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= 2.0;
        c *= 4.0;
      }
      g = r * 2.0;
      while (c > g) {
        f /= 2.0;
        c /= 4.0;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        A.row(i) /= f;
        A.col(i) *= f;
      }
    }
  }
}

// Starting points: eigenvalues of the balanced companion matrix in double.
std::vector<Complex> companion_guesses(const Coeffs& a) {
  const Eigen::Index m = static_cast<Eigen::Index>(a.size()) - 1;
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index k = 1; k <= m; ++k) C(0, k - 1) = -static_cast<double>(signed_coeff(a, static_cast<std::size_t>(k)));
  for (Eigen::Index i = 1; i < m; ++i) C(i, i - 1) = 1.0;
  balance(C);
  Eigen::EigenSolver<Eigen::MatrixXd> es(C, /*computeEigenvectors=*/false);
  std::vector<Complex> z(static_cast<std::size_t>(m));
  if (es.info() == Eigen::Success) {
    for (Eigen::Index i = 0; i < m; ++i) z[static_cast<std::size_t>(i)] = {Real(es.eigenvalues()[i].real()), Real(es.eigenvalues()[i].imag())};
  } else {
    // Rare; fall back to a circle enclosing the roots (Cauchy bound).
    double r = 0.0;
    for (Eigen::Index k = 1; k <= m; ++k) r = std::max(r, std::fabs(static_cast<double>(a[static_cast<std::size_t>(k)])));
    for (Eigen::Index i = 0; i < m; ++i) {
      const std::complex<double> w = std::polar(1.0 + r, 6.283185307179586 * (static_cast<double>(i) + 0.25) / static_cast<double>(m));
      z[static_cast<std::size_t>(i)] = {Real(w.real()), Real(w.imag())};
    }
  }
  // Aberth needs distinct starts; exact multiple roots come out of the eigensolver equal.
  for (std::size_t i = 0; i < z.size(); ++i) {
    const Real bump = Real(1e-9) * (1 + abs(z[i])) * Real(static_cast<double>(i + 1));
    z[i].im += (i & 1) ? bump : Real(-bump);
  }
  return z;
}

// p(z) and p'(z) by Horner.
void horner(const Coeffs& a, Complex z, Complex& p, Complex& d) {
  p = {Real(0), Real(0)};
  d = {Real(0), Real(0)};
  for (std::size_t k = 0; k < a.size(); ++k) {
    d = d * z + p;
    p = p * z + Complex{signed_coeff(a, k), Real(0)};
  }
}

// |p(x)| and sum_k |a_k| |x|^{n-k} at a real point.
std::pair<Real, Real> residual(const Coeffs& a, Real x) {
  Real v = 0, m = 0;
  const Real ax = boost::multiprecision::fabs(x);
  for (std::size_t k = 0; k < a.size(); ++k) {
    const Real c = signed_coeff(a, k);
    v = v * x + c;
    m = m * ax + boost::multiprecision::fabs(c);
  }
  return {boost::multiprecision::fabs(v), m};
}

}  // namespace

Coeffs promote(std::span<const double> a) { return Coeffs(a.begin(), a.end()); }

Coeffs from_roots(std::span<const double> alpha) {
  Coeffs a{Real(1)};
  a.reserve(alpha.size() + 1);
  for (double r : alpha) {
    a.push_back(Real(0));
    for (std::size_t k = a.size() - 1; k >= 1; --k) a[k] += Real(r) * a[k - 1];
  }
  return a;
}

Coeffs convolve(const Coeffs& a, const Coeffs& b) {
  if (a.size() != b.size() || a.size() < 2) throw std::invalid_argument("convolution needs equal degrees >= 1");
  const int n = static_cast<int>(a.size()) - 1;
  Coeffs c(a.size(), Real(0));
  for (int i = 0; i <= n; ++i) {
    Real w = 1;
    for (int j = 0; i + j <= n; ++j) {
      c[static_cast<std::size_t>(i + j)] += w * a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
      w *= Real(n - i - j) / Real(n - j);
    }
  }
  return c;
}

Coeffs scaled_hermite(int n, double t) {
  // H_{k+1} = x H_k - k H_{k-1} in signed coefficients: a'_m = a_m - k b_{m-2}.
  Coeffs prev{Real(1)}, cur{Real(1), Real(0)};
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    Coeffs next(cur.size() + 1, Real(0));
    for (std::size_t m = 0; m < cur.size(); ++m) next[m] = cur[m];
    for (std::size_t m = 0; m < prev.size(); ++m) next[m + 2] -= Real(k) * prev[m];
    prev = std::move(cur);
    cur = std::move(next);
  }
  const Real c = boost::multiprecision::sqrt(Real(t));
  Real ck = 1;
  for (auto& x : cur) {
    x *= ck;
    ck *= c;
  }
  return cur;
}

RootVector real_roots(const Coeffs& input, double coef_eps, double tol) {
  if (input.size() < 2) throw std::invalid_argument("real_roots needs degree >= 1");
  const std::size_t n = input.size() - 1;

  // Exact zero roots come off the constant end.
  std::size_t zeros = 0;
  while (zeros < n && input[n - zeros] == 0) ++zeros;
  const Coeffs a(input.begin(), input.end() - static_cast<std::ptrdiff_t>(zeros));
  const std::size_t m = n - zeros;

  std::vector<double> out(zeros, 0.0);
  if (m == 1) out.push_back(static_cast<double>(a[1]));
  if (m <= 1) return RootVector(std::move(out));

  // Aberth-Ehrlich: cubic convergence at simple roots, all roots updated together.
  std::vector<Complex> z = companion_guesses(a);
  std::vector<Real> last_step(m, Real(1));
  std::vector<bool> done(m, false);
  const Real stop = Real(1e-30);
  for (int it = 0; it < 500; ++it) {
    bool all_done = true;
    for (std::size_t k = 0; k < m; ++k) {
      if (done[k]) continue;
      Complex p, d;
      horner(a, z[k], p, d);
      if (p.re == 0 && p.im == 0) {
        done[k] = true;
        last_step[k] = 0;
        continue;
      }
      const Complex newton = p / d;
      Complex s{Real(0), Real(0)};
      for (std::size_t j = 0; j < m; ++j)
        if (j != k) s = s + Complex{Real(1), Real(0)} / (z[k] - z[j]);
      const Complex w = newton / (Complex{Real(1), Real(0)} - newton * s);
      z[k] = z[k] - w;
      last_step[k] = abs(w) / (1 + abs(z[k]));
      if (last_step[k] <= stop) done[k] = true;
      else all_done = false;
    }
    if (all_done) break;
  }

  for (std::size_t k = 0; k < m; ++k) {
    const Real re = z[k].re;
    const double x = static_cast<double>(re);
    const double im = std::fabs(static_cast<double>(z[k].im));
    const bool complex_like = im > kImagDiscard * (1.0 + std::fabs(x));
    if (complex_like || last_step[k] > Real(tol)) {
      // A multiple root splits into a cluster (into the complex plane by ~eps^{1/k}
      // when the coefficients were rounded) and the iteration only creeps toward it,
      // but p still vanishes to rounding level at the cluster center.
      const auto [v, mag] = residual(a, re);
      if (v > Real(1e4 * static_cast<double>(m) * coef_eps) * mag) {
        if (complex_like)
          throw NonRealRooted("root " + std::to_string(x) + (z[k].im < 0 ? " - " : " + ") + std::to_string(im) +
                              "i is not real");
        throw NonRealRooted("root iteration did not converge near " + std::to_string(x));
      }
    }
    out.push_back(x);
  }
  return RootVector(std::move(out));
}

}  // namespace fflab::wide
