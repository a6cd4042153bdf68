#include "fflab/dense_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace fflab {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<double> DenseMatrix::column(std::size_t j) const {
  std::vector<double> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<double> DenseMatrix::row_sums() const {
  std::vector<double> s(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) s[i] += (*this)(i, j);
  return s;
}

std::vector<double> DenseMatrix::col_sums() const {
  std::vector<double> s(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) s[j] += (*this)(i, j);
  return s;
}

double DenseMatrix::min_entry() const {
  if (a_.empty()) return std::numeric_limits<double>::infinity();
  return *std::min_element(a_.begin(), a_.end());
}

DenseMatrix DenseMatrix::block_cols(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw std::out_of_range("column block out of range");
  DenseMatrix b(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) b(i, j) = (*this)(i, first + j);
  return b;
}

std::vector<double> operator*(const DenseMatrix& m, std::span<const double> x) {
  if (x.size() != m.cols()) throw std::invalid_argument("matrix-vector size mismatch");
  std::vector<double> y(m.rows(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i) y[i] = dot(m.row(i), x);
  return y;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product size mismatch");
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

double dot(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot product size mismatch");
  return std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
}

double norm2(std::span<const double> x) { return std::sqrt(dot(x, x)); }

double max_abs_diff(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("size mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::fabs(x[i] - y[i]));
  return m;
}

SymmetricEigen symmetric_eigen(const DenseMatrix& input) {
  const std::size_t n = input.rows();
  if (input.cols() != n) throw std::invalid_argument("symmetric_eigen needs a square matrix");
  DenseMatrix a = input;
  DenseMatrix v = DenseMatrix::identity(n);

  double frob = 0.0;
  for (double x : a.data()) frob += x * x;
  frob = std::sqrt(frob);
  const double stop = std::numeric_limits<double>::epsilon() * frob;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (std::sqrt(off) <= stop) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::fabs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });
  SymmetricEigen out{std::vector<double>(n), DenseMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

Svd svd(const DenseMatrix& m) {
  const bool wide = m.rows() <= m.cols();
  const DenseMatrix mt = m.transpose();
  const DenseMatrix gram = wide ? m * mt : mt * m;
  const SymmetricEigen eig = symmetric_eigen(gram);
  const std::size_t r = gram.rows();

  Svd out{std::vector<double>(r), DenseMatrix(m.rows(), r), DenseMatrix(m.cols(), r)};
  // The side we did not diagonalize is recovered as M^T u / sigma (or M v / sigma).
  const DenseMatrix& other_map = wide ? mt : m;
  DenseMatrix& known = wide ? out.left : out.right;
  DenseMatrix& derived = wide ? out.right : out.left;
  for (std::size_t k = 0; k < r; ++k) {
    const double sigma = std::sqrt(std::max(eig.values[k], 0.0));
    out.singular[k] = sigma;
    const std::vector<double> vk = eig.vectors.column(k);
    for (std::size_t i = 0; i < r; ++i) known(i, k) = vk[i];
    const std::vector<double> w = other_map * vk;
    for (std::size_t i = 0; i < w.size(); ++i) derived(i, k) = sigma > 0.0 ? w[i] / sigma : 0.0;
  }
  return out;
}

std::vector<double> singular_values(const DenseMatrix& m) { return svd(m).singular; }

}  // namespace fflab
