#pragma once

#include <span>
#include <vector>

namespace fflab {

// Small dense row-major matrix for Jacobians and related desk-scale linear algebra.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const { return {a_.data() + i * cols_, cols_}; }
  std::span<const double> data() const { return a_; }

  DenseMatrix transpose() const;
  std::vector<double> column(std::size_t j) const;

  std::vector<double> row_sums() const;
  std::vector<double> col_sums() const;
  double min_entry() const;

  // Columns [first, first + count) as a new matrix.
  DenseMatrix block_cols(std::size_t first, std::size_t count) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> a_;
};

std::vector<double> operator*(const DenseMatrix& m, std::span<const double> x);
DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

double norm2(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);
double max_abs_diff(std::span<const double> x, std::span<const double> y);

struct SymmetricEigen {
  std::vector<double> values;  // descending
  DenseMatrix vectors;         // column k belongs to values[k]
};

// Cyclic Jacobi rotations on a symmetric matrix.
SymmetricEigen symmetric_eigen(const DenseMatrix& a);

struct Svd {
  std::vector<double> singular;  // descending, min(rows, cols) entries
  DenseMatrix left;              // rows x r, column k is the k-th left singular vector
  DenseMatrix right;             // cols x r
};

// Singular values through the eigen-decomposition of the smaller Gram matrix.
Svd svd(const DenseMatrix& m);
std::vector<double> singular_values(const DenseMatrix& m);

}  // namespace fflab
