#pragma once

#include <span>
#include <vector>

#include "nfw/types.hpp"

namespace nfw {

// Sparse matrix stored with both row-major and column-major indices.
// Rows are the image coordinates, columns the decision variables; both
// access directions are hot paths (rows feed subproblem constraints,
// columns feed step images and diameters), so the double index is kept.
// When the matrix is dense enough a flat column-major copy is also built
// for vectorizable scans. Immutable after construction.
class SparseMatrix {
 public:
  SparseMatrix() = default;

  static SparseMatrix from_triplets(int rows, int cols,
                                    const std::vector<std::tuple<int, int, double>>& triplets);
  static SparseMatrix from_dense_rows(const std::vector<DenseVector>& rows);
  static SparseMatrix from_dense_columns(int rows, const std::vector<DenseVector>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nnz() const { return row_values_.size(); }

  std::span<const int> row_indices(int r) const;
  std::span<const double> row_values(int r) const;
  std::span<const int> col_indices(int c) const;
  std::span<const double> col_values(int c) const;

  // y = A x
  DenseVector multiply(const DenseVector& x) const;
  // c = A^T y
  DenseVector transpose_multiply(const DenseVector& y) const;
  // out += a * column(c)
  void add_scaled_column(int c, double a, DenseVector& out) const;

  DenseVector column_copy(int c) const;
  double entry(int r, int c) const;

  // Flat column-major data (rows * cols), present only for dense-ish inputs.
  bool has_dense_columns() const { return !dense_col_major_.empty(); }
  const std::vector<double>& dense_column_major() const { return dense_col_major_; }

 private:
  void build_indices(std::vector<std::tuple<int, int, double>> triplets);

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::size_t> row_ptr_;
  std::vector<int> row_cols_;
  std::vector<double> row_values_;
  std::vector<std::size_t> col_ptr_;
  std::vector<int> col_rows_;
  std::vector<double> col_values_;
  std::vector<double> dense_col_major_;
};

}  // namespace nfw
