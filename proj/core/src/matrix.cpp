#include "nfw/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace nfw {

SparseMatrix SparseMatrix::from_triplets(
    int rows, int cols, const std::vector<std::tuple<int, int, double>>& triplets) {
  SparseMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.build_indices(triplets);
  return m;
}

SparseMatrix SparseMatrix::from_dense_rows(const std::vector<DenseVector>& rows) {
  std::vector<std::tuple<int, int, double>> t;
  int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != cols)
      throw std::invalid_argument("from_dense_rows: ragged rows");
    for (int c = 0; c < cols; ++c) {
      double v = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (v != 0.0) t.emplace_back(r, c, v);
    }
  }
  SparseMatrix m;
  m.rows_ = static_cast<int>(rows.size());
  m.cols_ = cols;
  m.build_indices(t);
  return m;
}

SparseMatrix SparseMatrix::from_dense_columns(int rows, const std::vector<DenseVector>& cols) {
  std::vector<std::tuple<int, int, double>> t;
  for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
    if (static_cast<int>(cols[static_cast<std::size_t>(c)].size()) != rows)
      throw std::invalid_argument("from_dense_columns: ragged columns");
    for (int r = 0; r < rows; ++r) {
      double v = cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
      if (v != 0.0) t.emplace_back(r, c, v);
    }
  }
  SparseMatrix m;
  m.rows_ = rows;
  m.cols_ = static_cast<int>(cols.size());
  m.build_indices(t);
  return m;
}

void SparseMatrix::build_indices(std::vector<std::tuple<int, int, double>> triplets) {
  for (const auto& [r, c, v] : triplets) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::invalid_argument("triplet index out of range");
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite matrix entry");
  }
  // Merge duplicates in row-major order.
  std::sort(triplets.begin(), triplets.end());
  std::vector<std::tuple<int, int, double>> merged;
  merged.reserve(triplets.size());
  for (const auto& t : triplets) {
    if (!merged.empty() && std::get<0>(merged.back()) == std::get<0>(t) &&
        std::get<1>(merged.back()) == std::get<1>(t)) {
      std::get<2>(merged.back()) += std::get<2>(t);
    } else {
      merged.push_back(t);
    }
  }

  row_ptr_.assign(static_cast<std::size_t>(rows_) + 1, 0);
  col_ptr_.assign(static_cast<std::size_t>(cols_) + 1, 0);
  row_cols_.clear();
  row_values_.clear();
  row_cols_.reserve(merged.size());
  row_values_.reserve(merged.size());
  for (const auto& [r, c, v] : merged) {
    ++row_ptr_[static_cast<std::size_t>(r) + 1];
    ++col_ptr_[static_cast<std::size_t>(c) + 1];
    row_cols_.push_back(c);
    row_values_.push_back(v);
  }
  for (int r = 0; r < rows_; ++r)
    row_ptr_[static_cast<std::size_t>(r) + 1] += row_ptr_[static_cast<std::size_t>(r)];
  for (int c = 0; c < cols_; ++c)
    col_ptr_[static_cast<std::size_t>(c) + 1] += col_ptr_[static_cast<std::size_t>(c)];

  col_rows_.assign(merged.size(), 0);
  col_values_.assign(merged.size(), 0.0);
  std::vector<std::size_t> fill(col_ptr_.begin(), col_ptr_.end() - 1);
  for (const auto& [r, c, v] : merged) {
    std::size_t a = fill[static_cast<std::size_t>(c)]++;
    col_rows_[a] = r;
    col_values_[a] = v;
  }

  const std::size_t full = static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_);
  if (full > 0 && full <= (std::size_t{1} << 24) && merged.size() * 4 >= full) {
    dense_col_major_.assign(full, 0.0);
    for (const auto& [r, c, v] : merged)
      dense_col_major_[static_cast<std::size_t>(c) * static_cast<std::size_t>(rows_) +
                       static_cast<std::size_t>(r)] = v;
  }
}

std::span<const int> SparseMatrix::row_indices(int r) const {
  return {row_cols_.data() + row_ptr_[static_cast<std::size_t>(r)],
          row_ptr_[static_cast<std::size_t>(r) + 1] - row_ptr_[static_cast<std::size_t>(r)]};
}

std::span<const double> SparseMatrix::row_values(int r) const {
  return {row_values_.data() + row_ptr_[static_cast<std::size_t>(r)],
          row_ptr_[static_cast<std::size_t>(r) + 1] - row_ptr_[static_cast<std::size_t>(r)]};
}

std::span<const int> SparseMatrix::col_indices(int c) const {
  return {col_rows_.data() + col_ptr_[static_cast<std::size_t>(c)],
          col_ptr_[static_cast<std::size_t>(c) + 1] - col_ptr_[static_cast<std::size_t>(c)]};
}

std::span<const double> SparseMatrix::col_values(int c) const {
  return {col_values_.data() + col_ptr_[static_cast<std::size_t>(c)],
          col_ptr_[static_cast<std::size_t>(c) + 1] - col_ptr_[static_cast<std::size_t>(c)]};
}

DenseVector SparseMatrix::multiply(const DenseVector& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw std::invalid_argument("multiply: " + format_lengths(x.size(), static_cast<std::size_t>(cols_)));
  DenseVector y(static_cast<std::size_t>(rows_), 0.0);
  for (int r = 0; r < rows_; ++r) {
    double s = 0.0;
    const std::size_t begin = row_ptr_[static_cast<std::size_t>(r)];
    const std::size_t end = row_ptr_[static_cast<std::size_t>(r) + 1];
    for (std::size_t k = begin; k < end; ++k)
      s += row_values_[k] * x[static_cast<std::size_t>(row_cols_[k])];
    y[static_cast<std::size_t>(r)] = s;
  }
  return y;
}

DenseVector SparseMatrix::transpose_multiply(const DenseVector& y) const {
  if (static_cast<int>(y.size()) != rows_)
    throw std::invalid_argument("transpose_multiply: " +
                                format_lengths(y.size(), static_cast<std::size_t>(rows_)));
  DenseVector c(static_cast<std::size_t>(cols_), 0.0);
  for (int j = 0; j < cols_; ++j) {
    double s = 0.0;
    const std::size_t begin = col_ptr_[static_cast<std::size_t>(j)];
    const std::size_t end = col_ptr_[static_cast<std::size_t>(j) + 1];
    for (std::size_t k = begin; k < end; ++k)
      s += col_values_[k] * y[static_cast<std::size_t>(col_rows_[k])];
    c[static_cast<std::size_t>(j)] = s;
  }
  return c;
}

void SparseMatrix::add_scaled_column(int c, double a, DenseVector& out) const {
  const std::size_t begin = col_ptr_[static_cast<std::size_t>(c)];
  const std::size_t end = col_ptr_[static_cast<std::size_t>(c) + 1];
  for (std::size_t k = begin; k < end; ++k)
    out[static_cast<std::size_t>(col_rows_[k])] += a * col_values_[k];
}

DenseVector SparseMatrix::column_copy(int c) const {
  DenseVector v(static_cast<std::size_t>(rows_), 0.0);
  add_scaled_column(c, 1.0, v);
  return v;
}

double SparseMatrix::entry(int r, int c) const {
  auto idx = row_indices(r);
  auto val = row_values(r);
  for (std::size_t k = 0; k < idx.size(); ++k)
    if (idx[k] == c) return val[k];
  return 0.0;
}

}  // namespace nfw
