#include "nfw/problem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nfw {

std::string to_string(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::Max: return "max";
    case ObjectiveKind::LInf: return "linf";
    case ObjectiveKind::L1: return "l1";
    case ObjectiveKind::Median: return "median";
  }
  return "?";
}

DenseVector ProblemInstance::image_of(const DenseVector& x) const {
  DenseVector img = A.multiply(x);
  if (!offset.empty()) {
    for (std::size_t i = 0; i < img.size(); ++i) img[i] += offset[i];
  }
  return img;
}

DenseVector ProblemInstance::image_of(const SparseVector& x) const {
  DenseVector img = offset.empty() ? DenseVector(static_cast<std::size_t>(A.rows()), 0.0)
                                   : offset;
  for (const auto& e : x.entries) A.add_scaled_column(e.index, e.value, img);
  return img;
}

namespace {

double median_mean_distance(const SparseMatrix& A, const DenseVector& image) {
  const int n = A.cols();
  const int d = A.rows();
  double total = 0.0;
  if (A.has_dense_columns()) {
    const double* data = A.dense_column_major().data();
    for (int j = 0; j < n; ++j) {
      const double* col = data + static_cast<std::size_t>(j) * static_cast<std::size_t>(d);
      double s = 0.0;
      for (int r = 0; r < d; ++r) {
        double diff = image[static_cast<std::size_t>(r)] - col[r];
        s += diff * diff;
      }
      total += std::sqrt(s);
    }
  } else {
    const double base = dot(image, image);
    for (int j = 0; j < n; ++j) {
      auto rows = A.col_indices(j);
      auto vals = A.col_values(j);
      double s = base;
      for (std::size_t k = 0; k < rows.size(); ++k) {
        double p = vals[k];
        double xi = image[static_cast<std::size_t>(rows[k])];
        s += p * p - 2.0 * p * xi;
      }
      total += std::sqrt(std::max(0.0, s));
    }
  }
  return total / static_cast<double>(n);
}

}  // namespace

double evaluate_objective(const ProblemInstance& instance, const DenseVector& image) {
  if (static_cast<int>(image.size()) != instance.image_rows())
    throw std::invalid_argument("evaluate_objective: image " +
                                format_lengths(image.size(),
                                               static_cast<std::size_t>(instance.image_rows())));
  switch (instance.kind) {
    case ObjectiveKind::Max: {
      double m = image[0];
      for (double v : image) m = std::max(m, v);
      return m;
    }
    case ObjectiveKind::LInf:
      return inf_norm(image);
    case ObjectiveKind::L1:
      return l1_norm(image);
    case ObjectiveKind::Median:
      return median_mean_distance(instance.A, image);
  }
  throw std::logic_error("unknown objective kind");
}

double block_column_diameter(const SparseMatrix& A, ObjectiveKind kind, int col_begin,
                             int col_count) {
  if (col_count <= 1) return 0.0;
  if (kind == ObjectiveKind::Max || kind == ObjectiveKind::LInf) {
    // The inf-distance maximum separates per row: max row range over the
    // block's columns. Columns without an explicit entry contribute zero.
    const auto rows_n = static_cast<std::size_t>(A.rows());
    DenseVector lo(rows_n, std::numeric_limits<double>::infinity());
    DenseVector hi(rows_n, -std::numeric_limits<double>::infinity());
    std::vector<int> seen(rows_n, 0);
    for (int j = col_begin; j < col_begin + col_count; ++j) {
      auto rows = A.col_indices(j);
      auto vals = A.col_values(j);
      for (std::size_t k = 0; k < rows.size(); ++k) {
        auto r = static_cast<std::size_t>(rows[k]);
        ++seen[r];
        lo[r] = std::min(lo[r], vals[k]);
        hi[r] = std::max(hi[r], vals[k]);
      }
    }
    double diam = 0.0;
    for (std::size_t r = 0; r < rows_n; ++r) {
      if (seen[r] == 0) continue;
      double mn = lo[r];
      double mx = hi[r];
      if (seen[r] < col_count) {
        mn = std::min(mn, 0.0);
        mx = std::max(mx, 0.0);
      }
      diam = std::max(diam, mx - mn);
    }
    return diam;
  }
  // L1 / L2: brute force over column pairs.
  const int d = A.rows();
  double diam = 0.0;
  if (A.has_dense_columns()) {
    const double* data = A.dense_column_major().data();
    double best_sq = 0.0;
    for (int j1 = col_begin; j1 < col_begin + col_count; ++j1) {
      const double* c1 = data + static_cast<std::size_t>(j1) * static_cast<std::size_t>(d);
      for (int j2 = j1 + 1; j2 < col_begin + col_count; ++j2) {
        const double* c2 = data + static_cast<std::size_t>(j2) * static_cast<std::size_t>(d);
        double dist = 0.0;
        if (kind == ObjectiveKind::L1) {
          for (int r = 0; r < d; ++r) dist += std::abs(c1[r] - c2[r]);
          diam = std::max(diam, dist);
        } else {
          for (int r = 0; r < d; ++r) {
            double diff = c1[r] - c2[r];
            dist += diff * diff;
          }
          best_sq = std::max(best_sq, dist);
        }
      }
    }
    if (kind != ObjectiveKind::L1) diam = std::sqrt(best_sq);
    return diam;
  }
  DenseVector c1(static_cast<std::size_t>(d)), c2(static_cast<std::size_t>(d));
  for (int j1 = col_begin; j1 < col_begin + col_count; ++j1) {
    std::fill(c1.begin(), c1.end(), 0.0);
    A.add_scaled_column(j1, 1.0, c1);
    for (int j2 = j1 + 1; j2 < col_begin + col_count; ++j2) {
      std::fill(c2.begin(), c2.end(), 0.0);
      A.add_scaled_column(j2, 1.0, c2);
      double dist = 0.0;
      if (kind == ObjectiveKind::L1) {
        for (int r = 0; r < d; ++r)
          dist += std::abs(c1[static_cast<std::size_t>(r)] - c2[static_cast<std::size_t>(r)]);
      } else {
        for (int r = 0; r < d; ++r) {
          double diff = c1[static_cast<std::size_t>(r)] - c2[static_cast<std::size_t>(r)];
          dist += diff * diff;
        }
        dist = std::sqrt(dist);
      }
      diam = std::max(diam, dist);
    }
  }
  return diam;
}

double diameter_bound(const ProblemInstance& instance) {
  if (instance.A.cols() == 0 || instance.A.rows() == 0)
    throw std::invalid_argument("diameter_bound: empty image map");
  double total = 0.0;
  for (int b = 0; b < instance.feasible.num_blocks(); ++b) {
    total += block_column_diameter(instance.A, instance.kind, instance.feasible.block_begin(b),
                                   instance.feasible.block_size(b));
  }
  switch (instance.kind) {
    case ObjectiveKind::Max:
    case ObjectiveKind::L1:
    case ObjectiveKind::Median:
      return 2.0 * total * total;
    case ObjectiveKind::LInf:
      // The SVM-style bound keeps the first power of the summed diameters.
      return 2.0 * total;
  }
  throw std::logic_error("unknown objective kind");
}

}  // namespace nfw
