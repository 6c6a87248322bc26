#include "nfw/subdiff.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nfw {

VertexHull vertex_set_max(const DenseVector& image, double eps) {
  if (image.empty()) throw std::invalid_argument("vertex_set_max: empty image");
  double top = image[0];
  for (double v : image) top = std::max(top, v);
  const double threshold = top - 2.0 * eps;
  VertexHull hull;
  for (int i = 0; i < static_cast<int>(image.size()); ++i)
    if (image[static_cast<std::size_t>(i)] >= threshold) hull.vertices.push_back({i, +1});
  return hull;
}

VertexHull vertex_set_linf(const DenseVector& image, double eps) {
  if (image.empty()) throw std::invalid_argument("vertex_set_linf: empty image");
  const double norm = inf_norm(image);
  VertexHull hull;
  for (int i = 0; i < static_cast<int>(image.size()); ++i)
    if (image[static_cast<std::size_t>(i)] >= norm - 2.0 * eps) hull.vertices.push_back({i, +1});
  for (int i = 0; i < static_cast<int>(image.size()); ++i)
    if (image[static_cast<std::size_t>(i)] <= -norm + 2.0 * eps) hull.vertices.push_back({i, -1});
  return hull;
}

SignPattern sign_pattern_l1(const DenseVector& image, double eps) {
  if (image.empty()) throw std::invalid_argument("sign_pattern_l1: empty image");
  SignPattern pat;
  pat.signs.resize(image.size(), SignPattern::kFree);
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] > eps) pat.signs[i] = +1;
    else if (image[i] < -eps) pat.signs[i] = -1;
  }
  return pat;
}

MedianSubgradient median_subgradient(const SparseMatrix& points, const DenseVector& image,
                                     double eps) {
  const int n = points.cols();
  const int d = points.rows();
  if (n == 0) throw std::invalid_argument("median_subgradient: no points");
  MedianSubgradient out;
  out.image_gradient.assign(static_cast<std::size_t>(d), 0.0);
  if (points.has_dense_columns()) {
    const double* data = points.dense_column_major().data();
    for (int j = 0; j < n; ++j) {
      const double* col = data + static_cast<std::size_t>(j) * static_cast<std::size_t>(d);
      double sq = 0.0;
      for (int r = 0; r < d; ++r) {
        double diff = image[static_cast<std::size_t>(r)] - col[r];
        sq += diff * diff;
      }
      double dist = std::sqrt(sq);
      if (dist <= eps) {
        ++out.near_count;
        continue;
      }
      double inv = 1.0 / dist;
      for (int r = 0; r < d; ++r)
        out.image_gradient[static_cast<std::size_t>(r)] +=
            (image[static_cast<std::size_t>(r)] - col[r]) * inv;
    }
  } else {
    DenseVector col(static_cast<std::size_t>(d));
    for (int j = 0; j < n; ++j) {
      std::fill(col.begin(), col.end(), 0.0);
      points.add_scaled_column(j, 1.0, col);
      double sq = 0.0;
      for (int r = 0; r < d; ++r) {
        double diff = image[static_cast<std::size_t>(r)] - col[static_cast<std::size_t>(r)];
        sq += diff * diff;
      }
      double dist = std::sqrt(sq);
      if (dist <= eps) {
        ++out.near_count;
        continue;
      }
      double inv = 1.0 / dist;
      for (int r = 0; r < d; ++r)
        out.image_gradient[static_cast<std::size_t>(r)] +=
            (image[static_cast<std::size_t>(r)] - col[static_cast<std::size_t>(r)]) * inv;
    }
  }
  const double scale = 1.0 / static_cast<double>(n);
  for (double& g : out.image_gradient) g *= scale;
  out.decision_gradient = points.transpose_multiply(out.image_gradient);
  return out;
}

}  // namespace nfw
