#pragma once

#include <cstdint>
#include <vector>

#include "nfw/matrix.hpp"
#include "nfw/types.hpp"

namespace nfw {

// Image-space vertex of the approximate subdifferential: sign * e_row.
struct SignedVertex {
  int row = 0;
  int sign = +1;

  bool operator==(const SignedVertex&) const = default;
};

// Finite hull representation for max / inf-norm objectives. Vertices are
// listed + signs first, then - signs, rows ascending.
struct VertexHull {
  std::vector<SignedVertex> vertices;

  std::size_t size() const { return vertices.size(); }
  // A single vertex certifies that the objective is differentiable on the
  // whole neighborhood, so the vertex is an exact gradient.
  bool exact() const { return vertices.size() == 1; }
};

// Box representation for the l1 objective: per coordinate either a fixed
// sign or the free interval [-1, 1].
struct SignPattern {
  static constexpr std::int8_t kFree = 0;
  std::vector<std::int8_t> signs;  // +1, -1 or kFree

  int free_count() const {
    int c = 0;
    for (auto s : signs) c += (s == kFree);
    return c;
  }
  bool exact() const { return free_count() == 0; }
  // Sum of |x_hat_i| over free coordinates; the certificate slack for the
  // box relaxation is twice this value.
  double free_mass(const DenseVector& image) const {
    double m = 0.0;
    for (std::size_t i = 0; i < signs.size(); ++i)
      if (signs[i] == kFree) m += image[i] < 0 ? -image[i] : image[i];
    return m;
  }
};

// Mean-of-distances subgradient. Points closer than eps to the image
// contribute the zero element of their unit-ball subdifferential; near_count
// reports how many, for the gap correction.
struct MedianSubgradient {
  DenseVector image_gradient;     // length = image rows
  DenseVector decision_gradient;  // A^T image_gradient, length = columns
  int near_count = 0;

  bool exact() const { return near_count == 0; }
};

// { e_i : x_hat_i >= max_j x_hat_j - 2 eps }
VertexHull vertex_set_max(const DenseVector& image, double eps);

// { +e_i : x_hat_i >= ||x_hat||_inf - 2 eps } u { -e_i : x_hat_i <= -||x_hat||_inf + 2 eps }
VertexHull vertex_set_linf(const DenseVector& image, double eps);

// Coordinate i gets sign(x_hat_i) if |x_hat_i| > eps, else free.
SignPattern sign_pattern_l1(const DenseVector& image, double eps);

MedianSubgradient median_subgradient(const SparseMatrix& points, const DenseVector& image,
                                     double eps);

}  // namespace nfw
