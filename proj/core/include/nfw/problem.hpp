#pragma once

#include <optional>
#include <string>

#include "nfw/feasible_set.hpp"
#include "nfw/matrix.hpp"
#include "nfw/types.hpp"

namespace nfw {

// Objective applied to the image vector x_hat = A x + b:
//   Max     max_i x_hat_i
//   LInf    ||x_hat||_inf
//   L1      ||x_hat||_1
//   Median  mean_j ||x_hat - column_j(A)||_2   (columns are the data points)
enum class ObjectiveKind { Max, LInf, L1, Median };

std::string to_string(ObjectiveKind kind);

// Everything a solver run needs: the affine image map, the feasible set and
// the two constants of the convergence theory. Immutable after construction
// and safe to share across threads.
struct ProblemInstance {
  ObjectiveKind kind = ObjectiveKind::Max;
  SparseMatrix A;
  DenseVector offset;  // empty means zero
  FeasibleSet feasible = FeasibleSet::unit_simplex(1);
  double lipschitz = 0.0;
  double curvature_coeff = 0.0;  // D_f with C_f(eps) <= D_f / eps
  // Cached l2 diameter of the image polytope; used by the gap correction for
  // Median instances.
  double image_diameter2 = 0.0;

  int image_rows() const { return A.rows(); }
  DenseVector image_of(const DenseVector& x) const;
  DenseVector image_of(const SparseVector& x) const;
};

double evaluate_objective(const ProblemInstance& instance, const DenseVector& image);

// D_f for the instance's objective kind, from per-block column diameters.
// The image of a simplex block is the hull of its columns, so block
// diameters are attained at column pairs; blocks add up via the triangle
// inequality. Capped blocks reuse the uncapped diameter (a superset).
double diameter_bound(const ProblemInstance& instance);

// Max pairwise distance between columns of one block, in the norm the kind
// dictates (Max/LInf: inf, L1: 1, Median: 2).
double block_column_diameter(const SparseMatrix& A, ObjectiveKind kind, int col_begin,
                             int col_count);

}  // namespace nfw
