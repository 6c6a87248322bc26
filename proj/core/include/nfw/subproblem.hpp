#pragma once

#include <optional>
#include <vector>

#include "nfw/problem.hpp"
#include "nfw/simplex.hpp"
#include "nfw/subdiff.hpp"
#include "nfw/types.hpp"

namespace nfw {

// Solution of a direction-finding subproblem: the vertex-sparse point s, its
// image A s + b, and the achieved min-max value of <A(s - x), d> over the
// subgradient set.
struct SubproblemSolution {
  SparseVector s;
  DenseVector s_image;
  double value = 0.0;

  std::vector<int> support() const { return s.support(); }
};

// argmin over the unit simplex: a single basis vector, ties to the lowest
// index.
int min_linear_over_simplex(const DenseVector& c);

// Greedy fill for min <c, z> over { z in simplex, z <= cap }: cheapest
// coordinates take the cap, the remainder goes to the next one.
// Support size is at most ceil(1/cap).
SparseVector min_linear_over_capped_simplex(const DenseVector& c, double cap);

// Per-(row, sign) column order within each block, built lazily; turns the
// singleton-vertex greedy into an O(ceil(1/cap)) scan per block. Orders sort
// by (sign * value, index) so ties keep the lowest-index rule of the plain
// greedy.
class RowOrderCache {
 public:
  RowOrderCache(const SparseMatrix& A, const FeasibleSet& feasible)
      : A_(&A), feasible_(&feasible) {}
  const std::vector<int>& order(int row, int sign, int block);

 private:
  const SparseMatrix* A_;
  const FeasibleSet* feasible_;
  std::vector<std::vector<std::vector<int>>> orders_;  // [2 * row + sign][block]
};

// min over feasible z of max_{d in V} <A(z - x), d>. A singleton hull takes
// the blockwise greedy on the signed matrix row; larger hulls go through the
// epigraph LP (variables z and mu).
SubproblemSolution solve_minmax_vertexhull(const ProblemInstance& instance,
                                           const DenseVector& image, const VertexHull& hull,
                                           RowOrderCache* row_cache = nullptr);

// min over feasible z of the box max: fixed coordinates contribute
// d_i * (A(z-x))_i, free coordinates |(A(z-x))_i| via auxiliary variables.
SubproblemSolution solve_minmax_signpattern(const ProblemInstance& instance,
                                            const DenseVector& image, const SignPattern& pattern);

// Greedy route for a singleton subgradient; the image gradient supplies
// <d, A x> so the returned value is <A(s - x), d>.
SubproblemSolution solve_min_linear(const ProblemInstance& instance, const DenseVector& image,
                                    const DenseVector& decision_gradient,
                                    const DenseVector& image_gradient);

}  // namespace nfw
