#pragma once

#include "nfw/problem.hpp"
#include "nfw/types.hpp"

namespace nfw {

// Current iterate plus its cached image A x + b. The convex-combination
// update keeps the cache exact in real arithmetic; an exact recompute every
// refresh_period steps bounds float drift.
struct IterateState {
  DenseVector x;
  DenseVector image;
  long long k = 0;
  long long refresh_period = 100;
};

IterateState make_iterate(const ProblemInstance& instance, const SparseVector& x0,
                          long long refresh_period = 100);

// x' = (1-alpha) x + alpha s, image blended the same way.
void update_iterate(const ProblemInstance& instance, IterateState& state, const SparseVector& s,
                    const DenseVector& s_image, double alpha);

}  // namespace nfw
