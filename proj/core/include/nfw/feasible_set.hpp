#pragma once

#include <vector>

#include "nfw/rng.hpp"
#include "nfw/types.hpp"

namespace nfw {

// Product of unit simplices, optionally with a shared per-coordinate cap
// (cap = 1/R for reduced convex hulls). A single block is the plain simplex.
class FeasibleSet {
 public:
  static FeasibleSet unit_simplex(int n);
  static FeasibleSet product_of_simplices(std::vector<int> block_sizes);
  static FeasibleSet capped_product(std::vector<int> block_sizes, double cap);

  int dim() const { return dim_; }
  int num_blocks() const { return static_cast<int>(block_sizes_.size()); }
  int block_size(int b) const { return block_sizes_[static_cast<std::size_t>(b)]; }
  int block_begin(int b) const { return offsets_[static_cast<std::size_t>(b)]; }
  double cap() const { return cap_; }
  bool has_cap() const { return cap_ < 1.0; }
  int block_of(int index) const;

  // Deterministic feasible start: lowest-index greedy fill per block.
  SparseVector start_point() const;
  DenseVector random_point(CounterRng& rng) const;
  SparseVector random_vertex(CounterRng& rng) const;

 private:
  FeasibleSet(std::vector<int> block_sizes, double cap);

  std::vector<int> block_sizes_;
  std::vector<int> offsets_;
  double cap_ = 1.0;
  int dim_ = 0;
};

struct FeasibilityReport {
  bool feasible = false;
  double max_violation = 0.0;
};

// Diagnostic check: block sums within 1e-9 of one, entries in [0, cap]
// within 1e-12.
FeasibilityReport project_feasible_check(const DenseVector& x, const FeasibleSet& set);

}  // namespace nfw
