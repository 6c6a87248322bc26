#include "nfw/feasible_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nfw {

FeasibleSet::FeasibleSet(std::vector<int> block_sizes, double cap)
    : block_sizes_(std::move(block_sizes)), cap_(cap) {
  if (block_sizes_.empty()) throw std::invalid_argument("feasible set needs at least one block");
  if (!(cap_ > 0.0) || cap_ > 1.0) throw std::invalid_argument("cap must lie in (0, 1]");
  offsets_.reserve(block_sizes_.size());
  for (int nb : block_sizes_) {
    if (nb < 1) throw std::invalid_argument("block sizes must be >= 1");
    if (cap_ * nb < 1.0 - 1e-12)
      throw std::invalid_argument("infeasible cap: cap * block size < 1");
    offsets_.push_back(dim_);
    dim_ += nb;
  }
}

FeasibleSet FeasibleSet::unit_simplex(int n) { return FeasibleSet({n}, 1.0); }

FeasibleSet FeasibleSet::product_of_simplices(std::vector<int> block_sizes) {
  return FeasibleSet(std::move(block_sizes), 1.0);
}

FeasibleSet FeasibleSet::capped_product(std::vector<int> block_sizes, double cap) {
  return FeasibleSet(std::move(block_sizes), cap);
}

int FeasibleSet::block_of(int index) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  return static_cast<int>(it - offsets_.begin()) - 1;
}

SparseVector FeasibleSet::start_point() const {
  std::vector<SparseEntry> entries;
  for (int b = 0; b < num_blocks(); ++b) {
    double remaining = 1.0;
    int idx = block_begin(b);
    while (remaining > 1e-15) {
      double put = std::min(cap_, remaining);
      entries.push_back({idx, put});
      remaining -= put;
      ++idx;
    }
  }
  return make_sparse(dim_, std::move(entries));
}

DenseVector FeasibleSet::random_point(CounterRng& rng) const {
  DenseVector x(static_cast<std::size_t>(dim_), 0.0);
  for (int b = 0; b < num_blocks(); ++b) {
    const int nb = block_size(b);
    auto w = rng.next_simplex_point(static_cast<std::size_t>(nb));
    if (has_cap()) {
      // Redistribute overflow above the cap until feasible.
      for (int pass = 0; pass < 64; ++pass) {
        double excess = 0.0;
        double room = 0.0;
        for (double v : w) {
          if (v > cap_) excess += v - cap_;
          else room += cap_ - v;
        }
        if (excess <= 1e-15) break;
        for (double& v : w) {
          if (v > cap_) v = cap_;
          else v += (cap_ - v) / room * excess;
        }
      }
    }
    for (int i = 0; i < nb; ++i) x[static_cast<std::size_t>(block_begin(b) + i)] = w[static_cast<std::size_t>(i)];
  }
  return x;
}

SparseVector FeasibleSet::random_vertex(CounterRng& rng) const {
  std::vector<SparseEntry> entries;
  for (int b = 0; b < num_blocks(); ++b) {
    const int nb = block_size(b);
    if (!has_cap()) {
      entries.push_back({block_begin(b) + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(nb))), 1.0});
      continue;
    }
    // Vertex of the capped simplex: a random subset at the cap plus one
    // remainder coordinate.
    std::vector<int> order(static_cast<std::size_t>(nb));
    for (int i = 0; i < nb; ++i) order[static_cast<std::size_t>(i)] = i;
    for (int i = nb - 1; i > 0; --i)
      std::swap(order[static_cast<std::size_t>(i)],
                order[static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(i + 1)))]);
    double remaining = 1.0;
    for (int i = 0; i < nb && remaining > 1e-15; ++i) {
      double put = std::min(cap_, remaining);
      entries.push_back({block_begin(b) + order[static_cast<std::size_t>(i)], put});
      remaining -= put;
    }
  }
  return make_sparse(dim_, std::move(entries));
}

FeasibilityReport project_feasible_check(const DenseVector& x, const FeasibleSet& set) {
  FeasibilityReport rep;
  if (static_cast<int>(x.size()) != set.dim()) {
    rep.feasible = false;
    rep.max_violation = std::numeric_limits<double>::infinity();
    return rep;
  }
  double bound_violation = 0.0;
  double sum_violation = 0.0;
  for (int b = 0; b < set.num_blocks(); ++b) {
    double sum = 0.0;
    for (int i = 0; i < set.block_size(b); ++i) {
      double v = x[static_cast<std::size_t>(set.block_begin(b) + i)];
      sum += v;
      bound_violation = std::max(bound_violation, std::max(-v, v - set.cap()));
    }
    sum_violation = std::max(sum_violation, std::abs(sum - 1.0));
  }
  rep.max_violation = std::max(bound_violation, sum_violation);
  rep.feasible = sum_violation <= 1e-9 && bound_violation <= 1e-12;
  return rep;
}

}  // namespace nfw
