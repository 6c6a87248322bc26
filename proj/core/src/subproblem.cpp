#include "nfw/subproblem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace nfw {

namespace {

constexpr double kZeroTol = 1e-11;

DenseVector raw_image(const ProblemInstance& instance, const DenseVector& image) {
  // A x without the affine offset; offsets cancel in A(z - x) but not in A z.
  if (instance.offset.empty()) return image;
  DenseVector r = image;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= instance.offset[i];
  return r;
}

void greedy_block_fill(const DenseVector& block_costs, int block_begin, double cap,
                       std::vector<SparseEntry>& out) {
  const int nb = static_cast<int>(block_costs.size());
  std::vector<int> order(static_cast<std::size_t>(nb));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return block_costs[static_cast<std::size_t>(a)] < block_costs[static_cast<std::size_t>(b)];
  });
  double remaining = 1.0;
  for (int i : order) {
    if (remaining <= 1e-15) break;
    double put = std::min(cap, remaining);
    out.push_back({block_begin + i, put});
    remaining -= put;
  }
}

}  // namespace

int min_linear_over_simplex(const DenseVector& c) {
  if (c.empty()) throw std::invalid_argument("min_linear_over_simplex: empty costs");
  int best = 0;
  for (int i = 1; i < static_cast<int>(c.size()); ++i)
    if (c[static_cast<std::size_t>(i)] < c[static_cast<std::size_t>(best)]) best = i;
  return best;
}

SparseVector min_linear_over_capped_simplex(const DenseVector& c, double cap) {
  if (c.empty()) throw std::invalid_argument("min_linear_over_capped_simplex: empty costs");
  if (cap * static_cast<double>(c.size()) < 1.0 - 1e-12)
    throw std::invalid_argument("min_linear_over_capped_simplex: infeasible cap");
  std::vector<SparseEntry> entries;
  greedy_block_fill(c, 0, cap, entries);
  return make_sparse(static_cast<int>(c.size()), std::move(entries));
}

const std::vector<int>& RowOrderCache::order(int row, int sign, int block) {
  if (orders_.empty())
    orders_.assign(2 * static_cast<std::size_t>(A_->rows()),
                   std::vector<std::vector<int>>(static_cast<std::size_t>(feasible_->num_blocks())));
  const std::size_t key = 2 * static_cast<std::size_t>(row) + (sign > 0 ? 0 : 1);
  auto& slot = orders_[key][static_cast<std::size_t>(block)];
  if (!slot.empty()) return slot;
  const int begin = feasible_->block_begin(block);
  const int nb = feasible_->block_size(block);
  DenseVector vals(static_cast<std::size_t>(nb), 0.0);
  auto idx = A_->row_indices(row);
  auto val = A_->row_values(row);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    int j = idx[k];
    if (j >= begin && j < begin + nb)
      vals[static_cast<std::size_t>(j - begin)] = sign * val[k];
  }
  slot.resize(static_cast<std::size_t>(nb));
  std::iota(slot.begin(), slot.end(), 0);
  std::stable_sort(slot.begin(), slot.end(), [&](int a, int b) {
    return vals[static_cast<std::size_t>(a)] < vals[static_cast<std::size_t>(b)];
  });
  return slot;
}

namespace {

SubproblemSolution finish(const ProblemInstance& instance, SparseVector s) {
  SubproblemSolution sol;
  sol.s_image = instance.image_of(s);
  sol.s = std::move(s);
  return sol;
}

// Singleton hull: blockwise greedy on c = sign * row(A), touching only the
// signed row rather than forming a decision-space product.
SubproblemSolution vertexhull_singleton(const ProblemInstance& instance,
                                        const DenseVector& image, SignedVertex d,
                                        RowOrderCache* row_cache) {
  const FeasibleSet& fs = instance.feasible;
  std::vector<SparseEntry> entries;
  const double cap = fs.cap();
  if (row_cache != nullptr) {
    for (int b = 0; b < fs.num_blocks(); ++b) {
      const auto& order = row_cache->order(d.row, d.sign, b);
      double remaining = 1.0;
      for (std::size_t i = 0; i < order.size() && remaining > 1e-15; ++i) {
        double put = std::min(cap, remaining);
        entries.push_back({fs.block_begin(b) + order[i], put});
        remaining -= put;
      }
    }
  } else {
    for (int b = 0; b < fs.num_blocks(); ++b) {
      const int begin = fs.block_begin(b);
      const int nb = fs.block_size(b);
      DenseVector costs(static_cast<std::size_t>(nb), 0.0);
      auto idx = instance.A.row_indices(d.row);
      auto val = instance.A.row_values(d.row);
      for (std::size_t k = 0; k < idx.size(); ++k) {
        int j = idx[k];
        if (j >= begin && j < begin + nb)
          costs[static_cast<std::size_t>(j - begin)] = d.sign * val[k];
      }
      greedy_block_fill(costs, begin, cap, entries);
    }
  }
  SubproblemSolution sol = finish(instance, make_sparse(fs.dim(), std::move(entries)));
  sol.value = d.sign * (sol.s_image[static_cast<std::size_t>(d.row)] -
                        image[static_cast<std::size_t>(d.row)]);
  return sol;
}

SubproblemSolution vertexhull_lp(const ProblemInstance& instance, const DenseVector& image,
                                 const VertexHull& hull) {
  const FeasibleSet& fs = instance.feasible;
  const int n = fs.dim();
  const DenseVector ax = raw_image(instance, image);

  LpProblem p;
  p.c.assign(static_cast<std::size_t>(n) + 1, 0.0);
  p.c[static_cast<std::size_t>(n)] = 1.0;  // minimize mu
  p.lower.assign(static_cast<std::size_t>(n) + 1, 0.0);
  p.upper.assign(static_cast<std::size_t>(n) + 1, fs.cap());

  double mu_bound = 1.0;
  for (const SignedVertex& v : hull.vertices) {
    DenseVector row(static_cast<std::size_t>(n) + 1, 0.0);
    auto idx = instance.A.row_indices(v.row);
    auto val = instance.A.row_values(v.row);
    double max_abs = 0.0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      row[static_cast<std::size_t>(idx[k])] = v.sign * val[k];
      max_abs = std::max(max_abs, std::abs(val[k]));
    }
    row[static_cast<std::size_t>(n)] = -1.0;
    double rhs = v.sign * ax[static_cast<std::size_t>(v.row)];
    p.ineq_rows.push_back(std::move(row));
    p.ineq_rhs.push_back(rhs);
    mu_bound = std::max(mu_bound, std::abs(rhs) + max_abs * static_cast<double>(fs.num_blocks()));
  }
  p.lower[static_cast<std::size_t>(n)] = -2.0 * mu_bound - 1.0;
  p.upper[static_cast<std::size_t>(n)] = 2.0 * mu_bound + 1.0;

  for (int b = 0; b < fs.num_blocks(); ++b) {
    DenseVector row(static_cast<std::size_t>(n) + 1, 0.0);
    for (int i = 0; i < fs.block_size(b); ++i)
      row[static_cast<std::size_t>(fs.block_begin(b) + i)] = 1.0;
    p.eq_rows.push_back(std::move(row));
    p.eq_rhs.push_back(1.0);
  }

  LpSolution lp = solve_lp(p);
  std::vector<SparseEntry> entries;
  for (int j = 0; j < n; ++j)
    if (lp.x[static_cast<std::size_t>(j)] > kZeroTol)
      entries.push_back({j, lp.x[static_cast<std::size_t>(j)]});
  SubproblemSolution sol = finish(instance, make_sparse(n, std::move(entries)));
  double worst = -std::numeric_limits<double>::infinity();
  for (const SignedVertex& v : hull.vertices)
    worst = std::max(worst, v.sign * (sol.s_image[static_cast<std::size_t>(v.row)] -
                                      image[static_cast<std::size_t>(v.row)]));
  sol.value = worst;
  return sol;
}

}  // namespace

SubproblemSolution solve_minmax_vertexhull(const ProblemInstance& instance,
                                           const DenseVector& image, const VertexHull& hull,
                                           RowOrderCache* row_cache) {
  if (hull.vertices.empty())
    throw std::invalid_argument("solve_minmax_vertexhull: empty vertex set");
  if (hull.vertices.size() == 1)
    return vertexhull_singleton(instance, image, hull.vertices[0], row_cache);
  return vertexhull_lp(instance, image, hull);
}

SubproblemSolution solve_min_linear(const ProblemInstance& instance, const DenseVector& image,
                                    const DenseVector& decision_gradient,
                                    const DenseVector& image_gradient) {
  const FeasibleSet& fs = instance.feasible;
  std::vector<SparseEntry> entries;
  for (int b = 0; b < fs.num_blocks(); ++b) {
    const int begin = fs.block_begin(b);
    DenseVector costs(decision_gradient.begin() + begin,
                      decision_gradient.begin() + begin + fs.block_size(b));
    greedy_block_fill(costs, begin, fs.cap(), entries);
  }
  SubproblemSolution sol = finish(instance, make_sparse(fs.dim(), std::move(entries)));
  double value = 0.0;
  for (const auto& e : sol.s.entries)
    value += e.value * decision_gradient[static_cast<std::size_t>(e.index)];
  // <A(s - x), d> = <g, s> - <d, A x>, with A x = image minus the offset.
  const DenseVector ax = raw_image(instance, image);
  value -= dot(image_gradient, ax);
  sol.value = value;
  return sol;
}

SubproblemSolution solve_minmax_signpattern(const ProblemInstance& instance,
                                            const DenseVector& image,
                                            const SignPattern& pattern) {
  const FeasibleSet& fs = instance.feasible;
  const int n = fs.dim();
  const int p_rows = instance.image_rows();
  if (static_cast<int>(pattern.signs.size()) != p_rows)
    throw std::invalid_argument("solve_minmax_signpattern: pattern " +
                                format_lengths(pattern.signs.size(),
                                               static_cast<std::size_t>(p_rows)));
  const DenseVector ax = raw_image(instance, image);

  if (pattern.exact()) {
    DenseVector d(static_cast<std::size_t>(p_rows), 0.0);
    for (int i = 0; i < p_rows; ++i) d[static_cast<std::size_t>(i)] = pattern.signs[static_cast<std::size_t>(i)];
    DenseVector c = instance.A.transpose_multiply(d);
    std::vector<SparseEntry> entries;
    for (int b = 0; b < fs.num_blocks(); ++b) {
      const int begin = fs.block_begin(b);
      DenseVector costs(c.begin() + begin, c.begin() + begin + fs.block_size(b));
      greedy_block_fill(costs, begin, fs.cap(), entries);
    }
    SubproblemSolution sol = finish(instance, make_sparse(n, std::move(entries)));
    double value = 0.0;
    for (int i = 0; i < p_rows; ++i)
      value += d[static_cast<std::size_t>(i)] *
               (sol.s_image[static_cast<std::size_t>(i)] - image[static_cast<std::size_t>(i)]);
    sol.value = value;
    return sol;
  }

  // Free coordinates get an auxiliary t_i >= |(A(z - x))_i|.
  std::vector<int> free_rows;
  for (int i = 0; i < p_rows; ++i)
    if (pattern.signs[static_cast<std::size_t>(i)] == SignPattern::kFree) free_rows.push_back(i);
  const int nf = static_cast<int>(free_rows.size());
  const int total = n + nf;

  DenseVector d_fixed(static_cast<std::size_t>(p_rows), 0.0);
  for (int i = 0; i < p_rows; ++i)
    if (pattern.signs[static_cast<std::size_t>(i)] != SignPattern::kFree)
      d_fixed[static_cast<std::size_t>(i)] = pattern.signs[static_cast<std::size_t>(i)];

  LpProblem p;
  p.c = instance.A.transpose_multiply(d_fixed);
  p.c.resize(static_cast<std::size_t>(total), 1.0);  // t variables cost 1
  p.lower.assign(static_cast<std::size_t>(total), 0.0);
  p.upper.assign(static_cast<std::size_t>(total), std::numeric_limits<double>::infinity());
  for (int j = 0; j < n; ++j) p.upper[static_cast<std::size_t>(j)] = fs.cap();

  for (int fi = 0; fi < nf; ++fi) {
    const int r = free_rows[static_cast<std::size_t>(fi)];
    DenseVector pos(static_cast<std::size_t>(total), 0.0);
    DenseVector neg(static_cast<std::size_t>(total), 0.0);
    auto idx = instance.A.row_indices(r);
    auto val = instance.A.row_values(r);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      pos[static_cast<std::size_t>(idx[k])] = val[k];
      neg[static_cast<std::size_t>(idx[k])] = -val[k];
    }
    pos[static_cast<std::size_t>(n + fi)] = -1.0;
    neg[static_cast<std::size_t>(n + fi)] = -1.0;
    p.ineq_rows.push_back(std::move(pos));
    p.ineq_rhs.push_back(ax[static_cast<std::size_t>(r)]);
    p.ineq_rows.push_back(std::move(neg));
    p.ineq_rhs.push_back(-ax[static_cast<std::size_t>(r)]);
  }
  for (int b = 0; b < fs.num_blocks(); ++b) {
    DenseVector row(static_cast<std::size_t>(total), 0.0);
    for (int i = 0; i < fs.block_size(b); ++i)
      row[static_cast<std::size_t>(fs.block_begin(b) + i)] = 1.0;
    p.eq_rows.push_back(std::move(row));
    p.eq_rhs.push_back(1.0);
  }

  LpSolution lp = solve_lp(p);
  std::vector<SparseEntry> entries;
  for (int j = 0; j < n; ++j)
    if (lp.x[static_cast<std::size_t>(j)] > kZeroTol)
      entries.push_back({j, lp.x[static_cast<std::size_t>(j)]});
  SubproblemSolution sol = finish(instance, make_sparse(n, std::move(entries)));
  double value = 0.0;
  for (int i = 0; i < p_rows; ++i) {
    double diff = sol.s_image[static_cast<std::size_t>(i)] - image[static_cast<std::size_t>(i)];
    auto sign = pattern.signs[static_cast<std::size_t>(i)];
    value += sign == SignPattern::kFree ? std::abs(diff) : sign * diff;
  }
  sol.value = value;
  return sol;
}

}  // namespace nfw
