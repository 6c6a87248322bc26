#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "nfw/problem.hpp"
#include "nfw/subdiff.hpp"
#include "nfw/subproblem.hpp"
#include "nfw/types.hpp"

namespace nfw {

enum class StepPolicy { Schedule, Bisection };

struct SolverConfig {
  long long max_iters = 1000;
  double stop_gap = 0.0;               // stop when the certified bound falls below
  StepPolicy step_policy = StepPolicy::Schedule;
  double epsilon_coeff = 1.0;          // eps_k = c * sqrt(alpha_k); c <= 1 by default
  long long refresh_period = 100;
  std::uint64_t rng_seed = 0;          // used by the smoothing baseline only
  double line_search_tol = 1e-10;      // bisection interval width
  bool use_row_order_cache = false;    // precomputed per-row greedy orders
};

struct IterationRecord {
  long long k = 0;
  double alpha = 0.0;
  double epsilon = 0.0;
  double objective = 0.0;
  double gap_surrogate = 0.0;   // g_hat = -(subproblem value) + corrections
  double certified_bound = 0.0; // g_hat + 2 L eps(effective); dominates f - f*
  long long num_vertices = 0;   // hull size; free-coordinate count for l1; 1 for median
  std::vector<int> step_support;
  long long coreset_size = 0;
  double elapsed_ms = 0.0;
};

struct Coreset {
  std::vector<std::vector<int>> per_iteration;  // S_k
  std::vector<int> union_support;               // sorted union of all S_k
  double certificate = 0.0;                     // a-priori bound at the final k

  long long size() const { return static_cast<long long>(union_support.size()); }
};

struct SolveResult {
  DenseVector x;
  std::vector<IterationRecord> trace;
  Coreset coreset;
};

// alpha_k = 2 / (k + 2), eps_k = c * sqrt(alpha_k)
struct StepPair {
  double alpha = 0.0;
  double epsilon = 0.0;
};
StepPair step_schedule(long long k, double c);

struct GapCertificate {
  double gap_surrogate = 0.0;
  double certified_bound = 0.0;
};
// g_hat = -subproblem_value + extra, certified bound g_hat + 2 L eps.
GapCertificate gap_certificate(double subproblem_value, double lipschitz, double eps,
                               double extra);

// (2^{5/2} L + 2^{3/2} D_f) / sqrt(k + 2)
double a_priori_bound(double lipschitz, double curvature_coeff, long long k);

struct TheoremBound {
  double lipschitz = 0.0;
  double curvature_coeff = 0.0;
  double combined() const { return 2.0 * lipschitz + curvature_coeff; }  // E = 2L + D_f
  double bound(long long k) const { return a_priori_bound(lipschitz, curvature_coeff, k); }
};

// Smallest iteration count that certifies a (1 + eps) coreset.
long long coreset_iterations(double lipschitz, double curvature_coeff, double eps);

// f(x_{k+1}) <= f(x_k) - alpha_k g_hat_k + alpha_k^2 D_f / eps_k + slack
bool check_stepwise_bound(const IterationRecord& current, const IterationRecord& next,
                          double curvature_coeff, double slack = 1e-8);

// Minimizes f along x + alpha (s - x) for alpha in [0, 1] by bisection on
// forward differences (the restriction is convex). Never returns a point
// worse than either endpoint.
double bisection_line_search(const ProblemInstance& instance, const DenseVector& image_x,
                             const DenseVector& image_s, double tol_alpha = 1e-10);

SolveResult run(const ProblemInstance& instance, const SolverConfig& config);

// Empirical lower bound on the curvature constant C_f(eps): max over sampled
// (x, s, alpha) of the exact inner minimum over the subgradient set. An
// optional anchor concentrates the x samples near a point of interest.
double estimate_curvature(const ProblemInstance& instance, double eps, int num_samples,
                          std::uint64_t seed, const DenseVector* anchor = nullptr,
                          double anchor_radius = 0.05);

// Frank-Wolfe on the ball-smoothed objective with Monte-Carlo gradients;
// mu_k = mu0 / sqrt(k+1) and m_k = samples_growth * (k+1) samples.
SolveResult smoothed_fw_baseline(const ProblemInstance& instance, const SolverConfig& config,
                                 double mu0, int samples_growth);

}  // namespace nfw
