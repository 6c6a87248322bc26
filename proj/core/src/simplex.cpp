#include "nfw/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nfw {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPivotTol = 1e-11;
constexpr double kCostTol = 1e-9;
constexpr double kFeasTol = 1e-8;
constexpr long long kMaxPivots = 1'000'000;

enum class Status : std::uint8_t { AtLower, AtUpper, Basic };

// Tableau state for min c^T v, A v = b, 0 <= v <= u. Columns carry the
// structural variables, slacks and the phase-1 artificials; the artificial
// block doubles as B^{-1} for the dual extraction.
struct Tableau {
  int m = 0;
  int n = 0;  // total columns
  std::vector<DenseVector> rows;  // m x n
  DenseVector basic_value;        // m, value of each basic variable
  std::vector<int> basis;         // m, column index of each basic variable
  std::vector<Status> status;     // n
  DenseVector upper;              // n

  double value_of(int j) const {
    switch (status[static_cast<std::size_t>(j)]) {
      case Status::AtLower: return 0.0;
      case Status::AtUpper: return upper[static_cast<std::size_t>(j)];
      case Status::Basic:
        for (int i = 0; i < m; ++i)
          if (basis[static_cast<std::size_t>(i)] == j) return basic_value[static_cast<std::size_t>(i)];
        return 0.0;
    }
    return 0.0;
  }
};

double reduced_cost(const Tableau& t, const DenseVector& cost, int j) {
  double z = cost[static_cast<std::size_t>(j)];
  for (int i = 0; i < t.m; ++i) {
    double cb = cost[static_cast<std::size_t>(t.basis[static_cast<std::size_t>(i)])];
    if (cb != 0.0) z -= cb * t.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return z;
}

void pivot(Tableau& t, int row, int col) {
  DenseVector& pr = t.rows[static_cast<std::size_t>(row)];
  const double piv = pr[static_cast<std::size_t>(col)];
  const double inv = 1.0 / piv;
  for (double& v : pr) v *= inv;
  pr[static_cast<std::size_t>(col)] = 1.0;
  for (int i = 0; i < t.m; ++i) {
    if (i == row) continue;
    DenseVector& ri = t.rows[static_cast<std::size_t>(i)];
    double f = ri[static_cast<std::size_t>(col)];
    if (f == 0.0) continue;
    for (int j = 0; j < t.n; ++j) ri[static_cast<std::size_t>(j)] -= f * pr[static_cast<std::size_t>(j)];
    ri[static_cast<std::size_t>(col)] = 0.0;
  }
}

// Runs simplex iterations on the given costs until optimal. Returns the
// number of pivots consumed; throws on the pivot cap or unboundedness.
long long optimize(Tableau& t, const DenseVector& cost, long long pivot_budget,
                   bool phase_two) {
  long long used = 0;
  while (true) {
    if (used > pivot_budget) throw LpError(LpError::Code::PivotLimit, "pivot limit exceeded");
    // Bland: first eligible column by index.
    int enter = -1;
    int dir = 0;
    for (int j = 0; j < t.n; ++j) {
      if (t.status[static_cast<std::size_t>(j)] == Status::Basic) continue;
      if (t.upper[static_cast<std::size_t>(j)] <= kPivotTol) continue;  // fixed variable
      double z = reduced_cost(t, cost, j);
      if (t.status[static_cast<std::size_t>(j)] == Status::AtLower && z < -kCostTol) {
        enter = j;
        dir = +1;
        break;
      }
      if (t.status[static_cast<std::size_t>(j)] == Status::AtUpper && z > kCostTol) {
        enter = j;
        dir = -1;
        break;
      }
    }
    if (enter < 0) return used;

    // Ratio test: largest step before a basic variable or the entering
    // variable itself hits a bound. delta of basic i per unit step is
    // -dir * a_i. Pass one finds the minimum ratio, pass two breaks ties on
    // the lowest basic variable index (Bland).
    auto row_limit = [&](int i, bool& to_upper) -> double {
      double a = t.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
      double rate = -static_cast<double>(dir) * a;
      if (rate < -kPivotTol) {
        to_upper = false;
        return std::max(0.0, t.basic_value[static_cast<std::size_t>(i)] / (-rate));
      }
      if (rate > kPivotTol) {
        double cap = t.upper[static_cast<std::size_t>(t.basis[static_cast<std::size_t>(i)])];
        if (cap == kInf) return kInf;
        to_upper = true;
        return std::max(0.0, (cap - t.basic_value[static_cast<std::size_t>(i)]) / rate);
      }
      return kInf;
    };
    double t_max = t.upper[static_cast<std::size_t>(enter)];
    for (int i = 0; i < t.m; ++i) {
      bool dummy = false;
      t_max = std::min(t_max, row_limit(i, dummy));
    }
    int leave_row = -1;
    bool leave_to_upper = false;
    if (t_max < t.upper[static_cast<std::size_t>(enter)] - kPivotTol ||
        t.upper[static_cast<std::size_t>(enter)] == kInf) {
      for (int i = 0; i < t.m; ++i) {
        bool to_upper = false;
        double limit = row_limit(i, to_upper);
        if (limit <= t_max + kPivotTol &&
            (leave_row < 0 ||
             t.basis[static_cast<std::size_t>(i)] < t.basis[static_cast<std::size_t>(leave_row)])) {
          leave_row = i;
          leave_to_upper = to_upper;
        }
      }
    }
    if (t_max == kInf) {
      if (phase_two) throw LpError(LpError::Code::Unbounded, "unbounded");
      throw LpError(LpError::Code::PivotLimit, "phase-1 unbounded step");
    }

    // Apply the move to the basic values.
    for (int i = 0; i < t.m; ++i) {
      double a = t.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
      t.basic_value[static_cast<std::size_t>(i)] -= static_cast<double>(dir) * t_max * a;
    }
    ++used;
    if (leave_row < 0) {
      // Bound-to-bound flip.
      t.status[static_cast<std::size_t>(enter)] =
          dir > 0 ? Status::AtUpper : Status::AtLower;
      continue;
    }
    const int leave_var = t.basis[static_cast<std::size_t>(leave_row)];
    t.status[static_cast<std::size_t>(leave_var)] =
        leave_to_upper ? Status::AtUpper : Status::AtLower;
    double enter_value = dir > 0 ? t_max : t.upper[static_cast<std::size_t>(enter)] - t_max;
    t.basis[static_cast<std::size_t>(leave_row)] = enter;
    t.status[static_cast<std::size_t>(enter)] = Status::Basic;
    pivot(t, leave_row, enter);
    t.basic_value[static_cast<std::size_t>(leave_row)] = enter_value;
  }
}

}  // namespace

LpSolution solve_lp(const LpProblem& p) {
  const int n = p.num_vars();
  if (n == 0) throw std::invalid_argument("solve_lp: no variables");
  const int mi = static_cast<int>(p.ineq_rows.size());
  const int me = static_cast<int>(p.eq_rows.size());
  const int m = mi + me;
  for (int j = 0; j < n; ++j) {
    if (!std::isfinite(p.lower[static_cast<std::size_t>(j)]))
      throw std::invalid_argument("solve_lp: lower bounds must be finite");
    if (p.lower[static_cast<std::size_t>(j)] > p.upper[static_cast<std::size_t>(j)])
      throw LpError(LpError::Code::Infeasible, "infeasible: lower > upper");
  }

  // Shift x = lo + v so every variable lives in [0, u].
  const int total = n + mi + m;  // structurals, slacks, artificials
  Tableau t;
  t.m = m;
  t.n = total;
  t.rows.assign(static_cast<std::size_t>(m), DenseVector(static_cast<std::size_t>(total), 0.0));
  t.basic_value.assign(static_cast<std::size_t>(m), 0.0);
  t.basis.assign(static_cast<std::size_t>(m), 0);
  t.status.assign(static_cast<std::size_t>(total), Status::AtLower);
  t.upper.assign(static_cast<std::size_t>(total), kInf);
  for (int j = 0; j < n; ++j)
    t.upper[static_cast<std::size_t>(j)] =
        p.upper[static_cast<std::size_t>(j)] - p.lower[static_cast<std::size_t>(j)];

  DenseVector rhs(static_cast<std::size_t>(m), 0.0);
  for (int i = 0; i < mi; ++i) {
    const DenseVector& row = p.ineq_rows[static_cast<std::size_t>(i)];
    double shift = 0.0;
    for (int j = 0; j < n; ++j) {
      t.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j)];
      shift += row[static_cast<std::size_t>(j)] * p.lower[static_cast<std::size_t>(j)];
    }
    t.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = 1.0;  // slack
    rhs[static_cast<std::size_t>(i)] = p.ineq_rhs[static_cast<std::size_t>(i)] - shift;
  }
  for (int i = 0; i < me; ++i) {
    const DenseVector& row = p.eq_rows[static_cast<std::size_t>(i)];
    double shift = 0.0;
    for (int j = 0; j < n; ++j) {
      t.rows[static_cast<std::size_t>(mi + i)][static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j)];
      shift += row[static_cast<std::size_t>(j)] * p.lower[static_cast<std::size_t>(j)];
    }
    rhs[static_cast<std::size_t>(mi + i)] = p.eq_rhs[static_cast<std::size_t>(i)] - shift;
  }

  // Phase 1: sign-flip rows so the artificial basis is feasible.
  for (int i = 0; i < m; ++i) {
    if (rhs[static_cast<std::size_t>(i)] < 0.0) {
      for (double& v : t.rows[static_cast<std::size_t>(i)]) v = -v;
      rhs[static_cast<std::size_t>(i)] = -rhs[static_cast<std::size_t>(i)];
    }
    t.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + mi + i)] = 1.0;
    t.basis[static_cast<std::size_t>(i)] = n + mi + i;
    t.status[static_cast<std::size_t>(n + mi + i)] = Status::Basic;
    t.basic_value[static_cast<std::size_t>(i)] = rhs[static_cast<std::size_t>(i)];
  }

  DenseVector phase1_cost(static_cast<std::size_t>(total), 0.0);
  for (int i = 0; i < m; ++i) phase1_cost[static_cast<std::size_t>(n + mi + i)] = 1.0;
  long long used = optimize(t, phase1_cost, kMaxPivots, false);

  double infeas = 0.0;
  for (int i = 0; i < m; ++i)
    if (t.basis[static_cast<std::size_t>(i)] >= n + mi)
      infeas += t.basic_value[static_cast<std::size_t>(i)];
  if (infeas > kFeasTol) throw LpError(LpError::Code::Infeasible, "infeasible");

  // Pivot leftover artificials out where possible; an all-zero row is
  // redundant and its artificial stays pinned at zero.
  for (int i = 0; i < m; ++i) {
    if (t.basis[static_cast<std::size_t>(i)] < n + mi) continue;
    for (int j = 0; j < n + mi; ++j) {
      if (t.status[static_cast<std::size_t>(j)] == Status::Basic) continue;
      if (std::abs(t.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) > 1e-7) {
        const int art = t.basis[static_cast<std::size_t>(i)];
        t.status[static_cast<std::size_t>(art)] = Status::AtLower;
        t.basis[static_cast<std::size_t>(i)] = j;
        t.status[static_cast<std::size_t>(j)] = Status::Basic;
        pivot(t, i, j);
        t.basic_value[static_cast<std::size_t>(i)] = 0.0;
        break;
      }
    }
  }
  // Freeze artificials for phase 2.
  for (int j = n + mi; j < total; ++j) t.upper[static_cast<std::size_t>(j)] = 0.0;

  DenseVector phase2_cost(static_cast<std::size_t>(total), 0.0);
  for (int j = 0; j < n; ++j) phase2_cost[static_cast<std::size_t>(j)] = p.c[static_cast<std::size_t>(j)];
  optimize(t, phase2_cost, kMaxPivots - used, true);

  LpSolution sol;
  sol.x.assign(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < n; ++j)
    sol.x[static_cast<std::size_t>(j)] = p.lower[static_cast<std::size_t>(j)] + t.value_of(j);
  sol.value = dot(p.c, sol.x);

  // Optimality audit: reduced-cost signs and the primal/dual objective match.
  double shifted_primal = 0.0;
  for (int j = 0; j < n; ++j) shifted_primal += phase2_cost[static_cast<std::size_t>(j)] * t.value_of(j);
  DenseVector y(static_cast<std::size_t>(m), 0.0);
  for (int i = 0; i < m; ++i) {
    double cb = 0.0;
    for (int r = 0; r < m; ++r) {
      double c_basic = phase2_cost[static_cast<std::size_t>(t.basis[static_cast<std::size_t>(r)])];
      if (c_basic != 0.0)
        cb += c_basic * t.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(n + mi + i)];
    }
    y[static_cast<std::size_t>(i)] = cb;
  }
  double dual = 0.0;
  for (int i = 0; i < m; ++i) dual += y[static_cast<std::size_t>(i)] * rhs[static_cast<std::size_t>(i)];
  for (int j = 0; j < n + mi; ++j) {
    if (t.status[static_cast<std::size_t>(j)] != Status::AtUpper) continue;
    double u = t.upper[static_cast<std::size_t>(j)];
    if (u == kInf || u == 0.0) continue;
    dual += reduced_cost(t, phase2_cost, j) * u;
  }
  if (std::abs(shifted_primal - dual) > 1e-8 * (1.0 + std::abs(shifted_primal)))
    throw LpError(LpError::Code::PivotLimit, "optimality audit failed: duality gap " +
                                                 std::to_string(shifted_primal - dual));
  return sol;
}

}  // namespace nfw
