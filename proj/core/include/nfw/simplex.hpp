#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nfw/types.hpp"

namespace nfw {

// Dense LP in the form
//   min c^T x   s.t.  G x <= h,  E x = f,  lo <= x <= hi
// Bounds may be +inf on hi; lo must be finite.
struct LpProblem {
  DenseVector c;
  std::vector<DenseVector> ineq_rows;
  DenseVector ineq_rhs;
  std::vector<DenseVector> eq_rows;
  DenseVector eq_rhs;
  DenseVector lower;
  DenseVector upper;

  int num_vars() const { return static_cast<int>(c.size()); }
};

struct LpSolution {
  DenseVector x;
  double value = 0.0;
};

class LpError : public std::runtime_error {
 public:
  enum class Code { Infeasible, Unbounded, PivotLimit };
  LpError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

// Two-phase primal simplex on bounded variables with Bland's anti-cycling
// rule; entering/leaving ties break on the lowest variable index so runs are
// reproducible. Optimality is verified by a primal/dual objective match.
LpSolution solve_lp(const LpProblem& p);

}  // namespace nfw
