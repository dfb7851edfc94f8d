#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "itdn/netmodel.hpp"

namespace itdn::lp {

enum class LpStatus { Optimal, Infeasible };

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// min c.z  subject to  A z = b,  lo <= z <= up. Upper bounds may be +inf.
struct SimplexProblem {
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  std::vector<double> c;
  std::vector<double> lo;
  std::vector<double> up;

  int rows() const { return static_cast<int>(a.size()); }
  int cols() const { return static_cast<int>(c.size()); }
};

struct SimplexResult {
  LpStatus status = LpStatus::Optimal;
  std::vector<double> z;
  double objective = 0.0;
  std::vector<double> duals;  // row multipliers of the final basis
};

// Bounded-variable two-phase primal simplex on a dense tableau. Entering
// variable: most negative reduced cost, ties broken by lowest index; falls
// back to Bland's rule after a run of degenerate pivots. Deterministic.
SimplexResult solve_simplex(const SimplexProblem& p);

// Partial integer assignment for branch-and-bound node relaxations.
struct Fixings {
  std::vector<std::pair<int, int>> x;  // (A-node index, 0 or 1)
  std::vector<std::pair<int, int>> y;  // (B-node index, 0 or 1)
};

struct LpSolution {
  LpStatus status = LpStatus::Optimal;
  std::vector<double> x_star;
  std::vector<double> y_star;
  double objective = 0.0;
  std::vector<double> duals;
};

// LP relaxation of the minimum-removal program: minimize sum(x) subject to
// y_j <= x_i for every interdependency edge (i, j), sum(y) >= d, and
// x, y in [0, 1] (narrowed to a point by fixings).
LpSolution solve_relaxation(const InterdependentNetwork& net, int d, const Fixings& fixings = {});

inline constexpr double kFeasTol = 1e-9;
inline constexpr double kOptTol = 1e-9;

}  // namespace itdn::lp
