#include "itdn/lp.hpp"

#include <cmath>
#include <stdexcept>

namespace itdn::lp {

namespace {

enum class VarState { Basic, AtLower, AtUpper };

class Tableau {
 public:
  explicit Tableau(const SimplexProblem& p)
      : m_(p.rows()), n_(p.cols()), t_(p.rows()), beta_(p.rows()), basis_(p.rows()),
        lo_(p.lo), up_(p.up), state_(p.cols() + p.rows(), VarState::AtLower), sign_(p.rows(), 1.0) {
    // Structurals start at their lower bound; one artificial per row carries
    // the residual, signed so its starting value is non-negative.
    for (int j = 0; j < n_; ++j)
      if (!std::isfinite(lo_[j])) throw std::invalid_argument("finite lower bounds required");
    lo_.resize(n_ + m_, 0.0);
    up_.resize(n_ + m_, kInf);

    for (int r = 0; r < m_; ++r) {
      double res = p.b[r];
      for (int j = 0; j < n_; ++j) res -= p.a[r][j] * lo_[j];
      sign_[r] = res >= 0 ? 1.0 : -1.0;
      t_[r].assign(n_ + m_, 0.0);
      for (int j = 0; j < n_; ++j) t_[r][j] = sign_[r] * p.a[r][j];
      t_[r][n_ + r] = 1.0;
      beta_[r] = std::abs(res);
      basis_[r] = n_ + r;
      state_[n_ + r] = VarState::Basic;
    }
  }

  // Minimizes `cost` (length n_ + m_) from the current basis. Returns the
  // objective value. Throws on iteration blow-up, which at these instance
  // sizes indicates a bug rather than hard numerics.
  double run(const std::vector<double>& cost) {
    const long max_iters = 2000L * (m_ + n_ + 10);
    long degenerate_run = 0;
    bool bland = false;
    for (long iter = 0; iter < max_iters; ++iter) {
      // Reduced costs d_j = cost_j - pi . T_j with pi over basic costs.
      std::vector<double> pi(m_);
      for (int r = 0; r < m_; ++r) pi[r] = cost[basis_[r]];

      int enter = -1;
      double best_score = kOptTol;
      for (int j = 0; j < n_ + m_; ++j) {
        if (state_[j] == VarState::Basic || lo_[j] == up_[j]) continue;
        double d = cost[j];
        for (int r = 0; r < m_; ++r)
          if (pi[r] != 0.0) d -= pi[r] * t_[r][j];
        const double score = state_[j] == VarState::AtLower ? -d : d;
        if (score > best_score) {
          best_score = score;
          enter = j;
          if (bland) break;
        }
      }
      if (enter < 0) break;  // optimal

      const double dir = state_[enter] == VarState::AtLower ? 1.0 : -1.0;
      double t_max = up_[enter] - lo_[enter];
      int leave_row = -1;
      bool leave_at_upper = false;
      for (int r = 0; r < m_; ++r) {
        const double delta = -dir * t_[r][enter];
        double ratio;
        bool hits_upper;
        if (delta > kFeasTol) {
          if (!std::isfinite(up_[basis_[r]])) continue;
          ratio = (up_[basis_[r]] - beta_[r]) / delta;
          hits_upper = true;
        } else if (delta < -kFeasTol) {
          ratio = (lo_[basis_[r]] - beta_[r]) / delta;
          hits_upper = false;
        } else {
          continue;
        }
        if (ratio < 0) ratio = 0;
        if (ratio < t_max - kFeasTol ||
            (ratio < t_max + kFeasTol && leave_row >= 0 && basis_[r] < basis_[leave_row])) {
          t_max = std::min(t_max, ratio);
          leave_row = r;
          leave_at_upper = hits_upper;
        }
      }
      if (!std::isfinite(t_max)) throw std::runtime_error("simplex: unbounded direction");

      degenerate_run = t_max < kFeasTol ? degenerate_run + 1 : 0;
      if (degenerate_run > 2L * (m_ + n_)) bland = true;

      for (int r = 0; r < m_; ++r) beta_[r] += t_max * (-dir * t_[r][enter]);

      if (leave_row < 0) {
        // Blocked by the entering variable's own opposite bound: flip it.
        state_[enter] =
            state_[enter] == VarState::AtLower ? VarState::AtUpper : VarState::AtLower;
        continue;
      }

      const int leave = basis_[leave_row];
      state_[leave] = leave_at_upper ? VarState::AtUpper : VarState::AtLower;
      beta_[leave_row] = value_of(enter) + dir * t_max;
      state_[enter] = VarState::Basic;
      basis_[leave_row] = enter;
      pivot(leave_row, enter);
    }

    double obj = 0.0;
    for (int j = 0; j < n_ + m_; ++j)
      if (state_[j] != VarState::Basic && cost[j] != 0.0) obj += cost[j] * value_of(j);
    for (int r = 0; r < m_; ++r) obj += cost[basis_[r]] * beta_[r];
    return obj;
  }

  void fix_artificials() {
    for (int j = n_; j < n_ + m_; ++j) up_[j] = 0.0;
  }

  std::vector<double> solution() const {
    std::vector<double> z(n_);
    for (int j = 0; j < n_; ++j)
      if (state_[j] != VarState::Basic) z[j] = value_of(j);
    for (int r = 0; r < m_; ++r)
      if (basis_[r] < n_) z[basis_[r]] = beta_[r];
    return z;
  }

  std::vector<double> duals(const std::vector<double>& cost) const {
    std::vector<double> lambda(m_, 0.0);
    for (int r = 0; r < m_; ++r) {
      double v = 0.0;
      for (int k = 0; k < m_; ++k) v += cost[basis_[k]] * t_[k][n_ + r];
      lambda[r] = sign_[r] * v;
    }
    return lambda;
  }

  int total_vars() const { return n_ + m_; }

 private:
  double value_of(int j) const { return state_[j] == VarState::AtUpper ? up_[j] : lo_[j]; }

  // beta_ holds actual variable values and is stepped incrementally before a
  // pivot; only the tableau is transformed here.
  void pivot(int row, int col) {
    const double piv = t_[row][col];
    for (double& v : t_[row]) v /= piv;
    for (int r = 0; r < m_; ++r) {
      if (r == row) continue;
      const double f = t_[r][col];
      if (f == 0.0) continue;
      for (int j = 0; j < n_ + m_; ++j) t_[r][j] -= f * t_[row][j];
    }
  }

  int m_, n_;
  std::vector<std::vector<double>> t_;
  std::vector<double> beta_;
  std::vector<int> basis_;
  std::vector<double> lo_, up_;
  std::vector<VarState> state_;
  std::vector<double> sign_;
};

}  // namespace

SimplexResult solve_simplex(const SimplexProblem& p) {
  Tableau tab(p);

  std::vector<double> phase1(tab.total_vars(), 0.0);
  for (int j = p.cols(); j < tab.total_vars(); ++j) phase1[j] = 1.0;
  const double infeas = tab.run(phase1);
  SimplexResult result;
  if (infeas > 1e-7) {
    result.status = LpStatus::Infeasible;
    return result;
  }
  tab.fix_artificials();

  std::vector<double> phase2(tab.total_vars(), 0.0);
  for (int j = 0; j < p.cols(); ++j) phase2[j] = p.c[j];
  result.objective = tab.run(phase2);
  result.z = tab.solution();
  result.duals = tab.duals(phase2);
  return result;
}

LpSolution solve_relaxation(const InterdependentNetwork& net, int d, const Fixings& fixings) {
  const int na = net.n_a(), nb = net.n_b();
  if (d < 0 || d > nb) throw std::out_of_range("d out of range");

  const auto& edges = net.edges_ab();
  const int m = static_cast<int>(edges.size()) + 1;
  const int n = na + nb + static_cast<int>(edges.size()) + 1;

  SimplexProblem p;
  p.a.assign(m, std::vector<double>(n, 0.0));
  p.b.assign(m, 0.0);
  p.c.assign(n, 0.0);
  p.lo.assign(n, 0.0);
  p.up.assign(n, kInf);

  for (int i = 0; i < na; ++i) {
    p.c[i] = 1.0;
    p.up[i] = 1.0;
  }
  for (int j = 0; j < nb; ++j) p.up[na + j] = 1.0;

  // x_i - y_j - s_e = 0 per edge; sum(y) - t = d.
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    const auto& [i, j] = edges[e];
    p.a[e][i] = 1.0;
    p.a[e][na + j] = -1.0;
    p.a[e][na + nb + e] = -1.0;
  }
  const int last = m - 1;
  for (int j = 0; j < nb; ++j) p.a[last][na + j] = 1.0;
  p.a[last][n - 1] = -1.0;
  p.b[last] = static_cast<double>(d);

  for (const auto& [i, v] : fixings.x) {
    p.lo[i] = p.up[i] = static_cast<double>(v);
  }
  for (const auto& [j, v] : fixings.y) {
    p.lo[na + j] = p.up[na + j] = static_cast<double>(v);
  }

  const SimplexResult r = solve_simplex(p);
  LpSolution sol;
  sol.status = r.status;
  if (r.status == LpStatus::Infeasible) return sol;
  sol.objective = r.objective;
  sol.x_star.assign(r.z.begin(), r.z.begin() + na);
  sol.y_star.assign(r.z.begin() + na, r.z.begin() + na + nb);
  sol.duals = r.duals;
  return sol;
}

}  // namespace itdn::lp
