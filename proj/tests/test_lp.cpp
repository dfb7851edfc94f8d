#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "itdn/exact.hpp"
#include "itdn/generators.hpp"
#include "itdn/lp.hpp"

using namespace itdn;
using itdn::testing::k22;
using itdn::testing::matching;
using itdn::testing::star_bi;

namespace {

// Optimality certificate from (x*, y*, duals) alone: primal feasibility plus
// the KKT sign conditions on reduced costs, including the implied slack
// variables. Independent of the pivoting path that produced the solution.
void check_certificate(const InterdependentNetwork& net, int d, const lp::LpSolution& sol) {
  const double tol = 1e-7;
  REQUIRE(sol.status == lp::LpStatus::Optimal);
  const auto& edges = net.edges_ab();
  REQUIRE(sol.duals.size() == edges.size() + 1);

  double sum_y = 0;
  for (double y : sol.y_star) {
    CHECK(y >= -tol);
    CHECK(y <= 1 + tol);
    sum_y += y;
  }
  CHECK(sum_y >= d - tol);
  for (double x : sol.x_star) {
    CHECK(x >= -tol);
    CHECK(x <= 1 + tol);
  }
  for (std::size_t e = 0; e < edges.size(); ++e)
    CHECK(sol.y_star[edges[e].second] <= sol.x_star[edges[e].first] + tol);

  // reduced cost sign conditions; rows are edges then the sum constraint
  const double v = sol.duals.back();
  for (int i = 0; i < net.n_a(); ++i) {
    double dx = 1.0;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (edges[e].first == i) dx -= sol.duals[e];
    if (sol.x_star[i] < 1 - tol) CHECK(dx >= -tol);
    if (sol.x_star[i] > tol) CHECK(dx <= tol);
  }
  for (int j = 0; j < net.n_b(); ++j) {
    double dy = 0.0;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (edges[e].second == j) dy += sol.duals[e];
    dy -= v;
    if (sol.y_star[j] < 1 - tol) CHECK(dy >= -tol);
    if (sol.y_star[j] > tol) CHECK(dy <= tol);
  }
  // slack s_e = x_i - y_j with reduced cost lambda_e; surplus t with lambda_v
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const double s = sol.x_star[edges[e].first] - sol.y_star[edges[e].second];
    if (s > tol) CHECK(std::abs(sol.duals[e]) <= tol);
    CHECK(sol.duals[e] >= -tol);
  }
  if (sum_y > d + tol) CHECK(std::abs(v) <= tol);
  CHECK(v >= -tol);
}

}  // namespace

TEST_SUITE("lp") {
  TEST_CASE("d = 0 solves to all zeros") {
    const auto sol = lp::solve_relaxation(k22(), 0);
    REQUIRE(sol.status == lp::LpStatus::Optimal);
    CHECK(sol.objective == doctest::Approx(0.0).epsilon(1e-9));
    for (double x : sol.x_star) CHECK(x == doctest::Approx(0.0));
  }

  TEST_CASE("single-edge network forces x = y = 1") {
    const auto sol = lp::solve_relaxation(star_bi(1, 1, {{0, 0}}), 1);
    REQUIRE(sol.status == lp::LpStatus::Optimal);
    CHECK(sol.objective == doctest::Approx(1.0));
    CHECK(sol.x_star[0] == doctest::Approx(1.0));
    CHECK(sol.y_star[0] == doctest::Approx(1.0));
  }

  TEST_CASE("matching relaxations are integral with objective d") {
    for (int n = 2; n <= 4; ++n)
      for (int d = 1; d <= n; ++d) {
        const auto sol = lp::solve_relaxation(matching(n), d);
        REQUIRE(sol.status == lp::LpStatus::Optimal);
        CHECK(sol.objective == doctest::Approx(static_cast<double>(d)).epsilon(1e-9));
        check_certificate(matching(n), d, sol);
      }
  }

  TEST_CASE("certificates hold on random instances") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto net = generators::gen_type1(10, 2 + static_cast<int>(seed % 3), seed);
      for (int d : {1, 3, net.n_b()}) {
        const auto sol = lp::solve_relaxation(net, d);
        check_certificate(net, d, sol);
      }
    }
  }

  TEST_CASE("weak duality against the integral optimum") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const auto net = generators::gen_type1(9, 2, seed);
      for (int d = 1; d <= net.n_b(); ++d) {
        const auto sol = lp::solve_relaxation(net, d);
        const auto opt = exact::mr_exact(net, d);
        CHECK(sol.objective <= opt.value + 1e-7);
      }
    }
  }

  TEST_CASE("deterministic resolves") {
    const auto net = generators::gen_type1(12, 3, 5);
    const auto a = lp::solve_relaxation(net, 4);
    const auto b = lp::solve_relaxation(net, 4);
    CHECK(a.x_star == b.x_star);
    CHECK(a.y_star == b.y_star);
  }

  TEST_CASE("fixings narrow the solution") {
    const auto net = k22();
    lp::Fixings fix;
    fix.y = {{0, 1}};
    const auto sol = lp::solve_relaxation(net, 1, fix);
    REQUIRE(sol.status == lp::LpStatus::Optimal);
    CHECK(sol.y_star[0] == doctest::Approx(1.0));
    CHECK(sol.x_star[0] == doctest::Approx(1.0));
    CHECK(sol.x_star[1] == doctest::Approx(1.0));

    lp::Fixings all_zero;
    all_zero.y = {{0, 0}, {1, 0}};
    CHECK(lp::solve_relaxation(net, 1, all_zero).status == lp::LpStatus::Infeasible);
  }

  TEST_CASE("d out of range throws") {
    CHECK_THROWS_AS(lp::solve_relaxation(k22(), 3), std::out_of_range);
    CHECK_THROWS_AS(lp::solve_relaxation(k22(), -1), std::out_of_range);
  }
}
