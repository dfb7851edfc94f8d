#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "itdn/cascade.hpp"
#include "itdn/exact.hpp"
#include "itdn/generators.hpp"
#include "itdn/heuristics.hpp"
#include "itdn/lp.hpp"
#include "itdn/rng.hpp"

using namespace itdn;
using namespace itdn::heuristics;
using itdn::testing::k22;
using itdn::testing::matching;
using itdn::testing::star_bi;

namespace {
bool feasible(const InterdependentNetwork& net, const HeuristicResult& r, int d) {
  const auto failed = one_stage_failures(net, r.removal_a);
  if (static_cast<int>(failed.size()) < d) return false;
  if (static_cast<int>(r.failed_b.size()) < d) return false;
  return std::includes(failed.begin(), failed.end(), r.failed_b.begin(), r.failed_b.end());
}

SaParams quick_params(std::uint64_t seed) {
  SaParams p;
  p.seed = seed;
  p.t_initial = 1.0;
  p.t_final = 0.05;
  p.reduction = 0.8;
  p.inner_loop = 60;
  return p;
}
}  // namespace

TEST_SUITE("heuristics") {
  TEST_CASE("greedy on matchings costs exactly d") {
    for (int d = 1; d <= 5; ++d) {
      const auto r = greedy(matching(5), d, 3);
      CHECK(r.size == d);
      CHECK(feasible(matching(5), r, d));
    }
  }

  TEST_CASE("greedy at d = n_b removes all of A") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto net = generators::gen_type1(8, 2, seed);
      CHECK(greedy(net, net.n_b(), seed).size == net.n_a());
    }
  }

  TEST_CASE("greedy worst-case draws stay between x and x*d") {
    const auto net = generators::gen_greedy_worst_case(2, 2);
    bool saw_worst = false;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto r = greedy(net, 2, seed);
      CHECK(r.size >= 2);
      CHECK(r.size <= 4);
      saw_worst |= r.size == 4;
    }
    CHECK(saw_worst);  // 1/6 of tie-break draws hit x*d
  }

  TEST_CASE("greedy bound: at most d times the optimum") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const auto net = generators::gen_type1(9, 2, seed);
      for (int d = 1; d <= net.n_b(); d += 2)
        CHECK(greedy(net, d, seed).size <= d * exact::mr_exact(net, d).value);
    }
  }

  TEST_CASE("greedy determinism") {
    const auto net = generators::gen_type1(15, 3, 11);
    const auto a = greedy(net, 5, 42);
    const auto b = greedy(net, 5, 42);
    CHECK(a.removal_a == b.removal_a);
    CHECK(a.failed_b == b.failed_b);
  }

  TEST_CASE("rounding is optimal when the relaxation is integral") {
    for (int d = 1; d <= 4; ++d) {
      const auto r = randomized_rounding(matching(4), d, 9, 20);
      CHECK(r.size == d);
      CHECK(feasible(matching(4), r, d));
    }
    CHECK(randomized_rounding(k22(), 2, 1).size == 2);
  }

  TEST_CASE("rounding stays feasible on random instances") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto net = generators::gen_type1(10, 2, seed);
      const auto r = randomized_rounding(net, 3, seed, 10);
      CHECK(feasible(net, r, 3));
    }
  }

  TEST_CASE("sa1 basics") {
    const auto r = sa1(k22(), 1, quick_params(5), {0, 1});
    CHECK(r.size == 2);  // MR(1) = 2, nothing smaller is feasible
    CHECK(feasible(k22(), r, 1));

    const auto m = sa1(matching(4), 2, quick_params(6));
    CHECK(m.size == 2);
  }

  TEST_CASE("sa2 basics") {
    const auto r = sa2(k22(), 2, quick_params(7));
    CHECK(r.size == 2);
    CHECK(feasible(k22(), r, 2));
    const auto m = sa2(matching(4), 2, quick_params(8));
    CHECK(m.size == 2);
  }

  TEST_CASE("annealing never loses to its greedy start") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const auto net = generators::gen_type1(12, 3, seed);
      for (int d : {2, 4}) {
        const int g = greedy(net, d, derive_seed(seed, rng_salt::kSaInit)).size;
        auto p = quick_params(seed);
        const auto r1 = sa1(net, d, p);
        const auto r2 = sa2(net, d, p);
        CHECK(r1.size <= g);
        CHECK(r2.size <= g);
        CHECK(feasible(net, r1, d));
        CHECK(feasible(net, r2, d));
      }
    }
  }

  TEST_CASE("trajectories are nonincreasing") {
    const auto net = generators::gen_type1(12, 3, 3);
    for (const auto& r : {sa1(net, 3, quick_params(1)), sa2(net, 3, quick_params(2))}) {
      REQUIRE(!r.trajectory.empty());
      CHECK(std::is_sorted(r.trajectory.rbegin(), r.trajectory.rend()));
      CHECK(r.trajectory.back() == r.size);
    }
  }

  TEST_CASE("seed determinism across runs") {
    const auto net = generators::gen_type1(12, 2, 9);
    auto p = quick_params(1234);
    CHECK(sa1(net, 3, p).removal_a == sa1(net, 3, p).removal_a);
    CHECK(sa2(net, 3, p).removal_a == sa2(net, 3, p).removal_a);
    CHECK(randomized_rounding(net, 3, 99).removal_a ==
          randomized_rounding(net, 3, 99).removal_a);
  }

  TEST_CASE("sandwich: lp <= exact <= heuristics") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const auto net = generators::gen_type1(9, 2, seed);
      for (int d : {1, 3}) {
        const int opt = exact::mr_exact(net, d).value;
        CHECK(lp::solve_relaxation(net, d).objective <= opt + 1e-7);
        CHECK(opt <= greedy(net, d, seed).size);
        CHECK(opt <= randomized_rounding(net, d, seed, 10).size);
        auto p = quick_params(seed);
        CHECK(opt <= sa1(net, d, p).size);
        CHECK(opt <= sa2(net, d, p).size);
      }
    }
  }

  TEST_CASE("parameter and precondition errors") {
    SaParams bad;
    bad.t_final = 2.0;  // above t_initial
    CHECK_THROWS_AS(sa1(k22(), 1, bad), std::invalid_argument);
    CHECK_THROWS_AS(sa2(k22(), 1, bad), std::invalid_argument);
    CHECK_THROWS_AS(sa1(k22(), 2, quick_params(1), {0}), std::invalid_argument);
    CHECK_THROWS_AS(greedy(k22(), 5, 0), std::out_of_range);
  }
}
