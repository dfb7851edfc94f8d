#pragma once

#include <cstdint>
#include <vector>

#include "itdn/netmodel.hpp"

namespace itdn::heuristics {

struct SaParams {
  double t_initial = 1.0;
  double t_final = 1e-3;
  double reduction = 0.95;
  long inner_loop = 0;  // iterations per temperature; 0 selects 50 * n_b
  std::uint64_t seed = 0;
};

struct HeuristicResult {
  std::vector<int> removal_a;
  std::vector<int> failed_b;  // at least d nodes, all failed by removal_a
  int size = 0;
  double elapsed_ms = 0.0;
  std::uint64_t seed = 0;
  std::vector<int> trajectory;  // best-seen |R| after each cooling step (SA only)
};

// Repeatedly fails a minimum-residual-degree B-node (seeded random among
// ties), removing its surviving A-neighbors, until d nodes have failed.
HeuristicResult greedy(const InterdependentNetwork& net, int d, std::uint64_t seed);

// Solves the LP relaxation once, then per trial samples B-nodes with
// probability y_j* in repeated sweeps until d are selected; keeps the best
// neighborhood over `trials`. Sweeps are capped at 50 * n_b per trial with a
// deterministic top-y* completion, since the sampling loop need not terminate
// when the y* mass is tiny.
HeuristicResult randomized_rounding(const InterdependentNetwork& net, int d, std::uint64_t seed,
                                    int trials = 100);

// Annealing over removal sets: neighbors add, remove or replace one node of
// R; infeasible neighbors are rejected outright. A larger feasible neighbor
// reached by adding node i is accepted with probability
// exp(-(1/T) (1 - d(i) / sum of A-side degrees)). Defaults to the greedy
// solution as the starting point; returns the best set seen.
HeuristicResult sa1(const InterdependentNetwork& net, int d, const SaParams& params,
                    const std::vector<int>& initial = {});

// Annealing over failure sets, which keeps every neighbor feasible: with
// |F| = d a node is added or replaced, with |F| > d added or removed, and
// R' = N(F'). A larger R' is accepted with probability
// exp(-(|R'| - |R0|)/T), capped at 1, with R0 the initial removal set.
HeuristicResult sa2(const InterdependentNetwork& net, int d, const SaParams& params,
                    const std::vector<int>& initial = {});

}  // namespace itdn::heuristics
