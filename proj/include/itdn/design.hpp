#pragma once

#include <cstdint>
#include <vector>

#include "itdn/netmodel.hpp"
#include "itdn/rational.hpp"

namespace itdn::design {

// Node layout of the 2-robust construction: a hub A-node wired to k spoke
// B-nodes, k A-batches of k-1 nodes hanging off the spokes, and k-1 B-batches
// of k-1 nodes wired so that every same-side pair shares exactly one
// neighbor. Indices refer to the nodes of `net`.
struct TwoRobustLayout {
  int k = 0;
  int hub_a = 0;
  std::vector<int> spokes_b;
  std::vector<std::vector<int>> batches_a;
  std::vector<std::vector<int>> batches_b;
  InterdependentNetwork net;
};

// k-regular network on k(k-1)+1 nodes per side with every same-side pair
// sharing exactly one neighbor, hence MR(2) = 2k-1. Realized from a cyclic
// planar difference set; throws when none exists for this k (k-1 must be a
// prime power) or k > 12.
TwoRobustLayout construct_2robust_layout(int k);
InterdependentNetwork construct_2robust(int k);

// First perfect difference set of size k in Z_{k(k-1)+1}, in lexicographic
// order, or empty if none exists.
std::vector<int> find_planar_difference_set(int k);

struct DesignResult {
  InterdependentNetwork net;
  int x = 0;  // min over same-side pairs of their joint neighborhood size
};

// Exhaustive search over k-regular edge matrices maximizing the pairwise
// joint-neighborhood lower bound X on both sides. Symmetry is broken by
// fixing node 0's neighborhood to {0..k-1} and forcing lexicographically
// nondecreasing rows. Desk scale: 2 <= n <= 10, k <= n.
DesignResult design_2robust_ilp(int n, int k);

struct ExpansionResult {
  Rational value;
  std::vector<int> witness_b;
  bool exact = true;  // sampled mode yields an upper bound on h(G)
};

// h(G) = min over nonempty S subset of B of |N(S)| / |S|, exact rational.
// Exhaustive; requires n_b <= 20.
ExpansionResult node_expansion(const InterdependentNetwork& net);

// Upper bound on h(G) from uniformly sampled subsets.
ExpansionResult node_expansion_sampled(const InterdependentNetwork& net, int samples,
                                       std::uint64_t seed);

struct RelativeRobustness {
  Rational value;
  int witness_d = 0;
};

// min over D in [1, n_b] of MR(D)/D via the exact MR curve.
RelativeRobustness relative_robustness(const InterdependentNetwork& net);

// Fraction of uniformly sampled k-Bregular bipartite graphs (every B-node
// picks a uniform k-subset of A) that are (alpha*n, k-2) node expanders:
// every S with |S| <= alpha*n has |N(S)| >= (k-2)|S|. Exhaustive subset
// check; requires n <= 20.
double expander_check(int n, int k, double alpha, int trials, std::uint64_t seed);

}  // namespace itdn::design
