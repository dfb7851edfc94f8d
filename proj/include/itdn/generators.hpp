#pragma once

#include <cstdint>

#include "itdn/netmodel.hpp"

namespace itdn::generators {

// Molloy-Reed bipartite network: binomial degree sequences with mean k on
// both sides, stubs paired uniformly, parallel edges rewired, minimum degree
// one enforced by moving stubs off the highest-degree nodes (which keeps the
// realized mean at k). Bidirectional, star topology, validate() == {}.
InterdependentNetwork gen_type1(int n, double k, std::uint64_t seed);

// As gen_type1, but the first half of each side draws mean k1 degrees and the
// second half mean k2. gen_type1(n, k) == gen_type2(n, k, k) stream-for-stream.
InterdependentNetwork gen_type2(int n, double k1, double k2, std::uint64_t seed);

// k-regular bidirectional bipartite network built from k random perfect
// matchings with collision rewiring.
InterdependentNetwork gen_regular(int n, int k, std::uint64_t seed);

// Tight instance for the greedy worst case: A holds x(d+1) nodes in d+1
// batches, B holds 2d nodes in two batches; B-batch-1 node i is wired to all
// of A-batch i, every B-batch-2 node to all of the last A-batch. MR(d) = x,
// while greedy tie-breaks can realize x*d.
InterdependentNetwork gen_greedy_worst_case(int x, int d);

}  // namespace itdn::generators
