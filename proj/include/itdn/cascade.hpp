#pragma once

#include <vector>

#include "itdn/netmodel.hpp"

namespace itdn {

// Stage-by-stage record of a cascading failure. stages[0] holds the initial
// removals; later entries are the synchronous rounds of induced failures.
// failed_* include the removed nodes; surviving_* are the complements.
struct CascadeResult {
  std::vector<std::vector<NodeRef>> stages;
  std::vector<int> failed_a, failed_b;
  std::vector<int> surviving_a, surviving_b;
  int stage_count = 0;  // rounds after the initial removals

  bool has_failed(Side s, int i) const;
};

// Unique maximal fixed point of the operating rules: repeatedly fail, in
// synchronous rounds, every node that lost all interdependency support or its
// intra-network path to a source. Removing a source node (General mode) is an
// error; sources never fail.
CascadeResult cascade(const InterdependentNetwork& net, const std::vector<NodeRef>& initial);

// Single-round failure set on side B for a bidirectional star network:
// exactly the B-nodes whose supporters all lie in `removed_a`. Throws unless
// the network is bidirectional with star topology.
std::vector<int> one_stage_failures(const InterdependentNetwork& net,
                                    const std::vector<int>& removed_a);

}  // namespace itdn
