#pragma once

#include <vector>

#include "itdn/netmodel.hpp"

namespace itdn::exact {

enum class Method { Exact, Greedy, Rounding, SA1, SA2 };

struct MrResult {
  int value = 0;
  std::vector<int> witness_a;  // removal set, the neighborhood of target_b
  std::vector<int> target_b;   // minimizing failure set found
};

// MR values for every failure size up to d_max; values[0] == 0 by convention.
struct MrCurve {
  Method method = Method::Exact;
  std::vector<int> values;
  std::vector<std::vector<int>> witness_a;
  int d_max() const { return static_cast<int>(values.size()) - 1; }
};

// Minimum A-side removals failing at least d B-nodes in a bidirectional star
// network. Exhaustive over failure-set candidates while the search space is
// at most ~10^7 subsets (B-nodes with identical neighborhoods are collapsed
// first), branch-and-bound beyond that. Witness is the lexicographically
// smallest minimizer found under the fixed enumeration order.
MrResult mr_exact(const InterdependentNetwork& net, int d);

MrCurve mr_curve_exact(const InterdependentNetwork& net, int d_max);

// ILP search: branches on the most fractional y_j (ties to the lower index),
// bounds from the LP relaxation, incumbent from the greedy heuristic.
MrResult mr_branch_and_bound(const InterdependentNetwork& net, int d);

// min over i in [0, d] of MR(i) + (d - i), with MR(0) = 0.
int mrb_exact(const InterdependentNetwork& net, int d);

struct MrbResult {
  int value = 0;
  std::vector<int> removal_a;
  std::vector<int> removal_b;
};
MrbResult mrb_exact_result(const InterdependentNetwork& net, int d);

// Brute force over removals from both sides with the full cascade engine;
// works on any topology/directionality. Exhaustive, n_a + n_b <= 20.
int mrb_exact_general(const InterdependentNetwork& net, int d);

// MRB(d) for every d in one sweep; same brute-force semantics as above.
std::vector<int> mrb_general_curve(const InterdependentNetwork& net);

// Brute force over A-side removals with the full cascade engine; n_a <= 20.
// Throws if no removal set achieves d failures (possible outside star mode).
int mr_exact_via_cascade(const InterdependentNetwork& net, int d);

struct BipartiteGraph {
  int n_a = 0;
  int n_b = 0;
  EdgeList edges;
};

// Bipartite complement of the AB interdependency edges. Accepts any edge set,
// including ones that fail validate().
BipartiteGraph complement_transform(const InterdependentNetwork& net);

// Largest A-side set complete to some B-side set of size >= d in g.
// d == 0 returns n_a (an empty B-side is vacuously complete to all of A).
int max_one_sided_biclique(const BipartiteGraph& g, int d);

// Replaces every B-node with w identical copies; requires w > n_a + n_b.
InterdependentNetwork cluster_expand(const InterdependentNetwork& net, int w);

}  // namespace itdn::exact
