#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "itdn/netmodel.hpp"

namespace itdn::testing {

inline InterdependentNetwork star_bi(int n_a, int n_b, EdgeList edges_ab) {
  NetworkBuilder b;
  b.n_a = n_a;
  b.n_b = n_b;
  b.edges_ab = std::move(edges_ab);
  return b.build();
}

inline InterdependentNetwork k22() { return star_bi(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}); }

inline InterdependentNetwork matching(int n) {
  EdgeList e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, i);
  return star_bi(n, n, e);
}

// Independent MR oracle: literal enumeration of all size-d B-subsets with
// plain set unions. No mask grouping, no pruning.
inline int naive_mr(const InterdependentNetwork& net, int d) {
  if (d == 0) return 0;
  const int nb = net.n_b();
  std::vector<int> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  int best = net.n_a() + 1;
  for (;;) {
    std::set<int> neighborhood;
    for (int i : idx)
      for (int a : net.supporters_of_b(i)) neighborhood.insert(a);
    best = std::min(best, static_cast<int>(neighborhood.size()));
    int i = d - 1;
    while (i >= 0 && idx[i] == nb - d + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

}  // namespace itdn::testing
