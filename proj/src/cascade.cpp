#include "itdn/cascade.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace itdn {

namespace {

// Alive nodes intra-connected to a source. Star mode: every alive node.
Bitset source_connected(const InterdependentNetwork& net, Side side, const Bitset& alive) {
  const int n = net.node_count(side);
  Bitset reach(n);
  if (net.topology() == IntraTopology::Star) {
    for (int i = 0; i < n; ++i)
      if (alive.test(i)) reach.set(i);
    return reach;
  }
  std::queue<int> q;
  for (int s : net.intra(side).sources) {
    reach.set(s);
    q.push(s);
  }
  const auto& adj = net.intra_adjacency(side);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u])
      if (alive.test(v) && !reach.test(v)) {
        reach.set(v);
        q.push(v);
      }
  }
  return reach;
}

}  // namespace

bool CascadeResult::has_failed(Side s, int i) const {
  const auto& v = s == Side::A ? failed_a : failed_b;
  return std::binary_search(v.begin(), v.end(), i);
}

CascadeResult cascade(const InterdependentNetwork& net, const std::vector<NodeRef>& initial) {
  Bitset alive_a(net.n_a()), alive_b(net.n_b());
  for (int i = 0; i < net.n_a(); ++i) alive_a.set(i);
  for (int i = 0; i < net.n_b(); ++i) alive_b.set(i);

  CascadeResult result;
  std::vector<NodeRef> stage0;
  for (NodeRef r : initial) {
    if (r.index < 0 || r.index >= net.node_count(r.side))
      throw std::out_of_range("removal index out of range");
    if (net.is_source(r.side, r.index))
      throw std::invalid_argument("source nodes cannot be removed");
    Bitset& alive = r.side == Side::A ? alive_a : alive_b;
    if (!alive.test(r.index)) continue;  // duplicate removal
    alive.reset(r.index);
    stage0.push_back(r);
  }
  std::sort(stage0.begin(), stage0.end());
  result.stages.push_back(std::move(stage0));

  for (;;) {
    const Bitset conn_a = source_connected(net, Side::A, alive_a);
    const Bitset conn_b = source_connected(net, Side::B, alive_b);
    std::vector<NodeRef> round;

    for (int i = 0; i < net.n_a(); ++i) {
      if (!alive_a.test(i) || net.is_source(Side::A, i)) continue;
      bool supported = false;
      for (int b : net.supporters_of_a(i))
        if (alive_b.test(b)) {
          supported = true;
          break;
        }
      if (!supported || !conn_a.test(i)) round.push_back({Side::A, i});
    }
    for (int j = 0; j < net.n_b(); ++j) {
      if (!alive_b.test(j) || net.is_source(Side::B, j)) continue;
      bool supported = false;
      for (int a : net.supporters_of_b(j))
        if (alive_a.test(a)) {
          supported = true;
          break;
        }
      if (!supported || !conn_b.test(j)) round.push_back({Side::B, j});
    }

    if (round.empty()) break;
    for (NodeRef r : round) (r.side == Side::A ? alive_a : alive_b).reset(r.index);
    result.stages.push_back(std::move(round));
  }

  result.stage_count = static_cast<int>(result.stages.size()) - 1;
  for (int i = 0; i < net.n_a(); ++i)
    (alive_a.test(i) ? result.surviving_a : result.failed_a).push_back(i);
  for (int j = 0; j < net.n_b(); ++j)
    (alive_b.test(j) ? result.surviving_b : result.failed_b).push_back(j);
  return result;
}

std::vector<int> one_stage_failures(const InterdependentNetwork& net,
                                    const std::vector<int>& removed_a) {
  if (net.directionality() != Directionality::Bidirectional ||
      net.topology() != IntraTopology::Star)
    throw std::invalid_argument("one_stage_failures requires a bidirectional star network");

  Bitset removed(net.n_a());
  for (int a : removed_a) {
    if (a < 0 || a >= net.n_a()) throw std::out_of_range("removal index out of range");
    removed.set(a);
  }
  std::vector<int> failed;
  for (int j = 0; j < net.n_b(); ++j) {
    bool all_removed = true;
    for (int a : net.supporters_of_b(j))
      if (!removed.test(a)) {
        all_removed = false;
        break;
      }
    if (all_removed) failed.push_back(j);
  }
  return failed;
}

}  // namespace itdn
