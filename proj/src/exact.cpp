#include "itdn/exact.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "itdn/cascade.hpp"
#include "itdn/heuristics.hpp"
#include "itdn/lp.hpp"

namespace itdn::exact {

namespace {

constexpr long kExhaustiveLimit = 10'000'000;

void require_bidirectional_star(const InterdependentNetwork& net) {
  if (net.directionality() != Directionality::Bidirectional ||
      net.topology() != IntraTopology::Star)
    throw std::invalid_argument("operation requires a bidirectional star network");
}

void check_d(int d, int n_b) {
  if (d < 0 || d > n_b) throw std::out_of_range("d out of range [0, n_b]");
}

// B-nodes with identical supporter sets are interchangeable for MR purposes:
// failing members of a group always costs the group's mask, so the subset
// search runs over distinct masks with multiplicities.
struct Groups {
  std::vector<Bitset> mask;
  std::vector<std::vector<int>> members;  // ascending within each group
  std::vector<int> group_of;              // per B-node
  int count() const { return static_cast<int>(mask.size()); }
};

Groups group_b_nodes(const InterdependentNetwork& net) {
  Groups g;
  g.group_of.assign(net.n_b(), 0);
  const auto masks = b_support_masks(net);
  std::map<Bitset, int> index;
  for (int b = 0; b < net.n_b(); ++b) {
    auto [it, inserted] = index.try_emplace(masks[b], g.count());
    if (inserted) {
      g.mask.push_back(masks[b]);
      g.members.push_back({});
    }
    g.group_of[b] = it->second;
    g.members[it->second].push_back(b);
  }
  return g;
}

// Number of group subsets of size <= s_max, saturating at the budget.
long subset_budget(int groups, int s_max) {
  long total = 1;
  double binom = 1;
  for (int s = 1; s <= std::min(groups, s_max); ++s) {
    binom = binom * (groups - s + 1) / s;
    total += static_cast<long>(std::min(binom, 1e18));
    if (total > kExhaustiveLimit) return total;
  }
  return total;
}

struct ExhaustiveSearch {
  const Groups& g;
  int width;  // n_a
  int d;
  std::vector<int> suffix_cap;
  int best_cost;
  std::vector<int> best_y;
  Bitset best_removal;
  std::vector<int> chosen;

  ExhaustiveSearch(const Groups& groups, int n_a, int target)
      : g(groups), width(n_a), d(target), best_cost(n_a + 1), best_removal(n_a) {
    suffix_cap.assign(g.count() + 1, 0);
    for (int i = g.count() - 1; i >= 0; --i)
      suffix_cap[i] = suffix_cap[i + 1] + static_cast<int>(g.members[i].size());
  }

  void run() { rec(0, Bitset(width), 0); }

  void rec(int idx, const Bitset& covered, int cap) {
    if (cap >= d) {
      candidate();
      return;
    }
    if (idx >= g.count() || cap + suffix_cap[idx] < d) return;

    Bitset with = covered;
    with |= g.mask[idx];
    if (with.count() <= best_cost) {
      chosen.push_back(idx);
      rec(idx + 1, with, cap + static_cast<int>(g.members[idx].size()));
      chosen.pop_back();
    }
    rec(idx + 1, covered, cap);
  }

  // The d lowest-index members of the chosen groups; its cost is the union of
  // the masks it actually touches, which can undercut the full chosen cover.
  void candidate() {
    std::vector<int> y;
    for (int gi : chosen) y.insert(y.end(), g.members[gi].begin(), g.members[gi].end());
    std::sort(y.begin(), y.end());
    y.resize(d);
    Bitset removal(width);
    for (int b : y) removal |= g.mask[g.group_of[b]];
    const int cost = removal.count();
    if (cost < best_cost || (cost == best_cost && y < best_y)) {
      best_cost = cost;
      best_y = std::move(y);
      best_removal = std::move(removal);
    }
  }
};

}  // namespace

MrResult mr_exact(const InterdependentNetwork& net, int d) {
  require_bidirectional_star(net);
  check_d(d, net.n_b());
  if (d == 0) return {};

  const Groups g = group_b_nodes(net);
  if (subset_budget(g.count(), d) > kExhaustiveLimit) return mr_branch_and_bound(net, d);

  ExhaustiveSearch search(g, net.n_a(), d);
  search.run();
  return {search.best_cost, search.best_removal.to_indices(), std::move(search.best_y)};
}

MrCurve mr_curve_exact(const InterdependentNetwork& net, int d_max) {
  require_bidirectional_star(net);
  check_d(d_max, net.n_b());

  const Groups g = group_b_nodes(net);
  if (subset_budget(g.count(), d_max) > kExhaustiveLimit)
    throw std::runtime_error("mr_curve_exact: search space exceeds the exhaustive budget");

  // Cheapest group subset per achievable capacity (clamped to d_max); every
  // subset is visited once, supersets past d_max capacity are dominated.
  struct Entry {
    int cost = -1;
    std::vector<int> members;
  };
  std::vector<Entry> best_at_cap(d_max + 1);
  std::vector<int> chosen;

  auto record = [&](const Bitset& covered, int cap) {
    const int c = std::min(cap, d_max);
    std::vector<int> members;
    for (int gi : chosen)
      members.insert(members.end(), g.members[gi].begin(), g.members[gi].end());
    std::sort(members.begin(), members.end());
    const int cost = covered.count();
    Entry& e = best_at_cap[c];
    if (e.cost < 0 || cost < e.cost || (cost == e.cost && members < e.members))
      e = {cost, std::move(members)};
  };

  std::function<void(int, const Bitset&, int)> rec = [&](int idx, const Bitset& covered, int cap) {
    if (idx == g.count() || cap >= d_max) {
      record(covered, cap);
      return;
    }
    Bitset with = covered;
    with |= g.mask[idx];
    chosen.push_back(idx);
    rec(idx + 1, with, cap + static_cast<int>(g.members[idx].size()));
    chosen.pop_back();
    rec(idx + 1, covered, cap);
  };
  rec(0, Bitset(net.n_a()), 0);

  const auto masks = b_support_masks(net);
  MrCurve curve;
  curve.values.assign(d_max + 1, 0);
  curve.witness_a.assign(d_max + 1, {});
  for (int d = 1; d <= d_max; ++d) {
    int best = -1;
    const Entry* pick = nullptr;
    for (int c = d; c <= d_max; ++c) {
      const Entry& e = best_at_cap[c];
      if (e.cost >= 0 && (best < 0 || e.cost < best)) {
        best = e.cost;
        pick = &e;
      }
    }
    if (!pick) throw std::logic_error("mr_curve_exact: missing capacity entry");
    curve.values[d] = best;
    Bitset removal(net.n_a());
    for (int t = 0; t < d; ++t) removal |= masks[pick->members[t]];
    curve.witness_a[d] = removal.to_indices();
  }
  return curve;
}

MrResult mr_branch_and_bound(const InterdependentNetwork& net, int d) {
  require_bidirectional_star(net);
  check_d(d, net.n_b());
  if (d == 0) return {};

  const auto incumbent = heuristics::greedy(net, d, 0);
  int best = incumbent.size;
  std::vector<int> best_x = incumbent.removal_a;
  std::vector<int> best_y = incumbent.failed_b;

  lp::Fixings fix;
  std::function<void()> rec = [&]() {
    const lp::LpSolution sol = lp::solve_relaxation(net, d, fix);
    if (sol.status == lp::LpStatus::Infeasible) return;
    if (static_cast<int>(std::ceil(sol.objective - 1e-6)) >= best) return;

    int branch_j = -1;
    double branch_frac = 1e-6;
    for (int j = 0; j < net.n_b(); ++j) {
      const double frac = std::min(sol.y_star[j], 1.0 - sol.y_star[j]);
      if (frac > branch_frac + 1e-12) {
        branch_frac = frac;
        branch_j = j;
      }
    }
    if (branch_j < 0) {
      const int value = static_cast<int>(std::llround(sol.objective));
      if (value < best) {
        best = value;
        best_x.clear();
        best_y.clear();
        for (int i = 0; i < net.n_a(); ++i)
          if (sol.x_star[i] > 0.5) best_x.push_back(i);
        for (int j = 0; j < net.n_b(); ++j)
          if (sol.y_star[j] > 0.5) best_y.push_back(j);
      }
      return;
    }
    fix.y.emplace_back(branch_j, 1);
    rec();
    fix.y.back().second = 0;
    rec();
    fix.y.pop_back();
  };
  rec();

  return {best, std::move(best_x), std::move(best_y)};
}

int mrb_exact(const InterdependentNetwork& net, int d) { return mrb_exact_result(net, d).value; }

MrbResult mrb_exact_result(const InterdependentNetwork& net, int d) {
  require_bidirectional_star(net);
  check_d(d, net.n_b());

  std::vector<int> mr(d + 1, 0);
  std::vector<std::vector<int>> witness(d + 1);
  if (subset_budget(group_b_nodes(net).count(), d) <= kExhaustiveLimit) {
    MrCurve curve = mr_curve_exact(net, d);
    mr = std::move(curve.values);
    witness = std::move(curve.witness_a);
  } else {
    for (int i = 1; i <= d; ++i) {
      MrResult r = mr_branch_and_bound(net, i);
      mr[i] = r.value;
      witness[i] = std::move(r.witness_a);
    }
  }

  int best_i = 0;
  for (int i = 1; i <= d; ++i)
    if (mr[i] + (d - i) < mr[best_i] + (d - best_i)) best_i = i;

  MrbResult out;
  out.value = mr[best_i] + (d - best_i);
  out.removal_a = witness[best_i];
  // Remaining d - i failures come from removing B-nodes directly; take the
  // lowest indices not already failed by the A-side witness.
  const auto failed = one_stage_failures(net, out.removal_a);
  Bitset already(net.n_b());
  for (int b : failed) already.set(b);
  int need = d - best_i;
  for (int b = 0; b < net.n_b() && need > 0; ++b)
    if (!already.test(b)) {
      out.removal_b.push_back(b);
      --need;
    }
  return out;
}

namespace {

std::vector<NodeRef> removal_universe(const InterdependentNetwork& net, bool both_sides) {
  std::vector<NodeRef> u;
  for (int i = 0; i < net.n_a(); ++i)
    if (!net.is_source(Side::A, i)) u.push_back({Side::A, i});
  if (both_sides)
    for (int j = 0; j < net.n_b(); ++j)
      if (!net.is_source(Side::B, j)) u.push_back({Side::B, j});
  return u;
}

int failed_b_count(const InterdependentNetwork& net, const std::vector<NodeRef>& removal) {
  return static_cast<int>(cascade(net, removal).failed_b.size());
}

// Size-s subsets of `universe` in lexicographic order; fn returns true to stop.
bool for_each_combination(const std::vector<NodeRef>& universe, int s,
                          const std::function<bool(const std::vector<NodeRef>&)>& fn) {
  const int n = static_cast<int>(universe.size());
  std::vector<int> idx(s);
  for (int i = 0; i < s; ++i) idx[i] = i;
  std::vector<NodeRef> subset(s);
  for (;;) {
    for (int i = 0; i < s; ++i) subset[i] = universe[idx[i]];
    if (fn(subset)) return true;
    int i = s - 1;
    while (i >= 0 && idx[i] == n - s + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

int mrb_exact_general(const InterdependentNetwork& net, int d) {
  if (net.n_a() + net.n_b() > 20)
    throw std::invalid_argument("mrb_exact_general: exhaustive mode limited to n_a + n_b <= 20");
  check_d(d, net.non_source_count(Side::B));
  const auto universe = removal_universe(net, true);
  for (int s = 0; s <= static_cast<int>(universe.size()); ++s) {
    const bool found = for_each_combination(
        universe, s,
        [&](const std::vector<NodeRef>& r) { return failed_b_count(net, r) >= d; });
    if (found) return s;
  }
  throw std::runtime_error("mrb_exact_general: target not achievable");
}

std::vector<int> mrb_general_curve(const InterdependentNetwork& net) {
  if (net.n_a() + net.n_b() > 20)
    throw std::invalid_argument("mrb_general_curve: exhaustive mode limited to n_a + n_b <= 20");
  const int nb = net.non_source_count(Side::B);
  const auto universe = removal_universe(net, true);
  std::vector<int> result(nb + 1, -1);
  result[0] = 0;
  int answered = 0;
  for (int s = 0; s <= static_cast<int>(universe.size()) && answered < nb; ++s) {
    int best_failed = 0;
    for_each_combination(universe, s, [&](const std::vector<NodeRef>& r) {
      best_failed = std::max(best_failed, failed_b_count(net, r));
      return best_failed >= nb;
    });
    for (int d = 1; d <= best_failed; ++d)
      if (result[d] < 0) {
        result[d] = s;
        ++answered;
      }
  }
  for (int d = 0; d <= nb; ++d)
    if (result[d] < 0) throw std::runtime_error("mrb_general_curve: target not achievable");
  return result;
}

int mr_exact_via_cascade(const InterdependentNetwork& net, int d) {
  if (net.n_a() > 20)
    throw std::invalid_argument("mr_exact_via_cascade: exhaustive mode limited to n_a <= 20");
  check_d(d, net.non_source_count(Side::B));
  const auto universe = removal_universe(net, false);
  for (int s = 0; s <= static_cast<int>(universe.size()); ++s) {
    const bool found = for_each_combination(
        universe, s,
        [&](const std::vector<NodeRef>& r) { return failed_b_count(net, r) >= d; });
    if (found) return s;
  }
  throw std::runtime_error("mr_exact_via_cascade: target not achievable by A-side removals");
}

BipartiteGraph complement_transform(const InterdependentNetwork& net) {
  BipartiteGraph g;
  g.n_a = net.n_a();
  g.n_b = net.n_b();
  std::vector<Bitset> present(net.n_a(), Bitset(net.n_b()));
  for (const auto& [a, b] : net.edges_ab()) present[a].set(b);
  for (int a = 0; a < g.n_a; ++a)
    for (int b = 0; b < g.n_b; ++b)
      if (!present[a].test(b)) g.edges.emplace_back(a, b);
  return g;
}

int max_one_sided_biclique(const BipartiteGraph& g, int d) {
  if (d < 0) throw std::out_of_range("d must be non-negative");
  if (d == 0) return g.n_a;
  if (d > g.n_b) return 0;

  std::vector<Bitset> adj(g.n_b, Bitset(g.n_a));
  for (const auto& [a, b] : g.edges) adj[b].set(a);

  // Common neighborhoods only shrink as the B-side grows, so the maximum is
  // attained at exactly d members and branches at or below `best` are dead.
  int best = 0;
  std::function<void(int, const Bitset&, int)> rec = [&](int start, const Bitset& common,
                                                         int count) {
    if (count == d) {
      best = std::max(best, common.count());
      return;
    }
    for (int b = start; b <= g.n_b - (d - count); ++b) {
      Bitset inter = common;
      inter &= adj[b];
      if (inter.count() <= best) continue;
      rec(b + 1, inter, count + 1);
    }
  };
  Bitset full(g.n_a);
  for (int a = 0; a < g.n_a; ++a) full.set(a);
  rec(0, full, 0);
  return best;
}

InterdependentNetwork cluster_expand(const InterdependentNetwork& net, int w) {
  require_bidirectional_star(net);
  if (w <= net.n_a() + net.n_b())
    throw std::invalid_argument("cluster_expand: w must exceed n_a + n_b");

  NetworkBuilder builder;
  builder.n_a = net.n_a();
  builder.n_b = net.n_b() * w;
  for (const auto& [a, b] : net.edges_ab())
    for (int c = 0; c < w; ++c) builder.edges_ab.emplace_back(a, b * w + c);
  return builder.build();
}

}  // namespace itdn::exact
