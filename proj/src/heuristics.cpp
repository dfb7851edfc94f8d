#include "itdn/heuristics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "itdn/cascade.hpp"
#include "itdn/lp.hpp"
#include "itdn/rng.hpp"

namespace itdn::heuristics {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void require_bidirectional_star(const InterdependentNetwork& net) {
  if (net.directionality() != Directionality::Bidirectional ||
      net.topology() != IntraTopology::Star)
    throw std::invalid_argument("heuristics require a bidirectional star network");
}

void check_params(const SaParams& p) {
  if (!(p.t_initial > 0) || !(p.t_final > 0) || !(p.t_final < p.t_initial))
    throw std::invalid_argument("temperatures must satisfy 0 < t_final < t_initial");
  if (!(p.reduction > 0 && p.reduction < 1))
    throw std::invalid_argument("reduction must lie in (0, 1)");
  if (p.inner_loop < 0) throw std::invalid_argument("inner_loop must be >= 1 (0 = default)");
}

// Member set over [0, n) with O(1) insert/erase/sample.
class IndexedSet {
 public:
  IndexedSet(int n, bool full) : pos_(n, -1) {
    if (full) {
      items_.resize(n);
      for (int i = 0; i < n; ++i) {
        items_[i] = i;
        pos_[i] = i;
      }
    }
  }
  int size() const { return static_cast<int>(items_.size()); }
  bool contains(int v) const { return pos_[v] >= 0; }
  void insert(int v) {
    pos_[v] = size();
    items_.push_back(v);
  }
  void erase(int v) {
    const int p = pos_[v];
    const int last = items_.back();
    items_[p] = last;
    pos_[last] = p;
    items_.pop_back();
    pos_[v] = -1;
  }
  int sample(Rng& rng) const { return items_[rng.below_int(size())]; }
  std::vector<int> sorted() const {
    std::vector<int> out = items_;
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<int> items_;
  std::vector<int> pos_;
};

}  // namespace

HeuristicResult greedy(const InterdependentNetwork& net, int d, std::uint64_t seed) {
  require_bidirectional_star(net);
  if (d < 0 || d > net.n_b()) throw std::out_of_range("d out of range [0, n_b]");
  const auto t0 = Clock::now();
  Rng rng(derive_seed(seed, rng_salt::kGreedy));

  std::vector<int> residual(net.n_b());
  for (int b = 0; b < net.n_b(); ++b)
    residual[b] = static_cast<int>(net.supporters_of_b(b).size());
  std::vector<char> removed(net.n_a(), 0), failed(net.n_b(), 0);

  HeuristicResult result;
  result.seed = seed;
  while (static_cast<int>(result.failed_b.size()) < d) {
    int min_deg = net.n_a() + 1;
    for (int b = 0; b < net.n_b(); ++b)
      if (!failed[b]) min_deg = std::min(min_deg, residual[b]);
    std::vector<int> ties;
    for (int b = 0; b < net.n_b(); ++b)
      if (!failed[b] && residual[b] == min_deg) ties.push_back(b);
    const int pick = ties[rng.below_int(static_cast<int>(ties.size()))];

    failed[pick] = 1;
    result.failed_b.push_back(pick);
    for (int a : net.supporters_of_b(pick)) {
      if (removed[a]) continue;
      removed[a] = 1;
      result.removal_a.push_back(a);
      for (int b2 : net.dependents_of_a(a))
        if (!failed[b2]) --residual[b2];
    }
  }
  std::sort(result.removal_a.begin(), result.removal_a.end());
  std::sort(result.failed_b.begin(), result.failed_b.end());
  result.size = static_cast<int>(result.removal_a.size());
  result.elapsed_ms = ms_since(t0);
  return result;
}

HeuristicResult randomized_rounding(const InterdependentNetwork& net, int d, std::uint64_t seed,
                                    int trials) {
  require_bidirectional_star(net);
  if (d < 0 || d > net.n_b()) throw std::out_of_range("d out of range [0, n_b]");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const auto t0 = Clock::now();

  const lp::LpSolution sol = lp::solve_relaxation(net, d);
  if (sol.status != lp::LpStatus::Optimal)
    throw std::runtime_error("randomized_rounding: LP relaxation infeasible");
  std::vector<double> prob(net.n_b());
  for (int j = 0; j < net.n_b(); ++j) prob[j] = std::clamp(sol.y_star[j], 0.0, 1.0);

  // Completion order when sampling stalls: descending y*, ties by index.
  std::vector<int> by_prob(net.n_b());
  for (int j = 0; j < net.n_b(); ++j) by_prob[j] = j;
  std::stable_sort(by_prob.begin(), by_prob.end(),
                   [&](int a, int b) { return prob[a] > prob[b]; });

  Rng rng(derive_seed(seed, rng_salt::kRounding));
  const long sweep_cap = 50L * net.n_b();
  const auto masks = b_support_masks(net);

  HeuristicResult best;
  best.seed = seed;
  best.size = net.n_a() + 1;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<char> in_f(net.n_b(), 0);
    int selected = 0;
    for (long sweep = 0; sweep < sweep_cap && selected < d; ++sweep) {
      for (int j = 0; j < net.n_b() && selected < d; ++j)
        if (!in_f[j] && rng.bernoulli(prob[j])) {
          in_f[j] = 1;
          ++selected;
        }
    }
    for (int t = 0; t < net.n_b() && selected < d; ++t)
      if (!in_f[by_prob[t]]) {
        in_f[by_prob[t]] = 1;
        ++selected;
      }

    Bitset removal(net.n_a());
    std::vector<int> f;
    for (int j = 0; j < net.n_b(); ++j)
      if (in_f[j]) {
        f.push_back(j);
        removal |= masks[j];
      }
    const int size = removal.count();
    if (size < best.size) {
      best.size = size;
      best.removal_a = removal.to_indices();
      best.failed_b = std::move(f);
    }
  }
  best.elapsed_ms = ms_since(t0);
  return best;
}

namespace {

// Shared annealing scaffolding: geometric cooling, best-seen tracking.
struct Schedule {
  double t;
  const SaParams& p;
  long inner;
  explicit Schedule(const SaParams& params, int n_b)
      : t(params.t_initial), p(params), inner(params.inner_loop > 0 ? params.inner_loop
                                                                    : 50L * n_b) {}
  bool running() const { return t >= p.t_final; }
  void cool() { t *= p.reduction; }
};

std::vector<int> initial_removal(const InterdependentNetwork& net, int d,
                                 const SaParams& params, const std::vector<int>& initial) {
  if (!initial.empty()) {
    std::vector<int> r = initial;
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    if (static_cast<int>(one_stage_failures(net, r).size()) < d)
      throw std::invalid_argument("initial removal set is infeasible");
    return r;
  }
  return greedy(net, d, derive_seed(params.seed, rng_salt::kSaInit)).removal_a;
}

}  // namespace

HeuristicResult sa1(const InterdependentNetwork& net, int d, const SaParams& params,
                    const std::vector<int>& initial) {
  require_bidirectional_star(net);
  if (d < 0 || d > net.n_b()) throw std::out_of_range("d out of range [0, n_b]");
  check_params(params);
  const auto t0 = Clock::now();

  HeuristicResult result;
  result.seed = params.seed;
  if (d == 0) return result;

  const std::vector<int> r0 = initial_removal(net, d, params, initial);
  Rng rng(derive_seed(params.seed, rng_salt::kSa1));

  long total_degree = 0;
  for (int a = 0; a < net.n_a(); ++a) total_degree += net.supporters_of_a(a).size();

  // alive[b]: supporters not currently removed; failed counts alive[b] == 0.
  std::vector<int> alive(net.n_b());
  for (int b = 0; b < net.n_b(); ++b) alive[b] = static_cast<int>(net.supporters_of_b(b).size());
  int failed = 0;
  IndexedSet in_r(net.n_a(), false), out_r(net.n_a(), true);

  auto add = [&](int a) {
    for (int b : net.dependents_of_a(a))
      if (--alive[b] == 0) ++failed;
  };
  auto remove = [&](int a) {
    for (int b : net.dependents_of_a(a))
      if (alive[b]++ == 0) --failed;
  };
  for (int a : r0) {
    add(a);
    in_r.insert(a);
    out_r.erase(a);
  }

  int best_size = in_r.size();
  std::vector<int> best_set = in_r.sorted();

  Schedule sched(params, net.n_b());
  while (sched.running()) {
    for (long it = 0; it < sched.inner; ++it) {
      enum { kAdd, kRemove, kReplace };
      int moves[3], n_moves = 0;
      if (out_r.size() > 0) moves[n_moves++] = kAdd;
      if (in_r.size() > 0) moves[n_moves++] = kRemove;
      if (out_r.size() > 0 && in_r.size() > 0) moves[n_moves++] = kReplace;
      if (n_moves == 0) break;
      const int move = moves[rng.below_int(n_moves)];

      int added = -1, dropped = -1;
      if (move == kAdd) {
        added = out_r.sample(rng);
        add(added);
      } else if (move == kRemove) {
        dropped = in_r.sample(rng);
        remove(dropped);
      } else {
        dropped = in_r.sample(rng);
        added = out_r.sample(rng);
        remove(dropped);
        add(added);
      }

      auto undo = [&] {
        if (added >= 0) remove(added);
        if (dropped >= 0) add(dropped);
      };

      if (failed < d) {
        undo();
        continue;
      }
      if (move == kAdd) {
        const double deg = static_cast<double>(net.supporters_of_a(added).size());
        const double p = std::exp(-(1.0 / sched.t) * (1.0 - deg / static_cast<double>(total_degree)));
        if (rng.uniform01() >= p) {
          undo();
          continue;
        }
      }
      if (added >= 0) {
        in_r.insert(added);
        out_r.erase(added);
      }
      if (dropped >= 0) {
        in_r.erase(dropped);
        out_r.insert(dropped);
      }
      if (in_r.size() < best_size) {
        best_size = in_r.size();
        best_set = in_r.sorted();
      }
    }
    result.trajectory.push_back(best_size);
    sched.cool();
  }

  result.removal_a = std::move(best_set);
  result.size = best_size;
  result.failed_b = one_stage_failures(net, result.removal_a);
  result.elapsed_ms = ms_since(t0);
  return result;
}

HeuristicResult sa2(const InterdependentNetwork& net, int d, const SaParams& params,
                    const std::vector<int>& initial) {
  require_bidirectional_star(net);
  if (d < 0 || d > net.n_b()) throw std::out_of_range("d out of range [0, n_b]");
  check_params(params);
  const auto t0 = Clock::now();

  HeuristicResult result;
  result.seed = params.seed;
  if (d == 0) return result;

  const std::vector<int> r0 = initial_removal(net, d, params, initial);
  const int r0_size = static_cast<int>(r0.size());
  Rng rng(derive_seed(params.seed, rng_salt::kSa2));

  // F is the failure set; R = N(F) is tracked through per-A-node counters.
  std::vector<int> cnt(net.n_a(), 0);
  int r_size = 0;
  IndexedSet in_f(net.n_b(), false), out_f(net.n_b(), true);

  auto add_f = [&](int j) {
    for (int a : net.supporters_of_b(j))
      if (cnt[a]++ == 0) ++r_size;
  };
  auto remove_f = [&](int j) {
    for (int a : net.supporters_of_b(j))
      if (--cnt[a] == 0) --r_size;
  };
  for (int j : one_stage_failures(net, r0)) {
    add_f(j);
    in_f.insert(j);
    out_f.erase(j);
  }

  auto current_r = [&] {
    std::vector<int> r;
    for (int a = 0; a < net.n_a(); ++a)
      if (cnt[a] > 0) r.push_back(a);
    return r;
  };

  int best_size = r_size;
  std::vector<int> best_r = current_r();
  std::vector<int> best_f = in_f.sorted();

  Schedule sched(params, net.n_b());
  while (sched.running()) {
    for (long it = 0; it < sched.inner; ++it) {
      enum { kAdd, kRemove, kReplace };
      int moves[3], n_moves = 0;
      if (out_f.size() > 0) moves[n_moves++] = kAdd;
      if (in_f.size() == d) {
        if (out_f.size() > 0 && in_f.size() > 0) moves[n_moves++] = kReplace;
      } else {
        moves[n_moves++] = kRemove;
      }
      if (n_moves == 0) break;
      const int move = moves[rng.below_int(n_moves)];

      const int old_r = r_size;
      int added = -1, dropped = -1;
      if (move == kAdd) {
        added = out_f.sample(rng);
        add_f(added);
      } else if (move == kRemove) {
        dropped = in_f.sample(rng);
        remove_f(dropped);
      } else {
        dropped = in_f.sample(rng);
        added = out_f.sample(rng);
        remove_f(dropped);
        add_f(added);
      }

      bool accept = r_size <= old_r;
      if (!accept) {
        const double p = std::exp(-static_cast<double>(r_size - r0_size) / sched.t);
        accept = rng.uniform01() < std::min(1.0, p);
      }
      if (!accept) {
        if (added >= 0) remove_f(added);
        if (dropped >= 0) add_f(dropped);
        continue;
      }
      if (added >= 0) {
        in_f.insert(added);
        out_f.erase(added);
      }
      if (dropped >= 0) {
        in_f.erase(dropped);
        out_f.insert(dropped);
      }
      if (r_size < best_size) {
        best_size = r_size;
        best_r = current_r();
        best_f = in_f.sorted();
      }
    }
    result.trajectory.push_back(best_size);
    sched.cool();
  }

  result.removal_a = std::move(best_r);
  result.size = best_size;
  result.failed_b = std::move(best_f);
  result.elapsed_ms = ms_since(t0);
  return result;
}

}  // namespace itdn::heuristics
