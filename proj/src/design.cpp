#include "itdn/design.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "itdn/exact.hpp"
#include "itdn/rng.hpp"

namespace itdn::design {

std::vector<int> find_planar_difference_set(int k) {
  const int n = k * (k - 1) + 1;
  std::vector<char> used(n, 0);
  std::vector<int> set = {0};
  std::function<bool(int)> rec = [&](int last) -> bool {
    if (static_cast<int>(set.size()) == k) return true;
    const int remaining = k - static_cast<int>(set.size());
    for (int v = last + 1; v + remaining - 1 <= n - 1; ++v) {
      // Mark the candidate's differences as they are checked so that
      // duplicates among the new differences themselves are caught too.
      std::vector<int> marked;
      bool ok = true;
      for (int u : set) {
        for (int d : {(v - u) % n, (u - v + n) % n}) {
          if (used[d]) {
            ok = false;
            break;
          }
          used[d] = 1;
          marked.push_back(d);
        }
        if (!ok) break;
      }
      if (ok) {
        set.push_back(v);
        if (rec(v)) return true;
        set.pop_back();
      }
      for (int d : marked) used[d] = 0;
    }
    return false;
  };
  if (k == 1) return {0};
  if (!rec(0)) return {};
  return set;
}

TwoRobustLayout construct_2robust_layout(int k) {
  if (k < 2) throw std::invalid_argument("construct_2robust requires k >= 2");
  if (k > 12) throw std::invalid_argument("construct_2robust: desk-scale guard, k <= 12");
  const std::vector<int> ds = find_planar_difference_set(k);
  if (ds.empty())
    throw std::runtime_error("construct_2robust: no cyclic difference set of size " +
                             std::to_string(k) + " exists; k-1 must be a prime power");

  const int n = k * (k - 1) + 1;
  std::vector<char> in_ds(n, 0);
  for (int d : ds) in_ds[d] = 1;
  // Points p and lines j of the cyclic plane; p lies on j iff p - j is in ds.
  auto on_line = [&](int p, int j) { return in_ds[((p - j) % n + n) % n]; };
  auto lines_through = [&](int p) {
    std::vector<int> out;
    for (int d : ds) out.push_back(((p - d) % n + n) % n);
    std::sort(out.begin(), out.end());
    return out;
  };
  auto points_on = [&](int j) {
    std::vector<int> out;
    for (int d : ds) out.push_back((d + j) % n);
    std::sort(out.begin(), out.end());
    return out;
  };

  TwoRobustLayout layout;
  layout.k = k;

  // A-side: the hub point 0 and, per line through it, the remaining points.
  const std::vector<int> hub_lines = lines_through(0);
  std::vector<int> a_label(n, -1), b_label(n, -1);
  a_label[0] = 0;
  layout.hub_a = 0;
  int next_a = 1;
  for (int j : hub_lines) {
    std::vector<int> batch;
    for (int p : points_on(j))
      if (p != 0) {
        a_label[p] = next_a;
        batch.push_back(next_a++);
      }
    layout.batches_a.push_back(std::move(batch));
  }
  // B-side: the hub lines first, then the lines through each point of the
  // last A-batch.
  int next_b = 0;
  for (int j : hub_lines) b_label[j] = next_b++;
  layout.spokes_b.resize(k);
  for (int t = 0; t < k; ++t) layout.spokes_b[t] = t;
  const int last_line = hub_lines.back();
  for (int p : points_on(last_line)) {
    if (p == 0) continue;
    std::vector<int> batch;
    for (int j : lines_through(p))
      if (j != last_line) {
        b_label[j] = next_b;
        batch.push_back(next_b++);
      }
    layout.batches_b.push_back(std::move(batch));
  }
  if (next_a != n || next_b != n)
    throw std::logic_error("construct_2robust: layout does not partition the plane");

  NetworkBuilder builder;
  builder.n_a = n;
  builder.n_b = n;
  for (int p = 0; p < n; ++p)
    for (int j = 0; j < n; ++j)
      if (on_line(p, j)) builder.edges_ab.emplace_back(a_label[p], b_label[j]);
  layout.net = builder.build();
  return layout;
}

InterdependentNetwork construct_2robust(int k) { return construct_2robust_layout(k).net; }

DesignResult design_2robust_ilp(int n, int k) {
  if (n < 2 || n > 10) throw std::invalid_argument("design_2robust_ilp: desk scale is 2 <= n <= 10");
  if (k < 1 || k > n) throw std::invalid_argument("design_2robust_ilp: infeasible, need k <= n");

  using Mask = std::uint32_t;
  std::vector<Mask> candidates;
  for (Mask m = 0; m < (1u << n); ++m)
    if (std::popcount(m) == k) candidates.push_back(m);

  // Joint pair neighborhoods are capped at 2k-1 for k >= 2 (a pair reaching 2k
  // distinct nodes would force degree-1 nodes throughout); k = 1 matchings do
  // reach 2. Hitting the cap ends the search.
  const int cap = k >= 2 ? std::min(2 * k - 1, n) : std::min(2, n);
  std::vector<Mask> rows(n), col_rows(n, 0);
  std::vector<int> col_cnt(n, 0);
  std::vector<Mask> best_rows;
  int best_x = -1;
  bool done = false;

  // Rows are chosen lexicographically nondecreasing; row 0 is pinned to the
  // lowest k columns. a_min carries the min joint neighborhood over placed
  // A-pairs, which is final once both rows exist.
  std::function<void(int, int, int)> rec = [&](int r, int from, int a_min) {
    if (done) return;
    if (r == n) {
      int x = a_min;
      for (int j = 0; j < n && x > best_x; ++j)
        for (int j2 = j + 1; j2 < n; ++j2)
          x = std::min(x, std::popcount(col_rows[j] | col_rows[j2]));
      if (x > best_x) {
        best_x = x;
        best_rows = rows;
        if (best_x >= cap) done = true;
      }
      return;
    }
    const int rows_left = n - r;
    for (int j = 0; j < n; ++j)
      if (k - col_cnt[j] > rows_left) return;
    for (int j = 0; j < n; ++j)
      for (int j2 = j + 1; j2 < n; ++j2)
        if (std::popcount(col_rows[j] | col_rows[j2]) + rows_left <= best_x) return;

    for (std::size_t ci = from; ci < candidates.size() && !done; ++ci) {
      const Mask m = candidates[ci];
      bool fits = true;
      for (int j = 0; j < n && fits; ++j)
        if ((m >> j) & 1u) fits = col_cnt[j] < k;
      if (!fits) continue;
      int new_a_min = a_min;
      for (int r2 = 0; r2 < r; ++r2)
        new_a_min = std::min(new_a_min, std::popcount(rows[r2] | m));
      if (new_a_min <= best_x) continue;

      rows[r] = m;
      for (int j = 0; j < n; ++j)
        if ((m >> j) & 1u) {
          ++col_cnt[j];
          col_rows[j] |= Mask(1) << r;
        }
      rec(r + 1, static_cast<int>(ci), new_a_min);
      for (int j = 0; j < n; ++j)
        if ((m >> j) & 1u) {
          --col_cnt[j];
          col_rows[j] &= ~(Mask(1) << r);
        }
    }
  };

  rows[0] = (Mask(1) << k) - 1;
  for (int j = 0; j < k; ++j) {
    ++col_cnt[j];
    col_rows[j] |= 1u;
  }
  std::size_t start = std::find(candidates.begin(), candidates.end(), rows[0]) - candidates.begin();
  rec(1, static_cast<int>(start), n + 1);

  if (best_x < 0) throw std::logic_error("design_2robust_ilp: no k-regular matrix found");

  NetworkBuilder builder;
  builder.n_a = n;
  builder.n_b = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((best_rows[i] >> j) & 1u) builder.edges_ab.emplace_back(i, j);
  return {builder.build(), best_x};
}

ExpansionResult node_expansion(const InterdependentNetwork& net) {
  if (net.n_b() > 20)
    throw std::invalid_argument("node_expansion: exhaustive mode limited to n_b <= 20");

  const auto masks = b_support_masks(net);
  ExpansionResult best;
  best.value = Rational(net.n_a() + 1, 1);

  std::vector<int> chosen;
  std::function<void(int, const Bitset&)> rec = [&](int idx, const Bitset& covered) {
    if (idx == net.n_b()) {
      if (chosen.empty()) return;
      const Rational ratio(covered.count(), static_cast<int>(chosen.size()));
      if (ratio < best.value) {
        best.value = ratio;
        best.witness_b = chosen;
      }
      return;
    }
    Bitset with = covered;
    with |= masks[idx];
    chosen.push_back(idx);
    rec(idx + 1, with);
    chosen.pop_back();
    rec(idx + 1, covered);
  };
  rec(0, Bitset(net.n_a()));
  return best;
}

ExpansionResult node_expansion_sampled(const InterdependentNetwork& net, int samples,
                                       std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  const auto masks = b_support_masks(net);
  Rng rng(derive_seed(seed, rng_salt::kSampleExpansion));

  ExpansionResult best;
  best.exact = false;
  best.value = Rational(net.n_a() + 1, 1);
  std::vector<int> pool(net.n_b());
  for (int j = 0; j < net.n_b(); ++j) pool[j] = j;

  for (int s = 0; s < samples; ++s) {
    const int size = 1 + rng.below_int(net.n_b());
    for (int t = 0; t < size; ++t)
      std::swap(pool[t], pool[t + rng.below_int(net.n_b() - t)]);
    Bitset covered(net.n_a());
    for (int t = 0; t < size; ++t) covered |= masks[pool[t]];
    const Rational ratio(covered.count(), size);
    if (ratio < best.value) {
      best.value = ratio;
      best.witness_b.assign(pool.begin(), pool.begin() + size);
      std::sort(best.witness_b.begin(), best.witness_b.end());
    }
  }
  return best;
}

RelativeRobustness relative_robustness(const InterdependentNetwork& net) {
  const exact::MrCurve curve = exact::mr_curve_exact(net, net.n_b());
  RelativeRobustness best;
  best.value = Rational(net.n_a() + 1, 1);
  for (int d = 1; d <= net.n_b(); ++d) {
    const Rational ratio(curve.values[d], d);
    if (ratio < best.value) {
      best.value = ratio;
      best.witness_d = d;
    }
  }
  return best;
}

double expander_check(int n, int k, double alpha, int trials, std::uint64_t seed) {
  if (n < 1 || n > 20) throw std::invalid_argument("expander_check: requires 1 <= n <= 20");
  if (k < 1 || k > n) throw std::invalid_argument("expander_check: requires 1 <= k <= n");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");

  const int s_max = static_cast<int>(alpha * n);
  Rng rng(derive_seed(seed, rng_salt::kExpander));
  std::vector<int> pool(n);

  int good = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<Bitset> nbr(n, Bitset(n));
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) pool[i] = i;
      for (int c = 0; c < k; ++c) {
        std::swap(pool[c], pool[c + rng.below_int(n - c)]);
        nbr[j].set(pool[c]);
      }
    }

    bool expander = true;
    std::function<void(int, const Bitset&, int)> rec = [&](int idx, const Bitset& covered,
                                                           int size) {
      if (!expander) return;
      if (size > 0 && covered.count() < (k - 2) * size) {
        expander = false;
        return;
      }
      if (idx == n || size == s_max) return;
      Bitset with = covered;
      with |= nbr[idx];
      rec(idx + 1, with, size + 1);
      rec(idx + 1, covered, size);
    };
    rec(0, Bitset(n), 0);
    if (expander) ++good;
  }
  return static_cast<double>(good) / trials;
}

}  // namespace itdn::design
