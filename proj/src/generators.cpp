#include "itdn/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "itdn/rng.hpp"

namespace itdn::generators {

namespace {

constexpr int kMaxAttempts = 1000;

// Binomial degrees, sums reconciled through the last B-node, zero degrees
// repaired by taking stubs from the currently highest-degree node on the same
// side. The repair conserves the stub total.
struct DegreeSequences {
  std::vector<int> a, b;
};

bool repair_zeros(std::vector<int>& deg) {
  for (std::size_t i = 0; i < deg.size(); ++i) {
    while (deg[i] == 0) {
      const auto donor = std::max_element(deg.begin(), deg.end());
      if (*donor < 2) return false;
      --*donor;
      ++deg[i];
    }
  }
  return true;
}

bool sample_degrees(int n, double k1, double k2, Rng& rng, DegreeSequences& out) {
  const int half = n / 2;
  auto draw = [&](std::vector<int>& deg) {
    deg.resize(n);
    for (int i = 0; i < n; ++i) {
      const double mean = i < half ? k1 : k2;
      deg[i] = rng.binomial(n, mean / n);
    }
  };
  draw(out.a);
  draw(out.b);

  long sum_a = 0, sum_b = 0;
  for (int v : out.a) sum_a += v;
  for (int v : out.b) sum_b += v;
  const long adjusted = out.b[n - 1] + (sum_a - sum_b);
  if (adjusted < 0 || adjusted > n) return false;
  out.b[n - 1] = static_cast<int>(adjusted);
  if (sum_a < n) return false;  // cannot give every node a stub
  return repair_zeros(out.a) && repair_zeros(out.b);
}

// Pairs stubs uniformly; swaps away parallel edges. Empty on failure.
EdgeList pair_stubs(const DegreeSequences& deg, Rng& rng) {
  std::vector<int> stubs_a, stubs_b;
  for (int i = 0; i < static_cast<int>(deg.a.size()); ++i)
    stubs_a.insert(stubs_a.end(), deg.a[i], i);
  for (int j = 0; j < static_cast<int>(deg.b.size()); ++j)
    stubs_b.insert(stubs_b.end(), deg.b[j], j);
  rng.shuffle(stubs_b);

  const int m = static_cast<int>(stubs_a.size());
  for (int pass = 0; pass < 200; ++pass) {
    std::set<std::pair<int, int>> seen;
    std::vector<int> dups;
    for (int t = 0; t < m; ++t)
      if (!seen.emplace(stubs_a[t], stubs_b[t]).second) dups.push_back(t);
    if (dups.empty()) {
      EdgeList edges;
      edges.reserve(m);
      for (int t = 0; t < m; ++t) edges.emplace_back(stubs_a[t], stubs_b[t]);
      return edges;
    }
    for (int t : dups) std::swap(stubs_b[t], stubs_b[rng.below_int(m)]);
  }
  return {};
}

InterdependentNetwork binomial_net(int n, double k1, double k2, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (k1 < 1 || k2 < 1 || k1 > n || k2 > n)
    throw std::invalid_argument("mean degrees must lie in [1, n]");

  Rng rng(derive_seed(seed, rng_salt::kGenBinomial));
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    DegreeSequences deg;
    if (!sample_degrees(n, k1, k2, rng, deg)) continue;
    EdgeList edges = pair_stubs(deg, rng);
    if (edges.empty()) continue;

    NetworkBuilder builder;
    builder.n_a = n;
    builder.n_b = n;
    builder.edges_ab = std::move(edges);
    return builder.build();
  }
  throw std::runtime_error("binomial network generation failed to converge");
}

}  // namespace

InterdependentNetwork gen_type1(int n, double k, std::uint64_t seed) {
  return binomial_net(n, k, k, seed);
}

InterdependentNetwork gen_type2(int n, double k1, double k2, std::uint64_t seed) {
  if (n % 2 != 0) throw std::invalid_argument("gen_type2 requires an even n");
  return binomial_net(n, k1, k2, seed);
}

InterdependentNetwork gen_regular(int n, int k, std::uint64_t seed) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  Rng rng(derive_seed(seed, rng_salt::kGenRegular));

  for (int attempt = 0; attempt < 100; ++attempt) {
    std::set<std::pair<int, int>> edges;
    bool ok = true;
    for (int round = 0; round < k && ok; ++round) {
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i;
      ok = false;
      for (int retry = 0; retry < 400 && !ok; ++retry) {
        rng.shuffle(perm);
        // Swap collisions with random partners until the matching is new.
        for (int pass = 0; pass < 4 * n; ++pass) {
          std::vector<int> bad;
          for (int i = 0; i < n; ++i)
            if (edges.count({i, perm[i]})) bad.push_back(i);
          if (bad.empty()) break;
          for (int i : bad) std::swap(perm[i], perm[rng.below_int(n)]);
        }
        bool clean = true;
        for (int i = 0; i < n && clean; ++i) clean = !edges.count({i, perm[i]});
        ok = clean;
      }
      if (ok)
        for (int i = 0; i < n; ++i) edges.emplace(i, perm[i]);
    }
    if (!ok) continue;

    NetworkBuilder builder;
    builder.n_a = n;
    builder.n_b = n;
    builder.edges_ab.assign(edges.begin(), edges.end());
    return builder.build();
  }
  throw std::runtime_error("regular network generation failed to converge");
}

InterdependentNetwork gen_greedy_worst_case(int x, int d) {
  if (x < 1 || d < 1) throw std::invalid_argument("need x >= 1 and d >= 1");
  NetworkBuilder builder;
  builder.n_a = x * (d + 1);
  builder.n_b = 2 * d;
  for (int i = 0; i < d; ++i)
    for (int t = 0; t < x; ++t) builder.edges_ab.emplace_back(i * x + t, i);
  for (int j = 0; j < d; ++j)
    for (int t = 0; t < x; ++t) builder.edges_ab.emplace_back(d * x + t, d + j);
  return builder.build();
}

}  // namespace itdn::generators
