#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace itdn {

// Deterministic RNG used throughout. The engine is std::mt19937_64, whose
// output sequence is fixed by the standard; the draw helpers below replace
// std:: distributions, whose results are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Unbiased integer in [0, n). Rejection sampling, n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = eng_();
    while (v >= limit) v = eng_();
    return v % n;
  }

  int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

  // Uniform in [0, 1), 53 random bits.
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  int binomial(int trials, double p) {
    int c = 0;
    for (int i = 0; i < trials; ++i) c += bernoulli(p) ? 1 : 0;
    return c;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 eng_;
};

// splitmix64 finalizer; derives independent streams for nested operations
// (e.g. the greedy run that seeds simulated annealing).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace rng_salt {
inline constexpr std::uint64_t kGreedy = 0x01;
inline constexpr std::uint64_t kRounding = 0x02;
inline constexpr std::uint64_t kSa1 = 0x03;
inline constexpr std::uint64_t kSa2 = 0x04;
inline constexpr std::uint64_t kSaInit = 0x05;
inline constexpr std::uint64_t kGenBinomial = 0x06;
inline constexpr std::uint64_t kGenRegular = 0x07;
inline constexpr std::uint64_t kExpander = 0x08;
inline constexpr std::uint64_t kSampleExpansion = 0x09;
}  // namespace rng_salt

}  // namespace itdn
