#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "itdn/netmodel.hpp"

namespace itdn::bench {

// One point grid of the parameter sweep. `k` drives type1/regular families,
// `k1`/`k2` drive type2, `x` drives worstcase; `d` lists failure sizes.
struct GridSpec {
  std::string family;
  std::vector<int> n;
  std::vector<double> k;
  std::vector<double> k1, k2;
  std::vector<int> x;
  std::vector<int> d;
};

struct BenchConfig {
  int seeds = 20;
  std::uint64_t seed_base = 1;
  int exact_max_n = 30;
  std::vector<std::string> algorithms;  // exact, greedy, rounding, sa1, sa2
  std::vector<GridSpec> grids;
};

// TOML subset: top-level `key = value` assignments and [[grid]] tables with
// integer/float/string/array values. Throws std::runtime_error with a line
// reference on malformed input or an invalid parameter grid.
BenchConfig parse_config(const std::string& text);
BenchConfig load_config(const std::string& path);

struct ExperimentRow {
  std::string instance_id;
  std::string family;
  int n = 0;
  double k1 = 0, k2 = 0;
  bool has_k2 = false;
  int d = 0;
  std::string algorithm;
  int removal_size = 0;
  double runtime_ms = 0;
  std::uint64_t seed = 0;
};

// One row per (instance, algorithm, D), in deterministic grid order. Exact
// rows are emitted only when the instance is at most exact_max_n per side.
// Every heuristic removal set is re-verified through the cascade engine
// before the row is accepted. Runtimes are recorded only when `timing` is
// set; otherwise the column is a stable 0.
std::vector<ExperimentRow> run_suite(const BenchConfig& config, bool timing);

std::string rows_to_csv(const std::vector<ExperimentRow>& rows);
std::vector<ExperimentRow> rows_from_csv(const std::string& csv);

struct SummaryRow {
  std::string family;
  int n = 0;
  double k1 = 0, k2 = 0;
  bool has_k2 = false;
  int d = 0;
  std::string algorithm;
  double mean_removal = 0;
  double mean_runtime_ms = 0;
  double mean_gap = 0;  // mean of removal/exact across instances
  bool has_gap = false;
  int rows = 0;
};

// Aggregates per (family, n, k, D, algorithm); gap ratios use the exact row
// of the same instance and D where present.
std::vector<SummaryRow> summarize(const std::vector<ExperimentRow>& rows);
std::string summary_to_csv(const std::vector<SummaryRow>& rows);

}  // namespace itdn::bench
