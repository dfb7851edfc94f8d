#include "itdn/bench.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "itdn/cascade.hpp"
#include "itdn/exact.hpp"
#include "itdn/generators.hpp"
#include "itdn/heuristics.hpp"

namespace itdn::bench {

namespace {

[[noreturn]] void config_error(int line, const std::string& what) {
  throw std::runtime_error("config line " + std::to_string(line) + ": " + what);
}

struct TomlValue {
  enum class Kind { Int, Float, String } kind = Kind::Int;
  long i = 0;
  double f = 0;
  std::string s;

  double as_number(int line) const {
    if (kind == Kind::String) config_error(line, "expected a number");
    return kind == Kind::Int ? static_cast<double>(i) : f;
  }
};

TomlValue parse_scalar(std::string tok, int line) {
  TomlValue v;
  if (tok.size() >= 2 && tok.front() == '"' && tok.back() == '"') {
    v.kind = TomlValue::Kind::String;
    v.s = tok.substr(1, tok.size() - 2);
    return v;
  }
  try {
    std::size_t pos = 0;
    if (tok.find('.') == std::string::npos && tok.find('e') == std::string::npos) {
      v.kind = TomlValue::Kind::Int;
      v.i = std::stol(tok, &pos);
    } else {
      v.kind = TomlValue::Kind::Float;
      v.f = std::stod(tok, &pos);
    }
    if (pos != tok.size()) config_error(line, "trailing characters in value '" + tok + "'");
  } catch (const std::logic_error&) {
    config_error(line, "cannot parse value '" + tok + "'");
  }
  return v;
}

std::vector<TomlValue> parse_value(const std::string& raw, int line) {
  std::string s = raw;
  auto trim = [](std::string& t) {
    const auto b = t.find_first_not_of(" \t");
    const auto e = t.find_last_not_of(" \t");
    t = b == std::string::npos ? "" : t.substr(b, e - b + 1);
  };
  trim(s);
  if (s.empty()) config_error(line, "missing value");
  std::vector<TomlValue> out;
  if (s.front() == '[') {
    if (s.back() != ']') config_error(line, "unterminated array");
    std::string body = s.substr(1, s.size() - 2);
    std::string item;
    std::istringstream in(body);
    while (std::getline(in, item, ',')) {
      trim(item);
      if (!item.empty()) out.push_back(parse_scalar(item, line));
    }
  } else {
    out.push_back(parse_scalar(s, line));
  }
  return out;
}

const std::set<std::string> kAlgorithms = {"exact", "greedy", "rounding", "sa1", "sa2"};

}  // namespace

BenchConfig parse_config(const std::string& text) {
  BenchConfig cfg;
  cfg.algorithms.clear();

  std::istringstream in(text);
  std::string line;
  int no = 0;
  GridSpec* grid = nullptr;
  bool saw_algorithms = false;

  while (std::getline(in, line)) {
    ++no;
    // strip comments outside quotes
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (line[i] == '#' && !quoted) {
        line.erase(i);
        break;
      }
    }
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);

    if (line == "[[grid]]") {
      cfg.grids.emplace_back();
      grid = &cfg.grids.back();
      continue;
    }
    if (line.front() == '[') config_error(no, "unknown table '" + line + "'");

    const auto eq = line.find('=');
    if (eq == std::string::npos) config_error(no, "expected 'key = value'");
    std::string key = line.substr(0, eq);
    key.erase(key.find_last_not_of(" \t") + 1);
    const auto vals = parse_value(line.substr(eq + 1), no);

    auto ints = [&] {
      std::vector<int> out;
      for (const auto& v : vals) out.push_back(static_cast<int>(v.as_number(no)));
      return out;
    };
    auto doubles = [&] {
      std::vector<double> out;
      for (const auto& v : vals) out.push_back(v.as_number(no));
      return out;
    };

    if (!grid) {
      if (key == "seeds")
        cfg.seeds = static_cast<int>(vals.at(0).as_number(no));
      else if (key == "seed_base")
        cfg.seed_base = static_cast<std::uint64_t>(vals.at(0).as_number(no));
      else if (key == "exact_max_n")
        cfg.exact_max_n = static_cast<int>(vals.at(0).as_number(no));
      else if (key == "algorithms") {
        saw_algorithms = true;
        for (const auto& v : vals) {
          if (v.kind != TomlValue::Kind::String || !kAlgorithms.count(v.s))
            config_error(no, "unknown algorithm; expected exact|greedy|rounding|sa1|sa2");
          cfg.algorithms.push_back(v.s);
        }
      } else
        config_error(no, "unknown key '" + key + "'");
    } else {
      if (key == "family") {
        if (vals.at(0).kind != TomlValue::Kind::String) config_error(no, "family must be a string");
        grid->family = vals[0].s;
      } else if (key == "n")
        grid->n = ints();
      else if (key == "k")
        grid->k = doubles();
      else if (key == "k1")
        grid->k1 = doubles();
      else if (key == "k2")
        grid->k2 = doubles();
      else if (key == "x")
        grid->x = ints();
      else if (key == "d")
        grid->d = ints();
      else
        config_error(no, "unknown grid key '" + key + "'");
    }
  }

  if (saw_algorithms && cfg.algorithms.empty()) config_error(no, "algorithm list is empty");
  if (cfg.algorithms.empty()) config_error(no, "no algorithms configured");
  if (cfg.seeds < 1) config_error(no, "seeds must be >= 1");
  if (cfg.grids.empty()) config_error(no, "no [[grid]] tables");
  for (const auto& g : cfg.grids) {
    if (g.family == "type1" || g.family == "regular") {
      if (g.n.empty() || g.k.empty()) config_error(no, g.family + " grid needs n and k");
    } else if (g.family == "type2") {
      if (g.n.empty() || g.k1.empty() || g.k2.empty())
        config_error(no, "type2 grid needs n, k1 and k2");
    } else if (g.family == "worstcase") {
      if (g.x.empty()) config_error(no, "worstcase grid needs x");
    } else {
      config_error(no, "unknown family '" + g.family + "'");
    }
    if (g.d.empty()) config_error(no, "grid needs d");
  }
  return cfg;
}

BenchConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

namespace {

using Clock = std::chrono::steady_clock;

struct Instance {
  std::string id;
  InterdependentNetwork net;
  double k1 = 0, k2 = 0;
  bool has_k2 = false;
};

std::string format_k(double k) {
  std::ostringstream s;
  s << k;
  return s.str();
}

std::vector<Instance> make_instances(const GridSpec& g, int n, std::uint64_t seed) {
  std::vector<Instance> out;
  if (g.family == "type1") {
    for (double k : g.k)
      out.push_back({"type1-n" + std::to_string(n) + "-k" + format_k(k) + "-s" +
                         std::to_string(seed),
                     generators::gen_type1(n, k, seed), k, 0, false});
  } else if (g.family == "regular") {
    for (double k : g.k)
      out.push_back({"regular-n" + std::to_string(n) + "-k" + format_k(k) + "-s" +
                         std::to_string(seed),
                     generators::gen_regular(n, static_cast<int>(k), seed), k, 0, false});
  } else if (g.family == "type2") {
    for (double k1 : g.k1)
      for (double k2 : g.k2)
        out.push_back({"type2-n" + std::to_string(n) + "-k1_" + format_k(k1) + "-k2_" +
                           format_k(k2) + "-s" + std::to_string(seed),
                       generators::gen_type2(n, k1, k2, seed), k1, k2, true});
  } else {  // worstcase: deterministic construction, seed kept for the row
    for (int x : g.x) {
      int d_max = *std::max_element(g.d.begin(), g.d.end());
      out.push_back({"worstcase-x" + std::to_string(x) + "-d" + std::to_string(d_max) + "-s" +
                         std::to_string(seed),
                     generators::gen_greedy_worst_case(x, d_max), static_cast<double>(x), 0,
                     false});
    }
  }
  return out;
}

}  // namespace

std::vector<ExperimentRow> run_suite(const BenchConfig& config, bool timing) {
  std::vector<ExperimentRow> rows;

  for (const auto& grid : config.grids) {
    std::vector<int> ns = grid.n.empty() ? std::vector<int>{0} : grid.n;
    for (int n : ns) {
      for (int s = 0; s < config.seeds; ++s) {
        const std::uint64_t seed = config.seed_base + static_cast<std::uint64_t>(s);
        for (Instance& inst : make_instances(grid, n, seed)) {
          for (int d : grid.d) {
            if (d < 0 || d > inst.net.n_b())
              throw std::runtime_error("config: d=" + std::to_string(d) +
                                       " out of range for instance " + inst.id);
            for (const std::string& alg : config.algorithms) {
              if (alg == "exact" && inst.net.n_a() > config.exact_max_n) continue;

              ExperimentRow row;
              row.instance_id = inst.id;
              row.family = grid.family;
              row.n = inst.net.n_a();
              row.k1 = inst.k1;
              row.k2 = inst.k2;
              row.has_k2 = inst.has_k2;
              row.d = d;
              row.algorithm = alg;
              row.seed = seed;

              const auto t0 = Clock::now();
              std::vector<int> removal;
              if (alg == "exact") {
                removal = exact::mr_exact(inst.net, d).witness_a;
              } else if (alg == "greedy") {
                removal = heuristics::greedy(inst.net, d, seed).removal_a;
              } else if (alg == "rounding") {
                removal = heuristics::randomized_rounding(inst.net, d, seed).removal_a;
              } else {
                heuristics::SaParams params;
                params.seed = seed;
                removal = alg == "sa1" ? heuristics::sa1(inst.net, d, params).removal_a
                                       : heuristics::sa2(inst.net, d, params).removal_a;
              }
              if (timing)
                row.runtime_ms =
                    std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

              std::vector<NodeRef> refs;
              for (int a : removal) refs.push_back({Side::A, a});
              if (static_cast<int>(cascade(inst.net, refs).failed_b.size()) < d)
                throw std::logic_error("infeasible removal set from " + alg + " on " + inst.id);
              row.removal_size = static_cast<int>(removal.size());
              rows.push_back(std::move(row));
            }
          }
        }
      }
    }
  }
  return rows;
}

namespace {

std::string csv_double(double v) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(3);
  s << v;
  return s.str();
}

std::string k_field(double k, bool present) {
  if (!present) return "";
  std::ostringstream s;
  s << k;
  return s.str();
}

}  // namespace

std::string rows_to_csv(const std::vector<ExperimentRow>& rows) {
  std::ostringstream out;
  out << "instance_id,family,n,k1,k2,D,algorithm,removal_size,runtime_ms,seed\n";
  for (const auto& r : rows)
    out << r.instance_id << ',' << r.family << ',' << r.n << ',' << k_field(r.k1, true) << ','
        << k_field(r.k2, r.has_k2) << ',' << r.d << ',' << r.algorithm << ',' << r.removal_size
        << ',' << csv_double(r.runtime_ms) << ',' << r.seed << '\n';
  return out.str();
}

std::vector<ExperimentRow> rows_from_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) ||
      line != "instance_id,family,n,k1,k2,D,algorithm,removal_size,runtime_ms,seed")
    throw std::runtime_error("CSV schema mismatch");

  std::vector<ExperimentRow> rows;
  int no = 1;
  while (std::getline(in, line)) {
    ++no;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::istringstream ls(line);
    std::string tok;
    while (std::getline(ls, tok, ',')) f.push_back(tok);
    if (f.size() != 10)
      throw std::runtime_error("CSV line " + std::to_string(no) + ": expected 10 fields");
    ExperimentRow r;
    r.instance_id = f[0];
    r.family = f[1];
    r.n = std::stoi(f[2]);
    r.k1 = std::stod(f[3]);
    r.has_k2 = !f[4].empty();
    r.k2 = r.has_k2 ? std::stod(f[4]) : 0;
    r.d = std::stoi(f[5]);
    r.algorithm = f[6];
    r.removal_size = std::stoi(f[7]);
    r.runtime_ms = std::stod(f[8]);
    r.seed = std::stoull(f[9]);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<SummaryRow> summarize(const std::vector<ExperimentRow>& rows) {
  // exact removal size per (instance, d)
  std::map<std::pair<std::string, int>, int> exact_of;
  for (const auto& r : rows)
    if (r.algorithm == "exact") exact_of[{r.instance_id, r.d}] = r.removal_size;

  using Key = std::tuple<std::string, int, double, double, int, std::string>;
  struct Acc {
    double removal = 0, runtime = 0, gap = 0;
    int n_rows = 0, n_gaps = 0;
    bool has_k2 = false;
  };
  std::map<Key, Acc> acc;
  for (const auto& r : rows) {
    Acc& a = acc[{r.family, r.n, r.k1, r.k2, r.d, r.algorithm}];
    a.removal += r.removal_size;
    a.runtime += r.runtime_ms;
    a.has_k2 = r.has_k2;
    ++a.n_rows;
    const auto it = exact_of.find({r.instance_id, r.d});
    if (it != exact_of.end() && it->second > 0) {
      a.gap += static_cast<double>(r.removal_size) / it->second;
      ++a.n_gaps;
    }
  }

  std::vector<SummaryRow> out;
  for (const auto& [key, a] : acc) {
    SummaryRow s;
    std::tie(s.family, s.n, s.k1, s.k2, s.d, s.algorithm) = key;
    s.has_k2 = a.has_k2;
    s.rows = a.n_rows;
    s.mean_removal = a.removal / a.n_rows;
    s.mean_runtime_ms = a.runtime / a.n_rows;
    if (a.n_gaps == a.n_rows && a.n_rows > 0) {
      s.has_gap = true;
      s.mean_gap = a.gap / a.n_gaps;
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string summary_to_csv(const std::vector<SummaryRow>& rows) {
  std::ostringstream out;
  out << "family,n,k1,k2,D,algorithm,mean_removal_size,mean_runtime_ms,mean_gap,rows\n";
  for (const auto& r : rows) {
    out << r.family << ',' << r.n << ',' << k_field(r.k1, true) << ',' << k_field(r.k2, r.has_k2)
        << ',' << r.d << ',' << r.algorithm << ',' << csv_double(r.mean_removal) << ','
        << csv_double(r.mean_runtime_ms) << ',';
    if (r.has_gap) out << csv_double(r.mean_gap);
    out << ',' << r.rows << '\n';
  }
  return out.str();
}

}  // namespace itdn::bench
