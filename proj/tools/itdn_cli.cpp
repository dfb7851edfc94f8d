#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "itdn/bench.hpp"
#include "itdn/cascade.hpp"
#include "itdn/design.hpp"
#include "itdn/exact.hpp"
#include "itdn/generators.hpp"
#include "itdn/heuristics.hpp"
#include "itdn/lp.hpp"
#include "itdn/netmodel.hpp"

using json = nlohmann::ordered_json;
using namespace itdn;

namespace {

using Clock = std::chrono::steady_clock;

// Timing is opt-in so that identical invocations produce byte-identical
// output; without --timing every elapsed/runtime field is a stable 0.
bool g_timing = false;

struct Timer {
  Clock::time_point t0 = Clock::now();
  double ms() const {
    if (!g_timing) return 0.0;
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  }
};

std::vector<NodeRef> parse_removals(const std::string& spec) {
  std::vector<NodeRef> out;
  std::istringstream in(spec);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    if (tok.size() < 3 || (tok[0] != 'a' && tok[0] != 'b') || tok[1] != ':')
      throw CLI::ValidationError("--remove", "expected side:index entries like a:4,b:2");
    out.push_back({tok[0] == 'a' ? Side::A : Side::B, std::stoi(tok.substr(2))});
  }
  return out;
}

json node_list(const std::vector<NodeRef>& refs) {
  json arr = json::array();
  for (const auto& r : refs)
    arr.push_back((r.side == Side::A ? "a:" : "b:") + std::to_string(r.index));
  return arr;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

heuristics::SaParams sa_params_from(double t0, double tf, double r, long inner,
                                    std::uint64_t seed) {
  heuristics::SaParams p;
  p.t_initial = t0;
  p.t_final = tf;
  p.reduction = r;
  p.inner_loop = inner;
  p.seed = seed;
  return p;
}

json heuristic_json(const char* method, const heuristics::HeuristicResult& r, double ms,
                    bool with_trajectory) {
  json out;
  out["value"] = r.size;
  out["witness"] = r.removal_a;
  out["failed"] = r.failed_b;
  out["method"] = method;
  out["seed"] = r.seed;
  out["elapsed_ms"] = ms;
  if (with_trajectory) out["trajectory"] = r.trajectory;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interdependent-network robustness toolkit"};
  app.require_subcommand(1);
  app.add_flag("--timing", g_timing, "record wall-clock times in the output");

  std::string net_path, out_path, in_path, config_path, family;
  std::string method = "exact", design_method = "construct";
  std::string remove_spec;
  int n = 0, d = 0, trials = 100, samples = 1000;
  double k = 0, k1 = 0, k2 = 0;
  int x = 1;
  std::uint64_t seed = 0;
  double t0 = 1.0, tf = 1e-3, rr = 0.95;
  long inner = 0;
  bool trace = false, dump_lp = false, sample_mode = false, exact_mode = false;

  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--family", family, "type1|type2|regular|worstcase")->required();
  gen->add_option("--n", n);
  gen->add_option("--k", k);
  gen->add_option("--k1", k1);
  gen->add_option("--k2", k2);
  gen->add_option("--x", x);
  gen->add_option("--d", d);
  gen->add_option("--seed", seed);
  gen->add_option("--out", out_path)->required();

  auto* cas = app.add_subcommand("cascade", "run the cascading-failure engine");
  cas->add_option("--net", net_path)->required();
  cas->add_option("--remove", remove_spec)->required();
  cas->add_flag("--trace", trace, "print per-stage failures as JSON lines");

  auto* mr = app.add_subcommand("mr", "minimum removals from A for d failures in B");
  mr->add_option("--net", net_path)->required();
  mr->add_option("--d", d)->required();
  mr->add_option("--method", method, "exact|bnb")
      ->check(CLI::IsMember({"exact", "bnb"}));

  auto* mrb = app.add_subcommand("mrb", "minimum removals from both sides");
  mrb->add_option("--net", net_path)->required();
  mrb->add_option("--d", d)->required();

  auto* gre = app.add_subcommand("greedy", "greedy heuristic");
  auto* rou = app.add_subcommand("round", "randomized rounding heuristic");
  auto* an1 = app.add_subcommand("anneal1", "simulated annealing over removal sets");
  auto* an2 = app.add_subcommand("anneal2", "simulated annealing over failure sets");
  for (auto* cmd : {gre, rou, an1, an2}) {
    cmd->add_option("--net", net_path)->required();
    cmd->add_option("--d", d)->required();
    cmd->add_option("--seed", seed);
  }
  rou->add_option("--trials", trials);
  rou->add_flag("--dump-lp", dump_lp, "attach the LP relaxation vectors");
  for (auto* cmd : {an1, an2}) {
    cmd->add_option("--t0", t0, "initial temperature");
    cmd->add_option("--tf", tf, "final temperature");
    cmd->add_option("--r", rr, "geometric cooling factor");
    cmd->add_option("--L", inner, "iterations per temperature (0 = 50*n_b)");
  }

  auto* des = app.add_subcommand("design", "construct a 2-robust allocation");
  des->add_option("--k", k)->required();
  des->add_option("--n", n);
  des->add_option("--method", design_method, "construct|ilp")
      ->check(CLI::IsMember({"construct", "ilp"}));
  des->add_option("--out", out_path)->required();

  auto* expn = app.add_subcommand("expansion", "node expansion h(G)");
  expn->add_option("--net", net_path)->required();
  expn->add_flag("--exact", exact_mode, "exhaustive mode (default)");
  expn->add_flag("--sample", sample_mode, "sampled upper bound");
  expn->add_option("--samples", samples);
  expn->add_option("--seed", seed);

  auto* ben = app.add_subcommand("bench", "run the experiment grid");
  ben->add_option("--config", config_path)->required();
  ben->add_option("--out", out_path)->required();

  auto* summ = app.add_subcommand("summarize", "aggregate a results CSV");
  summ->add_option("--in", in_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      InterdependentNetwork net = [&] {
        if (family == "type1") return generators::gen_type1(n, k, seed);
        if (family == "type2") return generators::gen_type2(n, k1, k2, seed);
        if (family == "regular") return generators::gen_regular(n, static_cast<int>(k), seed);
        if (family == "worstcase") return generators::gen_greedy_worst_case(x, d);
        throw std::invalid_argument("unknown family " + family);
      }();
      save_network(net, out_path);
      json out;
      out["family"] = family;
      out["n_a"] = net.n_a();
      out["n_b"] = net.n_b();
      out["edges"] = net.edges_ab().size();
      out["seed"] = seed;
      out["path"] = out_path;
      emit(out);
    } else if (cas->parsed()) {
      const auto net = load_network(net_path);
      const auto result = cascade(net, parse_removals(remove_spec));
      if (trace) {
        for (std::size_t s = 0; s < result.stages.size(); ++s) {
          json line;
          line["stage"] = s;
          line["failed"] = node_list(result.stages[s]);
          emit(line);
        }
      }
      json out;
      out["failed_a"] = result.failed_a;
      out["failed_b"] = result.failed_b;
      out["surviving_a"] = result.surviving_a;
      out["surviving_b"] = result.surviving_b;
      out["stage_count"] = result.stage_count;
      emit(out);
    } else if (mr->parsed()) {
      const auto net = load_network(net_path);
      Timer timer;
      const auto r = method == "bnb" ? exact::mr_branch_and_bound(net, d)
                                     : exact::mr_exact(net, d);
      json out;
      out["value"] = r.value;
      out["witness"] = r.witness_a;
      out["method"] = method == "bnb" ? "bnb" : "exact";
      out["elapsed_ms"] = timer.ms();
      emit(out);
    } else if (mrb->parsed()) {
      const auto net = load_network(net_path);
      Timer timer;
      const auto r = exact::mrb_exact_result(net, d);
      json out;
      out["value"] = r.value;
      out["witness"] = {{"a", r.removal_a}, {"b", r.removal_b}};
      out["method"] = "exact";
      out["elapsed_ms"] = timer.ms();
      emit(out);
    } else if (gre->parsed()) {
      const auto net = load_network(net_path);
      Timer timer;
      const auto r = heuristics::greedy(net, d, seed);
      emit(heuristic_json("greedy", r, timer.ms(), false));
    } else if (rou->parsed()) {
      const auto net = load_network(net_path);
      Timer timer;
      const auto r = heuristics::randomized_rounding(net, d, seed, trials);
      json out = heuristic_json("rounding", r, timer.ms(), false);
      if (dump_lp) {
        const auto sol = lp::solve_relaxation(net, d);
        out["lp"] = {{"x_star", sol.x_star}, {"y_star", sol.y_star}, {"objective", sol.objective}};
      }
      emit(out);
    } else if (an1->parsed() || an2->parsed()) {
      const auto net = load_network(net_path);
      const auto params = sa_params_from(t0, tf, rr, inner, seed);
      Timer timer;
      const auto r = an1->parsed() ? heuristics::sa1(net, d, params)
                                   : heuristics::sa2(net, d, params);
      emit(heuristic_json(an1->parsed() ? "sa1" : "sa2", r, timer.ms(), true));
    } else if (des->parsed()) {
      json out;
      InterdependentNetwork net = [&] {
        if (design_method == "ilp") {
          const auto r = design::design_2robust_ilp(n, static_cast<int>(k));
          out["x"] = r.x;
          return r.net;
        }
        return design::construct_2robust(static_cast<int>(k));
      }();
      save_network(net, out_path);
      out["method"] = design_method;
      out["k"] = static_cast<int>(k);
      out["n"] = net.n_a();
      out["path"] = out_path;
      emit(out);
    } else if (expn->parsed()) {
      const auto net = load_network(net_path);
      if (exact_mode && sample_mode)
        throw CLI::ValidationError("expansion", "--exact and --sample are exclusive");
      const auto r = sample_mode ? design::node_expansion_sampled(net, samples, seed)
                                 : design::node_expansion(net);
      json out;
      out["h"] = r.value.to_string();
      out["h_value"] = r.value.to_double();
      out["witness_b"] = r.witness_b;
      out["mode"] = sample_mode ? "sample" : "exact";
      if (sample_mode) out["bound"] = "upper";
      emit(out);
    } else if (ben->parsed()) {
      const auto cfg = bench::load_config(config_path);
      const auto rows = bench::run_suite(cfg, g_timing);
      std::ofstream out(out_path);
      if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
      out << bench::rows_to_csv(rows);
      json info;
      info["rows"] = rows.size();
      info["path"] = out_path;
      emit(info);
    } else if (summ->parsed()) {
      std::ifstream in(in_path);
      if (!in) throw std::runtime_error("cannot open " + in_path);
      std::ostringstream buf;
      buf << in.rdbuf();
      std::cout << bench::summary_to_csv(bench::summarize(bench::rows_from_csv(buf.str())));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
