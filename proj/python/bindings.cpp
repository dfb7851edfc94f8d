#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "itdn/bench.hpp"
#include "itdn/cascade.hpp"
#include "itdn/design.hpp"
#include "itdn/exact.hpp"
#include "itdn/generators.hpp"
#include "itdn/heuristics.hpp"
#include "itdn/lp.hpp"
#include "itdn/netmodel.hpp"

namespace py = pybind11;
using namespace itdn;

namespace {

InterdependentNetwork build_network(int n_a, int n_b, const EdgeList& edges_ab,
                                    bool bidirectional, const std::optional<EdgeList>& edges_ba) {
  NetworkBuilder b;
  b.n_a = n_a;
  b.n_b = n_b;
  b.directionality = bidirectional ? Directionality::Bidirectional
                                   : Directionality::Unidirectional;
  b.edges_ab = edges_ab;
  b.edges_ba = edges_ba;
  return b.build();
}

}  // namespace

PYBIND11_MODULE(_itdn, m) {
  m.doc() = "Interdependent-network robustness toolkit";

  py::enum_<Side>(m, "Side").value("A", Side::A).value("B", Side::B);

  py::class_<NodeRef>(m, "NodeRef")
      .def(py::init([](Side s, int i) { return NodeRef{s, i}; }), py::arg("side"),
           py::arg("index"))
      .def_readonly("side", &NodeRef::side)
      .def_readonly("index", &NodeRef::index)
      .def("__repr__", [](const NodeRef& r) {
        return std::string(r.side == Side::A ? "a:" : "b:") + std::to_string(r.index);
      });

  py::class_<InterdependentNetwork>(m, "Network")
      .def_property_readonly("n_a", &InterdependentNetwork::n_a)
      .def_property_readonly("n_b", &InterdependentNetwork::n_b)
      .def_property_readonly("edges_ab", &InterdependentNetwork::edges_ab)
      .def_property_readonly("edges_ba", &InterdependentNetwork::edges_ba)
      .def_property_readonly("bidirectional",
                             [](const InterdependentNetwork& n) {
                               return n.directionality() == Directionality::Bidirectional;
                             })
      .def("__eq__", [](const InterdependentNetwork& a,
                        const InterdependentNetwork& b) { return a == b; });

  m.def("network", &build_network, py::arg("n_a"), py::arg("n_b"), py::arg("edges_ab"),
        py::arg("bidirectional") = true, py::arg("edges_ba") = std::nullopt,
        "Build a star-topology network from interdependency edges");
  m.def("validate", &validate);
  m.def("degree", &degree);
  m.def("load_network", &load_network);
  m.def("save_network", &save_network);
  m.def("parse_network", &parse_network);
  m.def("serialize_network", &serialize_network);

  py::class_<CascadeResult>(m, "CascadeResult")
      .def_readonly("stages", &CascadeResult::stages)
      .def_readonly("failed_a", &CascadeResult::failed_a)
      .def_readonly("failed_b", &CascadeResult::failed_b)
      .def_readonly("surviving_a", &CascadeResult::surviving_a)
      .def_readonly("surviving_b", &CascadeResult::surviving_b)
      .def_readonly("stage_count", &CascadeResult::stage_count);
  m.def("cascade", &cascade);
  m.def("one_stage_failures", &one_stage_failures);

  py::class_<exact::MrResult>(m, "MrResult")
      .def_readonly("value", &exact::MrResult::value)
      .def_readonly("witness_a", &exact::MrResult::witness_a)
      .def_readonly("target_b", &exact::MrResult::target_b);
  m.def("mr_exact", &exact::mr_exact);
  m.def("mr_branch_and_bound", &exact::mr_branch_and_bound);
  m.def("mrb_exact", &exact::mrb_exact);
  m.def("mrb_exact_general", &exact::mrb_exact_general);
  m.def("mr_exact_via_cascade", &exact::mr_exact_via_cascade);

  py::class_<exact::BipartiteGraph>(m, "BipartiteGraph")
      .def_readonly("n_a", &exact::BipartiteGraph::n_a)
      .def_readonly("n_b", &exact::BipartiteGraph::n_b)
      .def_readonly("edges", &exact::BipartiteGraph::edges);
  m.def("complement_transform", &exact::complement_transform);
  m.def("max_one_sided_biclique", &exact::max_one_sided_biclique);
  m.def("cluster_expand", &exact::cluster_expand);

  py::class_<lp::LpSolution>(m, "LpSolution")
      .def_readonly("x_star", &lp::LpSolution::x_star)
      .def_readonly("y_star", &lp::LpSolution::y_star)
      .def_readonly("objective", &lp::LpSolution::objective)
      .def_property_readonly("optimal", [](const lp::LpSolution& s) {
        return s.status == lp::LpStatus::Optimal;
      });
  m.def(
      "solve_relaxation",
      [](const InterdependentNetwork& net, int d) { return lp::solve_relaxation(net, d); },
      py::arg("net"), py::arg("d"));

  py::class_<heuristics::SaParams>(m, "SaParams")
      .def(py::init<>())
      .def_readwrite("t_initial", &heuristics::SaParams::t_initial)
      .def_readwrite("t_final", &heuristics::SaParams::t_final)
      .def_readwrite("reduction", &heuristics::SaParams::reduction)
      .def_readwrite("inner_loop", &heuristics::SaParams::inner_loop)
      .def_readwrite("seed", &heuristics::SaParams::seed);

  py::class_<heuristics::HeuristicResult>(m, "HeuristicResult")
      .def_readonly("removal_a", &heuristics::HeuristicResult::removal_a)
      .def_readonly("failed_b", &heuristics::HeuristicResult::failed_b)
      .def_readonly("size", &heuristics::HeuristicResult::size)
      .def_readonly("seed", &heuristics::HeuristicResult::seed)
      .def_readonly("trajectory", &heuristics::HeuristicResult::trajectory);
  m.def("greedy", &heuristics::greedy, py::arg("net"), py::arg("d"), py::arg("seed") = 0);
  m.def("randomized_rounding", &heuristics::randomized_rounding, py::arg("net"), py::arg("d"),
        py::arg("seed") = 0, py::arg("trials") = 100);
  m.def("sa1", &heuristics::sa1, py::arg("net"), py::arg("d"), py::arg("params"),
        py::arg("initial") = std::vector<int>{});
  m.def("sa2", &heuristics::sa2, py::arg("net"), py::arg("d"), py::arg("params"),
        py::arg("initial") = std::vector<int>{});

  m.def("gen_type1", &generators::gen_type1);
  m.def("gen_type2", &generators::gen_type2);
  m.def("gen_regular", &generators::gen_regular);
  m.def("gen_greedy_worst_case", &generators::gen_greedy_worst_case);

  py::class_<Rational>(m, "Rational")
      .def_readonly("num", &Rational::num)
      .def_readonly("den", &Rational::den)
      .def("__float__", &Rational::to_double)
      .def("__repr__", &Rational::to_string);

  py::class_<design::ExpansionResult>(m, "ExpansionResult")
      .def_readonly("value", &design::ExpansionResult::value)
      .def_readonly("witness_b", &design::ExpansionResult::witness_b)
      .def_readonly("exact", &design::ExpansionResult::exact);
  py::class_<design::RelativeRobustness>(m, "RelativeRobustness")
      .def_readonly("value", &design::RelativeRobustness::value)
      .def_readonly("witness_d", &design::RelativeRobustness::witness_d);
  py::class_<design::DesignResult>(m, "DesignResult")
      .def_readonly("net", &design::DesignResult::net)
      .def_readonly("x", &design::DesignResult::x);
  m.def("construct_2robust", &design::construct_2robust);
  m.def("design_2robust_ilp", &design::design_2robust_ilp);
  m.def("node_expansion", &design::node_expansion);
  m.def("node_expansion_sampled", &design::node_expansion_sampled);
  m.def("relative_robustness", &design::relative_robustness);
  m.def("expander_check", &design::expander_check, py::arg("n"), py::arg("k"), py::arg("alpha"),
        py::arg("trials"), py::arg("seed") = 0);

  m.def("run_suite_csv", [](const std::string& config_text, bool timing) {
    return bench::rows_to_csv(bench::run_suite(bench::parse_config(config_text), timing));
  });
  m.def("summarize_csv", [](const std::string& csv) {
    return bench::summary_to_csv(bench::summarize(bench::rows_from_csv(csv)));
  });
}
