import math

import pytest

itdn = pytest.importorskip("itdn")


def test_network_and_validate():
    net = itdn.network(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)])
    assert net.n_a == 2 and net.n_b == 2
    assert net.bidirectional
    assert itdn.validate(net) == []
    assert itdn.degree(net, itdn.NodeRef(itdn.Side.B, 0)) == 2

    broken = itdn.network(2, 2, [(0, 0), (1, 0)])
    assert any("b1" in v for v in itdn.validate(broken))


def test_serialization_round_trip():
    net = itdn.gen_type1(12, 2, 5)
    assert itdn.parse_network(itdn.serialize_network(net)) == net


def test_cascade_chain():
    net = itdn.network(2, 2, [(0, 0), (1, 1)], bidirectional=False,
                       edges_ba=[(0, 1), (1, 0)])
    res = itdn.cascade(net, [itdn.NodeRef(itdn.Side.A, 0)])
    assert res.stage_count == 3
    assert res.failed_a == [0, 1] and res.failed_b == [0, 1]


def test_one_stage_matches_cascade():
    net = itdn.gen_type1(10, 2, 3)
    removed = [0, 3, 4]
    res = itdn.cascade(net, [itdn.NodeRef(itdn.Side.A, a) for a in removed])
    assert res.failed_b == itdn.one_stage_failures(net, removed)


def test_exact_and_heuristics_sandwich():
    net = itdn.gen_type1(12, 2, 11)
    for d in (1, 3):
        opt = itdn.mr_exact(net, d)
        assert len(opt.witness_a) == opt.value
        assert itdn.mr_branch_and_bound(net, d).value == opt.value
        assert itdn.greedy(net, d, seed=1).size >= opt.value
        assert itdn.randomized_rounding(net, d, seed=1, trials=10).size >= opt.value
        lp = itdn.solve_relaxation(net, d)
        assert lp.optimal
        assert lp.objective <= opt.value + 1e-7


def test_lp_against_scipy():
    scipy_opt = pytest.importorskip("scipy.optimize")
    for seed in range(5):
        net = itdn.gen_type1(10, 2, seed)
        edges = net.edges_ab
        na, nb, d = net.n_a, net.n_b, 3
        c = [1.0] * na + [0.0] * nb
        a_ub, b_ub = [], []
        for (i, j) in edges:
            row = [0.0] * (na + nb)
            row[i] = -1.0
            row[na + j] = 1.0
            a_ub.append(row)
            b_ub.append(0.0)
        row = [0.0] * na + [-1.0] * nb
        a_ub.append(row)
        b_ub.append(-float(d))
        ref = scipy_opt.linprog(c, A_ub=a_ub, b_ub=b_ub, bounds=[(0, 1)] * (na + nb),
                                method="highs")
        assert ref.status == 0
        ours = itdn.solve_relaxation(net, d)
        assert math.isclose(ours.objective, ref.fun, abs_tol=1e-7)


def test_annealing_improves_on_greedy():
    net = itdn.gen_type1(14, 3, 2)
    params = itdn.SaParams()
    params.seed = 4
    params.t_final = 0.01
    for d in (2, 4):
        g = itdn.greedy(net, d, seed=params.seed).size
        assert itdn.sa1(net, d, params).size <= g
        assert itdn.sa2(net, d, params).size <= g


def test_design_and_expansion():
    net = itdn.construct_2robust(3)
    assert net.n_a == 7
    assert itdn.mr_exact(net, 2).value == 5
    h = itdn.node_expansion(net)
    rr = itdn.relative_robustness(net)
    assert (h.value.num, h.value.den) == (rr.value.num, rr.value.den)
    assert itdn.design_2robust_ilp(2, 2).x == 2
    assert itdn.expander_check(8, 2, 0.5, trials=10, seed=1) == 1.0


def test_cluster_expand_identity():
    net = itdn.gen_type1(6, 2, 9)
    w = net.n_a + net.n_b + 1
    big = itdn.cluster_expand(net, w)
    assert itdn.mrb_exact(big, w * 2) == itdn.mr_exact(net, 2).value


def test_bench_round_trip():
    config = """
seeds = 2
algorithms = ["exact", "greedy"]
[[grid]]
family = "type1"
n = [8]
k = [2]
d = [1, 2]
"""
    csv = itdn.run_suite_csv(config, False)
    assert csv.splitlines()[0] == (
        "instance_id,family,n,k1,k2,D,algorithm,removal_size,runtime_ms,seed")
    assert csv == itdn.run_suite_csv(config, False)
    summary = itdn.summarize_csv(csv)
    assert "mean_gap" in summary.splitlines()[0]
