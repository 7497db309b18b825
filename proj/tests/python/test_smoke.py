from fractions import Fraction

import pytest

import hexmg


def test_network_shape():
    net = hexmg.build_network(2, 1)
    assert net.radius == 2
    assert len(net.cells()) == 19
    assert len(net.sectors()) == 57
    assert len(net.tx_neighbors((0, 0, 0))) == 4
    assert len(net.rx_neighbors((0, 0))) == 6
    assert hexmg.cell_distance((0, 0), (3, 0)) == 3
    edges = hexmg.interference_graph(net)
    assert sum(len(net.tx_neighbors(s)) for s in net.sectors()) == 2 * len(edges)


def test_bad_network_raises():
    with pytest.raises(ValueError):
        hexmg.build_network(0, 1)


def test_cluster_counts():
    plan = hexmg.cluster_plan(hexmg.build_network(6, 1), 1, "mixed")
    assert set(plan.link_counts("TX")) == {36}
    assert set(plan.link_counts("RX")) == {18}
    assert plan.message_count("S4", 3, "TX") == 54
    census = plan.census()
    assert census["SILENT"] + census["SLOW"] + census["FAST"] == census["sectors"]
    assert plan.role((0, 0, 0)) in {"SLOW", "FAST"}


def test_prelogs_are_fractions():
    assert hexmg.required_prelogs("S4", 1, 3) == (Fraction(3, 2), Fraction(1))
    assert hexmg.required_prelogs("S5", 1, 3) == (Fraction(1, 2), Fraction(2))


def test_reference_region():
    outer = hexmg.outer_bound(3, Fraction(1, 10), Fraction(1, 5), 20)
    assert (Fraction(0), Fraction(53, 30)) in outer
    inner = hexmg.inner_bound(3, 10, 10, 20, t=4)
    assert inner == [(0, 0), (Fraction(3, 2), 0), (1, Fraction(7, 4)), (0, Fraction(11, 4))]
    sf, ss = hexmg.scheme_point("S4_5_MIXED", 4, 3, "0.1", "0.2", 20)
    assert round(float(sf), 4) == 1.4792
    assert round(float(ss), 4) == 0.0727


def test_zero_forcing_trials():
    trials = hexmg.run_zf_trials(1, 2, "s4", trials=5, seed=7)
    assert len(trials) == 5
    assert all(t["solvable"] and t["min_self_rank"] == 2 for t in trials)
    assert max(t["max_cross_residual"] for t in trials) <= 1e-9


def test_converse():
    census = hexmg.partition_census("four", 20, 3)
    assert set(census) == {"RED", "BLUE", "PINK", "WHITE"}
    assert hexmg.validate_schedule(2, 1, 2, 3)["ok"]
    bad = hexmg.validate_schedule(1, 2, 2, 3)
    assert not bad["ok"] and bad["violations"][0].startswith("d")
