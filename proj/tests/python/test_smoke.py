import math

import pytest

import loopenergy as le


def test_k2_tilde_energy():
    g = le.Graph(2, [(0, 1)], [0])
    assert g.order == 2 and g.size == 1 and g.loop_count == 1
    assert le.eigenvalues(g) == pytest.approx([(1 + math.sqrt(5)) / 2, (1 - math.sqrt(5)) / 2], abs=1e-10)
    assert le.energy(g) == pytest.approx(math.sqrt(5), abs=1e-10)


def test_cycle_bounds():
    c4 = le.parse_graph("n 4\ne 0 1\ne 1 2\ne 2 3\ne 0 3\n")
    r = le.bound_report(c4)
    assert list(r) == ["n", "m", "sigma", "spectrum", "energy", "bounds", "equality_flags", "families"]
    assert r["bounds"]["gutman_upper"] == pytest.approx(math.sqrt(32), abs=1e-10)
    assert r["bounds"]["spread_ratio_lower"] == pytest.approx(4.0, abs=1e-10)
    assert r["equality_flags"]["spread_ratio"] is True


def test_undefined_spread():
    r = le.bound_report(le.Graph(2))
    assert r["bounds"]["spread_ratio_lower"] == "UNDEFINED"


def test_families_and_codes():
    g = le.make_family("half_k2_hat", 4)
    assert le.serialize_graph(g) == "n 4\ne 0 1\ne 2 3\nl 0\nl 1\nl 2\nl 3\n"
    assert le.canonical_code(le.Graph(2, [(0, 1)], [1])) == le.canonical_code(le.Graph(2, [(0, 1)], [0]))
    assert len(le.connected_components(g)) == 2
    with pytest.raises(le.Error):
        le.make_family("half_k2", 3)


def test_errors():
    with pytest.raises(le.Error):
        le.Graph(2, [(0, 2)])
    with pytest.raises(le.Error):
        le.parse_graph("n 2\ne 0\n")


def test_verify_small():
    s = le.verify(max_n=4)
    assert s["graphs_checked"] == 2 + 8 + 64 + 1024
    assert s["violations"] == []
    assert len(s["equality_witnesses"]["gutman"]["4"]) == 6


def test_extremal():
    rows = le.find_extremal(4, sigma=2, bound="gutman", top=2)
    assert len(rows) == 2
    assert all(abs(r["gap"]) < 1e-9 for r in rows)
    assert isinstance(rows[0]["graph"], le.Graph)
