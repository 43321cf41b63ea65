import math

import pytest

import alphaspec as asp


def test_graph_round_trip():
    g = asp.Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert g.graph6 == "Cs"
    assert asp.Graph.from_graph6("Cs") == g
    assert g.order == 4 and g.size == 3
    assert g.degree(0) == 3
    assert g.edges == [(0, 1), (0, 2), (0, 3)]
    assert {g, asp.family("Sn:4")} == {g}


def test_invalid_input_raises():
    with pytest.raises(ValueError):
        asp.Graph(3, [(0, 0)])
    with pytest.raises(asp.ParseError):
        asp.Graph.from_graph6("!!")
    with pytest.raises(ValueError):
        asp.spectrum(asp.family("Cn:5"), 1.5)


def test_star_spectrum_closed_form():
    for alpha in (0.0, 0.3, 0.9):
        n = 7
        expected = (alpha * n + math.sqrt(alpha**2 * n**2 + 4 * (n - 1) * (1 - 2 * alpha))) / 2
        assert asp.spectral_radius(asp.family(f"Sn:{n}"), alpha) == pytest.approx(expected, abs=1e-10)


def test_alpha_one_gives_degrees():
    g = asp.family("Snpe:6")
    assert asp.eigenvalues(g, 1.0) == sorted((g.degree(v) for v in range(6)), reverse=True)


def test_spectrum_document():
    s = asp.spectrum(asp.family("Snpe:6"), 0.0)
    assert s["graph6"] == "E{a?"
    assert s["rho"] == pytest.approx(2.51413692934, abs=1e-11)
    assert len(s["perron"]) == 6


def test_enumeration_counts():
    assert len(asp.enumerate("trees", 10)) == 106
    assert len(asp.enumerate("unicyclic", 7)) == 33
    assert len(asp.enumerate("connected", 5)) == 21


def test_bounds_and_indices():
    b = asp.bounds(asp.family("Sn:4"), 0.0)
    rowsum = [e for e in b["bounds"] if e["bound_id"] == "rowsum"][0]
    assert rowsum["attained"]
    assert all(e["slack"] >= -1e-9 for e in b["bounds"] if e["applicable"])
    assert asp.indices(asp.family("Kn:2"))["energy"] == pytest.approx(2.0)


def test_verify_tree_extremes():
    r = asp.verify("3.7", n="8", alphas=[0.0, 0.5], workers=2)
    assert r["status"] == "PASS"
    assert sum(w["role"] == "diameter-max" for w in r["extremal_witnesses"]) == 10
    assert {t["id"] for t in asp.theorems()} >= {"3.1", "3.4", "4.1"}


def test_verify_reports_the_two_vertex_tie():
    r = asp.verify("4.1", n="2", alphas=[0.0])
    assert r["status"] == "FAIL"
    assert r["violations"][0]["kind"] == "contradiction"
