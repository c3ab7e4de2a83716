import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import (
    DATA,
    from_nx,
    random_connected,
    random_connected_regular,
    regular_diameter_two_pool,
    to_nx,
)
from predist.characterize import (
    CensusIOError,
    CensusSummary,
    adjacency_gate,
    analyze,
    census_scan,
    excess_means,
    laplacian_gate,
    spectral_excess_summary,
)
from predist.checks import INVARIANTS, run_invariants
from predist.config import AnalysisError, IrregularGraphError, Tolerances
from predist.corpus import (
    NON_DRG_WITNESS,
    circulant_graph,
    complete_graph,
    cycle_graph,
    hypercube_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from predist.graph import Graph, bfs_distances, encode_graph6, laplacian_matrix, parse_graph6
from predist.orthopoly import build_ortho_system
from predist.spectral import ADJACENCY, LAPLACIAN, spectrum_of


def gates(g, **kw):
    return analyze(g, **kw).gates


def test_excess_means_petersen():
    m = excess_means(bfs_distances(petersen_graph()))
    assert m.values == (4,) * 10
    assert m.am == m.hm == 4 and m.all_equal
    assert m.vertices_without_antipodes == 0


def test_excess_means_c6():
    m = excess_means(bfs_distances(cycle_graph(6)))
    assert m.am == m.hm == 5


def test_excess_means_star():
    m = excess_means(bfs_distances(star_graph(3)))
    # the centre has no vertex at distance 2
    assert m.values == (4, 2, 2, 2)
    assert m.am == pytest.approx(2.5)
    assert m.hm == pytest.approx(16 / 7)
    assert not m.all_equal and m.vertices_without_antipodes == 1


def test_excess_means_single_vertex():
    with pytest.raises(AnalysisError, match="single vertex"):
        excess_means(bfs_distances(Graph.from_edges(1, [])))


def test_petersen_gates():
    for kind, gate in gates(petersen_graph()).items():
        assert gate.D == gate.d == 2
        assert gate.target == pytest.approx(4) and gate.hm == pytest.approx(4)
        assert gate.equality and gate.direct_check and gate.drg_verdict
        assert gate.direct_residual <= 1e-9
        assert gate.closed_form_drg and gate.closed_form_top == pytest.approx(6)
        assert not gate.warnings, kind


def test_laplacian_petersen_implies_regular():
    gate = gates(petersen_graph(), kinds=(LAPLACIAN,))[LAPLACIAN]
    assert gate.regular_implied


def test_diameter_two_equality_without_drg():
    # C_8(1, 2) has diameter 2 but five distinct eigenvalues
    for gate in gates(circulant_graph(8, [1, 2])).values():
        assert (gate.D, gate.d) == (2, 4)
        assert gate.equality and gate.direct_check and not gate.drg_verdict
        assert gate.hm == pytest.approx(5) and gate.target == pytest.approx(5)


def test_witness_is_strict():
    g = parse_graph6(NON_DRG_WITNESS)
    assert g.n == 12 and set(g.degrees) == {5}
    for gate in gates(g).values():
        assert gate.D == gate.d == 3
        assert gate.hm - gate.target == pytest.approx(2 / 3, rel=1e-9)
        assert not gate.equality and not gate.direct_check and not gate.drg_verdict
        assert gate.direct_residual == pytest.approx(2 / 3, rel=1e-9)
        assert not gate.warnings


@pytest.mark.parametrize("n", range(2, 7))
def test_complete_graph_boundary(n):
    for gate in gates(complete_graph(n)).values():
        assert gate.D == gate.d == 1
        assert gate.target == pytest.approx(1) and gate.hm == pytest.approx(1)
        assert gate.drg_verdict


def test_star_laplacian_strict():
    a = analyze(star_graph(3))
    assert ADJACENCY not in a.gates
    assert any("not regular" in note for note in a.notes)
    gate = a.gates[LAPLACIAN]
    assert gate.target == pytest.approx(2)
    assert gate.hm == pytest.approx(16 / 7)
    assert not gate.equality and not gate.direct_check and not gate.regular_implied


def test_path_laplacian_strict():
    gate = gates(path_graph(4), kinds=(LAPLACIAN,))[LAPLACIAN]
    assert gate.D == gate.d == 3
    assert gate.hm > gate.target and not gate.equality


def test_adjacency_gate_refuses_irregular():
    g = star_graph(3)
    sys = build_ortho_system(spectrum_of(g.adjacency, ADJACENCY))
    with pytest.raises(IrregularGraphError, match="laplacian"):
        adjacency_gate(g, bfs_distances(g), sys)
    with pytest.raises(IrregularGraphError):
        analyze(g, kinds=(ADJACENCY,), strict=True)


def test_gates_check_system_kind():
    g = cycle_graph(5)
    dd = bfs_distances(g)
    lap_sys = build_ortho_system(spectrum_of(laplacian_matrix(g), LAPLACIAN))
    adj_sys = build_ortho_system(spectrum_of(g.adjacency, ADJACENCY))
    with pytest.raises(ValueError):
        adjacency_gate(g, dd, lap_sys)
    with pytest.raises(ValueError):
        laplacian_gate(g, dd, adj_sys)


def test_single_vertex_analysis():
    a = analyze(Graph.from_edges(1, []))
    assert not a.gates and a.notes == ["single vertex: gates not applicable"] * 2


def test_tol_eq_zero_is_exact():
    g = cycle_graph(7)
    a = analyze(g, tol=Tolerances(eq=0.0))
    # exact float equality may or may not survive rounding; the matrix check does not care
    for gate in a.gates.values():
        assert gate.direct_check
        assert gate.equality == (gate.hm == gate.target)


@pytest.mark.parametrize("g, p_top, mean", [
    (hypercube_graph(3), 1.0, 7.0),
    (cycle_graph(5), 2.0, 3.0),
    (petersen_graph(), 6.0, 4.0),
])
def test_spectral_excess_summary_drg(g, p_top, mean):
    s = spectral_excess_summary(g)
    assert s.spectral_excess == pytest.approx(p_top)
    assert s.average_excess == pytest.approx(p_top)
    assert s.am == pytest.approx(mean) and s.hm == pytest.approx(mean)
    assert s.hm_verdict and s.am_verdict and s.matrix_verdict and s.agree
    assert s.matrix_residual <= 1e-9


def test_spectral_excess_summary_witness():
    s = spectral_excess_summary(parse_graph6(NON_DRG_WITNESS))
    assert not s.hm_verdict and not s.am_verdict and not s.matrix_verdict and s.agree
    # spectral excess bounds the average excess from above, strictly off distance-regular graphs
    assert s.spectral_excess == pytest.approx(8 / 3) and s.average_excess == 2


def test_spectral_excess_summary_refuses_irregular():
    g = petersen_graph()
    # subdivide edge (0, 1)
    edges = [e for e in g.edges if e != (0, 1)] + [(0, 10), (1, 10)]
    with pytest.raises(IrregularGraphError):
        spectral_excess_summary(Graph.from_edges(11, edges))


def test_spectral_excess_summary_random_regular_agree():
    for g in random_connected_regular(25, nmax=16, seed=41):
        s = spectral_excess_summary(g)
        assert s.agree, s.warnings


# -- census -------------------------------------------------------------------


def test_census_finds_petersen():
    lines = (DATA / "cubic10.g6").read_text().splitlines()
    summary = CensusSummary()
    hits = list(census_scan(lines, summary=summary))
    assert [h["graph6"] for h in hits] == ["IC`HV@QL?"]
    assert nx.is_isomorphic(to_nx(parse_graph6(hits[0]["graph6"])), to_nx(petersen_graph()))
    assert hits[0]["drg"] and hits[0]["D"] == hits[0]["d"] == 2
    assert summary.scanned == 21 and summary.hits == 1
    assert summary.skipped == {"disconnected": 2}


def test_census_skips_and_errors():
    two_triangles = encode_graph6(Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]))
    isolated = encode_graph6(Graph.from_edges(5, [(0, 1), (1, 2)]))
    lines = ["Dhc\n", "\n", two_triangles + "\n", isolated + "\n", "@\n", "D?{\n", "I?\n"]
    summary = CensusSummary()
    hits = list(census_scan(lines, kind="both", summary=summary))
    assert [(h["graph6"], h["kind"]) for h in hits] == [("Dhc", ADJACENCY), ("Dhc", LAPLACIAN)]
    assert summary.scanned == 6
    assert summary.skipped == {"disconnected": 2, "single vertex": 1, "irregular": 1, "parse error": 1}
    assert len(summary.errors) == 1 and summary.errors[0].startswith("line 7:")


def test_census_filter_d_gt_d():
    pool = regular_diameter_two_pool()
    lines = [encode_graph6(g) for g in pool]
    hits = list(census_scan(lines, flt="d-gt-D"))
    assert hits and all(h["d"] > h["D"] == 2 for h in hits)
    assert encode_graph6(circulant_graph(8, [1, 2])) in {h["graph6"] for h in hits}
    every = list(census_scan(lines, flt="all"))
    assert len(every) > len(hits)
    with pytest.raises(ValueError):
        list(census_scan(lines, flt="nope"))


def test_census_order_preserved_with_workers():
    graphs = random_connected(40, nmax=12, seed=5) + [petersen_graph(), cycle_graph(7)] * 3
    lines = [encode_graph6(g) for g in graphs]
    one = list(census_scan(lines, kind=LAPLACIAN))
    many = list(census_scan(lines, kind=LAPLACIAN, workers=4, chunk=7))
    assert one == many
    assert one == [h for line in lines for h in census_scan([line], kind=LAPLACIAN)]


def test_census_io_error_names_line():
    def broken():
        yield "Dhc\n"
        yield "Dhc\n"
        raise OSError("device went away")

    with pytest.raises(CensusIOError, match="line 3"):
        list(census_scan(broken()))


def test_census_empty():
    summary = CensusSummary()
    assert list(census_scan([], summary=summary)) == []
    assert summary.as_dict() == {"scanned": 0, "hits": 0, "skipped": {}, "errors": []}


# -- invariants -----------------------------------------------------------------


def test_corpus_invariants(corpus_analyses):
    tally = run_invariants(corpus_analyses)
    assert tally.ok, tally.failures
    assert set(tally.total) == set(INVARIANTS)


def test_invariants_random_small():
    # n <= 10 keeps every predistance value well above rounding (see the orthopoly tests)
    graphs = random_connected(60, nmax=10, seed=2) + random_connected_regular(30, nmax=10, seed=2)
    tally = run_invariants({i: analyze(g) for i, g in enumerate(graphs)})
    assert tally.ok, tally.failures


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 18), st.floats(0.15, 0.95), st.integers(0, 2**31 - 1))
def test_mean_inequality_property(n, p, seed):
    h = nx.gnp_random_graph(n, p, seed=seed)
    if not nx.is_connected(h):
        return
    g = from_nx(h)
    for gate in analyze(g).gates.values():
        assert gate.hm >= gate.target * (1 - 1e-7)
        assert gate.am >= gate.hm - 1e-12
        assert gate.equality == gate.direct_check
        if gate.kind == LAPLACIAN and gate.D == 2 and gate.equality:
            assert len(set(g.degrees.tolist())) == 1


def test_diameter_two_pool_all_equal():
    pool = regular_diameter_two_pool()
    assert len(pool) >= 50
    assert any(analyze(g, kinds=(ADJACENCY,)).gates[ADJACENCY].d > 2 for g in pool)
    for g in pool:
        for gate in analyze(g).gates.values():
            assert gate.D == 2 and gate.equality and gate.direct_check
