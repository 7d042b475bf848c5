import random
from math import comb

import pytest

from robustcliq.complex import SimplicialComplex, robust_clique_complex
from robustcliq.graph import cycle_graph, make_grid
from robustcliq.harness import (
    FLAGGED,
    MATCH,
    MISMATCH,
    Caps,
    decomposition_parts,
    edge_step_join_pair,
    fiber_witness,
    gamma_recurrence,
    random_simplex_overlap_pair,
    scan_conjecture,
    scan_grid_alpha,
    verify_clique_lemma,
    verify_decomposition,
    verify_duality,
    verify_edge_corollary,
    verify_embedded_join,
    verify_embedded_join_batch,
    verify_embedded_join_edge_steps,
    verify_join_spheres,
    verify_koenig,
    verify_main2,
    verify_thm_main,
    verify_total_cut,
    wedge_of_cycles,
)
from robustcliq.homology import reduced_homology
from robustcliq.sequence import grid_sequence, ladder_sequence, random_sequence

HOLLOW_A = SimplicialComplex.from_facets(4, [(0, 1), (0, 2), (1, 2)])
HOLLOW_B = SimplicialComplex.from_facets(4, [(1, 2), (1, 3), (2, 3)])


def test_caps_validation():
    with pytest.raises(ValueError):
        Caps(max_universe=0)
    with pytest.raises(ValueError):
        Caps(budget_secs=-1)
    assert Caps().deadline() is None


# -- recurrence ------------------------------------------------------------------


def test_gamma_on_grid_3_3():
    trace = gamma_recurrence(grid_sequence(3, 3).sequence)
    assert trace.gammas == [0, 1, 3, 6]
    assert [s.kind for s in trace.steps] == ["edge", "edge", "corner"]
    assert trace.steps[-1].common == 1


@pytest.mark.parametrize("length", [1, 2, 3, 4, 5])
def test_gamma_on_ladders_is_binomial(length):
    assert gamma_recurrence(ladder_sequence(length)).final == comb(length, 2)


@pytest.mark.parametrize("m,n", [(3, 3), (3, 4), (4, 4)])
def test_gamma_on_grids_is_binomial(m, n):
    assert gamma_recurrence(grid_sequence(m, n).sequence).final == comb((m - 1) * (n - 1), 2)


def test_gamma_equals_homology_on_random_sequences():
    rng = random.Random(11)
    for _ in range(25):
        seq = random_sequence(rng.randint(1, 5), rng)
        h = reduced_homology(robust_clique_complex(seq.final, 3))
        assert h.is_wedge_of_spheres(3, gamma_recurrence(seq).final)


# -- theorem checks ------------------------------------------------------------------


@pytest.mark.parametrize("m,n,k,count", [(2, 2, 2, 1), (3, 3, 2, 4), (2, 3, 3, 1), (3, 3, 3, 6)])
def test_thm_main(m, n, k, count):
    r = verify_thm_main(m, n, k)
    assert r.verdict == MATCH and r.computed["count"] == count


def test_thm_main_rejects_other_k():
    with pytest.raises(ValueError):
        verify_thm_main(3, 3, 4)


def test_main2_and_clique_lemma():
    seq = random_sequence(5, random.Random(2))
    assert verify_main2(seq).ok
    assert verify_clique_lemma(seq).ok


def test_edge_corollary_uses_consistent_count():
    r = verify_edge_corollary(ladder_sequence(4), 3)
    assert r.verdict == FLAGGED
    assert r.computed["count"] == comb(4, 2)
    assert r.computed["matches"] == ["C(L,k-1)"]
    with pytest.raises(ValueError):
        verify_edge_corollary(grid_sequence(3, 3).sequence, 3)


def test_total_cut_small():
    r = verify_total_cut(2, 3, 2)
    assert r.ok and r.computed["path"] == "direct+duality"
    assert r.computed["direct"]["reduced_betti"][2] == 2


def test_total_cut_uses_duality_on_big_grids():
    r = verify_total_cut(4, 4, 2)
    assert r.ok and r.computed["path"] == "duality" and r.computed["full_two_skeleton"]


# -- lemma checks --------------------------------------------------------------------


def test_decomposition_every_step_of_grid():
    seq = grid_sequence(3, 3).sequence
    for step in range(2, len(seq) + 1):
        for k in (3, 4):
            assert verify_decomposition(seq, step, k).ok


def test_decomposition_parts_cover_whole():
    parts = decomposition_parts(ladder_sequence(3), 3, 3)
    assert parts["whole"].faces == parts["K"].faces | parts["L"].faces


def test_koenig_small_graphs():
    for g in (cycle_graph(4), make_grid(2, 3)):
        r = verify_koenig(g, 2)
        assert r.ok and r.computed["edges_checked"] > 0


def test_koenig_rejects_odd_cycle():
    from robustcliq.errors import OddCycle

    with pytest.raises(OddCycle):
        verify_koenig(cycle_graph(5), 2)


def test_join_spheres():
    assert verify_join_spheres(1, 1).ok
    assert verify_join_spheres(2, 3).computed["reduced_betti"][3] == 6
    assert reduced_homology(wedge_of_cycles(3)).is_wedge_of_spheres(1, 3)


def test_overlap_pairs_meet_in_a_simplex():
    rng = random.Random(9)
    for _ in range(20):
        K, L, shared = random_simplex_overlap_pair(rng)
        assert verify_embedded_join(K, L).computed["intersection_is_simplex"]


def test_embedded_join_needs_more_than_a_simplex_intersection():
    # two hollow triangles sharing an edge: the intersection is that edge, the
    # embedded join is a full tetrahedron, the join is a 3-sphere
    r = verify_embedded_join(HOLLOW_A, HOLLOW_B)
    assert r.computed["intersection_is_simplex"]
    assert r.verdict == MISMATCH
    assert r.computed["embedded"]["reduced_betti"] == [0, 0, 0, 0]
    assert r.computed["join"]["reduced_betti"] == [0, 0, 0, 1]
    assert fiber_witness(HOLLOW_A, HOLLOW_B) == 0b1111
    assert r.computed["fiber_witness"] == [0, 1, 2, 3]


def test_embedded_join_flags_unmet_hypothesis():
    K = SimplicialComplex.from_facets(4, [(0, 1), (2,)])
    L = SimplicialComplex.from_facets(4, [(0,), (1,), (3,)])
    assert verify_embedded_join(K, L).verdict == FLAGGED


def test_embedded_join_batch_is_seeded():
    a = [r.to_json_obj() for r in verify_embedded_join_batch(10, seed=3)]
    b = [r.to_json_obj() for r in verify_embedded_join_batch(10, seed=3)]
    assert a == b


def test_embedded_join_holds_at_edge_steps():
    rng = random.Random(0)
    seen = 0
    for _ in range(20):
        seq = random_sequence(rng.randint(2, 5), rng)
        for k in (3, 4):
            for r in verify_embedded_join_edge_steps(seq, k):
                assert r.ok
                seen += 1
    assert seen > 0
    with pytest.raises(ValueError):
        edge_step_join_pair(grid_sequence(3, 3).sequence, 4, 3)


# -- scans and audits ------------------------------------------------------------------


def test_scan_conjecture_deterministic():
    a = [r.to_json_obj() for r in scan_conjecture(3, 4, 5, seed=4)]
    b = [r.to_json_obj() for r in scan_conjecture(3, 4, 5, seed=4)]
    assert a == b and len(a) == 5
    assert all(r["verdict"] == MATCH for r in a)


def test_scan_conjecture_skips_capped(caplog):
    out = scan_conjecture(3, 5, 3, seed=0, caps=Caps(max_faces=5))
    assert out == []
    assert "skipped" in caplog.text


def test_scan_grid_alpha():
    reports = scan_grid_alpha(((2, 2), (3, 3)))
    assert [r.verdict for r in reports] == [MATCH, MATCH]
    assert reports[1].params["k"] == 5


def test_duality_report():
    assert verify_duality(make_grid(2, 3), 2).ok


def test_reports_omit_runtime_by_default():
    r = verify_thm_main(2, 2, 2)
    assert "runtime_ms" not in r.to_json_obj()
    assert "runtime_ms" in r.to_json_obj(include_runtime=True)
