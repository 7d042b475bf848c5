"""Acceptance gate: eleven criteria, exact integer equalities, one status line each.

Run ``pytest tests/test_acceptance.py -v -s`` to see the status lines inline;
they are also printed with capture disabled so plain ``pytest -v`` shows them.
"""
import io
import json
import random
from math import comb

import pytest

import oracles
from robustcliq.cli import EXIT_FLAGGED, run
from robustcliq.complex import (
    alexander_dual,
    robust_clique_complex,
    total_cut_complex,
    total_cut_has_full_two_skeleton,
)
from robustcliq.graph import cycle_graph, make_grid, random_graph
from robustcliq.harness import (
    verify_decomposition,
    verify_edge_corollary,
    verify_embedded_join_batch,
    verify_join_spheres,
    verify_koenig,
    verify_main2,
    verify_thm_main,
)
from robustcliq.homology import compare_dual_homology, reduced_homology
from robustcliq.sequence import EDGE, grid_sequence, ladder_sequence, random_sequence


@pytest.fixture
def status(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {number:2d}: {'PASS' if ok else 'FAIL'} | {detail}")
        assert ok, detail

    return emit


def test_criterion_01_grid_k2(status):
    bad = []
    for m in (2, 3, 4):
        for n in (2, 3, 4):
            r = verify_thm_main(m, n, 2)
            if not (r.ok and r.computed["count"] == (m - 1) * (n - 1)):
                bad.append((m, n))
    status(1, not bad, f"Cliq_2 grids 2..4 x 2..4 are wedges of (m-1)(n-1) circles; failures {bad}")


def test_criterion_02_grid_k3(status):
    grids = [(2, 2), (2, 3), (2, 4), (2, 5), (3, 3), (3, 4), (4, 4)]
    expected = [0, 1, 3, 6, 6, 15, 36]
    got = []
    ok = True
    for (m, n), e in zip(grids, expected):
        r = verify_thm_main(m, n, 3)
        got.append(r.computed["count"])
        ok &= r.ok and e == comb((m - 1) * (n - 1), 2) and r.computed["count"] == e
    status(2, ok, f"Cliq_3 betti_3 on {grids} = {got}, expected {expected}")


def test_criterion_03_square_sequences(status):
    rng = random.Random(0)
    bad = []
    for i in range(200):
        seq = random_sequence(rng.randint(1, 6), rng)
        r = verify_main2(seq)
        if not r.ok:
            bad.append(r.to_json_obj())
    status(3, not bad, f"200 seeded sequences, Cliq_3 equals recurrence wedge; failures {len(bad)}")


def test_criterion_04_total_cut_direct(status):
    cases = [((2, 2), 2, 0, 1), ((2, 3), 2, 2, 2), ((2, 3), 3, 0, 1)]
    lines = []
    ok = True
    for (m, n), k, dim, count in cases:
        g = make_grid(m, n)
        cut = reduced_homology(total_cut_complex(g, k))
        clique = reduced_homology(robust_clique_complex(g, k))
        direct_ok = cut.is_wedge_of_spheres(dim, count)
        dual_ok = compare_dual_homology(m * n, clique, cut) and clique.betti(m * n - dim - 3) == count
        ok &= direct_ok and dual_ok
        lines.append(f"G{m}{n} k={k}: betti_{dim}={cut.betti(dim)}")
    status(4, ok, "total cut direct and via duality: " + ", ".join(lines))


def _duality_graphs():
    out = [make_grid(m, n) for m, n in [(2, 2), (2, 3), (2, 4), (2, 5), (3, 3)]]
    out += [ladder_sequence(L).final for L in (1, 2, 3, 4)]
    rng = random.Random(0)
    while len(out) < 20:
        seq = random_sequence(rng.randint(1, 4), rng)
        if seq.final.vertex_count <= 10:
            out.append(seq.final)
    rng = random.Random(1)
    out += [random_graph(rng.randint(3, 10), rng.random(), rng) for _ in range(100)]
    return out


def test_criterion_05_duality_identities(status):
    graphs = _duality_graphs()
    bad = []
    for gi, g in enumerate(graphs):
        for k in (2, 3):
            K = robust_clique_complex(g, k)
            cut = total_cut_complex(g, k)
            if alexander_dual(alexander_dual(K)) != K or alexander_dual(alexander_dual(cut)) != cut:
                bad.append(("involution", gi, k))
            if alexander_dual(cut) != K:
                bad.append(("cut dual", gi, k))
    status(5, not bad, f"{len(graphs)} graphs x k in {{2,3}}: involution and cut dual = Cliq; failures {bad}")


def test_criterion_06_koenig(status):
    graphs = {"C4": cycle_graph(4), "G23": make_grid(2, 3), "G24": make_grid(2, 4), "G33": make_grid(3, 3)}
    counts = {}
    ok = True
    for name, g in graphs.items():
        for k in (2, 3):
            r = verify_koenig(g, k, exhaustive_limit=12)
            ok &= r.ok and r.params["mode"] == "exhaustive"
            counts[f"{name},k={k}"] = r.computed["edges_checked"]
    status(6, ok, f"alpha drops by one on every maximum-matching edge; edges checked {counts}")


def test_criterion_07_decomposition(status):
    seqs = [grid_sequence(3, 3).sequence]
    rng = random.Random(0)
    seqs += [random_sequence(rng.randint(2, 5), rng) for _ in range(50)]
    checked, bad = 0, []
    for si, seq in enumerate(seqs):
        for step in range(2, len(seq) + 1):
            for k in (3, 4):
                r = verify_decomposition(seq, step, k)
                checked += 1
                if not r.ok:
                    bad.append((si, step, k, r.computed))
    status(7, not bad, f"union and intersection forms at {checked} (sequence, step, k) triples; failures {bad}")


def test_criterion_08_joins(status):
    spheres = verify_join_spheres(1, 1)
    spheres_ok = spheres.ok and spheres.computed["reduced_betti"][3] == 1
    batch = verify_embedded_join_batch(50, seed=0)
    hypothesis_met = all(r.computed["intersection_is_simplex"] for r in batch)
    bad = [r for r in batch if not r.ok]
    detail = f"join of two 4-cycles betti_3={spheres.computed['reduced_betti'][3]}; embedded join vs join {50 - len(bad)}/50 equal"
    for r in bad:
        detail += (
            f"; counterexample K={r.params['K']['facets']} L={r.params['L']['facets']}"
            f" embedded={r.computed['embedded']['reduced_betti']} join={r.computed['join']['reduced_betti']}"
        )
    status(8, spheres_ok and hypothesis_met and not bad, detail)


def _edge_only_sequences():
    out = [ladder_sequence(L) for L in range(2, 6)]
    rng = random.Random(0)
    for L in range(2, 6):
        out += [random_sequence(L, rng, kinds=(EDGE,)) for _ in range(4)]
    return out


def test_criterion_09_edge_corollary(status):
    uniform = {"C(L-1,k-1)", "C(L,k-1)"}
    shape_ok = True
    n = 0
    for seq in _edge_only_sequences():
        for k in (2, 3, 4):
            r = verify_edge_corollary(seq, k)
            n += 1
            shape_ok &= r.computed["concentrated"] and r.computed["torsion"] == {}
            uniform &= set(r.computed["matches"])
    ok = shape_ok and uniform == {"C(L,k-1)"}
    status(9, ok, f"{n} edge-only instances concentrated in 2k-3 and free; uniformly matching count: {sorted(uniform)}")


def test_criterion_10_worked_example_audit(status):
    out, err = io.StringIO(), io.StringIO()
    code = run(["verify", "example26"], stdout=out, stderr=err)
    rep = json.loads(out.getvalue())
    g = make_grid(5, 3)
    brute_alpha = oracles.alpha(g.edges, range(15))
    brute_max = len(oracles.independent_sets(15, g.edges, brute_alpha))
    c = rep["computed"]
    ok = (
        code == EXIT_FLAGGED
        and c["alpha"] == brute_alpha >= 8
        and c["maximum_sets"] == brute_max
        and c["checkerboard_witness"] == {"independent": True, "size": 8}
    )
    status(
        10,
        ok,
        f"exit {code} (flagged); alpha={c['alpha']}, maximum sets={c['maximum_sets']}, "
        f"Cliq_6 betti={c['homology']['reduced_betti']}, torsion={c['homology']['torsion']}",
    )


def test_criterion_11_full_two_skeleton(status):
    res = {(m, n): total_cut_has_full_two_skeleton(make_grid(m, n), 3) for m in (3, 4) for n in (3, 4)}
    status(11, all(res.values()), f"every <=3-set is a face of the total 3-cut complex: {res}")
