"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py`` (lines appear in the terminal summary)
or directly with ``python3 tests/test_acceptance.py``.
"""
from __future__ import annotations

import json
import os
import random
import subprocess
import sys
import time
from pathlib import Path

import pytest
import sympy

sys.path.insert(0, os.path.dirname(__file__))

from ccrk import euler_characteristic
from ccrk.complex import VertexMap, boundary_of_simplex, is_injective_simplicial, is_isomorphism
from ccrk.facetfile import read_facets
from ccrk.homology import IntegerMatrix, rational_rank, reduced_homology, smith_normal_form
from ccrk.homology.snf import determinant
from ccrk.labels import Interval, Subset
from ccrk.surfaces import (
    Status,
    as_tube,
    build_oracle_g,
    counterexample_g,
    counterexample_g2n1,
    genus_rigid_set,
    sphere_rigid_set,
    tau,
    theorem1_check,
    verify_rho,
)
from ccrk.tubings import associahedron_dual

from oracles import catalan, path_maximal_tubings

FIXTURES = Path(__file__).parent / "fixtures"
RESULTS: dict[str, str] = {}


def _run(key: str, title: str, fn):
    t0 = time.perf_counter()
    try:
        detail = fn()
    except Exception as exc:
        RESULTS[key] = f"FAIL criterion {key}: {title} ({type(exc).__name__}: {exc})"
        raise
    took = time.perf_counter() - t0
    extra = f"; {detail}" if detail else ""
    RESULTS[key] = f"PASS criterion {key}: {title} [{took:.1f}s{extra}]"


# -- criteria ---------------------------------------------------------------------------------


def associahedron_spheres():
    for m in range(3, 10):
        D = associahedron_dual(m)
        h = reduced_homology(D)
        assert h.is_sphere(m - 3), f"m={m}: {h.to_json()}"
        assert euler_characteristic(D) == 1 + (-1) ** (m - 3), f"m={m}"


CATALAN_TABLE = {3: 2, 4: 5, 5: 14, 6: 42, 7: 132, 8: 429, 9: 1430}


def catalan_census():
    for m, count in CATALAN_TABLE.items():
        D = associahedron_dual(m)
        assert catalan(m - 1) == count
        assert len(D.facets) == count, f"m={m}: {len(D.facets)} facets"
        assert all(len(f) == m - 2 for f in D.facets)
        got = {frozenset(t.elems for t in f) for f in D.labelled_facets()}
        want = {frozenset(tuple(sorted(t)) for t in tb) for tb in path_maximal_tubings(1, m - 1)}
        assert got == want, f"m={m}: facets differ from the recursive enumeration"


def _iso_both_ways(X, m):
    D = associahedron_dual(m)
    assert is_isomorphism(VertexMap(X, D, {J: as_tube(J) for J in X.vertices}))
    assert is_isomorphism(VertexMap(D, X, {as_tube(J): J for J in X.vertices}))


def interval_isomorphisms():
    for n in range(4, 10):
        _iso_both_ways(sphere_rigid_set(n), n - 1)
    for g in range(1, 5):
        _iso_both_ways(genus_rigid_set(g), 2 * g + 1)


def _rho_ok(N):
    r = verify_rho(N)
    assert (r.simplicial, r.surjective, r.abs_degree) == (True, True, 1), f"N={N}: {r}"
    assert r.top_preimage == (Subset(tuple(range(1, N))),), f"N={N}: {r.top_preimage}"


def rho_required():
    for N in range(2, 8):
        _rho_ok(N)


def rho_optional():
    _rho_ok(8)


def rigid_set_homology():
    for n in range(4, 10):
        h = reduced_homology(sphere_rigid_set(n))
        assert tau(0, n) == n - 4 and h.is_sphere(n - 4), f"n={n}"
    for g in range(1, 5):
        h = reduced_homology(genus_rigid_set(g))
        assert tau(g, 0) == 2 * g - 2 and h.is_sphere(2 * g - 2), f"g={g}"


def theorem1():
    slowest = 0.0
    for n in range(5, 10):
        t0 = time.perf_counter()
        r = theorem1_check(n)
        slowest = max(slowest, time.perf_counter() - t0)
        assert is_isomorphism(r.iso), f"n={n}"
        assert r.vertex_count == r.expected_count == n * (n - 1) // 2 - n, f"n={n}"
    return f"slowest n {slowest:.2f}s"


def counterexamples_high_genus():
    for g in (3, 4):
        w = counterexample_g(g)
        assert is_injective_simplicial(w.f)
        assert not w.f.is_identity()
        assert w.pair == (Interval(1, 3), Interval(3, 5))
        o = build_oracle_g(g)
        a, b = w.pair
        assert o.status(a, b) is Status.INTERSECTING
        assert o.status(w.f(a), w.f(b)) is Status.DISJOINT


def counterexample_genus_two():
    w = counterexample_g2n1()
    assert len(w.eliminations) == 4
    survivors = [row["symmetry"] for row in w.eliminations if row["fixes_both"]]
    assert survivors == ["identity"], survivors
    assert not w.f.is_identity()


def _random_sparse(rng: random.Random) -> list[list[int]]:
    m, n = rng.randint(1, 12), rng.randint(1, 12)
    density = rng.choice([0.1, 0.25, 0.5, 0.8])
    return [[rng.randint(-9, 9) if rng.random() < density else 0 for _ in range(n)] for _ in range(m)]


def homology_engine():
    rng = random.Random(20240611)
    count = 1200
    for _ in range(count):
        rows = _random_sparse(rng)
        A = IntegerMatrix.from_dense(rows)
        sf = smith_normal_form(A, transforms=True)
        d = sf.diagonal
        assert all(b % a == 0 for a, b in zip(d, d[1:])), rows
        assert sf.U @ A @ sf.V == sf.S(), rows
        assert abs(determinant(sf.U)) == 1 and abs(determinant(sf.V)) == 1, rows
        assert sf.rank == rational_rank(A) == sympy.Matrix(rows).rank(), rows
        assert smith_normal_form(A).diagonal == d, rows
    for k in range(1, 8):
        h = reduced_homology(boundary_of_simplex(range(k + 1)))
        assert h.is_sphere(k - 1), f"boundary of the {k}-simplex"
        assert h.euler_poincare() == euler_characteristic(boundary_of_simplex(range(k + 1))) - 1
    h = reduced_homology(read_facets(FIXTURES / "rp2.facets"))
    assert [g.to_json() for g in h.nonzero()] == [{"dim": 1, "betti": 0, "torsion": [2]}]
    return f"{count} random matrices"


def _payload_text(raw: str) -> str:
    start = raw.index('"payload":')
    end = raw.index('"timings":')
    return raw[start:end]


def determinism(tmp: Path):
    env = dict(os.environ, CCRK_JOBS="1")
    texts = []
    for i in range(2):
        out = tmp / f"report{i}.json"
        proc = subprocess.run([sys.executable, "-m", "ccrk.cli", "verify", "--suite", "all", "--out", str(out)],
                              env=env, capture_output=True, text=True, timeout=1200)
        assert proc.returncode == 0, proc.stderr or proc.stdout
        texts.append(out.read_text())
    assert _payload_text(texts[0]) == _payload_text(texts[1])
    payload = json.loads(texts[0])["payload"]
    return f"{len(payload['checks'])} checks, payload identical"


# -- pytest entry points ------------------------------------------------------------------------


def test_criterion_01_associahedron_spheres():
    _run("1", "associahedron duals m=3..9 are homology spheres", associahedron_spheres)


def test_criterion_02_catalan_census():
    _run("2", "Catalan facet census m=3..9", catalan_census)


def test_criterion_03_interval_isomorphisms():
    _run("3", "interval complexes isomorphic to associahedron duals", interval_isomorphisms)


def test_criterion_04_rho_degree():
    _run("4", "left-most component map N=2..7 has degree +-1", rho_required)


@pytest.mark.slow
def test_criterion_04_rho_degree_n8():
    _run("4b", "left-most component map N=8 (optional)", rho_optional)


def test_criterion_05_rigid_set_homology():
    _run("5", "rigid set homology matches tau", rigid_set_homology)


def test_criterion_06_theorem1():
    _run("6", "polygon model isomorphism n=5..9", theorem1)


def test_criterion_07_counterexamples():
    _run("7", "non-rigidity witnesses g=3,4", counterexamples_high_genus)


def test_criterion_08_counterexample_g2n1():
    _run("8", "non-rigidity witness genus 2 with one marked point", counterexample_genus_two)


def test_criterion_09_homology_engine():
    _run("9", "Smith normal form and homology engine soundness", homology_engine)


def test_criterion_10_determinism(tmp_path):
    _run("10", "verify --suite all is deterministic", lambda: determinism(tmp_path))


def summary_lines() -> list[str]:
    order = ["1", "2", "3", "4", "4b", "5", "6", "7", "8", "9", "10"]
    return [RESULTS[k] for k in order if k in RESULTS]


if __name__ == "__main__":
    import tempfile

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                if "tmp_path" in fn.__code__.co_varnames:
                    with tempfile.TemporaryDirectory() as d:
                        fn(Path(d))
                else:
                    fn()
            except Exception:
                failed += 1
    for line in summary_lines():
        print(line)
    sys.exit(1 if failed else 0)
