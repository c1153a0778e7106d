"""Doubled-polygon model of the rigid set on the n-punctured sphere.

Curves are doubles of segments joining two non-adjacent sides of an n-gon.
Two such curves are disjoint unless their side pairs interleave around the
polygon; segments sharing a side can be drawn parallel, so they are disjoint.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from ccrk.complex import SimplicialComplex, VertexMap, find_isomorphism, flag_complex, is_isomorphism
from ccrk.errors import LabelError, TheoremViolation
from ccrk.labels import Chord, Interval
from ccrk.surfaces.intervals import intervals, sphere_rigid_set


def _side(x: int, n: int) -> int:
    return (x - 1) % n + 1


def chord_curve(a: int, b: int, n: int) -> Chord:
    if a == b or not (1 <= a <= n and 1 <= b <= n):
        raise LabelError(f"bad chord ({a},{b}) for the {n}-gon")
    if (a - b) % n in (1, n - 1):
        raise LabelError(f"sides {a} and {b} are adjacent in the {n}-gon")
    return Chord(a, b)


def chords(n: int) -> list[Chord]:
    return [Chord(a, b) for a, b in itertools.combinations(range(1, n + 1), 2)
            if (b - a) % n not in (1, n - 1)]


def chords_cross(c1: Chord, c2: Chord) -> bool:
    """Side pairs interleave in cyclic order (shared sides never cross)."""
    if {c1.a, c1.b} & {c2.a, c2.b}:
        return False
    inside = [c1.a < x < c1.b for x in (c2.a, c2.b)]
    return inside[0] != inside[1]


def polygon_model(n: int) -> SimplicialComplex:
    if n < 5:
        raise ValueError(f"polygon model needs n >= 5, got {n}")
    return flag_complex(chords(n), lambda s, t: not chords_cross(s, t))


def dihedral_image(c: Chord, n: int, shift: int = 0, reflect: bool = False) -> Chord:
    def act(x):
        y = n + 1 - x if reflect else x
        return _side(y + shift, n)
    return Chord(act(c.a), act(c.b))


def candidate_chord(J: Interval, n: int) -> Chord:
    """Chord separating sides ``j..m`` when arcs lie on sides ``1..n-2``."""
    return Chord(_side(J.j - 1, n), _side(J.m + 1, n))


@dataclass(frozen=True)
class Theorem1Result:
    n: int
    iso: VertexMap
    convention: str
    vertex_count: int
    expected_count: int

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "convention": self.convention,
            "vertex_count": self.vertex_count,
            "expected_count": self.expected_count,
            "map": self.iso.as_labels(),
        }


def theorem1_check(n: int) -> Theorem1Result:
    """Verified isomorphism from the interval sphere to the polygon model."""
    if n < 5:
        raise ValueError(f"theorem1_check needs n >= 5, got {n}")
    X = sphere_rigid_set(n)
    P = polygon_model(n)
    expected = n * (n - 1) // 2 - n
    if P.n_vertices != expected or X.n_vertices != expected:
        raise TheoremViolation(f"vertex counts {X.n_vertices}, {P.n_vertices}; expected {expected}")
    mapping = {J: candidate_chord(J, n) for J in intervals(n - 2)}
    convention = "sides {j-1, m+1}; arcs on sides 1..n-2"
    iso = None
    if len(set(mapping.values())) == len(mapping) and set(mapping.values()) <= set(P.vertices):
        f = VertexMap(X, P, mapping)
        if is_isomorphism(f):
            iso = f
    if iso is None:
        iso = find_isomorphism(X, P)
        convention = "isomorphism search"
    if iso is None:
        raise TheoremViolation(f"no isomorphism between X(S_0^{n}) and the polygon model")
    return Theorem1Result(n, iso, convention, X.n_vertices, expected)
