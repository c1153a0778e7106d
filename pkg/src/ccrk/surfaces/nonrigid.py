"""Non-rigidity witnesses for the genus-g interval spheres.

Disjointness between the extra curves used here (the opposite boundary
``I'[1..3]`` and the marked-point variant ``I''[1..2]``) and the curves of the
sphere is only partly known.  The oracle stores exactly the known facts and
reports everything else as unknown; verifications only ever consult known
statuses.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Hashable, Iterable

from ccrk.complex import (
    SimplicialComplex,
    VertexMap,
    flag_complex,
    is_injective_simplicial,
)
from ccrk.errors import TheoremViolation
from ccrk.homology import reduced_homology
from ccrk.labels import Interval
from ccrk.surfaces.intervals import (
    genus_rigid_set,
    interval_curve,
    intervals,
    intervals_compatible,
    sphere_rigid_set,
    tau,
)


class Status(str, enum.Enum):
    DISJOINT = "disjoint"
    INTERSECTING = "intersecting"
    UNKNOWN = "unknown"


class IntersectionOracle:
    """Symmetric, partial disjointness relation with a provenance per pair."""

    def __init__(self, universe: Iterable[Hashable]):
        self.universe = tuple(sorted(set(universe), key=str))
        self._known: dict[frozenset, tuple[Status, str]] = {}

    def assert_pair(self, a, b, status: Status, provenance: str) -> None:
        if a == b:
            raise ValueError("a curve is not compared with itself")
        for v in (a, b):
            if v not in self.universe:
                raise KeyError(f"{v} is not in the oracle universe")
        key = frozenset((a, b))
        prev = self._known.get(key)
        if prev is not None and prev[0] != status:
            raise TheoremViolation(f"conflicting statuses for {a}, {b}: {prev[0].value} vs {status.value}")
        self._known[key] = (status, provenance)

    def status(self, a, b) -> Status:
        return self._known.get(frozenset((a, b)), (Status.UNKNOWN, ""))[0]

    def provenance(self, a, b) -> str:
        return self._known.get(frozenset((a, b)), (Status.UNKNOWN, ""))[1]

    def disjoint(self, a, b) -> bool:
        return self.status(a, b) is Status.DISJOINT

    def known_pairs(self) -> list[tuple]:
        out = []
        for key, (st, prov) in self._known.items():
            a, b = sorted(key, key=str)
            out.append((a, b, st, prov))
        return sorted(out, key=lambda t: (str(t[0]), str(t[1])))

    def complex(self) -> SimplicialComplex:
        """Flag complex on the universe whose edges are the known-disjoint pairs."""
        return flag_complex(self.universe, self.disjoint)


def _add_rule_pairs(oracle: IntersectionOracle, N: int) -> list[Interval]:
    X0 = intervals(N)
    for a, b in itertools.combinations(X0, 2):
        st = Status.DISJOINT if intervals_compatible(a, b, N) else Status.INTERSECTING
        oracle.assert_pair(a, b, st, "rule")
    return X0


def build_oracle_g(g: int) -> IntersectionOracle:
    """Known disjointness facts around the opposite boundary curve ``I'[1..3]``."""
    if g < 3:
        raise ValueError(f"the opposite-side counterexample needs g >= 3, got {g}")
    N = 2 * g
    x123 = Interval(1, 3)
    x123p = interval_curve(1, 3, N, "opposite")
    oracle = IntersectionOracle(intervals(N) + [x123p])
    X0 = _add_rule_pairs(oracle, N)
    for y in X0:
        if y != x123 and oracle.disjoint(x123, y):
            oracle.assert_pair(x123p, y, Status.DISJOINT, "paper-fact")
    oracle.assert_pair(x123p, Interval(3, 5), Status.DISJOINT, "paper-fact")
    return oracle


@dataclass
class NonRigidityWitness:
    ambient: SimplicialComplex
    f: VertexMap
    pair: tuple | None = None
    source_status: Status | None = None
    image_status: Status | None = None
    eliminations: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        moved = {str(k): str(v) for k, v in self.f.mapping.items() if k != v}
        out: dict = {"moved": moved, "ambient_vertices": self.ambient.n_vertices}
        if self.pair is not None:
            a, b = self.pair
            out["pair"] = [str(a), str(b)]
            out["image_pair"] = [str(self.f(a)), str(self.f(b))]
            out["source_status"] = self.source_status.value
            out["image_status"] = self.image_status.value
        if self.eliminations:
            out["eliminations"] = self.eliminations
        return out


def _substitution_map(X: SimplicialComplex, ambient: SimplicialComplex, old, new) -> VertexMap:
    return VertexMap(X, ambient, {v: (new if v == old else v) for v in X.vertices})


def counterexample_g(g: int) -> NonRigidityWitness:
    """Swap ``I[1..3]`` for its opposite boundary; disjointness is kept, intersection is not."""
    oracle = build_oracle_g(g)
    X = genus_rigid_set(g)
    ambient = oracle.complex()
    x123, x123p, x345 = Interval(1, 3), Interval(1, 3, "opposite"), Interval(3, 5)
    if x123p in X.index:
        raise TheoremViolation("opposite curve already lies in the sphere")
    f = _substitution_map(X, ambient, x123, x123p)
    if not is_injective_simplicial(f):
        raise TheoremViolation(f"substitution map is not an injective simplicial map (g={g})")
    if f.is_identity():
        raise TheoremViolation("substitution map is the identity")
    src, img = oracle.status(x123, x345), oracle.status(f(x123), f(x345))
    if src is not Status.INTERSECTING or img is not Status.DISJOINT:
        raise TheoremViolation(f"witness pair statuses {src.value} -> {img.value}")
    return NonRigidityWitness(ambient, f, (x123, x345), src, img)


# -- genus 2, one marked point -------------------------------------------------


@dataclass(frozen=True)
class Symmetry:
    """Combinatorial model of the reflections: index reversal and/or side flip."""

    reverse: bool = False
    flip: bool = False

    def compose(self, other: "Symmetry") -> "Symmetry":
        return Symmetry(self.reverse != other.reverse, self.flip != other.flip)

    def __str__(self) -> str:
        parts = [p for p, on in (("reverse", self.reverse), ("flip", self.flip)) if on]
        return "+".join(parts) or "identity"


SYMMETRIES = tuple(Symmetry(r, f) for r in (False, True) for f in (False, True))

_FLIP = {"canonical": "opposite", "opposite": "canonical"}


def symmetry_action(s: Symmetry, g: int, v: Interval) -> Interval:
    j, m, side = v.j, v.m, v.side
    if s.reverse:
        j, m = 2 * g + 1 - m, 2 * g + 1 - j
    if s.flip and (m - j + 1) % 2 and side in _FLIP:
        side = _FLIP[side]
    return Interval(j, m, side)


def build_oracle_g2n1() -> IntersectionOracle:
    N = 4
    x12, x12m = Interval(1, 2), Interval(1, 2, "marked")
    oracle = IntersectionOracle(intervals(N) + [x12m])
    for y in _add_rule_pairs(oracle, N):
        if y != x12 and oracle.disjoint(x12, y):
            oracle.assert_pair(x12m, y, Status.DISJOINT, "paper-fact")
    return oracle


def counterexample_g2n1() -> NonRigidityWitness:
    """Swap ``I[1..2]`` for its marked-point variant; only the identity symmetry survives."""
    oracle = build_oracle_g2n1()
    X = genus_rigid_set(2)
    ambient = oracle.complex()
    x12, x12m = Interval(1, 2), Interval(1, 2, "marked")
    f = _substitution_map(X, ambient, x12, x12m)
    if not is_injective_simplicial(f):
        raise TheoremViolation("marked-point substitution is not an injective simplicial map")
    if f.is_identity():
        raise TheoremViolation("marked-point substitution is the identity")
    probes = (Interval(1, 3), Interval(2, 4))
    if any(f(p) != p for p in probes):
        raise TheoremViolation("substitution must fix I[1..3] and I[2..4]")
    table = []
    for s in SYMMETRIES:
        images = [symmetry_action(s, 2, p) for p in probes]
        fixes = all(i == p for i, p in zip(images, probes))
        table.append({
            "symmetry": str(s),
            "images": [str(i) for i in images],
            "fixes_both": fixes,
        })
    survivors = [row["symmetry"] for row in table if row["fixes_both"]]
    if survivors != ["identity"]:
        raise TheoremViolation(f"symmetries fixing both probes: {survivors}")
    return NonRigidityWitness(ambient, f, eliminations=table)


# -- sporadic 0-spheres -------------------------------------------------------------


def sporadic_check() -> dict:
    cases = {"X(S_0^4)": ((0, 4), sphere_rigid_set(4)), "X(S_1^0)": ((1, 0), genus_rigid_set(1)),
             "X(S_1^1)": ((1, 1), genus_rigid_set(1))}
    out = {}
    for name, ((g, n), K) in cases.items():
        h = reduced_homology(K)
        out[name] = {
            "vertices": [str(v) for v in K.vertices],
            "edges": len(K.simplices(1)),
            "reduced_betti0": h[0].betti,
            "tau": tau(g, n),
            "zero_sphere": K.n_vertices == 2 and K.dim == 0 and h.is_sphere(0) and tau(g, n) == 0,
        }
    out["note"] = "a discrete infinite complex has no finite rigid subsets (stated, not computed)"
    return out
