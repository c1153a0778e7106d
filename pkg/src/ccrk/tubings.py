"""Tubes of finite graphs and the dual associahedron complex.

A tube is a connected, proper, non-empty vertex subset.  Two tubes are
compatible when they are nested, or disjoint with a disconnected union.
The complex of pairwise-compatible tube sets of the path on ``m - 1``
vertices is ``D_m``, a combinatorial ``(m - 3)``-sphere.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable

from ccrk.complex import SimplicialComplex, flag_complex
from ccrk.labels import Subset

Tube = Subset


class Relation(str, enum.Enum):
    EQUAL = "equal"
    NESTED = "nested"
    OVERLAPPING = "overlapping"
    ADJACENT = "adjacent"
    DISJOINT = "compatible-disjoint"

    @property
    def compatible(self) -> bool:
        return self in (Relation.NESTED, Relation.DISJOINT)


@dataclass(frozen=True)
class TubeGraph:
    """Simple graph on vertices ``1..n``."""

    n: int
    edges: frozenset

    def __post_init__(self):
        norm = set()
        for e in self.edges:
            a, b = e
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise ValueError(f"edge {e} out of range 1..{self.n}")
            norm.add((min(a, b), max(a, b)))
        object.__setattr__(self, "edges", frozenset(norm))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def adjacency(self) -> dict[int, set[int]]:
        adj = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def is_connected_subset(self, verts: Iterable[int]) -> bool:
        verts = set(verts)
        if not verts:
            return False
        adj = self.adjacency()
        start = min(verts)
        seen, stack = {start}, [start]
        while stack:
            v = stack.pop()
            for u in adj[v] & verts:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return seen == verts

    def is_connected(self) -> bool:
        return self.is_connected_subset(self.vertices)


def path_graph(q: int) -> TubeGraph:
    if q < 1:
        raise ValueError(f"path graph needs q >= 1, got {q}")
    return TubeGraph(q, frozenset((i, i + 1) for i in range(1, q)))


def is_tube(G: TubeGraph, t: Tube) -> bool:
    s = set(t.elems)
    return bool(s) and s < set(G.vertices) and G.is_connected_subset(s)


def enumerate_tubes(G: TubeGraph) -> list[Tube]:
    if G.n < 2:
        raise ValueError("tubes need a graph with at least 2 vertices")
    out = []
    verts = list(G.vertices)
    for r in range(1, G.n):
        for combo in itertools.combinations(verts, r):
            if G.is_connected_subset(combo):
                out.append(Subset(combo))
    return sorted(out, key=str)


def tube_relation(t1: Tube, t2: Tube, G: TubeGraph) -> Relation:
    for t in (t1, t2):
        if not is_tube(G, t):
            raise ValueError(f"{t} is not a tube of the graph")
    a, b = set(t1.elems), set(t2.elems)
    if a == b:
        return Relation.EQUAL
    if a < b or b < a:
        return Relation.NESTED
    if a & b:
        return Relation.OVERLAPPING
    # the union may be the whole vertex set: {1} and {2,3} are adjacent in the 3-path
    if G.is_connected_subset(a | b):
        return Relation.ADJACENT
    return Relation.DISJOINT


def compatible(t1: Tube, t2: Tube, G: TubeGraph) -> bool:
    return tube_relation(t1, t2, G).compatible


def tube_complex(G: TubeGraph) -> SimplicialComplex:
    if G.n < 2:
        raise ValueError("tube complex needs at least 2 vertices")
    if not G.is_connected():
        raise ValueError("tube complex is only built for connected graphs")
    return flag_complex(enumerate_tubes(G), lambda s, t: compatible(s, t, G))


def associahedron_dual(m: int) -> SimplicialComplex:
    """``D_m``: tube complex of the path on ``m - 1`` vertices."""
    if m < 3:
        raise ValueError(f"D_m needs m >= 3, got {m}")
    return tube_complex(path_graph(m - 1))
