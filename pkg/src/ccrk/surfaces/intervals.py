"""Interval-curve spheres, the subset sphere, and the left-most-component map.

The chain of arcs (genus 0) or chain curves (genus g) is indexed ``1..N``
with ``N = n - 2`` or ``N = 2g``.  Each proper sub-interval ``J`` names the
curve ``I[j..m]``; two such curves are disjoint exactly when ``J`` and
``J'`` are compatible tubes of the path on ``N`` vertices.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from ccrk.complex import SimplicialComplex, VertexMap, flag_complex, is_simplicial
from ccrk.errors import LabelError
from ccrk.homology import degree_report
from ccrk.labels import Interval, Subset
from ccrk.tubings import path_graph, tube_relation


def tau(g: int, n: int) -> int:
    """Dimension of the spheres in the curve complex of the genus-g surface with n points."""
    if g == 0:
        if n < 4:
            raise ValueError(f"tau(0, n) needs n >= 4, got n={n}")
        return n - 4
    if g < 0 or n < 0:
        raise ValueError(f"bad surface parameters g={g}, n={n}")
    return 2 * g - 2 if n == 0 else 2 * g + n - 3


def interval_curve(j: int, m: int, N: int, side: str = "canonical") -> Interval:
    """Validated interval curve over the chain ``1..N``."""
    if not (1 <= j <= m <= N) or (j, m) == (1, N):
        raise LabelError(f"[{j}..{m}] is not a proper sub-interval of 1..{N}")
    if side == "opposite" and (m - j + 1) % 2 == 0:
        raise LabelError("only odd intervals have an opposite boundary curve")
    return Interval(j, m, side)


def intervals(N: int) -> list[Interval]:
    return [Interval(j, m) for j in range(1, N + 1) for m in range(j, N + 1) if (j, m) != (1, N)]


def as_tube(J: Interval) -> Subset:
    return Subset(tuple(J.indices))


def intervals_compatible(a: Interval, b: Interval, N: int) -> bool:
    return tube_relation(as_tube(a), as_tube(b), path_graph(N)).compatible


@lru_cache(maxsize=None)
def interval_complex(N: int) -> SimplicialComplex:
    """Flag complex of compatible proper sub-intervals of ``1..N``."""
    if N < 2:
        raise ValueError(f"interval complex needs N >= 2, got {N}")
    return flag_complex(intervals(N), lambda a, b: intervals_compatible(a, b, N))


def sphere_rigid_set(n: int) -> SimplicialComplex:
    """The (n-4)-sphere of interval curves on the sphere with ``n`` marked points."""
    if n < 4:
        raise ValueError(f"sphere_rigid_set needs n >= 4, got {n}")
    return interval_complex(n - 2)


def genus_rigid_set(g: int) -> SimplicialComplex:
    """The (2g-2)-sphere of interval curves over the chain of ``2g`` curves.

    The abstract complex is the same with zero or one marked point.
    """
    if g < 1:
        raise ValueError(f"genus_rigid_set needs g >= 1, got {g}")
    return interval_complex(2 * g)


@lru_cache(maxsize=None)
def subset_sphere(N: int) -> SimplicialComplex:
    """Order complex of the proper non-empty subsets of ``1..N`` (bs of ∂Δ^{N-1})."""
    if N < 2:
        raise ValueError(f"subset_sphere needs N >= 2, got {N}")
    subsets = [Subset(c) for r in range(1, N) for c in itertools.combinations(range(1, N + 1), r)]
    vertices = sorted(subsets, key=str)
    index = {s.elems: i for i, s in enumerate(vertices)}
    facets = []
    for perm in itertools.permutations(range(1, N + 1)):
        facets.append([index[tuple(sorted(perm[: i + 1]))] for i in range(N - 1)])
    return SimplicialComplex(vertices, facets)


@dataclass(frozen=True)
class Component:
    j: int
    m: int

    @property
    def parity(self) -> str:
        return "odd" if (self.m - self.j + 1) % 2 else "even"

    def __str__(self) -> str:
        return f"{{{self.j}..{self.m}}}:{self.parity}"


def sequential_components(alpha: Subset | tuple | set) -> list[Component]:
    """Maximal runs of consecutive indices, in increasing order."""
    elems = sorted(alpha.elems if isinstance(alpha, Subset) else alpha)
    out = []
    for e in elems:
        if out and out[-1].m == e - 1:
            out[-1] = Component(out[-1].j, e)
        else:
            out.append(Component(e, e))
    return out


def leftmost_component(alpha: Subset | tuple | set) -> Interval:
    first = sequential_components(alpha)[0]
    return Interval(first.j, first.m)


def rho_map(N: int) -> VertexMap:
    """``α ↦ leftmost_component(α)`` from the subset sphere to the interval sphere."""
    Y = subset_sphere(N)
    X = interval_complex(N)
    return VertexMap(Y, X, {a: leftmost_component(a) for a in Y.vertices})


@dataclass(frozen=True)
class RhoReport:
    N: int
    simplicial: bool
    surjective: bool
    abs_degree: int
    degree: int
    top_preimage: tuple

    def ok(self) -> bool:
        return self.simplicial and self.surjective and self.abs_degree == 1 and len(self.top_preimage) == 1

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "simplicial": self.simplicial,
            "surjective": self.surjective,
            "abs_degree": self.abs_degree,
            "top_preimage": [str(a) for a in self.top_preimage],
        }


def verify_rho(N: int, check_spheres: bool = True) -> RhoReport:
    f = rho_map(N)
    simplicial = is_simplicial(f)
    image = set(f.mapping.values())
    surjective = image == set(f.target.vertices)
    top = Interval(1, N - 1)
    pre = tuple(sorted((a for a, b in f.mapping.items() if b == top), key=str))
    deg = degree_report(f, check_spheres=check_spheres).degree if simplicial else 0
    return RhoReport(N, simplicial, surjective, abs(deg), deg, pre)
