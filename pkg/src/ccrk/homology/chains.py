"""Simplicial chain complexes over the integers and reduced homology."""
from __future__ import annotations

from dataclasses import dataclass, field

from ccrk.complex import SimplicialComplex
from ccrk.homology.snf import IntegerMatrix, rank_mod_p, rational_rank, smith_normal_form


@dataclass(frozen=True)
class ChainComplexZ:
    """Canonical bases of k-simplices and boundary matrices ``d[k]: C_k -> C_{k-1}``.

    ``d[0]`` is the augmentation ``C_0 -> Z`` (a row of ones), so homology
    read off this complex is reduced homology.
    """

    bases: tuple[tuple[tuple[int, ...], ...], ...]
    d: tuple[IntegerMatrix, ...]

    @property
    def top(self) -> int:
        return len(self.bases) - 1

    def rank(self, k: int) -> int:
        return len(self.bases[k]) if 0 <= k < len(self.bases) else 0


def boundary_matrix(K: SimplicialComplex, k: int) -> IntegerMatrix:
    """``∂_k``; the entry at (σ minus its i-th vertex, σ) is ``(-1)**i``."""
    cols = K.simplices(k)
    if k == 0:
        return IntegerMatrix(1, len(cols), {(0, j): 1 for j in range(len(cols))})
    rows = K.simplices(k - 1)
    ridx = {s: i for i, s in enumerate(rows)}
    entries = {}
    for j, s in enumerate(cols):
        for i in range(len(s)):
            entries[(ridx[s[:i] + s[i + 1:]], j)] = -1 if i % 2 else 1
    return IntegerMatrix(len(rows), len(cols), entries)


def boundary_matrices(K: SimplicialComplex) -> ChainComplexZ:
    bases = tuple(K.simplices(k) for k in range(K.dim + 1))
    return ChainComplexZ(bases, tuple(boundary_matrix(K, k) for k in range(K.dim + 1)))


@dataclass(frozen=True)
class HomologyGroup:
    dim: int
    betti: int
    torsion: tuple[int, ...] = ()

    def is_zero(self) -> bool:
        return self.betti == 0 and not self.torsion

    def to_json(self) -> dict:
        return {"dim": self.dim, "betti": self.betti, "torsion": list(self.torsion)}


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced integral homology, one group per dimension ``0..dim K``.

    The empty complex carries a single entry in dimension -1.
    """

    groups: tuple[HomologyGroup, ...] = field(default_factory=tuple)

    def __getitem__(self, k: int) -> HomologyGroup:
        for g in self.groups:
            if g.dim == k:
                return g
        return HomologyGroup(k, 0)

    def betti(self) -> dict[int, int]:
        return {g.dim: g.betti for g in self.groups}

    def nonzero(self) -> list[HomologyGroup]:
        return [g for g in self.groups if not g.is_zero()]

    def is_sphere(self, d: int) -> bool:
        """Reduced homology is ``Z`` in dimension ``d`` and zero elsewhere."""
        nz = self.nonzero()
        return len(nz) == 1 and nz[0].dim == d and nz[0].betti == 1 and not nz[0].torsion

    def euler_poincare(self) -> int:
        return sum((-1) ** g.dim * g.betti for g in self.groups)

    def to_json(self) -> list[dict]:
        return [g.to_json() for g in self.groups]


def reduced_homology(K: SimplicialComplex) -> HomologyProfile:
    if K.dim < 0:
        return HomologyProfile((HomologyGroup(-1, 1),))
    forms = [smith_normal_form(boundary_matrix(K, k)) for k in range(K.dim + 1)]
    groups = []
    for k in range(K.dim + 1):
        n_k = len(K.simplices(k))
        rank_out = forms[k].rank
        into = forms[k + 1] if k + 1 <= K.dim else None
        rank_in = into.rank if into else 0
        groups.append(HomologyGroup(k, n_k - rank_out - rank_in, into.torsion if into else ()))
    return HomologyProfile(tuple(groups))


def reduced_betti_rational(K: SimplicialComplex) -> dict[int, int]:
    """Reduced Betti numbers over Q by rank-nullity, bypassing Smith normal form."""
    return _betti_by_rank(K, rational_rank)


def reduced_betti_mod2(K: SimplicialComplex) -> dict[int, int]:
    return _betti_by_rank(K, lambda A: rank_mod_p(A, 2))


def _betti_by_rank(K: SimplicialComplex, rank) -> dict[int, int]:
    if K.dim < 0:
        return {-1: 1}
    ranks = [rank(boundary_matrix(K, k)) for k in range(K.dim + 1)] + [0]
    return {k: len(K.simplices(k)) - ranks[k] - ranks[k + 1] for k in range(K.dim + 1)}
