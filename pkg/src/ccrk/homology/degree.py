"""Fundamental cycles, induced chain maps and degrees of simplicial maps."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from ccrk.complex import SimplicialComplex, VertexMap, is_simplicial
from ccrk.errors import NotASphereError, NotSimplicialError
from ccrk.homology.chains import boundary_matrix, reduced_homology
from ccrk.homology.snf import IntegerMatrix


@dataclass(frozen=True)
class FundamentalCycle:
    """Integer top-dimensional cycle generating ``H_d``.

    ``anchor`` is the simplex whose coefficient was normalized to +1 (the
    canonically smallest simplex of the support).
    """

    dim: int
    coefficients: dict
    anchor: tuple

    def vector(self, K: SimplicialComplex) -> list[int]:
        return [self.coefficients.get(s, 0) for s in K.simplices(self.dim)]


def _sort_sign(seq) -> int:
    """Sign of the permutation that sorts ``seq`` (entries distinct)."""
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv % 2 else 1


def _ridge_cofaces(K: SimplicialComplex, d: int) -> dict:
    cof: dict = {}
    for s in K.simplices(d):
        for i in range(len(s)):
            cof.setdefault(s[:i] + s[i + 1:], []).append((s, -1 if i % 2 else 1))
    return cof


def _pseudomanifold_kernel(K: SimplicialComplex, d: int, cof: dict) -> list[dict]:
    """Top-dimensional cycles, one per closed orientable strongly connected piece."""
    seen: set = set()
    gens = []
    for start in K.simplices(d):
        if start in seen:
            continue
        coeff = {start: 1}
        queue = deque([start])
        seen.add(start)
        ok = True
        while queue:
            s = queue.popleft()
            c = coeff[s]
            for i in range(len(s)):
                ridge = s[:i] + s[i + 1:]
                sign = -1 if i % 2 else 1
                others = [(t, sg) for t, sg in cof[ridge] if t != s]
                if not others:
                    ok = False
                    continue
                (t, sg), = others
                want = -sign * sg * c
                if t in coeff:
                    if coeff[t] != want:
                        ok = False
                else:
                    coeff[t] = want
                    seen.add(t)
                    queue.append(t)
        if ok:
            gens.append(coeff)
    return gens


def _rational_kernel(A: IntegerMatrix) -> list[list[Fraction]]:
    """Nullspace basis of ``A`` over Q via reduced row echelon form."""
    rows = [[Fraction(v) for v in r] for r in A.to_dense()]
    n = A.ncols
    pivots: list[int] = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                q = rows[i][c]
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][f]
        basis.append(v)
    return basis


def fundamental_cycle(K: SimplicialComplex) -> FundamentalCycle:
    """Generator of the top homology of ``K``; raises unless it is ``Z``."""
    d = K.dim
    if d < 0:
        raise NotASphereError("empty complex has no fundamental cycle")
    top = K.simplices(d)
    if d == 0:
        if len(top) != 2:
            raise NotASphereError(f"reduced H_0 has rank {len(top) - 1}, expected 1")
        coeffs = {top[0]: 1, top[1]: -1}
        return FundamentalCycle(0, coeffs, top[0])

    cof = _ridge_cofaces(K, d)
    if all(len(v) <= 2 for v in cof.values()):
        gens = _pseudomanifold_kernel(K, d, cof)
        if len(gens) != 1:
            raise NotASphereError(f"top homology H_{d} has rank {len(gens)}, expected 1")
        coeffs = gens[0]
    else:
        basis = _rational_kernel(boundary_matrix(K, d))
        if len(basis) != 1:
            raise NotASphereError(f"top homology H_{d} has rank {len(basis)}, expected 1")
        vec = basis[0]
        den = 1
        for x in vec:
            den = den * x.denominator // gcd(den, x.denominator)
        ints = [int(x * den) for x in vec]
        coeffs = {s: v for s, v in zip(top, ints) if v}

    g = 0
    for v in coeffs.values():
        g = gcd(g, v)
    anchor = min(coeffs)
    scale = g if coeffs[anchor] > 0 else -g
    coeffs = {s: v // scale for s, v in coeffs.items()}
    return FundamentalCycle(d, coeffs, anchor)


def induced_chain_map(f: VertexMap, k: int) -> IntegerMatrix:
    """Matrix of ``f_#: C_k(source) -> C_k(target)`` in canonical bases."""
    if not is_simplicial(f):
        raise NotSimplicialError("induced chain map needs a simplicial vertex map")
    src = f.source.simplices(k)
    tgt = f.target.simplices(k)
    tidx = {s: i for i, s in enumerate(tgt)}
    im = f.index_map()
    entries = {}
    for j, s in enumerate(src):
        image = [im[i] for i in s]
        if len(set(image)) < len(image):
            continue
        entries[(tidx[tuple(sorted(image))], j)] = _sort_sign(image)
    return IntegerMatrix(len(tgt), len(src), entries)


@dataclass(frozen=True)
class DegreeReport:
    degree: int
    dim: int
    source_anchor: tuple
    target_anchor: tuple

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "abs_degree": abs(self.degree),
            "dim": self.dim,
            "source_anchor": [str(v) for v in self.source_anchor],
            "target_anchor": [str(v) for v in self.target_anchor],
        }


def degree_report(f: VertexMap, check_spheres: bool = True) -> DegreeReport:
    """Degree of ``f`` with the anchors that fixed both cycle orientations."""
    if not is_simplicial(f):
        raise NotSimplicialError("degree needs a simplicial vertex map")
    d = f.source.dim
    if f.target.dim != d:
        raise NotASphereError(f"dimension mismatch: source {d}, target {f.target.dim}")
    if check_spheres:
        for name, K in (("source", f.source), ("target", f.target)):
            if not reduced_homology(K).is_sphere(d):
                raise NotASphereError(f"{name} is not a homology {d}-sphere")
    zs = fundamental_cycle(f.source)
    zt = fundamental_cycle(f.target)
    fmap = induced_chain_map(f, d)
    src = f.source.simplices(d)
    image = fmap.apply({j: zs.coefficients[s] for j, s in enumerate(src) if s in zs.coefficients})
    tgt = f.target.simplices(d)
    a = tgt.index(zt.anchor)
    deg = image.get(a, 0) // zt.coefficients[zt.anchor]
    expect = {i: deg * zt.coefficients[s] for i, s in enumerate(tgt) if s in zt.coefficients}
    if image != {i: v for i, v in expect.items() if v}:
        raise NotASphereError("image of the source cycle is not a multiple of the target cycle")
    return DegreeReport(deg, d, f.source.label_simplex(zs.anchor), f.target.label_simplex(zt.anchor))


def degree(f: VertexMap, check_spheres: bool = True) -> int:
    return degree_report(f, check_spheres).degree
