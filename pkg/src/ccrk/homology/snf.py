"""Exact integer matrices and Smith normal form.

Two code paths share one contract:

* ``_dense_snf`` tracks unimodular transforms and pivots deterministically on
  the nonzero entry of least absolute value (ties: lowest row, then column).
* ``_sparse_invariants`` is the fast path used for boundary matrices: it
  peels off unit pivots by sparse elimination and hands whatever is left to
  the dense routine.

Invariant factors are unique, so both paths return the same diagonal.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class IntegerMatrix:
    """Sparse matrix over arbitrary-precision integers; zeros are never stored."""

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows: int, ncols: int, entries: dict[tuple[int, int], int] | None = None):
        if nrows < 0 or ncols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        self.nrows = nrows
        self.ncols = ncols
        self.entries: dict[tuple[int, int], int] = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise IndexError(f"entry ({i}, {j}) outside {nrows}x{ncols}")
            if v:
                self.entries[(i, j)] = int(v)

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> "IntegerMatrix":
        nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(nrows, ncols, {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r) if v})

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries.get(ij, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __repr__(self) -> str:
        return f"IntegerMatrix({self.nrows}x{self.ncols}, nnz={len(self.entries)})"

    def is_zero(self) -> bool:
        return not self.entries

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(self.ncols, self.nrows, {(j, i): v for (i, j), v in self.entries.items()})

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        by_row: dict[int, list[tuple[int, int]]] = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        acc: dict[tuple[int, int], int] = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                acc[(i, j)] = acc.get((i, j), 0) + a * b
        return IntegerMatrix(self.nrows, other.ncols, acc)

    def apply(self, vec: dict[int, int]) -> dict[int, int]:
        """Multiply by a sparse column vector ``{col: value}``."""
        out: dict[int, int] = {}
        for (i, j), v in self.entries.items():
            x = vec.get(j)
            if x:
                out[i] = out.get(i, 0) + v * x
        return {i: v for i, v in out.items() if v}

    def rows(self) -> dict[int, dict[int, int]]:
        out: dict[int, dict[int, int]] = {}
        for (i, j), v in self.entries.items():
            out.setdefault(i, {})[j] = v
        return out


@dataclass(frozen=True)
class SmithForm:
    """Nonzero invariant factors ``d_1 | d_2 | ...`` and optional transforms.

    When present, ``U @ A @ V`` equals the diagonal matrix ``S`` with the
    invariant factors leading the diagonal.
    """

    diagonal: tuple[int, ...]
    shape: tuple[int, int]
    U: IntegerMatrix | None = None
    V: IntegerMatrix | None = None

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d > 1)

    def S(self) -> IntegerMatrix:
        return IntegerMatrix(*self.shape, {(i, i): d for i, d in enumerate(self.diagonal)})


def smith_normal_form(A: IntegerMatrix | Sequence[Sequence[int]], transforms: bool = False) -> SmithForm:
    if not isinstance(A, IntegerMatrix):
        A = IntegerMatrix.from_dense(A)
    if transforms:
        diag, U, V = _dense_snf(A.to_dense(), A.nrows, A.ncols, track=True)
        return SmithForm(tuple(diag), A.shape,
                         IntegerMatrix.from_dense(U, A.nrows), IntegerMatrix.from_dense(V, A.ncols))
    # invariant factors of A and A^T agree; eliminating along the rows of a
    # boundary matrix keeps fill-in far lower than along its columns
    return SmithForm(tuple(_sparse_invariants(A.transpose())), A.shape)


# -- dense, transform-tracking path -----------------------------------------


def _dense_snf(S: list[list[int]], m: int, n: int, track: bool = False):
    U = [[int(i == j) for j in range(m)] for i in range(m)] if track else None
    V = [[int(i == j) for j in range(n)] for i in range(n)] if track else None

    def swap_rows(a, b):
        S[a], S[b] = S[b], S[a]
        if track:
            U[a], U[b] = U[b], U[a]

    def swap_cols(a, b):
        for row in S:
            row[a], row[b] = row[b], row[a]
        if track:
            for row in V:
                row[a], row[b] = row[b], row[a]

    def add_row(dst, src, q):  # row[dst] += q * row[src]
        rs, rd = S[src], S[dst]
        for j in range(n):
            if rs[j]:
                rd[j] += q * rs[j]
        if track:
            us, ud = U[src], U[dst]
            for j in range(m):
                if us[j]:
                    ud[j] += q * us[j]

    def add_col(dst, src, q):  # col[dst] += q * col[src]
        for row in S:
            if row[src]:
                row[dst] += q * row[src]
        if track:
            for row in V:
                if row[src]:
                    row[dst] += q * row[src]

    def min_pivot(t):
        best = None
        for i in range(t, m):
            row = S[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        return best
        return best

    diag = []
    t = 0
    while t < min(m, n):
        piv = min_pivot(t)
        if piv is None:
            break
        while True:
            _, i, j = piv
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            p = S[t][t]
            for i in range(t + 1, m):
                if S[i][t]:
                    add_row(i, t, -(S[i][t] // p))
            for j in range(t + 1, n):
                if S[t][j]:
                    add_col(j, t, -(S[t][j] // p))
            dirty = any(S[i][t] for i in range(t + 1, m)) or any(S[t][j] for j in range(t + 1, n))
            if not dirty:
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if S[i][j] % p), None)
                if bad is None:
                    break
                add_row(t, bad[0], 1)
            piv = min_pivot(t)
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            if track:
                U[t] = [-x for x in U[t]]
        diag.append(S[t][t])
        t += 1
    return diag, U, V


# -- sparse path (no transforms) ---------------------------------------------


def _sparse_invariants(A: IntegerMatrix) -> list[int]:
    rows = A.rows()
    cols: dict[int, set[int]] = {}
    for (i, j) in A.entries:
        cols.setdefault(j, set()).add(i)

    units = 0
    progress = True
    while progress:
        progress = False
        for c in sorted(cols):
            rs = cols.get(c)
            if not rs:
                cols.pop(c, None)
                continue
            cands = [r for r in rs if rows[r][c] in (1, -1)]
            if not cands:
                continue
            r = min(cands, key=lambda x: (len(rows[x]), x))
            prow = rows[r]
            p = prow[c]
            for r2 in sorted(rs - {r}):
                row2 = rows[r2]
                q = row2[c] * p  # p is its own inverse
                for j, v in prow.items():
                    nv = row2.get(j, 0) - q * v
                    if nv:
                        if j not in row2:
                            cols.setdefault(j, set()).add(r2)
                        row2[j] = nv
                    elif j in row2:
                        del row2[j]
                        cols[j].discard(r2)
                if not row2:
                    del rows[r2]
            for j in prow:
                cols[j].discard(r)
            del rows[r]
            cols.pop(c, None)
            units += 1
            progress = True

    rest_rows = sorted(rows)
    rest_cols = sorted({j for r in rest_rows for j in rows[r]})
    diag = [1] * units
    if rest_rows and rest_cols:
        cidx = {j: k for k, j in enumerate(rest_cols)}
        dense = [[0] * len(rest_cols) for _ in rest_rows]
        for a, r in enumerate(rest_rows):
            for j, v in rows[r].items():
                dense[a][cidx[j]] = v
        tail, _, _ = _dense_snf(dense, len(rest_rows), len(rest_cols))
        diag.extend(tail)
    diag.sort()
    return diag


# -- independent rank computations (cross-check paths) -----------------------


def rational_rank(A: IntegerMatrix) -> int:
    """Rank over the rationals by fraction-exact sparse Gaussian elimination.

    The next pivot column is always one with the fewest live entries and the
    pivot is the shortest row in it, which keeps fill-in small.
    """
    rows = {i: {j: Fraction(v) for j, v in r.items()} for i, r in A.rows().items()}
    cols: dict[int, set[int]] = {}
    for (i, j) in A.entries:
        cols.setdefault(j, set()).add(i)
    heap = [(len(rs), j) for j, rs in cols.items()]
    heapq.heapify(heap)
    rank = 0
    while heap:
        n, c = heapq.heappop(heap)
        live = cols.get(c)
        if live is None:
            continue
        if len(live) != n:
            heapq.heappush(heap, (len(live), c))
            continue
        del cols[c]
        if not live:
            continue
        r = min(live, key=lambda x: (len(rows[x]), x))
        prow = rows.pop(r)
        touched = set()
        for j in prow:
            if j != c:
                cols[j].discard(r)
                touched.add(j)
        for r2 in live - {r}:
            row2 = rows[r2]
            q = row2.pop(c) / prow[c]
            for j, v in prow.items():
                if j == c:
                    continue
                nv = row2.get(j, 0) - q * v
                if nv:
                    if j not in row2:
                        cols[j].add(r2)
                    row2[j] = nv
                else:
                    row2.pop(j, None)
                    cols[j].discard(r2)
        for j in touched:
            heapq.heappush(heap, (len(cols[j]), j))
        rank += 1
    return rank


def rank_mod_p(A: IntegerMatrix, p: int = 2) -> int:
    """Rank over GF(p); GF(2) uses integer bitsets."""
    if p == 2:
        pivots: dict[int, int] = {}
        for _, r in sorted(A.rows().items()):
            bits = 0
            for j, v in r.items():
                if v % 2:
                    bits |= 1 << j
            while bits:
                top = bits.bit_length() - 1
                if top not in pivots:
                    pivots[top] = bits
                    break
                bits ^= pivots[top]
        return len(pivots)
    piv: dict[int, dict[int, int]] = {}
    for _, r in sorted(A.rows().items()):
        row = {j: v % p for j, v in r.items() if v % p}
        while row:
            j = min(row)
            if j not in piv:
                inv = pow(row[j], -1, p)
                piv[j] = {k: v * inv % p for k, v in row.items()}
                break
            q = row[j]
            for k, v in piv[j].items():
                nv = (row.get(k, 0) - q * v) % p
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return len(piv)


def determinant(A: IntegerMatrix) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    if A.nrows != A.ncols:
        raise ValueError("determinant of a non-square matrix")
    n = A.nrows
    M = A.to_dense()
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1] if n else 1


def gcd_all(values: Iterable[int]) -> int:
    from math import gcd

    g = 0
    for v in values:
        g = gcd(g, v)
    return g
