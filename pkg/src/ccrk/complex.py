"""Finite abstract simplicial complexes stored by their maximal facets."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Sequence

from ccrk.errors import MalformedFacetError, UnknownVertexError
from ccrk.labels import Flag

Simplex = tuple  # sorted tuple of vertex indices


class SimplicialComplex:
    """Immutable complex: canonical vertex order plus inclusion-maximal facets.

    Vertices are indexed by their position in the canonical order (sorted by
    rendered label); simplices are sorted tuples of those indices.
    """

    __slots__ = ("vertices", "index", "facets", "_cache")

    def __init__(self, vertices: Sequence[Hashable], facets: Iterable[Sequence[int]]):
        # trusted constructor: ``facets`` must already be maximal and index-valid
        self.vertices: tuple = tuple(vertices)
        self.index: dict = {v: i for i, v in enumerate(self.vertices)}
        self.facets: tuple[Simplex, ...] = tuple(sorted(tuple(sorted(f)) for f in facets))
        self._cache: dict = {}

    # -- basic shape -----------------------------------------------------

    @property
    def dim(self) -> int:
        if not self.facets:
            return -1
        return max(len(f) for f in self.facets) - 1

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return (f"SimplicialComplex(dim={self.dim}, vertices={len(self.vertices)}, "
                f"facets={len(self.facets)})")

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.vertices == other.vertices and self.facets == other.facets

    def __hash__(self) -> int:
        return hash((self.vertices, self.facets))

    def label_simplex(self, simplex: Iterable[int]) -> tuple:
        return tuple(self.vertices[i] for i in simplex)

    def indices_of(self, labels: Iterable[Hashable]) -> Simplex:
        try:
            return tuple(sorted(self.index[v] for v in labels))
        except KeyError as exc:
            raise UnknownVertexError(f"unknown vertex {exc.args[0]}") from None

    def labelled_facets(self) -> list[tuple]:
        return [self.label_simplex(f) for f in self.facets]

    # -- derived simplex sets (memoized) ---------------------------------

    def simplices(self, k: int) -> tuple[Simplex, ...]:
        """All k-simplices in canonical (lexicographic index) order."""
        key = ("simp", k)
        if key not in self._cache:
            if k < 0:
                out: tuple = ()
            elif k == 0:
                out = tuple((i,) for i in range(len(self.vertices)))
            else:
                acc = set()
                for f in self.facets:
                    if len(f) > k:
                        acc.update(itertools.combinations(f, k + 1))
                out = tuple(sorted(acc))
            self._cache[key] = out
        return self._cache[key]

    def simplex_set(self, k: int) -> frozenset:
        key = ("set", k)
        if key not in self._cache:
            self._cache[key] = frozenset(self.simplices(k))
        return self._cache[key]

    def all_simplices(self) -> Iterator[Simplex]:
        for k in range(self.dim + 1):
            yield from self.simplices(k)

    def has_simplex(self, simplex: Iterable[int]) -> bool:
        s = tuple(sorted(set(simplex)))
        if not s:
            return False
        return s in self.simplex_set(len(s) - 1)

    def has_labelled_simplex(self, labels: Iterable[Hashable]) -> bool:
        return self.has_simplex(self.indices_of(labels))

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self.simplices(k)) for k in range(self.dim + 1))

    def neighbors(self, i: int) -> frozenset:
        key = ("nbrs",)
        if key not in self._cache:
            nb: list[set] = [set() for _ in self.vertices]
            for a, b in self.simplices(1):
                nb[a].add(b)
                nb[b].add(a)
            self._cache[key] = tuple(frozenset(s) for s in nb)
        return self._cache[key][i]

    def degree(self, i: int) -> int:
        return len(self.neighbors(i))


# -- construction --------------------------------------------------------


def _maximal(facets: list[frozenset]) -> list[frozenset]:
    """Drop duplicates and facets contained in a larger one."""
    uniq = sorted(set(facets), key=lambda f: (-len(f), sorted(f)))
    kept: list[frozenset] = []
    by_vertex: dict = {}
    top = len(uniq[0]) if uniq else 0
    for f in uniq:
        if len(f) < top:
            pools = [by_vertex.get(v, ()) for v in f]
            pool = min(pools, key=len)
            if any(f <= kept[j] for j in pool):
                continue
        idx = len(kept)
        kept.append(f)
        for v in f:
            by_vertex.setdefault(v, []).append(idx)
    return kept


def _check_distinct_renderings(labels: Iterable[Hashable]) -> None:
    seen: dict[str, Hashable] = {}
    for v in labels:
        s = str(v)
        if s in seen and seen[s] != v:
            raise MalformedFacetError(f"two distinct labels render as {s!r}")
        seen[s] = v


def make_complex(facets: Iterable[Iterable[Hashable]]) -> SimplicialComplex:
    """Build a complex from labelled facets; subsumed facets are absorbed."""
    sets = []
    for facet in facets:
        facet = list(facet)
        if not facet:
            raise MalformedFacetError("empty facet")
        fs = frozenset(facet)
        if len(fs) != len(facet):
            raise MalformedFacetError(f"duplicate vertex in facet {[str(v) for v in facet]}")
        sets.append(fs)
    labels = set().union(*sets) if sets else set()
    _check_distinct_renderings(labels)
    vertices = sorted(labels, key=str)
    index = {v: i for i, v in enumerate(vertices)}
    kept = _maximal([frozenset(index[v] for v in f) for f in sets])
    return SimplicialComplex(vertices, kept)


def flag_complex(vertices: Iterable[Hashable], adjacent: Callable[[Hashable, Hashable], bool]) -> SimplicialComplex:
    """Clique complex of the graph on ``vertices`` with edge predicate ``adjacent``."""
    vertices = sorted(set(vertices), key=str)
    _check_distinct_renderings(vertices)
    n = len(vertices)
    nbrs = [set() for _ in range(n)]
    for a, b in itertools.combinations(range(n), 2):
        if adjacent(vertices[a], vertices[b]):
            nbrs[a].add(b)
            nbrs[b].add(a)
    return SimplicialComplex(vertices, _max_cliques(nbrs))


def _max_cliques(nbrs: list[set]) -> list[tuple]:
    # Bron-Kerbosch with pivoting, iterative
    out = []
    stack = [(set(), set(range(len(nbrs))), set())]
    while stack:
        r, p, x = stack.pop()
        if not p and not x:
            if r:
                out.append(tuple(sorted(r)))
            continue
        pivot = max(p | x, key=lambda u: len(nbrs[u] & p))
        for v in sorted(p - nbrs[pivot]):
            stack.append((r | {v}, p & nbrs[v], x & nbrs[v]))
            p = p - {v}
            x = x | {v}
    return out


def relabel(K: SimplicialComplex, mapping: Mapping[Hashable, Hashable]) -> SimplicialComplex:
    return make_complex([[mapping[v] for v in f] for f in K.labelled_facets()])


def simplex(labels: Iterable[Hashable]) -> SimplicialComplex:
    """The full simplex on ``labels``."""
    return make_complex([list(labels)])


def boundary_of_simplex(labels: Iterable[Hashable]) -> SimplicialComplex:
    labels = list(labels)
    return make_complex(itertools.combinations(labels, len(labels) - 1))


# -- operations ------------------------------------------------------------


def span(K: SimplicialComplex, S: Iterable[Hashable]) -> SimplicialComplex:
    """Full subcomplex of ``K`` on the vertex set ``S``."""
    keep = set(K.indices_of(S))
    pieces = [frozenset(i for i in f if i in keep) for f in K.facets]
    kept = _maximal([p for p in pieces if p])
    return make_complex([K.label_simplex(sorted(f)) for f in kept]) if kept else make_complex([])


def skeleton(K: SimplicialComplex, k: int) -> SimplicialComplex:
    if k < 0:
        raise ValueError(f"skeleton dimension must be >= 0, got {k}")
    if k >= K.dim:
        return K
    facets = set()
    for f in K.facets:
        if len(f) <= k + 1:
            facets.add(f)
        else:
            facets.update(itertools.combinations(f, k + 1))
    return SimplicialComplex(K.vertices, facets)


def link(K: SimplicialComplex, v: Hashable) -> SimplicialComplex:
    if v not in K.index:
        raise UnknownVertexError(f"unknown vertex {v}")
    i = K.index[v]
    facets = [[K.vertices[j] for j in f if j != i] for f in K.facets if i in f and len(f) > 1]
    return make_complex(facets)


def star_count(K: SimplicialComplex, v: Hashable) -> int:
    """Number of simplices containing ``v``; independent of :func:`link`."""
    i = K.index[v]
    return sum(1 for s in K.all_simplices() if i in s)


def barycentric_subdivision(K: SimplicialComplex) -> tuple[SimplicialComplex, dict]:
    """Return ``(bs K, origin)`` where ``origin`` maps each new vertex to its simplex.

    New vertices are :class:`~ccrk.labels.Flag` labels listing the parent
    simplex's vertex labels.
    """
    origin = {}
    for s in K.all_simplices():
        labs = K.label_simplex(s)
        origin[Flag(labs)] = labs
    facets = []
    for f in K.facets:
        for perm in itertools.permutations(f):
            facets.append([Flag(K.label_simplex(perm[: i + 1])) for i in range(len(perm))])
    return make_complex(facets), origin


def euler_characteristic(K: SimplicialComplex) -> int:
    return sum((-1) ** k * n for k, n in enumerate(K.f_vector()))


# -- vertex maps -------------------------------------------------------------


@dataclass(frozen=True)
class VertexMap:
    """A total function from the vertices of ``source`` to those of ``target``."""

    source: SimplicialComplex
    target: SimplicialComplex
    mapping: Mapping = field(repr=False)

    def __post_init__(self):
        for v in self.source.vertices:
            if v not in self.mapping:
                raise UnknownVertexError(f"vertex {v} has no image")
            if self.mapping[v] not in self.target.index:
                raise UnknownVertexError(f"image {self.mapping[v]} of {v} is not a target vertex")

    def __call__(self, v):
        return self.mapping[v]

    def index_map(self) -> list[int]:
        """Image of each source vertex index as a target vertex index."""
        return [self.target.index[self.mapping[v]] for v in self.source.vertices]

    def image_of(self, simplex: Iterable[int]) -> tuple:
        im = self.index_map()
        return tuple(sorted({im[i] for i in simplex}))

    def compose(self, inner: "VertexMap") -> "VertexMap":
        """``self ∘ inner``."""
        return VertexMap(inner.source, self.target,
                         {v: self.mapping[inner.mapping[v]] for v in inner.source.vertices})

    def is_identity(self) -> bool:
        return all(self.mapping[v] == v for v in self.source.vertices)

    def as_labels(self) -> dict[str, str]:
        return {str(k): str(self.mapping[k]) for k in self.source.vertices}


def identity_map(K: SimplicialComplex) -> VertexMap:
    return VertexMap(K, K, {v: v for v in K.vertices})


def is_simplicial(f: VertexMap) -> bool:
    im = f.index_map()
    tgt = f.target
    return all(tgt.has_simplex({im[i] for i in facet}) for facet in f.source.facets)


def is_injective_simplicial(f: VertexMap) -> bool:
    return len(set(f.index_map())) == f.source.n_vertices and is_simplicial(f)


def _link_signature(K: SimplicialComplex, i: int) -> tuple:
    return (K.degree(i), link(K, K.vertices[i]).f_vector())


def find_isomorphism(K1: SimplicialComplex, K2: SimplicialComplex) -> VertexMap | None:
    """Backtracking search for a simplicial isomorphism ``K1 -> K2``.

    Candidates are pruned by vertex degree and the f-vector of the vertex
    link; partial maps must preserve adjacency and non-adjacency in the
    1-skeleton.  Full facet agreement is verified on complete maps.
    """
    if K1.n_vertices != K2.n_vertices or K1.f_vector() != K2.f_vector():
        return None
    n = K1.n_vertices
    if n == 0:
        return VertexMap(K1, K2, {})
    sig1 = [_link_signature(K1, i) for i in range(n)]
    sig2 = [_link_signature(K2, i) for i in range(n)]
    if sorted(sig1) != sorted(sig2):
        return None
    by_sig: dict = {}
    for j, s in enumerate(sig2):
        by_sig.setdefault(s, []).append(j)

    # order: rarest signature first, then grow along edges
    order: list[int] = []
    placed = set()
    rarity = sorted(range(n), key=lambda i: (len(by_sig[sig1[i]]), i))
    for start in rarity:
        if start in placed:
            continue
        frontier = [start]
        while frontier:
            frontier.sort(key=lambda i: (-len(K1.neighbors(i) & placed), len(by_sig[sig1[i]]), i))
            v = frontier.pop(0)
            if v in placed:
                continue
            placed.add(v)
            order.append(v)
            frontier.extend(u for u in K1.neighbors(v) if u not in placed and u not in frontier)

    facets2 = set(K2.facets)
    assign = [-1] * n
    used = [False] * n

    def consistent(v: int, w: int) -> bool:
        nb1, nb2 = K1.neighbors(v), K2.neighbors(w)
        for u in order:
            a = assign[u]
            if a < 0:
                continue
            if (u in nb1) != (a in nb2):
                return False
        return True

    def search(pos: int) -> bool:
        if pos == n:
            return all(tuple(sorted(assign[i] for i in f)) in facets2 for f in K1.facets)
        v = order[pos]
        for w in by_sig[sig1[v]]:
            if used[w] or not consistent(v, w):
                continue
            assign[v], used[w] = w, True
            if search(pos + 1):
                return True
            assign[v], used[w] = -1, False
        return False

    if not search(0):
        return None
    return VertexMap(K1, K2, {K1.vertices[i]: K2.vertices[assign[i]] for i in range(n)})


def is_isomorphism(f: VertexMap) -> bool:
    """Bijective on vertices with simplicial inverse."""
    im = f.index_map()
    if len(set(im)) != f.source.n_vertices or f.source.n_vertices != f.target.n_vertices:
        return False
    inverse = VertexMap(f.target, f.source, {w: v for v, w in f.mapping.items() if v in f.source.index})
    return is_simplicial(f) and is_simplicial(inverse)
