"""Plain-text facet and vertex-map files; ``#`` starts a comment line."""
from __future__ import annotations

from pathlib import Path

from ccrk.complex import SimplicialComplex, VertexMap, make_complex
from ccrk.errors import FacetFileError, LabelError, MalformedFacetError
from ccrk.labels import parse_label


def format_facets(K: SimplicialComplex, header: str | None = None) -> str:
    lines = []
    if header:
        lines.extend(f"# {h}" for h in header.splitlines())
    for f in K.labelled_facets():
        lines.append(" ".join(str(v) for v in f))
    return "\n".join(lines) + "\n"


def parse_facets(text: str) -> SimplicialComplex:
    facets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            labels = [parse_label(tok) for tok in line.split()]
            if len(set(labels)) != len(labels):
                raise MalformedFacetError("duplicate vertex in facet")
        except (LabelError, MalformedFacetError) as exc:
            raise FacetFileError(str(exc), lineno) from None
        facets.append(labels)
    try:
        return make_complex(facets)
    except MalformedFacetError as exc:
        raise FacetFileError(str(exc)) from None


def read_facets(path: str | Path) -> SimplicialComplex:
    return parse_facets(Path(path).read_text(encoding="utf-8"))


def write_facets(K: SimplicialComplex, path: str | Path, header: str | None = None) -> None:
    Path(path).write_text(format_facets(K, header), encoding="utf-8")


# -- vertex map files: one ``source target`` pair per line --------------------


def format_map(f: VertexMap, header: str | None = None) -> str:
    lines = []
    if header:
        lines.extend(f"# {h}" for h in header.splitlines())
    for v in f.source.vertices:
        lines.append(f"{v} {f(v)}")
    return "\n".join(lines) + "\n"


def parse_map(text: str, source: SimplicialComplex, target: SimplicialComplex) -> VertexMap:
    mapping = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if len(toks) != 2:
            raise FacetFileError(f"expected 'source target', got {len(toks)} tokens", lineno)
        try:
            a, b = parse_label(toks[0]), parse_label(toks[1])
        except LabelError as exc:
            raise FacetFileError(str(exc), lineno) from None
        if a not in source.index:
            raise FacetFileError(f"{a} is not a source vertex", lineno)
        if b not in target.index:
            raise FacetFileError(f"{b} is not a target vertex", lineno)
        if a in mapping and mapping[a] != b:
            raise FacetFileError(f"{a} is mapped twice", lineno)
        mapping[a] = b
    missing = [str(v) for v in source.vertices if v not in mapping]
    if missing:
        raise FacetFileError(f"map is not total; missing {', '.join(missing[:5])}")
    return VertexMap(source, target, mapping)


def read_map(path: str | Path, source: SimplicialComplex, target: SimplicialComplex) -> VertexMap:
    return parse_map(Path(path).read_text(encoding="utf-8"), source, target)


def write_map(f: VertexMap, path: str | Path, header: str | None = None) -> None:
    Path(path).write_text(format_map(f, header), encoding="utf-8")
