"""Vertex labels and the facet-file label grammar.

Every vertex of every complex carries a label with a canonical string
rendering.  Vertices are ordered by that rendering (plain lexicographic
string order), which fixes all orientation signs downstream.

Grammar::

    S{a,b,...}      subset / tube
    I[j..m]         interval curve, canonical side
    I'[j..m]        interval curve, opposite side
    I''[j..m]       interval curve, marked-point variant
    P(a,b)          polygon chord between sides a and b
    F(l1|l2|...)    subdivision vertex (a simplex of the parent complex)

Bare tokens (``a``, ``v7``) are accepted as plain name labels and are kept
as ``str``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Hashable, Iterable

from ccrk.errors import LabelError

SIDES = ("canonical", "opposite", "marked")
_SIDE_MARK = {"canonical": "", "opposite": "'", "marked": "''"}

_NAME_RE = re.compile(r"^[A-Za-z0-9_.\-]+$")
_SUBSET_RE = re.compile(r"^S\{(-?\d+(?:,-?\d+)*)?\}$")
_INTERVAL_RE = re.compile(r"^I('{0,2})\[(\d+)\.\.(\d+)\]$")
_CHORD_RE = re.compile(r"^P\((\d+),(\d+)\)$")


@dataclass(frozen=True)
class Subset:
    elems: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elems", tuple(sorted(set(self.elems))))

    def __str__(self) -> str:
        return "S{" + ",".join(map(str, self.elems)) + "}"


@dataclass(frozen=True)
class Interval:
    """The curve bounding the sub-chain ``j..m``; ``side`` tags which boundary."""

    j: int
    m: int
    side: str = "canonical"

    def __post_init__(self):
        if self.side not in SIDES:
            raise LabelError(f"unknown side marker {self.side!r}")
        if not 1 <= self.j <= self.m:
            raise LabelError(f"bad interval [{self.j}..{self.m}]")

    @property
    def indices(self) -> range:
        return range(self.j, self.m + 1)

    def __len__(self) -> int:
        return self.m - self.j + 1

    def __str__(self) -> str:
        return f"I{_SIDE_MARK[self.side]}[{self.j}..{self.m}]"


@dataclass(frozen=True)
class Chord:
    a: int
    b: int

    def __post_init__(self):
        if self.a == self.b:
            raise LabelError("chord endpoints must differ")
        if self.a > self.b:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)

    def __str__(self) -> str:
        return f"P({self.a},{self.b})"


@dataclass(frozen=True)
class Flag:
    parts: tuple[Any, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(sorted(self.parts, key=str)))

    def __str__(self) -> str:
        return "F(" + "|".join(str(p) for p in self.parts) + ")"


def render(label: Hashable) -> str:
    return str(label)


def sort_labels(labels: Iterable[Hashable]) -> list:
    return sorted(labels, key=str)


def _split_flag(body: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch in "({[":
            depth += 1
        elif ch in ")}]":
            depth -= 1
        elif ch == "|" and depth == 0:
            parts.append(body[start:i])
            start = i + 1
    parts.append(body[start:])
    return parts


def parse_label(token: str):
    """Parse one label token; raises :class:`LabelError` on malformed input."""
    if token.startswith("F(") and token.endswith(")"):
        body = token[2:-1]
        if not body:
            raise LabelError(f"empty flag label {token!r}")
        return Flag(tuple(parse_label(p) for p in _split_flag(body)))
    m = _SUBSET_RE.match(token)
    if m:
        if m.group(1) is None:
            raise LabelError("empty subset label")
        return Subset(tuple(int(x) for x in m.group(1).split(",")))
    m = _INTERVAL_RE.match(token)
    if m:
        side = {"": "canonical", "'": "opposite", "''": "marked"}[m.group(1)]
        return Interval(int(m.group(2)), int(m.group(3)), side)
    m = _CHORD_RE.match(token)
    if m:
        return Chord(int(m.group(1)), int(m.group(2)))
    if token[:1] in "SIPF" and any(c in token for c in "{[(|"):
        raise LabelError(f"malformed label {token!r}")
    if _NAME_RE.match(token):
        return token
    raise LabelError(f"malformed label {token!r}")
