"""Brauer configurations: data model, axioms and the occ/val primitives.

A configuration is stored with dense integer vertex ids ``0..n-1`` (each with
a unique display label) and polygons identified by an explicit integer id,
so two polygons with equal content stay distinct.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence, Union

from .errors import InvalidConfigurationError, UnknownIdError

Vertex = Union[int, str]

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def checked(value: int) -> int:
    """Return ``value`` unchanged, or raise if it leaves the signed 64-bit range."""
    if not INT64_MIN <= value <= INT64_MAX:
        raise OverflowError(f"integer {value} does not fit in 64 bits")
    return value


@dataclass(frozen=True)
class Polygon:
    """A labeled multiset of vertex ids, stored as sorted ``(vertex, count)`` pairs."""

    id: int
    members: tuple[tuple[int, int], ...]

    @classmethod
    def from_vertices(cls, pid: int, vertices: Iterable[int]) -> "Polygon":
        counts = Counter(vertices)
        return cls(pid, tuple(sorted(counts.items())))

    def count(self, vertex: int) -> int:
        for v, c in self.members:
            if v == vertex:
                return c
        return 0

    @property
    def size(self) -> int:
        return sum(c for _, c in self.members)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(v for v, _ in self.members)

    @property
    def is_set(self) -> bool:
        return all(c == 1 for _, c in self.members)


@dataclass(frozen=True)
class Violation:
    condition: str  # "C1", "C2", "C3" or "ORIENT"
    ids: tuple
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def conditions(self) -> set[str]:
        return {v.condition for v in self.violations}

    def summary(self) -> str:
        if self.is_valid:
            return "valid Brauer configuration"
        return "; ".join(f"{v.condition} violated: {v.message}" for v in self.violations)


@dataclass(frozen=True)
class Configuration:
    """The quadruple (vertices, polygons, multiplicity, orientation).

    ``orientation`` maps a vertex id to its successor sequence, a tuple of
    polygon ids.  Nontruncated vertices missing from the mapping get the
    canonical default: polygons in ascending id order, each repeated
    ``occ(vertex, polygon)`` times.
    """

    labels: tuple[str, ...]
    polygons: tuple[Polygon, ...]
    mu: tuple[int, ...]
    orientation: tuple[tuple[int, tuple[int, ...]], ...] = ()
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise ValueError("vertex labels must be unique")
        if len(self.mu) != n:
            raise ValueError("multiplicity must be given for every vertex")
        if any(not isinstance(m, int) or m < 1 for m in self.mu):
            raise ValueError("multiplicities must be positive integers")
        polygons = tuple(sorted(self.polygons, key=lambda p: p.id))
        index = {}
        for pos, p in enumerate(polygons):
            if p.id in index:
                raise ValueError(f"duplicate polygon id {p.id}")
            if p.id < 0:
                raise ValueError("polygon ids must be nonnegative")
            for v, c in p.members:
                if not 0 <= v < n:
                    raise UnknownIdError(f"polygon {p.id} references unknown vertex id {v}")
                if c < 1:
                    raise ValueError(f"polygon {p.id} has nonpositive count for vertex {v}")
            index[p.id] = pos
        object.__setattr__(self, "polygons", polygons)
        object.__setattr__(self, "_index", index)

        given = {}
        for v, seq in self.orientation:
            if not 0 <= v < n:
                raise UnknownIdError(f"orientation references unknown vertex id {v}")
            for pid in seq:
                if pid not in index:
                    raise UnknownIdError(f"orientation of vertex {self.labels[v]!r} references unknown polygon {pid}")
            given[v] = tuple(seq)
        for v in range(n):
            if v not in given and self._val[v] >= 1 and not self._truncated(v):
                given[v] = tuple(
                    p.id for p in polygons for _ in range(p.count(v))
                )
        object.__setattr__(self, "orientation", tuple(sorted(given.items())))

    @classmethod
    def from_data(
        cls,
        vertices: Sequence[str],
        polygons: Iterable[tuple[int, Sequence[str]]] | Mapping[int, Sequence[str]],
        mu: Mapping[str, int] | None = None,
        orientation: Mapping[str, Sequence[int]] | None = None,
    ) -> "Configuration":
        """Build from labels; omitted multiplicities default to 1."""
        labels = tuple(str(v) for v in vertices)
        lookup = {lab: i for i, lab in enumerate(labels)}

        def vid(label):
            try:
                return lookup[str(label)]
            except KeyError:
                raise UnknownIdError(f"unknown vertex label {label!r}") from None

        items = polygons.items() if isinstance(polygons, Mapping) else polygons
        polys = tuple(Polygon.from_vertices(int(pid), (vid(x) for x in members)) for pid, members in items)
        mu = dict(mu or {})
        for lab in mu:
            vid(lab)
        mults = tuple(int(mu.get(lab, 1)) for lab in labels)
        orient = tuple((vid(lab), tuple(int(p) for p in seq)) for lab, seq in (orientation or {}).items())
        return cls(labels, polys, mults, orient)

    # -- lookups ---------------------------------------------------------

    @cached_property
    def _val(self) -> tuple[int, ...]:
        totals = [0] * len(self.labels)
        for p in self.polygons:
            for v, c in p.members:
                totals[v] += c
        return tuple(totals)

    def _truncated(self, v: int) -> bool:
        return self._val[v] == 1 and self.mu[v] == 1

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    @property
    def polygon_ids(self) -> tuple[int, ...]:
        return tuple(p.id for p in self.polygons)

    def vid(self, vertex: Vertex) -> int:
        """Resolve a vertex given by dense id (int) or label (str)."""
        if isinstance(vertex, str):
            try:
                return self.labels.index(vertex)
            except ValueError:
                raise UnknownIdError(f"unknown vertex label {vertex!r}") from None
        if isinstance(vertex, int) and 0 <= vertex < len(self.labels):
            return vertex
        raise UnknownIdError(f"unknown vertex id {vertex!r}")

    def label(self, vertex: Vertex) -> str:
        return self.labels[self.vid(vertex)]

    def polygon(self, pid: int) -> Polygon:
        try:
            return self.polygons[self._index[pid]]
        except (KeyError, TypeError):
            raise UnknownIdError(f"unknown polygon id {pid!r}") from None

    def position(self, pid: int) -> int:
        """Row/column index of polygon ``pid`` in matrices ordered by id."""
        self.polygon(pid)
        return self._index[pid]

    # -- primitives ------------------------------------------------------

    def occ(self, vertex: Vertex, pid: int) -> int:
        return self.polygon(pid).count(self.vid(vertex))

    def val(self, vertex: Vertex) -> int:
        return self._val[self.vid(vertex)]

    def multiplicity(self, vertex: Vertex) -> int:
        return self.mu[self.vid(vertex)]

    def is_truncated(self, vertex: Vertex) -> bool:
        return self._truncated(self.vid(vertex))

    @cached_property
    def truncated(self) -> frozenset[int]:
        return frozenset(v for v in range(self.n_vertices) if self._truncated(v))

    def support(self, pid: int) -> frozenset[int]:
        return self.polygon(pid).support

    def successor_sequence(self, vertex: Vertex) -> tuple[int, ...]:
        """Polygon ids in the cyclic order chosen at a nontruncated vertex."""
        v = self.vid(vertex)
        return dict(self.orientation).get(v, ())

    def polygons_containing(self, vertex: Vertex) -> tuple[int, ...]:
        v = self.vid(vertex)
        return tuple(p.id for p in self.polygons if p.count(v))

    # -- axioms ----------------------------------------------------------

    def validate(self) -> ValidationReport:
        return self._report

    @cached_property
    def _report(self) -> ValidationReport:
        out = []
        for v, lab in enumerate(self.labels):
            if self._val[v] == 0:
                out.append(Violation("C1", (v,), f"vertex {lab!r} occurs in no polygon"))
        for p in self.polygons:
            if p.size < 2:
                out.append(Violation("C2", (p.id,), f"polygon {p.id} has fewer than two vertices"))
        for p in self.polygons:
            if not any(self._val[v] * self.mu[v] > 1 for v, _ in p.members):
                out.append(Violation("C3", (p.id,), f"polygon {p.id} has no vertex with val*mu > 1"))
        for v, seq in self.orientation:
            lab = self.labels[v]
            if self._truncated(v):
                out.append(Violation("ORIENT", (v,), f"truncated vertex {lab!r} carries a successor sequence"))
                continue
            expected = {p.id: p.count(v) for p in self.polygons if p.count(v)}
            if dict(Counter(seq)) != expected:
                out.append(Violation(
                    "ORIENT", (v,),
                    f"successor sequence at {lab!r} does not list each polygon occ({lab}, P) times",
                ))
        return ValidationReport(tuple(out))

    def require_valid(self) -> "Configuration":
        report = self.validate()
        if not report.is_valid:
            raise InvalidConfigurationError(report)
        return self

    def is_connected(self) -> bool:
        """Connectivity of the bipartite vertex/polygon incidence graph."""
        if not self.polygons:
            return self.n_vertices <= 1
        seen_p = {self.polygons[0].id}
        seen_v: set[int] = set()
        stack = [self.polygons[0].id]
        while stack:
            pid = stack.pop()
            for v in self.polygon(pid).support:
                if v in seen_v:
                    continue
                seen_v.add(v)
                for q in self.polygons:
                    if q.id not in seen_p and q.count(v):
                        seen_p.add(q.id)
                        stack.append(q.id)
        return len(seen_p) == len(self.polygons) and len(seen_v) == self.n_vertices

    @property
    def all_polygons_sets(self) -> bool:
        return all(p.is_set for p in self.polygons)
