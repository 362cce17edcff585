"""The quiver induced by a Brauer configuration.

Each nontruncated vertex ``alpha`` with successor sequence
``V_1 < ... < V_t`` contributes ``t`` arrows; the arrow at position ``i``
runs from ``V_i`` to ``V_{i+1}`` (cyclically).  Arrows are identified by
``(owner, position)`` and printed as ``a{label}_{position}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .config import Configuration, Vertex
from .errors import PreconditionError


@dataclass(frozen=True)
class Arrow:
    owner: int
    position: int  # 1-based index in the owner's successor sequence
    source: int  # polygon id
    target: int  # polygon id
    label: str

    @property
    def key(self) -> tuple[int, int]:
        return (self.owner, self.position)

    def __repr__(self):
        return self.label


@dataclass(frozen=True)
class SpecialCycle:
    """A rotation of the full arrow cycle of ``owner``, starting at ``start``."""

    owner: int
    start: int
    arrows: tuple[Arrow, ...]
    mu: int
    val: int

    @property
    def anchor(self) -> int:
        return self.arrows[0].source

    @property
    def key(self) -> tuple[int, int]:
        return (self.owner, self.start)

    @property
    def first_arrow(self) -> Arrow:
        return self.arrows[0]

    def word(self) -> str:
        return " ".join(a.label for a in self.arrows)

    def __repr__(self):
        return f"C[{self.word()}]"


@dataclass(frozen=True)
class IntervalTable:
    """The (alpha, v)-intervals of a successor sequence.

    ``runs[i]`` lists the polygon ids met strictly between the ``i+1``-th
    and the next occurrence of ``anchor`` while walking the cyclic sequence
    once, starting from the first stored occurrence of ``anchor``.
    """

    owner: int
    anchor: int
    runs: tuple[tuple[int, ...], ...]

    def count(self, i: int, pid: int) -> int:
        """occ_i(w): occurrences of polygon ``pid`` in the ``i``-th interval (1-based)."""
        return self.runs[i - 1].count(pid)

    def total(self, pid: int) -> int:
        return sum(run.count(pid) for run in self.runs)

    def __len__(self):
        return len(self.runs)


class Quiver:
    def __init__(self, cfg: Configuration):
        cfg.require_valid()
        self.cfg = cfg
        self.vertices = cfg.polygon_ids
        by_owner = {}
        for v, seq in cfg.orientation:
            t = len(seq)
            lab = cfg.labels[v]
            by_owner[v] = tuple(
                Arrow(v, i + 1, seq[i], seq[(i + 1) % t], f"a{lab}_{i + 1}") for i in range(t)
            )
        self.arrows_by_owner: dict[int, tuple[Arrow, ...]] = by_owner
        self.arrows: tuple[Arrow, ...] = tuple(a for v in sorted(by_owner) for a in by_owner[v])

    @property
    def owners(self) -> tuple[int, ...]:
        return tuple(sorted(self.arrows_by_owner))

    def arrow(self, owner: Vertex, position: int) -> Arrow:
        return self.arrows_by_owner[self.cfg.vid(owner)][position - 1]

    def cycle(self, owner: int, start: int) -> SpecialCycle:
        arrows = self.arrows_by_owner[owner]
        k = start - 1
        return SpecialCycle(
            owner, start, arrows[k:] + arrows[:k], self.cfg.mu[owner], len(arrows)
        )

    @cached_property
    def special_cycles(self) -> tuple[SpecialCycle, ...]:
        """Every special cycle, ordered by owner then start position."""
        return tuple(
            self.cycle(v, l + 1) for v in self.owners for l in range(len(self.arrows_by_owner[v]))
        )

    def _check_owner_at(self, alpha: Vertex, pid: int) -> int:
        v = self.cfg.vid(alpha)
        if self.cfg.is_truncated(v):
            raise PreconditionError(f"vertex {self.cfg.labels[v]!r} is truncated")
        if v not in self.cfg.support(pid):
            raise PreconditionError(f"vertex {self.cfg.labels[v]!r} does not occur in polygon {pid}")
        return v

    def special_cycles_at(self, alpha: Vertex, pid: int) -> list[SpecialCycle]:
        v = self._check_owner_at(alpha, pid)
        seq = self.cfg.successor_sequence(v)
        return [self.cycle(v, i + 1) for i, p in enumerate(seq) if p == pid]

    def cycles_at(self, pid: int) -> list[SpecialCycle]:
        """All special cycles anchored at polygon ``pid``, over every owner."""
        self.cfg.polygon(pid)
        return [c for c in self.special_cycles if c.anchor == pid]

    def interval_table(self, alpha: Vertex, pid: int) -> IntervalTable:
        v = self._check_owner_at(alpha, pid)
        seq = self.cfg.successor_sequence(v)
        first = seq.index(pid)
        walk = seq[first:] + seq[:first]
        cuts = [i for i, p in enumerate(walk) if p == pid] + [len(walk)]
        runs = tuple(walk[cuts[i] + 1 : cuts[i + 1]] for i in range(len(cuts) - 1))
        return IntervalTable(v, pid, runs)

    def enumerate_basis_paths(self, alpha: Vertex, v: int, w: int) -> list[tuple[Arrow, ...]]:
        """The explicit path family spanning the alpha-part of ``v Lambda w``.

        For every occurrence of ``v`` and every occurrence of ``w`` in the
        successor sequence of ``alpha`` this yields ``C^k q`` for
        ``0 <= k < mu(alpha)``, where ``C`` is the special cycle starting at
        that occurrence of ``v`` and ``q`` walks forward to the occurrence of
        ``w``.
        """
        if v == w:
            raise PreconditionError("basis paths are enumerated for distinct polygons only")
        a = self.cfg.vid(alpha)
        if a not in self.cfg.support(v) or a not in self.cfg.support(w):
            return []
        arrows = self.arrows_by_owner[a]
        t = len(arrows)
        seq = self.cfg.successor_sequence(a)
        paths = []
        for i, p in enumerate(seq):
            if p != v:
                continue
            cyc = arrows[i:] + arrows[:i]
            for j, q in enumerate(seq):
                if q != w:
                    continue
                prefix = cyc[: (j - i) % t]
                for k in range(self.cfg.mu[a]):
                    paths.append(cyc * k + prefix)
        return paths

    def to_dot(self) -> str:
        lines = ["digraph Q {", f"  // arrows: {len(self.arrows)}"]
        for pid in self.vertices:
            lines.append(f'  v{pid} [label="v{pid}"];')
        for a in self.arrows:
            lines.append(f'  v{a.source} -> v{a.target} [label="{a.label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_quiver(cfg: Configuration) -> Quiver:
    return Quiver(cfg)
