"""The defining relations of a Brauer configuration algebra, as formal data.

Text format, one relation per line::

    T1: (<cycle arrows>)^<m> - (<cycle arrows>)^<n>
    T2: (<cycle arrows>)^<m> <first arrow>
    T3: <arrow> <arrow>
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .quiver import Arrow, Quiver, SpecialCycle


class RelationKind(enum.Enum):
    ONE = "T1"
    TWO = "T2"
    THREE = "T3"


@dataclass(frozen=True)
class Relation:
    kind: RelationKind
    cycles: tuple[tuple[SpecialCycle, int], ...] = ()
    arrows: tuple[Arrow, ...] = ()

    def words(self) -> tuple[tuple[str, ...], ...]:
        """Each monomial as a tuple of arrow labels (powers expanded)."""
        if self.kind is RelationKind.ONE:
            return tuple(tuple(a.label for a in c.arrows) * m for c, m in self.cycles)
        if self.kind is RelationKind.TWO:
            (c, m), = self.cycles
            return (tuple(a.label for a in c.arrows) * m + (self.arrows[0].label,),)
        return (tuple(a.label for a in self.arrows),)

    def __str__(self):
        tag = self.kind.value
        if self.kind is RelationKind.ONE:
            (c, m), (d, n) = self.cycles
            return f"{tag}: ({c.word()})^{m} - ({d.word()})^{n}"
        if self.kind is RelationKind.TWO:
            (c, m), = self.cycles
            return f"{tag}: ({c.word()})^{m} {self.arrows[0].label}"
        a, b = self.arrows
        return f"{tag}: {a.label} {b.label}"


def relations_type_one(q: Quiver) -> list[Relation]:
    seen = set()
    out = []
    for pid in q.vertices:
        for c, d in combinations(q.cycles_at(pid), 2):
            key = frozenset((c.key, d.key))
            if key in seen:
                continue
            seen.add(key)
            out.append(Relation(RelationKind.ONE, ((c, c.mu), (d, d.mu))))
    return out


def relations_type_two(q: Quiver) -> list[Relation]:
    return [Relation(RelationKind.TWO, ((c, c.mu),), (c.first_arrow,)) for c in q.special_cycles]


def _follows(a: Arrow, b: Arrow, q: Quiver) -> bool:
    if a.owner != b.owner:
        return False
    t = len(q.arrows_by_owner[a.owner])
    return b.position == a.position % t + 1


def relations_type_three(q: Quiver) -> list[Relation]:
    return [
        Relation(RelationKind.THREE, arrows=(a, b))
        for a in q.arrows
        for b in q.arrows
        if a.target == b.source and not _follows(a, b, q)
    ]


def all_relations(q: Quiver) -> list[Relation]:
    return relations_type_one(q) + relations_type_two(q) + relations_type_three(q)


def relations_text(q: Quiver) -> str:
    return "".join(f"{r}\n" for r in all_relations(q))
