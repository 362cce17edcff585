"""Closed-form representation-theoretic invariants of a Brauer configuration algebra.

Everything here is computed from the configuration alone; the orientation
never enters.  Identity checks evaluate both sides through separate code.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Iterable

from .config import Configuration, checked
from .errors import InconsistencyError, PreconditionError
from .quiver import SpecialCycle


def dim_hom(cfg: Configuration, v: int, w: int) -> int:
    """dim_K vΛw for polygons ``v`` and ``w``."""
    V, W = cfg.polygon(v), cfg.polygon(w)
    if v == w:
        total = 2
        for a, c in V.members:
            total += c * (c * cfg.mu[a] - 1)
        return checked(total)
    total = 0
    for a in V.support & W.support:
        total += cfg.mu[a] * V.count(a) * W.count(a)
    return checked(total)


@dataclass(frozen=True)
class CartanMatrix:
    ids: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, key):
        v, w = key
        return self.entries[self.ids.index(v)][self.ids.index(w)]

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def is_symmetric(self) -> bool:
        n = len(self.ids)
        return all(self.entries[i][j] == self.entries[j][i] for i in range(n) for j in range(i))

    def row_sum(self, v: int) -> int:
        return sum(self.entries[self.ids.index(v)])

    def total(self) -> int:
        return checked(sum(map(sum, self.entries)))

    def to_grid(self) -> str:
        names = [f"v{p}" for p in self.ids]
        cells = [[""] + names] + [[names[i]] + [str(x) for x in row] for i, row in enumerate(self.entries)]
        width = max(len(c) for row in cells for c in row)
        return "".join(" ".join(c.rjust(width) for c in row) + "\n" for row in cells)

    def to_csv(self) -> str:
        buf = io.StringIO()
        out = csv.writer(buf, lineterminator="\r\n")
        out.writerow(["polygon"] + [f"v{p}" for p in self.ids])
        for p, row in zip(self.ids, self.entries):
            out.writerow([f"v{p}"] + list(row))
        return buf.getvalue()


def cartan_matrix(cfg: Configuration) -> CartanMatrix:
    cfg.require_valid()
    ids = cfg.polygon_ids
    return CartanMatrix(ids, tuple(tuple(dim_hom(cfg, v, w) for w in ids) for v in ids))


def uniserial_dim(cycle: SpecialCycle, j: int) -> int:
    top = cycle.mu * cycle.val
    if not 1 <= j <= top:
        raise PreconditionError(f"j={j} outside 1..{top}")
    return top - j + 1


def length_of_sum(cycles: Iterable[SpecialCycle]) -> int:
    """Length of the sum of the modules U_1(C) over a set of cycles at one vertex."""
    cycles = list(cycles)
    if not cycles:
        raise PreconditionError("the collection of special cycles is empty")
    if len({c.anchor for c in cycles}) > 1:
        raise PreconditionError("special cycles are anchored at different vertices")
    if len({c.key for c in cycles}) != len(cycles):
        raise PreconditionError("the collection of special cycles has duplicates")
    return checked(sum(c.mu * c.val for c in cycles) - len(cycles) + 1)


def projective_length(cfg: Configuration, pid: int) -> int:
    """Length (equivalently K-dimension) of the indecomposable projective at ``pid``."""
    total = 2
    for a, c in cfg.polygon(pid).members:
        total += c * (cfg.val(a) * cfg.mu[a] - 1)
    return checked(total)


def algebra_dim_valency_sum(cfg: Configuration) -> int:
    total = 2 * len(cfg.polygons)
    for a in range(cfg.n_vertices):
        t = cfg.val(a)
        total += t * (cfg.mu[a] * t - 1)
    return checked(total)


def algebra_dim_projective_sum(cfg: Configuration) -> int:
    total = 2 * len(cfg.polygons)
    for p in cfg.polygons:
        for a, c in p.members:
            total += c * (cfg.mu[a] * cfg.val(a) - 1)
    return checked(total)


def algebra_dim(cfg: Configuration) -> int:
    cfg.require_valid()
    a = algebra_dim_valency_sum(cfg)
    b = algebra_dim_projective_sum(cfg)
    if a != b:
        raise InconsistencyError(f"algebra dimension formulas disagree: {a} != {b}")
    return a


def center_dim(cfg: Configuration) -> int:
    """dim_K Z(Λ) for a connected configuration whose polygons are all sets."""
    cfg.require_valid()
    if not cfg.is_connected():
        raise PreconditionError("disconnected configuration")
    bad = [p.id for p in cfg.polygons if not p.is_set]
    if bad:
        raise PreconditionError("non-set polygon: " + ", ".join(f"v{p}" for p in bad))
    return checked(1 + sum(cfg.mu) + len(cfg.polygons) - cfg.n_vertices)


def row_identity_sides(cfg: Configuration, pid: int) -> tuple[int, int]:
    V = cfg.polygon(pid)
    lhs = sum(V.count(a) * cfg.val(a) * cfg.mu[a] for a in V.support)
    rhs = 0
    for W in cfg.polygons:
        for a in V.support:
            k = W.count(a)
            if k:
                rhs += cfg.mu[a] * V.count(a) * k
    return lhs, rhs


def verify_row_identity(cfg: Configuration, pid: int) -> bool:
    lhs, rhs = row_identity_sides(cfg, pid)
    return lhs == rhs


@dataclass
class DimensionReport:
    projective_lengths: dict[int, int]
    algebra_dim: int
    formulas: dict[str, int]
    center_dim: int | None
    center_dim_reason: str | None
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {
            "projective_lengths": {f"v{p}": n for p, n in self.projective_lengths.items()},
            "algebra_dim": self.algebra_dim,
            "algebra_dim_formulas": self.formulas,
            "center_dim": self.center_dim,
            "center_dim_reason": self.center_dim_reason,
            "checks": self.checks,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def dimension_report(cfg: Configuration) -> DimensionReport:
    cfg.require_valid()
    cm = cartan_matrix(cfg)
    lengths = {p: projective_length(cfg, p) for p in cfg.polygon_ids}
    formulas = {
        "valency_sum": algebra_dim_valency_sum(cfg),
        "projective_sum": algebra_dim_projective_sum(cfg),
    }
    try:
        center, reason = center_dim(cfg), None
    except PreconditionError as exc:
        center, reason = None, str(exc)
    checks = {
        "formulas_agree": formulas["valency_sum"] == formulas["projective_sum"],
        "cartan_total": cm.total() == formulas["projective_sum"],
        "cartan_symmetric": cm.is_symmetric(),
        "row_sums": all(cm.row_sum(p) == n for p, n in lengths.items()),
        "row_identity": all(verify_row_identity(cfg, p) for p in cfg.polygon_ids),
    }
    return DimensionReport(lengths, algebra_dim(cfg), formulas, center, reason, checks)
