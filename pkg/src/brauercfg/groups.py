"""Finite groups as Cayley tables, their subgroup lattices, and subgroup occurrence.

Elements are indices ``0..n-1`` with the identity normalized to ``0``.  The
group identities checked here compare brute-force sums over the subgroup
lattice with their closed forms; each verifier evaluates the two sides
independently and returns a :class:`Verdict`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import permutations
from math import gcd
from typing import Mapping, Sequence, Union

from . import _kernels, arith
from .config import Configuration, Polygon
from .errors import BoundExceededError, GroupAxiomError, PreconditionError, UnknownIdError
from .representation import center_dim

DEFAULT_BOUND = 64


class FiniteGroup:
    """A group given by its Cayley table; validated on construction."""

    def __init__(self, table: Sequence[Sequence[int]], name: str = "G", labels: Sequence[str] | None = None):
        rows = [list(r) for r in table]
        n = len(rows)
        if n == 0:
            raise GroupAxiomError("empty table")
        for i, r in enumerate(rows):
            if len(r) != n:
                raise GroupAxiomError(f"row {i} has length {len(r)}, expected {n}")
            for x in r:
                if not isinstance(x, int) or not 0 <= x < n:
                    raise GroupAxiomError(f"row {i} contains {x!r}, not an element index")
        labels = [str(i) for i in range(n)] if labels is None else [str(s) for s in labels]
        if len(labels) != n or len(set(labels)) != n:
            raise GroupAxiomError("element labels must be unique, one per element")

        ident = [e for e in range(n) if rows[e] == list(range(n)) and all(rows[x][e] == x for x in range(n))]
        if not ident:
            raise GroupAxiomError("no identity element")
        e = ident[0]
        if e != 0:
            order = [e] + [x for x in range(n) if x != e]
            pos = {x: i for i, x in enumerate(order)}
            rows = [[pos[rows[a][b]] for b in order] for a in order]
            labels = [labels[x] for x in order]

        full = set(range(n))
        for i in range(n):
            if set(rows[i]) != full:
                raise GroupAxiomError(f"row of {labels[i]!r} is not a permutation (Latin square fails)")
            if {rows[j][i] for j in range(n)} != full:
                raise GroupAxiomError(f"column of {labels[i]!r} is not a permutation (Latin square fails)")

        self.name = name
        self.order = n
        self.table: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in rows)
        self.labels: tuple[str, ...] = tuple(labels)
        self._prepared = _kernels.prepare_table(self.table)

        bad = _kernels.associativity_violation(self._prepared)
        if bad is not None:
            a, b, c = (self.labels[x] for x in bad)
            raise GroupAxiomError(f"associativity fails for (a,b,c)=({a},{b},{c})")

        inv = [0] * n
        for a in range(n):
            inv[a] = rows[a].index(0)
            if rows[inv[a]][a] != 0:
                raise GroupAxiomError(f"{labels[a]!r} has no two-sided inverse")
        self.inverse: tuple[int, ...] = tuple(inv)

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order={self.order})"

    def __len__(self):
        return self.order

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def element(self, x: int | str) -> int:
        if isinstance(x, str):
            try:
                return self.labels.index(x)
            except ValueError:
                raise UnknownIdError(f"unknown element label {x!r} in {self.name}") from None
        if isinstance(x, int) and 0 <= x < self.order:
            return x
        raise UnknownIdError(f"unknown element {x!r} in {self.name}")

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        out = []
        for x in range(self.order):
            k, y = 1, x
            while y != 0:
                y = self.table[y][x]
                k += 1
            out.append(k)
        return tuple(out)

    @property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    @property
    def is_cyclic(self) -> bool:
        return self.order in self.element_orders

    def generated(self, gens: Sequence[int]) -> frozenset[int]:
        """The subgroup generated by ``gens``."""
        return _kernels.closure(self._prepared, (0,), gens)


# -- families ------------------------------------------------------------


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise PreconditionError("cyclic group order must be positive")
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)], f"Z{n}")


def dihedral(n: int) -> FiniteGroup:
    """The dihedral group of order 2n; element (k, f) is r^k s^f at index f*n + k."""
    if n < 1:
        raise PreconditionError("dihedral parameter must be positive")
    elems = [(k, f) for f in (0, 1) for k in range(n)]
    idx = {x: i for i, x in enumerate(elems)}

    def mul(x, y):
        (k1, f1), (k2, f2) = x, y
        return ((k1 + (-k2 if f1 else k2)) % n, f1 ^ f2)

    def name(k, f):
        r = "" if k == 0 else ("r" if k == 1 else f"r^{k}")
        s = "s" if f else ""
        return " ".join(p for p in (r, s) if p) or "e"

    table = [[idx[mul(x, y)] for y in elems] for x in elems]
    return FiniteGroup(table, f"D{n}", [name(*x) for x in elems])


def _cycle_notation(p: tuple[int, ...]) -> str:
    seen, out = set(), []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc, j = [i], p[i]
        while j != i:
            seen.add(j)
            cyc.append(j)
            j = p[j]
        out.append("(" + " ".join(str(c + 1) for c in cyc) + ")")
    return "".join(out) or "()"


def from_permutations(perms: Sequence[tuple[int, ...]], name: str) -> FiniteGroup:
    """Group of the given permutations (must be closed) under composition p*q = p after q."""
    perms = sorted(perms)
    idx = {p: i for i, p in enumerate(perms)}
    table = [[idx[tuple(p[i] for i in q)] for q in perms] for p in perms]
    return FiniteGroup(table, name, [_cycle_notation(p) for p in perms])


def _is_even(p) -> bool:
    inversions = sum(1 for i in range(len(p)) for j in range(i) if p[j] > p[i])
    return inversions % 2 == 0


def symmetric(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise PreconditionError("symmetric groups are supported for 1 <= n <= 5")
    return from_permutations(list(permutations(range(n))), f"S{n}")


def alternating(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise PreconditionError("alternating groups are supported for 1 <= n <= 5")
    return from_permutations([p for p in permutations(range(n)) if _is_even(p)], f"A{n}")


_UNIT = {  # (u, v) -> (sign, w) for the units 1, i, j, k
    (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def quaternion() -> FiniteGroup:
    def mul(x, y):
        (s1, u), (s2, v) = x, y
        if u == 0:
            s, w = 1, v
        elif v == 0:
            s, w = 1, u
        else:
            s, w = _UNIT[(u, v)]
        return (s * s1 * s2, w)

    elems = [(s, u) for s in (1, -1) for u in range(4)]
    idx = {x: i for i, x in enumerate(elems)}
    names = [("" if s > 0 else "-") + "1ijk"[u] for s, u in elems]
    return FiniteGroup([[idx[mul(x, y)] for y in elems] for x in elems], "Q8", names)


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    m = h.order
    n = g.order * m
    table = [
        [g.table[a // m][b // m] * m + h.table[a % m][b % m] for b in range(n)] for a in range(n)
    ]
    labels = [f"({x},{y})" for x in g.labels for y in h.labels]
    return FiniteGroup(table, f"{g.name}x{h.name}", labels)


FAMILIES = ("cyclic", "dihedral", "symmetric", "alternating", "quaternion", "product", "trivial")

GroupSpec = Union[str, Mapping]


def parse_compact(spec: str) -> dict:
    """``"cyclic:12"``, ``"quaternion"``, ``"cyclic:2*cyclic:4"`` -> family dict."""
    spec = spec.strip()
    if "*" in spec:
        return {"family": "product", "params": [parse_compact(p) for p in spec.split("*")]}
    family, _, params = spec.partition(":")
    return {"family": family.strip().lower(), "params": [int(p) for p in params.split(",") if p.strip()]}


def _build_family(family, params) -> FiniteGroup:
    if family == "product":
        if len(params) < 2:
            raise PreconditionError("a product needs at least two factors")
        out = build_group(params[0])
        for p in params[1:]:
            out = direct_product(out, build_group(p))
        return out
    if family in ("quaternion", "trivial"):
        if family == "quaternion" and params not in ([], [8]):
            raise PreconditionError("only the quaternion group of order 8 is supported")
        return quaternion() if family == "quaternion" else cyclic(1)
    makers = {"cyclic": cyclic, "dihedral": dihedral, "symmetric": symmetric, "alternating": alternating}
    if family not in makers:
        raise PreconditionError(f"unknown group family {family!r}; expected one of {', '.join(FAMILIES)}")
    if len(params) != 1:
        raise PreconditionError(f"family {family!r} takes exactly one integer parameter")
    return makers[family](int(params[0]))


def build_group(spec: GroupSpec) -> FiniteGroup:
    """Build a group from a family spec, a raw Cayley table spec, or a compact string."""
    if isinstance(spec, str):
        spec = parse_compact(spec)
    if "table" in spec:
        g = FiniteGroup(spec["table"], spec.get("name", "G"), spec.get("labels"))
        if "order" in spec and spec["order"] != g.order:
            raise GroupAxiomError(f"declared order {spec['order']} does not match table size {g.order}")
        return g
    g = _build_family(spec.get("family"), list(spec.get("params", [])))
    if "name" in spec:
        g.name = spec["name"]
    return g


CATALOG: tuple[str, ...] = (
    tuple(f"cyclic:{n}" for n in range(1, 25))
    + tuple(f"dihedral:{n}" for n in range(3, 7))
    + ("quaternion", "symmetric:3", "symmetric:4", "alternating:4", "cyclic:2*cyclic:2", "cyclic:2*cyclic:4")
)


# -- subgroup lattice ----------------------------------------------------


def _subgroup_key(h: frozenset[int]):
    return (len(h), tuple(sorted(h)))


@dataclass(frozen=True, eq=False)
class SubgroupLattice:
    """All subgroups of ``group``, sorted by (size, sorted elements)."""

    group: FiniteGroup
    subgroups: tuple[frozenset[int], ...]
    generators: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.subgroups)

    @cached_property
    def membership(self) -> tuple[tuple[int, ...], ...]:
        """For each element, the ids of the subgroups containing it."""
        out = [[] for _ in range(self.group.order)]
        for i, h in enumerate(self.subgroups):
            for x in h:
                out[x].append(i)
        return tuple(tuple(m) for m in out)

    def occurrence(self, x: int | str) -> int:
        return len(self.membership[self.group.element(x)])

    @cached_property
    def occurrences(self) -> tuple[int, ...]:
        return tuple(len(m) for m in self.membership)

    def index(self, h) -> int:
        try:
            return self.subgroups.index(frozenset(h))
        except ValueError:
            raise UnknownIdError("not a subgroup in this lattice") from None

    def cyclic_subgroup(self, x: int | str) -> int:
        """Id of the subgroup generated by ``x``."""
        return self.index(self.group.generated([self.group.element(x)]))

    def to_dict(self) -> dict:
        lab = self.group.labels
        return {
            "group": self.group.name,
            "order": self.group.order,
            "subgroups": [[lab[x] for x in sorted(h)] for h in self.subgroups],
            "occurrence": {lab[x]: c for x, c in enumerate(self.occurrences)},
        }

    def to_text(self) -> str:
        lab = self.group.labels
        lines = [f"subgroups of {self.group.name} ({len(self.subgroups)}):"]
        for i, h in enumerate(self.subgroups):
            lines.append(f"  H{i} = {{" + ", ".join(lab[x] for x in sorted(h)) + "}")
        lines.append("")
        lines.append(self.occurrence_table())
        return "\n".join(lines)

    def occurrence_table(self) -> str:
        lab = self.group.labels
        head = ["x"] + list(lab)
        row = ["occ(x)"] + [str(c) for c in self.occurrences]
        widths = [max(len(a), len(b)) for a, b in zip(head, row)]
        fmt = lambda cells: " | ".join(c.rjust(w) for c, w in zip(cells, widths))
        return fmt(head) + "\n" + fmt(row) + "\n"


def subgroup_lattice(group: FiniteGroup, bound: int = DEFAULT_BOUND) -> SubgroupLattice:
    """Enumerate every subgroup by closure saturation.

    Start from the cyclic subgroups, then repeatedly join each known subgroup
    with each cyclic subgroup it does not contain until nothing new appears.
    Joining with ``<g>`` equals joining with ``g``, so iterating over distinct
    cyclic subgroups covers every element ``g`` outside ``H``.
    """
    if group.order > bound:
        raise BoundExceededError(f"{group.name} has order {group.order} > bound {bound}")
    prep = group._prepared
    found: dict[frozenset[int], tuple[int, ...]] = {}
    for x in range(group.order):
        c = _kernels.closure(prep, (0,), (x,))
        found.setdefault(c, (x,))
    cyclics = list(found.items())
    work = list(found)
    while work:
        h = work.pop()
        gens = found[h]
        for c, (x,) in cyclics:
            if c <= h:
                continue
            k = _kernels.closure(prep, (0,), gens + (x,))
            if k not in found:
                found[k] = gens + (x,)
                work.append(k)
    order = sorted(found, key=_subgroup_key)
    return SubgroupLattice(group, tuple(order), tuple(found[h] for h in order))


def occurrence(group: FiniteGroup, lattice: SubgroupLattice, x: int | str) -> int:
    return lattice.occurrence(x)


def lattice_is_sound(lattice: SubgroupLattice) -> bool:
    """Each listed set contains e, is closed under product and inverse, and has order dividing |G|."""
    g = lattice.group
    for h in lattice.subgroups:
        if 0 not in h or g.order % len(h):
            return False
        if any(g.inverse[x] not in h for x in h):
            return False
        if any(g.table[a][b] not in h for a in h for b in h):
            return False
    return len(set(lattice.subgroups)) == len(lattice.subgroups)


@dataclass(frozen=True)
class PropertyReport:
    verdicts: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())


def occurrence_properties(group: FiniteGroup, lattice: SubgroupLattice) -> PropertyReport:
    occ = lattice.occurrences
    e = occ[0]
    n = group.order
    return PropertyReport({
        "trivial_iff_occ_e_1": (n == 1) == (e == 1),
        "cyclic_iff_some_occ_1": group.is_cyclic == any(c == 1 for c in occ),
        "inverse_symmetric": all(occ[x] == occ[group.inverse[x]] for x in range(n)),
        "prime_iff_occ_e_2": arith.is_prime(n) == (e == 2),
        "occ_e_only_at_e": all((occ[x] == e) == (x == 0) for x in range(n)),
    })


# -- multiplicities and the induced configuration ------------------------


def check_mu(group: FiniteGroup, mu: Sequence[int]) -> tuple[int, ...]:
    mu = tuple(int(m) for m in mu)
    if len(mu) != group.order:
        raise PreconditionError(f"mu needs {group.order} values, got {len(mu)}")
    if any(m < 1 for m in mu):
        raise PreconditionError("mu values must be positive")
    if mu[0] != 1:
        raise PreconditionError("mu(e) must be 1")
    return mu


def constant_mu(group: FiniteGroup) -> tuple[int, ...]:
    return (1,) * group.order


def random_mu(group: FiniteGroup, rng: random.Random, high: int = 5) -> tuple[int, ...]:
    return (1,) + tuple(rng.randint(1, high) for _ in range(group.order - 1))


def mu_from_labels(group: FiniteGroup, values: Mapping[str, int]) -> tuple[int, ...]:
    mu = [1] * group.order
    for lab, m in values.items():
        mu[group.element(str(lab))] = int(m)
    return check_mu(group, mu)


@dataclass(frozen=True)
class DegenerateConfiguration:
    """Prime-order group with mu == 1: not a Brauer configuration.

    The associated algebra is taken to be K[x]/(x^2), whose center has dimension 2.
    """

    group_name: str
    order: int
    algebra: str = "K[x]/(x^2)"
    center_dim: int = 2


def induced_configuration(group: FiniteGroup, lattice: SubgroupLattice, mu: Sequence[int]):
    """Vertices are the elements, polygons the nontrivial subgroups (polygon id = subgroup id)."""
    if group.order == 1:
        raise PreconditionError("the trivial group induces no configuration")
    mu = check_mu(group, mu)
    prime = arith.is_prime(group.order)
    if prime and all(m == 1 for m in mu):
        return DegenerateConfiguration(group.name, group.order)
    polys = tuple(
        Polygon.from_vertices(i, h) for i, h in enumerate(lattice.subgroups) if len(h) > 1
    )
    return Configuration(group.labels, polys, mu)


# -- identity verification -----------------------------------------------


@dataclass(frozen=True)
class Verdict:
    name: str
    case: str
    values: tuple[int, ...]

    @property
    def holds(self) -> bool:
        return len(set(self.values)) == 1

    def __str__(self):
        status = "PASS" if self.holds else "FAIL"
        return f"{status} {self.name} [{self.case}] " + " = ".join(map(str, self.values))


def verify_subgroup_sum(group, lattice, mu, h: int, case: str = "") -> Verdict:
    """Sum over H of mu(x)occ(x) against the sum over subgroups L of mu over H∩L."""
    mu = check_mu(group, mu)
    H = lattice.subgroups[h]
    lhs = sum(mu[x] * len(lattice.membership[x]) for x in H)
    rhs = 0
    for L in lattice.subgroups:
        rhs += sum(mu[x] for x in H & L)
    return Verdict("subgroup_sum", case or f"{group.name} H{h}", (lhs, rhs))


def verify_square_sum(group, lattice, mu, case: str = "") -> Verdict:
    mu = check_mu(group, mu)
    occ = lattice.occurrences
    squares = sum(mu[x] * occ[x] ** 2 for x in range(group.order))
    weighted = sum(mu[x] * occ[x] for H in lattice.subgroups for x in H)
    pairs = 0
    for H in lattice.subgroups:
        for L in lattice.subgroups:
            pairs += sum(mu[x] for x in H & L)
    return Verdict("square_sum", case or group.name, (squares, weighted, pairs))


def verify_center_count(group: FiniteGroup, lattice: SubgroupLattice | None = None) -> Verdict:
    """Center dimension of the mu == 1 induced algebra against the subgroup count."""
    lattice = lattice or subgroup_lattice(group, max(DEFAULT_BOUND, group.order))
    cfg = induced_configuration(group, lattice, constant_mu(group))
    dim = cfg.center_dim if isinstance(cfg, DegenerateConfiguration) else center_dim(cfg)
    return Verdict("center_count", group.name, (dim, len(lattice.subgroups)))


def identity_verdicts(group, lattice, samples: int = 50, seed: int = 0) -> list[Verdict]:
    """Subgroup-sum (every subgroup) and square-sum checks under mu == 1 and ``samples`` seeded random mu."""
    rng = random.Random(f"{seed}:{group.name}")
    mus = [("mu=1", constant_mu(group))]
    mus += [(f"seed={seed} sample={i}", random_mu(group, rng)) for i in range(samples)]
    out = []
    for tag, mu in mus:
        for h in range(len(lattice)):
            out.append(verify_subgroup_sum(group, lattice, mu, h, f"{group.name} H{h} {tag}"))
        out.append(verify_square_sum(group, lattice, mu, f"{group.name} {tag}"))
    return out


# -- cyclic groups -------------------------------------------------------


@lru_cache(maxsize=None)
def _zn(n: int) -> tuple[FiniteGroup, SubgroupLattice]:
    g = cyclic(n)
    return g, subgroup_lattice(g, bound=max(n, DEFAULT_BOUND))


@lru_cache(maxsize=None)
def zn_occurrence_sum(n: int) -> int:
    """Sum of occ(x) over Z_n, by brute force over the subgroup lattice."""
    return sum(_zn(n)[1].occurrences)


def zn_identities(n: int) -> list[Verdict]:
    """Divisor-sum identities for Z_n: lattice brute force against arithmetic closed forms."""
    if not isinstance(n, int) or n < 1:
        raise PreconditionError(f"invalid n: {n!r}")
    g, lat = _zn(n)
    occ = lat.occurrences
    order = g.element_orders
    ds = arith.divisors(n)
    out = []
    for k in ds:
        H = lat.subgroups[lat.cyclic_subgroup((n // k) % n)]
        out.append(Verdict("gcd_sum", f"n={n} k={k}", (sum(occ[x] for x in H), arith.gcd_divisor_sum(n, k))))
        out.append(Verdict(
            "order_gcd_sum", f"n={n} k={k}",
            (sum(order[x] * occ[x] for x in H), arith.order_weighted_divisor_sum(n, k)),
        ))
    out.append(Verdict("sigma_sum", f"n={n}", (sum(occ), arith.sigma(n))))
    out.append(Verdict(
        "order_sigma_sum", f"n={n}", (sum(order[x] * occ[x] for x in range(n)), sum(arith.phi_t_sum(d) for d in ds)),
    ))
    out.append(Verdict(
        "square_gcd_sum", f"n={n}",
        (sum(c * c for c in occ), sum(arith.gcd_divisor_sum(n, k) for k in ds)),
    ))
    out.append(Verdict(
        "square_order_sum", f"n={n}",
        (sum(order[x] * occ[x] ** 2 for x in range(n)), sum(arith.order_weighted_divisor_sum(n, k) for k in ds)),
    ))
    return out


def coprime_product_identity(m: int, n: int) -> list[Verdict]:
    """Multiplicativity of the occurrence sum for coprime m, n, checked two ways."""
    if gcd(m, n) != 1:
        raise PreconditionError(f"{m} and {n} are not coprime")
    case = f"m={m} n={n}"
    return [
        Verdict("coprime_lattice", case, (zn_occurrence_sum(m * n), zn_occurrence_sum(m) * zn_occurrence_sum(n))),
        Verdict("coprime_sigma", case, (arith.sigma(m * n), arith.sigma(m) * arith.sigma(n))),
    ]


def zn_sweep(limit: int = 200) -> list[Verdict]:
    out = []
    for n in range(1, limit + 1):
        out.extend(zn_identities(n))
    for m in range(1, limit + 1):
        for n in range(m, limit // m + 1):
            if gcd(m, n) == 1:
                out.extend(coprime_product_identity(m, n))
    return out


def verify_group(group: FiniteGroup, samples: int = 50, seed: int = 0, bound: int = DEFAULT_BOUND) -> list[Verdict]:
    """Every applicable check for one group, in a fixed order."""
    lat = subgroup_lattice(group, bound)
    out = [Verdict("lattice_sound", group.name, (int(lattice_is_sound(lat)), 1))]
    for clause, ok in occurrence_properties(group, lat).verdicts.items():
        out.append(Verdict(f"occ_{clause}", group.name, (int(ok), 1)))
    out.extend(identity_verdicts(group, lat, samples, seed))
    if group.order > 1:
        out.append(verify_center_count(group, lat))
    if group.is_cyclic:
        out.extend(zn_identities(group.order))
    return out
