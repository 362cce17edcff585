"""Independent brute-force oracles.  Nothing here calls the closed-form code."""

from collections import Counter
from itertools import combinations


def path_basis_counts(q):
    """dim vΛw by listing a path basis explicitly.

    A basis of vΛ is: the idempotent at v, every nonempty proper prefix of
    C^mu(C) for each special cycle C starting at v, and one socle element
    (all C^mu at v coincide).  Prefixes are grouped by their end vertex.
    """
    counts = Counter()
    for pid in q.vertices:
        counts[(pid, pid)] += 2
    for c in q.special_cycles:
        power = c.arrows * c.mu
        for length in range(1, len(power)):
            counts[(c.anchor, power[length - 1].target)] += 1
    return counts


def allowed_pairs_by_scan(q):
    """Every 2-arrow subpath of some C^mu(C)."""
    allowed = set()
    for c in q.special_cycles:
        word = c.arrows * max(c.mu, 1)
        for a, b in zip(word, word[1:]):
            allowed.add((a.key, b.key))
    return allowed


def uniserial_basis(cycle, j):
    """Words spanning U_j(C), transcribed from the explicit basis listing.

    With j = val*k + l, the basis runs from C^k a_1..a_l up to C^mu, one
    element per step along the cycle.
    """
    val, mu = cycle.val, cycle.mu
    k, l = divmod(j, val)
    labels = [a.label for a in cycle.arrows]
    words = []
    m, r = k, l
    while (m, r) <= (mu, 0):
        words.append(tuple(labels * m + labels[:r]))
        r += 1
        if r == val:
            m, r = m + 1, 0
    return words


def naive_closure(table, elements):
    h = set(elements) | {0}
    while True:
        new = {table[a][b] for a in h for b in h} - h
        if not new:
            return frozenset(h)
        h |= new


def subgroups_by_joins(table):
    """Fixpoint of pairwise joins starting from the cyclic subgroups."""
    n = len(table)
    subs = {naive_closure(table, [x]) for x in range(n)}
    while True:
        new = {naive_closure(table, a | b) for a, b in combinations(subs, 2)} - subs
        if not new:
            return subs
        subs |= new


def subgroups_by_subsets(table):
    """All subsets containing the identity that are closed under the product."""
    n = len(table)
    out = set()
    rest = list(range(1, n))
    for mask in range(1 << (n - 1)):
        h = {0} | {rest[i] for i in range(n - 1) if mask >> i & 1}
        if all(table[a][b] in h for a in h for b in h):
            out.add(frozenset(h))
    return out


def _rank(rows, ncols):
    """Exact rank over Q of sparse rows given as {col: int}."""
    from fractions import Fraction

    pivots = {}
    rank = 0
    for row in rows:
        row = {c: Fraction(v) for c, v in row.items() if v}
        while row:
            col = min(row)
            if col not in pivots:
                pivots[col] = row
                rank += 1
                break
            prow = pivots[col]
            f = row[col] / prow[col]
            for c, v in prow.items():
                nv = row.get(c, 0) - f * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return rank


def path_algebra_model(q):
    """Basis and multiplication of the algebra, built from arrow runs.

    Basis: ('e', V), ('p', owner, start, length) for 0 < length < mu*val,
    ('s', V).  A product of runs is nonzero only when both belong to the
    same owner and the second starts where the first stops.
    """
    cfg = q.cfg
    basis = [("e", p) for p in q.vertices]
    src, tgt = {}, {}
    for p in q.vertices:
        src[("e", p)] = tgt[("e", p)] = p
    for v in q.owners:
        seq = cfg.successor_sequence(v)
        t, mu = len(seq), cfg.mu[v]
        for i in range(t):
            for length in range(1, mu * t):
                b = ("p", v, i, length)
                basis.append(b)
                src[b], tgt[b] = seq[i], seq[(i + length) % t]
    for p in q.vertices:
        b = ("s", p)
        basis.append(b)
        src[b] = tgt[b] = p

    def mul(x, y):
        if tgt[x] != src[y]:
            return None
        if x[0] == "e":
            return y
        if y[0] == "e":
            return x
        if x[0] == "s" or y[0] == "s" or x[1] != y[1]:
            return None
        v = x[1]
        t = len(cfg.successor_sequence(v))
        if y[2] != (x[2] + x[3]) % t:
            return None
        n = x[3] + y[3]
        top = cfg.mu[v] * t
        if n < top:
            return ("p", v, x[2], n)
        return ("s", src[x]) if n == top else None

    return basis, mul


def center_dim_brute(q):
    basis, mul = path_algebra_model(q)
    col = {b: i for i, b in enumerate(basis)}
    gens = [b for b in basis if b[0] == "e" or (b[0] == "p" and b[3] == 1)]
    rows = []
    for g in gens:
        eq = {}
        for b in basis:
            for prod, sign in ((mul(b, g), 1), (mul(g, b), -1)):
                if prod is not None:
                    eq.setdefault(prod, {})
                    eq[prod][col[b]] = eq[prod].get(col[b], 0) + sign
        rows.extend(eq.values())
    return len(basis) - _rank(rows, len(basis)), len(basis)
