"""Pure-Python Cayley-table kernels, used when the compiled core is unavailable."""


def prepare_table(rows):
    return tuple(tuple(r) for r in rows)


def closure(table, seed, gens):
    """Everything reachable from ``seed`` by right multiplication with ``gens``.

    Seeded with the identity this is the subgroup generated by ``gens``.
    """
    gens = list(gens)
    member = set()
    queue = []
    for s in seed:
        if s not in member:
            member.add(s)
            queue.append(s)
    for x in queue:
        row = table[x]
        for g in gens:
            y = row[g]
            if y not in member:
                member.add(y)
                queue.append(y)
    return frozenset(queue)


def associativity_violation(table):
    """First triple (a, b, c) in lexicographic order with (ab)c != a(bc), else None."""
    n = len(table)
    for a in range(n):
        ra = table[a]
        for b in range(n):
            rab = table[ra[b]]
            rb = table[b]
            for c in range(n):
                if rab[c] != ra[rb[c]]:
                    return (a, b, c)
    return None
