"""Random valid configurations: a seeded generator and a hypothesis strategy."""

import random

from hypothesis import strategies as st

from brauercfg.config import Configuration, Polygon

MAX_VERTICES = 6
MAX_POLYGONS = 5
MAX_MU = 3


def _assemble(n_vertices, members, mu, shuffle):
    """Drop unused vertices, relabel densely and shuffle successor sequences.

    Returns None when the result is not a valid configuration.
    """
    used = sorted({v for m in members for v in m})
    remap = {v: i for i, v in enumerate(used)}
    polys = tuple(Polygon.from_vertices(pid + 1, [remap[v] for v in m]) for pid, m in enumerate(members))
    labels = tuple(str(i + 1) for i in range(len(used)))
    mults = tuple(mu[v] for v in used)
    base = Configuration(labels, polys, mults)
    orientation = []
    for v, seq in base.orientation:
        seq = list(seq)
        shuffle(seq)
        orientation.append((v, tuple(seq)))
    cfg = Configuration(labels, polys, mults, tuple(orientation))
    return cfg if cfg.validate().is_valid else None


def random_configuration(rng: random.Random) -> Configuration:
    while True:
        n = rng.randint(1, MAX_VERTICES)
        k = rng.randint(1, MAX_POLYGONS)
        members = [[rng.randrange(n) for _ in range(rng.randint(2, 4))] for _ in range(k)]
        mu = [rng.randint(1, MAX_MU) for _ in range(n)]
        cfg = _assemble(n, members, mu, rng.shuffle)
        if cfg is not None:
            return cfg


def seeded_configurations(count: int = 200, seed: int = 20240611) -> list[Configuration]:
    rng = random.Random(seed)
    return [random_configuration(rng) for _ in range(count)]


@st.composite
def configurations(draw):
    n = draw(st.integers(1, MAX_VERTICES))
    members = draw(st.lists(
        st.lists(st.integers(0, n - 1), min_size=2, max_size=4), min_size=1, max_size=MAX_POLYGONS,
    ))
    mu = draw(st.lists(st.integers(1, MAX_MU), min_size=n, max_size=n))
    rnd = draw(st.randoms(use_true_random=False))
    cfg = _assemble(n, members, mu, rnd.shuffle)
    if cfg is None:
        # C3 failed: bump one multiplicity in each offending polygon
        fixed = list(mu)
        for m in members:
            fixed[m[0]] = max(fixed[m[0]], 2)
        cfg = _assemble(n, members, fixed, rnd.shuffle)
    assert cfg is not None
    return cfg
