import random
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from brauercfg import arith, groups
from brauercfg.errors import BoundExceededError, GroupAxiomError, PreconditionError, UnknownIdError
from brauercfg.groups import (
    CATALOG,
    DegenerateConfiguration,
    build_group,
    induced_configuration,
    subgroup_lattice,
)
from brauercfg.representation import center_dim
from oracles import subgroups_by_joins, subgroups_by_subsets

CATALOG_GROUPS = {spec: build_group(spec) for spec in CATALOG}

# number of subgroups, from standard tables
SUBGROUP_COUNTS = {
    "dihedral:3": 6, "dihedral:4": 10, "dihedral:5": 8, "dihedral:6": 16,
    "quaternion": 6, "symmetric:3": 6, "symmetric:4": 30, "alternating:4": 10,
    "cyclic:2*cyclic:2": 5, "cyclic:2*cyclic:4": 8,
}


@pytest.fixture(scope="module")
def lattices():
    return {spec: subgroup_lattice(g) for spec, g in CATALOG_GROUPS.items()}


def test_orders():
    orders = {spec: g.order for spec, g in CATALOG_GROUPS.items()}
    assert orders["dihedral:6"] == 12 and orders["symmetric:4"] == 24
    assert orders["alternating:4"] == 12 and orders["quaternion"] == 8
    assert orders["cyclic:2*cyclic:4"] == 8


@pytest.mark.parametrize("spec", CATALOG)
def test_lattice_matches_join_oracle(spec, lattices):
    g, lat = CATALOG_GROUPS[spec], lattices[spec]
    assert set(lat.subgroups) == subgroups_by_joins(g.table)
    assert groups.lattice_is_sound(lat)
    for h in lat.subgroups:
        assert g.order % len(h) == 0
    if g.order <= 12:
        assert set(lat.subgroups) == subgroups_by_subsets(g.table)


@pytest.mark.parametrize("spec", CATALOG)
def test_subgroup_counts(spec, lattices):
    lat = lattices[spec]
    if spec in SUBGROUP_COUNTS:
        assert len(lat) == SUBGROUP_COUNTS[spec]
    else:
        n = int(spec.split(":")[1])
        assert len(lat) == arith.tau(n)


@pytest.mark.parametrize("spec", CATALOG)
def test_occurrence_properties(spec, lattices):
    g, lat = CATALOG_GROUPS[spec], lattices[spec]
    report = groups.occurrence_properties(g, lat)
    assert report.ok, report.verdicts
    occ = lat.occurrences
    assert all(occ[x] == occ[g.inverse[x]] for x in range(g.order))
    assert occ[0] == len(lat)


def test_z12_table(lattices, golden_dir):
    lat = lattices["cyclic:12"]
    assert lat.occurrences == (6, 1, 2, 2, 3, 1, 4, 1, 3, 2, 2, 1)
    assert [sorted(h) for h in lat.subgroups] == [
        [0], [0, 6], [0, 4, 8], [0, 3, 6, 9], [0, 2, 4, 6, 8, 10], list(range(12)),
    ]
    assert lat.occurrence_table() == (golden_dir / "cyclic12_occ.txt").read_text()


def test_s3_occurrence():
    g = build_group("symmetric:3")
    lat = subgroup_lattice(g)
    occ = {g.labels[x]: lat.occurrence(x) for x in range(6)}
    assert occ["()"] == 6
    assert sorted(occ.values()) == [2, 2, 2, 2, 2, 6]  # each non-identity element: <x> and S3


@pytest.mark.parametrize("spec", [s for s in CATALOG if s != "cyclic:1"])
def test_induced_valence(spec, lattices):
    g, lat = CATALOG_GROUPS[spec], lattices[spec]
    cfg = induced_configuration(g, lat, groups.constant_mu(g))
    if isinstance(cfg, DegenerateConfiguration):
        assert arith.is_prime(g.order)
        return
    for x in range(g.order):
        assert cfg.val(x) == lat.occurrence(x) - (x == 0)
    assert cfg.is_connected()
    assert cfg.validate().is_valid


@pytest.mark.parametrize("spec", [s for s in CATALOG if s != "cyclic:1"])
def test_center_counts_subgroups(spec, lattices):
    g, lat = CATALOG_GROUPS[spec], lattices[spec]
    v = groups.verify_center_count(g, lat)
    assert v.holds
    assert v.values == (len(lat), len(lat))


def test_prime_order_degenerate():
    g = build_group("cyclic:5")
    cfg = induced_configuration(g, subgroup_lattice(g), groups.constant_mu(g))
    assert isinstance(cfg, DegenerateConfiguration)
    assert cfg.center_dim == 2
    # non-constant mu gives a genuine configuration
    cfg = induced_configuration(g, subgroup_lattice(g), (1, 2, 1, 1, 1))
    assert cfg.validate().is_valid
    assert center_dim(cfg) == 1 + 6 + 1 - 5


def test_trivial_group_induces_nothing():
    g = build_group("cyclic:1")
    with pytest.raises(PreconditionError):
        induced_configuration(g, subgroup_lattice(g), (1,))


def test_z2_three_way_identity():
    g = build_group("cyclic:2")
    v = groups.verify_square_sum(g, subgroup_lattice(g), (1, 1))
    assert v.values == (5, 5, 5)


def test_z12_gcd_check():
    verdicts = {v.case: v for v in groups.zn_identities(12) if v.name == "gcd_sum"}
    assert verdicts["n=12 k=4"].values == (14, 14)
    assert sum(subgroup_lattice(build_group("cyclic:12")).occurrences) == arith.sigma(12) == 28


@pytest.mark.parametrize("spec", CATALOG)
def test_theorem_harness(spec, lattices):
    g, lat = CATALOG_GROUPS[spec], lattices[spec]
    verdicts = groups.identity_verdicts(g, lat, samples=10, seed=3)
    assert len(verdicts) == 11 * (len(lat) + 1)
    assert all(v.holds for v in verdicts), [str(v) for v in verdicts if not v.holds]


def test_mu_validation():
    g = build_group("cyclic:4")
    with pytest.raises(PreconditionError):
        groups.check_mu(g, (2, 1, 1, 1))
    with pytest.raises(PreconditionError):
        groups.check_mu(g, (1, 1, 1))
    with pytest.raises(PreconditionError):
        groups.check_mu(g, (1, 0, 1, 1))
    assert groups.mu_from_labels(g, {"2": 3}) == (1, 1, 3, 1)
    with pytest.raises(UnknownIdError):
        groups.mu_from_labels(g, {"9": 3})
    rng = random.Random(1)
    mu = groups.random_mu(g, rng)
    assert mu[0] == 1 and all(1 <= m <= 5 for m in mu)


def test_identity_is_relabelled_to_zero():
    # Z3 with identity stored at index 2
    table = [[1, 2, 0], [2, 0, 1], [0, 1, 2]]
    g = groups.FiniteGroup(table, "Z3", ["a", "b", "e"])
    assert g.labels[0] == "e"
    assert g.table[0] == (0, 1, 2)


def test_bad_tables():
    with pytest.raises(GroupAxiomError, match="identity"):
        groups.FiniteGroup([[1, 1], [1, 1]])
    with pytest.raises(GroupAxiomError, match="Latin"):
        groups.FiniteGroup([[0, 1, 2], [1, 1, 0], [2, 0, 1]])
    with pytest.raises(GroupAxiomError):
        groups.FiniteGroup([])


def test_associativity_failure_names_triple():
    # a Latin square with identity 0 that is not associative
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(GroupAxiomError, match=r"associativity fails for \(a,b,c\)=\(\w+,\w+,\w+\)"):
        groups.FiniteGroup(table)


def test_bound():
    g = build_group("symmetric:5")
    with pytest.raises(BoundExceededError):
        subgroup_lattice(g)
    assert len(subgroup_lattice(g, bound=120)) == 156


def test_specs():
    assert build_group("cyclic:2*cyclic:4").order == 8
    assert build_group({"family": "product", "params": ["cyclic:2", {"family": "cyclic", "params": [2]}]}).order == 4
    assert build_group({"family": "dihedral", "params": [4]}).labels[:2] == ("e", "r")
    g = build_group({"name": "V4", "order": 4, "table": [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]})
    assert len(subgroup_lattice(g)) == 5
    with pytest.raises(GroupAxiomError):
        build_group({"order": 3, "table": [[0, 1], [1, 0]]})
    with pytest.raises(PreconditionError):
        build_group("mystery:3")


def test_bundled_group_files(data_dir):
    from brauercfg.serialize import load_group

    names = {p.stem: load_group(p) for p in (data_dir / "groups").glob("*.json")}
    assert names["Z12"].order == 12
    assert len(subgroup_lattice(names["S4"])) == 30
    assert len(names) >= len(CATALOG)


def test_element_orders():
    g = build_group("cyclic:12")
    assert g.element_orders == tuple(12 // gcd(x, 12) for x in range(12))
    q = build_group("quaternion")
    assert sorted(q.element_orders) == [1, 2, 4, 4, 4, 4, 4, 4]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 60))
def test_zn_identities_hold(n):
    assert all(v.holds for v in groups.zn_identities(n))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 30), st.integers(1, 30))
def test_coprime_product(m, n):
    if gcd(m, n) != 1:
        with pytest.raises(PreconditionError):
            groups.coprime_product_identity(m, n)
        return
    assert all(v.holds for v in groups.coprime_product_identity(m, n))


def test_verify_group_passes():
    verdicts = groups.verify_group(build_group("dihedral:4"), samples=5, seed=11)
    assert verdicts and all(v.holds for v in verdicts)


def test_product_spec_keeps_name(data_dir):
    from brauercfg.serialize import load_group

    assert load_group(data_dir / "groups" / "Z2xZ4.json").name == "Z2xZ4"
