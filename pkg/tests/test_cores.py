import pytest
from hypothesis import given, strategies as st

from conftest import partitions, partitions_of_weight_4_mod_5
from rpl.cores import (
    CoreQuotient,
    alpha_from_n,
    alpha_quadratic,
    core_counts,
    five_core_crank,
    five_core_crank_forms,
    is_t_core,
    littlewood_compose,
    littlewood_decompose,
    n_from_alpha,
    nvector_weight,
    orbit,
    orbit_op,
    orbit_table,
    phi2,
    phi2_inverse,
    quadrupling_map,
    residue_vector,
    rim_hook_core,
    srank_decompose,
    srank_from_alpha,
    srank_from_nvector,
    t_core,
    t_cores,
    theta_map,
)
from rpl.partitions import DomainError, EMPTY, Partition, enumerate_partitions, srank
from rpl.tables import ORBITS_9


@pytest.mark.parametrize(
    "parts, expected",
    [((), (0, 0, 0, 0, 0)), ((5, 1, 1, 1, 1), (1, 2, 2, 2, 2)), ((1,), (1, 0, 0, 0, 0))],
)
def test_residue_vector(parts, expected):
    assert residue_vector(parts, 5) == expected


def test_is_t_core_examples():
    # every hook of (2,2,2) is at most 4, so it is a 5-core
    assert is_t_core((2, 2, 2), 5)
    assert t_cores(6, 5).count(Partition(2, 2, 2)) == 1
    assert not is_t_core((2, 2, 2), 3)
    assert is_t_core((5, 1, 1, 1, 1), 5)
    assert all(is_t_core(p, 5) for n in range(5) for p in enumerate_partitions(n))
    assert not is_t_core((5,), 5)


def test_littlewood_examples():
    cq = littlewood_decompose((3, 3, 3), 5)
    assert cq.core == (2, 2)
    assert cq.quotient == ((), (), (1,), (), ())
    assert cq.weight == 9
    assert littlewood_compose(cq) == (3, 3, 3)
    core = Partition(5, 1, 1, 1, 1)
    assert littlewood_decompose(core, 5) == CoreQuotient(5, core, (EMPTY,) * 5)


def test_littlewood_compose_rejects_non_core():
    with pytest.raises(DomainError):
        littlewood_compose(CoreQuotient(5, Partition(5), (EMPTY,) * 5))


def test_phi2_examples():
    assert phi2((), 5) == (0, 0, 0, 0, 0)
    assert phi2((5, 1, 1, 1, 1), 5) == (-1, 0, 0, 0, 1)
    # the single cell gives r = (1,0,0,0,0), hence n = (1,0,0,0,-1), weight 1
    assert phi2((1,), 5) == (1, 0, 0, 0, -1)
    assert nvector_weight((1, 0, 0, 0, -1)) == 1
    assert phi2_inverse((-1, 0, 0, 0, 1)) == (5, 1, 1, 1, 1)
    with pytest.raises(DomainError):
        phi2((5,), 5)


def test_alpha_examples():
    assert alpha_from_n((-1, 0, 0, 0, 1)) == (0, 1, 1, 0, -1)
    assert alpha_quadratic((0, 1, 1, 0, -1)) == 2
    assert alpha_quadratic((1, 0, 0, 0, 0)) == 1
    assert sum(phi2_inverse(n_from_alpha((1, 0, 0, 0, 0)))) == 4


@pytest.mark.parametrize("parts, expected", [((5, 1, 1, 1, 1), 0), ((3, 3, 1, 1, 1), 1), ((5, 2, 2), 4)])
def test_five_core_crank_examples(parts, expected):
    assert five_core_crank(parts) == expected
    assert five_core_crank_forms(parts) == (expected,) * 3


def test_five_core_crank_needs_weight_4_mod_5():
    with pytest.raises(DomainError):
        five_core_crank((3,))


def test_plain_orbit_of_the_hook_is_the_five_cores_of_9():
    orb = orbit((5, 1, 1, 1, 1), "plain")
    assert set(orb) == set(t_cores(9, 5))
    assert [five_core_crank(p) for p in orb] == [0, 1, 2, 3, 4]
    assert orbit_op(orb[-1], "plain") == orb[0]


def test_orbit_table_reproduces_reference_rows():
    table = orbit_table(9, "srank")
    assert sorted(table) == sorted(row for _, row in ORBITS_9)
    assert table[0] == ORBITS_9[0][1]
    assert [srank(orb[0]) % 4 for orb in table].count(2) == 2


def test_orbit_table_small_and_bad_weight():
    assert orbit_table(4, "plain") == [((2, 2), (1, 1, 1, 1), (2, 1, 1), (3, 1), (4,))]
    with pytest.raises(DomainError):
        orbit_table(5)
    with pytest.raises(DomainError):
        orbit_op((4,), "sideways")


def test_theta_and_quadrupling_of_empty():
    assert phi2(theta_map(()), 5) == (1, 1, 0, -1, -1)
    assert theta_map(()) == (2, 2)
    assert phi2(quadrupling_map(()), 5) == (0, 1, 0, -1, 0)
    assert quadrupling_map(()) == (2, 1)
    with pytest.raises(DomainError):
        theta_map((5,))


def test_srank_formula_examples():
    assert srank_from_nvector((0, 0, 0, 0, 0)) == 0
    assert srank_from_nvector((-1, 0, 0, 0, 1)) == 0
    assert srank_decompose((2, 2, 2)) == srank((2, 2, 2)) % 4


def test_core_counts():
    assert core_counts(9, 5) == 5
    assert core_counts(4, 5, crank=0) == 1
    assert [core_counts(n, 2) for n in range(7)] == [1, 1, 0, 1, 0, 0, 1]
    with pytest.raises(DomainError):
        core_counts(3, 5, crank=0)
    with pytest.raises(DomainError):
        core_counts(9, 4, crank=0)


def test_t_cores_match_brute_force():
    for t in (2, 3, 4, 5):
        for n in range(16):
            brute = [p for p in enumerate_partitions(n) if rim_hook_core(p, t) == p]
            assert list(t_cores(n, t)) == brute


@given(partitions(), st.sampled_from([2, 3, 4, 5, 7]))
def test_littlewood_round_trip(p, t):
    cq = littlewood_decompose(p, t)
    assert cq.weight == sum(p)
    assert is_t_core(cq.core, t)
    assert cq.core == rim_hook_core(p, t) == t_core(p, t)
    assert littlewood_compose(cq) == p


@given(partitions(), st.sampled_from([2, 3, 5, 7]))
def test_phi2_round_trip_on_cores(p, t):
    core = t_core(p, t)
    nv = phi2(core, t)
    assert sum(nv) == 0
    assert nvector_weight(nv) == sum(core)
    assert phi2_inverse(nv) == core
    assert sum(residue_vector(core, t)) == sum(core)


@given(st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_alpha_round_trip(head):
    n = tuple(head) + (-sum(head),)
    if sum(i * x for i, x in enumerate(n)) % 5 != 4:
        return
    alpha = alpha_from_n(n)
    assert sum(alpha) == 1
    assert n_from_alpha(alpha) == n
    assert sum(phi2_inverse(n)) == 5 * alpha_quadratic(alpha) - 1
    assert srank_from_alpha(alpha) == srank_from_nvector(n)


@given(partitions_of_weight_4_mod_5(), st.sampled_from(["plain", "srank"]))
def test_orbit_properties(p, variant):
    orb = orbit(p, variant)
    assert orbit_op(orb[-1], variant) == p
    assert len(set(orb)) == 5
    c0 = five_core_crank(p)
    assert [five_core_crank(q) for q in orb] == [(c0 + k) % 5 for k in range(5)]
    assert {sum(q) for q in orb} == {sum(p)}
    if variant == "srank":
        assert len({srank(q) % 4 for q in orb}) == 1


@given(partitions())
def test_srank_decomposition(p):
    assert srank_decompose(p) == srank(p) % 4
    assert srank_from_nvector(phi2(t_core(p, 5), 5)) == srank(t_core(p, 5)) % 4


@given(st.integers(0, 25))
def test_theta_and_quadrupling_properties(n):
    for core in t_cores(n, 5):
        img = theta_map(core)
        assert sum(img) == 5 * n + 4 and is_t_core(img, 5)
        assert five_core_crank(img) == 0
        assert srank(img) % 4 == srank(core) % 4
        q = quadrupling_map(core)
        assert sum(q) == 4 * n + 3 and is_t_core(q, 5)
        assert srank(q) % 4 == 0
