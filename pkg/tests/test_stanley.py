import pytest
from hypothesis import given

from conftest import partitions
from rpl.partitions import DomainError, Partition, enumerate_partitions, srank
from rpl.stanley import (
    TypeClass,
    bijection1,
    bijection1_inverse,
    bijection2,
    bijection2_inverse,
    classify,
    crank_weight,
    half_srank,
    has_repeated_even_part,
    is_type_a,
    is_type_b,
    joint_srs_table,
    refined_counts,
    stcrank,
)
from rpl.tables import GRID_9


@pytest.mark.parametrize(
    "parts, pi1, pi2",
    [
        ((2, 2, 1, 1, 1, 1, 1), (1,), (1, 1, 1, 1, 1)),
        ((3, 3, 3), (), (3, 3, 3)),
        ((4, 4, 4, 2, 2), (2, 1), (4,)),
        ((), (), ()),
    ],
)
def test_bijection1_examples(parts, pi1, pi2):
    assert bijection1(parts) == (pi1, pi2)
    assert bijection1_inverse(pi1, pi2) == parts


def test_bijection1_inverse_rejects_repeated_even_parts():
    with pytest.raises(DomainError):
        bijection1_inverse((1,), (2, 2))


@pytest.mark.parametrize(
    "parts, expected",
    [
        ((2, 2), TypeClass.TYPE_A),
        ((3, 1), TypeClass.TYPE_B),
        ((5, 1, 1), TypeClass.TYPE_B),
        ((1,), TypeClass.OTHER),
        ((), TypeClass.OTHER),
        ((4,), TypeClass.OTHER),
    ],
)
def test_classify_examples(parts, expected):
    assert classify(parts) is expected


@pytest.mark.parametrize("a, b", [((2, 2), (3, 1)), ((2, 2, 2), (4, 1, 1)), ((3, 2, 2), (5, 1, 1))])
def test_bijection2_examples(a, b):
    assert bijection2(a) == b
    assert bijection2_inverse(b) == a


def test_bijection2_domain_errors():
    with pytest.raises(DomainError):
        bijection2((3, 1))
    with pytest.raises(DomainError):
        bijection2_inverse((2, 2))


@pytest.mark.parametrize(
    "parts, expected",
    [((3, 3, 3), 0), ((1,) * 9, 4), ((9,), -4), ((2, 2, 1, 1, 1, 1, 1), 1), ((1,), 0), ((), 0)],
)
def test_stcrank_examples(parts, expected):
    assert stcrank(parts) == expected


def test_stcrank_reproduces_reference_grid():
    for (i, k), cell in GRID_9.items():
        for p in cell:
            assert (srank(p) % 4, stcrank(p) % 5) == (i, k)


def test_refined_counts():
    assert refined_counts(9) == {(i, k): 4 if i == 0 else 2 for i in (0, 2) for k in range(5)}
    zero = refined_counts(0)
    assert zero[0, 0] == 1 and sum(zero.values()) == 1
    assert sum(refined_counts(4).values()) == 5


def test_joint_srs_table():
    assert sum(joint_srs_table(9).values()) == 30
    assert joint_srs_table(4)[2, 2] == 2


def test_crank_weight_of_one():
    assert crank_weight((1,)) == {1: 1, -1: 1, 0: -1}
    assert crank_weight((3, 1)) == {0: 1}
    assert crank_weight(()) == {0: 1}


def test_half_srank_rejects_odd():
    assert half_srank((1,) * 9) == 4


@given(partitions())
def test_bijection1_properties(p):
    pi1, pi2 = bijection1(p)
    assert 4 * sum(pi1) + sum(pi2) == sum(p)
    assert srank(pi2) == srank(p)
    assert not has_repeated_even_part(pi2)
    assert bijection1_inverse(pi1, pi2) == p


@given(partitions())
def test_types_disjoint_and_stcrank_shift(p):
    a, b = is_type_a(p), is_type_b(p)
    assert not (a and b)
    if a:
        assert stcrank(p) == -1 + srank(p) // 2
        q = bijection2(p)
        assert is_type_b(q) and sum(q) == sum(p) and srank(q) == srank(p)
        assert bijection2_inverse(q) == p
    if b:
        assert stcrank(p) == 1 + srank(p) // 2
        assert bijection2(bijection2_inverse(p)) == p


def test_bijection2_is_onto_type_b_up_to_20():
    for n in range(21):
        ps = list(enumerate_partitions(n))
        images = {bijection2(p) for p in ps if is_type_a(p)}
        assert images == {p for p in ps if is_type_b(p)}


def test_stcrank_equidistributes_on_14():
    counts = refined_counts(14)
    for i in (0, 2):
        assert len({counts[i, k] for k in range(5)}) == 1
    p0 = sum(1 for p in enumerate_partitions(14) if srank(p) % 4 == 0)
    assert 5 * counts[0, 0] == p0


def test_partition_input_accepts_plain_tuples():
    assert stcrank(Partition(2, 2, 1, 1, 1, 1, 1)) == stcrank((2, 2, 1, 1, 1, 1, 1))
