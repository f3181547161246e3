"""The stcrank statistic and the two bijections it is built from.

Bijection 1 splits a partition into a pair ``(pi1, pi2)`` where ``pi2`` has
no repeated even parts and ``pi1`` records the removed pairs of even parts
(a pair of parts ``2i`` becomes one part ``i``).  Bijection 2 pairs the
type A partitions, those with ``pi1 == (1,)``, with the type B partitions.
"""

from __future__ import annotations

import enum
from collections import Counter
from typing import NamedTuple, Sequence

from .partitions import (
    DomainError,
    EMPTY,
    Partition,
    ag_crank,
    enumerate_partitions,
    srank,
)


class Bijection1Image(NamedTuple):
    pi1: Partition
    pi2: Partition


class TypeClass(enum.Enum):
    TYPE_A = "A"
    TYPE_B = "B"
    OTHER = "-"


def bijection1(parts: Sequence[int]) -> Bijection1Image:
    """Remove the largest even number of copies of each even part.

    ``pi1`` has part ``i`` with frequency ``f_{2i} // 2`` and ``pi2`` keeps the
    odd parts plus one copy of every even part with odd frequency, so that
    ``|pi| == 4|pi1| + |pi2|`` and ``srank(pi) == srank(pi2)``.
    """
    pi1: list[int] = []
    pi2: list[int] = []
    i, n = 0, len(parts)
    while i < n:
        p = parts[i]
        j = i
        while j < n and parts[j] == p:
            j += 1
        f = j - i
        if p & 1:
            pi2.extend([p] * f)
        else:
            pi1.extend([p // 2] * (f // 2))
            if f & 1:
                pi2.append(p)
        i = j
    return Bijection1Image(Partition._trusted(pi1), Partition._trusted(pi2))


def bijection1_inverse(pi1: Sequence[int], pi2: Sequence[int]) -> Partition:
    counts = Counter(pi2)
    for p, f in counts.items():
        if p % 2 == 0 and f > 1:
            raise DomainError(f"pi2 repeats the even part {p}")
    for p in pi1:
        counts[2 * p] += 2
    return Partition.from_frequencies(counts)


def has_repeated_even_part(parts: Sequence[int]) -> bool:
    return any(parts[k] == parts[k + 1] and parts[k] % 2 == 0 for k in range(len(parts) - 1))


def is_type_a(parts: Sequence[int]) -> bool:
    return bijection1(parts).pi1 == (1,)


def is_type_b(parts: Sequence[int]) -> bool:
    if tuple(parts) == (3, 1):
        return True
    if sum(parts) == 4 or not parts:
        return False
    lam1 = parts[0]
    lam2 = parts[1] if len(parts) > 1 else 0
    if lam1 - lam2 < 2:
        return False
    # lambda'_1 - lambda'_2 is the number of ones
    ones = len(parts) - sum(1 for p in parts if p > 1)
    if ones < 2:
        return False
    if lam1 - 2 == lam2 and lam2 % 2 == 0:
        return False
    return not has_repeated_even_part(parts)


def classify(parts: Sequence[int]) -> TypeClass:
    if is_type_a(parts):
        return TypeClass.TYPE_A
    if is_type_b(parts):
        return TypeClass.TYPE_B
    return TypeClass.OTHER


def bijection2(parts: Sequence[int]) -> Partition:
    """Map a type A partition to its type B partner (weight and srank preserved)."""
    if not is_type_a(parts):
        raise DomainError(f"{tuple(parts)} is not of type A")
    f = Counter(parts)
    m = parts[0]
    if m > 2:
        f[1] += 2
        f[2] -= 2
        f[m] -= 1
        f[m + 2] += 1
        return Partition.from_frequencies(f)
    if f[2] == 3:
        return Partition.from_frequencies({1: f[1] + 2, 4: 1})
    return Partition.from_frequencies({1: f[1] + 1, 3: 1})


def bijection2_inverse(parts: Sequence[int]) -> Partition:
    if not is_type_b(parts):
        raise DomainError(f"{tuple(parts)} is not of type B")
    f = Counter(parts)
    top = parts[0]
    if top == 3 and f[1] == len(parts) - 1:
        return Partition.from_frequencies({1: f[1] - 1, 2: 2})
    if top == 4 and f[1] == len(parts) - 1:
        return Partition.from_frequencies({1: f[1] - 2, 2: 3})
    m = top - 2
    f[top] -= 1
    f[m] += 1
    f[1] -= 2
    f[2] += 2
    return Partition.from_frequencies(f)


def psi(parts: Sequence[int]) -> int:
    """Correction term: 1 on type B partitions, 0 elsewhere."""
    return 1 if is_type_b(parts) else 0


def half_srank(parts: Sequence[int]) -> int:
    s = srank(parts)
    if s & 1:
        raise AssertionError(f"odd srank {s} for {tuple(parts)}")
    return s // 2


def stcrank(parts: Sequence[int]) -> int:
    """crank(pi1) + srank(pi)/2 + psi(pi), with ``pi1`` from Bijection 1."""
    pi1 = bijection1(parts).pi1
    return ag_crank(pi1) + half_srank(parts) + psi(parts)


def refined_counts(n: int, modulus: int = 5) -> dict[tuple[int, int], int]:
    """``{(i, k): P_i(k, modulus, n)}`` for ``i`` in (0, 2) and every residue ``k``."""
    counts = {(i, k): 0 for i in (0, 2) for k in range(modulus)}
    for p in enumerate_partitions(n):
        counts[srank(p) % 4, stcrank(p) % modulus] += 1
    return counts


def joint_srs_table(n: int) -> dict[tuple[int, int], int]:
    """S(n, r, s): partitions of ``n`` with r odd parts and s odd parts in the conjugate."""
    from .partitions import odd_parts, odd_parts_conjugate

    table: Counter = Counter()
    for p in enumerate_partitions(n):
        table[odd_parts(p), odd_parts_conjugate(p)] += 1
    return dict(sorted(table.items()))


def crank_weight(pi1: Sequence[int]) -> dict[int, int]:
    """w(x, pi1) as ``{x-exponent: coefficient}``; the partition (1) gets x + 1/x - 1."""
    if tuple(pi1) == (1,):
        return {1: 1, -1: 1, 0: -1}
    return {ag_crank(pi1): 1}


__all__ = [
    "Bijection1Image",
    "TypeClass",
    "EMPTY",
    "bijection1",
    "bijection1_inverse",
    "bijection2",
    "bijection2_inverse",
    "classify",
    "crank_weight",
    "half_srank",
    "has_repeated_even_part",
    "is_type_a",
    "is_type_b",
    "joint_srs_table",
    "psi",
    "refined_counts",
    "stcrank",
]
