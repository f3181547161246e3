"""Integer partitions and their classical statistics.

A partition is stored as a nonincreasing tuple of positive parts.  Every
statistic below accepts any such tuple; :class:`Partition` only adds
validation and the frequency notation used when printing tables.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator, Sequence


class DomainError(ValueError):
    """An operation was called outside its mathematical domain."""


class Partition(tuple):
    """Nonincreasing tuple of positive integers.

    >>> Partition([1, 3, 1])
    Partition(3, 1, 1)
    >>> Partition(3, 1, 1) == (3, 1, 1)
    True
    >>> str(Partition((5, 1, 1, 1, 1)))
    '(1^4,5^1)'
    """

    __slots__ = ()

    def __new__(cls, *args) -> "Partition":
        # Partition([3, 1, 1]) and Partition(3, 1, 1) both work
        if len(args) == 1 and not isinstance(args[0], int):
            args = args[0]
        parts = sorted((int(p) for p in args), reverse=True)
        if parts and parts[-1] <= 0:
            raise DomainError(f"parts must be positive, got {parts}")
        return tuple.__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts: Iterable[int]) -> "Partition":
        # caller guarantees the parts are positive and nonincreasing
        return tuple.__new__(cls, parts)

    @classmethod
    def from_frequencies(cls, freqs: dict[int, int]) -> "Partition":
        """Build from ``{part: frequency}``, the (1^f1, 2^f2, ...) view."""
        parts: list[int] = []
        for part in sorted(freqs, reverse=True):
            f = freqs[part]
            if f < 0:
                raise DomainError(f"negative frequency for part {part}")
            parts.extend([part] * f)
        return cls(parts)

    def frequencies(self) -> dict[int, int]:
        return dict(sorted(Counter(self).items()))

    @property
    def weight(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"

    def __str__(self) -> str:
        return freq_notation(self)


EMPTY = Partition()


def freq_notation(parts: Sequence[int], sep: str = ",", brackets: bool = True) -> str:
    """Render parts as ``(1^a,2^b,...)`` with parts in increasing order."""
    counts = sorted(Counter(parts).items())
    body = sep.join(f"{p}^{f}" for p, f in counts)
    return f"({body})" if brackets else body


def parse_partition(text: str) -> Partition:
    """Inverse of :func:`freq_notation`; also accepts ``3,1,1`` or ``()``."""
    text = text.strip().strip("()[]").strip()
    if not text:
        return EMPTY
    tokens = [tok for tok in text.replace(".", ",").replace(" ", ",").split(",") if tok]
    if any("^" in tok for tok in tokens):
        freqs: dict[int, int] = {}
        for tok in tokens:
            part, _, f = tok.partition("^")
            freqs[int(part)] = freqs.get(int(part), 0) + (int(f) if f else 1)
        return Partition.from_frequencies(freqs)
    return Partition(int(tok) for tok in tokens)


def weight(parts: Sequence[int]) -> int:
    return sum(parts)


def conjugate(parts: Sequence[int]) -> Partition:
    """Transpose of the Young diagram: column j has length #{i : parts[i] >= j}."""
    if not parts:
        return EMPTY
    cols = []
    k = len(parts)
    for j in range(1, parts[0] + 1):
        while parts[k - 1] < j:
            k -= 1
        cols.append(k)
    return Partition._trusted(cols)


def odd_parts(parts: Sequence[int]) -> int:
    return sum(p & 1 for p in parts)


def odd_parts_conjugate(parts: Sequence[int]) -> int:
    # columns of length exactly i number parts[i-1] - parts[i]; keep the odd i
    return sum(parts[0::2]) - sum(parts[1::2])


def srank(parts: Sequence[int]) -> int:
    """Stanley's rank: odd parts of the partition minus odd parts of its conjugate."""
    return odd_parts(parts) - odd_parts_conjugate(parts)


def dyson_rank(parts: Sequence[int]) -> int:
    """Largest part minus number of parts; the empty partition has rank 0."""
    if not parts:
        return 0
    return parts[0] - len(parts)


def ag_crank(parts: Sequence[int]) -> int:
    """Crank of a partition.

    With ``mu`` the number of ones: the largest part when ``mu == 0``,
    otherwise the number of parts larger than ``mu`` minus ``mu``.
    """
    if not parts:
        return 0
    mu = 0
    for p in reversed(parts):
        if p != 1:
            break
        mu += 1
    if mu == 0:
        return parts[0]
    larger = 0
    for p in parts:
        if p <= mu:
            break
        larger += 1
    return larger - mu


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of ``n`` in lexicographically decreasing order.

    The order starts at ``(n,)`` and ends at ``(1,)*n``.  Uses the ZS1
    successor rule, so each step is amortised constant time.
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    if n == 0:
        yield EMPTY
        return
    make = Partition._trusted
    x = [1] * (n + 1)
    x[1] = n
    m = h = 1
    yield make((n,))
    while x[1] != 1:
        if x[h] == 2:
            m += 1
            x[h] = 1
            h -= 1
        else:
            r = x[h] - 1
            t = m - h + 1
            x[h] = r
            while t >= r:
                h += 1
                x[h] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h] = t
        yield make(x[1 : m + 1])


_P_CACHE = [1]


def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal recurrence; never enumerates."""
    if n < 0:
        return 0
    p = _P_CACHE
    for m in range(len(p), n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = g1 + k
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p.append(total)
    return p[n]


STATISTICS = ("rank", "crank", "srank", "stcrank", "c5core")


def statistic_function(name: str):
    """Look up a statistic by name.  Raises DomainError for unknown names."""
    if name == "rank":
        return dyson_rank
    if name == "crank":
        return ag_crank
    if name == "srank":
        return srank
    if name == "odd":
        return odd_parts
    if name == "odd_conj":
        return odd_parts_conjugate
    if name == "stcrank":
        from .stanley import stcrank

        return stcrank
    if name == "c5core":
        from .cores import five_core_crank

        return five_core_crank
    raise DomainError(f"unknown statistic {name!r}")


def residue_counts(n: int, statistic: str, modulus: int) -> dict[int, int]:
    """Count partitions of ``n`` by ``statistic mod modulus``.

    ``residue_counts(n, "rank", m)[k]`` is N(k, m, n); with ``"crank"`` it is
    M(k, m, n).  All residues ``0..modulus-1`` appear as keys.
    """
    if modulus < 1:
        raise DomainError("modulus must be positive")
    if statistic == "c5core" and n % 5 != 4:
        raise DomainError("the 5-core crank is only defined for weights 4 mod 5")
    fn = statistic_function(statistic)
    counts = dict.fromkeys(range(modulus), 0)
    for p in enumerate_partitions(n):
        counts[fn(p) % modulus] += 1
    return counts
