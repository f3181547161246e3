"""t-cores, t-quotients and the 5-core crank.

Cores and quotients are computed on the abacus.  A partition with ``b``
beads (``b`` a multiple of ``t``) has beta-numbers ``parts[i] + b - 1 - i``;
runner ``r`` carries the beta-numbers congruent to ``r`` mod ``t``.  Sliding
every bead up its runner gives the core, and the beads on runner ``r`` read
as a partition give quotient component ``r``.  The number of beads on runner
``r`` minus ``b/t`` is the n-vector entry ``n_r``.

With this labelling the srank decomposition

    srank(pi) = srank(core) + sum srank(q_i) + 2 sum |q_i| (n_i + i)   (mod 4)

holds for every partition tried, and no other runner order satisfies it.
"""

from __future__ import annotations

import functools
from typing import NamedTuple, Sequence

from .partitions import DomainError, EMPTY, Partition, enumerate_partitions, srank
from .qseries import zero_sum_vectors


class CoreQuotient(NamedTuple):
    t: int
    core: Partition
    quotient: tuple[Partition, ...]

    @property
    def weight(self) -> int:
        return sum(self.core) + self.t * sum(sum(q) for q in self.quotient)


def _check_t(t: int) -> None:
    if t < 2:
        raise DomainError(f"t must be at least 2, got {t}")


def residue_vector(parts: Sequence[int], t: int) -> tuple[int, ...]:
    """``r[i]`` = number of cells (row a, column b), 1-based, with ``b - a = i`` mod t."""
    _check_t(t)
    r = [0] * t
    for a, length in enumerate(parts, 1):
        full, rest = divmod(length, t)
        if full:
            for i in range(t):
                r[i] += full
        start = (1 - a) % t
        for k in range(rest):
            r[(start + k) % t] += 1
    return tuple(r)


# -- abacus ---------------------------------------------------------------


def _bead_count(parts: Sequence[int], t: int) -> int:
    return t * (-(-len(parts) // t))


def _runners(parts: Sequence[int], t: int) -> tuple[int, list[list[int]]]:
    b = _bead_count(parts, t)
    runners: list[list[int]] = [[] for _ in range(t)]
    for i in range(b):
        x = (parts[i] if i < len(parts) else 0) + b - 1 - i
        runners[x % t].append(x // t)
    return b, runners


def _partition_from_levels(levels: Sequence[int]) -> Partition:
    # levels are in decreasing order; the k-th highest bead moved down by parts[k]
    c = len(levels)
    return Partition._trusted(
        x for x in (levels[k] - (c - 1 - k) for k in range(c)) if x > 0
    )


def _partition_from_betas(betas: list[int]) -> Partition:
    betas = sorted(betas, reverse=True)
    b = len(betas)
    return Partition._trusted(x for x in (betas[i] - (b - 1 - i) for i in range(b)) if x > 0)


def _abacus_from_counts(counts: Sequence[int], t: int) -> list[int]:
    return [r + t * level for r in range(t) for level in range(counts[r])]


def littlewood_decompose(parts: Sequence[int], t: int) -> CoreQuotient:
    """Split ``parts`` into its t-core and t-quotient."""
    _check_t(t)
    _, runners = _runners(parts, t)
    quotient = tuple(_partition_from_levels(levels) for levels in runners)
    core = _partition_from_betas(_abacus_from_counts([len(lv) for lv in runners], t))
    return CoreQuotient(t, core, quotient)


def littlewood_compose(cq: CoreQuotient) -> Partition:
    """Inverse of :func:`littlewood_decompose`."""
    t, core, quotient = cq
    _check_t(t)
    if len(quotient) != t:
        raise DomainError(f"expected {t} quotient components, got {len(quotient)}")
    if not is_t_core(core, t):
        raise DomainError(f"{tuple(core)} is not a {t}-core")
    nvec = _nvector_from_beads(core, t)
    # enough beads on every runner to hold each quotient component
    k = max([len(q) - nv for q, nv in zip(quotient, nvec)] + [-nv for nv in nvec] + [0])
    betas = []
    for r in range(t):
        c = nvec[r] + k
        q = tuple(quotient[r]) + (0,) * (c - len(quotient[r]))
        betas.extend(r + t * ((c - 1 - j) + q[j]) for j in range(c))
    return _partition_from_betas(betas)


def t_core(parts: Sequence[int], t: int) -> Partition:
    return littlewood_decompose(parts, t).core


def is_t_core(parts: Sequence[int], t: int) -> bool:
    _check_t(t)
    _, runners = _runners(parts, t)
    # a core has every runner justified: levels 0..c-1 with no gaps
    return all(not levels or levels[0] == len(levels) - 1 for levels in runners)


def rim_hook_core(parts: Sequence[int], t: int) -> Partition:
    """t-core by repeatedly deleting rim hooks of length ``t`` from the diagram.

    Independent of the abacus; used to cross-check it.
    """
    _check_t(t)
    lam = list(parts)
    while True:
        hook = _find_hook(lam, t)
        if hook is None:
            return Partition._trusted(p for p in lam if p > 0)
        i, j = hook
        conj_j = sum(1 for p in lam if p >= j + 1)
        bottom = conj_j - 1
        for r in range(i, bottom):
            lam[r] = lam[r + 1] - 1
        lam[bottom] = j
        lam = [p for p in lam if p > 0]


def _find_hook(lam: list[int], t: int) -> tuple[int, int] | None:
    # 0-based cell (i, j) whose hook length is t
    if not lam:
        return None
    conj = conjugate_list(lam)
    for i, row in enumerate(lam):
        for j in range(row):
            if (row - j - 1) + (conj[j] - i - 1) + 1 == t:
                return i, j
    return None


def conjugate_list(lam: Sequence[int]) -> list[int]:
    return [sum(1 for p in lam if p > j) for j in range(lam[0] if lam else 0)]


# -- n-vectors ------------------------------------------------------------


def _nvector_from_beads(core: Sequence[int], t: int) -> tuple[int, ...]:
    b, runners = _runners(core, t)
    return tuple(len(levels) - b // t for levels in runners)


def nvector_weight(nvec: Sequence[int]) -> int:
    """(t/2)|n|^2 + (0, 1, ..., t-1).n, computed exactly."""
    t = len(nvec)
    twice = t * sum(x * x for x in nvec) + 2 * sum(i * x for i, x in enumerate(nvec))
    if twice % 2:
        raise DomainError(f"{tuple(nvec)} has odd doubled weight")
    return twice // 2


def phi2(core: Sequence[int], t: int) -> tuple[int, ...]:
    """n-vector of a t-core: ``n_i = r_i - r_{i+1}`` from the residue vector."""
    if not is_t_core(core, t):
        raise DomainError(f"{tuple(core)} is not a {t}-core")
    r = residue_vector(core, t)
    return tuple(r[i] - r[(i + 1) % t] for i in range(t))


def phi2_inverse(nvec: Sequence[int]) -> Partition:
    """The t-core (``t = len(nvec)``) whose abacus has ``n_r + k`` beads on runner ``r``."""
    t = len(nvec)
    _check_t(t)
    if sum(nvec) != 0:
        raise DomainError(f"n-vector {tuple(nvec)} does not sum to zero")
    k = max(0, -min(nvec))
    return _partition_from_betas(_abacus_from_counts([x + k for x in nvec], t))


@functools.lru_cache(maxsize=None)
def _nvec_cached(core: Partition, t: int) -> tuple[int, ...]:
    return phi2(core, t)


# -- alpha-vectors (t = 5, weight 4 mod 5) ---------------------------------


def alpha_from_n(nvec: Sequence[int]) -> tuple[int, ...]:
    """Solve the change of variables for the alpha-vector with unit sum."""
    if len(nvec) != 5 or sum(nvec) != 0:
        raise DomainError(f"{tuple(nvec)} is not a 5-component n-vector")
    n0, n1, n2, n3, _ = nvec
    s = 4 * n0 + 3 * n1 + 2 * n2 + n3
    if (s - 1) % 5:
        raise DomainError(f"n-vector {tuple(nvec)} does not have b.n = 4 mod 5")
    a4 = (s - 1) // 5
    a0 = n0 - a4
    a1 = n0 + n1 - 2 * a4
    a2 = n0 + n1 + n2 - 2 * a4
    a3 = n0 + n1 + n2 + n3 - a4
    return (a0, a1, a2, a3, a4)


def n_from_alpha(alpha: Sequence[int]) -> tuple[int, ...]:
    a0, a1, a2, a3, a4 = alpha
    return (
        a0 + a4,
        -a0 + a1 + a4,
        -a1 + a2,
        -a2 + a3 - a4,
        -a3 - a4,
    )


def alpha_quadratic(alpha: Sequence[int]) -> int:
    """Q(alpha) = |alpha|^2 - (a0 a1 + a1 a2 + a2 a3 + a3 a4 + a4 a0)."""
    return sum(a * a for a in alpha) - sum(alpha[i] * alpha[(i + 1) % 5] for i in range(5))


def cycle_alpha(alpha: Sequence[int]) -> tuple[int, ...]:
    a0, a1, a2, a3, a4 = alpha
    return (a4, a0, a1, a2, a3)


def cycle_quotient(quotient: Sequence[Partition]) -> tuple[Partition, ...]:
    """(q0, q1, q2, q3, q4) -> (q4, q2, q3, q0, q1); keeps srank mod 4 under the orbit map."""
    q0, q1, q2, q3, q4 = quotient
    return (q4, q2, q3, q0, q1)


# -- 5-core crank ------------------------------------------------------------


def _require_4_mod_5(parts: Sequence[int]) -> None:
    if sum(parts) % 5 != 4:
        raise DomainError(f"weight {sum(parts)} is not 4 mod 5")


def five_core_alpha(parts: Sequence[int]) -> tuple[int, ...]:
    _require_4_mod_5(parts)
    core = t_core(parts, 5)
    return alpha_from_n(_nvec_cached(core, 5))


def five_core_crank(parts: Sequence[int]) -> int:
    """1 + sum i * alpha_i (mod 5), alpha taken from the 5-core of ``parts``."""
    alpha = five_core_alpha(parts)
    return (1 + sum(i * a for i, a in enumerate(alpha))) % 5


def five_core_crank_forms(parts: Sequence[int]) -> tuple[int, int, int]:
    """The alpha, n-vector and residue-vector expressions for the 5-core crank, mod 5."""
    _require_4_mod_5(parts)
    core = t_core(parts, 5)
    n = phi2(core, 5)
    alpha = alpha_from_n(n)
    r = residue_vector(core, 5)
    from_alpha = 1 + sum(i * a for i, a in enumerate(alpha))
    from_n = 2 * (1 + n[0] - n[1] - n[2] + n[3])
    from_r = 2 + sum(i * r[(2 - i) % 5] for i in range(-2, 3))
    return from_alpha % 5, from_n % 5, from_r % 5


# -- the combined coordinates and the orbit operators -------------------------


def five_core_coordinates(parts: Sequence[int]) -> tuple[tuple[int, ...], tuple[Partition, ...]]:
    """(alpha, quotient) for a partition of weight 4 mod 5."""
    _require_4_mod_5(parts)
    core, quotient = littlewood_decompose(parts, 5)[1:]
    return alpha_from_n(_nvec_cached(core, 5)), quotient


def from_five_core_coordinates(alpha: Sequence[int], quotient: Sequence[Partition]) -> Partition:
    if sum(alpha) != 1:
        raise DomainError(f"alpha-vector {tuple(alpha)} does not sum to 1")
    core = phi2_inverse(n_from_alpha(alpha))
    return littlewood_compose(CoreQuotient(5, core, tuple(quotient)))


ORBIT_VARIANTS = ("plain", "srank")


def orbit_op(parts: Sequence[int], variant: str = "plain") -> Partition:
    """One step of the 5-core crank orbit.

    ``plain`` cycles the alpha-vector only; ``srank`` also permutes the
    quotient so the srank class is kept.  Either way the 5-core crank goes up
    by one and the weight is unchanged.
    """
    if variant not in ORBIT_VARIANTS:
        raise DomainError(f"unknown orbit variant {variant!r}")
    alpha, quotient = five_core_coordinates(parts)
    if variant == "srank":
        quotient = cycle_quotient(quotient)
    return from_five_core_coordinates(cycle_alpha(alpha), quotient)


def orbit(parts: Sequence[int], variant: str = "plain") -> tuple[Partition, ...]:
    """``(pi, O(pi), ..., O^4(pi))``."""
    members = [Partition(parts)]
    for _ in range(4):
        members.append(orbit_op(members[-1], variant))
    return tuple(members)


def orbit_table(n: int, variant: str = "srank") -> list[tuple[Partition, ...]]:
    """Every orbit of the partitions of ``n`` (``n = 4 mod 5``).

    Each orbit is rotated so its members have 5-core crank 0, 1, 2, 3, 4 in
    that order.  Orbits made of 5-cores come first, then (for the ``srank``
    variant) orbits are grouped by srank class, then sorted by their
    lexicographically least member.

    The partitions are placed at their (alpha, quotient) coordinates once,
    and the orbit step acts on coordinates.  An image that is not a partition
    of ``n`` raises AssertionError.
    """
    if n % 5 != 4:
        raise DomainError(f"orbits need n = 4 mod 5, got {n}")
    if variant not in ORBIT_VARIANTS:
        raise DomainError(f"unknown orbit variant {variant!r}")
    at: dict[tuple, Partition] = {}
    for p in enumerate_partitions(n):
        key = five_core_coordinates(p)
        if key in at:
            raise AssertionError(f"{at[key]} and {p} share coordinates {key}")
        at[key] = p
    seen: set[Partition] = set()
    orbits = []
    for start, p in at.items():
        if p in seen:
            continue
        alpha, quotient = start
        members = []
        for _ in range(5):
            try:
                members.append(at[alpha, quotient])
            except KeyError:
                raise AssertionError(f"orbit of {p} leaves the partitions of {n}") from None
            alpha = cycle_alpha(alpha)
            if variant == "srank":
                quotient = cycle_quotient(quotient)
        if (alpha, quotient) != start:
            raise AssertionError(f"orbit of {p} does not close after five steps")
        seen.update(members)
        shift = (1 + sum(i * a for i, a in enumerate(start[0]))) % 5
        members = members[-shift:] + members[:-shift] if shift else members
        orbits.append(tuple(members))

    def key(orb: tuple[Partition, ...]):
        cls = srank(orb[0]) % 4 if variant == "srank" else 0
        return (not is_t_core(orb[0], 5), cls, min(orb))

    return sorted(orbits, key=key)


# -- maps on 5-cores -----------------------------------------------------------


def _require_5_core(core: Sequence[int]) -> tuple[int, ...]:
    if not is_t_core(core, 5):
        raise DomainError(f"{tuple(core)} is not a 5-core")
    return phi2(core, 5)


def theta_nvector(n: Sequence[int]) -> tuple[int, ...]:
    _, n1, n2, n3, n4 = n
    return (
        n1 + 2 * n2 + 2 * n4 + 1,
        -n1 - n2 + n3 + n4 + 1,
        2 * n1 + n2 + 2 * n3,
        -2 * n2 - 2 * n3 - n4 - 1,
        -2 * n1 - n3 - 2 * n4 - 1,
    )


def theta_map(core: Sequence[int]) -> Partition:
    """5-core of n -> 5-core of 5n + 4 with 5-core crank 0."""
    return phi2_inverse(theta_nvector(_require_5_core(core)))


def quadrupling_nvector(n: Sequence[int]) -> tuple[int, ...]:
    n0, n1, n2, n3, n4 = n
    return (2 * n1, 1 + 2 * n4, 2 * n2, -1 + 2 * n0, 2 * n3)


def quadrupling_map(core: Sequence[int]) -> Partition:
    """5-core of n -> 5-core of 4n + 3 with srank 0 mod 4."""
    return phi2_inverse(quadrupling_nvector(_require_5_core(core)))


# -- srank formulas --------------------------------------------------------------


def srank_from_nvector(nvec: Sequence[int]) -> int:
    """sum (n_i + i)^3 mod 4, the srank class of the 5-core with this n-vector."""
    if sum(nvec) != 0:
        raise DomainError(f"n-vector {tuple(nvec)} does not sum to zero")
    return sum((x + i) ** 3 for i, x in enumerate(nvec)) % 4


def srank_from_alpha(alpha: Sequence[int]) -> int:
    return sum(alpha[i] * alpha[(i + 1) % 5] * (alpha[i] - alpha[(i + 1) % 5]) for i in range(5)) % 4


def srank_decompose(parts: Sequence[int], t: int = 5) -> int:
    """srank mod 4 assembled from the 5-core, its n-vector and the 5-quotient."""
    if t != 5:
        raise DomainError("the srank decomposition is stated for t = 5")
    _, core, quotient = littlewood_decompose(parts, 5)
    n = _nvec_cached(core, 5)
    total = srank_from_nvector(n) + sum(srank(q) for q in quotient)
    total += 2 * sum(sum(q) * (n[i] + i) for i, q in enumerate(quotient))
    return total % 4


def srank_decompose_alpha(parts: Sequence[int]) -> int:
    """Same as :func:`srank_decompose`, written with the alpha-vector (weight 4 mod 5)."""
    alpha, q = five_core_coordinates(parts)
    a0, a1, a2, a3, a4 = alpha
    w = [sum(x) for x in q]
    total = srank_from_alpha(alpha) + sum(srank(x) for x in q)
    total += 2 * (
        (a0 + a4) * w[0] + (a2 + a3) * w[1] + (a1 + a2) * w[2] + (a0 + a1) * w[3] + (a3 + a4) * w[4]
    )
    return total % 4


# -- enumerating t-cores ----------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _cores_table(t: int, bound: int) -> dict[int, tuple[Partition, ...]]:
    table: dict[int, list[Partition]] = {w: [] for w in range(bound)}
    for n in zero_sum_vectors(t, bound):
        table[nvector_weight(n)].append(phi2_inverse(n))
    return {w: tuple(sorted(ps, reverse=True)) for w, ps in table.items()}


def t_cores(n: int, t: int) -> tuple[Partition, ...]:
    """All t-cores of weight ``n`` in lexicographically decreasing order."""
    if n < 0:
        return ()
    bound = 16
    while bound <= n:
        bound *= 2
    return _cores_table(t, bound)[n]


def core_counts(n: int, t: int, crank: int | None = None, srank_class: int | None = None) -> int:
    """a_t(n), optionally restricted to a 5-core crank residue and/or srank mod 4."""
    if crank is not None and (t != 5 or n % 5 != 4):
        raise DomainError("the crank filter needs t = 5 and n = 4 mod 5")
    if srank_class is not None and srank_class not in range(4):
        raise DomainError("srank class must be a residue mod 4")
    count = 0
    for core in t_cores(n, t):
        if crank is not None and five_core_crank(core) != crank % 5:
            continue
        if srank_class is not None and srank(core) % 4 != srank_class:
            continue
        count += 1
    return count


__all__ = [
    "CoreQuotient",
    "EMPTY",
    "alpha_from_n",
    "alpha_quadratic",
    "core_counts",
    "cycle_alpha",
    "cycle_quotient",
    "five_core_alpha",
    "five_core_coordinates",
    "five_core_crank",
    "five_core_crank_forms",
    "from_five_core_coordinates",
    "is_t_core",
    "littlewood_compose",
    "littlewood_decompose",
    "n_from_alpha",
    "nvector_weight",
    "orbit",
    "orbit_op",
    "orbit_table",
    "phi2",
    "phi2_inverse",
    "quadrupling_map",
    "residue_vector",
    "rim_hook_core",
    "srank_decompose",
    "srank_decompose_alpha",
    "srank_from_alpha",
    "srank_from_nvector",
    "t_core",
    "t_cores",
    "theta_map",
]
