"""Catalog of machine checks.

Each entry names an identity, the formula it checks, the parameters it
accepts and a runner.  A runner returns quietly on success and raises
:class:`CheckFailed` with the first counterexample otherwise.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from . import cores, qseries
from .partitions import (
    Partition,
    ag_crank,
    conjugate,
    dyson_rank,
    enumerate_partitions,
    odd_parts,
    partition_count,
    srank,
)
from .qseries import LaurentPoly, ONE, assert_equal, build_named_series, cyclic_reduce_check
from .tables import GRID_9, ORBITS_9


class CheckFailed(AssertionError):
    def __init__(self, input: Any, expected: Any, actual: Any, note: str = ""):
        super().__init__(f"{note or 'mismatch'}: input={input!r} expected={expected!r} actual={actual!r}")
        self.input = input
        self.expected = expected
        self.actual = actual
        self.note = note


def _plain(value: Any) -> Any:
    """JSON-friendly copy: partitions become lists, LaurentPolys become strings."""
    if isinstance(value, Partition):
        return list(value)
    if isinstance(value, LaurentPoly):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [_plain(v) for v in value]
        return sorted(items, key=repr) if isinstance(value, (set, frozenset)) else items
    return value


@dataclass
class CheckReport:
    check_name: str
    params: dict
    verdict: str
    counterexample: dict | None = None
    elapsed: float = 0.0
    anchor: str = ""

    def __post_init__(self):
        if self.verdict not in ("pass", "fail"):
            raise ValueError(f"bad verdict {self.verdict!r}")
        if self.verdict == "fail" and self.counterexample is None:
            raise ValueError("a failing report needs a counterexample")

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "check": self.check_name,
            "anchor": self.anchor,
            "params": dict(sorted(self.params.items())),
            "verdict": self.verdict,
            "counterexample": self.counterexample,
        }
        if timings:
            out["elapsed"] = round(self.elapsed, 3)
        return out


@dataclass(frozen=True)
class Check:
    name: str
    anchor: str
    runner: Callable[..., None]
    params: dict = field(default_factory=dict)

    def run(self, **overrides) -> CheckReport:
        params = {k: overrides.get(k) if overrides.get(k) is not None else v for k, v in self.params.items()}
        start = time.perf_counter()
        try:
            self.runner(**params)
        except CheckFailed as exc:
            ce = {
                "input": _plain(exc.input),
                "expected": _plain(exc.expected),
                "actual": _plain(exc.actual),
            }
            if exc.note:
                ce["note"] = exc.note
            verdict = "fail"
        else:
            ce = None
            verdict = "pass"
        return CheckReport(self.name, params, verdict, ce, time.perf_counter() - start, self.anchor)


CATALOG: dict[str, Check] = {}


def check(name: str, anchor: str, **params):
    def register(fn):
        CATALOG[name] = Check(name, anchor, fn, params)
        return fn

    return register


def expect(value, expected, input, note: str = "") -> None:
    if value != expected:
        raise CheckFailed(input, expected, value, note)


def _weights(max_n: int, residue: int, modulus: int) -> Iterable[int]:
    return range(residue, max_n + 1, modulus)


# -- tables -------------------------------------------------------------------


@check("grid9", "the 30 partitions of 9 by srank mod 4 and stcrank mod 5 match the reference grid")
def check_grid9():
    from .stanley import stcrank

    for p in enumerate_partitions(9):
        cell = (srank(p) % 4, stcrank(p) % 5)
        if p not in GRID_9.get(cell, ()):
            placed = next(k for k, v in GRID_9.items() if p in v)
            raise CheckFailed(p, list(placed), list(cell), "cell (srank mod 4, stcrank mod 5)")
    expect(sum(len(v) for v in GRID_9.values()), 30, "table size")


@check("orbits9", "orbits of the srank-preserving 5-core crank operator on the partitions of 9 match the reference rows")
def check_orbits9():
    got = cores.orbit_table(9, "srank")
    reference = {row for _, row in ORBITS_9}
    for orb in got:
        if orb not in reference:
            raise CheckFailed(orb[0], "a reference orbit row", orb, "orbit not in the reference rows")
    for cls, row in ORBITS_9:
        for k, p in enumerate(row):
            expect(cores.five_core_crank(p), k, p, "5-core crank column")
            expect(srank(p) % 4, cls, p, "srank class")
    expect(len(got), len(ORBITS_9), 9, "number of orbits")


# -- partitions ---------------------------------------------------------------


@check("enumeration", "number of partitions enumerated = pentagonal-recurrence p(n)", max_n=60)
def check_enumeration(max_n):
    for n in range(max_n + 1):
        count = sum(1 for _ in enumerate_partitions(n))
        expect(count, partition_count(n), n, "p(n)")


@check("conjugation", "conjugation is an involution; srank(pi) even and = -srank(pi')", max_n=30)
def check_conjugation(max_n):
    for n in range(max_n + 1):
        for p in enumerate_partitions(n):
            c = conjugate(p)
            expect(conjugate(c), p, p, "double conjugate")
            s = srank(p)
            expect(s % 2, 0, p, "srank parity")
            expect(srank(c), -s, p, "srank of conjugate")
            expect(odd_parts(c) - odd_parts(conjugate(c)), -s, p, "srank via conjugate")
            if c == p:
                expect(s, 0, p, "self-conjugate srank")


@check("abacus_core", "abacus t-core = rim-hook-stripping t-core, t in {2,3,5}", max_n=20)
def check_abacus_core(max_n):
    for t in (2, 3, 5):
        for n in range(max_n + 1):
            for p in enumerate_partitions(n):
                core = cores.t_core(p, t)
                expect(core, cores.rim_hook_core(p, t), (p, t), "t-core")
                expect(cores.is_t_core(p, t), core == p, (p, t), "is_t_core")


# -- stcrank --------------------------------------------------------------------


@check("bijection1", "pi -> (pi1, pi2): |pi| = 4|pi1| + |pi2|, srank(pi) = srank(pi2), invertible", max_n=30)
def check_bijection1(max_n):
    from .stanley import bijection1, bijection1_inverse, has_repeated_even_part

    for n in range(max_n + 1):
        for p in enumerate_partitions(n):
            pi1, pi2 = bijection1(p)
            expect(4 * sum(pi1) + sum(pi2), n, p, "weight")
            expect(srank(pi2), srank(p), p, "srank")
            expect(has_repeated_even_part(pi2), False, p, "pi2 even parts distinct")
            expect(bijection1_inverse(pi1, pi2), p, p, "round trip")


@check("bijection2", "type A <-> type B bijection preserving weight and srank", max_n=30)
def check_bijection2(max_n):
    from .stanley import bijection2, bijection2_inverse, is_type_a, is_type_b

    for n in range(max_n + 1):
        type_a, type_b = [], set()
        for p in enumerate_partitions(n):
            a, b = is_type_a(p), is_type_b(p)
            if a and b:
                raise CheckFailed(p, "one type", "both", "types A and B overlap")
            if a:
                type_a.append(p)
            if b:
                type_b.add(p)
        images = set()
        for p in type_a:
            q = bijection2(p)
            expect(is_type_b(q), True, p, "image is type B")
            expect(sum(q), n, p, "weight")
            expect(srank(q), srank(p), p, "srank")
            expect(bijection2_inverse(q), p, p, "round trip")
            images.add(q)
        expect(len(images), len(type_a), n, "injective")
        expect(images, type_b, n, "onto type B")


@check("stcrank_types", "stcrank = -1 + srank/2 on type A, 1 + srank/2 on type B", max_n=30)
def check_stcrank_types(max_n):
    from .stanley import is_type_a, is_type_b, stcrank

    for n in range(max_n + 1):
        for p in enumerate_partitions(n):
            if is_type_a(p):
                expect(stcrank(p), -1 + srank(p) // 2, p, "type A stcrank")
            elif is_type_b(p):
                expect(stcrank(p), 1 + srank(p) // 2, p, "type B stcrank")


@check("theorem1", "P_i(k,5,5n+4) = p_i(5n+4)/5 for i in {0,2}, k in 0..4", max_n=49)
def check_theorem1(max_n):
    from .stanley import refined_counts

    for n in _weights(max_n, 4, 5):
        counts = refined_counts(n, 5)
        for i in (0, 2):
            p_i = sum(counts[i, k] for k in range(5))
            for k in range(5):
                expect(5 * counts[i, k], p_i, (n, i, k), "5 P_i(k,5,n) = p_i(n)")


# -- congruences ------------------------------------------------------------------


def _equidistributed(stat, modulus: int, residue: int, max_n: int, name: str) -> None:
    for n in _weights(max_n, residue, modulus):
        counts = [0] * modulus
        for p in enumerate_partitions(n):
            counts[stat(p) % modulus] += 1
        expect(counts, [partition_count(n) // modulus] * modulus, (name, modulus, n), "residue counts")


@check("ram5", "p(5n+4) = 0 mod 5", max_n=49)
def check_ram5(max_n):
    for n in _weights(max_n, 4, 5):
        expect(partition_count(n) % 5, 0, n, "p(n) mod 5")
        expect(sum(1 for _ in enumerate_partitions(n)) % 5, 0, n, "enumerated count mod 5")


@check("ram7", "p(7n+5) = 0 mod 7", max_n=47)
def check_ram7(max_n):
    for n in _weights(max_n, 5, 7):
        expect(partition_count(n) % 7, 0, n, "p(n) mod 7")


@check("ram11", "p(11n+6) = 0 mod 11", max_n=39)
def check_ram11(max_n):
    for n in _weights(max_n, 6, 11):
        expect(partition_count(n) % 11, 0, n, "p(n) mod 11")


@check("andrefine", "p_0(5n+4) = p_2(5n+4) = 0 mod 5 and p_2(5n+4) = 0 mod 10", max_n=49)
def check_andrefine(max_n):
    for n in _weights(max_n, 4, 5):
        classes = [0] * 4
        for p in enumerate_partitions(n):
            classes[srank(p) % 4] += 1
        expect(classes[1] + classes[3], 0, n, "odd srank classes")
        expect(classes[0] + classes[2], partition_count(n), n, "p = p_0 + p_2")
        expect(classes[0] % 5, 0, n, "p_0 mod 5")
        expect(classes[2] % 10, 0, n, "p_2 mod 10")


@check("dyson", "rank mod 5 equidistributes on 5n+4, rank mod 7 on 7n+5", max_n=49)
def check_dyson(max_n):
    _equidistributed(dyson_rank, 5, 4, max_n, "rank")
    _equidistributed(dyson_rank, 7, 5, min(max_n, 47), "rank")


@check("agcrank", "crank mod 5, 7, 11 equidistributes on 5n+4, 7n+5, 11n+6", max_n=49)
def check_agcrank(max_n):
    _equidistributed(ag_crank, 5, 4, max_n, "crank")
    _equidistributed(ag_crank, 7, 5, min(max_n, 47), "crank")
    _equidistributed(ag_crank, 11, 6, min(max_n, 39), "crank")


@check("crank_mod10", "M(2k+a,10,5n+4) = M(a,2,5n+4)/5 and M(a,2,5n+4) = 0 mod 5", max_n=49)
def check_crank_mod10(max_n):
    for n in _weights(max_n, 4, 5):
        counts = [0] * 10
        for p in enumerate_partitions(n):
            counts[ag_crank(p) % 10] += 1
        for a in (0, 1):
            half = sum(counts[a::2])
            expect(half % 5, 0, (n, a), "M(a,2,n) mod 5")
            for k in range(5):
                expect(5 * counts[2 * k + a], half, (n, a, k), "5 M(2k+a,10,n) = M(a,2,n)")


# -- series identities ---------------------------------------------------------------


def _series_equal(lhs, rhs, name: str) -> None:
    verdict = assert_equal(lhs, rhs)
    if not verdict:
        k = verdict.q_power
        raise CheckFailed(f"{name}: coefficient of q^{k}", rhs[k], lhs[k], "lhs - rhs = " + str(verdict.detail))


def _crank_term(p) -> LaurentPoly:
    from .stanley import crank_weight

    return LaurentPoly({(e, 0): c for e, c in crank_weight(p).items()})


@check("stcrank_product", "sum q^|pi| x^stcrank y^srank = (q^4;q^4)(-q;q^2)/(q^4x,q^4/x,q^2y^2x,q^2/(y^2x);q^4)", order=25)
def check_stcrank_product(order):
    g = qseries.enumerative_series(order, "stcrank", "srank")
    _series_equal(g, build_named_series("lemma1_rhs", order), "g(x,y,q)")


@check("rsgf", "sum S(n,r,s) q^n z^r y^s = (-zyq;q^2)/((q^4;q^4)(z^2q^2;q^4)(y^2q^2;q^4))", order=25)
def check_rsgf(order):
    lhs = qseries.enumerative_series(order, "odd", "odd_conj")
    _series_equal(lhs, build_named_series("rsgf_rhs", order), "G(z,y,q)")


@check("crankgf", "1 + (x + 1/x - 1)q + sum M~(m,n) x^m q^n = (q;q)/((xq;q)(q/x;q))", order=25)
def check_crankgf(order):
    lhs = qseries.enumerative_series(order, term=_crank_term)
    _series_equal(lhs, build_named_series("crankgf_rhs", order), "crank series")


@check("p02prod", "sum (p_0(n) - p_2(n)) q^n = (-q;q^2)/((q^4;q^4)(-q^2;q^4)^2)", order=30)
def check_p02prod(order):
    lhs = qseries.enumerative_series(order, term=lambda p: LaurentPoly(1 if srank(p) % 4 == 0 else -1))
    _series_equal(lhs, build_named_series("p02_rhs", order), "p_0 - p_2")


@check("srankprodid", "sum over pi with distinct even parts of q^|pi| y^srank = (-q;q^2)/((y^2q^2;q^4)(q^2/y^2;q^4))", order=30)
def check_srankprodid(order):
    from .stanley import has_repeated_even_part

    lhs = qseries.enumerative_series(order, y="srank", where=lambda p: not has_repeated_even_part(p))
    _series_equal(lhs, build_named_series("srankprod_rhs", order), "srank series")


@check("stcrankgfid", "sum q^|pi| x^stcrank y^srank = (sum q^4|pi1| w(x,pi1)) (sum q^|pi2| (xy^2)^(srank/2))", order=25)
def check_stcrankgfid(order):
    from .stanley import has_repeated_even_part, half_srank

    lhs = qseries.enumerative_series(order, "stcrank", "srank")
    crank_part = qseries.Series.from_terms(
        order,
        ((4 * n, _crank_term(p)) for n in range((order + 3) // 4) for p in enumerate_partitions(n)),
    )
    srank_part = qseries.enumerative_series(
        order,
        term=lambda p: LaurentPoly({(half_srank(p), 2 * half_srank(p)): 1}),
        where=lambda p: not has_repeated_even_part(p),
    )
    _series_equal(lhs, crank_part * srank_part, "factored g(x,y,q)")


@check("jtp", "sum z^n q^(n^2) = (q^2,-qz,-q/z;q^2)", order=100)
def check_jtp(order):
    _series_equal(build_named_series("jtp_lhs", order), build_named_series("jtp_rhs", order), "triple product")


@check("jtpa", "(q^4;q^4)(-q;q^2) = (q^4,-q^3,-q;q^4) = sum q^(2n^2+n) = sum q^T_k", order=200)
def check_jtpa(order):
    rhs = build_named_series("jtpa_rhs", order)
    for name in ("jtpa_lhs", "jtpa_mid", "jtpa_quadratic"):
        _series_equal(build_named_series(name, order), rhs, name)


@check("jtpb", "(1 - x^2)(q^2x^2,q^2/x^2,q^2;q^2) = sum (-1)^m q^(2T_m) x^(-2m) (1 - x^(4m+2))", order=100)
def check_jtpb(order):
    _series_equal(build_named_series("jtpb_lhs", order), build_named_series("jtpb_rhs", order), "jtpb")


@check("gz1id", "g(xi,1,q) (q^10;q^10)(1 - xi^2) = sum (-1)^m q^(2T_m+T_k) xi^(-2m)(1 - xi^(4m+2)) at 5th roots xi", order=40)
def check_gz1id(order):
    diff = build_named_series("gz1_product", order) - build_named_series("gz1_sum", order)
    verdict = cyclic_reduce_check(diff, "x", 5)
    if not verdict:
        raise CheckFailed(f"q^{verdict.q_power}", "equal residue totals", verdict.detail)


@check("tcore_lattice", "(q^t;q^t)^t/(q;q) = sum over zero-sum n of q^((t/2)|n|^2 + b.n), t in {2,3,5,7}", order=40)
def check_tcore_lattice(order):
    for t in (2, 3, 5, 7):
        _series_equal(
            build_named_series("theta_lattice", order, t=t),
            build_named_series("tcore_rhs", order, t=t),
            f"t={t}",
        )


@check("coresift5", "sum a_5(5n+4) q^(n+1) = sum over alpha.1 = 1 of q^Q(alpha); same with p(5n+4) and 1/(q)^5", order=30)
def check_coresift5(order):
    lattice = build_named_series("alpha_lattice", order)
    a5 = build_named_series("tcore_rhs", 5 * order + 5, t=5).sift(4, 5).truncate(order).shift(1)
    _series_equal(lattice, a5, "a_5(5n+4)")
    p5 = build_named_series("p5n4", order).shift(1)
    _series_equal(lattice * qseries.pochhammer_inf(1, 1, order) ** -5, p5, "p(5n+4)")


@check("rambest", "sum p(5n+4) q^n = 5 (q^5;q^5)^5/(q;q)^6", order=40)
def check_rambest(order):
    target = build_named_series("p5n4", order)
    _series_equal(build_named_series("rambest_rhs", order), target, "product")
    # the same numbers from 5-core counts: p(5n+4) = 5 sum a_5(m) [q^(n-m)] 1/(q)^5
    a5 = build_named_series("theta_lattice", order, t=5)
    _series_equal(a5 * qseries.pochhammer_inf(1, 1, order) ** -5 * 5, target, "5 a_5 / (q)^5")


@check("coeffz1", "coefficient of q^(5n+4) in g(xi,1,q) vanishes at primitive 5th roots xi", order=30)
def check_coeffz1(order):
    g = build_named_series("lemma1_rhs", order).substitute("y", ONE)
    verdict = cyclic_reduce_check(g, "x", 5, (4, 5))
    if not verdict:
        raise CheckFailed(f"q^{verdict.q_power}", "equal residue totals", verdict.detail)


@check("coeffzi", "coefficient of q^(5n+4) in g(xi,i,q) vanishes; each srank class splits evenly", order=30)
def check_coeffzi(order):
    g = qseries.enumerative_series(order, "stcrank", "srank")
    for kwargs in ({"twist": ("y", 4)}, {"split": ("y", 4)}):
        verdict = cyclic_reduce_check(g, "x", 5, (4, 5), **kwargs)
        if not verdict:
            raise CheckFailed(f"q^{verdict.q_power} {kwargs}", "equal residue totals", verdict.detail)


# -- 5-cores --------------------------------------------------------------------------


@check("phi_roundtrip", "Littlewood decomposition and n-vector bijection invert; weight formulas hold", max_n=25)
def check_phi_roundtrip(max_n):
    for t in (2, 3, 5):
        for n in range(max_n + 1):
            for p in enumerate_partitions(n):
                cq = cores.littlewood_decompose(p, t)
                expect(cq.weight, n, (p, t), "|core| + t sum |q_i|")
                expect(cores.is_t_core(cq.core, t), True, (p, t), "core is a t-core")
                expect(cores.littlewood_compose(cq), p, (p, t), "compose(decompose)")
    for t in (2, 3, 5, 7):
        for nvec in qseries.zero_sum_vectors(t, 41):
            core = cores.phi2_inverse(nvec)
            expect(sum(core), cores.nvector_weight(nvec), nvec, "core weight")
            expect(cores.phi2(core, t), nvec, nvec, "phi2(phi2_inverse)")
    for n in range(21):
        brute = sorted((p for p in enumerate_partitions(n) if cores.rim_hook_core(p, 5) == p), reverse=True)
        expect(list(cores.t_cores(n, 5)), brute, n, "5-cores by lattice vs brute force")


@check("alpha_roundtrip", "alpha <-> n change of variables; |core| = 5Q(alpha) - 1", max_n=8)
def check_alpha_roundtrip(max_n):
    for alpha in qseries.unit_sum_alpha_vectors(max_n + 1):
        nvec = cores.n_from_alpha(alpha)
        expect(cores.alpha_from_n(nvec), alpha, alpha, "round trip")
        expect(sum(i * x for i, x in enumerate(nvec)) % 5, 4, alpha, "b.n mod 5")
        expect(sum(cores.phi2_inverse(nvec)), 5 * cores.alpha_quadratic(alpha) - 1, alpha, "weight")


@check("crank_forms", "1 + sum i a_i = 2(1 + n0 - n1 - n2 + n3) = 2 + sum i r_(2-i) mod 5", max_n=49)
def check_crank_forms(max_n):
    seen: dict[Partition, tuple] = {}
    for n in _weights(max_n, 4, 5):
        for p in enumerate_partitions(n):
            core = cores.t_core(p, 5)
            if core not in seen:
                seen[core] = cores.five_core_crank_forms(core)
                a, b, c = seen[core]
                if not a == b == c:
                    raise CheckFailed(core, "three equal residues", seen[core])


@check("orbits_plain", "alpha-cycling orbits: size 5, 5-core crank 0..4, p(5n+4)/5 orbits", max_n=49)
def check_orbits_plain(max_n):
    _check_orbits(max_n, "plain")


@check("orbits_srank", "srank-preserving orbits: size 5, crank 0..4, constant srank mod 4, p_i(5n+4)/5 orbits", max_n=49)
def check_orbits_srank(max_n):
    _check_orbits(max_n, "srank")


def _check_orbits(max_n: int, variant: str) -> None:
    for n in _weights(max_n, 4, 5):
        try:
            orbits = cores.orbit_table(n, variant)
        except AssertionError as exc:
            raise CheckFailed(n, "closed orbits", str(exc)) from None
        per_class = {0: 0, 2: 0}
        for orb in orbits:
            expect(len(set(orb)), 5, orb[0], "distinct members")
            expect([cores.five_core_crank(p) for p in orb], [0, 1, 2, 3, 4], orb[0], "crank residues")
            expect(len({sum(p) for p in orb}), 1, orb[0], "weight")
            classes = {srank(p) % 4 for p in orb}
            if variant == "srank":
                expect(len(classes), 1, orb[0], "srank class constant")
                per_class[classes.pop()] += 1
        expect(5 * len(orbits), partition_count(n), n, "orbit count")
        if variant == "srank":
            p_i = {0: 0, 2: 0}
            for p in enumerate_partitions(n):
                p_i[srank(p) % 4] += 1
            for i in (0, 2):
                expect(5 * per_class[i], p_i[i], (n, i), "orbits per srank class")
        if n <= 19:
            # the coordinate action agrees with composing the inverse bijection
            for orb in orbits:
                for k in range(5):
                    expect(cores.orbit_op(orb[k], variant), orb[(k + 1) % 5], orb[k], "orbit_op")


@check("corerel", "a_5(5n+4) = 5 a_5(n) and a_5^j(5n+4) = a_5(5n+4)/5", max_n=40)
def check_corerel(max_n):
    for n in range(max_n + 1):
        big = 5 * n + 4
        expect(cores.core_counts(big, 5), 5 * cores.core_counts(n, 5), n, "a_5(5n+4) = 5 a_5(n)")
        for j in range(5):
            expect(5 * cores.core_counts(big, 5, crank=j), cores.core_counts(big, 5), (n, j), "a_5^j")


@check("theta", "theta: 5-cores of n -> crank-0 5-cores of 5n+4, bijective and srank-preserving mod 4", max_n=30)
def check_theta(max_n):
    for n in range(max_n + 1):
        images = []
        for core in cores.t_cores(n, 5):
            img = cores.theta_map(core)
            expect(sum(img), 5 * n + 4, core, "weight")
            expect(cores.is_t_core(img, 5), True, core, "5-core")
            expect(cores.five_core_crank(img), 0, core, "crank")
            expect(srank(img) % 4, srank(core) % 4, core, "srank mod 4")
            nv = cores.phi2(core, 5)
            nv2 = cores.theta_nvector(nv)
            lhs = sum((x + i) ** 3 - (y + i) ** 3 for i, (x, y) in enumerate(zip(nv, nv2)))
            n0, n1, n2, n3, _ = nv
            mid = 2 * (
                n0 * n2 * (n0 + n2) + n1 * n3 * (n1 + n3) + n2 * n3 * (n2 + n3)
                + n1 * (n1 + 1) + n2 * (n2 + 1) + n3 * (n3 + 1)
            )
            expect((lhs - mid) % 4, 0, nv, "cube difference = simplified form mod 4")
            expect(mid % 4, 0, nv, "simplified form = 0 mod 4")
            images.append(img)
        target = {c for c in cores.t_cores(5 * n + 4, 5) if cores.five_core_crank(c) == 0}
        expect(len(set(images)), len(images), n, "injective")
        expect(set(images), target, n, "onto crank-0 5-cores")


@check("refine", "a_5,i^j(5n+4) = a_5,i(5n+4)/5, a_5,i(n) = a_5,i^0(5n+4), a_5,i(5n+4) = 5 a_5,i(n)", max_n=30)
def check_refine(max_n):
    cc = cores.core_counts
    for n in range(max_n + 1):
        big = 5 * n + 4
        for i in (0, 2):
            total = cc(big, 5, srank_class=i)
            for j in range(5):
                expect(5 * cc(big, 5, crank=j, srank_class=i), total, (n, i, j), "a_5,i^j(5n+4)")
            expect(cc(big, 5, crank=0, srank_class=i), cc(n, 5, srank_class=i), (n, i), "a_5,i^0(5n+4)")
            expect(total, 5 * cc(n, 5, srank_class=i), (n, i), "a_5,i(5n+4)")


@check("a50forms", "a_5,0(4n) = a_5(4n), a_5,0(4n+1) = a_5(4n+1), a_5,0(4n+2) = 0, a_5,0(4n+3) = a_5(n)", max_n=60)
def check_a50forms(max_n):
    cc = cores.core_counts
    for m in range(max_n + 1):
        n, r = divmod(m, 4)
        expected = {0: cc(m, 5), 1: cc(m, 5), 2: 0, 3: cc(n, 5)}[r]
        expect(cc(m, 5, srank_class=0), expected, m, f"a_5,0(4n+{r})")
    for n in range((max_n - 3) // 4 + 1):
        images = set()
        for core in cores.t_cores(n, 5):
            img = cores.quadrupling_map(core)
            expect(sum(img), 4 * n + 3, core, "weight 4n+3")
            expect(cores.is_t_core(img, 5), True, core, "5-core")
            expect(srank(img) % 4, 0, core, "srank = 0 mod 4")
            images.add(img)
        target = {c for c in cores.t_cores(4 * n + 3, 5) if srank(c) % 4 == 0}
        expect(len(images), cc(n, 5), n, "injective")
        expect(images, target, n, "onto srank-0 5-cores of 4n+3")


@check("elegant1", "srank(5-core) = sum (n_i + i)^3 mod 4; alpha form when |core| = 4 mod 5", max_n=40)
def check_elegant1(max_n):
    for n in range(max_n + 1):
        for core in cores.t_cores(n, 5):
            nv = cores.phi2(core, 5)
            expect(cores.srank_from_nvector(nv), srank(core) % 4, core, "n-vector formula")
            if n % 5 == 4:
                expect(cores.srank_from_alpha(cores.alpha_from_n(nv)), srank(core) % 4, core, "alpha formula")


@check("elegant2", "srank(pi) = srank(core) + sum srank(q_i) + 2 sum |q_i|(n_i + i) mod 4", max_n=25)
def check_elegant2(max_n):
    for n in range(max_n + 1):
        for p in enumerate_partitions(n):
            expect(cores.srank_decompose(p), srank(p) % 4, p, "n-vector form")
            if n % 5 == 4:
                expect(cores.srank_decompose_alpha(p), srank(p) % 4, p, "alpha form")


def run_checks(names: list[str], jobs: int = 1, stop_on_failure: bool = False, **overrides) -> list[CheckReport]:
    """Run the named checks; reports come back in the order requested.

    With ``stop_on_failure`` the list ends at the first failing report.
    """
    if jobs <= 1 or len(names) <= 1:
        reports = []
        for name in names:
            reports.append(CATALOG[name].run(**overrides))
            if stop_on_failure and not reports[-1].passed:
                break
        return reports
    from concurrent.futures import ProcessPoolExecutor

    reports = []
    pool = ProcessPoolExecutor(max_workers=jobs)
    try:
        for report in pool.map(_run_one, names, [overrides] * len(names)):
            reports.append(report)
            if stop_on_failure and not report.passed:
                break
    finally:
        pool.shutdown(wait=True, cancel_futures=True)
    return reports


def _run_one(name: str, overrides: dict) -> CheckReport:
    return CATALOG[name].run(**overrides)
