"""Truncated q-series with exact two-variable Laurent polynomial coefficients.

A :class:`Series` of order ``N`` knows the coefficients of ``q^0 .. q^(N-1)``
exactly; each coefficient is a :class:`LaurentPoly` in ``x`` and ``y``.
Products of Pochhammer symbols are built by multiplying or dividing by one
binomial ``1 - m q^e`` at a time, which is an in-place linear recurrence on
the coefficient list.

Roots of unity never appear numerically.  Vanishing at a primitive m-th root
of unity is tested by reducing exponents mod ``m`` and comparing the residue
class totals (see :func:`cyclic_reduce_check`).
"""

from __future__ import annotations

import math
import os
from typing import Callable, Iterable, Iterator, Mapping, NamedTuple, Sequence

from .partitions import DomainError, enumerate_partitions, partition_count

Exponent = tuple[int, int]

DEFAULT_ORDER = int(os.environ.get("RPL_DEFAULT_ORDER", "30"))
ENUMERATION_BUDGET = 60


class LaurentPoly:
    """Finitely supported map ``(x-exponent, y-exponent) -> int``.

    Zero coefficients are never stored.  Instances are treated as immutable.
    """

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[Exponent, int] | int | None = None):
        if terms is None:
            self._t: dict[Exponent, int] = {}
        elif isinstance(terms, int):
            self._t = {(0, 0): terms} if terms else {}
        else:
            self._t = {k: v for k, v in terms.items() if v}

    @classmethod
    def _wrap(cls, terms: dict[Exponent, int]) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._t = terms
        return obj

    @classmethod
    def monomial(cls, coeff: int = 1, x: int = 0, y: int = 0) -> "LaurentPoly":
        return cls({(x, y): coeff})

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._t)

    def items(self):
        return self._t.items()

    def __iter__(self):
        return iter(self._t)

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def __getitem__(self, key: Exponent) -> int:
        return self._t.get(key, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._t == other._t

    def __hash__(self) -> int:
        return hash(frozenset(self._t.items()))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._wrap({k: -v for k, v in self._t.items()})

    def __add__(self, other) -> "LaurentPoly":
        other = _as_poly(other)
        out = dict(self._t)
        _accumulate(out, other._t, 1)
        return LaurentPoly._wrap(out)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        other = _as_poly(other)
        out = dict(self._t)
        _accumulate(out, other._t, -1)
        return LaurentPoly._wrap(out)

    def __rsub__(self, other) -> "LaurentPoly":
        return _as_poly(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly._wrap({k: v * other for k, v in self._t.items()}) if other else LaurentPoly()
        other = _as_poly(other)
        out: dict[Exponent, int] = {}
        for (a, b), c in self._t.items():
            for (u, v), d in other._t.items():
                key = (a + u, b + v)
                s = out.get(key, 0) + c * d
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return LaurentPoly._wrap(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self._t) != 1:
                raise DomainError("only monomials have inverses")
            ((a, b), c), = self._t.items()
            if c not in (1, -1):
                raise DomainError("monomial coefficient must be a unit")
            return LaurentPoly({(a * k, b * k): c ** (-k)})
        out = LaurentPoly(1)
        for _ in range(k):
            out = out * self
        return out

    def substitute(self, variable: str, value: "LaurentPoly") -> "LaurentPoly":
        """Replace ``x`` (or ``y``) by a monomial, e.g. ``x -> x*y**2``."""
        if len(value) != 1:
            raise DomainError("can only substitute a monomial")
        ((u, v), c), = value.items()
        out: dict[Exponent, int] = {}
        for (a, b), coeff in self._t.items():
            e = a if variable == "x" else b
            if e < 0 and c not in (1, -1):
                raise DomainError("negative power of a non-unit monomial")
            base = (0, b) if variable == "x" else (a, 0)
            key = (base[0] + u * e, base[1] + v * e)
            val = coeff * (c ** abs(e))
            s = out.get(key, 0) + val
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return LaurentPoly._wrap(out)

    def evaluate(self, x: int = 1, y: int = 1) -> int:
        """Integer value at x, y in {1, -1} (other values need exact division)."""
        total = 0
        for (a, b), c in self._t.items():
            total += c * _unit_pow(x, a) * _unit_pow(y, b)
        return total

    def residue_totals(self, variable: str, modulus: int) -> list[int]:
        """Coefficient sums grouped by the variable's exponent mod ``modulus``."""
        totals = [0] * modulus
        idx = 0 if variable == "x" else 1
        for key, c in self._t.items():
            totals[key[idx] % modulus] += c
        return totals

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._t:
            return "0"
        pieces = []
        for (a, b), c in sorted(self._t.items()):
            mono = "*".join(
                s for s in (_var("x", a), _var("y", b)) if s
            )
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{c}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")


def _var(name: str, e: int) -> str:
    if e == 0:
        return ""
    return name if e == 1 else f"{name}^{e}"


def _unit_pow(base: int, e: int) -> int:
    if base == 1:
        return 1
    if base == -1:
        return -1 if e % 2 else 1
    if e < 0:
        raise DomainError("negative exponent of a non-unit")
    return base ** e


def _as_poly(value) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly(value)
    raise TypeError(f"cannot treat {value!r} as a Laurent polynomial")


def _accumulate(out: dict[Exponent, int], terms: Mapping[Exponent, int], scale: int) -> None:
    for k, v in terms.items():
        s = out.get(k, 0) + scale * v
        if s:
            out[k] = s
        else:
            out.pop(k, None)


X = LaurentPoly.monomial(1, 1, 0)
Y = LaurentPoly.monomial(1, 0, 1)
ONE = LaurentPoly(1)


class Series:
    """Power series in q truncated at ``order`` (exponents ``0 .. order-1``)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable = ()):
        if order < 1:
            raise DomainError("series order must be at least 1")
        cs = [_as_poly(c) for c in coeffs][:order]
        cs.extend(LaurentPoly() for _ in range(order - len(cs)))
        self.order = order
        self.coeffs: tuple[LaurentPoly, ...] = tuple(cs)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls(order, [ONE])

    @classmethod
    def from_terms(cls, order: int, terms: Iterable[tuple[int, LaurentPoly | int]]) -> "Series":
        """Sum of ``c * q^k`` over ``(k, c)`` pairs, dropping ``k >= order``."""
        acc: list[dict[Exponent, int]] = [{} for _ in range(order)]
        for k, c in terms:
            if 0 <= k < order:
                _accumulate(acc[k], _as_poly(c)._t, 1)
            elif k < 0:
                raise DomainError("negative q-exponent")
        return cls._from_dicts(order, acc)

    @classmethod
    def _from_dicts(cls, order: int, dicts: list[dict[Exponent, int]]) -> "Series":
        obj = cls.__new__(cls)
        obj.order = order
        obj.coeffs = tuple(LaurentPoly._wrap(d) for d in dicts)
        return obj

    def _dicts(self) -> list[dict[Exponent, int]]:
        return [dict(c._t) for c in self.coeffs]

    def __getitem__(self, k: int) -> LaurentPoly:
        return self.coeffs[k]

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise DomainError(f"cannot extend a series of order {self.order} to {order}")
        return Series(order, self.coeffs[:order])

    def _aligned(self, other: "Series") -> int:
        if not isinstance(other, Series):
            raise TypeError("expected a Series")
        return min(self.order, other.order)

    def __add__(self, other: "Series") -> "Series":
        n = self._aligned(other)
        return Series(n, [a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])])

    def __sub__(self, other: "Series") -> "Series":
        n = self._aligned(other)
        return Series(n, [a - b for a, b in zip(self.coeffs[:n], other.coeffs[:n])])

    def __neg__(self) -> "Series":
        return Series(self.order, [-c for c in self.coeffs])

    def __mul__(self, other) -> "Series":
        if isinstance(other, (int, LaurentPoly)):
            return Series(self.order, [c * other for c in self.coeffs])
        n = self._aligned(other)
        out: list[dict[Exponent, int]] = [{} for _ in range(n)]
        for i in range(n):
            a = self.coeffs[i]
            if not a:
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if b:
                    _accumulate(out[i + j], (a * b)._t, 1)
        return Series._from_dicts(n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Series":
        if k < 0:
            return self.inverse() ** (-k)
        out = Series.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "Series":
        """Multiplicative inverse; the constant term must be +1 or -1."""
        c0 = self.coeffs[0]
        if c0 not in (ONE, -ONE):
            raise DomainError("constant term must be a unit integer")
        sign = 1 if c0 == ONE else -1
        out: list[dict[Exponent, int]] = [{} for _ in range(self.order)]
        out[0] = {(0, 0): sign}
        for k in range(1, self.order):
            acc: dict[Exponent, int] = {}
            for j in range(1, k + 1):
                a = self.coeffs[j]
                if a and out[k - j]:
                    _accumulate(acc, (a * LaurentPoly._wrap(out[k - j]))._t, 1)
            out[k] = {key: -sign * v for key, v in acc.items()}
        return Series._from_dicts(self.order, out)

    def times_binomial(self, mono: LaurentPoly, e: int) -> "Series":
        """Multiply by ``1 - mono * q^e``."""
        return Series._from_dicts(self.order, _times_binomial(self._dicts(), mono, e))

    def over_binomial(self, mono: LaurentPoly, e: int) -> "Series":
        """Divide by ``1 - mono * q^e``."""
        return Series._from_dicts(self.order, _over_binomial(self._dicts(), mono, e))

    def map_coefficients(self, fn: Callable[[LaurentPoly], LaurentPoly]) -> "Series":
        return Series(self.order, [fn(c) for c in self.coeffs])

    def substitute(self, variable: str, value: LaurentPoly) -> "Series":
        return self.map_coefficients(lambda c: c.substitute(variable, value))

    def evaluate(self, x: int = 1, y: int = 1) -> list[int]:
        return [c.evaluate(x, y) for c in self.coeffs]

    def integer_coefficients(self) -> list[int]:
        """Coefficients of a series with no x or y dependence."""
        out = []
        for c in self.coeffs:
            if any(k != (0, 0) for k in c):
                raise DomainError("series has x or y dependence")
            out.append(c[0, 0])
        return out

    def sift(self, residue: int, step: int) -> "Series":
        """``sum_n c(step*n + residue) q^n`` as far as this series knows it."""
        order = (self.order - residue + step - 1) // step
        return Series(max(order, 1), [self.coeffs[step * n + residue] for n in range(order)])

    def shift(self, k: int) -> "Series":
        """Multiply by ``q^k`` (k >= 0), keeping the order."""
        return Series(self.order, [LaurentPoly()] * k + list(self.coeffs[: self.order - k]))

    def __repr__(self) -> str:
        shown = [f"({c})q^{k}" for k, c in enumerate(self.coeffs[:8]) if c]
        more = " + ..." if self.order > 8 else ""
        return f"Series(order={self.order}: {' + '.join(shown) or '0'}{more})"


def _mono_parts(mono: LaurentPoly | int) -> tuple[int, int, int]:
    mono = _as_poly(mono)
    if len(mono) != 1:
        raise DomainError(f"expected a monomial, got {mono}")
    ((a, b), c), = mono.items()
    return a, b, c


def _times_binomial(ds: list[dict[Exponent, int]], mono, e: int) -> list[dict[Exponent, int]]:
    if e <= 0:
        raise DomainError("binomial q-exponent must be positive")
    a, b, c = _mono_parts(mono)
    for k in range(len(ds) - 1, e - 1, -1):
        src = ds[k - e]
        if src:
            _accumulate(ds[k], {(u + a, v + b): w * c for (u, v), w in src.items()}, -1)
    return ds


def _over_binomial(ds: list[dict[Exponent, int]], mono, e: int) -> list[dict[Exponent, int]]:
    if e <= 0:
        raise DomainError("binomial q-exponent must be positive")
    a, b, c = _mono_parts(mono)
    for k in range(e, len(ds)):
        src = ds[k - e]
        if src:
            _accumulate(ds[k], {(u + a, v + b): w * c for (u, v), w in src.items()}, 1)
    return ds


def _factor_exponents(w: int, step: int, order: int) -> range:
    if w <= 0:
        raise DomainError(f"(a q^{w}; q^{step}) does not converge formally")
    if step <= 0:
        raise DomainError("step must be positive")
    return range(w, order, step)


def pochhammer_inf(mono: LaurentPoly | int, w: int, order: int, step: int = 1) -> Series:
    """``(mono * q^w; q^step)_inf`` truncated at ``order``."""
    ds: list[dict[Exponent, int]] = [{} for _ in range(order)]
    ds[0] = {(0, 0): 1}
    for e in _factor_exponents(w, step, order):
        _times_binomial(ds, mono, e)
    return Series._from_dicts(order, ds)


class Product:
    """Accumulates a quotient of Pochhammer symbols in place.

    Factors are applied in a fixed order, so the result does not depend on
    how the caller groups them.
    """

    def __init__(self, order: int, scale: LaurentPoly | int = 1):
        self.order = order
        self.ds: list[dict[Exponent, int]] = [{} for _ in range(order)]
        s = _as_poly(scale)
        self.ds[0] = dict(s._t)

    def times(self, mono, w: int, step: int, power: int = 1) -> "Product":
        """Multiply by ``(mono q^w; q^step)_inf ** power`` (power may be negative)."""
        for _ in range(abs(power)):
            for e in _factor_exponents(w, step, self.order):
                if power > 0:
                    _times_binomial(self.ds, mono, e)
                else:
                    _over_binomial(self.ds, mono, e)
        return self

    def over(self, mono, w: int, step: int, power: int = 1) -> "Product":
        return self.times(mono, w, step, -power)

    def series(self) -> Series:
        return Series._from_dicts(self.order, self.ds)


# -- lattice sums ---------------------------------------------------------------


def zero_sum_vectors(t: int, bound: int) -> Iterator[tuple[int, ...]]:
    """Every integer t-vector with zero sum and ``(t/2)|n|^2 + b.n < bound``.

    ``b = (0, 1, ..., t-1)``.  Coordinates are chosen one at a time.  Each
    contributes ``t x^2 + 2 i x`` to twice the form, and that term has a
    per-index minimum, so a branch is cut only when even the smallest
    completion reaches the bound.  The search is therefore exhaustive.
    """
    if t < 2:
        raise DomainError("t must be at least 2")
    limit = 2 * bound

    def term(i: int, x: int) -> int:
        return t * x * x + 2 * i * x

    mins = [min(term(i, x) for x in (-1, 0, 1)) for i in range(t)]
    tail_min = [sum(mins[i:]) for i in range(t + 1)]

    def rec(i: int, prefix: list[int], acc: int) -> Iterator[tuple[int, ...]]:
        if i == t - 1:
            x = -sum(prefix)
            if acc + term(i, x) < limit:
                yield (*prefix, x)
            return
        room = limit - acc - tail_min[i + 1]
        reach = 0
        while term(i, reach + 1) < room or term(i, -reach - 1) < room:
            reach += 1
        for x in range(-reach, reach + 1):
            v = term(i, x)
            if v < room:
                prefix.append(x)
                yield from rec(i + 1, prefix, acc + v)
                prefix.pop()

    yield from rec(0, [], 0)


def lattice_form(nvec: Sequence[int]) -> int:
    t = len(nvec)
    twice = t * sum(x * x for x in nvec) + 2 * sum(i * x for i, x in enumerate(nvec))
    return twice // 2


def unit_sum_alpha_vectors(bound: int) -> Iterator[tuple[int, ...]]:
    """Every alpha in Z^5 with sum 1 and Q(alpha) < ``bound``.

    Q(alpha) is half the sum of squared cyclic differences
    ``d_i = alpha_i - alpha_{i+1}``.  The differences sum to zero and
    determine alpha together with the unit sum, so enumerating ``d`` inside
    the ball ``|d|^2 < 2 * bound`` is exhaustive.
    """
    limit = 2 * bound
    r = math.isqrt(max(limit - 1, 0))

    def rec(prefix: list[int], acc: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == 4:
            d4 = -sum(prefix)
            if acc + d4 * d4 >= limit:
                return
            d0, d1, d2, d3 = prefix
            num = 1 + 4 * d0 + 3 * d1 + 2 * d2 + d3
            if num % 5:
                return
            a0 = num // 5
            a1 = a0 - d0
            a2 = a1 - d1
            a3 = a2 - d2
            a4 = a3 - d3
            yield (a0, a1, a2, a3, a4)
            return
        for d in range(-r, r + 1):
            if acc + d * d < limit:
                prefix.append(d)
                yield from rec(prefix, acc + d * d)
                prefix.pop()

    yield from rec([], 0)


def alpha_form(alpha: Sequence[int]) -> int:
    return sum(a * a for a in alpha) - sum(alpha[i] * alpha[(i + 1) % 5] for i in range(5))


# -- named closed forms -----------------------------------------------------------


def _rsgf_rhs(order: int) -> Series:
    # z -> x, y -> y
    return (
        Product(order)
        .times(-X * Y, 1, 2)
        .over(1, 4, 4)
        .over(X ** 2, 2, 4)
        .over(Y ** 2, 2, 4)
        .series()
    )


def _crankgf_rhs(order: int) -> Series:
    return Product(order).times(1, 1, 1).over(X, 1, 1).over(X ** -1, 1, 1).series()


def _lemma1_rhs(order: int) -> Series:
    xy2 = X * Y ** 2
    return (
        Product(order)
        .times(1, 4, 4)
        .times(-1, 1, 2)
        .over(X, 4, 4)
        .over(X ** -1, 4, 4)
        .over(xy2, 2, 4)
        .over(xy2 ** -1, 2, 4)
        .series()
    )


def _p02_rhs(order: int) -> Series:
    return Product(order).times(-1, 1, 2).over(1, 4, 4).over(-1, 2, 4, power=2).series()


def _srankprod_rhs(order: int) -> Series:
    y2 = Y ** 2
    return Product(order).times(-1, 1, 2).over(y2, 2, 4).over(y2 ** -1, 2, 4).series()


def _tcore_rhs(order: int, t: int = 5) -> Series:
    return Product(order).times(1, t, t, power=t).over(1, 1, 1).series()


def _theta_lattice(order: int, t: int = 5) -> Series:
    return Series.from_terms(order, ((lattice_form(n), 1) for n in zero_sum_vectors(t, order)))


def _alpha_lattice(order: int) -> Series:
    return Series.from_terms(order, ((alpha_form(a), 1) for a in unit_sum_alpha_vectors(order)))


def _rambest_rhs(order: int) -> Series:
    return Product(order, 5).times(1, 5, 5, power=5).over(1, 1, 1, power=6).series()


def _p5n4(order: int) -> Series:
    return Series(order, [partition_count(5 * n + 4) for n in range(order)])


def _jtp_lhs(order: int) -> Series:
    # sum over all n of x^n q^(n^2)
    r = math.isqrt(max(order - 1, 0))
    return Series.from_terms(order, ((n * n, LaurentPoly.monomial(1, n)) for n in range(-r, r + 1)))


def _jtp_rhs(order: int) -> Series:
    return Product(order).times(1, 2, 2).times(-X, 1, 2).times(-(X ** -1), 1, 2).series()


def _jtpa_lhs(order: int) -> Series:
    return Product(order).times(1, 4, 4).times(-1, 1, 2).series()


def _jtpa_mid(order: int) -> Series:
    return Product(order).times(1, 4, 4).times(-1, 3, 4).times(-1, 1, 4).series()


def _jtpa_quadratic(order: int) -> Series:
    r = math.isqrt(max(order, 1)) + 1
    return Series.from_terms(order, ((2 * n * n + n, 1) for n in range(-r, r + 1)))


def _triangular(order: int) -> Series:
    terms = []
    k = 0
    while k * (k + 1) // 2 < order:
        terms.append((k * (k + 1) // 2, 1))
        k += 1
    return Series.from_terms(order, terms)


def _jtpb_lhs(order: int) -> Series:
    # (1 - x^2) (q^2 x^2, q^2 / x^2, q^2; q^2)_inf
    x2 = X ** 2
    return Product(order, ONE - x2).times(x2, 2, 2).times(x2 ** -1, 2, 2).times(1, 2, 2).series()


def _jtpb_rhs(order: int) -> Series:
    terms = []
    m = 0
    while m * (m + 1) < order:
        sign = -1 if m % 2 else 1
        poly = LaurentPoly({(-2 * m, 0): sign, (2 * m + 2, 0): -sign})
        terms.append((m * (m + 1), poly))
        m += 1
    return Series.from_terms(order, terms)


def _gz1_product(order: int) -> Series:
    # (1 - x^2) (q^10; q^10)_inf g(x, 1, q); agrees with _gz1_sum at primitive 5th roots
    return _lemma1_rhs(order).substitute("y", ONE) * (ONE - X ** 2) * pochhammer_inf(1, 10, order, 10)


def _gz1_sum(order: int) -> Series:
    terms = []
    m = 0
    while m * (m + 1) < order:
        sign = -1 if m % 2 else 1
        k = 0
        while m * (m + 1) + k * (k + 1) // 2 < order:
            poly = LaurentPoly({(-2 * m, 0): sign, (2 * m + 2, 0): -sign})
            terms.append((m * (m + 1) + k * (k + 1) // 2, poly))
            k += 1
        m += 1
    return Series.from_terms(order, terms)


NAMED_SERIES: dict[str, Callable[..., Series]] = {
    "rsgf_rhs": _rsgf_rhs,
    "crankgf_rhs": _crankgf_rhs,
    "lemma1_rhs": _lemma1_rhs,
    "p02_rhs": _p02_rhs,
    "srankprod_rhs": _srankprod_rhs,
    "tcore_rhs": _tcore_rhs,
    "theta_lattice": _theta_lattice,
    "alpha_lattice": _alpha_lattice,
    "rambest_rhs": _rambest_rhs,
    "p5n4": _p5n4,
    "jtp_lhs": _jtp_lhs,
    "jtp_rhs": _jtp_rhs,
    "jtpa_lhs": _jtpa_lhs,
    "jtpa_mid": _jtpa_mid,
    "jtpa_quadratic": _jtpa_quadratic,
    "jtpa_rhs": _triangular,
    "jtpb_lhs": _jtpb_lhs,
    "jtpb_rhs": _jtpb_rhs,
    "gz1_product": _gz1_product,
    "gz1_sum": _gz1_sum,
}


def build_named_series(name: str, order: int, **params) -> Series:
    """Exact truncation of a named closed form, e.g. ``build_named_series("tcore_rhs", 40, t=7)``."""
    if order < 1:
        raise DomainError("order must be at least 1")
    try:
        builder = NAMED_SERIES[name]
    except KeyError:
        raise DomainError(f"unknown series {name!r}; known: {', '.join(sorted(NAMED_SERIES))}") from None
    return builder(order, **params)


# -- enumeration side --------------------------------------------------------------


StatSpec = str | Callable[[Sequence[int]], int] | None


def _stat(spec: StatSpec):
    if spec is None or callable(spec):
        return spec
    from .partitions import statistic_function

    return statistic_function(spec)


def enumerative_series(
    order: int,
    x: StatSpec = None,
    y: StatSpec = None,
    *,
    term: Callable[[Sequence[int]], LaurentPoly] | None = None,
    where: Callable[[Sequence[int]], bool] | None = None,
    budget: int = ENUMERATION_BUDGET,
) -> Series:
    """``sum q^|pi| x^x(pi) y^y(pi)`` over all partitions of weight < ``order``.

    ``x`` and ``y`` name statistics (``"stcrank"``, ``"srank"``, ``"odd"``,
    ...) or are callables.  ``term`` replaces the monomial by an arbitrary
    Laurent polynomial; ``where`` restricts the partitions summed over.
    """
    if order - 1 > budget:
        raise DomainError(f"enumeration up to weight {order - 1} exceeds the budget {budget}")
    fx, fy = _stat(x), _stat(y)
    acc: list[dict[Exponent, int]] = [{} for _ in range(order)]
    for n in range(order):
        bucket = acc[n]
        for p in enumerate_partitions(n):
            if where is not None and not where(p):
                continue
            if term is not None:
                _accumulate(bucket, term(p)._t, 1)
                continue
            key = (fx(p) if fx else 0, fy(p) if fy else 0)
            s = bucket.get(key, 0) + 1
            if s:
                bucket[key] = s
            else:
                bucket.pop(key, None)
    return Series._from_dicts(order, acc)


# -- comparisons -------------------------------------------------------------------


class Verdict(NamedTuple):
    ok: bool
    q_power: int | None = None
    detail: object = None

    def __bool__(self) -> bool:
        return self.ok


def assert_equal(lhs: Series, rhs: Series) -> Verdict:
    """Exact coefficientwise comparison; reports the lowest differing q-power.

    On failure ``detail`` is ``lhs[k] - rhs[k]``.
    """
    if lhs.order != rhs.order:
        raise DomainError(f"order mismatch: {lhs.order} vs {rhs.order}")
    for k, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
        if a != b:
            return Verdict(False, k, a - b)
    return Verdict(True)


def cyclic_reduce_check(
    s: Series,
    variable: str = "x",
    modulus: int = 5,
    progression: tuple[int, int] = (0, 1),
    *,
    twist: tuple[str, int] | None = None,
    split: tuple[str, int] | None = None,
) -> Verdict:
    """Does each coefficient vanish at every primitive ``modulus``-th root of unity?

    For each q-exponent ``k = r (mod step)``, the chosen variable is reduced
    mod ``modulus`` and the residue class totals are compared.  For prime
    ``modulus`` equal totals are exactly the condition that the coefficient
    vanishes at the primitive roots.

    ``twist=("y", 4)`` first sets the other variable to ``sqrt(-1)``.  Its
    exponents must then be even, so every term becomes +1 or -1.
    ``split=("y", 4)`` instead groups terms by the other variable's exponent
    mod 4 and requires equal totals inside every group.
    """
    r, step = progression
    idx = 0 if variable == "x" else 1
    for k in range(r % step, s.order, step):
        groups: dict[int, list[int]] = {}
        for key, c in s.coeffs[k].items():
            e = key[idx]
            other = key[1 - idx]
            if twist is not None:
                if twist[1] != 4 or other % 2:
                    raise DomainError("twist needs a 4th root and even exponents")
                c = -c if other % 4 == 2 else c
                g = 0
            elif split is not None:
                g = other % split[1]
            else:
                g = 0
            groups.setdefault(g, [0] * modulus)[e % modulus] += c
        if not groups:
            continue
        for g, totals in sorted(groups.items()):
            if len(set(totals)) != 1:
                return Verdict(False, k, {"class": g, "totals": totals})
    return Verdict(True)
