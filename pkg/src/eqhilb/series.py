"""Truncated power series in T over Z[L] and the power structure on them.

A series with unit constant term factors uniquely as

    A(T) = prod_{i>=1, j>=0} (1 - L^j T^i)^(-k_ij),   k_ij in Z,

and the exponents k_ij form its Log.  Raising A to a class m in Z[L] is done
by multiplying Log A by m and exponentiating back; this is the power
structure determined by (1 - T)^(-L^s) = (1 - L^s T)^(-1).
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Mapping, Sequence

from .motivic import ONE, ZERO, MotivicClass, as_class

__all__ = [
    "NonUnitConstantTerm",
    "MotivicSeries",
    "LogSeries",
    "series_mul",
    "series_inverse",
    "series_substitute_power",
    "series_log",
    "series_exp",
    "series_pow",
    "kapranov_zeta",
    "series_euler",
]


class NonUnitConstantTerm(ValueError):
    """The operation needs a series whose constant term is 1."""


class MotivicSeries:
    """A power series ``sum_{k=0}^{order} c_k T^k`` with c_k in Z[L].

    ``order`` is the inclusive truncation bound.  Binary operations between
    series of different orders truncate to the smaller one.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [as_class(c) for c in coeffs]
        if any(c is NotImplemented for c in cs):
            raise TypeError("series coefficients must be MotivicClass or int")
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = cs[: order + 1]
        cs.extend([ZERO] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls, order: int) -> MotivicSeries:
        return cls([ONE], order)

    @classmethod
    def from_terms(cls, terms: Mapping[int, MotivicClass | int], order: int) -> MotivicSeries:
        """Series from a sparse ``{power of T: coefficient}`` map."""
        cs = [ZERO] * (order + 1)
        for k, c in terms.items():
            if 0 <= k <= order:
                cs[k] = cs[k] + as_class(c)
        return cls(cs, order)

    def __getitem__(self, k: int) -> MotivicClass:
        return self.coeffs[k]

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> MotivicSeries:
        return MotivicSeries(self.coeffs[: order + 1], min(order, self.order))

    def has_unit_constant(self) -> bool:
        return self.coeffs[0] == ONE

    def __eq__(self, other):
        if not isinstance(other, MotivicSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __mul__(self, other):
        if isinstance(other, MotivicSeries):
            return series_mul(self, other)
        other = as_class(other)
        if other is NotImplemented:
            return NotImplemented
        return MotivicSeries([c * other for c in self.coeffs], self.order)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __add__(self, other):
        if not isinstance(other, MotivicSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return MotivicSeries([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], n)

    def __neg__(self):
        return MotivicSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        if not isinstance(other, MotivicSeries):
            return NotImplemented
        return self + (-other)

    def __pow__(self, m):
        return series_pow(self, m)

    def inverse(self) -> MotivicSeries:
        return series_inverse(self)

    def substitute_power(self, s: int) -> MotivicSeries:
        return series_substitute_power(self, s)

    def log(self) -> LogSeries:
        return series_log(self)

    def euler(self) -> list:
        return series_euler(self)

    def lines(self) -> list:
        return [f"T^{k}: {c}" for k, c in enumerate(self.coeffs)]

    def __str__(self):
        return "\n".join(self.lines())

    def __repr__(self):
        return f"MotivicSeries(order={self.order}, coeffs={[str(c) for c in self.coeffs]})"


class LogSeries:
    """Sparse exponent table ``{(i, j): k_ij}`` of prod (1 - L^j T^i)^(-k_ij)."""

    __slots__ = ("order", "terms")

    def __init__(self, terms: Mapping[tuple, int] | None = None, order: int = 0):
        if order < 0:
            raise ValueError("order must be nonnegative")
        t = {}
        for (i, j), k in (terms or {}).items():
            if i < 1 or j < 0:
                raise ValueError(f"bad Log index ({i}, {j})")
            if i > order or not k:
                continue
            t[(i, j)] = t.get((i, j), 0) + int(k)
        self.order = order
        self.terms = {key: k for key, k in t.items() if k}

    @classmethod
    def from_classes(cls, coeffs: Mapping[int, MotivicClass], order: int) -> LogSeries:
        """From ``{i: sum_j k_ij L^j}``, i.e. the Log written as a series in T."""
        return cls(
            {(i, j): k for i, c in coeffs.items() for j, k in as_class(c).items()},
            order,
        )

    def coefficient(self, i: int) -> MotivicClass:
        """The polynomial sum_j k_ij L^j in front of T^i."""
        return MotivicClass({j: k for (ii, j), k in self.terms.items() if ii == i})

    def as_series(self) -> MotivicSeries:
        """Log written as a plain series ``sum_i (sum_j k_ij L^j) T^i``."""
        return MotivicSeries([self.coefficient(i) for i in range(self.order + 1)], self.order)

    def support(self) -> list:
        return sorted({i for i, _ in self.terms})

    def truncate(self, order: int) -> LogSeries:
        return LogSeries(self.terms, min(order, self.order))

    def __mul__(self, m) -> LogSeries:
        m = as_class(m)
        if m is NotImplemented:
            return NotImplemented
        out: dict = {}
        for (i, j), k in self.terms.items():
            for s, c in m.items():
                key = (i, j + s)
                out[key] = out.get(key, 0) + c * k
        return LogSeries(out, self.order)

    __rmul__ = __mul__

    def __add__(self, other: LogSeries) -> LogSeries:
        if not isinstance(other, LogSeries):
            return NotImplemented
        out = dict(self.terms)
        for key, k in other.terms.items():
            out[key] = out.get(key, 0) + k
        return LogSeries(out, min(self.order, other.order))

    def __neg__(self):
        return LogSeries({key: -k for key, k in self.terms.items()}, self.order)

    def __eq__(self, other):
        if not isinstance(other, LogSeries):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def exp(self) -> MotivicSeries:
        return series_exp(self)

    def lines(self) -> list:
        return [f"T^{i}: {self.coefficient(i)}" for i in self.support()]

    def __str__(self):
        return "\n".join(self.lines())

    def __repr__(self):
        return f"LogSeries(order={self.order}, terms={self.terms})"


def series_mul(a: MotivicSeries, b: MotivicSeries) -> MotivicSeries:
    """Cauchy product, truncated to the smaller order."""
    n = min(a.order, b.order)
    out = [ZERO] * (n + 1)
    bnz = [(k, c) for k, c in enumerate(b.coeffs[: n + 1]) if c]
    for i, ca in enumerate(a.coeffs[: n + 1]):
        if not ca:
            continue
        for k, cb in bnz:
            if i + k > n:
                break
            out[i + k] = out[i + k] + ca * cb
    return MotivicSeries(out, n)


def _require_unit(a: MotivicSeries) -> None:
    if not a.has_unit_constant():
        raise NonUnitConstantTerm(f"constant term is {a.coeffs[0]}, expected 1")


def series_inverse(a: MotivicSeries) -> MotivicSeries:
    _require_unit(a)
    n = a.order
    inv = [ONE] + [ZERO] * n
    nz = [(k, c) for k, c in enumerate(a.coeffs) if k and c]
    for m in range(1, n + 1):
        acc = ZERO
        for k, c in nz:
            if k > m:
                break
            acc = acc + c * inv[m - k]
        inv[m] = -acc
    return MotivicSeries(inv, n)


def series_substitute_power(a: MotivicSeries, s: int) -> MotivicSeries:
    """T -> T^s, keeping the order of ``a``."""
    if s < 1:
        raise ValueError("substitution exponent must be positive")
    out = [ZERO] * (a.order + 1)
    for k, c in enumerate(a.coeffs):
        if k * s > a.order:
            break
        out[k * s] = c
    return MotivicSeries(out, a.order)


def _apply_factor(cs: list, i: int, j: int, e: int) -> None:
    """In place: cs <- cs * (1 - L^j T^i)^(-e), truncated to len(cs)."""
    n = len(cs) - 1
    if not e or i > n:
        return
    steps = n // i
    if abs(e) <= steps + 1:
        # repeated multiplication by 1/(1-x) or (1-x); each pass is O(n)
        for _ in range(abs(e)):
            if e > 0:
                for m in range(i, n + 1):
                    if cs[m - i]:
                        cs[m] = cs[m] + cs[m - i].shift(j)
            else:
                for m in range(n, i - 1, -1):
                    if cs[m - i]:
                        cs[m] = cs[m] - cs[m - i].shift(j)
        return
    # binomial expansion of (1-x)^(-e)
    if e > 0:
        binom = [comb(e + t - 1, t) for t in range(steps + 1)]
    else:
        binom = [(-1) ** t * comb(-e, t) for t in range(steps + 1)]
    old = list(cs)
    for m in range(n + 1):
        acc = ZERO
        for t in range(min(steps, m // i) + 1):
            src = old[m - t * i]
            if src:
                acc = acc + src.shift(t * j, binom[t])
        cs[m] = acc


def series_exp(log: LogSeries) -> MotivicSeries:
    """Expand prod (1 - L^j T^i)^(-k_ij) up to ``log.order``."""
    cs = [ONE] + [ZERO] * log.order
    for (i, j), k in sorted(log.terms.items()):
        _apply_factor(cs, i, j, k)
    return MotivicSeries(cs, log.order)


def series_log(a: MotivicSeries) -> LogSeries:
    """Exponents k_ij by triangular elimination.

    At the lowest power T^n with nonzero residual coefficient sum_j c_j L^j,
    record k_nj = c_j and divide the residual by prod_j (1 - L^j T^n)^(-c_j).
    The factorization is unique, so the order of elimination only fixes
    determinism.
    """
    _require_unit(a)
    cs = list(a.coeffs)
    terms = {}
    for n in range(1, a.order + 1):
        c = cs[n]
        if not c:
            continue
        for j, k in c.items():
            terms[(n, j)] = k
            _apply_factor(cs, n, j, -k)
        assert not cs[n]
    return LogSeries(terms, a.order)


def series_pow(a: MotivicSeries, m) -> MotivicSeries:
    """The power structure (a(T))^m for a class m in Z[L]."""
    m = as_class(m)
    if m is NotImplemented:
        raise TypeError("exponent must be a MotivicClass or int")
    return series_exp(series_log(a) * m)


def kapranov_zeta(m, order: int) -> MotivicSeries:
    """zeta_m(T) = (1 - T)^(-m)."""
    return series_pow(MotivicSeries([1, -1], order).inverse(), m)


def series_euler(a: MotivicSeries) -> list:
    return [c.euler() for c in a.coeffs]


def product_of_factors(factors: Sequence[tuple], order: int) -> MotivicSeries:
    """prod (1 - L^j T^i)^(-e) over ``(i, j, e)`` by plain series arithmetic.

    Multiplies explicit binomials and geometric series without going through
    Log/Exp, so it can serve as an independent check of ``series_exp``.
    """
    result = MotivicSeries.one(order)
    for i, j, e in factors:
        if i > order or not e:
            continue
        x = MotivicClass.monomial(j)
        binomial = MotivicSeries.from_terms({0: 1, i: -x}, order)
        if e > 0:
            geometric = MotivicSeries.from_terms(
                {i * t: x ** t for t in range(order // i + 1)}, order
            )
            for _ in range(e):
                result = series_mul(result, geometric)
        else:
            for _ in range(-e):
                result = series_mul(result, binomial)
    return result
