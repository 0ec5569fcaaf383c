"""Exact arithmetic in Z[L], the subring of K_0(Var) spanned by powers of the
Lefschetz class L = [A^1]."""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Union

__all__ = ["MotivicClass", "L", "ONE", "ZERO", "as_class"]

Coercible = Union["MotivicClass", int]


class MotivicClass:
    """A polynomial in L with arbitrary-precision integer coefficients.

    Stored sparsely as ``{degree: coefficient}`` with zero coefficients
    removed, so equality and hashing are coefficient-wise.  Instances are
    immutable.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        if coeffs:
            for deg, val in coeffs.items():
                deg = int(deg)
                if deg < 0:
                    raise ValueError(f"negative power of L: {deg}")
                val = int(val)
                if val:
                    c[deg] = val
        self._c = c

    @classmethod
    def _raw(cls, c: dict) -> MotivicClass:
        # c must already be normalized
        obj = object.__new__(cls)
        obj._c = c
        return obj

    @classmethod
    def from_list(cls, coeffs: Iterable[int]) -> MotivicClass:
        """Build from a dense list; entry k is the coefficient of L^k."""
        return cls(dict(enumerate(coeffs)))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> MotivicClass:
        return cls({degree: coeff})

    @classmethod
    def parse(cls, text: str) -> MotivicClass:
        return _parse(text)

    # -- inspection --------------------------------------------------------

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def items(self):
        """(degree, coefficient) pairs in ascending degree."""
        return sorted(self._c.items())

    def to_list(self) -> list:
        if not self._c:
            return []
        out = [0] * (max(self._c) + 1)
        for d, v in self._c.items():
            out[d] = v
        return out

    def __getitem__(self, degree: int) -> int:
        return self._c.get(degree, 0)

    @property
    def degree(self) -> int:
        """Degree in L; -1 for the zero class."""
        return max(self._c) if self._c else -1

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return all(d == 0 for d in self._c)

    def __bool__(self):
        return bool(self._c)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: Coercible) -> MotivicClass:
        other = as_class(other)
        if other is NotImplemented:
            return NotImplemented
        c = dict(self._c)
        for d, v in other._c.items():
            s = c.get(d, 0) + v
            if s:
                c[d] = s
            else:
                c.pop(d, None)
        return MotivicClass._raw(c)

    __radd__ = __add__

    def __neg__(self) -> MotivicClass:
        return MotivicClass._raw({d: -v for d, v in self._c.items()})

    def __sub__(self, other: Coercible) -> MotivicClass:
        other = as_class(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coercible) -> MotivicClass:
        other = as_class(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Coercible) -> MotivicClass:
        if isinstance(other, int):
            if not other:
                return ZERO
            return MotivicClass._raw({d: v * other for d, v in self._c.items()})
        if not isinstance(other, MotivicClass):
            return NotImplemented
        c: dict = {}
        for d1, v1 in self._c.items():
            for d2, v2 in other._c.items():
                d = d1 + d2
                c[d] = c.get(d, 0) + v1 * v2
        return MotivicClass._raw({d: v for d, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> MotivicClass:
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers of a class are defined")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, j: int, scale: int = 1) -> MotivicClass:
        """Return ``scale * L^j * self``."""
        if not scale:
            return ZERO
        return MotivicClass._raw({d + j: v * scale for d, v in self._c.items()})

    def evaluate(self, t: int) -> int:
        """Exact evaluation at L := t."""
        return sum(v * t**d for d, v in self._c.items())

    def euler(self) -> int:
        """Euler characteristic, i.e. the specialization L := 1."""
        return sum(self._c.values())

    # -- comparison, hashing, rendering -----------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MotivicClass({0: other})
        if not isinstance(other, MotivicClass):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self):
        return f"MotivicClass({self})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for d in sorted(self._c, reverse=True):
            v = self._c[d]
            sign = "-" if v < 0 else "+"
            a = abs(v)
            if d == 0:
                body = str(a)
            else:
                mono = "L" if d == 1 else f"L^{d}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def as_class(x) -> MotivicClass:
    if isinstance(x, MotivicClass):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return MotivicClass({0: x}) if x else ZERO
    return NotImplemented


ZERO = MotivicClass()
ONE = MotivicClass({0: 1})
L = MotivicClass({1: 1})


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
          (?P<coef>\d+)\s*(?:\*\s*(?P<var1>L)(?:\s*\^\s*(?P<exp1>\d+))?)?
        | (?P<var2>L)(?:\s*\^\s*(?P<exp2>\d+))?
        )\s*""",
    re.VERBOSE,
)


def _parse(text: str) -> MotivicClass:
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial")
    pos, c, first = 0, {}, True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (not first and not m.group("sign")):
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        if m.group("var2"):
            coef, exp = 1, m.group("exp2") or "1"
        elif m.group("var1"):
            coef, exp = int(m.group("coef")), m.group("exp1") or "1"
        elif m.group("coef") is not None:
            coef, exp = int(m.group("coef")), "0"
        else:
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        if m.group("sign") == "-":
            coef = -coef
        d = int(exp)
        c[d] = c.get(d, 0) + coef
        pos, first = m.end(), False
    return MotivicClass(c)
