"""Local generating series for Z_M acting on C^2 by (x, y) -> (s x, s^N y).

Two equivariant Hilbert schemes are handled: variant 1 is the invariant locus
of Hilb^k, variant 2 the component(s) birational to S^{k/M}.  Classes are
computed by the torus cell decomposition: every torus-fixed point is a
monomial ideal (a partition), and contributes L^(cell dimension), where the
dimension is the number of weight-zero monomials in the positive part of the
tangent space.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .motivic import ONE, ZERO, L, MotivicClass
from .partitions import Partition, is_equidistributed, iter_partitions
from .series import LogSeries, MotivicSeries, product_of_factors, series_log, series_pow

__all__ = [
    "GroupAction",
    "MalformedLog",
    "cell_dimension",
    "line_local_series",
    "origin_local_series",
    "smooth_point_series",
    "line_to_origin_factor",
    "closed_form_theorem2",
    "closed_form_conjecture",
    "stabilization_table",
]

SUPPORTS = ("origin", "line")


class MalformedLog(ValueError):
    """A Log term showed up at an exponent that is not a multiple of M."""


@dataclass(frozen=True)
class GroupAction:
    """The action (x, y) -> (s x, s^N y) of Z_M; N is stored reduced mod M."""

    M: int
    N: int
    variant: int = 1

    def __post_init__(self):
        if self.M < 1:
            raise ValueError("M must be positive")
        if self.variant not in (1, 2):
            raise ValueError("variant must be 1 or 2")
        object.__setattr__(self, "N", self.N % self.M)


def cell_dimension(p: Partition, M: int, N: int) -> int:
    """Number of invariant monomials in the positive tangent part T+ at ``p``.

    T+ = sum_{1<=i<=j<=r} sum_{s=b_j}^{b_{j-1}-1} lambda^(i-j-1) mu^(b_{i-1}-s-1),
    with b_r = 0, and a monomial counts when N(i-j-1) + (b_{i-1}-s-1) = 0 mod M.
    """
    b = list(p.parts) + [0]
    r = len(p.parts)
    dim = 0
    for j in range(1, r + 1):
        for s in range(b[j], b[j - 1]):
            for i in range(1, j + 1):
                if (N * (i - j - 1) + b[i - 1] - s - 1) % M == 0:
                    dim += 1
    return dim


@lru_cache(maxsize=64)
def _line_coefficients(M: int, N: int, variant: int, order: int) -> tuple:
    coeffs = []
    for k in range(order + 1):
        if variant == 2 and k % M:
            coeffs.append(ZERO)
            continue
        acc: dict = {}
        for p in iter_partitions(k):
            if variant == 2 and not is_equidistributed(p, M, N):
                continue
            d = cell_dimension(p, M, N)
            acc[d] = acc.get(d, 0) + 1
        coeffs.append(MotivicClass(acc))
    return tuple(coeffs)


def line_local_series(action: GroupAction, order: int) -> MotivicSeries:
    """Series of classes of schemes supported on the invariant line y = 0."""
    return MotivicSeries(_line_coefficients(action.M, action.N, action.variant, order), order)


def smooth_point_series(M: int, order: int) -> MotivicSeries:
    """prod 1/(1 - L^(i-1) T^(Mi)): a free orbit of length M on a surface."""
    return LogSeries({(M * i, i - 1): 1 for i in range(1, order // M + 1)}, order).exp()


def line_to_origin_factor(M: int, order: int) -> MotivicSeries:
    """(prod 1/(1 - L^(i-1) T^(Mi)))^(1 - L), removing the free part of the line."""
    return series_pow(smooth_point_series(M, order), ONE - L)


def origin_local_series(action: GroupAction, order: int) -> MotivicSeries:
    """Series of classes of schemes supported at the origin."""
    return line_local_series(action, order) * line_to_origin_factor(action.M, order)


def closed_form_theorem2(M: int, variant: int, support: str, order: int) -> MotivicSeries:
    """Product formulas for the A_{M-1} action (N = -1 mod M).

    Expanded with plain series products, independent of the enumeration and
    of Log/Exp.
    """
    if M < 1:
        raise ValueError("M must be positive")
    if variant not in (1, 2):
        raise ValueError("variant must be 1 or 2")
    if support not in SUPPORTS:
        raise ValueError(f"support must be one of {SUPPORTS}")
    factors = []
    for i in range(1, order // M + 1):
        if support == "origin":
            factors += [(M * i, i, M - 1), (M * i, i - 1, 1)]
        else:
            factors.append((M * i, i, M))
    if variant == 1:
        factors += [(i, 0, 1) for i in range(1, order + 1)]
        factors += [(M * i, 0, -M) for i in range(1, order // M + 1)]
    return product_of_factors(factors, order)


def closed_form_conjecture(order: int) -> MotivicSeries:
    """Conjectured product for variant 1, M = 3, N = 1, at the origin."""
    factors = []
    for i in range(1, order // 3 + 2):
        factors += [(3 * i - 2, i - 1, 1), (3 * i - 1, i, 1), (3 * i, i - 1, 1)]
    return product_of_factors(factors, order)


def stabilization_table(i_max: int, M_list) -> dict:
    """``{(M, i): p_i}`` where Log of the variant-2 origin series for N = 1 is
    sum_i p_i(L) T^(Mi)."""
    table = {}
    for M in M_list:
        if M < 2:
            raise ValueError("stabilization needs M >= 2")
        order = M * i_max
        log = series_log(origin_local_series(GroupAction(M, 1, 2), order))
        stray = [i for i in log.support() if i % M]
        if stray:
            raise MalformedLog(f"M={M}: Log has terms at T^{stray}")
        for i in range(1, i_max + 1):
            table[(M, i)] = log.coefficient(M * i)
    return table
