"""Series expansions of the moment generating functions and of ``1/(1-q-dq^2)^k``.

``d`` (and ``m``) enter as exact numbers, never as symbols.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .exact import (
    Poly,
    QuadraticNumber,
    TruncatedSeries,
    forward_differences,
    quad_pow,
    rational_expand,
)
from .moments import GTable, g, m_seq


def base_denominator(d) -> Poly:
    """``1 - q - d q^2``."""
    return Poly((1, -1, -d))


@dataclass(frozen=True)
class RationalFunction:
    numerator: Poly
    denominator: Poly

    def __post_init__(self):
        if self.denominator[0] == 0:
            raise ValueError("denominator must have a nonzero constant term")

    def __add__(self, other: RationalFunction) -> RationalFunction:
        if self.denominator == other.denominator:
            return RationalFunction(self.numerator + other.numerator, self.denominator)
        return RationalFunction(self.numerator * other.denominator + other.numerator * self.denominator,
                                self.denominator * other.denominator)

    def expand(self, order: int) -> TruncatedSeries:
        return rational_expand(self.numerator, self.denominator, order)


def psi_series_dp(d: int, m: int, a: int, b: int, order: int,
                  table: GTable | None = None) -> TruncatedSeries:
    """Coefficients ``G(plus, d, m, a, b, n)`` for ``n = 0..order``."""
    return TruncatedSeries([g("plus", d, m, a, b, n, table) for n in range(order + 1)], order)


PSI_CLOSED = ((0, 0), (1, 0), (0, 1), (0, 2))


def psi_closed_form(d: int, m: int, which: tuple[int, int]) -> RationalFunction:
    """The explicit generating function for ``(a, b)`` in :data:`PSI_CLOSED`,
    brought over the common denominator ``(1 - q - d q^2)^3``."""
    q = Poly.q()
    D = base_denominator(d)
    one_plus = Poly((1, d))  # 1 + d q
    c2, c3 = comb(d + 1, 2), comb(d + 1, 3)
    which = tuple(which)
    if which == (0, 0):
        num = one_plus * D * D
    elif which == (1, 0):
        num = (c3 * m * q - c2 * q) * D + c2 * Poly((0, 2, -1))
    elif which == (0, 1):
        num = c2 * q * D * D + c2 * q ** 2 * one_plus * D
    elif which == (0, 2):
        s2 = Fraction(comb(2 * d + 2, 3), 4)
        num = (s2 * q * D * D
               + (2 * c2 * c2 * q ** 3 + s2 * q ** 2 * one_plus) * D
               + 2 * c2 * c2 * q ** 4 * one_plus)
    else:
        raise ValueError(f"unsupported (a, b) = {which}; explicit forms exist for {PSI_CLOSED}")
    return RationalFunction(num, D ** 3)


def psi_closed(d: int, m: int, which: tuple[int, int], order: int) -> TruncatedSeries:
    return psi_closed_form(d, m, which).expand(order)


# -- 1/(1 - q - d q^2)^k ----------------------------------------------------

def _sqrt_power(D: int, e: int) -> QuadraticNumber:
    # sqrt(D)**e, kept in the field Q(sqrt(D))
    if e % 2 == 0:
        return QuadraticNumber(D ** (e // 2), 0, D)
    return QuadraticNumber(0, D ** (e // 2), D)


def partial_fraction_coefficients(d: int, k: int, order: int) -> list[QuadraticNumber]:
    """Coefficients from the partial-fraction expansion over ``x_d, y_d``, unsimplified."""
    x, y = QuadraticNumber.root_pair(d)
    D = 1 + 4 * d
    out = []
    weights = [
        comb(2 * k - 1 - i, k - 1) * d ** (k - i) / _sqrt_power(D, 2 * k - i)
        for i in range(1, k + 1)
    ]
    for n in range(order + 1):
        acc = QuadraticNumber(0, 0, D)
        for i in range(1, k + 1):
            sign = 1 if i % 2 == 0 else -1
            term = quad_pow(x, n + i) + sign * quad_pow(y, n + i)
            acc = acc + weights[i - 1] * comb(n + i - 1, i - 1) * term
        out.append(acc)
    return out


def _mbasis_coefficient(d: int, k: int, n: int) -> Fraction:
    e = 4 * d + 1
    if k == 1:
        return Fraction(m_seq(d, n))
    if k == 2:
        return Fraction((n + 1) * m_seq(d, n + 2) + (n + 3) * d * m_seq(d, n), e)
    if k == 3:
        return ((Fraction(3 * d * (n + 1), e * e) + Fraction(comb(n + 2, 2), e)) * m_seq(d, n + 2)
                + Fraction(3 * d * d * (n + 3), e * e) * m_seq(d, n))
    raise ValueError("M-basis formulas exist for k <= 3 only")


def inv_power_expand(d: int, k: int, order: int, method: str = "direct") -> TruncatedSeries:
    """Expand ``1/(1 - q - d q^2)^k`` by ``direct`` series inversion,
    ``partialfraction`` (quadratic-field arithmetic) or ``mbasis``."""
    if k < 1:
        raise ValueError("k must be positive")
    if method == "direct":
        return rational_expand(Poly((1,)), base_denominator(d) ** k, order)
    if method == "partialfraction":
        coeffs = partial_fraction_coefficients(d, k, order)
        leftover = [i for i, c in enumerate(coeffs) if not c.is_rational()]
        if leftover:
            raise ArithmeticError(f"surd parts did not cancel at n = {leftover[:5]}")
        return TruncatedSeries([c.rational for c in coeffs], order)
    if method == "mbasis":
        if k > 3:
            raise ValueError("M-basis formulas exist for k <= 3 only")
        return TruncatedSeries([_mbasis_coefficient(d, k, n) for n in range(order + 1)], order)
    raise ValueError(f"unknown method {method!r}")


# -- structure of the generating function -----------------------------------

@dataclass
class ExpansionReport:
    d: int
    a: int
    b: int
    order: int
    ms: list[int]
    exponent: int
    cutoff: int
    numerators: dict[int, list[Fraction]]
    tail_zero: bool
    observed_degree: int
    m_degree_ok: bool
    m_degree_flags: list[bool] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.tail_zero and self.m_degree_ok


def gf_structure_check(d: int, a: int, b: int, order: int,
                              ms: list[int] | None = None,
                              table: GTable | None = None) -> ExpansionReport:
    """Multiply the G-series by ``(1 - q - d q^2)^(2a+b+1)`` and inspect the result.

    The product must be a polynomial in ``q``: coefficients past the cutoff
    ``2(2a+b+1) - 1`` vanish through ``order``.  The generating function is
    a proper rational function (numerator degree below denominator degree),
    which is where the cutoff comes from.  Each product coefficient, sampled
    over ``m``, must have ``m``-degree at most ``2a+b``.
    """
    if a + b > 3:
        raise ValueError("a + b <= 3 only")
    e = 2 * a + b + 1
    cutoff = 2 * e - 1
    if ms is None:
        ms = list(range(2 * a + b + 3))
    if order < cutoff + 1:
        raise ValueError(f"order must exceed the cutoff {cutoff}")
    denom = TruncatedSeries.from_poly(base_denominator(d) ** e, order)
    numerators = {}
    tail_zero = True
    observed = -1
    for m in ms:
        prod = psi_series_dp(d, m, a, b, order, table) * denom
        numerators[m] = list(prod.coefficients)
        nz = [i for i, c in enumerate(prod.coefficients) if c]
        if nz:
            observed = max(observed, nz[-1])
        if any(c for c in prod.coefficients[cutoff + 1:]):
            tail_zero = False
    flags = []
    deg_m = 2 * a + b
    if len(ms) >= deg_m + 2:
        for i in range(cutoff + 1):
            column = [numerators[m][i] for m in ms]
            flags.append(all(v == 0 for v in forward_differences(column, deg_m + 1)))
    m_ok = bool(flags) and all(flags)
    return ExpansionReport(d, a, b, order, list(ms), e, cutoff, numerators, tail_zero,
                           observed, m_ok, flags)
