"""Exact moments at large parameters compared with their predicted leading terms.

All quantities are exact; conversion to :class:`~decimal.Decimal` happens
once per point, at ``DIGITS`` significant digits.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Sequence

from .exact import QuadraticNumber, quad_pow
from .moments import GTable, g, moment

DIGITS = 100


def _to_decimal(x) -> Decimal:
    if isinstance(x, QuadraticNumber):
        return x.to_decimal(DIGITS)
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = DIGITS
        return Decimal(x.numerator) / Decimal(x.denominator)


@dataclass
class RatioTrace:
    params: list[int]
    values: list[Fraction]
    predictions: list[Decimal]
    ratios: list[Decimal]

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.params, self.params[1:])):
            raise ValueError("parameters must be strictly increasing")

    def errors(self) -> list[Decimal]:
        """``|ratio - 1|`` at each point."""
        with localcontext() as ctx:
            ctx.prec = DIGITS
            return [abs(r - 1) for r in self.ratios]

    def approaches_one(self) -> bool:
        """Strictly smaller ``|ratio - 1|`` at each successive point."""
        e = self.errors()
        return all(b < a for a, b in zip(e, e[1:]))

    def increments(self) -> list[Decimal]:
        with localcontext() as ctx:
            ctx.prec = DIGITS
            return [abs(b - a) for a, b in zip(self.ratios, self.ratios[1:])]

    def stabilizes(self) -> bool:
        """Successive ratio changes shrink strictly (vacuous below three points)."""
        inc = self.increments()
        return all(b < a for a, b in zip(inc, inc[1:]))


def _trace(params, values, predictions) -> RatioTrace:
    with localcontext() as ctx:
        ctx.prec = DIGITS
        ratios = [_to_decimal(v) / p for v, p in zip(values, predictions)]
    return RatioTrace(list(params), list(values), list(predictions), ratios)


def moment_ratio_in_n(family: str, d: int, k: int, n_list: Sequence[int],
                      table: GTable | None = None) -> RatioTrace:
    """``E[X^k] / n^(2k)``; for ``d = 1`` plus, scaled by ``10^k`` so the limit is 1."""
    scale = 10 ** k if (d == 1 and family == "plus") else 1
    values = [moment(family, d, n, k, table=table).expectation for n in n_list]
    preds = [_to_decimal(Fraction(n ** (2 * k), scale)) for n in n_list]
    return _trace(n_list, values, preds)


def moment_ratio_in_d(family: str, n: int, k: int, d_list: Sequence[int],
                      table: GTable | None = None) -> RatioTrace:
    """``E[X^k] / d^(2k)`` at fixed ``n``."""
    if n < 2:
        raise ValueError("need n >= 2")
    values = [moment(family, d, n, k, table=table).expectation for d in d_list]
    preds = [_to_decimal(d ** (2 * k)) for d in d_list]
    return _trace(d_list, values, preds)


def golden_leading_term(a: int, b: int, n: int) -> Decimal:
    """``2^-a 5^-(a+b+1)/2 n^(2a+b) alpha^(n+2-a-b)`` with ``alpha`` the golden ratio."""
    alpha = QuadraticNumber(Fraction(1, 2), Fraction(1, 2), 5)
    e = a + b + 1
    # 5^(-e/2) = sqrt(5)^(-e)
    five_part = quad_pow(QuadraticNumber.sqrt(5), -e)
    exact = quad_pow(alpha, n + 2 - a - b) * five_part * Fraction(n ** (2 * a + b), 2 ** a)
    return exact.to_decimal(DIGITS)


def g_ratio_check(a: int, b: int, n_list: Sequence[int], table: GTable | None = None) -> RatioTrace:
    """``G(plus, 1, 0, a, b, n)`` against its golden-ratio leading term."""
    values = [Fraction(g("plus", 1, 0, a, b, n, table)) for n in n_list]
    preds = [golden_leading_term(a, b, n) for n in n_list]
    return _trace(n_list, values, preds)
