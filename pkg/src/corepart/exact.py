"""Exact arithmetic: rationals, real quadratic numbers, dense polynomials in q
and truncated power series.

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator).  Everything here is immutable.
"""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .exceptions import NonInvertibleSeriesError

ExactRational = Fraction

__all__ = [
    "ExactRational",
    "QuadraticNumber",
    "Poly",
    "TruncatedSeries",
    "rational_expand",
    "quad_pow",
    "forward_differences",
    "solve_exact",
]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class QuadraticNumber:
    """``rational + surd * sqrt(discriminant)`` held exactly.

    The discriminant is carried formally even when it is a perfect square,
    so ``sqrt(9)`` stays a symbol and ``QuadraticNumber(0, 1, 9)`` is not
    folded to ``3``.  Call :meth:`simplified` to fold it explicitly.
    """

    __slots__ = ("rational", "surd", "discriminant")

    def __init__(self, rational=0, surd=0, discriminant: int = 5):
        if not isinstance(discriminant, int) or discriminant < 1:
            raise ValueError("discriminant must be a positive integer")
        object.__setattr__(self, "rational", _frac(rational))
        object.__setattr__(self, "surd", _frac(surd))
        object.__setattr__(self, "discriminant", discriminant)

    def __setattr__(self, name, value):
        raise AttributeError("QuadraticNumber is immutable")

    @classmethod
    def sqrt(cls, discriminant: int) -> QuadraticNumber:
        return cls(0, 1, discriminant)

    @classmethod
    def root_pair(cls, d: int) -> tuple[QuadraticNumber, QuadraticNumber]:
        """The two roots ``(1 +- sqrt(1+4d))/2`` of ``x^2 - x - d``."""
        half = Fraction(1, 2)
        D = 1 + 4 * d
        return cls(half, half, D), cls(half, -half, D)

    def _coerce(self, other) -> QuadraticNumber:
        if isinstance(other, QuadraticNumber):
            if other.discriminant != self.discriminant:
                raise ValueError(
                    "cannot combine sqrt(%d) with sqrt(%d)"
                    % (self.discriminant, other.discriminant)
                )
            return other
        return QuadraticNumber(_frac(other), 0, self.discriminant)

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return QuadraticNumber(self.rational + o.rational, self.surd + o.surd, self.discriminant)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.rational, -self.surd, self.discriminant)

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return QuadraticNumber(self.rational - o.rational, self.surd - o.surd, self.discriminant)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, e = self.rational, self.surd, o.rational, o.surd
        D = self.discriminant
        return QuadraticNumber(a * c + D * b * e, a * e + b * c, D)

    __rmul__ = __mul__

    def conjugate(self) -> QuadraticNumber:
        return QuadraticNumber(self.rational, -self.surd, self.discriminant)

    def norm(self) -> Fraction:
        return self.rational ** 2 - self.discriminant * self.surd ** 2

    def inverse(self) -> QuadraticNumber:
        n = self.norm()
        if n == 0:
            # only possible when the discriminant is a perfect square
            raise ZeroDivisionError("element of zero norm is not invertible")
        c = self.conjugate()
        return QuadraticNumber(c.rational / n, c.surd / n, self.discriminant)

    def __truediv__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        return quad_pow(self, e)

    def __eq__(self, other):
        if isinstance(other, QuadraticNumber):
            return (
                self.discriminant == other.discriminant
                and self.rational == other.rational
                and self.surd == other.surd
            )
        if isinstance(other, (int, Fraction)):
            return self.surd == 0 and self.rational == other
        return NotImplemented

    def __hash__(self):
        if self.surd == 0:
            return hash(self.rational)
        return hash((self.rational, self.surd, self.discriminant))

    def is_rational(self) -> bool:
        return self.surd == 0

    def simplified(self) -> QuadraticNumber | Fraction:
        """Fold a perfect-square discriminant; otherwise return ``self``."""
        from math import isqrt

        r = isqrt(self.discriminant)
        if r * r == self.discriminant:
            return self.rational + self.surd * r
        return self

    def to_decimal(self, digits: int = 60) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = digits + 10
            root = Decimal(self.discriminant).sqrt()
            val = _dec(self.rational) + _dec(self.surd) * root
            ctx.prec = digits
            return +val

    def __float__(self):
        return float(self.to_decimal(30))

    def __repr__(self):
        return "QuadraticNumber(%s, %s, %d)" % (self.rational, self.surd, self.discriminant)

    def __str__(self):
        return "%s + %s*sqrt(%d)" % (self.rational, self.surd, self.discriminant)


def _dec(x: Fraction) -> Decimal:
    return Decimal(x.numerator) / Decimal(x.denominator)


def quad_pow(x: QuadraticNumber, e: int) -> QuadraticNumber:
    """``x**e`` by repeated squaring; ``e`` may be negative if ``x`` is invertible."""
    if e < 0:
        return quad_pow(x.inverse(), -e)
    result = QuadraticNumber(1, 0, x.discriminant)
    base = x
    while e:
        if e & 1:
            result = result * base
        e >>= 1
        if e:
            base = base * base
    return result


class Poly:
    """Dense univariate polynomial in ``q`` with rational coefficients.

    ``coefficients[i]`` multiplies ``q**i``.  Trailing zeros are trimmed, so
    the zero polynomial has no coefficients.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable = ()):
        coeffs = [_frac(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def q(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> Poly:
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coefficients) - 1

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return Fraction(0)

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            return other
        return Poly((_frac(other),))

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        n = max(len(self.coefficients), len(o.coefficients))
        return Poly(self[i] + o[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coefficients)

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not self.coefficients or not o.coefficients:
            return Poly()
        out = [Fraction(0)] * (len(self.coefficients) + len(o.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(o.coefficients):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = Poly((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coefficients == other.coefficients
        if isinstance(other, (int, Fraction)):
            return self == Poly((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return "Poly(%s)" % ", ".join(str(c) for c in self.coefficients)


class TruncatedSeries:
    """Power series known up to and including ``q**order``."""

    __slots__ = ("coefficients", "order")

    def __init__(self, coefficients: Sequence, order: int | None = None):
        coeffs = [_frac(c) for c in coefficients]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = coeffs[: order + 1] + [Fraction(0)] * (order + 1 - len(coeffs))
        object.__setattr__(self, "coefficients", tuple(coeffs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def from_poly(cls, p: Poly, order: int) -> TruncatedSeries:
        return cls([p[i] for i in range(order + 1)], order)

    def __getitem__(self, i):
        return self.coefficients[i]

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coefficients[: order + 1], order)

    def _other(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, Poly):
            return TruncatedSeries.from_poly(other, self.order)
        return TruncatedSeries([_frac(other)], self.order)

    def __add__(self, other):
        o = self._other(other)
        order = min(self.order, o.order)
        return TruncatedSeries([self[i] + o[i] for i in range(order + 1)], order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coefficients], self.order)

    def __sub__(self, other):
        return self + (-self._other(other))

    def __mul__(self, other):
        o = self._other(other)
        order = min(self.order, o.order)
        out = [Fraction(0)] * (order + 1)
        for i in range(order + 1):
            a = self[i]
            if a:
                for j in range(order + 1 - i):
                    out[i + j] += a * o[j]
        return TruncatedSeries(out, order)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.order == other.order and self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        return hash((self.coefficients, self.order))

    def as_integers(self) -> list[int]:
        """Coefficients as ints; raises ``ValueError`` if any is fractional."""
        out = []
        for c in self.coefficients:
            if c.denominator != 1:
                raise ValueError(f"non-integral coefficient {c}")
            out.append(c.numerator)
        return out

    def __repr__(self):
        return "TruncatedSeries([%s], order=%d)" % (
            ", ".join(str(c) for c in self.coefficients),
            self.order,
        )


def rational_expand(numer: Poly, denom: Poly, order: int) -> TruncatedSeries:
    """First ``order + 1`` coefficients of ``numer / denom`` as a power series."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    c0 = denom[0]
    if c0 == 0:
        raise NonInvertibleSeriesError("non-invertible series: denominator has zero constant term")
    out: list[Fraction] = []
    dcoef = denom.coefficients
    for n in range(order + 1):
        acc = numer[n]
        for j in range(1, min(n, len(dcoef) - 1) + 1):
            acc -= dcoef[j] * out[n - j]
        out.append(acc / c0)
    return TruncatedSeries(out, order)


def forward_differences(values: Sequence, order: int) -> list:
    """The ``order``-th forward differences of an equally spaced sample."""
    vals = list(values)
    if order > len(vals) - 1:
        raise ValueError("not enough sample points for differences of order %d" % order)
    for _ in range(order):
        vals = [b - a for a, b in zip(vals, vals[1:])]
    return vals


def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals, on an augmented matrix."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def solve_exact(matrix: Sequence[Sequence], rhs: Sequence) -> tuple[list[Fraction], bool]:
    """Solve ``matrix @ x = rhs`` exactly.

    Returns ``(x, singular)``.  With full column rank ``x`` is the unique
    solution.  Otherwise the minimum-norm solution of the consistent system
    is returned and ``singular`` is True.  Raises ``ValueError`` when the
    system is inconsistent.
    """
    A = [[_frac(v) for v in row] for row in matrix]
    b = [_frac(v) for v in rhs]
    nrows, ncols = len(A), len(A[0]) if A else 0
    aug = [row + [bv] for row, bv in zip(A, b)]
    red, pivots = _rref(aug, ncols)
    for row in red[len(pivots):]:
        if row[-1] != 0:
            raise ValueError("inconsistent linear system")
    if len(pivots) == ncols:
        x = [Fraction(0)] * ncols
        for i, c in enumerate(pivots):
            x[c] = red[i][-1]
        return x, False
    # independent rows R of A: minimum-norm solution x = R^T (R R^T)^{-1} b_R
    _, row_pivots = _rref([list(col) for col in zip(*A)], nrows)
    R = [A[i] for i in row_pivots]
    bR = [b[i] for i in row_pivots]
    gram = [[sum(u * v for u, v in zip(ri, rj)) for rj in R] for ri in R]
    y, _ = solve_exact(gram, bR)
    x = [sum(R[i][c] * y[i] for i in range(len(R))) for c in range(ncols)]
    return x, True
