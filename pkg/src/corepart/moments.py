"""Counts, mixed moment sums over nice subsets, and moments of core sizes.

Notation follows the code rather than any text: ``G(family, d, m, a, b, n)``
is the sum of ``sigma_m(I)**a * |I|**b`` over the nice subsets ``I`` of the
``d x n`` grid (``family='plus'``) or over those avoiding the corner cell
``(d, n)`` (``family='minus'``).  The power sum of sizes of the
``(n, dn+1)``-cores (resp. ``(n, dn-1)``-cores) with distinct parts is a
fixed rational combination of ``G(family, d, n, a, b, n-1)``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Literal, Sequence

from .exact import QuadraticNumber, forward_differences, quad_pow, solve_exact
from .exceptions import BudgetExceededError, SingularCaseError
from .nice import iter_nice_minus, iter_nice_plus
from .partitions import enumerate_core

Family = Literal["plus", "minus"]
FAMILIES = ("plus", "minus")

#: brute-force sums refuse to enumerate more subsets than this
DEFAULT_SUBSET_BUDGET = 10**6


def _check_family(family: str) -> None:
    if family not in FAMILIES:
        raise ValueError(f"family must be 'plus' or 'minus', got {family!r}")


# -- counting sequences -----------------------------------------------------

@lru_cache(maxsize=None)
def _m_list(d: int, upto: int) -> tuple[int, ...]:
    # index i holds M_d(i - 1)
    vals = [0, 1]
    for _ in range(upto):
        vals.append(vals[-1] + d * vals[-2])
    return tuple(vals)


def m_seq(d: int, n: int) -> int:
    """Number of ``(n, dn+1)``-cores with distinct parts; ``M(-1)=0, M(0)=1``."""
    if n < -1:
        raise ValueError("M_d(n) is defined for n >= -1")
    return _m_list(d, max(n, 0))[n + 1]


def n_seq(d: int, n: int) -> int:
    """Number of ``(n, dn-1)``-cores with distinct parts; ``N(1)=1, N(2)=d``."""
    if n < 1:
        raise ValueError("N_d(n) is defined for n >= 1")
    a, b = 1, d
    if n == 1:
        return a
    for _ in range(n - 2):
        a, b = b, b + d * a
    return b


@dataclass
class CheckResult:
    id: str
    status: str  # "pass" | "fail" | "skip"
    expected: str = ""
    actual: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"


def seq_identities_check(d: int, nmax: int) -> list[CheckResult]:
    """Exact checks of the relations between the two counting sequences.

    The relations expressing M through N divide by ``d(d-2)`` and are
    skipped at ``d = 2``.  The closed forms in ``x_d, y_d`` are evaluated in
    the quadratic field of ``sqrt(1+4d)``.
    """
    out = []
    ns = range(1, nmax + 1)

    def run(ident, fn):
        bad = [n for n in ns if not fn(n)]
        out.append(CheckResult(ident, "fail" if bad else "pass",
                               "holds for n=1..%d" % nmax,
                               "fails at n=%s" % bad[:5] if bad else "holds"))

    if d == 2:
        out.append(CheckResult("m_from_n", "skip", "", "skipped (singular d)"))
        out.append(CheckResult("m_prev_from_n", "skip", "", "skipped (singular d)"))
    else:
        den = d * (d - 2)
        run("m_from_n", lambda n: Fraction(d * (d - 1) * n_seq(d, n) - n_seq(d, n + 1), den)
            == m_seq(d, n))
        run("m_prev_from_n", lambda n: Fraction((d - 1) * n_seq(d, n + 1) - d * n_seq(d, n), den)
            == m_seq(d, n - 1))
    run("n_from_m", lambda n: n_seq(d, n) == m_seq(d, n) - (m_seq(d, n - 2) if n >= 1 else 0))
    x, y = QuadraticNumber.root_pair(d)
    root = QuadraticNumber.sqrt(1 + 4 * d)
    run("m_binet", lambda n: (quad_pow(x, n + 1) - quad_pow(y, n + 1)) / root == m_seq(d, n))
    run("m_lucas", lambda n: quad_pow(x, n + 1) + quad_pow(y, n + 1)
        == 2 * m_seq(d, n + 1) - m_seq(d, n))
    return out


# -- G tables ---------------------------------------------------------------

@dataclass(frozen=True)
class GKey:
    family: str
    d: int
    m: int
    a: int
    b: int
    n: int

    def __post_init__(self):
        _check_family(self.family)
        if self.d < 1:
            raise ValueError("d must be positive")
        if min(self.m, self.a, self.b, self.n) < 0:
            raise ValueError("m, a, b, n must be nonnegative")


def _first_column_sum(upper: int, m: int, a: int, b: int) -> int:
    # one occupied column of height i in column 1: sigma = C(i,2) m + i, |I| = i
    return sum((comb(i, 2) * m + i) ** a * i ** b for i in range(0, upper + 1))


class GTable:
    """Memo of exact ``G`` values keyed by :class:`GKey`.

    Filling is serialised by a lock so each key is computed once; stored
    values never change afterwards.
    """

    def __init__(self):
        self._values: dict[GKey, int] = {}
        self._lock = threading.RLock()

    def __len__(self):
        return len(self._values)

    def __contains__(self, key):
        return key in self._values

    def get(self, key: GKey) -> int | None:
        return self._values.get(key)

    def value(self, key: GKey) -> int:
        v = self._values.get(key)
        if v is not None:
            return v
        with self._lock:
            if key.family == "plus":
                self._fill_plus(key.d, key.m, key.a, key.b, key.n)
            else:
                self._fill_minus(key.d, key.m, key.a, key.b, key.n)
        return self._values[key]

    def _plus(self, d, m, a, b, n) -> int:
        return self._values[GKey("plus", d, m, a, b, n)]

    @staticmethod
    def _new_column_sums(upper: int, m: int, n: int, amax: int, bmax: int) -> list[list[int]]:
        # S[p][r] = sum_{i=1}^{upper} (C(i,2) m + i n)^p i^r
        S = [[0] * (bmax + 1) for _ in range(amax + 1)]
        for i in range(1, upper + 1):
            base = comb(i, 2) * m + i * n
            bp = 1
            for p in range(amax + 1):
                ir = 1
                for r in range(bmax + 1):
                    S[p][r] += bp * ir
                    ir *= i
                bp *= base
        return S

    def _recurse(self, d, m, a, b, n, S) -> int:
        # contribution of the subsets whose column n has height i >= 1
        total = 0
        for a2 in range(a + 1):
            ca = comb(a, a2)
            for b2 in range(b + 1):
                coeff = ca * comb(b, b2) * S[a - a2][b - b2]
                if coeff:
                    total += coeff * self._plus(d, m, a2, b2, n - 2)
        return total

    def _fill_plus(self, d, m, a, b, n):
        vals = self._values
        for nn in range(n + 1):
            S = None
            for a2 in range(a + 1):
                for b2 in range(b + 1):
                    key = GKey("plus", d, m, a2, b2, nn)
                    if key in vals:
                        continue
                    if nn == 0:
                        v = 1 if a2 == b2 == 0 else 0
                    elif nn == 1:
                        v = _first_column_sum(d, m, a2, b2)
                    else:
                        if S is None:
                            S = self._new_column_sums(d, m, nn, a, b)
                        v = self._plus(d, m, a2, b2, nn - 1) + self._recurse(d, m, a2, b2, nn, S)
                    vals[key] = v

    def _fill_minus(self, d, m, a, b, n):
        if n >= 2:
            self._fill_plus(d, m, a, b, n - 1)
        vals = self._values
        S = self._new_column_sums(d - 1, m, n, a, b) if n >= 2 else None
        for a2 in range(a + 1):
            for b2 in range(b + 1):
                key = GKey("minus", d, m, a2, b2, n)
                if key in vals:
                    continue
                if n == 0:
                    v = 1 if a2 == b2 == 0 else 0
                elif n == 1:
                    # a single column of height at most d - 1
                    v = _first_column_sum(d - 1, m, a2, b2)
                else:
                    v = self._plus(d, m, a2, b2, n - 1) + self._recurse(d, m, a2, b2, n, S)
                vals[key] = v


_default_table = GTable()


def default_table() -> GTable:
    return _default_table


def g_dp(key: GKey, table: GTable | None = None) -> int:
    """``G`` by the column recursion, memoised in ``table``."""
    return (table if table is not None else _default_table).value(key)


def g(family: str, d: int, m: int, a: int, b: int, n: int, table: GTable | None = None) -> int:
    return g_dp(GKey(family, d, m, a, b, n), table)


def g_bruteforce(key: GKey, budget: int = DEFAULT_SUBSET_BUDGET) -> int:
    """``G`` by summing over every enumerated nice subset."""
    count = m_seq(key.d, key.n + 1) if key.family == "plus" else n_seq(key.d, key.n + 1)
    if count > budget:
        raise BudgetExceededError(f"{count} subsets exceeds budget {budget}")
    if key.family == "plus":
        subsets = iter_nice_plus(key.d, key.n)
    elif key.n == 0:
        subsets = iter_nice_plus(key.d, 0)
    else:
        subsets = iter_nice_minus(key.d, key.n)
    return sum(s.sigma(key.m) ** key.a * len(s) ** key.b for s in subsets)


# -- power sums and moments -------------------------------------------------

@lru_cache(maxsize=None)
def _size_power_terms(k: int) -> tuple[tuple[int, int, Fraction], ...]:
    half = Fraction(1, 2)
    terms: dict[tuple[int, int], Fraction] = {}
    for a in range(k + 1):
        for p in range(k - a + 1):
            r = k - a - p
            c = Fraction(factorial(k), factorial(a) * factorial(p) * factorial(r))
            c *= (-half) ** p * half ** r
            key = (a, 2 * p + r)
            terms[key] = terms.get(key, 0) + c
    return tuple((a, b, c) for (a, b), c in sorted(terms.items()) if c)


def expand_size_power(k: int) -> list[tuple[int, int, Fraction]]:
    """Expand ``(s - y^2/2 + y/2)**k`` as ``sum coeff * s**a * y**b``.

    With ``s = sigma_n(I)`` and ``y = |I|`` the base is the size of the
    partition matched to ``I``.  Terms are sorted by ``(a, b)``.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    return list(_size_power_terms(k))


def _check_n(family: str, n: int) -> None:
    _check_family(family)
    if family == "plus" and n < 1:
        raise ValueError("plus family needs n >= 1")
    if family == "minus" and n < 2:
        raise ValueError("minus family needs n >= 2")


def core_count(family: str, d: int, n: int) -> int:
    _check_family(family)
    return m_seq(d, n) if family == "plus" else n_seq(d, n)


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {x}")
    return x.numerator


def power_sum(family: str, d: int, n: int, k: int, method: str = "dp",
              table: GTable | None = None, budget: int = DEFAULT_SUBSET_BUDGET) -> int:
    """Sum of ``|lambda|**k`` over the ``(n, dn+1)`` or ``(n, dn-1)`` distinct-part cores.

    ``method`` is ``"dp"`` (recursion on G), ``"nice"`` (enumerate nice
    subsets) or ``"oracle"`` (enumerate the partitions themselves).
    """
    _check_n(family, n)
    if d < 1:
        raise ValueError("d must be positive")
    if method == "dp":
        total = Fraction(0)
        for a, b, c in expand_size_power(k):
            total += c * g(family, d, n, a, b, n - 1, table)
        return _as_int(total, "power sum")
    if method == "nice":
        count = core_count(family, d, n)
        if count > budget:
            raise BudgetExceededError(f"{count} subsets exceeds budget {budget}")
        it = iter_nice_plus(d, n - 1) if family == "plus" else iter_nice_minus(d, n - 1)
        total = 0
        for s in it:
            y = len(s)
            total += (s.sigma(n) - (y * y - y) // 2) ** k
        return total
    if method == "oracle":
        t = d * n + 1 if family == "plus" else d * n - 1
        return sum(p.size ** k for p in enumerate_core(n, t, distinct=True, budget=budget))
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class MomentResult:
    power_sum: int
    count: int
    expectation: Fraction


def moment(family: str, d: int, n: int, k: int, method: str = "dp",
           table: GTable | None = None, budget: int = DEFAULT_SUBSET_BUDGET) -> MomentResult:
    """``k``-th moment of the size of a uniform random core in the family.

    ``method="closedform"`` is available for ``k = 1`` only, and for the
    minus family raises :class:`SingularCaseError` at ``d = 2``.
    """
    _check_n(family, n)
    count = core_count(family, d, n)
    if method == "closedform":
        if k != 1:
            raise ValueError("closed forms exist for k = 1 only")
        if family == "plus":
            e = closed_expectation_plus(d, n)
            ps = _as_int(e * count, "closed-form total")
        else:
            e = closed_expectation_minus(d, n)
            ps = _as_int(e * count, "closed-form total")
        return MomentResult(ps, count, e)
    ps = power_sum(family, d, n, k, method=method, table=table, budget=budget)
    return MomentResult(ps, count, Fraction(ps, count))


# -- closed forms for the first moment --------------------------------------

def closed_expectation_plus(d: int, n: int) -> Fraction:
    """Mean size of an ``(n, dn+1)``-core with distinct parts, in closed form."""
    if d < 1 or n < 1:
        raise ValueError("need d >= 1 and n >= 1")
    F = Fraction
    e = 4 * d + 1
    u = n - 1
    c = d * (d + 1)
    tail = F(c * (6 * d * d + 27 * d + 3), 12 * e * e)
    main = F(c * (5 * d + 1) * u * u, 24 * e) + F(c * (32 * d * d + 63 * d + 7) * u, 24 * e * e) + tail
    corr = F(c * (d - 1) * u * u, 24 * e) + F(c * (14 * d * d + 21 * d + 1) * u, 24 * e * e) + tail
    return main - F(m_seq(d, n - 1), m_seq(d, n)) * corr


def closed_total_minus(d: int, n: int) -> Fraction:
    """Total size of the ``(n, dn-1)``-cores with distinct parts, in closed form."""
    if d < 1 or n < 2:
        raise ValueError("need d >= 1 and n >= 2")
    F = Fraction
    e = 4 * d + 1
    d2, d3, d4 = d * d, d ** 3, d ** 4
    a_part = (F((d2 - 1) * (5 * d2 + d - 1) * n * n, 24 * d * e)
              - F((d + 1) * (8 * d4 + 27 * d3 + 2 * d2 - 1) * n, 24 * d * e * e)
              + F(d2 - 1, 12 * d))
    b_part = (F((d + 1) * (-d3 + 7 * d2 + d - 1) * n * n, 24 * d * e)
              - F((d + 1) * (6 * d4 - 19 * d3 - 7 * d2 + d + 1) * n, 24 * d * e * e)
              - F((d + 1) * (d4 + 20 * d3 - 6 * d2 - 8 * d - 1), 12 * d * e * e))
    return m_seq(d, n) * a_part + m_seq(d, n - 1) * b_part


def closed_expectation_minus(d: int, n: int) -> Fraction:
    """Mean size of an ``(n, dn-1)``-core with distinct parts in the ``N``-basis.

    Undefined at ``d = 2``; use ``closed_total_minus(2, n) / n_seq(2, n)``.
    """
    if d < 1 or n < 2:
        raise ValueError("need d >= 1 and n >= 2")
    if d == 2:
        raise SingularCaseError("singular case d=2; use closed_total_minus/N_d")
    F = Fraction
    e = 4 * d + 1
    s = 16 * d ** 3 - 24 * d * d - 15 * d - 2
    main = (F((5 * d ** 3 + 7 * d * d + d - 1) * n * n, 24 * e)
            - F((8 * d ** 5 + 21 * d ** 4 + 7 * d ** 3 - d * d + 3 * d - 2) * n, 24 * s)
            + F(17 * d ** 4 + 13 * d ** 3 - 9 * d * d - 7 * d - 2, 12 * s))
    corr = (-F((d * d - 1) * n * n, 24 * e)
            - F((2 * d ** 4 - 9 * d ** 3 - 16 * d * d - 3 * d + 2) * n, 8 * s)
            - F(d ** 4 + 20 * d ** 3 + 9 * d * d - 20 * d - 10, 12 * (d - 2) * e * e))
    return main + F(n_seq(d, n + 1), n_seq(d, n)) * corr


SMALL_G = ((1, 0), (0, 1), (0, 2))


def closed_g_small(d: int, m: int, n: int, which: tuple[int, int]) -> int:
    """``G(plus, d, m, a, b, n)`` for ``(a, b)`` in (1,0), (0,1), (0,2) in the M-basis."""
    if n < 1:
        raise ValueError("need n >= 1")
    F = Fraction
    e = 4 * d + 1
    Mn, Mp = m_seq(d, n), m_seq(d, n - 1)
    c2, c3 = comb(d + 1, 2), comb(d + 1, 3)
    which = tuple(which)
    if which == (1, 0):
        v = (F(1, e) * (c3 * m + c2 * F(n + 1, 2)) * n * Mn
             + F(d, e) * c2 * (F(2 * (d - 1) * m, 3) + n + 1) * (n + 1) * Mp)
    elif which == (0, 1):
        v = F(c2, e) * (n * Mn + d * (2 * n + 2) * Mp)
    elif which == (0, 2):
        q = F(comb(2 * d + 2, 3), 4)
        v = ((q / e - F(6 * c2 * c2, e * e)) * n * Mn
             + q * F(2 * d, e) * (n + 1) * Mp
             + F(c2 * c2, e * e) * (n * n * e + 3 * n - 4 * d + 2) * Mp)
    else:
        raise ValueError(f"no closed form for (a, b) = {which}")
    return _as_int(v, "closed-form G")


# -- polynomiality in d -----------------------------------------------------

@dataclass
class DegreeReport:
    kind: str
    params: dict
    claimed_degree: int
    ds: list[int]
    values: list[int]
    bound_holds: bool
    exact_degree_holds: bool | None
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.bound_holds


def claimed_degree_in_d(kind: str, params: dict) -> int:
    if kind == "powersum":
        return 2 * params["k"] + params["n"] // 2
    if kind in ("gplus", "gminus"):
        return 2 * params["a"] + params["b"] + (params["n"] + 1) // 2
    raise ValueError(f"unknown kind {kind!r}")


def degree_in_d_check(kind: str, params: dict, dmax: int,
                      table: GTable | None = None) -> DegreeReport:
    """Sample the quantity at ``d = 1..dmax`` and difference in ``d``.

    ``kind`` is ``"powersum"`` (params ``family, n, k``), ``"gplus"`` or
    ``"gminus"`` (params ``m, n, a, b``).  The ``(deg+1)``-th differences
    must vanish.  For the G kinds the ``deg``-th differences are also
    expected to be nonzero; a failure there is only a warning.
    """
    deg = claimed_degree_in_d(kind, params)
    if dmax < deg + 3:
        raise ValueError(f"insufficient points: need dmax >= {deg + 3}, got {dmax}")
    ds = list(range(1, dmax + 1))
    if kind == "powersum":
        vals = [power_sum(params["family"], d, params["n"], params["k"], table=table) for d in ds]
    else:
        fam = "plus" if kind == "gplus" else "minus"
        vals = [g(fam, d, params["m"], params["a"], params["b"], params["n"], table) for d in ds]
    bound = all(v == 0 for v in forward_differences(vals, deg + 1))
    exact = None
    warnings = []
    if kind != "powersum":
        exact = any(v != 0 for v in forward_differences(vals, deg))
        if not exact:
            warnings.append(f"degree below the claimed {deg} for {params}")
    return DegreeReport(kind, dict(params), deg, ds, vals, bound, exact, warnings)


# -- basis form in n --------------------------------------------------------

@dataclass
class BasisFit:
    """``value(n) = A(n) * M_d(n) + B(n) * M_d(n+1)`` with polynomial ``A, B``."""

    d: int
    degree: int
    a_coeffs: list[Fraction]
    b_coeffs: list[Fraction]
    singular: bool = False

    @classmethod
    def fit(cls, d: int, degree: int, ns: Sequence[int], values: Sequence[int]) -> BasisFit:
        rows = []
        for n in ns:
            mn, mn1 = m_seq(d, n), m_seq(d, n + 1)
            rows.append([n ** j * mn for j in range(degree + 1)]
                        + [n ** j * mn1 for j in range(degree + 1)])
        x, singular = solve_exact(rows, values)
        return cls(d, degree, x[: degree + 1], x[degree + 1:], singular)

    def predict(self, n: int) -> Fraction:
        A = sum(c * n ** j for j, c in enumerate(self.a_coeffs))
        B = sum(c * n ** j for j, c in enumerate(self.b_coeffs))
        return A * m_seq(self.d, n) + B * m_seq(self.d, n + 1)


@dataclass
class BasisFitReport:
    family: str
    d: int
    k: int
    fit_ns: list[int]
    verify_ns: list[int]
    fit: BasisFit
    mismatches: list[int]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def basis_fit_check(family: str, d: int, k: int, n_fit: int, n_verify: int,
                    n_start: int | None = None, table: GTable | None = None) -> BasisFitReport:
    """Fit ``A, B`` of degree ``<= 2k`` on ``n_fit`` points, then test held-out ``n``."""
    _check_family(family)
    deg = 2 * k
    if n_fit < 2 * (deg + 1):
        raise ValueError(f"need n_fit >= {2 * (deg + 1)}")
    if n_start is None:
        n_start = 1 if family == "plus" else 2
    fit_ns = list(range(n_start, n_start + n_fit))
    verify_ns = list(range(n_start + n_fit, n_start + n_fit + n_verify))
    values = [power_sum(family, d, n, k, table=table) for n in fit_ns]
    bf = BasisFit.fit(d, deg, fit_ns, values)
    mismatches = [n for n in fit_ns + verify_ns
                  if bf.predict(n) != power_sum(family, d, n, k, table=table)]
    return BasisFitReport(family, d, k, fit_ns, verify_ns, bf, mismatches)
