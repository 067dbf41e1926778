"""Partitions, hook lengths, beta-sets, and the brute-force core oracle."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd
from typing import Iterable, Iterator

from .exceptions import BudgetExceededError, InfiniteFamilyError

#: enumerate_core gives up after examining this many candidate partitions
DEFAULT_ORACLE_BUDGET = 10**6


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive parts; ``Partition(())`` is empty."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for x in parts:
            if not isinstance(x, int) or x < 1:
                raise ValueError(f"parts must be positive integers, got {parts!r}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing, got {parts!r}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def sort_key(self) -> tuple:
        """Canonical output order: by size, then lexicographically by parts."""
        return (self.size, self.parts)

    def __str__(self):
        if not self.parts:
            return "()"
        return "(" + ",".join(map(str, self.parts)) + ")"


def _as_partition(p) -> Partition:
    return p if isinstance(p, Partition) else Partition(tuple(p))


def hook_lengths(p) -> list[list[int]]:
    """Hook length of every box, row by row (English convention)."""
    p = _as_partition(p)
    conj = p.conjugate().parts
    return [
        [(row - j) + (conj[j] - i) - 1 for j in range(row)]
        for i, row in enumerate(p.parts)
    ]


def beta_set(p) -> frozenset[int]:
    """First-column hook lengths ``{p_i + len(p) - i}`` (1-based ``i``)."""
    p = _as_partition(p)
    ell = len(p)
    return frozenset(part + ell - i for i, part in enumerate(p.parts, start=1))


def partition_from_beta(beta: Iterable[int]) -> Partition:
    """Inverse of :func:`beta_set`."""
    elems = sorted(set(beta), reverse=True)
    if any(x < 1 for x in elems):
        raise ValueError("not a valid beta-set (elements must be positive)")
    ell = len(elems)
    parts = tuple(b - (ell - i) for i, b in enumerate(elems, start=1))
    if parts and parts[-1] < 1:
        raise ValueError("not a valid beta-set (would require zero part)")
    return Partition(parts)


def size_from_beta(beta: Iterable[int]) -> int:
    """Size of the partition encoded by a beta-set: sum minus C(|beta|, 2)."""
    elems = set(beta)
    return sum(elems) - comb(len(elems), 2)


def has_distinct_parts(p) -> bool:
    p = _as_partition(p)
    return all(a > b for a, b in zip(p.parts, p.parts[1:]))


def beta_has_distinct_parts(beta: Iterable[int]) -> bool:
    """No two beta elements differ by exactly one."""
    elems = set(beta)
    return not any(x + 1 in elems for x in elems)


def is_t_core(p, t: int) -> bool:
    """Abacus test: every beta element ``x >= t`` has ``x - t`` in the set."""
    if t < 1:
        raise ValueError("t must be positive")
    beta = beta_set(p)
    return all(x - t in beta for x in beta if x >= t)


def is_t_core_by_hooks(p, t: int) -> bool:
    """Definition check: no hook length is divisible by ``t``."""
    if t < 1:
        raise ValueError("t must be positive")
    return all(h % t for row in hook_lengths(p) for h in row)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` with parts at most ``max_part``, reverse-lex order."""
    if max_part is None:
        max_part = n

    def rec(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    for parts in rec(n, max_part):
        yield Partition(parts)


def anderson_count(t1: int, t2: int) -> int:
    return factorial(t1 + t2 - 1) // (factorial(t1) * factorial(t2))


def olsson_stanton_max(t1: int, t2: int) -> int:
    return (t1 * t1 - 1) * (t2 * t2 - 1) // 24


def armstrong_mean(t1: int, t2: int) -> Fraction:
    return Fraction((t1 - 1) * (t2 - 1) * (t1 + t2 + 1), 24)


def enumerate_core(t1: int, t2: int, distinct: bool = False,
                   budget: int = DEFAULT_ORACLE_BUDGET) -> list[Partition]:
    """Every ``(t1, t2)``-core partition, optionally only those with distinct parts.

    Candidates are all partitions of size at most ``(t1^2-1)(t2^2-1)/24``,
    grown by prepending a new first row.  Deleting the first row of a
    partition leaves every other hook length unchanged, so the rows below
    the first of a core form a core again and pruning non-core prefixes
    loses nothing.  Each survivor is checked with :func:`is_t_core`.

    Raises :class:`BudgetExceededError` once more than ``budget`` candidates
    have been examined.
    """
    if t1 < 1 or t2 < 1:
        raise ValueError("core parameters must be positive")
    if gcd(t1, t2) != 1:
        raise InfiniteFamilyError(f"infinite family: gcd({t1}, {t2}) != 1")
    bound = olsson_stanton_max(t1, t2)

    def ok(parts: tuple[int, ...]) -> bool:
        q = Partition(parts)
        return is_t_core(q, t1) and is_t_core(q, t2)

    found: list[Partition] = []
    stack: list[tuple[int, ...]] = [()]
    examined = 0
    while stack:
        parts = stack.pop()
        found.append(Partition(parts))
        size = sum(parts)
        lo = parts[0] + (1 if distinct else 0) if parts else 1
        examined += max(0, bound - size + 1 - lo)
        if examined > budget:
            raise BudgetExceededError(f"oracle budget exceeded: more than {budget} candidates")
        for first in range(lo, bound - size + 1):
            cand = (first,) + parts
            if ok(cand) and (not distinct or has_distinct_parts(cand)):
                stack.append(cand)
    found.sort(key=Partition.sort_key)
    return found
