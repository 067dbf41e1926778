"""Nice subsets of the d x n grid and their correspondence with core partitions.

A nice subset is stored as its column heights: column ``j`` holds cells
``(1, j), ..., (h_j, j)``.  Downward closure is then automatic and the
remaining condition is that no two adjacent columns are both nonempty.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .partitions import Partition, beta_set, partition_from_beta

Cell = tuple[int, int]


@dataclass(frozen=True)
class NiceSubset:
    d: int
    n: int
    heights: tuple[int, ...]

    def __post_init__(self):
        h = tuple(self.heights)
        object.__setattr__(self, "heights", h)
        if len(h) != self.n:
            raise ValueError("need one height per column")
        if any(x < 0 or x > self.d for x in h):
            raise ValueError("column height out of range 0..d")
        if any(a and b for a, b in zip(h, h[1:])):
            raise ValueError("adjacent columns may not both be occupied")

    @classmethod
    def from_cells(cls, cells: Iterable[Cell], d: int, n: int) -> NiceSubset:
        cells = frozenset(cells)
        if not is_nice(cells, d, n):
            raise ValueError("cells do not form a nice subset")
        heights = [0] * n
        for i, j in cells:
            heights[j - 1] = max(heights[j - 1], i)
        return cls(d, n, tuple(heights))

    @property
    def cells(self) -> frozenset[Cell]:
        return frozenset((i, j) for j, h in enumerate(self.heights, start=1)
                         for i in range(1, h + 1))

    def __len__(self):
        return sum(self.heights)

    def __contains__(self, cell):
        i, j = cell
        return 1 <= j <= self.n and 1 <= i <= self.heights[j - 1]

    def sigma(self, m: int) -> int:
        return sigma(self, m)


def is_nice(cells: Iterable[Cell], d: int, n: int) -> bool:
    cells = set(cells)
    for i, j in cells:
        if not (1 <= i <= d and 1 <= j <= n):
            raise ValueError(f"cell {(i, j)} outside the {d}x{n} grid")
    for i, j in cells:
        if i > 1 and (i - 1, j) not in cells:
            return False
        if i == 1 and (1, j + 1) in cells:
            return False
    return True


def iter_nice_plus(d: int, n: int) -> Iterator[NiceSubset]:
    """Nice subsets of the ``d x n`` grid, lexicographic in column heights."""
    if d < 1 or n < 0:
        raise ValueError("need d >= 1 and n >= 0")

    def rec(j: int, prev_occupied: bool) -> Iterator[tuple[int, ...]]:
        if j == n:
            yield ()
            return
        top = 0 if prev_occupied else d
        for h in range(top + 1):
            for rest in rec(j + 1, h > 0):
                yield (h,) + rest

    for heights in rec(0, False):
        yield NiceSubset(d, n, heights)


def iter_nice_minus(d: int, n: int) -> Iterator[NiceSubset]:
    """Nice subsets avoiding the corner cell ``(d, n)``."""
    if n < 1:
        raise ValueError("need n >= 1")
    for s in iter_nice_plus(d, n):
        if s.heights[-1] < d:
            yield s


def enumerate_nice_plus(d: int, n: int) -> list[NiceSubset]:
    return list(iter_nice_plus(d, n))


def enumerate_nice_minus(d: int, n: int) -> list[NiceSubset]:
    return list(iter_nice_minus(d, n))


def sigma(subset, m: int) -> int:
    """Sum of ``(i-1)*m + j`` over the cells ``(i, j)``."""
    cells = subset.cells if isinstance(subset, NiceSubset) else subset
    return sum((i - 1) * m + j for i, j in cells)


def psi(p, n: int, d: int | None = None) -> NiceSubset:
    """Nice subset of cells ``(i, j)`` with ``(i-1)n + j`` in the beta-set of ``p``.

    ``p`` must be an n-core with distinct parts.  The ambient grid has
    ``n - 1`` columns and ``d`` rows (default: the smallest that fits).
    """
    if n < 1:
        raise ValueError("n must be positive")
    beta = beta_set(p)
    cells = set()
    for x in beta:
        q, j = divmod(x, n)
        if j == 0:
            raise ValueError(f"not an n-core beta-set: {x} is divisible by {n}")
        if x >= n and x - n not in beta:
            raise ValueError(f"not an n-core beta-set: {x} present but {x - n} missing")
        cells.add((q + 1, j))
    rows = max((i for i, _ in cells), default=0)
    if d is None:
        d = max(rows, 1)
    elif rows > d:
        raise ValueError(f"partition needs {rows} rows, grid has {d}")
    if not is_nice(cells, d, n - 1):
        raise ValueError("beta-set has adjacent first-row elements (repeated parts)")
    return NiceSubset.from_cells(cells, d, n - 1)


def psi_inverse(subset, n: int) -> Partition:
    """Partition whose beta-set is ``{(i-1)n + j}`` over the cells of ``subset``."""
    cells = subset.cells if isinstance(subset, NiceSubset) else frozenset(subset)
    for _, j in cells:
        if not 1 <= j <= n - 1:
            raise ValueError(f"column {j} out of range for n = {n}")
    return partition_from_beta((i - 1) * n + j for i, j in cells)
