"""Semistandard tableaux, ballot words and Littlewood-Richardson numbers.

The workhorse is :func:`skew_expansion`, which enumerates LR tableaux of a
skew shape cell by cell in reading order (right to left along rows, top row
first), pruning on the ballot condition as it goes.  Grouping the fillings
by content gives the whole expansion ``s_{outer/inner} = sum c s_nu`` at
once; single coefficients and iterated (multi-)LR sums reuse it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .partitions import Partition, contains


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = field(default_factory=Partition)

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not contains(self.outer, self.inner):
            raise ValueError(f"{tuple(self.inner)} is not contained in {tuple(self.outer)}")

    def row_cells(self, i: int) -> range:
        lo = self.inner.part(i)
        return range(lo, self.outer.part(i))

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size


@dataclass(frozen=True)
class Tableau:
    """A filling of a (skew) diagram.

    ``rows[i]`` lists the entries of row i from left to right, covering the
    cells ``inner_i .. outer_i - 1``.
    """

    shape: SkewShape
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if len(rows) < len(self.shape.outer):
            rows = rows + ((),) * (len(self.shape.outer) - len(rows))
        object.__setattr__(self, "rows", rows)
        for i, r in enumerate(rows):
            if len(r) != len(self.shape.row_cells(i)):
                raise ValueError(f"row {i} has {len(r)} entries, shape needs "
                                 f"{len(self.shape.row_cells(i))}")

    @classmethod
    def straight(cls, rows: Sequence[Sequence[int]]) -> "Tableau":
        return cls(SkewShape(Partition(len(r) for r in rows)), tuple(rows))

    def entry(self, i: int, j: int) -> int | None:
        lo = self.shape.inner.part(i)
        if i < len(self.rows) and lo <= j < lo + len(self.rows[i]):
            return self.rows[i][j - lo]
        return None

    @property
    def type_vector(self) -> tuple:
        top = max((v for r in self.rows for v in r), default=0)
        counts = [0] * top
        for r in self.rows:
            for v in r:
                counts[v - 1] += 1
        return tuple(counts)


def reading_word(t: Tableau) -> tuple:
    """Rows read right to left, top row first."""
    word: list[int] = []
    for r in t.rows:
        word.extend(reversed(r))
    return tuple(word)


def is_ballot(word: Sequence[int]) -> bool:
    counts: dict[int, int] = {}
    for v in word:
        c = counts.get(v, 0) + 1
        if v > 1 and c > counts.get(v - 1, 0):
            return False
        counts[v] = c
    return True


def is_ssyt(t: Tableau) -> bool:
    for i, r in enumerate(t.rows):
        if any(v < 1 for v in r):
            return False
        if any(r[k] > r[k + 1] for k in range(len(r) - 1)):
            return False
        if i == 0:
            continue
        for j in t.shape.row_cells(i):
            above = t.entry(i - 1, j)
            if above is not None and above >= t.entry(i, j):
                return False
    return True


# ---------------------------------------------------------------------------
# LR tableaux


def _reading_cells(outer: tuple, inner: tuple) -> list:
    """Cells of outer/inner in reading order with neighbour bookkeeping.

    Each item is ``(row, right_index, above_index)`` where indices refer to
    positions in this list (-1 when the neighbour is absent or lies in the
    inner shape).
    """
    cells = []
    pos: dict[tuple, int] = {}
    for i, o in enumerate(outer):
        lo = inner[i] if i < len(inner) else 0
        for j in range(o - 1, lo - 1, -1):
            right = pos.get((i, j + 1), -1)
            above = pos.get((i - 1, j), -1)
            pos[(i, j)] = len(cells)
            cells.append((i, right, above))
    return cells


@lru_cache(maxsize=None)
def _skew_lr(outer: tuple, inner: tuple) -> dict:
    if not contains(outer, inner):
        return {}
    cells = _reading_cells(outer, inner)
    ncells = len(cells)
    if ncells == 0:
        return {(): 1}
    vals = [0] * ncells
    counts = [0] * (len(outer) + 2)
    result: dict[tuple, int] = {}

    def rec(idx: int) -> None:
        if idx == ncells:
            k = 1
            while counts[k]:
                k += 1
            content = tuple(counts[1:k])
            result[content] = result.get(content, 0) + 1
            return
        row, right, above = cells[idx]
        hi = row + 1
        if right >= 0 and vals[right] < hi:
            hi = vals[right]
        lo = vals[above] + 1 if above >= 0 else 1
        for v in range(lo, hi + 1):
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            vals[idx] = v
            counts[v] += 1
            rec(idx + 1)
            counts[v] -= 1

    rec(0)
    return result


def skew_expansion(outer: Sequence[int], inner: Sequence[int]) -> dict:
    """``{nu: c^outer_{inner,nu}}`` for every nu with a nonzero coefficient."""
    return dict(_skew_lr(tuple(Partition(outer)), tuple(Partition(inner))))


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """c^lam_{mu,nu}: LR tableaux of shape lam/mu and content nu."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size != mu.size + nu.size or not contains(lam, mu):
        return 0
    if not contains(lam, nu):
        return 0
    return _skew_lr(tuple(lam), tuple(mu)).get(tuple(nu), 0)


@dataclass(frozen=True)
class MultiLRSpec:
    shape: Partition
    block_types: tuple

    def __post_init__(self):
        object.__setattr__(self, "shape", Partition(self.shape))
        object.__setattr__(self, "block_types", tuple(Partition(b) for b in self.block_types))

    @property
    def balanced(self) -> bool:
        return self.shape.size == sum(b.size for b in self.block_types)


def multi_lr_coefficient(spec: MultiLRSpec) -> int:
    """Iterated LR sum: peel the blocks off the shape one skew at a time."""
    if not spec.balanced:
        return 0
    states = {tuple(spec.shape): 1}
    for block in spec.block_types:
        if not block:
            continue
        new: dict[tuple, int] = {}
        for tau, coeff in states.items():
            for rho, c in _skew_lr(tau, tuple(block)).items():
                new[rho] = new.get(rho, 0) + coeff * c
        states = new
        if not states:
            return 0
    return states.get((), 0)


def multi_lr(shape: Sequence[int], blocks: Sequence[Sequence[int]]) -> int:
    return multi_lr_coefficient(MultiLRSpec(Partition(shape), tuple(blocks)))


def _bands(blocks: Sequence[Partition]) -> tuple[tuple, list]:
    """Concatenated content and a value -> (band start value) map."""
    content: list[int] = []
    band_start: list[int] = [0]  # index 0 unused
    for b in blocks:
        start = len(content) + 1
        content.extend(b)
        band_start.extend([start] * len(b))
    return tuple(content), band_start


def is_multi_lr_tableau(t: Tableau, spec: MultiLRSpec) -> bool:
    """SSYT of the block-concatenated type whose value bands are all ballot.

    Band r holds the values ``1 + sum_{i<r} len(block_i) .. sum_{i<=r} len(block_i)``;
    its reading word, shifted to start at 1, must be a lattice word.
    """
    if t.shape.inner or t.shape.outer != spec.shape:
        return False
    if not is_ssyt(t):
        return False
    blocks = [b for b in spec.block_types if b]
    content, band_start = _bands(blocks)
    tv = t.type_vector
    if tv + (0,) * (len(content) - len(tv)) != content:
        return False
    word = reading_word(t)
    counts = [0] * (len(content) + 2)
    for v in word:
        counts[v] += 1
        if v != band_start[v] and counts[v] > counts[v - 1]:
            return False
    return True


def enumerate_multi_lr_tableaux(spec: MultiLRSpec) -> Iterator[Tableau]:
    """Direct enumeration of multi-LR tableaux (oracle for the iterated sum)."""
    if not spec.balanced:
        return
    blocks = [b for b in spec.block_types if b]
    content, band_start = _bands(blocks)
    outer = tuple(spec.shape)
    cells = _reading_cells(outer, ())
    ncells = len(cells)
    vals = [0] * ncells
    counts = [0] * (len(content) + 2)
    top = len(content)

    def rec(idx: int):
        if idx == ncells:
            rows = []
            k = 0
            for o in outer:
                rows.append(tuple(reversed(vals[k:k + o])))
                k += o
            yield Tableau(SkewShape(spec.shape), tuple(rows))
            return
        row, right, above = cells[idx]
        hi = vals[right] if right >= 0 else top
        lo = vals[above] + 1 if above >= 0 else 1
        for v in range(lo, hi + 1):
            if counts[v] >= content[v - 1]:
                continue
            if v != band_start[v] and counts[v] >= counts[v - 1]:
                continue
            vals[idx] = v
            counts[v] += 1
            yield from rec(idx + 1)
            counts[v] -= 1

    if ncells == 0:
        yield Tableau(SkewShape(spec.shape), ())
        return
    yield from rec(0)


def count_multi_lr_tableaux(spec: MultiLRSpec) -> int:
    return sum(1 for _ in enumerate_multi_lr_tableaux(spec))


def enumerate_ssyt(shape: Sequence[int], max_entry: int) -> Iterator[tuple]:
    """Yield the type vectors (length ``max_entry``) of all SSYT of ``shape``."""
    shape = tuple(Partition(shape))
    if len(shape) > max_entry:
        return
    cells = [(i, j) for i, r in enumerate(shape) for j in range(r)]
    grid: dict[tuple, int] = {}
    counts = [0] * max_entry

    def rec(k: int):
        if k == len(cells):
            yield tuple(counts)
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = grid[(i, j - 1)]
        if i > 0:
            lo = max(lo, grid[(i - 1, j)] + 1)
        # leave room for the rows below in this column
        col_below = sum(1 for r in shape[i + 1:] if r > j)
        for v in range(lo, max_entry - col_below + 1):
            grid[(i, j)] = v
            counts[v - 1] += 1
            yield from rec(k + 1)
            counts[v - 1] -= 1

    yield from rec(0)
