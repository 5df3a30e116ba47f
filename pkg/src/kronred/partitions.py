"""Partitions, compositions and signed permutations.

A partition is stored as a tuple subclass in canonical form: positive,
weakly decreasing parts with no trailing zeros.  Every operation treats it
as an infinite vector padded with zeros.

Generation orders are fixed so that test fixtures are stable:

* :func:`partitions_of` yields in reverse-lexicographic order, e.g.
  ``(4), (3,1), (2,2), (2,1,1), (1,1,1,1)``.
* :func:`permutations_of` yields in lexicographic order of the image vector.
"""

from __future__ import annotations

import itertools
import os
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

# Inputs larger than this are rejected by the Kronecker/character entry points.
MAX_SIZE = int(os.environ.get("KRONRED_MAX_SIZE", "64"))


class SizeLimitError(ValueError):
    pass


def check_size(n: int, limit: int | None = None) -> None:
    limit = MAX_SIZE if limit is None else limit
    if n > limit:
        raise SizeLimitError(f"size {n} exceeds the configured limit {limit}")


class Partition(tuple):
    """Immutable integer partition in canonical form.

    Trailing zeros are stripped on construction; anything else that is not
    a weakly decreasing sequence of positive integers raises ``ValueError``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = list(parts)
        while parts and parts[-1] == 0:
            parts.pop()
        for i, p in enumerate(parts):
            if not isinstance(p, int) or isinstance(p, bool):
                raise ValueError(f"partition parts must be integers, got {p!r}")
            if p <= 0:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and p > parts[i - 1]:
                raise ValueError(f"partition parts must weakly decrease: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """Return the ``i``-th part (0-based) with zero padding."""
        return self[i] if i < len(self) else 0

    def transpose(self) -> "Partition":
        return transpose(self)

    def __repr__(self) -> str:
        return f"Partition({render(self)})"


def _raw_transpose(p: Sequence[int]) -> tuple:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def transpose(p: Sequence[int]) -> Partition:
    """Conjugate partition: ``p'_j = max{i : p_i >= j}``."""
    return Partition(_raw_transpose(tuple(p)))


def add_rows(p: Sequence[int], q: Sequence[int]) -> Partition:
    """Row-wise sum ``(p+q)_i = p_i + q_i``."""
    n = max(len(p), len(q))
    return Partition(
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)
    )


def diamond(p: Sequence[int], q: Sequence[int]) -> Partition:
    """``(p' + q')'``, which is the multiset union of the rows of p and q."""
    return Partition(sorted(tuple(p) + tuple(q), reverse=True))


def rectangle(a: int, b: int) -> Partition:
    """The partition ``a^b``: b rows of length a."""
    if a < 1 or b < 1:
        raise ValueError("rectangle sides must be positive")
    return Partition((a,) * b)


def scale(p: Sequence[int], k: int) -> Partition:
    return Partition(k * x for x in p)


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """True iff the Young diagram of ``inner`` fits inside ``outer``."""
    if len(inner) > len(outer):
        return False
    return all(i <= o for i, o in zip(inner, outer))


def intersect(p: Sequence[int], q: Sequence[int]) -> tuple:
    """Diagram intersection (componentwise minimum), as a raw tuple."""
    out = []
    for a, b in zip(p, q):
        m = a if a < b else b
        if m == 0:
            break
        out.append(m)
    return tuple(out)


def partitions_of(
    n: int, max_length: int | None = None, max_part: int | None = None
) -> Iterator[Partition]:
    """Yield every partition of ``n`` within the bounds, reverse-lex order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    for p in _partitions_cached(n, n if max_length is None else max_length,
                                n if max_part is None else max_part):
        yield Partition(p)


@lru_cache(maxsize=None)
def _partitions_cached(n: int, max_length: int, max_part: int) -> tuple:
    out: list[tuple] = []

    def rec(remaining: int, bound: int, prefix: list) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if len(prefix) == max_length:
            return
        for part in range(min(bound, remaining), 0, -1):
            # Enough room left for the remainder?
            if part * (max_length - len(prefix)) < remaining:
                break
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(n, max_part, [])
    return tuple(out)


def raw_partitions(n: int) -> tuple:
    """All partitions of n as plain tuples (cached, reverse-lex)."""
    return _partitions_cached(n, n, n)


@lru_cache(maxsize=None)
def subpartitions(outer: tuple, size: int) -> tuple:
    """All partitions of ``size`` whose diagram fits in ``outer`` (raw tuples)."""
    outer = tuple(outer)
    if size < 0 or size > sum(outer):
        return ()
    # suffix capacities for pruning
    cap = [0] * (len(outer) + 1)
    for i in range(len(outer) - 1, -1, -1):
        cap[i] = cap[i + 1] + outer[i]
    out: list[tuple] = []

    def rec(i: int, remaining: int, bound: int, prefix: list) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if i == len(outer):
            return
        top = min(bound, outer[i], remaining)
        for part in range(top, 0, -1):
            # rows below are bounded by `part` and by the outer shape
            rest = 0
            for k in range(i + 1, len(outer)):
                rest += min(part, outer[k])
            if part + rest < remaining:
                break
            prefix.append(part)
            rec(i + 1, remaining - part, part, prefix)
            prefix.pop()

    rec(0, size, size, [])
    return tuple(out)


@dataclass(frozen=True)
class PermutationVector:
    """A permutation as its image vector (1-based) together with its sign."""

    images: tuple
    sign: int

    def __len__(self) -> int:
        return len(self.images)


def permutation_sign(images: Sequence[int]) -> int:
    seen = [False] * len(images)
    sign = 1
    for start in range(len(images)):
        if seen[start]:
            continue
        j, cycle = start, 0
        while not seen[j]:
            seen[j] = True
            j = images[j] - 1
            cycle += 1
        if cycle % 2 == 0:
            sign = -sign
    return sign


def permutations_of(k: int) -> Iterator[PermutationVector]:
    """All k! permutations of 1..k in lexicographic order, with signs."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    for images in itertools.permutations(range(1, k + 1)):
        yield PermutationVector(images, permutation_sign(images))


def weak_compositions(n: int, k: int) -> Iterator[tuple]:
    """Length-k tuples of nonnegative integers summing to n (lex order)."""
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in weak_compositions(n - first, k - 1):
            yield (first,) + rest


_PARTITION_RE = re.compile(r"^\s*\[\s*((?:\d+\s*(?:,\s*\d+\s*)*)?)\]\s*$")


def parse(text: str) -> Partition:
    """Parse bracket syntax ``[4,2,1]`` / ``[]``."""
    m = _PARTITION_RE.match(text)
    if not m:
        raise ValueError(f"malformed partition {text!r}; expected e.g. [4,2,1] or []")
    body = m.group(1).strip()
    if not body:
        return Partition()
    parts = [int(x) for x in body.split(",")]
    if parts and parts[-1] == 0:
        raise ValueError(f"malformed partition {text!r}: zero parts are not allowed")
    return Partition(parts)


def render(p: Sequence[int]) -> str:
    return "[" + ",".join(str(x) for x in p) + "]"
