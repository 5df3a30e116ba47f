"""Irreducible characters of the symmetric group.

Values come from the Murnaghan-Nakayama rule evaluated on beta-sets: removing
a border strip of length r from a shape is the same as sliding one bead of
its beta-set down by r.  Results are memoized in :data:`CHARACTER_CACHE`,
keyed by ``(shape, cycle_type)`` in canonical tuple form.  The cache is a
plain dict; each worker process gets its own copy.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Sequence

from .partitions import Partition, check_size, raw_partitions

CHARACTER_CACHE: dict[tuple, int] = {}


def clear_cache() -> None:
    CHARACTER_CACHE.clear()
    _class_size.cache_clear()


def character(shape: Sequence[int], cycle_type: Sequence[int]) -> int:
    """chi^shape evaluated at a permutation of the given cycle type."""
    lam = Partition(shape)
    mu = Partition(cycle_type)
    if lam.size != mu.size:
        raise ValueError(
            f"character needs equal sizes, got |{tuple(lam)}|={lam.size} "
            f"and |{tuple(mu)}|={mu.size}"
        )
    check_size(lam.size)
    return _mn(tuple(lam), tuple(mu))


def _mn(shape: tuple, cycles: tuple) -> int:
    key = (shape, cycles)
    hit = CHARACTER_CACHE.get(key)
    if hit is not None:
        return hit
    if not cycles:
        value = 1 if not shape else 0
        CHARACTER_CACHE[key] = value
        return value
    r = cycles[0]
    rest = cycles[1:]
    n = len(shape)
    beta = [shape[i] + n - 1 - i for i in range(n)]
    beads = set(beta)
    value = 0
    for b in beta:
        t = b - r
        if t < 0 or t in beads:
            continue
        height = sum(1 for x in beta if t < x < b)
        new_beta = sorted((t if x == b else x for x in beta), reverse=True)
        new_shape = [new_beta[i] - (n - 1 - i) for i in range(n)]
        while new_shape and new_shape[-1] == 0:
            new_shape.pop()
        term = _mn(tuple(new_shape), rest)
        value += -term if height & 1 else term
    CHARACTER_CACHE[key] = value
    return value


@lru_cache(maxsize=None)
def _class_size(cycle_type: tuple) -> int:
    n = sum(cycle_type)
    z = 1
    for part, mult in Counter(cycle_type).items():
        z *= part ** mult * factorial(mult)
    return factorial(n) // z


def class_size(cycle_type: Sequence[int]) -> int:
    """Number of permutations in S_n with the given cycle type (n!/z_mu)."""
    return _class_size(tuple(Partition(cycle_type)))


def sign_of_class(cycle_type: Sequence[int]) -> int:
    mu = Partition(cycle_type)
    return -1 if (mu.size - mu.length) % 2 else 1


def character_table(n: int) -> dict[tuple, dict[tuple, int]]:
    """Full character table of S_n as ``{shape: {cycle_type: value}}``."""
    check_size(n)
    parts = raw_partitions(n)
    return {lam: {mu: _mn(lam, mu) for mu in parts} for lam in parts}
