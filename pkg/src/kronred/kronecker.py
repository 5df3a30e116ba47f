"""Kronecker coefficients of the symmetric group.

Three independent exact algorithms:

``char_sum``
    class-grouped character sum, divided by n!.
``multi_lr_sum``
    Jacobi-Trudi expansion of s_lam[x.y]: an alternating sum over the
    permutations of ``len(lam)`` of products of two multi-LR coefficients.
``contingency_sum``
    alternating sum of binary contingency-array counts over three symmetric
    groups.

:func:`kron` is the dispatcher.  It applies the length-product vanishing test
first, memoizes per algorithm under the canonical key of the symmetry orbit,
and feeds the algorithm whichever member of the orbit is cheapest for it.
The raw ``kron_*`` functions evaluate exactly the triple they are given.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial
from typing import Sequence

from .characters import _class_size, _mn
from .contingency import count_arrays, marginals
from .partitions import (
    Partition,
    check_size,
    intersect,
    permutations_of,
    raw_partitions,
    render,
    subpartitions,
)
from .tableaux import _skew_lr

CHAR_SUM = "char_sum"
MULTI_LR_SUM = "multi_lr_sum"
CONTINGENCY_SUM = "contingency_sum"
DVIR_ZERO = "dvir_zero"
ALGORITHMS = (CHAR_SUM, MULTI_LR_SUM, CONTINGENCY_SUM)

# Above this size the character sum is slower than the multi-LR route.
CHAR_SUM_MAX_N = 12


class KroneckerInternalError(RuntimeError):
    """An alternating sum produced an impossible value (negative or inexact)."""


@dataclass(frozen=True)
class PartitionTriple:
    first: Partition
    second: Partition
    third: Partition

    def __iter__(self):
        return iter((self.first, self.second, self.third))

    @property
    def balanced(self) -> bool:
        return self.first.size == self.second.size == self.third.size

    def render(self) -> str:
        return " ".join(render(p) for p in self)


@dataclass(frozen=True)
class CoefficientResult:
    value: int
    algorithm: str
    triple: PartitionTriple

    def __int__(self) -> int:
        return self.value


def _triple(lam, mu, nu) -> PartitionTriple:
    return PartitionTriple(Partition(lam), Partition(mu), Partition(nu))


def _checked(value: int, triple: PartitionTriple, algorithm: str) -> CoefficientResult:
    if value < 0:
        raise KroneckerInternalError(
            f"{algorithm} gave negative value {value} for {triple.render()}"
        )
    return CoefficientResult(value, algorithm, triple)


# ---------------------------------------------------------------------------
# character sum


def kron_char_sum(lam, mu, nu) -> CoefficientResult:
    t = _triple(lam, mu, nu)
    if not t.balanced:
        return CoefficientResult(0, CHAR_SUM, t)
    n = t.first.size
    check_size(n)
    a, b, c = tuple(t.first), tuple(t.second), tuple(t.third)
    total = 0
    for rho in raw_partitions(n):
        x = _mn(a, rho)
        if not x:
            continue
        y = _mn(b, rho)
        if not y:
            continue
        z = _mn(c, rho)
        if z:
            total += _class_size(rho) * x * y * z
    q, r = divmod(total, factorial(n))
    if r:
        raise KroneckerInternalError(
            f"character sum {total} not divisible by {n}! for {t.render()}"
        )
    return _checked(q, t, CHAR_SUM)


# ---------------------------------------------------------------------------
# multi-LR sum


def kron_multi_lr(lam, mu, nu) -> CoefficientResult:
    """Alternating multi-LR sum with the permutation running over len(lam).

    The determinant is expanded row by row: states are the set of columns
    already used, plus what is left of mu and nu after peeling off the
    blocks chosen so far.  Row i with column j contributes blocks of size
    lam_i - i + j, which must fit inside both remainders.
    """
    t = _triple(lam, mu, nu)
    if not t.balanced:
        return CoefficientResult(0, MULTI_LR_SUM, t)
    check_size(t.first.size)
    rows = tuple(t.first)
    ell = len(rows)
    states: dict[tuple, int] = {(0, tuple(t.second), tuple(t.third)): 1}
    for i in range(ell):
        new: dict[tuple, int] = {}
        for (mask, tm, tn), coeff in states.items():
            box = intersect(tm, tn)
            for j in range(1, ell + 1):
                bit = 1 << j
                if mask & bit:
                    continue
                size = rows[i] - (i + 1) + j
                if size < 0:
                    continue
                # sign of appending j after the columns already used
                inversions = bin(mask >> (j + 1)).count("1")
                sc = -coeff if inversions & 1 else coeff
                nmask = mask | bit
                for alpha in subpartitions(box, size):
                    em = _skew_lr(tm, alpha)
                    if not em:
                        continue
                    en = _skew_lr(tn, alpha)
                    for rm, cm in em.items():
                        for rn, cn in en.items():
                            key = (nmask, rm, rn)
                            new[key] = new.get(key, 0) + sc * cm * cn
        states = {k: v for k, v in new.items() if v}
    full = sum(1 << j for j in range(1, ell + 1))
    return _checked(states.get((full, (), ()), 0), t, MULTI_LR_SUM)


# ---------------------------------------------------------------------------
# contingency sum


def _shifted(p: Sequence[int], length: int) -> dict:
    """Signed multiset of p + sigma - id over sigma in S_length.

    Vectors with a negative entry are dropped (their count is zero).  The
    rest are grouped by sorted content, which is all the count depends on.
    """
    out: dict[tuple, int] = {}
    padded = tuple(p) + (0,) * (length - len(p))
    for perm in permutations_of(length):
        v = tuple(padded[i] + perm.images[i] - (i + 1) for i in range(length))
        if min(v, default=0) < 0:
            continue
        key = tuple(sorted(v, reverse=True))
        out[key] = out.get(key, 0) + perm.sign
    return {k: s for k, s in out.items() if s}


def kron_contingency(lam, mu, nu) -> CoefficientResult:
    t = _triple(lam, mu, nu)
    if not t.balanced:
        return CoefficientResult(0, CONTINGENCY_SUM, t)
    check_size(t.first.size)
    gamma = t.third.transpose()
    xs = _shifted(t.first, len(t.first))
    ys = _shifted(t.second, len(t.second))
    zs = _shifted(gamma, len(gamma))
    total = 0
    for x, sx in xs.items():
        for y, sy in ys.items():
            for z, sz in zs.items():
                c = count_arrays(marginals(x, y, z))
                if c:
                    total += sx * sy * sz * c
    return _checked(total, t, CONTINGENCY_SUM)


# ---------------------------------------------------------------------------
# symmetry helpers and dispatch


def dvir_vanishes(lam, mu, nu) -> bool:
    """len(x) > len(y)*len(z) for some role assignment."""
    a, b, c = (len(Partition(p)) for p in (lam, mu, nu))
    return a > b * c or b > a * c or c > a * b


def orbit(lam, mu, nu) -> list:
    """The 24 triples related by reordering and transposing pairs."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    flips = [(False, False, False), (True, True, False), (True, False, True), (False, True, True)]
    out = []
    for f in flips:
        base = [p.transpose() if flip else p for p, flip in zip((lam, mu, nu), f)]
        for perm in itertools.permutations(base):
            out.append(tuple(perm))
    return out


def canonical_key(lam, mu, nu) -> str:
    """Orbit representative under reordering and transposing pairs, as text."""
    return min(" ".join(render(p) for p in t) for t in orbit(lam, mu, nu))


def _multi_lr_cost(t) -> tuple:
    lam, mu, nu = t
    return (lam.size - (lam[0] if lam else 0), len(lam), len(mu) + len(nu))


def _contingency_cost(t) -> tuple:
    lam, mu, nu = t
    return (factorial(len(lam)) * factorial(len(mu)) * factorial(nu[0] if nu else 0),)


_MEMO: dict[tuple, int] = {}


def clear_cache() -> None:
    _MEMO.clear()


ALIASES = {"char": CHAR_SUM, "mlr": MULTI_LR_SUM, "ct": CONTINGENCY_SUM}


def resolve_algorithm(algorithm: str | None, n: int) -> str:
    """Full algorithm name; ``None`` picks by size."""
    if algorithm is None:
        return CHAR_SUM if n <= CHAR_SUM_MAX_N else MULTI_LR_SUM
    algorithm = ALIASES.get(algorithm, algorithm)
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}; choose from {', '.join(ALGORITHMS)}")
    return algorithm


_RAW = {CHAR_SUM: kron_char_sum, MULTI_LR_SUM: kron_multi_lr, CONTINGENCY_SUM: kron_contingency}


def kron(lam, mu, nu, algorithm: str | None = None, vanishing: bool = True) -> CoefficientResult:
    """k(lam, mu, nu) by the requested algorithm (auto-selected if None).

    With ``vanishing=False`` the length test is skipped, so the algorithm
    itself produces every value.
    """
    t = _triple(lam, mu, nu)
    n = t.first.size
    algo = resolve_algorithm(algorithm, n)
    if not t.balanced:
        return CoefficientResult(0, algo, t)
    if vanishing and dvir_vanishes(*t):
        return CoefficientResult(0, DVIR_ZERO, t)
    key = (algo, canonical_key(*t))
    if key in _MEMO:
        return CoefficientResult(_MEMO[key], algo, t)
    if algo == CHAR_SUM:
        value = kron_char_sum(*t).value
    else:
        cost = _multi_lr_cost if algo == MULTI_LR_SUM else _contingency_cost
        best = min(orbit(*t), key=cost)
        value = _RAW[algo](*best).value
    _MEMO[key] = value
    return CoefficientResult(value, algo, t)


def kron_value(lam, mu, nu, algorithm: str | None = None) -> int:
    return kron(lam, mu, nu, algorithm).value


def kron_prime(lam, mu, nu, algorithm: str | None = None) -> CoefficientResult:
    """k with the third argument transposed."""
    nu = Partition(nu)
    r = kron(lam, mu, nu.transpose(), algorithm)
    return CoefficientResult(r.value, r.algorithm, _triple(lam, mu, nu))
