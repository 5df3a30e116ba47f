"""Three-dimensional binary contingency arrays with prescribed marginals.

``C(alpha, beta, gamma)`` counts subsets Q of the integer grid whose plane
sums are ``|Q cap {x=i}| = alpha_i``, ``|Q cap {y=j}| = beta_j`` and
``|Q cap {z=k}| = gamma_k``.

Counting goes layer by layer along z.  Each z-layer is a 0/1 matrix whose
row and column sums are bounded by what is left of the x- and y-budgets.
The count only depends on the budgets as multisets, so the memo key is the
pair of sorted remaining budgets plus the remaining layer totals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence


@dataclass(frozen=True)
class Marginals3D:
    alpha: tuple
    beta: tuple
    gamma: tuple
    valid: bool

    @property
    def total(self) -> int:
        return sum(self.alpha) if self.valid else -1

    @property
    def box(self) -> tuple:
        return (_length(self.alpha), _length(self.beta), _length(self.gamma))


def _length(v: Sequence[int]) -> int:
    n = len(v)
    while n and v[n - 1] == 0:
        n -= 1
    return n


def marginals(alpha: Sequence[int], beta: Sequence[int], gamma: Sequence[int]) -> Marginals3D:
    """Build marginals; negative entries or unequal totals mark them invalid."""
    alpha, beta, gamma = tuple(alpha), tuple(beta), tuple(gamma)
    valid = (
        all(x >= 0 for x in alpha + beta + gamma)
        and sum(alpha) == sum(beta) == sum(gamma)
    )
    return Marginals3D(alpha, beta, gamma, valid)


@dataclass(frozen=True)
class ContingencyArray:
    """A finite point set in the positive grid, i.e. a 0/1 array."""

    points: frozenset
    box: tuple = (0, 0, 0)

    def __post_init__(self):
        a, b, c = self.box
        for p in self.points:
            if not (1 <= p[0] <= a and 1 <= p[1] <= b and 1 <= p[2] <= c):
                raise ValueError(f"point {p} outside box {self.box}")

    def __contains__(self, p) -> bool:
        return tuple(p) in self.points

    def __len__(self) -> int:
        return len(self.points)

    def marginals(self) -> Marginals3D:
        a, b, c = self.box
        x, y, z = [0] * a, [0] * b, [0] * c
        for i, j, k in self.points:
            x[i - 1] += 1
            y[j - 1] += 1
            z[k - 1] += 1
        return marginals(x, y, z)

    def dump(self) -> str:
        """One ``i j k`` line per point, sorted lexicographically."""
        return "\n".join(f"{i} {j} {k}" for i, j, k in sorted(self.points))


# ---------------------------------------------------------------------------
# counting


def _layer_outcomes(alpha: tuple, beta: tuple, g: int) -> dict:
    """All ways to place one layer of ``g`` points.

    Returns ``{(alpha_left, beta_left): number_of_layers}``.
    """
    out: dict[tuple, int] = {}
    a = len(alpha)
    # suffix sums of row capacity for pruning
    cap = [0] * (a + 1)
    for i in range(a - 1, -1, -1):
        cap[i] = cap[i + 1] + min(alpha[i], len(beta))

    def rec(i: int, left: int, arow: list, bcol: list) -> None:
        if left == 0:
            key = (tuple(arow[:i]) + alpha[i:], tuple(bcol))
            out[key] = out.get(key, 0) + 1
            return
        if i == a or cap[i] < left:
            return
        avail = [j for j, v in enumerate(bcol) if v > 0]
        top = min(alpha[i], left, len(avail))
        for r in range(top, -1, -1):
            for cols in itertools.combinations(avail, r):
                for j in cols:
                    bcol[j] -= 1
                arow.append(alpha[i] - r)
                rec(i + 1, left - r, arow, bcol)
                arow.pop()
                for j in cols:
                    bcol[j] += 1

    rec(0, g, [], list(beta))
    return out


def _canon(v: tuple) -> tuple:
    return tuple(sorted((x for x in v if x), reverse=True))


@lru_cache(maxsize=None)
def _count(alpha: tuple, beta: tuple, gammas: tuple) -> int:
    if not gammas:
        return 1 if not alpha and not beta else 0
    layers = len(gammas)
    # every remaining budget must fit in the remaining box
    if alpha and alpha[0] > len(beta) * layers:
        return 0
    if beta and beta[0] > len(alpha) * layers:
        return 0
    if gammas[0] > len(alpha) * len(beta):
        return 0
    total = 0
    for (a_left, b_left), mult in _layer_outcomes(alpha, beta, gammas[0]).items():
        total += mult * _count(_canon(a_left), _canon(b_left), gammas[1:])
    return total


def count_arrays(m: Marginals3D) -> int:
    """|C(alpha, beta, gamma)|; 0 for invalid marginals."""
    if not m.valid:
        return 0
    return _count(_canon(m.alpha), _canon(m.beta), _canon(m.gamma))


def count(alpha: Sequence[int], beta: Sequence[int], gamma: Sequence[int]) -> int:
    return count_arrays(marginals(alpha, beta, gamma))


def clear_cache() -> None:
    _count.cache_clear()


def count_arrays_bruteforce(m: Marginals3D) -> int:
    """Reference count: subsets of the bounding box built point by point.

    Points are chosen in lexicographic order, so x-plane i is finished
    before plane i+1 starts.  No memoization and no symmetry reduction;
    every array found is one leaf of the search.
    """
    if not m.valid:
        return 0
    a, b, c = m.box
    plane = b * c
    cells = [(j, k) for j in range(b) for k in range(c)]
    x, y, z = list(m.alpha[:a]), list(m.beta[:b]), list(m.gamma[:c])

    def rec(i: int, start: int, left: int) -> int:
        if left == 0:
            return 1
        while not x[i]:
            i, start = i + 1, 0
        total = 0
        for q in range(start, plane):
            if plane - q < x[i]:
                break
            j, k = cells[q]
            if y[j] and z[k]:
                x[i] -= 1; y[j] -= 1; z[k] -= 1
                total += rec(i, q + 1, left - 1)
                x[i] += 1; y[j] += 1; z[k] += 1
        return total

    return rec(0, 0, sum(x))


def enumerate_arrays(m: Marginals3D) -> Iterator[ContingencyArray]:
    """Yield every array with the given marginals exactly once.

    Layers are filled one at a time, rows within a layer by column subsets.
    A partial array is abandoned at a layer boundary when the counting DP
    says its remaining budgets have no completion.
    """
    if not m.valid:
        return
    a, b, c = m.box
    alpha, beta, gamma = list(m.alpha[:a]), list(m.beta[:b]), list(m.gamma[:c])
    points: list[tuple] = []

    def layer(k: int):
        if k == c:
            if not any(alpha) and not any(beta):
                yield ContingencyArray(frozenset(points), (a, b, c))
            return
        if _count(_canon(alpha), _canon(beta), _canon(gamma[k:])):
            yield from row(k, 0, gamma[k])

    def row(k: int, i: int, left: int):
        if left == 0:
            # rows i.. take nothing from this layer
            if all(alpha[t] <= (c - k - 1) * b for t in range(i, a)):
                yield from layer(k + 1)
            return
        if i == a:
            return
        avail = [j for j in range(b) if beta[j] > 0]
        top = min(alpha[i], left, len(avail))
        # what this row leaves must fit in the later layers
        least = max(0, alpha[i] - (c - k - 1) * b)
        for r in range(top, least - 1, -1):
            for cols in itertools.combinations(avail, r):
                for j in cols:
                    beta[j] -= 1
                    points.append((i + 1, j + 1, k + 1))
                alpha[i] -= r
                yield from row(k, i + 1, left - r)
                alpha[i] += r
                for j in cols:
                    beta[j] += 1
                    points.pop()

    yield from layer(0)


# ---------------------------------------------------------------------------
# forced structure


@dataclass
class ForcedStructureReport:
    arrays: int
    forced_slabs_present: bool
    tail_exact: bool
    derived: dict
    failures: list

    @property
    def holds(self) -> bool:
        return self.forced_slabs_present and self.tail_exact and all(self.derived.values())


def check_forced_structure(m: Marginals3D, a: int, b: int, c: int, h: int) -> ForcedStructureReport:
    """Enumerate C(alpha,beta,gamma) and test the forced slabs and tail line.

    With ``x=1`` and ``y=1`` planes forced over the first c layers, the
    layers c+1..c+h may only contain the points (1,1,k).
    """
    if not m.valid:
        raise ValueError("hypothesis failed: marginals must be nonnegative with equal totals")
    alpha, beta, gamma = m.alpha, m.beta, m.gamma
    ell = _length
    hyps = [
        ("a >= len(alpha)", a >= ell(alpha)),
        ("b >= len(beta)", b >= ell(beta)),
        ("c + h >= len(gamma)", c + h >= ell(gamma)),
        ("sum_{i>c} gamma_i <= h", sum(gamma[c:]) <= h),
        ("alpha_1 >= b*c + h", (alpha[0] if alpha else 0) >= b * c + h),
        ("beta_1 >= a*c + h", (beta[0] if beta else 0) >= a * c + h),
    ]
    for name, ok in hyps:
        if not ok:
            raise ValueError(f"hypothesis failed: {name}")

    forced = set()
    forced.update((1, j, k) for j in range(1, b + 1) for k in range(1, c + 1))
    forced.update((i, 1, k) for i in range(1, a + 1) for k in range(1, c + 1))
    forced.update((1, 1, k) for k in range(1, c + h + 1))
    tail_line = {(1, 1, k) for k in range(c + 1, c + h + 1)}

    n = 0
    slabs_ok = tail_ok = True
    failures = []
    for q in enumerate_arrays(m):
        n += 1
        pts = q.points
        if not forced <= pts:
            slabs_ok = False
            failures.append(("missing forced cells", sorted(forced - pts)))
        tail = {p for p in pts if c + 1 <= p[2] <= c + h}
        if tail != tail_line:
            tail_ok = False
            failures.append(("tail layers", sorted(tail ^ tail_line)))

    derived: dict[str, bool] = {}
    if n:
        g = lambda v, i: v[i] if i < len(v) else 0  # noqa: E731
        derived = {
            "a = len(alpha)": a == ell(alpha),
            "b = len(beta)": b == ell(beta),
            "gamma_i = 1 on the tail": all(g(gamma, i) == 1 for i in range(c, c + h)),
            "alpha_1 = b*c + h": g(alpha, 0) == b * c + h,
            "beta_1 = a*c + h": g(beta, 0) == a * c + h,
            "alpha_2 <= b*c": g(alpha, 1) <= b * c,
            "beta_2 <= a*c": g(beta, 1) <= a * c,
        }
    return ForcedStructureReport(n, slabs_ok, tail_ok, derived, failures)
