"""Reduced Kronecker coefficients and the triple constructors around them.

Two routes compute g(alpha, beta, gamma):

* :func:`reduced_by_bdo`: an exact finite sum of products of three multi-LR
  coefficients and one smaller Kronecker coefficient.
* :func:`reduced_by_stabilization`: evaluate k on the padded triples
  ``((n-|alpha|, alpha), ...)`` for growing n until the value stops moving.
  This is a heuristic: it only looks for a plateau of ``window`` levels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .kronecker import PartitionTriple, kron_value
from .partitions import Partition, add_rows, diamond, intersect, rectangle, subpartitions
from .tableaux import _skew_lr


class ReducedTriple(NamedTuple):
    alpha: Partition
    beta: Partition
    gamma: Partition

    @classmethod
    def of(cls, alpha, beta, gamma) -> "ReducedTriple":
        return cls(Partition(alpha), Partition(beta), Partition(gamma))


class PaddedTriple(NamedTuple):
    n: int
    triple: PartitionTriple


class NoPlateauError(RuntimeError):
    def __init__(self, triple, values: dict, ceiling: int):
        self.triple = triple
        self.values = values
        self.ceiling = ceiling
        super().__init__(
            f"no plateau for {tuple(map(tuple, triple))} up to n={ceiling}: {values}"
        )


class ReducedDisagreement(RuntimeError):
    pass


def min_padding(r: ReducedTriple) -> int:
    """Smallest n at which every padded first row is at least the second row."""
    return max(p.size + (p[0] if p else 0) for p in r)


def pad(r: ReducedTriple, n: int) -> PaddedTriple:
    r = ReducedTriple.of(*r)
    least = min_padding(r)
    if n < least:
        raise ValueError(f"n={n} is too small to pad {tuple(map(tuple, r))}; minimal n is {least}")
    parts = [Partition((n - p.size,) + tuple(p)) for p in r]
    return PaddedTriple(n, PartitionTriple(*parts))


@dataclass
class StabilizationResult:
    value: int
    n_start: int
    n_end: int
    values: dict = field(default_factory=dict)
    heuristic: bool = True


def default_ceiling(r: ReducedTriple) -> int:
    return sum(p.size for p in r) + max((p[0] for p in r if p), default=0) + 8


def reduced_by_stabilization(
    r: ReducedTriple, window: int = 3, ceiling: int | None = None,
    algorithm: str | None = None,
) -> StabilizationResult:
    """Plateau value of k(pad(r, n)) over ``window`` consecutive levels."""
    r = ReducedTriple.of(*r)
    if window < 1:
        raise ValueError("window must be positive")
    start = max(min_padding(r), 1)
    ceiling = default_ceiling(r) if ceiling is None else ceiling
    values: dict[int, int] = {}
    run = 0
    prev = None
    for n in range(start, ceiling + 1):
        v = kron_value(*pad(r, n).triple, algorithm=algorithm)
        values[n] = v
        run = run + 1 if v == prev else 1
        prev = v
        if run >= window:
            return StabilizationResult(v, start, n, values)
    raise NoPlateauError(r, values, ceiling)


def _bdo_roles(r: ReducedTriple) -> tuple:
    """Put the largest component in the third slot."""
    order = sorted(range(3), key=lambda i: r[i].size)
    big = order[-1]
    rest = [i for i in range(3) if i != big]
    return r[rest[0]], r[rest[1]], r[big]


def _three_factor(outer: tuple, first: tuple, second: tuple) -> dict:
    """``{pi: c^outer_{first, second, pi}}``."""
    out: dict[tuple, int] = {}
    for tau, c1 in _skew_lr(outer, first).items():
        for pi, c2 in _skew_lr(tau, second).items():
            out[pi] = out.get(pi, 0) + c1 * c2
    return out


def reduced_by_bdo(r: ReducedTriple, inner_algorithm: str | None = None) -> int:
    """Finite positive formula for g(lam, mu, nu) with |nu| <= |lam| + |mu|.

    With l = |lam| + |mu| - |nu| and l = l1 + 2*l2 the sum runs over
    alpha |- |lam|-l1-l2, beta |- |mu|-l1-l2, pi, rho, sigma |- l1 and
    gamma |- l2 of
        c^nu_{alpha,beta,pi} c^lam_{alpha,rho,gamma} c^mu_{gamma,sigma,beta} k(pi,rho,sigma).
    Every LR factor forces containment, so alpha, beta and gamma are drawn
    from the intersections of the shapes they must fit in.  If even the
    largest component is too big (size triangle violated) the value is 0.
    """
    r = ReducedTriple.of(*r)
    lam, mu, nu = (tuple(p) for p in _bdo_roles(r))
    rs, ss = sum(lam), sum(mu)
    l = rs + ss - sum(nu)
    if l < 0:
        return 0
    lam_nu = intersect(lam, nu)
    mu_nu = intersect(mu, nu)
    lam_mu = intersect(lam, mu)
    total = 0
    for l2 in range(l // 2 + 1):
        l1 = l - 2 * l2
        na, nb = rs - l1 - l2, ss - l1 - l2
        if na < 0 or nb < 0:
            continue
        gammas = subpartitions(lam_mu, l2)
        for alpha in subpartitions(lam_nu, na):
            lam_over_alpha = _skew_lr(lam, alpha)
            if not lam_over_alpha:
                continue
            rho_by_gamma = {}
            for gamma in gammas:
                rho = _three_factor(lam, alpha, gamma)
                if rho:
                    rho_by_gamma[gamma] = rho
            if not rho_by_gamma:
                continue
            for beta in subpartitions(mu_nu, nb):
                pis = _three_factor(nu, alpha, beta)
                if not pis:
                    continue
                for gamma, rhos in rho_by_gamma.items():
                    # c^mu_{gamma,sigma,beta} = c^mu_{beta,gamma,sigma}
                    sigmas = _three_factor(mu, beta, gamma)
                    if not sigmas:
                        continue
                    for pi, cp in pis.items():
                        for rho, cr in rhos.items():
                            for sigma, cs in sigmas.items():
                                k = kron_value(pi, rho, sigma, algorithm=inner_algorithm)
                                if k:
                                    total += cp * cr * cs * k
    return total


def reduced(r: ReducedTriple, verify: bool = False, window: int = 3) -> int:
    """g via the exact formula; with ``verify`` also by stabilization."""
    r = ReducedTriple.of(*r)
    value = reduced_by_bdo(r)
    if verify:
        stab = reduced_by_stabilization(r, window=window)
        if stab.value != value:
            raise ReducedDisagreement(
                f"exact formula gives {value} but stabilization gives {stab.value} "
                f"for {tuple(map(tuple, r))} (levels {stab.values})"
            )
    return value


# ---------------------------------------------------------------------------
# triple constructors


def _require_equal_sizes(lam, mu, nu) -> None:
    if not lam.size == mu.size == nu.size:
        raise ValueError(f"sizes differ: {lam.size}, {mu.size}, {nu.size}")


def theorem1_general_triple(lam, mu, nu, l: int, m: int, c: int) -> ReducedTriple:
    """(c^l + lam, c^m + mu, c^(l+m) <> nu) for l >= len(lam), m >= len(mu), c >= nu_1."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    _require_equal_sizes(lam, mu, nu)
    if l < len(lam) or m < len(mu) or c < nu.part(0) or min(l, m, c) < 1:
        raise ValueError(
            f"need l >= {len(lam)}, m >= {len(mu)}, c >= {nu.part(0)} (all positive); "
            f"got l={l}, m={m}, c={c}"
        )
    return ReducedTriple(
        add_rows(rectangle(c, l), lam),
        add_rows(rectangle(c, m), mu),
        diamond(rectangle(c, l + m), nu),
    )


def theorem1_triple(lam, mu, nu) -> ReducedTriple:
    """The reduced triple whose value equals k(lam, mu, nu)."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    _require_equal_sizes(lam, mu, nu)
    if not lam.size:
        return ReducedTriple(Partition(), Partition(), Partition())
    return theorem1_general_triple(lam, mu, nu, len(lam), len(mu), nu[0])


def shift_triple(lam, mu, nu, l: int, m: int) -> PartitionTriple:
    """(m^l + lam, l^m + mu, 1^(lm) + nu)."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    _require_equal_sizes(lam, mu, nu)
    if l < len(lam) or m < len(mu) or min(l, m) < 1:
        raise ValueError(f"need l >= {len(lam)} and m >= {len(mu)}, got l={l}, m={m}")
    return PartitionTriple(
        add_rows(rectangle(m, l), lam),
        add_rows(rectangle(l, m), mu),
        add_rows(rectangle(1, l * m), nu),
    )


def walls_triple(lam, mu, nu, l: int, m: int, c: int) -> PartitionTriple:
    """((d) <> (c^l + lam), (e) <> (c^m + mu), c^(l+m+1) <> nu), d=(m+1)c, e=(l+1)c."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    _require_equal_sizes(lam, mu, nu)
    if l < len(lam) or m < len(mu) or c < nu.part(0) or min(l, m, c) < 1:
        raise ValueError(
            f"need l >= {len(lam)}, m >= {len(mu)}, c >= {nu.part(0)}; got l={l}, m={m}, c={c}"
        )
    d, e = (m + 1) * c, (l + 1) * c
    return PartitionTriple(
        diamond(Partition((d,)), add_rows(rectangle(c, l), lam)),
        diamond(Partition((e,)), add_rows(rectangle(c, m), mu)),
        diamond(rectangle(c, l + m + 1), nu),
    )
