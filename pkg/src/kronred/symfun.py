"""Exact sparse polynomials, Schur polynomials and Schur-function identities.

Polynomials live in a fixed number of variables and are stored as a dict from
exponent tuples to Python integers; zero coefficients are never stored, so
equality of canonical forms is equality of polynomials.  The identity
checkers compare both sides term by term and take the Kronecker coefficients
from a caller-supplied oracle.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterable, Mapping, Sequence

from .contingency import count_arrays, marginals
from .partitions import Partition, partitions_of, permutations_of, transpose, weak_compositions
from .tableaux import enumerate_ssyt

KronOracle = Callable[[Sequence[int], Sequence[int], Sequence[int]], int]


class Polynomial:
    """Multivariate polynomial with integer coefficients."""

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: Mapping[tuple, int] | None = None):
        self.num_vars = num_vars
        clean: dict[tuple, int] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != num_vars:
                raise ValueError(f"exponent {exp} does not have {num_vars} entries")
            if c:
                clean[exp] = clean.get(exp, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def constant(cls, num_vars: int, c: int = 1) -> "Polynomial":
        return cls(num_vars, {(0,) * num_vars: c})

    @classmethod
    def variable(cls, num_vars: int, i: int) -> "Polynomial":
        exp = [0] * num_vars
        exp[i] = 1
        return cls(num_vars, {tuple(exp): 1})

    def _check(self, other: "Polynomial") -> None:
        if other.num_vars != self.num_vars:
            raise ValueError("polynomials live in different numbers of variables")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.num_vars, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            return Polynomial(self.num_vars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: dict[tuple, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(self.num_vars, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.num_vars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exp: Sequence[int]) -> int:
        return self.terms.get(tuple(exp), 0)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def embed(self, offset: int, total: int) -> "Polynomial":
        """Reinterpret as a polynomial in variables offset..offset+n-1 of ``total``."""
        pad_l, pad_r = (0,) * offset, (0,) * (total - offset - self.num_vars)
        return Polynomial(total, {pad_l + e + pad_r: c for e, c in self.terms.items()})

    def swap(self, i: int, j: int) -> "Polynomial":
        def sw(e):
            e = list(e)
            e[i], e[j] = e[j], e[i]
            return tuple(e)

        return Polynomial(self.num_vars, {sw(e): c for e, c in self.terms.items()})

    def sorted_terms(self) -> list:
        """Terms in graded lexicographic order, largest first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"x{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k
            )
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append("-" + mono)
            else:
                bits.append(f"{c}*{mono}")
        return " + ".join(bits).replace("+ -", "- ")


def complete_homogeneous(m: int, num_vars: int) -> Polynomial:
    """h_m in ``num_vars`` variables (h_0 = 1, h_m = 0 for m < 0)."""
    if m < 0:
        return Polynomial(num_vars)
    terms: dict[tuple, int] = {}
    for combo in itertools.combinations_with_replacement(range(num_vars), m):
        e = [0] * num_vars
        for i in combo:
            e[i] += 1
        terms[tuple(e)] = 1
    return Polynomial(num_vars, terms)


def schur_poly(lam: Sequence[int], num_vars: int) -> Polynomial:
    """Schur polynomial as the generating function of SSYT by type."""
    terms: dict[tuple, int] = {}
    for t in enumerate_ssyt(lam, num_vars):
        terms[t] = terms.get(t, 0) + 1
    return Polynomial(num_vars, terms)


def schur_poly_jt(lam: Sequence[int], num_vars: int) -> Polynomial:
    """Schur polynomial via the Jacobi-Trudi determinant det[h_{lam_i - i + j}]."""
    lam = Partition(lam)
    ell = len(lam)
    h = {}

    def entry(i: int, j: int) -> Polynomial:
        m = lam[i] - i + j
        if m not in h:
            h[m] = complete_homogeneous(m, num_vars)
        return h[m]

    total = Polynomial(num_vars)
    for perm in permutations_of(ell):
        term = Polynomial.constant(num_vars, perm.sign)
        for i, j in enumerate(perm.images):
            factor = entry(i, j - 1)
            if factor.is_zero():
                term = factor
                break
            term = term * factor
        total = total + term
    return total


def product_substitution(lam: Sequence[int], a: int, b: int) -> Polynomial:
    """s_lam evaluated at the ab products x_i*y_j, as a polynomial in x and y.

    Variables 0..a-1 are x_1..x_a, variables a..a+b-1 are y_1..y_b.
    """
    inner = schur_poly(lam, a * b)
    terms: dict[tuple, int] = {}
    for e, c in inner.terms.items():
        out = [0] * (a + b)
        for k, power in enumerate(e):
            if power:
                i, j = divmod(k, b)
                out[i] += power
                out[a + j] += power
        key = tuple(out)
        terms[key] = terms.get(key, 0) + c
    return Polynomial(a + b, terms)


def _outer_product(polys: Sequence[Polynomial]) -> Polynomial:
    """Product of polynomials in disjoint variable groups."""
    total = sum(p.num_vars for p in polys)
    out = Polynomial.constant(total)
    offset = 0
    for p in polys:
        out = out * p.embed(offset, total)
        offset += p.num_vars
    return out


def verify_schur_kron_identity(lam: Sequence[int], a: int, b: int, kron_oracle: KronOracle) -> bool:
    """s_lam[x.y] == sum_{mu,nu} k(lam,mu,nu) s_mu(x) s_nu(y) in a+b variables."""
    lam = Partition(lam)
    lhs = product_substitution(lam, a, b)
    rhs = Polynomial(a + b)
    n = lam.size
    for mu in partitions_of(n, max_length=a):
        for nu in partitions_of(n, max_length=b):
            k = kron_oracle(lam, mu, nu)
            if k:
                rhs = rhs + _outer_product([schur_poly(mu, a), schur_poly(nu, b)]) * k
    return lhs == rhs


def verify_hm_product_identity(m: int, a: int, b: int) -> bool:
    """h_m[x.y] == sum_{lam |- m} s_lam(x) s_lam(y)."""
    lhs = product_substitution(Partition((m,)) if m else Partition(), a, b)
    rhs = Polynomial(a + b)
    for lam in partitions_of(m, max_length=min(a, b)):
        rhs = rhs + _outer_product([schur_poly(lam, a), schur_poly(lam, b)])
    return lhs == rhs


def binary_cauchy_product(a: int, b: int, c: int, degree: int) -> Polynomial:
    """prod_{i,j,k} (1 + x_i y_j z_k) truncated at x-degree ``degree``.

    Every factor raises the x-, y- and z-degree by one, so dropping terms of
    x-degree above ``degree`` keeps exactly the slices needed.
    """
    nv = a + b + c
    terms: dict[tuple, int] = {(0,) * nv: 1}
    for i in range(a):
        for j in range(b):
            for k in range(c):
                new = dict(terms)
                for e, coeff in terms.items():
                    if sum(e[:a]) >= degree:
                        continue
                    f = list(e)
                    f[i] += 1
                    f[a + j] += 1
                    f[a + b + k] += 1
                    f = tuple(f)
                    new[f] = new.get(f, 0) + coeff
                terms = new
    return Polynomial(nv, terms)


def homogeneous_slice(p: Polynomial, first: int, degree: int) -> Polynomial:
    """Terms whose degree in the first ``first`` variables equals ``degree``."""
    return Polynomial(p.num_vars, {e: c for e, c in p.terms.items() if sum(e[:first]) == degree})


def triple_cauchy_checks(a: int, b: int, c: int, D: int, kron_oracle: KronOracle) -> list:
    """Degree-D slice of prod(1 + x_i y_j z_k), one row per monomial.

    Each row is ``(exponent, product, schur_side, arrays)``: the coefficient in
    the product, in sum k(lam,mu,nu) s_lam(x) s_mu(y) s_{nu'}(z), and the
    contingency count C(alpha,beta,gamma).  All three agree iff the identity
    holds at that monomial.
    """
    prod = homogeneous_slice(binary_cauchy_product(a, b, c, D), a, D)
    rhs = Polynomial(a + b + c)
    for lam in partitions_of(D, max_length=a):
        for mu in partitions_of(D, max_length=b):
            for nu in partitions_of(D, max_part=c):
                k = kron_oracle(lam, mu, nu)
                if k:
                    rhs = rhs + _outer_product(
                        [schur_poly(lam, a), schur_poly(mu, b), schur_poly(transpose(nu), c)]
                    ) * k
    rows = []
    for alpha in weak_compositions(D, a):
        for beta in weak_compositions(D, b):
            for gamma in weak_compositions(D, c):
                e = alpha + beta + gamma
                rows.append((e, prod.coefficient(e), rhs.coefficient(e),
                             count_arrays(marginals(alpha, beta, gamma))))
    # every term of either polynomial has this tri-degree, so the rows cover them
    return rows


def verify_triple_cauchy_binary(a: int, b: int, c: int, D: int, kron_oracle: KronOracle) -> bool:
    """Schur side and contingency counts both match the product slice."""
    return all(p == s == n for _, p, s, n in triple_cauchy_checks(a, b, c, D, kron_oracle))


def is_symmetric(p: Polynomial, variables: Iterable[int] | None = None) -> bool:
    vs = list(range(p.num_vars)) if variables is None else list(variables)
    return all(p.swap(vs[i], vs[i + 1]) == p for i in range(len(vs) - 1))
