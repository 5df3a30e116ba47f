import pytest

from kronred.kronecker import kron_value
from kronred.partitions import partitions_of
from kronred.symfun import (
    Polynomial,
    complete_homogeneous,
    is_symmetric,
    product_substitution,
    schur_poly,
    schur_poly_jt,
    triple_cauchy_checks,
    verify_hm_product_identity,
    verify_schur_kron_identity,
    verify_triple_cauchy_binary,
)


def P(n, **terms):
    return Polynomial(n, terms)


def mono(n, *pairs):
    return Polynomial(n, dict(pairs))


def test_schur_examples():
    assert schur_poly((1,), 2) == mono(2, ((1, 0), 1), ((0, 1), 1))
    assert schur_poly((1, 1, 1), 2).is_zero()
    assert schur_poly((2, 1), 2) == mono(2, ((2, 1), 1), ((1, 2), 1))


def test_jt_examples():
    assert schur_poly_jt((2,), 2) == mono(2, ((2, 0), 1), ((1, 1), 1), ((0, 2), 1))
    assert schur_poly_jt((1, 1), 2) == mono(2, ((1, 1), 1))
    assert schur_poly_jt((), 2) == Polynomial.constant(2)
    assert complete_homogeneous(1, 2) * complete_homogeneous(1, 2) - complete_homogeneous(2, 2) == schur_poly((1, 1), 2)


def test_no_zero_terms():
    p = Polynomial(1, {(1,): 2}) - Polynomial(1, {(1,): 2})
    assert p.is_zero() and not p.terms


@pytest.mark.parametrize("N", [1, 2, 3])
def test_schur_routes_agree(N):
    for n in range(7):
        for lam in partitions_of(n):
            assert schur_poly(lam, N) == schur_poly_jt(lam, N), (lam, N)


def test_schur_symmetric():
    for n in range(6):
        for lam in partitions_of(n):
            for N in (1, 2, 3):
                assert is_symmetric(schur_poly(lam, N))
    assert not is_symmetric(mono(2, ((1, 0), 1)))


def test_product_substitution_examples():
    x = mono(4, ((1, 0, 0, 0), 1), ((0, 1, 0, 0), 1))
    y = mono(4, ((0, 0, 1, 0), 1), ((0, 0, 0, 1), 1))
    assert product_substitution((1,), 2, 2) == x * y
    assert product_substitution((1, 1), 1, 1).is_zero()
    assert product_substitution((2,), 2, 1) == mono(3, ((2, 0, 2), 1), ((1, 1, 2), 1), ((0, 2, 2), 1))


@pytest.mark.parametrize("lam, a, b", [((1,), 2, 2), ((2, 2), 2, 2), ((3,), 2, 2), ((2, 1), 2, 2), ((3, 1), 2, 2)])
def test_eq4(lam, a, b):
    assert verify_schur_kron_identity(lam, a, b, kron_value)


def test_eq4_detects_bad_oracle():
    assert not verify_schur_kron_identity((2, 1), 2, 2, lambda *t: kron_value(*t) + 1)


@pytest.mark.parametrize("m", range(5))
def test_hm(m):
    assert verify_hm_product_identity(m, 2, 2)


@pytest.mark.parametrize("a, b, c, D", [(1, 1, 1, 1), (2, 2, 2, 3), (2, 2, 3, 4)])
def test_triple_cauchy(a, b, c, D):
    assert verify_triple_cauchy_binary(a, b, c, D, kron_value)


def test_triple_cauchy_rows():
    rows = triple_cauchy_checks(2, 2, 2, 2, kron_value)
    assert len(rows) == 27
    assert any(p for _, p, _, _ in rows)
    assert not verify_triple_cauchy_binary(2, 2, 2, 2, lambda *t: 1)
