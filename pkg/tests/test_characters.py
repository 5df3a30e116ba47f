from math import factorial

import pytest

from kronred.characters import (
    CHARACTER_CACHE,
    character,
    character_table,
    class_size,
    clear_cache,
    sign_of_class,
)
from kronred.partitions import partitions_of, transpose


def test_examples():
    assert character((4,), (2, 1, 1)) == 1
    assert character((1, 1, 1), (2, 1)) == -1
    assert character((2, 1), (1, 1, 1)) == 2


def test_class_sizes():
    assert class_size((1, 1, 1)) == 1
    assert class_size((2, 1)) == 3
    assert class_size((3,)) == 2
    for n in range(10):
        assert sum(class_size(mu) for mu in partitions_of(n)) == factorial(n)


def test_size_mismatch():
    with pytest.raises(ValueError):
        character((2, 1), (2,))


def test_dimension_squares():
    for n in range(9):
        assert sum(character(lam, (1,) * n) ** 2 for lam in partitions_of(n)) == factorial(n)


def _standard_tableaux(shape):
    """Count standard tableaux by removing the largest entry from a corner."""
    shape = list(shape)
    if not shape:
        return 1
    total = 0
    for i in range(len(shape)):
        if i + 1 == len(shape) or shape[i] > shape[i + 1]:
            shape[i] -= 1
            total += _standard_tableaux([x for x in shape if x])
            shape[i] += 1
    return total


def test_dimension_is_standard_tableaux_count():
    for n in range(8):
        for lam in partitions_of(n):
            assert character(lam, (1,) * n) == _standard_tableaux(lam)


def test_first_orthogonality():
    for n in range(7):
        table = character_table(n)
        for lam in table:
            for rho in table:
                s = sum(class_size(mu) * table[lam][mu] * table[rho][mu] for mu in table[lam])
                assert s == (factorial(n) if lam == rho else 0)


def test_second_orthogonality():
    for n in range(7):
        table = character_table(n)
        classes = list(partitions_of(n))
        for mu in classes:
            for nu in classes:
                s = sum(table[lam][mu] * table[lam][nu] for lam in table)
                assert s == (factorial(n) // class_size(mu) if mu == nu else 0)


def test_transpose_twist():
    for n in range(8):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                assert character(transpose(lam), mu) == sign_of_class(mu) * character(lam, mu)


def test_cache_is_plain_and_clearable():
    clear_cache()
    character((3, 1), (2, 2))
    assert ((3, 1), (2, 2)) in CHARACTER_CACHE
    clear_cache()
    assert not CHARACTER_CACHE
