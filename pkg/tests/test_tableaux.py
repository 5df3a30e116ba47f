import itertools

import pytest

from kronred.partitions import Partition, contains, partitions_of, transpose
from kronred.tableaux import (
    MultiLRSpec,
    SkewShape,
    Tableau,
    count_multi_lr_tableaux,
    enumerate_multi_lr_tableaux,
    enumerate_ssyt,
    is_ballot,
    is_multi_lr_tableau,
    is_ssyt,
    lr_coefficient,
    multi_lr,
    reading_word,
    skew_expansion,
)

# the two tableaux of shape (7,6,5) with blocks (4,3,1), (3,3), (3,1)
FIRST = Tableau.straight([(1, 1, 1, 1, 4, 4, 6), (2, 2, 2, 4, 5, 7), (3, 5, 5, 6, 6)])
SECOND = Tableau.straight([(1, 1, 1, 1, 4, 4, 6), (2, 2, 2, 4, 6, 6), (3, 5, 5, 5, 7)])
SPEC = MultiLRSpec((7, 6, 5), ((4, 3, 1), (3, 3), (3, 1)))


def test_reading_word_examples():
    assert reading_word(Tableau.straight([(1, 1, 2)])) == (2, 1, 1)
    assert reading_word(Tableau.straight([(1,), (2,)])) == (1, 2)
    skew = Tableau(SkewShape((5, 4, 4), (2, 1)), ((1, 1, 3), (2, 3, 3), (1, 3, 4, 4)))
    assert is_ssyt(skew)
    assert skew.type_vector == (3, 1, 4, 2)
    assert reading_word(skew) == (3, 1, 1, 3, 3, 2, 4, 4, 3, 1)


def test_ballot_examples():
    assert is_ballot(())
    assert is_ballot((1, 1, 2, 2, 1))
    assert not is_ballot((2, 1))


def test_ssyt_rejects():
    assert not is_ssyt(Tableau.straight([(2, 1)]))
    assert not is_ssyt(Tableau.straight([(1, 1), (1, 2)]))
    with pytest.raises(ValueError):
        SkewShape((2,), (3,))


def test_lr_examples():
    assert lr_coefficient((3, 1), (3, 1), ()) == 1
    assert lr_coefficient((2, 1), (1, 1), (1,)) == 1
    # |(2,1)| = 3 differs from |(1)| + |(1)|, so the coefficient vanishes
    assert lr_coefficient((2, 1), (1,), (1,)) == 0
    assert lr_coefficient((2, 1), (1,), (1, 1)) == 1
    assert lr_coefficient((2, 1), (1,), (2,)) == 1
    assert lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2


def _all(n_max):
    return [p for n in range(n_max + 1) for p in partitions_of(n)]


def test_lr_symmetries():
    for lam in _all(8):
        for k in range(lam.size + 1):
            for mu in partitions_of(k):
                if not contains(lam, mu):
                    continue
                for nu in partitions_of(lam.size - k):
                    c = lr_coefficient(lam, mu, nu)
                    assert c == lr_coefficient(lam, nu, mu)
                    assert c == lr_coefficient(transpose(lam), transpose(mu), transpose(nu))


def test_pieri_corners():
    for mu in _all(7):
        corners = sum(1 for i in range(len(mu) + 1) if i == 0 or mu[i - 1] > (mu[i] if i < len(mu) else 0))
        total = sum(lr_coefficient(nu, mu, (1,)) for nu in partitions_of(mu.size + 1))
        assert total == corners


def test_skew_expansion_sizes():
    exp = skew_expansion((3, 2, 1), (1,))
    assert all(sum(nu) == 5 for nu in exp)
    assert exp[(2, 2, 1)] == 1 and exp[(3, 1, 1)] == 1 and exp[(3, 2)] == 1 and exp[(2, 1, 1, 1)] == 0 if (2, 1, 1, 1) in exp else True


def test_multi_lr_examples():
    assert multi_lr((3, 2), [(3, 2)]) == 1
    assert multi_lr((2, 2), [(1,), (1,), (1,)]) == 0
    assert multi_lr((7, 6, 5), [(4, 3, 1), (3, 3), (3, 1)]) == 6


def test_displayed_tableaux_are_members():
    assert is_multi_lr_tableau(FIRST, SPEC)
    assert is_multi_lr_tableau(SECOND, SPEC)
    found = {t.rows for t in enumerate_multi_lr_tableaux(SPEC)}
    assert FIRST.rows in found and SECOND.rows in found and len(found) == 6


def test_yamanouchi_filling():
    assert is_multi_lr_tableau(Tableau.straight([(1, 1), (2, 2)]), MultiLRSpec((2, 2), ((2, 2),)))


def test_band_ballot_is_enforced():
    spec = MultiLRSpec((2, 1), ((1,), (1, 1)))
    good = Tableau.straight([(1, 2), (3,)])
    # second band {2,3} reads 3 before 2
    bad = Tableau.straight([(1, 3), (2,)])
    assert is_ssyt(bad)
    assert is_multi_lr_tableau(good, spec)
    assert not is_multi_lr_tableau(bad, spec)
    assert count_multi_lr_tableaux(spec) == 1


def test_multi_lr_two_blocks_is_lr():
    for lam in _all(8):
        for k in range(lam.size + 1):
            for mu in partitions_of(k):
                for nu in partitions_of(lam.size - k):
                    assert multi_lr(lam, [mu, nu]) == lr_coefficient(lam, mu, nu)


def test_iterated_sum_matches_enumeration():
    for lam in _all(6):
        n = lam.size
        for sizes in itertools.product(range(n + 1), repeat=2):
            rest = n - sum(sizes)
            if rest < 0:
                continue
            for blocks in itertools.product(*(partitions_of(s) for s in (*sizes, rest))):
                spec = MultiLRSpec(lam, blocks)
                assert multi_lr(lam, blocks) == count_multi_lr_tableaux(spec), (lam, blocks)


def test_enumerate_ssyt():
    assert sorted(enumerate_ssyt((2, 1), 2)) == [(1, 2), (2, 1)]
    assert list(enumerate_ssyt((1, 1, 1), 2)) == []
    assert len(list(enumerate_ssyt((2,), 3))) == 6
