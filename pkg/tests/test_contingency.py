import itertools

import pytest

from kronred.contingency import (
    ContingencyArray,
    check_forced_structure,
    count,
    count_arrays,
    count_arrays_bruteforce,
    enumerate_arrays,
    marginals,
)
from kronred.harness import FORCED_BOXES, forced_family
from kronred.partitions import partitions_of


def test_count_examples():
    assert count((), (), ()) == 1
    assert count((1,), (1,), (1,)) == 1
    assert count((1, 1), (1, 1), (2,)) == 2


def test_invalid_marginals():
    assert count((1,), (1, 1), (2,)) == 0
    assert count((-1, 2), (1,), (1,)) == 0
    assert not marginals((1,), (2,), (1,)).valid
    assert list(enumerate_arrays(marginals((1,), (2,), (2,)))) == []


def test_enumerate_examples():
    (q,) = enumerate_arrays(marginals((1,), (1,), (1,)))
    assert q.points == {(1, 1, 1)}
    arrays = list(enumerate_arrays(marginals((1, 1), (1, 1), (2,))))
    assert len(arrays) == 2
    for q in arrays:
        assert sorted(p[0] for p in q.points) == [1, 2]
        assert q.marginals() == marginals((1, 1), (1, 1), (2,))


def test_dump():
    q = ContingencyArray(frozenset({(2, 1, 1), (1, 2, 1)}), (2, 2, 1))
    assert q.dump() == "1 2 1\n2 1 1"
    with pytest.raises(ValueError):
        ContingencyArray(frozenset({(3, 1, 1)}), (2, 2, 1))


def _comps(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _comps(total - first, parts - 1):
            yield (first,) + rest


def test_role_permutation_invariance():
    for t in range(5):
        ps = list(partitions_of(t))
        for a, b, c in itertools.product(ps, repeat=3):
            v = count(a, b, c)
            for perm in itertools.permutations((a, b, c)):
                assert count(*perm) == v


def test_dp_matches_brute_force_on_compositions():
    for t in range(4):
        comps = [c for k in range(1, 3) for c in _comps(t, k)]
        for a, b, c in itertools.product(comps, repeat=3):
            m = marginals(a, b, c)
            assert count_arrays(m) == count_arrays_bruteforce(m), (a, b, c)


def test_enumeration_count_and_uniqueness():
    for t in range(5):
        ps = list(partitions_of(t))
        for a, b, c in itertools.product(ps, repeat=3):
            m = marginals(a, b, c)
            arrays = list(enumerate_arrays(m))
            assert len(arrays) == count_arrays(m)
            assert len({q.points for q in arrays}) == len(arrays)
            assert all(q.marginals().alpha == tuple(a) for q in arrays if a)


def test_order_of_entries_irrelevant():
    assert count((2, 1, 3), (3, 3), (2, 2, 2)) == count((3, 2, 1), (3, 3), (2, 2, 2))


@pytest.mark.parametrize("box", FORCED_BOXES)
def test_forced_structure_family(box):
    a, b, c, h = box
    for f in range(2):
        for t in forced_family(a, b, c, h, f):
            rep = check_forced_structure(marginals(*t), a, b, c, h)
            assert rep.forced_slabs_present and rep.tail_exact, rep.failures


def test_forced_structure_large_box():
    m = marginals(*next(forced_family(5, 4, 2, 4, 0)))
    assert m.alpha[0] == 12 and m.beta[0] == 14
    rep = check_forced_structure(m, 5, 4, 2, 4)
    assert rep.forced_slabs_present and rep.tail_exact and all(rep.derived.values())


def test_forced_structure_vacuous():
    rep = check_forced_structure(marginals((), (), ()), 0, 0, 0, 0)
    assert rep.holds and rep.arrays == 1


def test_forced_structure_tail():
    # alpha_1 = bc + h exactly, one point per tail layer
    m = marginals(*next(forced_family(2, 2, 1, 2, 0)))
    rep = check_forced_structure(m, 2, 2, 1, 2)
    assert rep.tail_exact and rep.arrays


def test_forced_structure_hypothesis_errors():
    m = marginals(*next(forced_family(2, 2, 1, 1, 0)))
    with pytest.raises(ValueError, match="hypothesis failed: alpha_1"):
        check_forced_structure(m, 2, 2, 1, 3)
    with pytest.raises(ValueError, match="hypothesis failed: a >= len"):
        check_forced_structure(m, 1, 2, 1, 1)
    with pytest.raises(ValueError, match="hypothesis failed"):
        check_forced_structure(marginals((1,), (2,), (1,)), 1, 1, 1, 0)
