import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from slsheets.centralizer import centralizer
from slsheets.matrices import diagonal, gcd_minor_profile, nilpotent_matrix, unit_matrix, zero_matrix
from slsheets.partitions import Partition, conjugate, dominates, partition_count, partitions
from slsheets.poly import T
from slsheets.sampling import random_conjugate, sheet_sample
from slsheets.sheets import SheetDescriptor, classify_sheet, enumerate_sheets, nilpotent_representative


def test_partition_validation():
    assert Partition((3, 1, 0, 0)) == (3, 1)
    assert Partition((2, 1)).part(3) == 0
    assert Partition((2, 1)).padded(4) == (2, 1, 0, 0)
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_conjugate_examples():
    assert conjugate(Partition((3,))) == (1, 1, 1)
    assert conjugate(Partition((2, 1))) == (2, 1)
    assert conjugate(Partition((1, 1, 1))) == (3,)
    assert conjugate(Partition((4, 2, 1))) == (3, 2, 1, 1)


@pytest.mark.parametrize("n", range(0, 13))
def test_conjugate_involution_and_count(n):
    parts = list(partitions(n))
    # pentagonal-number recurrence as an independent count
    assert len(parts) == partition_count(n)
    assert len(set(parts)) == len(parts)
    for p in parts:
        assert conjugate(conjugate(p)) == p
        assert p.size == n


def test_partitions_order():
    assert list(partitions(3)) == [(3,), (2, 1), (1, 1, 1)]
    assert list(partitions(4)) == sorted(partitions(4), reverse=True)


@given(st.integers(1, 8).flatmap(lambda n: st.tuples(st.sampled_from(list(partitions(n))),
                                                       st.sampled_from(list(partitions(n))))))
def test_dominance_reverses_under_conjugation(pair):
    a, b = pair
    assert dominates(a, b) == dominates(conjugate(b), conjugate(a))


def test_enumerate_sheets_examples():
    assert [d.sigma for d in enumerate_sheets(2)] == [(2,), (1, 1)]
    assert [d.sigma for d in enumerate_sheets(3)] == [(3,), (2, 1), (1, 1, 1)]
    assert len(enumerate_sheets(4)) == 5


def test_classify_examples():
    d = classify_sheet(zero_matrix(3))
    assert (d.sigma, d.orbit_dim, d.quotient_dim) == ((1, 1, 1), 0, 0)
    d = classify_sheet(nilpotent_matrix((3,)))
    assert (d.sigma, d.conjugate, d.orbit_dim, d.quotient_dim) == ((3,), (1, 1, 1), 6, 2)
    d = classify_sheet(unit_matrix(3, 0, 1, "sl"))
    assert (d.sigma, d.orbit_dim, d.quotient_dim) == ((2, 1), 4, 1)
    assert classify_sheet(diagonal([-2, 1, 1])).sigma == (2, 1)
    with pytest.raises(ValueError):
        classify_sheet(diagonal([1, 1], "gl"))


def test_nilpotent_representative_examples():
    assert nilpotent_representative((2,)).entries == ((0, 1), (0, 0))
    assert nilpotent_representative((1, 1)) == zero_matrix(2)
    assert nilpotent_representative((2, 1)) == unit_matrix(3, 0, 1, "sl")


@pytest.mark.parametrize("n", range(1, 7))
def test_nilpotent_representatives_classify(n):
    for sigma in partitions(n):
        x = nilpotent_representative(sigma)
        prof = gcd_minor_profile(x)
        assert prof.q == tuple(T ** sigma.part(i) for i in range(1, n + 1))
        assert classify_sheet(x, prof).sigma == sigma


@pytest.mark.parametrize("n", range(1, 6))
def test_orbit_dim_formula_matches_centralizer(n):
    for sigma in partitions(n):
        desc = SheetDescriptor.of(sigma)
        assert desc.orbit_dim % 2 == 0
        brute = n * n - centralizer(nilpotent_representative(sigma), "gl").dim
        assert brute == desc.orbit_dim


def test_orbit_dim_constant_along_sheet():
    rng = random.Random(7)
    for sigma in partitions(4):
        want = SheetDescriptor.of(sigma).orbit_dim
        for _ in range(4):
            x = random_conjugate(sheet_sample(sigma, rng), rng)
            assert classify_sheet(x).orbit_dim == want
            assert 16 - centralizer(x, "gl").dim == want


def test_descriptor_json():
    d = SheetDescriptor.of((2, 1))
    assert d.to_json() == {"sigma": [2, 1], "conjugate": [2, 1], "orbit_dim": 4, "quotient_dim": 1}
    assert SheetDescriptor.from_json(d.to_json()) == d
