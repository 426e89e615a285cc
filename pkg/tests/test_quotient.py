import random
from fractions import Fraction

import pytest

from slsheets.matrices import diagonal, gcd_minor_profile, nilpotent_matrix, unit_matrix
from slsheets.partitions import Partition, partitions
from slsheets.poly import ONE, T, Poly
from slsheets.quotient import (
    QuotientPoint,
    chart_coordinates,
    fiber_contains,
    from_chart,
    nilpotent_point,
    quotient_point,
    reconstruct_Q,
    scale_quotient_point,
    section,
    trace_relation,
)
from slsheets.sampling import random_conjugate, random_quotient_point, sheet_sample


def P(*c):
    return Poly(c)


def test_quotient_point_examples():
    z = quotient_point(diagonal([1, -1]))
    assert z.sigma == (2,) and z.p == (P(-1, 0, 1), ONE)
    for sigma in [(3,), (2, 1), (2, 2), (3, 1, 1)]:
        s = Partition(sigma)
        z = quotient_point(nilpotent_matrix(s))
        assert z.p == tuple(T ** (s.part(i) - s.part(i + 1)) for i in range(1, s.size + 1))
    z = quotient_point(diagonal([-2, 1, 1]))
    assert z.sigma == (2, 1) and z.p == (P(2, 1), P(-1, 1), ONE)
    assert trace_relation(z.p) == 0


def test_quotient_point_validation():
    with pytest.raises(ValueError):
        QuotientPoint(Partition((2,)), (P(1, 1), ONE))  # wrong degree
    with pytest.raises(ValueError):
        QuotientPoint(Partition((2,)), (P(0, 1, 1), ONE))  # trace relation fails


def test_reconstruct_examples():
    z = QuotientPoint(Partition((2, 1)), (T, T, ONE))
    assert reconstruct_Q(z, 1) == T ** 3
    assert reconstruct_Q(z, 2) == T
    assert reconstruct_Q(z, 3) == ONE
    with pytest.raises(IndexError):
        reconstruct_Q(z, 4)


def test_section_examples():
    z = QuotientPoint(Partition((2,)), (T ** 2, ONE))
    assert section(z).entries == ((0, 0), (1, 0))
    z = QuotientPoint(Partition((2,)), (P(-1, 0, 1), ONE))
    assert gcd_minor_profile(section(z)) == gcd_minor_profile(diagonal([1, -1]))
    z = QuotientPoint(Partition((2, 1)), (P(2, 1), P(-1, 1), ONE))
    s = section(z)
    assert s.entries == ((0, 2, 0), (1, -1, 0), (0, 0, 1))
    assert s.trace() == 0
    assert quotient_point(s) == z


def test_fiber_contains_examples():
    e12 = unit_matrix(3, 0, 1, "sl")
    assert fiber_contains(nilpotent_point((3,)), e12)
    assert not fiber_contains(nilpotent_point((1, 1, 1)), e12)
    rng = random.Random(2)
    z = random_quotient_point((2, 1), rng)
    assert fiber_contains(z, section(z))


def test_scale_examples():
    z = QuotientPoint(Partition((2,)), (P(5, 0, 1), ONE))
    assert scale_quotient_point(z, 1) == z
    eps = Fraction(-3, 2)
    assert scale_quotient_point(z, eps).p == (P(5 * eps ** 2, 0, 1), ONE)
    nz = nilpotent_point((2, 1))
    assert scale_quotient_point(nz, Fraction(1, 7)) == nz
    with pytest.raises(ValueError):
        scale_quotient_point(z, 0)


@pytest.mark.parametrize("n", range(1, 6))
def test_chart_roundtrip_and_section(n):
    rng = random.Random(100 + n)
    for sigma in partitions(n):
        for _ in range(3):
            z = random_quotient_point(sigma, rng)
            coords = chart_coordinates(z)
            assert len(coords) == sigma.part(1) - 1
            assert from_chart(sigma, coords) == z
            x = section(z)
            assert x.trace() == 0
            assert quotient_point(x) == z


@pytest.mark.parametrize("n", [2, 3, 4])
def test_reconstruction_and_invariance(n):
    rng = random.Random(200 + n)
    for sigma in partitions(n):
        x = sheet_sample(sigma, rng)
        prof = gcd_minor_profile(x)
        z = quotient_point(x, prof)
        assert z.sigma == sigma
        for i in range(1, n + 1):
            assert reconstruct_Q(z, i) == prof.Q[i - 1]
        assert quotient_point(random_conjugate(x, rng)) == z


def test_distinct_points_distinct_orbits():
    rng = random.Random(9)
    seen = {}
    for _ in range(20):
        z = random_quotient_point((3, 1), rng)
        prof = gcd_minor_profile(section(z))
        for other, oprof in seen.items():
            assert (other == z) == (oprof == prof)
        seen[z] = prof


@pytest.mark.parametrize("eps", [Fraction(2), Fraction(1, 2), Fraction(-1), Fraction(1, 3)])
def test_equivariance(eps):
    rng = random.Random(11)
    for sigma in partitions(4):
        x = sheet_sample(sigma, rng)
        assert quotient_point(x.scale(eps)) == scale_quotient_point(quotient_point(x), eps)


def test_asymptotic_cone_limit():
    rng = random.Random(12)
    z = random_quotient_point((3, 1), rng)
    while z.is_nilpotent():
        z = random_quotient_point((3, 1), rng)
    nil = nilpotent_point((3, 1))

    def dist(w):
        return max(abs(a - b) for pw, pn in zip(w.p, nil.p) for a, b in zip(pw.coeffs, pn.coeffs))

    d0 = dist(z)
    prev = d0
    for k in range(1, 12):
        d = dist(scale_quotient_point(z, Fraction(1, 2 ** k)))
        assert d < prev
        assert d <= d0 / 2 ** k
        prev = d
