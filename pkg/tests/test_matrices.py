import random
from fractions import Fraction
from itertools import combinations, permutations

import pytest

from slsheets.matrices import (
    NotSquareError,
    NotTracelessError,
    RationalMatrix,
    all_minors,
    char_matrix,
    char_poly,
    diagonal,
    gcd_minor_profile,
    kernel_dim,
    matmul,
    nilpotent_matrix,
    unit_matrix,
    zero_matrix,
)
from slsheets.partitions import partitions
from slsheets.poly import ONE, T, ZERO, Poly, monic, poly_rescale
from slsheets.sampling import random_conjugator, random_traceless, sheet_sample

E12_3 = unit_matrix(3, 0, 1, "sl")
J3 = nilpotent_matrix((3,))


def leibniz_det(M):
    """Permutation-sum determinant; independent oracle for the Laplace memo."""
    k = len(M)
    total = ZERO
    for perm in permutations(range(k)):
        inv = sum(1 for a in range(k) for b in range(a + 1, k) if perm[a] > perm[b])
        term = ONE
        for r in range(k):
            term = term * M[r][perm[r]]
        total = total + (-term if inv % 2 else term)
    return total


def brute_minors(M, k):
    n = len(M)
    return [
        leibniz_det([[M[r][c] for c in cols] for r in rows])
        for rows in combinations(range(n), k)
        for cols in combinations(range(n), k)
    ]


def test_matrix_validation():
    with pytest.raises(NotSquareError):
        RationalMatrix([[1, 2]])
    with pytest.raises(NotTracelessError):
        RationalMatrix([[1, 0], [0, 0]], "sl")
    m = RationalMatrix([["1/2", 0], [0, "-1/2"]])
    assert m[0, 0] == Fraction(1, 2)
    assert RationalMatrix.from_json(m.to_json()) == m


def test_char_matrix_examples():
    t = T
    assert char_matrix(zero_matrix(2)) == ((-t, ZERO), (ZERO, -t))
    assert char_matrix(unit_matrix(2, 0, 1, "sl")) == ((-t, ONE), (ZERO, -t))
    assert char_matrix(diagonal([1, -1])) == ((1 - t, ZERO), (ZERO, -1 - t))


def test_all_minors_examples():
    t = T
    assert all_minors(char_matrix(unit_matrix(2, 0, 1, "sl")), 1) == [-t, ONE, ZERO, -t]
    assert all_minors(char_matrix(zero_matrix(2)), 2) == [t * t]
    m = all_minors(char_matrix(E12_3), 2)
    assert len(m) == 9
    assert m == brute_minors(char_matrix(E12_3), 2)
    assert t * t in m and -t in m and ZERO in m
    with pytest.raises(ValueError):
        all_minors(char_matrix(E12_3), 4)


@pytest.mark.parametrize("seed", range(6))
def test_minors_match_leibniz(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 4)
    M = char_matrix(random_traceless(n, rng))
    for k in range(1, n + 1):
        assert all_minors(M, k) == brute_minors(M, k)


def test_profile_examples():
    t = T
    p = gcd_minor_profile(J3)
    assert p.Q == (t ** 3, ONE, ONE, ONE) and p.q == (t ** 3, ONE, ONE)
    p = gcd_minor_profile(zero_matrix(3))
    assert p.Q == (t ** 3, t ** 2, t, ONE) and p.q == (t, t, t)
    p = gcd_minor_profile(E12_3)
    assert p.Q == (t ** 3, t, ONE, ONE) and p.q == (t ** 2, t, ONE)


def test_profile_json():
    p = gcd_minor_profile(E12_3)
    data = p.to_json()
    assert data["q"] == [["0", "0", "1"], ["0", "1"], ["1"]]
    assert type(p).from_json(data) == p


def test_kernel_dim_examples():
    assert kernel_dim(E12_3, T) == 2
    assert kernel_dim(random_traceless(3, random.Random(1)), ONE) == 0
    assert kernel_dim(J3, T ** 3) == 3


def test_conjugator_is_unimodular_inverse():
    rng = random.Random(3)
    for n in range(2, 6):
        g, g_inv = random_conjugator(n, rng)
        prod = matmul(g.entries, g_inv.entries)
        assert all(prod[i][j] == (i == j) for i in range(n) for j in range(n))


def _check_tower(x):
    p = gcd_minor_profile(x)
    n = x.n
    assert p.Q[n] == ONE
    for i in range(n):
        assert p.Q[i + 1].divides(p.Q[i])
        assert p.q[i] * p.Q[i + 1] == p.Q[i]
    for i in range(n - 1):
        assert p.q[i + 1].divides(p.q[i])
    prod = ONE
    for qi in p.q:
        prod = prod * qi
    assert prod == p.Q[0] == char_poly(x)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_tower_law_on_sheet_samples(n):
    rng = random.Random(n)
    for sigma in partitions(n):
        for _ in range(3):
            _check_tower(sheet_sample(sigma, rng))


@pytest.mark.parametrize("seed", range(5))
def test_tower_law_on_random_matrices(seed):
    _check_tower(random_traceless(4, random.Random(seed)))


def test_char_poly_oracle_on_diagonal():
    assert char_poly(diagonal([-2, 1, 1])) == Poly.from_roots([-2, 1, 1])


@pytest.mark.parametrize("n", [2, 3, 4])
def test_conjugation_invariance(n):
    rng = random.Random(10 + n)
    for sigma in partitions(n):
        x = sheet_sample(sigma, rng)
        g, g_inv = random_conjugator(n, rng)
        assert gcd_minor_profile(x.conjugate_by(g, g_inv)) == gcd_minor_profile(x)


@pytest.mark.parametrize("eps", [Fraction(2), Fraction(1, 2), Fraction(-1), Fraction(1, 3)])
def test_homothety(eps):
    rng = random.Random(5)
    for sigma in partitions(3):
        x = sheet_sample(sigma, rng)
        px, pe = gcd_minor_profile(x), gcd_minor_profile(x.scale(eps))
        assert pe.q == tuple(poly_rescale(q, eps) for q in px.q)


def test_kernel_characterization_on_nilpotents():
    for n in range(1, 6):
        for sigma in partitions(n):
            x = nilpotent_matrix(sigma)
            c = sigma.conjugate()
            prof = gcd_minor_profile(x)
            for i, qi in enumerate(prof.q, start=1):
                need = sum(c.part(j) for j in range(1, sigma.part(i) + 1))
                assert kernel_dim(x, qi) >= need


def test_gl_matrix_profile():
    x = RationalMatrix([[2, 0], [0, 2]], "gl")
    p = gcd_minor_profile(x)
    assert p.q == (Poly((-2, 1)), Poly((-2, 1)))
    assert monic(p.Q[0]) == p.Q[0]
