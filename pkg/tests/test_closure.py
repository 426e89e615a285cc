import random
from fractions import Fraction

import pytest

from slsheets.closure import (
    GuardLimitError,
    closure_contains,
    evaluate_generators,
    symbolic_char_matrix,
    variable_names,
    vanishes_on,
    weyman_generators,
)
from slsheets.matrices import nilpotent_matrix, unit_matrix, zero_matrix
from slsheets.multipoly import MultiPoly
from slsheets.partitions import Partition, partitions
from slsheets.poly import ONE, Poly
from slsheets.quotient import QuotientPoint, fiber_contains, nilpotent_point, section
from slsheets.sampling import (
    degenerations,
    jordan_matrix,
    random_conjugate,
    random_quotient_point,
    random_split_jordan,
)

J3 = nilpotent_matrix((3,))
E12 = unit_matrix(3, 0, 1, "sl")


def sl2_point(b):
    return QuotientPoint(Partition((2,)), (Poly((b, 0, 1)), ONE))


def test_closure_examples():
    assert closure_contains(J3, E12)
    assert not closure_contains(E12, J3)
    rng = random.Random(0)
    x = random_conjugate(E12, rng)
    assert closure_contains(x, x)
    with pytest.raises(ValueError):
        closure_contains(J3, zero_matrix(2))


def test_nilpotent_order_sl3():
    reps = [nilpotent_matrix(s) for s in partitions(3)]
    for a in range(3):
        for b in range(3):
            assert closure_contains(reps[a], reps[b]) == (a <= b)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_closure_matches_dominance_on_nilpotents(n):
    for a in partitions(n):
        for b in partitions(n):
            assert closure_contains(nilpotent_matrix(a), nilpotent_matrix(b)) == a.dominates(b)


@pytest.mark.parametrize("seed", range(8))
def test_closure_matches_jordan_oracle(seed):
    rng = random.Random(seed)
    n = rng.choice([3, 4])
    sigma = rng.choice(list(partitions(n)))
    _, data = random_split_jordan(sigma, rng)
    x = random_conjugate(jordan_matrix(data), rng)
    for new, inside in degenerations(data):
        y = random_conjugate(jordan_matrix(new), rng)
        assert closure_contains(x, y) == inside


def test_symbolic_char_matrix_examples():
    names = variable_names(2)
    M = symbolic_char_matrix(2)
    text = [[e.format(names) for e in row] for row in M]
    assert text == [["y11 - t", "y12"], ["y21", "-y11 - t"]]
    assert symbolic_char_matrix(1)[0][0].format(variable_names(1)) == "-t"
    M3 = symbolic_char_matrix(3)
    assert M3[2][2].format(variable_names(3)) == "-y11 - y22 - t"


def test_sl2_generator_is_determinant_minus_b():
    names = variable_names(2)
    b = Fraction(3, 5)
    ideal = weyman_generators(sl2_point(b))
    det_minus_b = MultiPoly.from_json(
        [
            {"monomial": {"y11": 2}, "coefficient": "-1"},
            {"monomial": {"y12": 1, "y21": 1}, "coefficient": "-1"},
            {"monomial": {}, "coefficient": str(-b)},
        ],
        names,
    )
    assert len(ideal.gens) == 1
    assert ideal.gens[0] == det_minus_b or ideal.gens[0] == -det_minus_b


def test_sl2_nilpotent_generator():
    ideal = weyman_generators(sl2_point(0))
    assert ideal.formatted() == ["-y11^2 - y12*y21"]


def test_trivial_Q_contributes_nothing():
    # regular sheet: Q_2 = ... = 1, so only the determinant contributes
    ideal = weyman_generators(random_quotient_point((3,), random.Random(4)))
    assert 1 <= len(ideal.gens) <= 3
    # zero orbit in sl(2): Q_1 = t^2, Q_2 = t -> entries themselves vanish
    ideal = weyman_generators(nilpotent_point((1, 1)))
    assert set(ideal.formatted()) >= {"y12", "y21", "y11"}


def test_evaluate_examples():
    rng = random.Random(5)
    z = random_quotient_point((2, 1), rng)
    assert vanishes_on(weyman_generators(z), section(z))
    vals = evaluate_generators(weyman_generators(sl2_point(1)), zero_matrix(2))
    assert Fraction(-1) in vals
    for sigma in partitions(3):
        assert vanishes_on(weyman_generators(nilpotent_point(sigma)), nilpotent_matrix(sigma))


def test_guard_limit():
    z = nilpotent_point((5,))
    with pytest.raises(GuardLimitError):
        weyman_generators(z)


@pytest.mark.parametrize("seed", range(4))
def test_generators_cut_out_fiber(seed):
    rng = random.Random(seed)
    for sigma in partitions(3):
        z, data = random_split_jordan(sigma, rng)
        ideal = weyman_generators(z)
        for new, inside in degenerations(data):
            y = random_conjugate(jordan_matrix(new), rng)
            assert fiber_contains(z, y) == inside
            assert vanishes_on(ideal, y) == inside


def test_json_shape():
    ideal = weyman_generators(sl2_point(2))
    data = ideal.to_json()
    assert data["sigma"] == [2]
    assert data["generators"][0][0] == {"monomial": {"y11": 2}, "coefficient": "-1"}
