"""Orbit closures in sl(n) and equations for the family over a sheet quotient.

``y`` lies in the closure of the orbit of ``x`` iff ``Q_i^x`` divides
``Q_i^y`` for every ``i``. Dividing each ``(n+1-i)``-minor of the generic
traceless ``y - tI`` by ``Q_i^z(t)`` and collecting the coefficients of
the remainders gives polynomial equations in the entries of ``y`` that
cut out the closure of the orbit over ``z``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .matrices import RationalMatrix, gcd_minor_profile, minor_table
from .multipoly import MultiPoly
from .partitions import Partition
from .quotient import QuotientPoint, reconstruct_Q

SYMBOLIC_MAX_N = 4


class GuardLimitError(ValueError):
    """Raised when a request exceeds a resource guard."""


def closure_contains(x: RationalMatrix, y: RationalMatrix) -> bool:
    """Whether ``y`` is in the closure of the SL(n)-orbit of ``x``."""
    if x.n != y.n:
        raise ValueError(f"size mismatch: {x.n} vs {y.n}")
    Qx = gcd_minor_profile(x).Q
    Qy = gcd_minor_profile(y).Q
    return all(a.divides(b) for a, b in zip(Qx[:-1], Qy[:-1]))


def variable_names(n: int) -> list[str]:
    """``y11, y12, ..., ynn, t``."""
    sep = "" if n < 10 else "_"
    return [f"y{i}{sep}{j}" for i in range(1, n + 1) for j in range(1, n + 1)] + ["t"]


def symbolic_char_matrix(n: int) -> tuple:
    """Generic traceless ``y - tI`` with ``y_nn = -(y_11 + ... + y_{n-1,n-1})``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    nv = n * n + 1
    tvar = MultiPoly.variable(nv, n * n)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j == n - 1:
                entry = MultiPoly.zero(nv)
                for k in range(n - 1):
                    entry = entry - MultiPoly.variable(nv, k * n + k)
            else:
                entry = MultiPoly.variable(nv, i * n + j)
            if i == j:
                entry = entry - tvar
            row.append(entry)
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class IdealGenerators:
    sigma: Partition
    z: QuotientPoint
    gens: tuple

    @property
    def n(self) -> int:
        return self.z.n

    def to_json(self) -> dict:
        names = variable_names(self.n)
        return {
            "sigma": list(self.sigma),
            "z": self.z.to_json(),
            "generators": [g.to_json(names) for g in self.gens],
        }

    def formatted(self) -> list[str]:
        names = variable_names(self.n)
        return [g.format(names) for g in self.gens]


def _remainder_coefficients(minor: MultiPoly, Q, tidx: int) -> list[MultiPoly]:
    """Coefficients (in t) of ``minor mod Q(t)``; ``Q`` is monic with scalar coefficients."""
    coeffs = minor.coefficients_in(tidx)
    m = Q.degree
    top = max(coeffs) if coeffs else -1
    for d in range(top, m - 1, -1):
        c = coeffs.pop(d, None)
        if c is None or c.is_zero():
            continue
        for j in range(m):
            qj = Q.coeffs[j]
            if qj:
                k = d - m + j
                coeffs[k] = coeffs.get(k, MultiPoly.zero(minor.nvars)) - c * qj
    return [coeffs[d] for d in range(m) if d in coeffs and not coeffs[d].is_zero()]


def weyman_generators(z: QuotientPoint, max_n: int = SYMBOLIC_MAX_N) -> IdealGenerators:
    """Remainder coefficients of the minors of generic ``y - tI`` modulo ``Q_i^z``.

    Repeated generators are kept once; zero remainders are dropped.
    """
    n = z.n
    if n > max_n:
        raise GuardLimitError(f"symbolic generators limited to n <= {max_n}, got n = {n}")
    M = symbolic_char_matrix(n)
    tidx = n * n
    wanted = [(i, reconstruct_Q(z, i)) for i in range(1, n + 1)]
    wanted = [(i, Q) for i, Q in wanted if Q.degree > 0]
    gens: list[MultiPoly] = []
    seen = set()
    if wanted:
        kmax = max(n + 1 - i for i, _ in wanted)
        levels = minor_table(M, kmax)
        for i, Q in wanted:
            k = n + 1 - i
            level = levels[k]
            for rows in combinations(range(n), k):
                for cols in combinations(range(n), k):
                    for g in _remainder_coefficients(level[(rows, cols)], Q, tidx):
                        key = frozenset(g.terms.items())
                        if key not in seen:
                            seen.add(key)
                            gens.append(g)
    return IdealGenerators(z.sigma, z, tuple(gens))


def evaluate_generators(ideal: IdealGenerators, y: RationalMatrix) -> list[Fraction]:
    if y.n != ideal.n:
        raise ValueError(f"size mismatch: generators for n={ideal.n}, matrix of size {y.n}")
    if y.trace() != 0:
        raise ValueError("generators are evaluated on traceless matrices")
    values = y.flat() + [Fraction(0)]
    return [g.evaluate(values) for g in ideal.gens]


def vanishes_on(ideal: IdealGenerators, y: RationalMatrix) -> bool:
    return not any(evaluate_generators(ideal, y))
