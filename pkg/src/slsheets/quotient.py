"""Coordinates on the quotient of a sheet: ``x -> (p_1, ..., p_n)``.

For ``x`` in the sheet of ``sigma``, ``p_i = q_i / q_{i+1}`` is monic of
degree ``b_i - b_{i+1}``. The tuple determines the orbit of ``x``; the
only constraint is ``sum_i i * S(p_i) = 0`` (trace zero), where ``S`` is
the root sum. Dropping one coefficient solved from that relation gives a
chart of an affine space of dimension ``b_1 - 1``. Which coefficient
is dropped is a convention of this package, not a canonical choice.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .matrices import (
    InvariantFactorProfile,
    RationalMatrix,
    block_diag,
    companion,
    gcd_minor_profile,
)
from .partitions import Partition
from .poly import ONE, Poly, format_rational, parse_rational, poly_div_rem, poly_rescale, root_sum
from .sheets import sheet_partition


@dataclass(frozen=True)
class QuotientPoint:
    sigma: Partition
    p: tuple

    def __post_init__(self):
        sigma = Partition(self.sigma)
        n = sigma.size
        p = tuple(self.p)
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "p", p)
        if len(p) != n:
            raise ValueError(f"need {n} polynomials for a partition of {n}, got {len(p)}")
        for i, pi in enumerate(p, start=1):
            want = sigma.part(i) - sigma.part(i + 1)
            if not pi.is_monic() or pi.degree != want:
                raise ValueError(f"p_{i} = {pi} must be monic of degree {want}")
        if trace_relation(p) != 0:
            raise ValueError("trace relation sum i*S(p_i) = 0 violated")

    @property
    def n(self) -> int:
        return self.sigma.size

    def q(self, i: int) -> Poly:
        """``q_i = p_i p_{i+1} ... p_n`` (1-indexed; 1 past n)."""
        out = ONE
        for pj in self.p[i - 1:]:
            out = out * pj
        return out

    def is_nilpotent(self) -> bool:
        return all(pi == Poly.monomial(pi.degree) for pi in self.p)

    def to_json(self) -> dict:
        return {"sigma": list(self.sigma), "p": [pi.to_json() for pi in self.p]}

    @classmethod
    def from_json(cls, data: dict) -> QuotientPoint:
        if not isinstance(data, dict) or "sigma" not in data or "p" not in data:
            raise ValueError("quotient point JSON needs 'sigma' and 'p'")
        return cls(Partition(data["sigma"]), tuple(Poly.from_json(c) for c in data["p"]))


def trace_relation(p: Sequence[Poly]) -> Fraction:
    """``sum_i i * S(p_i)``; equals ``trace(x)`` for the orbit the tuple describes."""
    return sum((i * root_sum(pi) for i, pi in enumerate(p, start=1)), Fraction(0))


def quotient_point(x: RationalMatrix, profile: InvariantFactorProfile | None = None) -> QuotientPoint:
    if x.trace() != 0:
        raise ValueError("quotient_point needs a traceless matrix")
    if profile is None:
        profile = gcd_minor_profile(x)
    q = list(profile.q) + [ONE]
    p = []
    for i in range(x.n):
        quo, rem = poly_div_rem(q[i], q[i + 1])
        if not rem.is_zero():
            raise ArithmeticError(f"q_{i + 2} does not divide q_{i + 1}")
        p.append(quo)
    return QuotientPoint(sheet_partition(profile), tuple(p))


def reconstruct_Q(z: QuotientPoint, i: int) -> Poly:
    """``Q_i^z = p_i * p_{i+1}^2 * ... * p_n^(n-i+1)``."""
    n = z.n
    if not 1 <= i <= n:
        raise IndexError(f"index must be in 1..{n}, got {i}")
    out = ONE
    for j in range(i, n + 1):
        out = out * z.p[j - 1] ** (j - i + 1)
    return out


def section(z: QuotientPoint) -> RationalMatrix:
    """A matrix in the fiber over ``z``: companion blocks of ``q_1, ..., q_n``."""
    blocks = [companion(z.q(i)) for i in range(1, z.n + 1) if z.q(i).degree > 0]
    return block_diag(blocks, "sl")


def fiber_contains(z: QuotientPoint, y: RationalMatrix, profile: InvariantFactorProfile | None = None) -> bool:
    """Whether ``y`` lies in the closure of the orbit over ``z``."""
    if y.n != z.n:
        raise ValueError(f"size mismatch: point for n={z.n}, matrix of size {y.n}")
    if profile is None:
        profile = gcd_minor_profile(y)
    return all(reconstruct_Q(z, i).divides(profile.Q[i - 1]) for i in range(1, z.n + 1))


def scale_quotient_point(z: QuotientPoint, eps) -> QuotientPoint:
    """Image of ``z`` under the homothety ``x -> eps * x``."""
    eps = parse_rational(eps)
    if eps == 0:
        raise ValueError("scaling factor must be nonzero")
    return QuotientPoint(z.sigma, tuple(poly_rescale(pi, eps) for pi in z.p))


def nilpotent_point(sigma) -> QuotientPoint:
    sigma = Partition(sigma)
    n = sigma.size
    return QuotientPoint(
        sigma, tuple(Poly.monomial(sigma.part(i) - sigma.part(i + 1)) for i in range(1, n + 1))
    )


# Chart: the non-leading coefficients of p_1, p_2, ... (each lowest degree first),
# minus the subleading coefficient of p_k for the largest k with deg p_k >= 1,
# which the trace relation determines.


def _eliminated_index(sigma: Partition) -> int:
    n = sigma.size
    return max(i for i in range(1, n + 1) if sigma.part(i) - sigma.part(i + 1) >= 1)


def chart_coordinates(z: QuotientPoint) -> list[Fraction]:
    k = _eliminated_index(z.sigma)
    coords = []
    for i, pi in enumerate(z.p, start=1):
        free = pi.coeffs[:-1]
        if i == k:
            free = free[:-1]
        coords.extend(free)
    return coords


def from_chart(sigma, coords: Sequence) -> QuotientPoint:
    """Inverse of :func:`chart_coordinates`."""
    sigma = Partition(sigma)
    n = sigma.size
    if len(coords) != sigma.part(1) - 1:
        raise ValueError(f"chart of sheet {tuple(sigma)} has dimension {sigma.part(1) - 1}")
    coords = [parse_rational(c) for c in coords]
    k = _eliminated_index(sigma)
    pos = 0
    raw: list[list[Fraction]] = []
    for i in range(1, n + 1):
        d = sigma.part(i) - sigma.part(i + 1)
        take = d - 1 if i == k else d
        raw.append(coords[pos:pos + take])
        pos += take
    # solve k * S(p_k) = -sum_{i != k} i * S(p_i), with S(p) = -(subleading coefficient)
    rest = Fraction(0)
    for i in range(1, n + 1):
        d = sigma.part(i) - sigma.part(i + 1)
        if i != k and d >= 1:
            rest += i * -raw[i - 1][d - 1]
    raw[k - 1].append(rest / k)
    p = tuple(Poly(c + [Fraction(1)]) for c in raw)
    return QuotientPoint(sigma, p)


def format_point(z: QuotientPoint) -> str:
    parts = ", ".join(str(pi) for pi in z.p)
    chart = ", ".join(format_rational(c) for c in chart_coordinates(z))
    return f"sigma={tuple(z.sigma)}  p=({parts})  chart=[{chart}]"
