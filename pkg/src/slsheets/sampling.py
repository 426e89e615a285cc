"""Seeded random sampling of SL(n)-conjugates, sheet points and Jordan data.

All randomness flows through a caller-supplied :class:`random.Random`.
Conjugators are products of ``2n`` elementary unipotent matrices
``I + a E_ij`` with integer ``a`` in ``[-3, 3]``; their inverses are the
reversed product of ``I - a E_ij``, so both stay integral with determinant 1.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import product
from typing import Sequence

from .matrices import RationalMatrix, block_diag, identity, jordan_block
from .partitions import Partition, dominates, partitions
from .poly import Poly
from .quotient import QuotientPoint, from_chart, section

JordanData = list  # list[tuple[Fraction, Partition]]: eigenvalue and its Jordan type


def random_rational(rng: random.Random, height: int = 5, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(-height, height), rng.randint(1, max_den))


def random_conjugator(n: int, rng: random.Random) -> tuple[RationalMatrix, RationalMatrix]:
    g = identity(n).rows()
    g_inv = identity(n).rows()
    if n < 2:
        return identity(n), identity(n)
    for _ in range(2 * n):
        i, j = rng.sample(range(n), 2)
        a = rng.randint(-3, 3)
        if a == 0:
            continue
        # g <- g (I + aE_ij): column j += a * column i
        for r in range(n):
            g[r][j] += a * g[r][i]
        # g_inv <- (I - aE_ij) g_inv: row i -= a * row j
        g_inv[i] = [u - a * v for u, v in zip(g_inv[i], g_inv[j])]
    return RationalMatrix(g, "gl"), RationalMatrix(g_inv, "gl")


def random_conjugate(x: RationalMatrix, rng: random.Random) -> RationalMatrix:
    g, g_inv = random_conjugator(x.n, rng)
    return x.conjugate_by(g, g_inv)


def random_quotient_point(sigma, rng: random.Random, height: int = 5) -> QuotientPoint:
    """Uniform-ish random chart coordinates; the trace relation fixes the rest."""
    sigma = Partition(sigma)
    coords = [random_rational(rng, height) for _ in range(sigma.part(1) - 1)]
    return from_chart(sigma, coords)


def sheet_sample(sigma, rng: random.Random) -> RationalMatrix:
    """Random conjugate of the section over a random quotient point."""
    return random_conjugate(section(random_quotient_point(sigma, rng)), rng)


def jordan_matrix(data: Sequence, ambient: str = "sl") -> RationalMatrix:
    blocks = [jordan_block(b, lam) for lam, part in data for b in part]
    return block_diag(blocks, ambient)


def jordan_data_from_roots(roots: Sequence[Sequence[Fraction]]) -> JordanData:
    """Jordan data of the orbit whose ``p_i`` has the roots ``roots[i-1]``.

    The multiplicity of ``lam`` in ``q_i = p_i ... p_n`` is the size of the
    i-th Jordan block for ``lam``.
    """
    n = len(roots)
    eigen = sorted({r for rs in roots for r in rs})
    data = []
    for lam in eigen:
        mult_p = [sum(1 for r in roots[i] if r == lam) for i in range(n)]
        parts = [sum(mult_p[i:]) for i in range(n)]
        data.append((lam, Partition(parts)))
    return data


def random_split_roots(sigma, rng: random.Random, spread: int = 2) -> list[list[Fraction]]:
    """Rational roots for each ``p_i``, shifted so the trace vanishes.

    A narrow ``spread`` makes repeated eigenvalues across the ``p_i`` common,
    which is what produces nontrivial closures.
    """
    sigma = Partition(sigma)
    n = sigma.size
    roots = [
        [Fraction(rng.randint(-spread, spread)) for _ in range(sigma.part(i) - sigma.part(i + 1))]
        for i in range(1, n + 1)
    ]
    trace = sum(i * sum(rs) for i, rs in enumerate(roots, start=1))
    shift = -Fraction(trace) / n
    return [[r + shift for r in rs] for rs in roots]


def split_point(roots: Sequence[Sequence[Fraction]], sigma) -> QuotientPoint:
    return QuotientPoint(Partition(sigma), tuple(Poly.from_roots(rs) for rs in roots))


def degenerations(data: JordanData):
    """Every Jordan data with the same eigenvalues and multiplicities.

    Yields ``(new_data, in_closure)`` where ``in_closure`` comes from the
    dominance order of each eigenvalue's partition (Gerstenhaber), an
    oracle independent of any minor computation.
    """
    choices = [list(partitions(part.size)) for _, part in data]
    for combo in product(*choices):
        new = [(lam, tau) for (lam, _), tau in zip(data, combo)]
        inside = all(dominates(part, tau) for (_, part), tau in zip(data, combo))
        yield new, inside


def random_split_jordan(sigma, rng: random.Random) -> tuple[QuotientPoint, JordanData]:
    roots = random_split_roots(sigma, rng)
    return split_point(roots, sigma), jordan_data_from_roots(roots)


def random_traceless(n: int, rng: random.Random, height: int = 3) -> RationalMatrix:
    rows = [[Fraction(rng.randint(-height, height)) for _ in range(n)] for _ in range(n)]
    rows[n - 1][n - 1] -= sum(rows[i][i] for i in range(n))
    return RationalMatrix(rows, "sl")

