"""Centralizers, derived subalgebras and Killing-form duality in gl(n) / sl(n).

Subspaces of matrices are handled as spans of flattened ``n*n`` vectors
and every question (dimension, membership, equality) is answered by exact
row reduction.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .linalg import EchelonSpan, nullspace
from .matrices import RationalMatrix, eval_poly_at_matrix, matmul, nilpotent_matrix
from .partitions import Partition, conjugate
from .poly import Poly


def _to_matrix(vec: Sequence[Fraction], n: int, ambient: str) -> RationalMatrix:
    return RationalMatrix([vec[i * n:(i + 1) * n] for i in range(n)], ambient)


@dataclass(frozen=True)
class MatrixSubspace:
    n: int
    ambient: str
    basis: tuple
    _span: EchelonSpan = field(default=None, repr=False, compare=False)

    @classmethod
    def spanned_by(cls, n: int, ambient: str, matrices: Iterable[RationalMatrix]) -> MatrixSubspace:
        """Keep the first maximal independent subfamily of ``matrices``."""
        span = EchelonSpan(n * n)
        basis = []
        for m in matrices:
            if span.add(m.flat()):
                basis.append(m.with_ambient(ambient) if m.ambient != ambient else m)
        return cls(n, ambient, tuple(basis), span)

    def _echelon(self) -> EchelonSpan:
        if self._span is None:
            span = EchelonSpan(self.n * self.n)
            for b in self.basis:
                span.add(b.flat())
            object.__setattr__(self, "_span", span)
        return self._span

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, m: RationalMatrix) -> bool:
        return self._echelon().contains(m.flat())

    def issubspace(self, other: MatrixSubspace) -> bool:
        return all(other.contains(b) for b in self.basis)

    def same_span(self, other: MatrixSubspace) -> bool:
        return self.dim == other.dim and self.issubspace(other)

    def to_json(self) -> list:
        return [b.to_json() for b in self.basis]


def full_algebra(n: int, ambient: str) -> MatrixSubspace:
    """Standard basis of gl(n), or of sl(n) (``E_ij`` off-diagonal, ``E_ii - E_nn``)."""
    mats = []
    for i in range(n):
        for j in range(n):
            if i != j:
                rows = [[0] * n for _ in range(n)]
                rows[i][j] = 1
                mats.append(RationalMatrix(rows, ambient))
    for i in range(n if ambient == "gl" else n - 1):
        rows = [[0] * n for _ in range(n)]
        rows[i][i] = 1
        if ambient == "sl":
            rows[n - 1][n - 1] = -1
        mats.append(RationalMatrix(rows, ambient))
    return MatrixSubspace.spanned_by(n, ambient, mats)


def _commutant_equations(x: RationalMatrix, support: set | None = None) -> list[list[Fraction]]:
    # row (i,j): sum_k x_ik y_kj - y_ik x_kj = 0 over unknowns y flattened row-major
    n = x.n
    X = x.entries
    eqs = []
    for i in range(n):
        for j in range(n):
            row = [Fraction(0)] * (n * n)
            for k in range(n):
                if X[i][k]:
                    row[k * n + j] += X[i][k]
                if X[k][j]:
                    row[i * n + k] -= X[k][j]
            if any(row):
                eqs.append(row)
    if support is not None:
        for idx in range(n * n):
            if idx not in support:
                row = [Fraction(0)] * (n * n)
                row[idx] = Fraction(1)
                eqs.append(row)
    return eqs


def centralizer(x: RationalMatrix, ambient: str = "sl") -> MatrixSubspace:
    """Basis of ``{y in ambient : xy = yx}`` by exact null space of ``ad x``."""
    n = x.n
    eqs = _commutant_equations(x)
    if ambient == "sl":
        eqs.append([Fraction(int(i % (n + 1) == 0)) for i in range(n * n)])
    basis = nullspace(eqs, n * n)
    return MatrixSubspace(n, ambient, tuple(_to_matrix(v, n, ambient) for v in basis))


def derived_subalgebra(S: MatrixSubspace) -> MatrixSubspace:
    """Span of ``[u, v]`` over basis pairs, closed under brackets until stable."""
    n = S.n
    span = EchelonSpan(n * n)
    basis: list[RationalMatrix] = []
    for u, v in combinations(S.basis, 2):
        b = u.bracket(v)
        if span.add(b.flat()):
            basis.append(b)
    start = 0
    while start < len(basis):
        # brackets among newly found elements; a no-op for Lie subalgebras but cheap to confirm
        end = len(basis)
        for a in range(start, end):
            for c in range(a):
                b = basis[a].bracket(basis[c])
                if span.add(b.flat()):
                    basis.append(b)
        start = end
    return MatrixSubspace(n, S.ambient, tuple(m.with_ambient(S.ambient) for m in basis), span)


def is_abelian(S: MatrixSubspace) -> bool:
    return all(not any(u.bracket(v).flat()) for u, v in combinations(S.basis, 2))


def coadjoint_invariant_dim(x: RationalMatrix, ambient: str = "sl") -> int:
    """``dim g_x - dim [g_x, g_x]``: the dimension of g_x-invariant linear forms on g_x."""
    C = centralizer(x, ambient)
    return C.dim - derived_subalgebra(C).dim


def centralizer_report(x: RationalMatrix, ambient: str = "sl") -> dict:
    C = centralizer(x, ambient)
    D = derived_subalgebra(C)
    return {
        "centralizer_dim": C.dim,
        "derived_dim": D.dim,
        "codim": C.dim - D.dim,
        "abelian": is_abelian(C),
    }


def killing_form(y: RationalMatrix, z: RationalMatrix) -> Fraction:
    """Killing form of sl(n): ``2n tr(yz)``."""
    n = y.n
    Y, Z = y.entries, z.entries
    return 2 * n * sum((Y[a][b] * Z[b][a] for a in range(n) for b in range(n)), Fraction(0))


def tangent_space(x: RationalMatrix) -> MatrixSubspace:
    """``g.x = {[z, x] : z in sl(n)}``."""
    return MatrixSubspace.spanned_by(
        x.n, "sl", (z.bracket(x) for z in full_algebra(x.n, "sl").basis)
    )


def killing_complement(T: MatrixSubspace) -> MatrixSubspace:
    """Killing-orthogonal complement of ``T`` inside sl(n)."""
    n = T.n
    eqs = []
    for w in T.basis:
        # kappa(y, w) = 2n * sum_ab y_ab w_ba
        eqs.append([2 * n * w[b, a] for a in range(n) for b in range(n)])
    eqs.append([Fraction(int(i % (n + 1) == 0)) for i in range(n * n)])
    return MatrixSubspace(n, "sl", tuple(_to_matrix(v, n, "sl") for v in nullspace(eqs, n * n)))


def killing_orthogonality_check(x: RationalMatrix) -> bool:
    """Whether ``(g.x)^perp == g_x`` as subspaces of sl(n), with complementary dimensions."""
    if x.trace() != 0:
        raise ValueError("killing_orthogonality_check needs a traceless matrix")
    T = tangent_space(x)
    C = centralizer(x, "sl")
    perp = killing_complement(T)
    return perp.same_span(C) and T.dim + C.dim == x.n * x.n - 1


def _block_offsets(sigma: Partition) -> list[tuple[int, int]]:
    out, off = [], 0
    for b in sigma:
        out.append((off, off + b))
        off += b
    return out


def block_projection(sigma: Partition, i: int) -> RationalMatrix:
    """``id_{E_i}``: identity on the i-th Jordan block (1-indexed), zero elsewhere."""
    n = sigma.size
    lo, hi = _block_offsets(sigma)[i - 1]
    return RationalMatrix([[int(a == b and lo <= a < hi) for b in range(n)] for a in range(n)], "gl")


def lemma_elements(sigma) -> list[RationalMatrix]:
    """``x^k id_{E_i}`` for ``0 <= k < b_i - b_{i+1}``, with ``x`` the nilpotent of type sigma."""
    sigma = Partition(sigma)
    x = nilpotent_matrix(sigma, "gl")
    out = []
    for i in range(1, len(sigma) + 1):
        proj = block_projection(sigma, i)
        for k in range(sigma.part(i) - sigma.part(i + 1)):
            xk = eval_poly_at_matrix(Poly.monomial(k), x)
            out.append(RationalMatrix(matmul(xk, proj.entries), "gl"))
    return out


def lemma_basis_check(sigma) -> bool:
    """The elements ``x^k id_{E_i}`` form a basis of a complement of
    ``[h_x, h_x]`` in ``h_x = gl(n)_x``, and there are ``b_1`` of them."""
    sigma = Partition(sigma)
    x = nilpotent_matrix(sigma, "gl")
    C = centralizer(x, "gl")
    D = derived_subalgebra(C)
    elems = lemma_elements(sigma)
    if len(elems) != sigma.part(1):
        return False
    if not all(C.contains(e) for e in elems):
        return False
    span = EchelonSpan(x.n * x.n)
    for d in D.basis:
        span.add(d.flat())
    independent = all(span.add(e.flat()) for e in elems)
    return independent and len(span) == C.dim


def block_component(sigma, i: int, j: int) -> MatrixSubspace:
    """``Hom_x(E_i, E_j)``: centralizer elements of ``N_sigma`` mapping block i into block j."""
    sigma = Partition(sigma)
    x = nilpotent_matrix(sigma, "gl")
    n = x.n
    (ilo, ihi), (jlo, jhi) = _block_offsets(sigma)[i - 1], _block_offsets(sigma)[j - 1]
    # column vectors: image in rows of E_j, source in columns of E_i
    support = {r * n + c for r in range(jlo, jhi) for c in range(ilo, ihi)}
    basis = nullspace(_commutant_equations(x, support), n * n)
    return MatrixSubspace(n, "gl", tuple(_to_matrix(v, n, "gl") for v in basis))


def offdiagonal_absorbed(sigma) -> bool:
    """Every off-diagonal ``Hom_x(E_i, E_j)`` lies in ``[h_x, h_x]``."""
    sigma = Partition(sigma)
    D = derived_subalgebra(centralizer(nilpotent_matrix(sigma, "gl"), "gl"))
    k = len(sigma)
    return all(
        D.contains(m)
        for i in range(1, k + 1)
        for j in range(1, k + 1)
        if i != j
        for m in block_component(sigma, i, j).basis
    )


def nilpotent_centralizer_dim(sigma) -> int:
    """Closed form ``sum c_j^2`` for ``dim gl(n)_x`` with ``x`` nilpotent of type sigma."""
    return sum(c * c for c in conjugate(Partition(sigma)))
