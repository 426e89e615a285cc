"""Rational matrices, the characteristic matrix ``x - tI`` and its minor gcds.

The central object is :class:`InvariantFactorProfile`: for an ``n x n``
matrix ``x`` it holds ``Q_1, ..., Q_{n+1}`` where ``Q_i`` is the monic gcd
of the ``(n+1-i)``-sized minors of ``x - tI`` (``Q_{n+1} = 1``) and the
invariant factors ``q_i = Q_i / Q_{i+1}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .linalg import rank
from .poly import ONE, Poly, format_rational, monic, parse_rational, poly_div_rem, poly_gcd

AMBIENTS = ("sl", "gl")

PolyMatrix = tuple  # tuple[tuple[Poly, ...], ...]


class NotSquareError(ValueError):
    pass


class NotTracelessError(ValueError):
    pass


@dataclass(frozen=True)
class RationalMatrix:
    entries: tuple
    ambient: str = "sl"

    def __post_init__(self):
        rows = tuple(tuple(parse_rational(v) for v in row) for row in self.entries)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise NotSquareError(f"matrix is not square and nonempty: {len(rows)} rows")
        if self.ambient not in AMBIENTS:
            raise ValueError(f"ambient must be one of {AMBIENTS}, got {self.ambient!r}")
        object.__setattr__(self, "entries", rows)
        if self.ambient == "sl" and self.trace() != 0:
            raise NotTracelessError(f"trace is {format_rational(self.trace())}, not 0")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def trace(self) -> Fraction:
        return sum((self.entries[i][i] for i in range(len(self.entries))), Fraction(0))

    def rows(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    def flat(self) -> list[Fraction]:
        return [v for row in self.entries for v in row]

    def with_ambient(self, ambient: str) -> RationalMatrix:
        return RationalMatrix(self.entries, ambient)

    def _wrap(self, rows, ambient=None) -> RationalMatrix:
        ambient = ambient or self.ambient
        if ambient == "sl" and sum(rows[i][i] for i in range(len(rows))) != 0:
            ambient = "gl"
        return RationalMatrix(rows, ambient)

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        return self._wrap(matmul(self.entries, other.entries), "gl")

    def __add__(self, other: RationalMatrix) -> RationalMatrix:
        rows = [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)]
        amb = "sl" if self.ambient == other.ambient == "sl" else "gl"
        return self._wrap(rows, amb)

    def __sub__(self, other: RationalMatrix) -> RationalMatrix:
        return self + other.scale(-1)

    def scale(self, c) -> RationalMatrix:
        c = Fraction(c)
        return RationalMatrix([[c * v for v in r] for r in self.entries], self.ambient)

    def bracket(self, other: RationalMatrix) -> RationalMatrix:
        """``[self, other] = self*other - other*self`` (always traceless)."""
        a = matmul(self.entries, other.entries)
        b = matmul(other.entries, self.entries)
        return RationalMatrix([[u - v for u, v in zip(r, s)] for r, s in zip(a, b)], "sl")

    def conjugate_by(self, g: RationalMatrix, g_inv: RationalMatrix) -> RationalMatrix:
        return RationalMatrix(matmul(matmul(g.entries, self.entries), g_inv.entries), self.ambient)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "ambient": self.ambient,
            "entries": [[format_rational(v) for v in r] for r in self.entries],
        }

    @classmethod
    def from_json(cls, data: dict) -> RationalMatrix:
        if not isinstance(data, dict) or "entries" not in data:
            raise ValueError("matrix JSON needs an 'entries' field")
        entries = data["entries"]
        if not isinstance(entries, list) or not all(isinstance(r, list) for r in entries):
            raise ValueError("'entries' must be a list of rows")
        if "n" in data and data["n"] != len(entries):
            raise NotSquareError(f"declared n={data['n']} but {len(entries)} rows given")
        return cls(entries, data.get("ambient", "sl"))

    def __str__(self):
        cells = [[format_rational(v) for v in r] for r in self.entries]
        w = max(len(c) for r in cells for c in r)
        return "\n".join("[" + " ".join(c.rjust(w) for c in r) + "]" for r in cells)


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[Fraction]]:
    bt = list(zip(*b))
    out = []
    for row in a:
        nz = [(k, v) for k, v in enumerate(row) if v]
        out.append([sum((v * col[k] for k, v in nz), Fraction(0)) for col in bt])
    return out


def identity(n: int, ambient: str = "gl") -> RationalMatrix:
    return RationalMatrix([[int(i == j) for j in range(n)] for i in range(n)], ambient)


def zero_matrix(n: int, ambient: str = "sl") -> RationalMatrix:
    return RationalMatrix([[0] * n for _ in range(n)], ambient)


def unit_matrix(n: int, i: int, j: int, ambient: str = "gl") -> RationalMatrix:
    """Matrix unit ``E_ij`` (0-based indices)."""
    rows = [[0] * n for _ in range(n)]
    rows[i][j] = 1
    return RationalMatrix(rows, ambient)


def diagonal(values, ambient: str = "sl") -> RationalMatrix:
    values = [parse_rational(v) for v in values]
    n = len(values)
    return RationalMatrix([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], ambient)


def block_diag(blocks: Sequence[Sequence[Sequence[Fraction]]], ambient: str = "sl") -> RationalMatrix:
    n = sum(len(b) for b in blocks)
    rows = [[Fraction(0)] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, r in enumerate(b):
            for j, v in enumerate(r):
                rows[off + i][off + j] = Fraction(v)
        off += len(b)
    return RationalMatrix(rows, ambient)


def jordan_block(size: int, eigenvalue=0) -> list[list[Fraction]]:
    """Upper Jordan block: ``eigenvalue`` on the diagonal, ones just above."""
    lam = parse_rational(eigenvalue)
    return [[lam if i == j else Fraction(int(j == i + 1)) for j in range(size)] for i in range(size)]


def nilpotent_matrix(parts: Sequence[int], ambient: str = "sl") -> RationalMatrix:
    return block_diag([jordan_block(b) for b in parts if b > 0], ambient)


def companion(q: Poly) -> list[list[Fraction]]:
    """Companion block of a monic ``q``: ones on the subdiagonal, ``-coeffs`` in the last column."""
    if not q.is_monic() or q.degree == 0:
        raise ValueError(f"companion needs a monic polynomial of positive degree, got {q}")
    m = q.degree
    rows = [[Fraction(0)] * m for _ in range(m)]
    for i in range(1, m):
        rows[i][i - 1] = Fraction(1)
    for i in range(m):
        rows[i][m - 1] = -q.coeffs[i]
    return rows


def char_matrix(x: RationalMatrix) -> PolyMatrix:
    """The polynomial matrix ``x - tI`` (entries in Q[t])."""
    n = x.n
    return tuple(
        tuple(Poly((x[i, j], -1)) if i == j else Poly.constant(x[i, j]) for j in range(n))
        for i in range(n)
    )


def minor_table(M: Sequence[Sequence], kmax: int | None = None) -> dict[int, dict]:
    """All minors of a square matrix over a commutative ring, sizes 1..kmax.

    Level ``k`` maps ``(row_subset, col_subset)`` (sorted tuples) to the
    determinant. Each k-minor is a Laplace expansion along its first row
    reusing the memoised (k-1)-minors, so every subdeterminant is computed
    exactly once. Entries only need ``+``, ``-``, ``*`` and truthiness.
    """
    n = len(M)
    kmax = n if kmax is None else kmax
    if not 1 <= kmax <= n:
        raise ValueError(f"minor size must be in 1..{n}, got {kmax}")
    zero = M[0][0] - M[0][0]
    level = {((r,), (c,)): M[r][c] for r in range(n) for c in range(n)}
    levels = {1: level}
    for k in range(2, kmax + 1):
        prev = level
        level = {}
        cols_k = list(combinations(range(n), k))
        for rows in combinations(range(n), k):
            r0, rest = rows[0], rows[1:]
            row_entries = M[r0]
            for cols in cols_k:
                acc = None
                for idx, c in enumerate(cols):
                    a = row_entries[c]
                    if not a:
                        continue
                    sub = prev[(rest, cols[:idx] + cols[idx + 1:])]
                    if not sub:
                        continue
                    term = a * sub
                    if acc is None:
                        acc = -term if idx % 2 else term
                    else:
                        acc = acc - term if idx % 2 else acc + term
                level[(rows, cols)] = zero if acc is None else acc
        levels[k] = level
    return levels


def all_minors(M: Sequence[Sequence], k: int) -> list:
    """The ``k x k`` minors in lexicographic (row set, column set) order."""
    n = len(M)
    if not 1 <= k <= n:
        raise ValueError(f"minor size must be in 1..{n}, got {k}")
    level = minor_table(M, k)[k]
    return [level[(r, c)] for r in combinations(range(n), k) for c in combinations(range(n), k)]


@dataclass(frozen=True)
class InvariantFactorProfile:
    n: int
    Q: tuple  # Q_1 .. Q_{n+1}
    q: tuple  # q_1 .. q_n

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(p.degree for p in self.q)

    def to_json(self) -> dict:
        return {"Q": [p.to_json() for p in self.Q], "q": [p.to_json() for p in self.q]}

    @classmethod
    def from_json(cls, data: dict) -> InvariantFactorProfile:
        Q = tuple(Poly.from_json(c) for c in data["Q"])
        q = tuple(Poly.from_json(c) for c in data["q"])
        return cls(len(q), Q, q)


def _gcd_fold(polys) -> Poly:
    g = None
    for p in polys:
        if p.is_zero():
            continue
        g = monic(p) if g is None else poly_gcd(g, p)
        if g.degree == 0:
            break
    if g is None:
        raise ArithmeticError("all minors vanish")
    return g


def gcd_minor_profile(x: RationalMatrix) -> InvariantFactorProfile:
    n = x.n
    levels = minor_table(char_matrix(x))
    Q = []
    for i in range(1, n + 1):
        Q.append(_gcd_fold(levels[n + 1 - i].values()))
    Q.append(ONE)
    q = []
    for i in range(n):
        quo, rem = poly_div_rem(Q[i], Q[i + 1])
        if not rem.is_zero():
            raise ArithmeticError(f"Q_{i + 2} does not divide Q_{i + 1}")
        q.append(quo)
    return InvariantFactorProfile(n, tuple(Q), tuple(q))


def eval_poly_at_matrix(p: Poly, x: RationalMatrix) -> list[list[Fraction]]:
    n = x.n
    acc = [[Fraction(0)] * n for _ in range(n)]
    for c in reversed(p.coeffs):
        acc = matmul(acc, x.entries)
        for i in range(n):
            acc[i][i] += c
    return acc


def kernel_dim(x: RationalMatrix, p: Poly) -> int:
    """``dim ker p(x)`` by exact rank."""
    return x.n - rank(eval_poly_at_matrix(p, x), x.n)


def char_poly(x: RationalMatrix) -> Poly:
    """Monic characteristic polynomial ``det(tI - x)`` by Faddeev-LeVerrier.

    Independent of the minor machinery; used to cross-check ``Q_1``.
    """
    n = x.n
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    M = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        for i in range(n):
            M[i][i] += coeffs[n - k + 1]
        AM = matmul(x.entries, M)
        coeffs[n - k] = -sum(AM[i][i] for i in range(n)) / k
        M = AM
    return Poly(coeffs)
