"""Exact rationals and univariate polynomials in ``t`` over Q.

Rationals are :class:`fractions.Fraction`. Polynomials are immutable
:class:`Poly` objects holding coefficients from degree 0 upward with no
trailing zeros; the zero polynomial has the empty coefficient tuple and
``degree is None``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


def parse_rational(value) -> Fraction:
    """Parse ``"p/q"``, ``"p"``, an int or a Fraction into a Fraction.

    Floats are refused: they would silently smuggle rounding in.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot read a rational from {type(value).__name__}")


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: list) -> Poly:
        # caller guarantees Fraction entries; only trailing zeros are stripped
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        p = cls.__new__(cls)
        p.coeffs = tuple(coeffs)
        return p

    @classmethod
    def constant(cls, c: Number) -> Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Number = 1) -> Poly:
        return cls([0] * degree + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[Number]) -> Poly:
        p = ONE
        for r in roots:
            p = p * cls((-Fraction(r), 1))
        return p

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        if not self.coeffs:
            return None
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, d: int) -> Fraction:
        if 0 <= d < len(self.coeffs):
            return self.coeffs[d]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly({[format_rational(c) for c in self.coeffs]})"

    def __str__(self):
        return format_poly(self)

    def __neg__(self):
        return Poly._raw([-c for c in self.coeffs])

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return ZERO
            return Poly._raw([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        return poly_div_rem(self, other)

    def __floordiv__(self, other):
        return poly_div_rem(self, other)[0]

    def __mod__(self, other):
        return poly_div_rem(self, other)[1]

    def __call__(self, value):
        """Horner evaluation at a scalar."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def divides(self, other: Poly) -> bool:
        return poly_div_rem(other, self)[1].is_zero()

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> Poly:
        if not isinstance(data, (list, tuple)):
            raise ValueError("polynomial must be a coefficient array")
        return cls(parse_rational(c) for c in data)


ZERO = Poly()
ONE = Poly((1,))
T = Poly((0, 1))


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_div_rem(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Long division ``a = q*b + r`` with ``r = 0`` or ``deg r < deg b``."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero() or len(a.coeffs) < len(b.coeffs):
        return ZERO, a
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    lead = b.coeffs[-1]
    bc = b.coeffs
    quot = [Fraction(0)] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        c = c / lead if lead != 1 else c
        shift = k - db
        quot[shift] = c
        for j in range(db + 1):
            if bc[j]:
                rem[shift + j] -= c * bc[j]
    return Poly._raw(quot), Poly._raw(rem[:db])


def monic(a: Poly) -> Poly:
    if a.is_zero():
        raise ValueError("the zero polynomial has no monic normalisation")
    lead = a.coeffs[-1]
    if lead == 1:
        return a
    return Poly._raw([c / lead for c in a.coeffs])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by Euclid; remainders are kept monic to curb coefficient growth."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if b.is_zero():
        return monic(a)
    if a.is_zero():
        return monic(b)
    a, b = monic(a), monic(b)
    while not b.is_zero():
        if b.degree == 0:
            return ONE
        a, b = b, poly_div_rem(a, b)[1]
        if not b.is_zero():
            b = monic(b)
    return a


def root_sum(p: Poly) -> Fraction:
    """Sum of the roots of a monic polynomial, with multiplicity."""
    if not p.is_monic():
        raise ValueError(f"root_sum needs a monic polynomial, got {p}")
    if p.degree == 0:
        return Fraction(0)
    return -p.coeffs[-2]


def poly_rescale(p: Poly, eps: Number) -> Poly:
    """The monic polynomial ``eps**deg(p) * p(t/eps)``: roots multiplied by eps."""
    eps = Fraction(eps)
    if eps == 0:
        raise ValueError("rescaling factor must be nonzero")
    if not p.is_monic():
        raise ValueError(f"poly_rescale needs a monic polynomial, got {p}")
    m = p.degree
    return Poly._raw([c * eps ** (m - d) for d, c in enumerate(p.coeffs)])


def format_poly(p: Poly, var: str = "t") -> str:
    if p.is_zero():
        return "0"
    terms = []
    for d in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[d]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if d == 0:
            body = format_rational(mag)
        else:
            mono = var if d == 1 else f"{var}^{d}"
            body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out
