"""Sparse multivariate polynomials over Q.

A :class:`MultiPoly` maps exponent tuples (one slot per variable, in a
fixed order) to nonzero Fraction coefficients.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .poly import format_rational, parse_rational


class MultiPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, object] | None = None):
        self.nvars = nvars
        clean = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if c != 0:
                if len(mono) != nvars:
                    raise ValueError(f"exponent vector {mono} has wrong length for {nvars} variables")
                clean[tuple(mono)] = c
        self.terms: dict[tuple, Fraction] = clean

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> MultiPoly:
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def zero(cls, nvars: int) -> MultiPoly:
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> MultiPoly:
        c = Fraction(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, nvars: int, index: int) -> MultiPoly:
        mono = [0] * nvars
        mono[index] = 1
        return cls._raw(nvars, {tuple(mono): Fraction(1)})

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def _coerce(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return MultiPoly.zero(self.nvars)
            return MultiPoly._raw(self.nvars, {m: c * other for m, c in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out: dict[tuple, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return MultiPoly._raw(self.nvars, out)

    __rmul__ = __mul__

    def degree_in(self, index: int) -> int | None:
        if not self.terms:
            return None
        return max(m[index] for m in self.terms)

    def coefficients_in(self, index: int) -> dict[int, MultiPoly]:
        """Split as ``sum_d c_d * v^d`` for the variable ``index``; returns ``{d: c_d}``."""
        parts: dict[int, dict] = {}
        for m, c in self.terms.items():
            d = m[index]
            stripped = m[:index] + (0,) + m[index + 1:]
            parts.setdefault(d, {})[stripped] = c
        return {d: MultiPoly._raw(self.nvars, t) for d, t in parts.items()}

    def shift(self, index: int, k: int) -> MultiPoly:
        """Multiply by ``v^k`` for the variable ``index``."""
        return MultiPoly._raw(
            self.nvars,
            {m[:index] + (m[index] + k,) + m[index + 1:]: c for m, c in self.terms.items()},
        )

    def evaluate(self, values: Sequence) -> Fraction:
        if len(values) != self.nvars:
            raise ValueError(f"need {self.nvars} values, got {len(values)}")
        vals = [Fraction(v) for v in values]
        total = Fraction(0)
        for m, c in self.terms.items():
            term = c
            for v, e in zip(vals, m):
                if e:
                    term *= v ** e
            total += term
        return total

    def to_json(self, names: Sequence[str]) -> list[dict]:
        return [
            {
                "monomial": {names[i]: e for i, e in enumerate(m) if e},
                "coefficient": format_rational(c),
            }
            for m, c in sorted(self.terms.items(), reverse=True)
        ]

    @classmethod
    def from_json(cls, data: Sequence[Mapping], names: Sequence[str]) -> MultiPoly:
        index = {name: i for i, name in enumerate(names)}
        terms: dict[tuple, Fraction] = {}
        for term in data:
            mono = [0] * len(names)
            for name, e in term["monomial"].items():
                mono[index[name]] = int(e)
            key = tuple(mono)
            terms[key] = terms.get(key, 0) + parse_rational(term["coefficient"])
        return cls(len(names), terms)

    def format(self, names: Sequence[str]) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for m, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(m) if e
            )
            mag = abs(c)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self.terms!r})"
