"""Sheets of sl(n) and their partition labels.

The sheet of ``x`` is read off the degrees of its invariant factors:
``x`` lies in the sheet of ``sigma = (b_1 >= b_2 >= ...)`` exactly when
``deg q_i = b_i`` for every ``i``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .centralizer import centralizer
from .matrices import InvariantFactorProfile, RationalMatrix, gcd_minor_profile, nilpotent_matrix
from .partitions import Partition, conjugate, partitions


@dataclass(frozen=True)
class SheetDescriptor:
    sigma: Partition
    conjugate: Partition
    orbit_dim: int
    quotient_dim: int

    @classmethod
    def of(cls, sigma) -> SheetDescriptor:
        sigma = Partition(sigma)
        c = conjugate(sigma)
        n = sigma.size
        return cls(sigma, c, n * n - sum(cj * cj for cj in c), sigma.part(1) - 1)

    @property
    def n(self) -> int:
        return self.sigma.size

    def to_json(self) -> dict:
        return {
            "sigma": list(self.sigma),
            "conjugate": list(self.conjugate),
            "orbit_dim": self.orbit_dim,
            "quotient_dim": self.quotient_dim,
        }

    @classmethod
    def from_json(cls, data: dict) -> SheetDescriptor:
        return cls(
            Partition(data["sigma"]),
            Partition(data["conjugate"]),
            int(data["orbit_dim"]),
            int(data["quotient_dim"]),
        )


def sheet_partition(profile: InvariantFactorProfile) -> Partition:
    degs = profile.degrees
    if any(a < b for a, b in zip(degs, degs[1:])):
        raise RuntimeError(f"invariant factor degrees not decreasing: {degs}")
    return Partition(degs)


def classify_sheet(
    x: RationalMatrix,
    profile: InvariantFactorProfile | None = None,
    check_orbit_dim: bool = True,
) -> SheetDescriptor:
    """Sheet of a traceless matrix.

    With ``check_orbit_dim`` the closed-form orbit dimension
    ``n^2 - sum c_j^2`` is compared against ``n^2 - dim gl(n)_x`` obtained
    from the commutant of ``x`` by exact elimination, and a mismatch raises.
    """
    if x.trace() != 0:
        raise ValueError("classify_sheet needs a traceless matrix")
    if profile is None:
        profile = gcd_minor_profile(x)
    desc = SheetDescriptor.of(sheet_partition(profile))
    if check_orbit_dim:
        brute = x.n * x.n - centralizer(x, "gl").dim
        if brute != desc.orbit_dim:
            raise RuntimeError(
                f"orbit dimension formula gives {desc.orbit_dim}, centralizer gives {brute}"
            )
    return desc


def nilpotent_representative(sigma) -> RationalMatrix:
    """Block-diagonal nilpotent Jordan matrix with blocks ``b_1, b_2, ...``."""
    return nilpotent_matrix(Partition(sigma), "sl")


def enumerate_sheets(n: int) -> list[SheetDescriptor]:
    if n < 1:
        raise ValueError("n must be at least 1")
    return [SheetDescriptor.of(p) for p in partitions(n)]
