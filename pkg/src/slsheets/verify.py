"""End-to-end verification suite.

Every invariant of the library is registered in :data:`MANIFEST` under a
stable id; :func:`run_suite` runs one or more cases per id and returns a
:class:`VerificationReport`. Each case draws from its own RNG seeded with
``"{seed}:{case name}"``, so results do not depend on execution order.
"""
from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .centralizer import (
    block_component,
    centralizer,
    coadjoint_invariant_dim,
    derived_subalgebra,
    is_abelian,
    killing_orthogonality_check,
    lemma_basis_check,
    nilpotent_centralizer_dim,
)
from .closure import SYMBOLIC_MAX_N, GuardLimitError, closure_contains, evaluate_generators, weyman_generators
from .matrices import RationalMatrix, char_poly, gcd_minor_profile, kernel_dim, nilpotent_matrix
from .partitions import Partition, conjugate, partitions
from .poly import ONE, Poly, poly_div_rem, poly_gcd, poly_rescale, root_sum
from .quotient import (
    QuotientPoint,
    fiber_contains,
    nilpotent_point,
    quotient_point,
    reconstruct_Q,
    scale_quotient_point,
    section,
    trace_relation,
)
from .sampling import (
    degenerations,
    jordan_matrix,
    random_conjugate,
    random_quotient_point,
    random_rational,
    random_split_jordan,
    sheet_sample,
)
from .sheets import SheetDescriptor, classify_sheet, nilpotent_representative

VERIFY_MAX_N = 5
EPSILONS = (Fraction(2), Fraction(1, 2), Fraction(-1), Fraction(1, 3))

MANIFEST = {
    "exact-arith/div-rem": "a = q*b + r with deg r < deg b",
    "exact-arith/gcd": "gcd divides both inputs and is divisible by every common divisor",
    "exact-arith/root-sum": "root_sum(p*q) = root_sum(p) + root_sum(q)",
    "exact-arith/rescale-inverse": "rescale(rescale(p, e), 1/e) = p",
    "exact-arith/reproducible": "exact results are bit-reproducible",
    "minor-gcd/conjugation": "profile invariant under SL(n, Z) conjugation",
    "minor-gcd/tower": "divisibility tower, q_i = Q_i/Q_{i+1}, prod q_i = charpoly",
    "minor-gcd/kernel": "dim ker q_i(x) >= c_1 + ... + c_{b_i}",
    "minor-gcd/homothety": "q_i of eps*x is rescale(q_i, eps)",
    "sheets/classify-nilpotent": "nilpotent representative of sigma classifies to sigma",
    "sheets/conjugate-involution": "conjugate partition is an involution",
    "sheets/orbit-dim-brute": "n^2 - sum c_j^2 equals n^2 - dim centralizer",
    "sheets/orbit-dim-constant": "orbit dimension constant along a sheet",
    "quotient/section-roundtrip": "quotient_point(section(z)) = z and trace relation",
    "quotient/Q-reconstruction": "reconstruct_Q(quotient_point(x), i) = Q_i^x",
    "quotient/separates-orbits": "quotient point is a complete orbit invariant",
    "quotient/equivariance": "quotient_point(eps*x) = scale(quotient_point(x), eps)",
    "quotient/asymptotic-cone": "scaling by 1/2^k converges to the nilpotent point",
    "closure/order": "closure order reflexive, transitive, conjugation invariant",
    "closure/antisymmetry": "mutual containment forces equal profiles",
    "closure/jordan-dominance": "closure order agrees with per-eigenvalue dominance",
    "ideal/vanishing": "generators vanish on the fiber",
    "ideal/separation": "some generator is nonzero off the fiber",
    "ideal/set-consistency": "fiber_contains agrees with vanishing of generators",
    "centralizer/regular-abelian": "regular centralizers are abelian of dimension n-1",
    "centralizer/nilpotent-lemma": "dims sum c_j^2, codim b_1 (gl), b_1-1 (sl), lemma basis",
    "centralizer/offdiag-absorption": "off-diagonal Hom_x(E_i, E_j) lie in the derived algebra",
    "centralizer/killing": "(g.x)^perp = g_x for the Killing form",
    "centralizer/constant-along-sheet": "dim centralizer constant along a sheet",
}


class Counterexample(Exception):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


def require(cond: bool, message: str, witness=None):
    if not cond:
        raise Counterexample(message, witness)


@dataclass
class CaseResult:
    name: str
    invariant: str
    status: str
    witness: object = None
    detail: str = ""

    def to_json(self) -> dict:
        out = {"name": self.name, "invariant": self.invariant, "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class VerificationReport:
    suite: str
    seed: int
    n_max: int
    samples: int
    cases: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.cases)

    def failures(self) -> list:
        return [c for c in self.cases if c.status != "pass"]

    def to_json(self, include_elapsed: bool = True) -> dict:
        out = {
            "suite": self.suite,
            "seed": self.seed,
            "n_max": self.n_max,
            "samples": self.samples,
            "passed": self.passed,
            "cases": [c.to_json() for c in sorted(self.cases, key=lambda c: c.name)],
        }
        if include_elapsed:
            out["elapsed_seconds"] = round(self.elapsed, 3)
        return out


def _mat(x: RationalMatrix) -> dict:
    return x.to_json()


def _jordan_json(data) -> list:
    return [{"eigenvalue": str(lam), "partition": list(p)} for lam, p in data]


# -- exact-arith ---------------------------------------------------------------


def _random_poly(rng, max_deg=5, monic=False) -> Poly:
    d = rng.randint(0, max_deg)
    cs = [random_rational(rng, 9, 4) for _ in range(d + 1)]
    if monic:
        cs[-1] = Fraction(1)
    return Poly(cs)


def check_div_rem(rng, samples):
    for _ in range(samples):
        a, b = _random_poly(rng), _random_poly(rng)
        if b.is_zero():
            continue
        q, r = poly_div_rem(a, b)
        require(q * b + r == a and (r.is_zero() or r.degree < b.degree),
                "division identity", {"a": a.to_json(), "b": b.to_json()})


def check_gcd(rng, samples):
    for _ in range(samples):
        g = _random_poly(rng, 3, monic=True)
        u, v = _random_poly(rng, 3), _random_poly(rng, 3)
        if u.is_zero() or v.is_zero():
            continue
        a, b = g * u, g * v
        d = poly_gcd(a, b)
        ok = d.is_monic() and d.divides(a) and d.divides(b) and g.divides(d)
        require(ok, "gcd property", {"a": a.to_json(), "b": b.to_json(), "gcd": d.to_json()})


def check_root_sum(rng, samples):
    for _ in range(samples):
        p, q = _random_poly(rng, 4, True), _random_poly(rng, 4, True)
        require(root_sum(p * q) == root_sum(p) + root_sum(q), "root sum additivity",
                {"p": p.to_json(), "q": q.to_json()})


def check_rescale_inverse(rng, samples):
    for _ in range(samples):
        p = _random_poly(rng, 5, True)
        eps = random_rational(rng)
        if eps == 0:
            continue
        require(poly_rescale(poly_rescale(p, eps), 1 / eps) == p, "rescale inverse",
                {"p": p.to_json(), "eps": str(eps)})


def check_reproducible(rng, samples):
    for _ in range(max(1, samples // 5)):
        x = sheet_sample((2, 1), rng)
        a = json.dumps(gcd_minor_profile(x).to_json())
        b = json.dumps(gcd_minor_profile(RationalMatrix.from_json(x.to_json())).to_json())
        require(a == b, "profile not reproducible", _mat(x))


# -- minor-gcd -----------------------------------------------------------------


def check_tower(n, rng, samples):
    for sigma in partitions(n):
        for _ in range(samples):
            x = sheet_sample(sigma, rng)
            p = gcd_minor_profile(x)
            ok = p.Q[n] == ONE
            ok = ok and all(p.Q[i + 1].divides(p.Q[i]) for i in range(n))
            ok = ok and all(p.q[i] * p.Q[i + 1] == p.Q[i] for i in range(n))
            ok = ok and all(p.q[i + 1].divides(p.q[i]) for i in range(n - 1))
            prod = ONE
            for qi in p.q:
                prod = prod * qi
            ok = ok and prod == p.Q[0] == char_poly(x)
            require(ok, f"tower broken in sheet {tuple(sigma)}", _mat(x))


def check_conjugation(n, rng, samples):
    for sigma in partitions(n):
        for _ in range(samples):
            x = sheet_sample(sigma, rng)
            y = random_conjugate(x, rng)
            require(gcd_minor_profile(x) == gcd_minor_profile(y), "profile changed under conjugation",
                    {"x": _mat(x), "y": _mat(y)})


def check_kernel(n, rng, samples):
    for sigma in partitions(n):
        c = conjugate(sigma)
        for _ in range(samples):
            x = sheet_sample(sigma, rng)
            p = gcd_minor_profile(x)
            for i, qi in enumerate(p.q, start=1):
                need = sum(c.part(j) for j in range(1, sigma.part(i) + 1))
                require(kernel_dim(x, qi) >= need, f"dim ker q_{i}(x) < {need}", _mat(x))


def check_homothety(n, rng, samples):
    for sigma in partitions(n):
        for _ in range(samples):
            x = sheet_sample(sigma, rng)
            eps = rng.choice(EPSILONS)
            p, pe = gcd_minor_profile(x), gcd_minor_profile(x.scale(eps))
            require(pe.q == tuple(poly_rescale(q, eps) for q in p.q), "homothety",
                    {"x": _mat(x), "eps": str(eps)})


# -- sheets --------------------------------------------------------------------


def check_classify_nilpotent(n, rng, samples):
    for sigma in partitions(n):
        x = nilpotent_representative(sigma)
        p = gcd_minor_profile(x)
        ok = p.q == tuple(Poly.monomial(sigma.part(i)) for i in range(1, n + 1))
        ok = ok and classify_sheet(x, p).sigma == sigma
        require(ok, f"nilpotent representative of {tuple(sigma)}", _mat(x))


def check_conjugate_involution(rng, samples):
    for m in range(13):
        for p in partitions(m):
            require(conjugate(conjugate(p)) == p, "conjugation not involutive", list(p))


def check_orbit_dim_brute(n, rng, samples):
    for sigma in partitions(n):
        x = nilpotent_representative(sigma)
        brute = n * n - centralizer(x, "gl").dim
        desc = SheetDescriptor.of(sigma)
        require(brute == desc.orbit_dim and brute % 2 == 0,
                f"orbit dim {desc.orbit_dim} vs brute force {brute}", list(sigma))


def check_orbit_dim_constant(n, rng, samples):
    for sigma in partitions(n):
        want = SheetDescriptor.of(sigma).orbit_dim
        for _ in range(samples):
            x = sheet_sample(sigma, rng)
            require(classify_sheet(x).orbit_dim == want, "orbit dimension varies", _mat(x))


# -- quotient ------------------------------------------------------------------


def check_section_roundtrip(n, rng, samples):
    for sigma in partitions(n):
        for _ in range(samples):
            z = random_quotient_point(sigma, rng)
            x = section(z)
            w = quotient_point(x)
            require(w == z and trace_relation(w.p) == 0, "section round trip", z.to_json())


def check_Q_reconstruction(n, rng, samples):
    for sigma in partitions(n):
        for _ in range(samples):
            x = sheet_sample(sigma, rng)
            p = gcd_minor_profile(x)
            z = quotient_point(x, p)
            ok = all(reconstruct_Q(z, i) == p.Q[i - 1] for i in range(1, n + 1))
            require(ok and trace_relation(z.p) == 0, "Q reconstruction", _mat(x))


def check_separates(n, rng, samples):
    for sigma in partitions(n):
        seen: dict = {}
        for _ in range(samples):
            z = random_quotient_point(sigma, rng, height=2)
            x = random_conjugate(section(z), rng)
            require(quotient_point(random_conjugate(x, rng)) == quotient_point(x) == z,
                    "quotient point not conjugation invariant", _mat(x))
            prof = gcd_minor_profile(x)
            for other, oprof in seen.items():
                require((other == z) == (oprof == prof), "distinct points share an orbit",
                        {"z1": z.to_json(), "z2": other.to_json()})
            seen[z] = prof


def check_equivariance(n, rng, samples):
    for sigma in partitions(n):
        for _ in range(samples):
            x = sheet_sample(sigma, rng)
            eps = rng.choice(EPSILONS)
            require(quotient_point(x.scale(eps)) == scale_quotient_point(quotient_point(x), eps),
                    "equivariance", {"x": _mat(x), "eps": str(eps)})


def _coef_distance(z: QuotientPoint, w: QuotientPoint) -> Fraction:
    return max(
        (abs(a - b) for pz, pw in zip(z.p, w.p) for a, b in zip(pz.coeffs, pw.coeffs)),
        default=Fraction(0),
    )


def check_asymptotic_cone(n, rng, samples):
    for sigma in partitions(n):
        nil = nilpotent_point(sigma)
        require(scale_quotient_point(nil, Fraction(1, 3)) == nil, "nilpotent point not fixed", list(sigma))
        for _ in range(samples):
            z = random_quotient_point(sigma, rng)
            d0 = _coef_distance(z, nil)
            prev = d0
            for k in range(1, 16):
                d = _coef_distance(scale_quotient_point(z, Fraction(1, 2 ** k)), nil)
                require(d <= d0 / 2 ** k and (d < prev or d == 0), f"no contraction at k={k}", z.to_json())
                prev = d


# -- orbit closure -------------------------------------------------------------


def _closure_pool(n, rng, size):
    """Matrices sharing eigenvalues so that containments actually occur."""
    sigma = rng.choice(list(partitions(n)))
    _, data = random_split_jordan(sigma, rng)
    degs = [jordan_matrix(d) for d, _ in degenerations(data)]
    pool = [random_conjugate(rng.choice(degs), rng) for _ in range(size)]
    return pool


def check_closure_order(n, rng, samples):
    for _ in range(max(1, samples // 5)):
        pool = _closure_pool(n, rng, 6)
        rel = [[closure_contains(a, b) for b in pool] for a in pool]
        for i, a in enumerate(pool):
            require(rel[i][i], "not reflexive", _mat(a))
        for i in range(len(pool)):
            for j in range(len(pool)):
                for k in range(len(pool)):
                    if rel[i][j] and rel[j][k]:
                        require(rel[i][k], "not transitive",
                                {"a": _mat(pool[i]), "b": _mat(pool[j]), "c": _mat(pool[k])})
        i, j = rng.randrange(len(pool)), rng.randrange(len(pool))
        a2, b2 = random_conjugate(pool[i], rng), random_conjugate(pool[j], rng)
        require(closure_contains(a2, b2) == rel[i][j], "not conjugation invariant",
                {"a": _mat(pool[i]), "b": _mat(pool[j])})


def check_closure_antisymmetry(n, rng, samples):
    for _ in range(max(1, samples // 5)):
        pool = _closure_pool(n, rng, 5)
        profs = [gcd_minor_profile(a) for a in pool]
        for i, a in enumerate(pool):
            for j, b in enumerate(pool):
                if closure_contains(a, b) and closure_contains(b, a):
                    require(profs[i] == profs[j], "mutual containment with different profiles",
                            {"a": _mat(a), "b": _mat(b)})


def check_jordan_dominance(n, rng, samples):
    for _ in range(max(1, samples // 5)):
        sigma = rng.choice(list(partitions(n)))
        _, data = random_split_jordan(sigma, rng)
        x = random_conjugate(jordan_matrix(data), rng)
        for new, inside in degenerations(data):
            y = random_conjugate(jordan_matrix(new), rng)
            require(closure_contains(x, y) == inside, "closure disagrees with dominance",
                    {"x": _jordan_json(data), "y": _jordan_json(new)})


def _ideal_sheets(n_max):
    out = [(n, s) for n in range(2, min(n_max, 3) + 1) for s in partitions(n)]
    if n_max >= 4:
        out.append((4, Partition((4,))))
    return out


def _ideal_samples(sigma, rng, samples):
    """Points over which generators are tested: nilpotent, split and generic z."""
    n = sigma.size
    points = [(nilpotent_point(sigma), None)]
    for _ in range(2):
        points.append(random_split_jordan(sigma, rng))
    points.append((random_quotient_point(sigma, rng), None))
    out = []
    for z, data in points:
        inside, outside = [], []
        x = section(z)
        inside += [random_conjugate(x, rng) for _ in range(samples)]
        if data is not None:
            for new, dominated in degenerations(data):
                y = random_conjugate(jordan_matrix(new), rng)
                (inside if dominated else outside).append(y)
        for tau in partitions(n):
            outside.append(random_conjugate(nilpotent_matrix(tau), rng))
            outside.append(sheet_sample(tau, rng))
        out.append((z, inside, outside))
    return out


def ideal_results(n, sigma, rng, samples):
    """For each tested y: (z, y, fiber_contains, all generators vanish)."""
    rows = []
    for z, inside, outside in _ideal_samples(sigma, rng, samples):
        ideal = weyman_generators(z)
        for y in inside + outside:
            fc = fiber_contains(z, y)
            van = not any(evaluate_generators(ideal, y))
            rows.append((z, y, fc, van))
    return rows


def check_ideal(kind: str, rows_for):
    def run(n, sigma):
        rows = rows_for(n, sigma)
        n_in = sum(1 for r in rows if r[2])
        require(n_in >= 20 or kind != "vanishing", f"only {n_in} fiber samples")
        for z, y, fc, van in rows:
            w = {"z": z.to_json(), "y": _mat(y)}
            if kind == "vanishing" and fc:
                require(van, "generator nonzero on the fiber", w)
            elif kind == "separation" and not fc:
                require(not van, "all generators vanish off the fiber", w)
            elif kind == "set-consistency":
                require(fc == van, "fiber test and generators disagree", w)
    return run


# -- centralizer-lab -----------------------------------------------------------


def check_regular_abelian(n, rng, samples):
    for _ in range(samples):
        x = sheet_sample((n,), rng)
        C = centralizer(x, "sl")
        require(C.dim == n - 1 and is_abelian(C), f"dim {C.dim}, abelian {is_abelian(C)}", _mat(x))


def check_nilpotent_lemma(n, rng, samples):
    for sigma in partitions(n):
        x = nilpotent_matrix(sigma, "gl")
        b1 = sigma.part(1)
        ok = centralizer(x, "gl").dim == nilpotent_centralizer_dim(sigma)
        ok = ok and coadjoint_invariant_dim(x, "gl") == b1
        ok = ok and coadjoint_invariant_dim(x.with_ambient("sl"), "sl") == b1 - 1
        ok = ok and lemma_basis_check(sigma)
        require(ok, f"lemma fails for {tuple(sigma)}", list(sigma))


def check_offdiag(n, rng, samples):
    for sigma in partitions(n):
        if len(sigma) < 2:
            continue
        D = derived_subalgebra(centralizer(nilpotent_matrix(sigma, "gl"), "gl"))
        for i in range(1, len(sigma) + 1):
            for j in range(1, len(sigma) + 1):
                if i == j:
                    continue
                comp = block_component(sigma, i, j)
                require(comp.dim > 0 and all(D.contains(m) for m in comp.basis),
                        f"Hom_x(E_{i}, E_{j}) not absorbed", list(sigma))


def check_killing(n, rng, samples):
    for sigma in partitions(n):
        for _ in range(samples):
            x = sheet_sample(sigma, rng)
            require(killing_orthogonality_check(x), "Killing orthogonality", _mat(x))


def check_centralizer_constant(n, rng, samples):
    for sigma in partitions(n):
        want = nilpotent_centralizer_dim(sigma) - 1
        for _ in range(samples):
            x = sheet_sample(sigma, rng)
            d1 = centralizer(x, "sl").dim
            d2 = centralizer(random_conjugate(x, rng), "sl").dim
            require(d1 == d2 == want, f"centralizer dims {d1}, {d2}, expected {want}", _mat(x))


# -- runner --------------------------------------------------------------------

def _plan(n_max: int, samples: int, seed: int = 0) -> list[tuple[str, str, Callable[[random.Random], None]]]:
    plan = []
    ideal_cache: dict = {}

    def ideal_rows(n, sigma):
        # shared by the three ideal invariants; seeded by sheet, not by case
        key = (n, sigma)
        if key not in ideal_cache:
            rng = random.Random(f"{seed}:ideal-data:{n}:{tuple(sigma)}")
            ideal_cache[key] = ideal_results(n, sigma, rng, max(samples, 20))
        return ideal_cache[key]

    def once(inv, fn, budget=samples):
        plan.append((inv, inv, lambda rng: fn(rng, budget)))

    def per_n(inv, fn, lo=2, budget=samples):
        for n in range(lo, n_max + 1):
            plan.append((f"{inv}[n={n}]", inv, lambda rng, n=n: fn(n, rng, budget)))

    few = max(1, samples // 5)
    once("exact-arith/div-rem", check_div_rem)
    once("exact-arith/gcd", check_gcd)
    once("exact-arith/root-sum", check_root_sum)
    once("exact-arith/rescale-inverse", check_rescale_inverse)
    once("exact-arith/reproducible", check_reproducible)
    per_n("minor-gcd/tower", check_tower)
    per_n("minor-gcd/conjugation", check_conjugation, budget=few)
    per_n("minor-gcd/kernel", check_kernel, budget=few)
    per_n("minor-gcd/homothety", check_homothety, budget=few)
    per_n("sheets/classify-nilpotent", check_classify_nilpotent, lo=1)
    once("sheets/conjugate-involution", check_conjugate_involution)
    per_n("sheets/orbit-dim-brute", check_orbit_dim_brute, lo=1)
    per_n("sheets/orbit-dim-constant", check_orbit_dim_constant, budget=few)
    per_n("quotient/section-roundtrip", check_section_roundtrip)
    per_n("quotient/Q-reconstruction", check_Q_reconstruction)
    per_n("quotient/separates-orbits", check_separates, budget=few)
    per_n("quotient/equivariance", check_equivariance, budget=few)
    per_n("quotient/asymptotic-cone", check_asymptotic_cone, budget=few)
    per_n("closure/order", check_closure_order)
    per_n("closure/antisymmetry", check_closure_antisymmetry)
    per_n("closure/jordan-dominance", check_jordan_dominance)
    for kind in ("vanishing", "separation", "set-consistency"):
        fn = check_ideal(kind, ideal_rows)
        for n, sigma in _ideal_sheets(n_max):
            name = f"ideal/{kind}[n={n},sigma={','.join(map(str, sigma))}]"
            plan.append((name, f"ideal/{kind}", lambda rng, n=n, sigma=sigma, fn=fn: fn(n, sigma)))
    per_n("centralizer/regular-abelian", check_regular_abelian)
    per_n("centralizer/nilpotent-lemma", check_nilpotent_lemma, lo=1)
    per_n("centralizer/offdiag-absorption", check_offdiag)
    per_n("centralizer/killing", check_killing, budget=few)
    per_n("centralizer/constant-along-sheet", check_centralizer_constant, budget=few)
    return plan


def run_case(name: str, invariant: str, fn, seed: int) -> CaseResult:
    rng = random.Random(f"{seed}:{name}")
    try:
        fn(rng)
    except Counterexample as exc:
        return CaseResult(name, invariant, "fail", exc.witness if exc.witness is not None else str(exc), str(exc))
    except (ArithmeticError, ValueError, RuntimeError) as exc:
        return CaseResult(name, invariant, "fail", f"{type(exc).__name__}: {exc}", "exception")
    return CaseResult(name, invariant, "pass")


def run_suite(n_max: int = 4, seed: int = 0, samples: int = 10, only: str | None = None,
              progress: Callable[[CaseResult], None] | None = None) -> VerificationReport:
    """Run every registered invariant for ``2 <= n <= n_max``.

    ``only`` restricts to case names starting with the given prefix.
    """
    if n_max > VERIFY_MAX_N:
        raise GuardLimitError(f"verify is limited to n_max <= {VERIFY_MAX_N}")
    if n_max < 1 or samples < 1:
        raise ValueError("n_max and samples must be positive")
    start = time.perf_counter()
    report = VerificationReport("slsheets", seed, n_max, samples)
    for name, invariant, fn in _plan(n_max, samples, seed):
        if only and not name.startswith(only):
            continue
        res = run_case(name, invariant, fn, seed)
        report.cases.append(res)
        if progress:
            progress(res)
    report.cases.sort(key=lambda c: c.name)
    report.elapsed = time.perf_counter() - start
    return report


def covered_invariants(n_max: int = 4, samples: int = 1) -> set[str]:
    return {inv for _, inv, _ in _plan(n_max, samples)}


__all__ = [
    "MANIFEST",
    "SYMBOLIC_MAX_N",
    "VERIFY_MAX_N",
    "CaseResult",
    "VerificationReport",
    "covered_invariants",
    "run_suite",
]
