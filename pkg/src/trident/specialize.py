"""Single-variable specializations of the 4-variable polynomial sequences.

Each ``SpecId`` fixes a substitution sending (w, x, y, z) to powers of one
fresh variable (or to 1).  The recurrence coefficient pair is always
recomputed by substituting into W1 and W2, never transcribed, and the
coefficients of the specialized polynomials count partitions by the
statistic induced by the substitution (the z-degree of each monomial's
image).

The ``(1, 1, z, 1)`` family additionally has closed binomial forms, which
double as an independent oracle for the recurrence path.
"""

from __future__ import annotations

import enum
import math
import threading
from dataclasses import dataclass, field

from .oracle import DEFAULT_LIST_CAP, PartitionStats, enumerate_partitions
from .polyring import NotDivisible, SpecMap, UniPoly, binomial_power, poly_substitute
from .sequences import S1, W1, W2

_Z = UniPoly.x()
_Z2 = UniPoly((0, 0, 1))


class SpecId(enum.Enum):
    """The ten built-in substitutions."""

    Z0 = "z0"
    Z1 = "z1"
    Z2 = "z2"
    Z3 = "z3"
    P1 = "p1"
    P2 = "p2"
    P3 = "p3"
    P4 = "p4"
    P5 = "p5"
    P6 = "p6"

    @property
    def spec_map(self) -> SpecMap:
        return _SPEC_MAPS[self]

    @classmethod
    def from_string(cls, name: str) -> "SpecId":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown spec {name!r}; expected one of "
                             + ", ".join(s.value for s in cls)) from None


_SPEC_MAPS: dict[SpecId, SpecMap] = {
    SpecId.Z0: SpecMap.from_shorthand((1, 1, 1, 1)),
    SpecId.Z1: SpecMap.from_shorthand((1, 1, _Z, 1)),
    SpecId.Z2: SpecMap.from_shorthand((_Z, _Z, _Z, _Z2)),
    SpecId.Z3: SpecMap.from_shorthand((1, 1, _Z, _Z)),
    SpecId.P1: SpecMap.from_shorthand((_Z, _Z, 1, 1)),
    SpecId.P2: SpecMap.from_shorthand((_Z, _Z, _Z, _Z)),
    SpecId.P3: SpecMap.from_shorthand((1, 1, _Z, _Z2)),
    SpecId.P4: SpecMap.from_shorthand((_Z, _Z, _Z, 1)),
    SpecId.P5: SpecMap.from_shorthand((1, _Z, _Z, _Z2)),
    SpecId.P6: SpecMap.from_shorthand((_Z, 1, _Z, _Z2)),
}

PALINDROMIC_PRESETS = (SpecId.P1, SpecId.P3, SpecId.P5, SpecId.P6)

_FAMILY_CACHE: dict[tuple[SpecId, str], list[UniPoly]] = {}
_FAMILY_LOCK = threading.Lock()


def _validate_family(family: str) -> str:
    family = family.lower()
    if family not in ("q", "r"):
        raise ValueError("family must be 'q' or 'r'")
    return family


def spec_images(spec: SpecId) -> tuple[UniPoly, UniPoly]:
    """The recurrence coefficient pair (W1, W2) under the substitution."""
    s = spec.spec_map
    return poly_substitute(W1, s), poly_substitute(W2, s)


def spec_family(spec: SpecId, family: str, n: int) -> UniPoly:
    """The specialized q- or r-family member at index ``n``, by recurrence."""
    family = _validate_family(family)
    if n < 0:
        raise ValueError("n must be non-negative")
    key = (spec, family)
    memo = _FAMILY_CACHE.get(key)
    if memo is None or n >= len(memo):
        # list extension is not idempotent; serialize cache growth
        with _FAMILY_LOCK:
            memo = _FAMILY_CACHE.get(key)
            if memo is None:
                if family == "q":
                    memo = [UniPoly.zero(), UniPoly.one()]
                else:
                    memo = [UniPoly.one(), poly_substitute(S1, spec.spec_map)]
                _FAMILY_CACHE[key] = memo
            if n >= len(memo):
                w1, w2 = spec_images(spec)
                while len(memo) <= n:
                    memo.append(w1 * memo[-1] - w2 * memo[-2])
    return memo[n]


def _halved(p: UniPoly) -> UniPoly:
    if any(c % 2 for c in p.coeffs):
        raise AssertionError("expected all-even coefficients")
    return UniPoly(tuple(c // 2 for c in p.coeffs))


def q1_r1_closed(n: int) -> tuple[UniPoly, UniPoly]:
    """Closed binomial forms of the (1, 1, z, 1) families.

    Returns (((z+3)^n - (z+1)^n) / 2, ((z+3)^n + (z+1)^n) / 2); both halves
    are exact because the two expansions agree coefficient-wise mod 2.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    plus3 = binomial_power(3, n)
    plus1 = binomial_power(1, n)
    return _halved(plus3 - plus1), _halved(plus3 + plus1)


def q1_r1_shifted(n: int) -> tuple[UniPoly, UniPoly]:
    """The closed forms with the argument shifted by -2.

    The shift collapses the binomial expansions onto pure odd (q-side) and
    pure even (r-side) binomial coefficients; that structure is asserted
    before returning.
    """
    q_closed, r_closed = q1_r1_closed(n)
    q_shift = q_closed.shift_argument(-2)
    r_shift = r_closed.shift_argument(-2)
    q_expect = UniPoly.zero()
    for j in range((n + 1) // 2):
        q_expect = q_expect + UniPoly.monomial(n - 2 * j - 1, math.comb(n, 2 * j + 1))
    r_expect = UniPoly.zero()
    for j in range(n // 2 + 1):
        r_expect = r_expect + UniPoly.monomial(n - 2 * j, math.comb(n, 2 * j))
    if q_shift != q_expect or r_shift != r_expect:
        raise AssertionError("shifted closed forms lost their odd/even binomial structure")
    return q_shift, r_shift


def reduced_q2(n: int) -> UniPoly:
    """The (z, z, z, z^2) q-family member with its exact power-of-z factor stripped.

    The index-n member is divisible by z^(n-1); the quotient has a nonzero
    constant term and degree 2(n-1).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    p = spec_family(SpecId.Z2, "q", n)
    shift = n - 1
    if any(p.coeff(d) for d in range(shift)):
        raise NotDivisible(min(d for d in range(shift) if p.coeff(d)))
    return UniPoly(p.coeffs[shift:])


def statistic_weights(spec: SpecId) -> tuple[int, int, int, int]:
    """Per-statistic weights induced by the substitution.

    Each variable image must be 1, z or z^2; the weight vector applied to a
    partition's (overlined, tilde, singles, pairs) counts gives the degree
    its monomial lands on, which is the combinatorial statistic the
    specialized coefficients count.
    """
    weights = []
    for image in spec.spec_map.images:
        d = image.degree()
        if image.coeffs != (0,) * d + (1,):
            raise ValueError(f"spec {spec.value} image {image!r} is not a power of z")
        weights.append(d)
    return tuple(weights)


def partition_statistic(spec: SpecId, stats: PartitionStats) -> int:
    """The statistic value of one partition under the given substitution."""
    weights = statistic_weights(spec)
    exps = stats.exponents()
    return sum(v * e for v, e in zip(weights, exps))


@dataclass(frozen=True)
class CoefficientProfile:
    """Nonzero coefficients of one specialized family member, keyed by degree."""

    family: str
    spec: SpecId
    n: int
    coeffs: dict[int, int]


def profile(spec: SpecId, family: str, n: int) -> CoefficientProfile:
    """Coefficient profile of the specialized polynomial (recurrence path)."""
    family = _validate_family(family)
    p = spec_family(spec, family, n)
    return CoefficientProfile(
        family=family, spec=spec, n=n,
        coeffs={d: c for d, c in enumerate(p.coeffs) if c},
    )


def profile_from_oracle(spec: SpecId, family: str, n: int,
                        cap: int = DEFAULT_LIST_CAP) -> CoefficientProfile:
    """The same profile recomputed by filtering the brute-force enumeration.

    Counts partitions of (3^n - 3)/2 (q-side) or (3^n - 1)/2 (r-side) by the
    statistic induced by the substitution; shares nothing with the
    recurrence path.
    """
    family = _validate_family(family)
    if n < 1:
        raise ValueError("n must be at least 1 for the oracle path")
    index = (3**n - 3) // 2 if family == "q" else (3**n - 1) // 2
    weights = statistic_weights(spec)
    counts: dict[int, int] = {}
    for partition in enumerate_partitions(index, cap=cap):
        exps = partition.stats().exponents()
        k = sum(v * e for v, e in zip(weights, exps))
        counts[k] = counts.get(k, 0) + 1
    return CoefficientProfile(family=family, spec=spec, n=n, coeffs=counts)


@dataclass
class StructuralReport:
    """Structural assertions about one specialized polynomial."""

    spec: SpecId
    n: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def structural_check(spec: SpecId, n: int) -> StructuralReport:
    """Check the claimed degree/coefficient/palindromy structure at index ``n``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    report = StructuralReport(spec, n)
    fail = report.failures.append

    if spec is SpecId.Z1:
        q = spec_family(spec, "q", n)
        r = spec_family(spec, "r", n)
        if q.degree() != n - 1:
            fail(f"q degree {q.degree()} != {n - 1}")
        if q.coeff(0) != (3**n - 1) // 2:
            fail(f"q constant {q.coeff(0)} != (3^{n}-1)/2")
        if q.coeff(n - 1) != n:
            fail(f"q leading {q.coeff(n - 1)} != {n}")
        if r.degree() != n:
            fail(f"r degree {r.degree()} != {n}")
        if r.coeff(0) != (3**n + 1) // 2:
            fail(f"r constant {r.coeff(0)} != (3^{n}+1)/2")
        if r.coeff(n) != 1:
            fail("r is not monic")
    elif spec is SpecId.Z2:
        p = spec_family(spec, "q", n)
        low = next((d for d, c in enumerate(p.coeffs) if c), None)
        if p.degree() != 3 * (n - 1):
            fail(f"degree {p.degree()} != {3 * (n - 1)}")
        if low != n - 1:
            fail(f"lowest-degree term {low} != {n - 1}")
        if not reduced_q2(n).is_palindromic():
            fail("not palindromic after reduction")
        if p.coeff(3 * (n - 1)) != 3 ** (n - 1):
            fail(f"leading coefficient != 3^{n - 1}")
        parity = (n - 1) % 2
        if any(c and d % 2 != parity for d, c in enumerate(p.coeffs)):
            fail("exponent parities are mixed")
    elif spec is SpecId.Z3:
        p = spec_family(spec, "q", n)
        if p.degree() != n - 1:
            fail(f"degree {p.degree()} != {n - 1}")
        if p.coeff(n - 1) != (3**n - 1) // 2:
            fail(f"leading coefficient != (3^{n}-1)/2")
        if p.coeff(0) != 2 ** (n - 1):
            fail(f"constant coefficient != 2^{n - 1}")
    elif spec in PALINDROMIC_PRESETS:
        p = spec_family(spec, "q", n)
        if not p.is_palindromic():
            fail("not palindromic")
    else:
        raise ValueError(f"no structural claims for spec {spec.value}")
    return report
