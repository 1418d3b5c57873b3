"""Zero computation and locus verification for the specialized families.

Three of the single-variable families inherit their zeros from Chebyshev
zeros through explicit algebraic maps, so ``zeros_explicit`` produces them
in closed form.  ``zeros_general`` is an Aberth-Ehrlich simultaneous
root finder used both as the cross-check for the explicit maps and as the
only path for the preset families, whose locus claims come with no map.

Loci checked by ``verify_locus``:

  * (1, 1, z, 1): every zero on the vertical line Re = -2, nonreal except
    a single zero at -2 for even q-indices and odd r-indices;
  * (z, z, z, z^2): nonzero zeros on the unit circle with |Im| > 1/3;
  * (1, 1, z, z): zeros on the circle |z - 3/8| = 7/8 with Re < 1/2;
  * presets p3/p5/p6: unit circle, or the negative real axis.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .chebyshev import ChebKind
from .polyring import UniPoly, up_eval_complex, up_square_free
from .specialize import SpecId, reduced_q2, spec_family

DEFAULT_ROOT_TOL = 1e-13
DEFAULT_MAX_ITER = 500
DEFAULT_SEED = 42

EXPLICIT_SPECS = ("z1q", "z1r", "z2", "z3")


class DomainError(ValueError):
    """A Chebyshev zero fell outside the open interval (-1, 1)."""


class NoConvergence(Exception):
    """The simultaneous iteration failed to reach the requested tolerance."""

    def __init__(self, iterations: int, trace: list[float]):
        self.iterations = iterations
        self.trace = trace
        last = f"{trace[-1]:.3e}" if trace else "n/a"
        super().__init__(
            f"root finder did not converge in {iterations} iterations "
            f"(last correction {last})")


@dataclass
class ZeroReport:
    """Computed zeros of one polynomial plus per-point diagnostics.

    ``points`` has exactly one entry per zero of the reduced polynomial
    (an exact zero at the origin, when present, is carried separately in
    ``origin_multiplicity``).  ``residuals[i]`` is |P(points[i])| and
    ``locus_distances[i]`` the distance to the claimed locus, when one
    exists for the family.
    """

    family: str
    spec: str
    n: int
    points: list[complex]
    residuals: list[float]
    locus_distances: Optional[list[float]] = None
    origin_multiplicity: int = 0


def chebyshev_zeros(kind, n: int) -> list[float]:
    """The n real zeros of T_n or U_n, in descending order.

    The zeros are cos((k+1) pi / (n+1)) for the second kind and
    cos((2k+1) pi / (2n)) for the first; the list is built from its
    positive half so that the sign symmetry (and the zero at the origin
    for odd n) is exact in floating point.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if kind is ChebKind.SECOND:
        positive = [math.cos((k + 1) * math.pi / (n + 1)) for k in range(n // 2)]
    elif kind is ChebKind.FIRST:
        positive = [math.cos((2 * k + 1) * math.pi / (2 * n)) for k in range(n // 2)]
    else:
        raise ValueError(f"unknown Chebyshev kind {kind!r}")
    middle = [0.0] if n % 2 else []
    return positive + middle + [-v for v in reversed(positive)]


def _require_open_interval(v: float) -> None:
    if abs(v) >= 1.0:
        raise DomainError(f"Chebyshev zero {v} outside (-1, 1)")


def _line_map(v: float) -> complex:
    # Zero of the (1,1,z,1) families attached to the Chebyshev zero v.
    _require_open_interval(v)
    return complex(-2.0, v / math.sqrt(1.0 - v * v))


def _circle_distance(z: complex, center: complex, radius: float) -> float:
    return abs(abs(z - center) - radius)


def zeros_explicit(spec: str, n: int) -> ZeroReport:
    """All zeros of one explicit family, from the Chebyshev-zero maps.

    ``spec`` is one of ``z1q``, ``z1r``, ``z2``, ``z3``.  For ``z2`` the
    points are the nonzero zeros (of the reduced polynomial); the exact
    zero at the origin is reported via ``origin_multiplicity``.
    """
    if spec not in EXPLICIT_SPECS:
        raise ValueError(f"spec must be one of {EXPLICIT_SPECS}")
    if spec == "z1q":
        if n < 1:
            raise ValueError("n must be at least 1")
    elif n < 2:
        raise ValueError("n must be at least 2")

    points: list[complex] = []
    origin = 0
    if spec == "z1q":
        poly = spec_family(SpecId.Z1, "q", n)
        vs = chebyshev_zeros(ChebKind.SECOND, n - 1) if n >= 2 else []
        points = [_line_map(v) for v in vs]
        distance: Callable[[complex], float] = lambda z: abs(z.real + 2.0)
        family = "q"
    elif spec == "z1r":
        poly = spec_family(SpecId.Z1, "r", n)
        points = [_line_map(v) for v in chebyshev_zeros(ChebKind.FIRST, n)]
        distance = lambda z: abs(z.real + 2.0)
        family = "r"
    elif spec == "z2":
        poly = reduced_q2(n)
        origin = n - 1
        for v in chebyshev_zeros(ChebKind.SECOND, n - 1):
            _require_open_interval(v)
            re = 2.0 * math.sqrt(2.0) / 3.0 * v
            im = math.sqrt(1.0 - 8.0 / 9.0 * v * v)
            points.extend([complex(re, im), complex(re, -im)])
        distance = lambda z: _circle_distance(z, 0j, 1.0)
        family = "q"
    else:  # z3
        poly = spec_family(SpecId.Z3, "q", n)
        for v in chebyshev_zeros(ChebKind.SECOND, n - 1):
            _require_open_interval(v)
            u = v * v
            re = -(4.0 - 5.0 * u) / (8.0 - 6.0 * u)
            im = math.copysign(math.sqrt(28.0 * u - 25.0 * u * u), v) / (8.0 - 6.0 * u)
            points.append(complex(re, im))
        distance = lambda z: _circle_distance(z, complex(0.375, 0.0), 0.875)
        family = "q"

    if len(points) != poly.degree():
        raise AssertionError("explicit zero count disagrees with the polynomial degree")
    return ZeroReport(
        family=family,
        spec=spec,
        n=n,
        points=points,
        residuals=[abs(up_eval_complex(poly, z)) for z in points],
        locus_distances=[distance(z) for z in points],
        origin_multiplicity=origin,
    )


_EPS = 2.0 ** -52


def _aberth(coeffs: list[complex], tol: float, max_iter: int, seed: int) -> list[complex]:
    d = len(coeffs) - 1
    if d == 1:
        return [-coeffs[0] / coeffs[1]]
    deriv = [k * coeffs[k] for k in range(1, d + 1)]
    abs_coeffs = [abs(c) for c in coeffs]

    def horner(cs, z):
        acc = 0j
        for c in reversed(cs):
            acc = acc * z + c
        return acc

    def noise_floor(az: float) -> float:
        # Roundoff bound for Horner at |z|; residuals below it are numerically zero.
        acc = 0.0
        for c in reversed(abs_coeffs):
            acc = acc * az + c
        return 4.0 * d * _EPS * acc

    rng = random.Random(seed)
    radius = (1.0 + max(abs(c / coeffs[d]) for c in coeffs[:d])) ** (1.0 / d)
    zs = []
    for k in range(d):
        theta = 2.0 * math.pi * k / d + math.pi / (2.0 * d) + rng.uniform(-0.05, 0.05)
        zs.append(radius * cmath.exp(1j * theta))

    frozen = [False] * d
    trace: list[float] = []
    for _ in range(max_iter):
        worst = 0.0
        for k in range(d):
            if frozen[k]:
                continue
            zk = zs[k]
            pv = horner(coeffs, zk)
            if abs(pv) <= noise_floor(abs(zk)):
                frozen[k] = True
                continue
            dv = horner(deriv, zk)
            if dv == 0:
                zs[k] = zk * (1.0 + 1e-8) + 1e-8
                worst = max(worst, 1e-8)
                continue
            newton = pv / dv
            others = sum(1.0 / (zk - zs[j]) for j in range(d) if j != k)
            denom = 1.0 - newton * others
            step = newton if denom == 0 else newton / denom
            zs[k] = zk - step
            worst = max(worst, abs(step) / (1.0 + abs(zs[k])))
        trace.append(worst)
        if all(frozen) or worst < tol:
            return zs
    raise NoConvergence(len(trace), trace)


def _exact_eval_pair(coeffs: list[int], z: complex) -> tuple[Fraction, Fraction]:
    # Exact complex Horner over the rationals; the float point is taken verbatim.
    re, im = Fraction(z.real), Fraction(z.imag)
    acc_re, acc_im = Fraction(0), Fraction(0)
    for c in reversed(coeffs):
        acc_re, acc_im = acc_re * re - acc_im * im + c, acc_re * im + acc_im * re
    return acc_re, acc_im


def _abs2(pair: tuple[Fraction, Fraction]) -> Fraction:
    return pair[0] * pair[0] + pair[1] * pair[1]


def _newton_polish(poly: UniPoly, z: complex, steps: int = 3) -> complex:
    """Refine one simple root by Newton steps with exact polynomial evaluation.

    The iterate is rounded back to a complex double after every step, so the
    rational arithmetic stays small; a step is kept only if it reduces the
    exact residual.  This removes the double-precision evaluation noise that
    limits the simultaneous iteration on clustered roots.
    """
    coeffs = list(poly.coeffs)
    dcoeffs = [k * c for k, c in enumerate(coeffs)][1:]
    best = z
    best_res = _abs2(_exact_eval_pair(coeffs, z))
    for _ in range(steps):
        pv_re, pv_im = _exact_eval_pair(coeffs, best)
        dv_re, dv_im = _exact_eval_pair(dcoeffs, best)
        denom = dv_re * dv_re + dv_im * dv_im
        if denom == 0:
            break
        step_re = (pv_re * dv_re + pv_im * dv_im) / denom
        step_im = (pv_im * dv_re - pv_re * dv_im) / denom
        candidate = complex(float(Fraction(best.real) - step_re),
                            float(Fraction(best.imag) - step_im))
        res = _abs2(_exact_eval_pair(coeffs, candidate))
        if res < best_res:
            best, best_res = candidate, res
        else:
            break
    return best


def zeros_general(p: UniPoly, tol: float = DEFAULT_ROOT_TOL,
                  max_iter: int = DEFAULT_MAX_ITER, seed: int = DEFAULT_SEED) -> ZeroReport:
    """All complex zeros of ``p`` by Aberth-Ehrlich simultaneous iteration.

    Exact zeros at the origin (trailing zero coefficients) are split off
    first and reported via ``origin_multiplicity``.  Starting points sit on
    a circle of radius (1 + max |c_i / c_d|)^(1/d) with deterministic,
    seeded angular jitter; iteration stops when every root either reaches
    the floating-point noise floor of the evaluation or moves less than
    ``tol`` relatively, and raises NoConvergence (with the correction
    trace) otherwise.  Simple roots are then polished by exact-arithmetic
    Newton steps to remove evaluation noise.
    """
    if p.degree() < 1:
        raise ValueError("polynomial must have degree at least 1")
    origin = next(d for d, c in enumerate(p.coeffs) if c)
    reduced = UniPoly(p.coeffs[origin:])
    points: list[complex] = []
    if reduced.degree() >= 1:
        coeffs = [complex(c) for c in reduced.coeffs]
        points = [_newton_polish(reduced, z) for z in _aberth(coeffs, tol, max_iter, seed)]
    points.sort(key=lambda z: (z.real, z.imag))
    return ZeroReport(
        family="",
        spec="general",
        n=p.degree(),
        points=points,
        residuals=[abs(up_eval_complex(reduced, z)) for z in points],
        locus_distances=None,
        origin_multiplicity=origin,
    )


def match_multisets(a: list[complex], b: list[complex]) -> float:
    """Largest matched-pair distance between two zero multisets.

    Greedy nearest-neighbor matching; exact for the well-separated zero
    sets this package compares (separation far above the match distances).
    """
    if len(a) != len(b):
        return math.inf
    remaining = list(b)
    worst = 0.0
    for u in a:
        best_idx = min(range(len(remaining)), key=lambda i: abs(u - remaining[i]))
        worst = max(worst, abs(u - remaining.pop(best_idx)))
    return worst


@dataclass
class LocusReport:
    """Locus verification outcome for one family index."""

    spec: SpecId
    n: int
    failures: list[str] = field(default_factory=list)
    margins: dict[str, float] = field(default_factory=dict)
    real_zero_range: Optional[tuple[float, float]] = None

    @property
    def ok(self) -> bool:
        return not self.failures


def backward_scale(poly: UniPoly, z: complex) -> float:
    """Natural residual scale at ``z``: sum of |c_i| |z|^i.

    Coincides with the l1 coefficient norm on the unit circle and is the
    smallest scale against which a double-precision residual at a computed
    zero is meaningful; for zeros of modulus > 1 the plain l1 norm is
    unattainably small even for the exact residual of a correctly rounded
    zero.
    """
    az = abs(z)
    acc = 0.0
    for c in reversed(poly.coeffs):
        acc = acc * az + abs(c)
    return acc


def _residual_gate(report_points: list[complex], poly: UniPoly, tol: float,
                   failures: list[str]) -> None:
    for z in report_points:
        res = abs(up_eval_complex(poly, z))
        scale = backward_scale(poly, z)
        if res >= tol * scale:
            failures.append(f"residual {res:.3e} at {z} exceeds {tol:.1e} * scale {scale:.3e}")


def verify_locus(spec: SpecId, n: int, tol: float = 1e-9) -> LocusReport:
    """Assert the claimed zero locus of one family at index ``n``.

    Strict open conditions (|Im| > 1/3, Re < 1/2) are checked with their
    actual margins recorded rather than widened by the tolerance.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    report = LocusReport(spec, n)
    fail = report.failures.append

    if spec is SpecId.Z1:
        for tag, parity in (("z1q", 0), ("z1r", 1)):
            zr = zeros_explicit(tag, n)
            poly = spec_family(SpecId.Z1, zr.family, n)
            for z in zr.points:
                if abs(z.real + 2.0) >= tol:
                    fail(f"{tag}: zero {z} off the line Re = -2")
            real_zeros = [z for z in zr.points if z.imag == 0.0]
            expected = 1 if n % 2 == parity else 0
            if len(real_zeros) != expected:
                fail(f"{tag}: expected {expected} real zero(s), found {len(real_zeros)}")
            elif expected and abs(real_zeros[0].real + 2.0) >= tol:
                fail(f"{tag}: real zero not at -2")
            _residual_gate(zr.points, poly, tol, report.failures)
    elif spec is SpecId.Z2:
        zr = zeros_explicit("z2", n)
        poly = reduced_q2(n)
        margin = math.inf
        for z in zr.points:
            if abs(abs(z) - 1.0) >= tol:
                fail(f"zero {z} off the unit circle")
            margin = min(margin, abs(z.imag) - 1.0 / 3.0)
        if margin <= 0:
            fail(f"|Im| > 1/3 violated (margin {margin:.3e})")
        report.margins["im_above_third"] = margin
        _residual_gate(zr.points, poly, tol, report.failures)
    elif spec is SpecId.Z3:
        zr = zeros_explicit("z3", n)
        poly = spec_family(SpecId.Z3, "q", n)
        margin = math.inf
        for z in zr.points:
            if _circle_distance(z, complex(0.375, 0.0), 0.875) >= tol:
                fail(f"zero {z} off the circle |z - 3/8| = 7/8")
            margin = min(margin, 0.5 - z.real)
        if margin <= 0:
            fail(f"Re < 1/2 violated (margin {margin:.3e})")
        report.margins["re_below_half"] = margin
        _residual_gate(zr.points, poly, tol, report.failures)
    elif spec in (SpecId.P3, SpecId.P5, SpecId.P6):
        # Preset members can carry high-multiplicity factors (e.g. powers of
        # z + 1); root-find the exact square-free part so every zero is simple.
        poly = up_square_free(spec_family(spec, "q", n))
        zr = zeros_general(poly)
        reals = []
        for z in zr.points:
            on_circle = abs(abs(z) - 1.0) < tol
            on_negative_axis = abs(z.imag) < tol and z.real < 0
            if not (on_circle or on_negative_axis):
                fail(f"zero {z} off the unit circle and negative real axis")
            if on_negative_axis and not on_circle:
                reals.append(z.real)
        if reals:
            report.real_zero_range = (min(reals), max(reals))
        _residual_gate(zr.points, poly, tol, report.failures)
    else:
        raise ValueError(f"no locus claim for spec {spec.value}")
    return report
