"""Chebyshev polynomials and their radical-free bivariate companions.

The subsequences computed in ``sequences`` are Chebyshev polynomials in
disguise: up to a half-integer power of W2 they are U_n and T_n evaluated
at W1 / (2 sqrt(W2)).  Rather than ever touching square roots, the
bivariate families

    E_0 = 1, E_1 = a, E_n = a E_{n-1} - b E_{n-2}
    D_0 = 2, D_1 = a, D_n = a D_{n-1} - b D_{n-2}

carry the scaling exactly: E_n(a, b) encodes b^(n/2) U_n(a / (2 sqrt b))
and D_n(a, b) / 2 encodes b^(n/2) T_n(a / (2 sqrt b)).  ``verify_prop35``
checks the resulting exact identities for the 4-variable sequences and
spot-checks the analytic form in floating point.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass, field
from functools import lru_cache

from .polyring import UniPoly
from .sequences import S1, TRIPLE_COEFF, W1, W2, q_poly, r_poly


class ChebKind(enum.Enum):
    """First kind (T) or second kind (U)."""

    FIRST = "T"
    SECOND = "U"


@lru_cache(maxsize=None)
def chebyshev(kind: ChebKind, n: int) -> UniPoly:
    """T_n or U_n as an exact integer polynomial, by the shared recurrence."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return UniPoly.one()
    if n == 1:
        return UniPoly((0, 1)) if kind is ChebKind.FIRST else UniPoly((0, 2))
    two_v = UniPoly((0, 2))
    return two_v * chebyshev(kind, n - 1) - chebyshev(kind, n - 2)


def dickson_E(n: int, a, b):
    """Second-kind companion E_n(a, b); works for any ring elements a, b."""
    if n < 0:
        raise ValueError("n must be non-negative")
    prev, cur = 1 * a**0, a   # (E_0, E_1) in the ring of a
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, a * cur - b * prev
    return cur


def dickson_D(n: int, a, b):
    """First-kind companion D_n(a, b); D_0 = 2."""
    if n < 0:
        raise ValueError("n must be non-negative")
    prev, cur = 2 * a**0, a
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, a * cur - b * prev
    return cur


@dataclass
class Prop35Report:
    """Outcome of the bridge identities at one index."""

    n: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _cheb_value(kind: ChebKind, n: int, v: float) -> float:
    return float(chebyshev(kind, n).evaluate(v))


def verify_prop35(n: int, spot_points: int = 20, seed: int = 42,
                  rel_tol: float = 1e-9) -> Prop35Report:
    """Check the Chebyshev bridge at index ``n``.

    Exact checks in the 4-variable ring:
      * the q-sequence at n+1 equals E_n(W1, W2);
      * twice the r-sequence at n equals D_n(W1, W2) plus
        (w + x + y - wxy - wz - xz) times the q-sequence at n.

    Then the analytic forms with explicit square roots are sampled at
    ``spot_points`` random points with all variables in (0.5, 2.0), where
    W2 is positive, and compared at relative tolerance ``rel_tol``.
    """
    report = Prop35Report(n)
    if q_poly(n + 1) != dickson_E(n, W1, W2):
        report.failures.append(f"E_{n}(W1, W2) != q-sequence at {n + 1}")
    correction = S1 - TRIPLE_COEFF
    if 2 * r_poly(n) != dickson_D(n, W1, W2) + correction * q_poly(n):
        report.failures.append(f"D_{n}(W1, W2) correction identity fails at {n}")

    rng = random.Random(seed)
    for trial in range(spot_points):
        point = tuple(rng.uniform(0.5, 2.0) for _ in range(4))
        w1 = float(W1.evaluate(*point))
        w2 = float(W2.evaluate(*point))
        if w2 <= 0:
            report.failures.append(f"spot point {trial}: nonpositive W2")
            continue
        arg = w1 / (2.0 * math.sqrt(w2))
        q_exact = float(q_poly(n + 1).evaluate(*point))
        q_analytic = w2 ** (n / 2.0) * _cheb_value(ChebKind.SECOND, n, arg)
        if abs(q_exact - q_analytic) > rel_tol * max(1.0, abs(q_exact), abs(q_analytic)):
            report.failures.append(
                f"spot point {trial}: U-form mismatch {q_exact} vs {q_analytic}")
        r_exact = float(r_poly(n).evaluate(*point))
        corr = float(correction.evaluate(*point))
        r_analytic = (w2 ** (n / 2.0) * _cheb_value(ChebKind.FIRST, n, arg)
                      + 0.5 * corr * float(q_poly(n).evaluate(*point)))
        if abs(r_exact - r_analytic) > rel_tol * max(1.0, abs(r_exact), abs(r_analytic)):
            report.failures.append(
                f"spot point {trial}: T-form mismatch {r_exact} vs {r_analytic}")
    return report
