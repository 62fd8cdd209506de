"""Dehn filling assembly of torsion and its asymptotics; torus knots.

Gluing solid tori S_1, ..., S_m to a manifold M with torus boundary
multiplies torsions: the torus pieces contribute 1 under the even-order
hypothesis, so

    log|Tor(filled)| = log|Tor(M)| + sum_j log|Tor(S_j)|,

and each solid torus contributes a circle factor.  At the level of the
normalized limits this subtracts log(2)/lam_j per filling, where 2*lam_j is
the order of the core's image.

The worked special case is the exterior of the (p,q) torus knot with 1/n
surgery, which yields the Brieskorn homology sphere of index (p, q, r),
r = |pqn + 1|.  Its conjugacy classes of irreducible SL(2,C) representations
are classified by integer triples (a, b, c) through the traces

    tr rho(x) = 2 cos(pi a / p),  tr rho(y) = 2 cos(pi b / q),
    tr rho(m) = 2 cos(pi c / r),

subject to 0 < a < p, 0 < b < q, a = b mod 2, 0 < c < r, c = n a mod 2.
The triple is acyclic (for the whole even tower) iff a and b are odd, and
then the classical torsion has the closed sine product recorded in
``brieskorn_torsion``; the leading coefficient of the higher tower converges
to (1 - 1/p' - 1/q' - 1/r') log 2 with p' = p/gcd(a,p), q' = q/gcd(b,q),
r' = r/gcd(c,r).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import PreconditionError
from .models import CircleRep, circle_log_torsion, log2sin_sum

LOG2 = math.log(2.0)


@dataclass(frozen=True)
class AsymptoticProfile:
    """Limits of log|Tor| normalized by (2N)^2 and by 2N.

    When the limits are exact rational multiples of log 2 (every case in
    scope), the coefficients are carried along as Fractions so downstream
    comparisons can be exact.
    """

    limit_sq: float
    limit_lin: float
    sq_coeff: Fraction | None = None
    lin_coeff: Fraction | None = None

    @classmethod
    def from_log2_coeffs(cls, sq, lin) -> "AsymptoticProfile":
        sq, lin = Fraction(sq), Fraction(lin)
        return cls(
            limit_sq=float(sq) * LOG2,
            limit_lin=float(lin) * LOG2,
            sq_coeff=sq,
            lin_coeff=lin,
        )


@dataclass(frozen=True)
class FillingSlope:
    """A Dehn filling slope alpha/beta on a boundary torus."""

    alpha: int
    beta: int

    def __post_init__(self):
        if (self.alpha, self.beta) == (0, 0):
            raise PreconditionError("slope (0, 0) is not allowed")
        if math.gcd(self.alpha, self.beta) != 1:
            raise PreconditionError("slope coefficients must be coprime")


def surgered_log_torsion(logtor_m: float, circle_reps: Sequence[CircleRep], n_half: int) -> float:
    """log|Tor| of the filled manifold from log|Tor(M)| and the core circles.

    The torus boundary factors are 1 under the even-order hypothesis, so the
    assembly is a plain sum of the circle contributions.
    """
    return logtor_m + math.fsum(circle_log_torsion(rep, n_half) for rep in circle_reps)


def surgery_limits(profile_m: AsymptoticProfile, lambdas: Sequence[int]) -> AsymptoticProfile:
    """Asymptotic profile of the filled manifold.

    The (2N)^2 limit is unchanged; the 2N limit drops by log(2) sum 1/lam_j.
    """
    if any(l < 1 for l in lambdas):
        raise PreconditionError("every lam must be a positive integer")
    drop = Fraction(0)
    for l in lambdas:
        drop += Fraction(1, l)
    lin_coeff = None
    if profile_m.lin_coeff is not None:
        lin_coeff = profile_m.lin_coeff - drop
    return AsymptoticProfile(
        limit_sq=profile_m.limit_sq,
        limit_lin=profile_m.limit_lin - float(drop) * LOG2,
        sq_coeff=profile_m.sq_coeff,
        lin_coeff=lin_coeff,
    )


@dataclass(frozen=True)
class TorusKnotExterior:
    """The (p, q) torus knot exterior with 1/n surgery coefficient.

    The filled manifold is the Brieskorn homology sphere of index
    (p, q, r) with r = |pqn + 1|; the sign convention in r is fixed once and
    for all by orienting the preferred longitude so that r = pqn + 1.
    """

    p: int
    q: int
    n: int

    def __post_init__(self):
        if self.p < 2 or self.q < 2:
            raise PreconditionError("p and q must be >= 2")
        if math.gcd(self.p, self.q) != 1:
            raise PreconditionError("p and q must be coprime")

    @property
    def r(self) -> int:
        return abs(self.p * self.q * self.n + 1)


@dataclass(frozen=True)
class JohnsonTriple:
    """Conjugacy class (a, b, c) of an irreducible SL(2,C) representation."""

    a: int
    b: int
    c: int
    acyclic: bool


def johnson_classify(tk: TorusKnotExterior) -> list[JohnsonTriple]:
    """All conjugacy-class triples of the surgered manifold, in (a,b,c) order.

    A triple is tagged acyclic iff a and b are odd (c = n mod 2 then holds
    automatically because c = n a mod 2).
    """
    p, q, n, r = tk.p, tk.q, tk.n, tk.r
    out = []
    for a in range(1, p):
        for b in range(1, q):
            if (a - b) % 2 != 0:
                continue
            for c in range(1, r):
                if (c - n * a) % 2 != 0:
                    continue
                acyclic = a % 2 == 1 and b % 2 == 1 and (c - n) % 2 == 0
                out.append(JohnsonTriple(a=a, b=b, c=c, acyclic=acyclic))
    return out


def _require_acyclic(tk: TorusKnotExterior, triple: JohnsonTriple) -> None:
    if not (0 < triple.a < tk.p and 0 < triple.b < tk.q and 0 < triple.c < tk.r):
        raise PreconditionError("triple out of range for this exterior")
    if not triple.acyclic or triple.a % 2 == 0 or triple.b % 2 == 0:
        raise PreconditionError("non-acyclic triple has no torsion value")


def brieskorn_torsion(tk: TorusKnotExterior, triple: JohnsonTriple) -> float:
    """Classical torsion of the surgered manifold at an acyclic triple:

    2^{-4} sin^{-2}(pi a / 2p) sin^{-2}(pi b / 2q) sin^{-2}(pi (c p q - r) / 2r).
    """
    _require_acyclic(tk, triple)
    p, q, r = tk.p, tk.q, tk.r
    s1 = math.sin(math.pi * triple.a / (2 * p))
    s2 = math.sin(math.pi * triple.b / (2 * q))
    s3 = math.sin(math.pi * (triple.c * p * q - r) / (2 * r))
    return 2.0 ** -4 / (s1 * s1 * s2 * s2 * s3 * s3)


def torusknot_higher_log_torsion(p: int, q: int, a: int, b: int, n_half: int) -> float:
    """log|Tor| of the torus knot exterior in coefficient dimension 2N:

    2N log 2 - sum_{k=1}^{N} [ log(4 sin^2(pi (2k-1) a / 2p))
                             + log(4 sin^2(pi (2k-1) b / 2q)) ].

    Requires a and b odd (the acyclic tower); odd numerators keep every sine
    away from zero.
    """
    if a % 2 == 0 or b % 2 == 0:
        raise PreconditionError("a and b must be odd for an acyclic tower")
    if n_half < 1:
        raise PreconditionError("N must be >= 1")
    return 2 * n_half * LOG2 - 2.0 * (log2sin_sum(a, p, n_half) + log2sin_sum(b, q, n_half))


def core_circle_rep(tk: TorusKnotExterior, triple: JohnsonTriple) -> CircleRep:
    """Circle data of the filled solid torus core at an acyclic triple.

    The core's image has eigenvalues e^{+- i pi (c p q - r) / r}; only the
    reduced denominator r' = r/gcd(c, r) affects limits.
    """
    _require_acyclic(tk, triple)
    return CircleRep.from_eigenvalue_fraction(triple.c * tk.p * tk.q - tk.r, tk.r)


def torusknot_limit_coeff(tk: TorusKnotExterior, triple: JohnsonTriple) -> Fraction:
    """Exact log-2 coefficient of the exterior's leading term: 1 - 1/p' - 1/q'."""
    _require_acyclic(tk, triple)
    pp = tk.p // math.gcd(triple.a, tk.p)
    qp = tk.q // math.gcd(triple.b, tk.q)
    return 1 - Fraction(1, pp) - Fraction(1, qp)


def brieskorn_leading_coeff(tk: TorusKnotExterior, triple: JohnsonTriple) -> Fraction:
    """Exact log-2 coefficient of the filled manifold's leading term:

    1 - 1/p' - 1/q' - 1/r' with p' = p/(a,p), q' = q/(b,q), r' = r/(c,r).
    """
    rp = tk.r // math.gcd(triple.c, tk.r)
    return torusknot_limit_coeff(tk, triple) - Fraction(1, rp)


def brieskorn_leading_limit(tk: TorusKnotExterior, triple: JohnsonTriple) -> float:
    return float(brieskorn_leading_coeff(tk, triple)) * LOG2
