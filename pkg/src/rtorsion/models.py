"""Twisted chain complexes of the circle and the torus.

With an n-dimensional coefficient representation sending the generators to
L (circle) and Q, H (torus), the complexes are

    circle:  V -- (L - I) --> V
    torus:   V -- (-H+I ; Q-I) --> V + V -- (Q-I , H-I) --> V

The circle complex is acyclic iff L - I is invertible, and then
|torsion| = |det(L - I)|^{-1}.  For a finite even order 2*lam class with
eigenvalues e^{+- i pi eta / lam} (eta odd, coprime to lam), the symmetric
power of dimension 2N has eigenvalues e^{+- i pi (2k-1) eta / lam},
k = 1..N, giving the closed form

    log|torsion| = -2 sum_{k=1}^{N} log(2 |sin(pi (2k-1) eta / (2 lam))|).

The summands are periodic in k with period lam and average log(2)/lam, which
drives every leading-coefficient limit in the package:
log|torsion| / (2N) -> -log(2)/lam.  For the torus, |torsion| = 1 whenever
one of the two commuting generators has even order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .chain import BasedChainComplex
from .errors import PreconditionError
from .sl2 import ConjClass


@dataclass(frozen=True)
class CircleRep:
    """Circle generator of finite even order 2*lam.

    Eigenvalues are e^{+- i pi eta / lam} with eta odd and coprime to lam;
    eta is normalized into (0, 2*lam).  Only such classes have closed-form
    torsion here: parabolic trace -2 circles are acyclic but are not covered
    by the sine product, and are rejected.
    """

    eta: int
    lam: int

    def __post_init__(self):
        if self.lam < 1:
            raise PreconditionError("lam must be a positive integer")
        object.__setattr__(self, "eta", self.eta % (2 * self.lam))
        if self.eta % 2 == 0:
            raise PreconditionError("eta must be odd")
        if math.gcd(self.eta, self.lam) != 1:
            raise PreconditionError("eta and lam must be coprime")

    @classmethod
    def from_eigenvalue_fraction(cls, eta: int, denom: int) -> "CircleRep":
        """Reduce eigenvalues e^{+- i pi eta/denom} to the canonical (eta, lam)."""
        if denom < 1:
            raise PreconditionError("denominator must be positive")
        g = math.gcd(eta, denom)
        return cls(eta=(eta // g), lam=denom // g)

    @property
    def order(self) -> int:
        return 2 * self.lam

    def conj_class(self) -> ConjClass:
        from fractions import Fraction

        return ConjClass.hyp_angle(Fraction(self.eta, self.lam))


@dataclass(frozen=True)
class TorusRep:
    """A commuting pair of conjugacy classes for the torus generators."""

    q_class: ConjClass
    h_class: ConjClass

    def __post_init__(self):
        if self.q_class.kind != self.h_class.kind:
            raise PreconditionError(
                "torus generators must lie in a common maximal abelian subgroup"
            )


def circle_complex(l_matrix: np.ndarray) -> BasedChainComplex:
    """Two-term complex with boundary L - I."""
    l = np.asarray(l_matrix, dtype=complex)
    if l.ndim != 2 or l.shape[0] != l.shape[1]:
        raise PreconditionError("L must be square")
    n = l.shape[0]
    return BasedChainComplex([l - np.eye(n)])


def torus_complex(q: np.ndarray, h: np.ndarray, comm_tol: float = 1e-10) -> BasedChainComplex:
    """Three-term torus complex for commuting coefficient matrices Q and H."""
    q = np.asarray(q, dtype=complex)
    h = np.asarray(h, dtype=complex)
    if q.shape != h.shape or q.ndim != 2 or q.shape[0] != q.shape[1]:
        raise PreconditionError("Q and H must be square of equal size")
    if float(np.max(np.abs(q @ h - h @ q))) > comm_tol:
        raise PreconditionError("Q and H do not commute")
    n = q.shape[0]
    eye = np.eye(n)
    d2 = np.vstack([-h + eye, q - eye])
    d1 = np.hstack([q - eye, h - eye])
    return BasedChainComplex([d1, d2])


def circle_acyclic_all_N(desc: ConjClass) -> bool:
    """Acyclicity of every even symmetric power of the circle complex.

    Holds iff the class is neither of odd order nor parabolic with trace +2.
    """
    if desc.kind == "para":
        return desc.trace == -2
    return not desc.has_finite_odd_order()


def torus_acyclic_all_N(rep: TorusRep) -> bool:
    """Acyclicity of every even symmetric power of the torus complex."""
    return circle_acyclic_all_N(rep.q_class) or circle_acyclic_all_N(rep.h_class)


def log2sin_terms(eta: int, alpha: int, count: int) -> np.ndarray:
    """Vector of log(2 |sin(pi (2k-1) eta / (2 alpha))|) for k = 1..count.

    eta must be odd so that every sine is nonzero: (2k-1)*eta is odd, hence
    never divisible by the even number 2*alpha.
    """
    if alpha < 1:
        raise PreconditionError("alpha must be a positive integer")
    if eta % 2 == 0:
        raise PreconditionError("eta must be odd")
    k = np.arange(1, count + 1, dtype=float)
    s = 2.0 * np.abs(np.sin(np.pi * (2.0 * k - 1.0) * eta / (2.0 * alpha)))
    if count and float(np.min(s)) < 1e-15:
        raise PreconditionError("zero sine encountered")  # unreachable for odd eta
    return np.log(s)


def log2sin_sum(eta: int, alpha: int, n_terms: int) -> float:
    """Compensated sum of ``log2sin_terms``; chunk-order independent."""
    return math.fsum(log2sin_terms(eta, alpha, n_terms))


def circle_log_torsion(rep: CircleRep, n_half: int) -> float:
    """log|torsion| of the circle complex in coefficient dimension 2*n_half."""
    if n_half < 1:
        raise PreconditionError("N must be >= 1")
    return -2.0 * log2sin_sum(rep.eta, rep.lam, n_half)


def circle_limit(lam: int) -> float:
    """Limit of circle log-torsion over twice the index: -log(2)/lam."""
    if lam < 1:
        raise PreconditionError("lam must be a positive integer")
    return -math.log(2.0) / lam


def periodic_average(values, period: int) -> float:
    """Average of one period of a nonnegative periodic sequence.

    This is the limit of the running averages of the periodic extension.
    ``values`` may cover any whole number of periods; the average is the same.
    """
    vals = [float(v) for v in values]
    if period < 1 or not vals or len(vals) % period != 0:
        raise PreconditionError("values must cover a whole number of periods")
    if any(v < 0 for v in vals):
        raise PreconditionError("entries must be nonnegative")
    return math.fsum(vals) / len(vals)
