"""SL(2,C) matrices, conjugacy-class descriptors and symmetric powers.

The n-dimensional irreducible representation of SL(2,C) acts on the space of
homogeneous polynomials of degree n-1 in two variables z1, z2 by
precomposition with the inverse matrix,

    (A . p)(z1, z2) = p(A^{-1} (z1, z2)).

In the monomial basis z1^{n-1}, z1^{n-2} z2, ..., z2^{n-1} (decreasing powers
of z1) the matrix of this action has polynomial entries in the entries of
A^{-1}, obtained by binomial expansion; ``sym_power`` builds it exactly, up to
complex rounding of the matrix entries themselves.  If A has eigenvalues
a^{+1}, a^{-1}, the image has eigenvalues a^w for w in ``weights(n)``, each
with multiplicity one, and determinant 1.

Elements of abelian subgroups are classified up to conjugacy by
``ConjClass``: diagonalizable ("hyp") with a given eigenvalue, or genuinely
parabolic ("para") with trace +2 or -2.  Eigenvalues that are roots of unity
are stored as exact rational angles (fractions of pi), which makes order
computations exact; all the asymptotic formulas downstream live at rational
angles.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import PreconditionError

#: tolerance on |det A - 1| when accepting an SL(2) matrix
DET_TOL = 1e-12


def as_unimodular(a) -> np.ndarray:
    """Coerce to a complex 2x2 array and reject non-unimodular input."""
    m = np.asarray(a, dtype=complex)
    if m.shape != (2, 2):
        raise PreconditionError(f"expected a 2x2 matrix, got shape {m.shape}")
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    if abs(det - 1.0) > DET_TOL:
        raise PreconditionError(f"matrix is not unimodular: det = {det}")
    return m


def weights(n: int) -> list[int]:
    """Weights of the n-dimensional symmetric power: -n+1, -n+3, ..., n-1."""
    if n < 1:
        raise PreconditionError("dimension must be >= 1")
    return list(range(-n + 1, n, 2))


def _binom_pow(x: complex, y: complex, e: int) -> np.ndarray:
    # coefficients of (x*z1 + y*z2)^e, indexed by the power of z2
    return np.array(
        [math.comb(e, i) * x ** (e - i) * y ** i for i in range(e + 1)],
        dtype=complex,
    )


def sym_power(a, n: int) -> np.ndarray:
    """Matrix of the n-dimensional symmetric power of a in the monomial basis.

    Column k is the expansion of (z1^{n-1-k} z2^k) o a^{-1}; the two binomial
    factors are combined by polynomial convolution, so every entry is an exact
    integer combination of products of entries of a^{-1}.
    """
    m = as_unimodular(a)
    if n < 1:
        raise PreconditionError("dimension must be >= 1")
    # inverse of a unimodular 2x2 matrix
    d0, d1 = m[1, 1], -m[0, 1]   # first row of a^{-1}
    c0, c1 = -m[1, 0], m[0, 0]   # second row of a^{-1}
    out = np.empty((n, n), dtype=complex)
    for k in range(n):
        out[:, k] = np.convolve(_binom_pow(d0, d1, n - 1 - k),
                                _binom_pow(c0, c1, k))
    return out


@dataclass(frozen=True)
class ConjClass:
    """Conjugacy class of an element of a maximal abelian subgroup of SL(2,C).

    ``kind`` is "hyp" (diagonalizable, eigenvalues z, 1/z) or "para"
    (non-central parabolic, trace exactly +2 or -2).  For a hyp class whose
    eigenvalue is a root of unity, ``angle`` holds the exact rational t with
    eigenvalue e^{i pi t}; otherwise ``eigenvalue`` holds the (nonzero)
    eigenvalue and the class is treated as having infinite order.  Parabolic
    classes are the non-central ones, so they have infinite order.
    """

    kind: str
    angle: Fraction | None = None
    eigenvalue: complex | None = None
    trace: int | None = None

    def __post_init__(self):
        if self.kind == "hyp":
            if (self.angle is None) == (self.eigenvalue is None):
                raise PreconditionError("hyp class needs exactly one of angle, eigenvalue")
            if self.angle is not None:
                object.__setattr__(self, "angle", Fraction(self.angle) % 2)
            else:
                z = complex(self.eigenvalue)
                if z == 0:
                    raise PreconditionError("hyp eigenvalue must be nonzero")
                # central elements are roots of unity; keep them exact
                if z == 1:
                    object.__setattr__(self, "angle", Fraction(0))
                    object.__setattr__(self, "eigenvalue", None)
                elif z == -1:
                    object.__setattr__(self, "angle", Fraction(1))
                    object.__setattr__(self, "eigenvalue", None)
        elif self.kind == "para":
            if self.trace not in (2, -2):
                raise PreconditionError("para class needs trace +2 or -2")
            if self.angle is not None or self.eigenvalue is not None:
                raise PreconditionError("para class carries only a trace")
        else:
            raise PreconditionError(f"unknown class kind {self.kind!r}")

    @classmethod
    def hyp_angle(cls, angle) -> "ConjClass":
        """Hyp class with eigenvalue e^{i pi angle}, angle an exact rational."""
        return cls(kind="hyp", angle=Fraction(angle))

    @classmethod
    def hyp_of_order(cls, order: int) -> "ConjClass":
        """Hyp class generated by a primitive root of unity of the given order."""
        if order < 1:
            raise PreconditionError("order must be a positive integer")
        return cls(kind="hyp", angle=Fraction(2, order))

    @classmethod
    def hyp(cls, eigenvalue: complex) -> "ConjClass":
        """Hyp class with a generic eigenvalue (not a known root of unity)."""
        return cls(kind="hyp", eigenvalue=eigenvalue)

    @classmethod
    def para(cls, trace: int) -> "ConjClass":
        return cls(kind="para", trace=trace)

    @property
    def order(self) -> int | None:
        """Multiplicative order of the class, None when infinite (or unknown)."""
        if self.kind == "para":
            return None
        if self.angle is None:
            return None
        p, q = self.angle.numerator, self.angle.denominator
        if p == 0:
            return 1
        return 2 * q // math.gcd(p, 2 * q)

    def has_finite_odd_order(self) -> bool:
        d = self.order
        return d is not None and d % 2 == 1

    def matrix(self) -> np.ndarray:
        """A representative SL(2,C) matrix of the class."""
        if self.kind == "para":
            s = self.trace // 2
            return np.array([[s, 1.0], [0.0, s]], dtype=complex)
        if self.angle is not None:
            z = cmath.exp(1j * math.pi * float(self.angle))
        else:
            z = complex(self.eigenvalue)
        return np.array([[z, 0.0], [0.0, 1.0 / z]], dtype=complex)


def has_eigenvalue_one(desc: ConjClass, n: int) -> bool:
    """Does the n-th symmetric power of the class contain the eigenvalue 1?

    Only even n is supported; the weights are then the odd integers of
    absolute value < n, so a hyp class contributes eigenvalue 1 exactly when
    its order is odd and at most n-1, and a parabolic class exactly when its
    trace is +2.
    """
    if n < 2 or n % 2 != 0:
        raise PreconditionError("has_eigenvalue_one is defined for even n >= 2")
    if desc.kind == "para":
        return desc.trace == 2
    d = desc.order
    return d is not None and d % 2 == 1 and d <= n - 1
