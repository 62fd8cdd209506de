"""Torsion of based acyclic chain complexes.

A based chain complex is a sequence of C-vector spaces C_0, ..., C_n, each
with a distinguished basis, and boundary maps d_i : C_i -> C_{i-1} with
d_i d_{i+1} = 0.  When the complex is acyclic, each C_i splits as
im(d_{i+1}) + (a lift of im d_i), and the torsion is the alternating product
over i of the determinants of the base-change matrices from the given basis
of C_i to the basis

    d_{i+1}(selected columns at level i+1)  u  (selected basis vectors at level i),

where the selected columns at level i are a maximal set of basis vectors of
C_i whose images under d_i are linearly independent.  The value does not
depend on the selection; only log|torsion| is computed here, so the overall
sign and the +-det indeterminacies of geometric torsions are dropped.

This module is the brute-force oracle for the closed-form torsion values
elsewhere in the package.  Everything is dense numpy linear algebra:
the intended inputs are modest root-of-unity matrices, well inside the
comfort zone of SVD ranks with a relative cutoff.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
import scipy.linalg

from .errors import PreconditionError

#: singular values below RANK_TOL * sigma_max count as zero
RANK_TOL = 1e-9
#: entrywise tolerance on d_i d_{i+1} = 0
CHAIN_TOL = 1e-10


def numerical_rank(m: np.ndarray, tol: float = RANK_TOL) -> int:
    if m.size == 0:
        return 0
    s = np.linalg.svd(m, compute_uv=False)
    if s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > tol * s[0]))


class BasedChainComplex:
    """A finite chain complex of based complex vector spaces.

    ``boundaries[i]`` is the matrix of d_{i+1} : C_{i+1} -> C_i in the given
    bases; ``lengths`` lists dim C_0, ..., dim C_n.  ``lengths`` may be
    omitted when every dimension is determined by the boundary shapes.
    """

    def __init__(self, boundaries: Sequence[np.ndarray], lengths: Sequence[int] | None = None):
        bnds = [np.asarray(b, dtype=complex) for b in boundaries]
        if lengths is None:
            if not bnds:
                raise PreconditionError("lengths are required when there are no boundaries")
            lengths = [bnds[0].shape[0]] + [b.shape[1] for b in bnds]
        lengths = [int(x) for x in lengths]
        if len(lengths) != len(bnds) + 1:
            raise PreconditionError("need one more length than boundary matrices")
        if any(l < 0 for l in lengths):
            raise PreconditionError("negative dimension")
        for i, b in enumerate(bnds, start=1):
            if b.shape != (lengths[i - 1], lengths[i]):
                raise PreconditionError(
                    f"boundary {i} has shape {b.shape}, expected {(lengths[i - 1], lengths[i])}"
                )
        for i in range(len(bnds) - 1):
            prod = bnds[i] @ bnds[i + 1]
            if prod.size and np.max(np.abs(prod)) > CHAIN_TOL:
                raise PreconditionError(f"d_{i + 1} o d_{i + 2} != 0")
        self.lengths = lengths
        self.boundaries = bnds

    @property
    def top_degree(self) -> int:
        return len(self.lengths) - 1

    def dim(self, i: int) -> int:
        return self.lengths[i] if 0 <= i <= self.top_degree else 0

    def boundary(self, i: int) -> np.ndarray:
        """The matrix of d_i : C_i -> C_{i-1}, for 1 <= i <= top degree."""
        return self.boundaries[i - 1]

    def ranks(self) -> list[int]:
        """Numerical ranks of d_1, ..., d_n."""
        return [numerical_rank(b) for b in self.boundaries]

    def is_acyclic(self) -> bool:
        """True iff rank d_i + rank d_{i+1} = dim C_i for every i."""
        r = [0] + self.ranks() + [0]
        return all(r[i] + r[i + 1] == self.dim(i) for i in range(self.top_degree + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * l for i, l in enumerate(self.lengths))


@dataclass(frozen=True)
class TorsionValue:
    """log|torsion| of a based chain complex; undefined when non-acyclic."""

    log_abs: float
    defined: bool

    @classmethod
    def undefined(cls) -> "TorsionValue":
        return cls(log_abs=math.nan, defined=False)


def _pivot_columns_qr(m: np.ndarray, r: int) -> list[int]:
    # column-pivoted QR; the first r pivots index a well-conditioned
    # maximal independent set of columns
    if r == 0:
        return []
    _, _, piv = scipy.linalg.qr(m, mode="economic", pivoting=True)
    return sorted(int(j) for j in piv[:r])


def _pivot_columns_lex(m: np.ndarray, r: int) -> list[int]:
    # greedy left-to-right selection: keep a column iff it enlarges the span
    if r == 0:
        return []
    s = np.linalg.svd(m, compute_uv=False)
    cutoff = RANK_TOL * s[0]
    basis = np.zeros((m.shape[0], 0), dtype=complex)
    picked: list[int] = []
    for j in range(m.shape[1]):
        col = m[:, j]
        resid = col - basis @ (basis.conj().T @ col)
        if np.linalg.norm(resid) > cutoff:
            picked.append(j)
            basis = np.hstack([basis, (resid / np.linalg.norm(resid))[:, None]])
            if len(picked) == r:
                break
    if len(picked) != r:
        raise PreconditionError("pivot selection failed to reach the numerical rank")
    return picked


_PIVOT_STRATEGIES = {"qr": _pivot_columns_qr, "lex": _pivot_columns_lex}


def torsion(c: BasedChainComplex, pivot: str = "qr") -> TorsionValue:
    """log|torsion| of an acyclic based chain complex.

    Returns ``TorsionValue.undefined()`` on a non-acyclic complex.  The
    ``pivot`` strategy ("qr" or "lex") selects the lift bases; the result is
    independent of the choice up to rounding, which the test suite checks.
    """
    if pivot not in _PIVOT_STRATEGIES:
        raise PreconditionError(f"unknown pivot strategy {pivot!r}")
    select = _PIVOT_STRATEGIES[pivot]
    n = c.top_degree
    ranks = c.ranks()
    if not c.is_acyclic():
        return TorsionValue.undefined()
    # pivots[i] are the basis vectors of C_i spanning the lift of im d_i
    pivots: list[list[int]] = [[]] + [
        select(c.boundary(i), ranks[i - 1]) for i in range(1, n + 1)
    ]
    log_abs = 0.0
    for i in range(n + 1):
        blocks = []
        if i + 1 <= n and pivots[i + 1]:
            blocks.append(c.boundary(i + 1)[:, pivots[i + 1]])
        if pivots[i]:
            blocks.append(np.eye(c.dim(i), dtype=complex)[:, pivots[i]])
        if not blocks:
            continue  # zero-dimensional level
        m = np.hstack(blocks)
        if m.shape[0] != m.shape[1]:
            return TorsionValue.undefined()
        _, logdet = np.linalg.slogdet(m)
        if not math.isfinite(logdet):
            return TorsionValue.undefined()
        log_abs += (-1) ** (i + 1) * logdet
    return TorsionValue(log_abs=log_abs, defined=True)


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise PreconditionError(message)


def check_multiplicativity(
    cp: BasedChainComplex,
    c: BasedChainComplex,
    cpp: BasedChainComplex,
    inclusion: Sequence[np.ndarray],
    projection: Sequence[np.ndarray],
    rel_tol: float = 1e-7,
) -> bool:
    """Verify |Tor(C)| = |Tor(C')| |Tor(C'')| on a based short exact sequence.

    ``inclusion[i]`` and ``projection[i]`` are the matrices of C'_i -> C_i and
    C_i -> C''_i in the given bases.  The sequence must be exact, the maps
    must be chain maps, and the bases must be compatible: the change of basis
    from the basis of C_i to (image of the C'_i basis) u (any lift of the
    C''_i basis) must have determinant of absolute value 1.  Violations raise
    ``PreconditionError`` with a diagnostic; the torsion comparison itself is
    returned as a bool.
    """
    n = c.top_degree
    _check(cp.top_degree == n and cpp.top_degree == n, "degree mismatch")
    _check(len(inclusion) == n + 1 and len(projection) == n + 1, "need one map per level")
    incl = [np.asarray(m, dtype=complex) for m in inclusion]
    proj = [np.asarray(m, dtype=complex) for m in projection]
    splittings = []
    for i in range(n + 1):
        _check(incl[i].shape == (c.dim(i), cp.dim(i)), f"inclusion shape at level {i}")
        _check(proj[i].shape == (cpp.dim(i), c.dim(i)), f"projection shape at level {i}")
        _check(cp.dim(i) + cpp.dim(i) == c.dim(i), f"dimension count at level {i}")
        _check(numerical_rank(incl[i]) == cp.dim(i), f"inclusion not injective at level {i}")
        _check(numerical_rank(proj[i]) == cpp.dim(i), f"projection not surjective at level {i}")
        if incl[i].size and proj[i].size:
            _check(
                float(np.max(np.abs(proj[i] @ incl[i]))) < 1e-8,
                f"projection o inclusion != 0 at level {i}",
            )
        # basis compatibility; the splitting is constructed explicitly and the
        # determinant does not depend on which splitting is used
        splitting = np.linalg.pinv(proj[i]) if proj[i].size else np.zeros((c.dim(i), 0))
        m = np.hstack([incl[i], splitting]) if c.dim(i) else np.zeros((0, 0))
        _, logdet = np.linalg.slogdet(m) if m.size else (1.0, 0.0)
        _check(
            abs(logdet) < 1e-6,
            f"bases not compatible at level {i}: |det| = {math.exp(logdet):.6g}",
        )
        splittings.append(splitting)
    for i in range(1, n + 1):
        _check(
            float(np.max(np.abs(c.boundary(i) @ incl[i] - incl[i - 1] @ cp.boundary(i)))) < 1e-8
            if incl[i].size
            else True,
            f"inclusion is not a chain map at level {i}",
        )
        _check(
            float(np.max(np.abs(proj[i - 1] @ c.boundary(i) - cpp.boundary(i) @ proj[i]))) < 1e-8
            if proj[i - 1].size
            else True,
            f"projection is not a chain map at level {i}",
        )
    tp, t, tpp = torsion(cp), torsion(c), torsion(cpp)
    _check(tp.defined and t.defined and tpp.defined, "complexes are not all acyclic")
    lhs, rhs = t.log_abs, tp.log_abs + tpp.log_abs
    return abs(lhs - rhs) <= rel_tol * max(1.0, abs(lhs), abs(rhs))
