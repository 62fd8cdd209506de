"""Seifert fibered spaces: index arithmetic, torsion closed forms, limits.

An orientable Seifert fibered space over an orientable base is encoded by
the index {b, g; (alpha_1, beta_1), ..., (alpha_m, beta_m)} with
alpha_j >= 2 and gcd(alpha_j, beta_j) = 1.  It decomposes canonically into a
trivial circle bundle over an (m+1)-holed genus-g surface and m+1 solid tori
filled along 1/-b, alpha_1/beta_1, ..., alpha_m/beta_m; everything here is
this decomposition fed through the Dehn-filling assembly.

All representations considered send the regular fiber h to -I.  Then the
core l_j of the j-th solid torus satisfies rho(l_j)^{alpha_j} = -I, so its
eigenvalues are e^{+- i pi eta_j / alpha_j} with eta_j odd, it has even
order 2*lambda_j with lambda_j = alpha_j / gcd(alpha_j, eta_j) a divisor of
alpha_j, and the b-solid-torus always has lambda_0 = 1.  The closed form is

    log|Tor| = -2N (2 - 2g - m) log 2
               - 2 sum_j sum_{k=1}^{N} log(2 |sin(pi (2k-1) eta_j / (2 alpha_j))|)

and the leading coefficient converges to

    -(2 - 2g - sum_j (lambda_j - 1)/lambda_j) log 2
    = -chi log 2 - log 2 sum_j (1/lambda_j - 1/alpha_j),

where chi = 2 - 2g - sum_j (alpha_j - 1)/alpha_j is the Euler characteristic
of the base orbifold.  Since each lambda_j divides alpha_j, the maximum over
all representations is -chi log 2.  Limits, chi and homology orders are kept
in exact rational arithmetic; floats only enter torsion values at finite N.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import ParseError, PreconditionError
from .models import log2sin_sum, log2sin_terms
from .surgery import LOG2, AsymptoticProfile


@dataclass(frozen=True)
class SeifertIndex:
    """Seifert index {b, g; (alpha_1, beta_1), ..., (alpha_m, beta_m)}."""

    b: int
    g: int
    fibers: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "fibers", tuple((int(a), int(c)) for a, c in self.fibers))
        if self.g < 0:
            raise PreconditionError("genus must be nonnegative")
        for alpha, beta in self.fibers:
            if alpha < 2:
                raise PreconditionError("fiber multiplicities must be >= 2")
            if math.gcd(alpha, beta) != 1:
                raise PreconditionError(f"fiber ({alpha}, {beta}) is not coprime")

    @property
    def m(self) -> int:
        return len(self.fibers)

    @property
    def alphas(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.fibers)

    @property
    def betas(self) -> tuple[int, ...]:
        return tuple(b for _, b in self.fibers)

    # -- text and JSON forms ------------------------------------------------

    def to_text(self) -> str:
        fibers = ",".join(f"{a}/{b}" for a, b in self.fibers)
        return f"{self.b};{self.g};{fibers}"

    @classmethod
    def from_text(cls, text: str) -> "SeifertIndex":
        """Parse the form "b; g; a1/b1, a2/b2, ..." (whitespace ignored)."""
        parts = [p.strip() for p in text.split(";")]
        if len(parts) != 3:
            raise ParseError(f"expected 'b; g; a1/b1, ...', got {text!r}")
        try:
            b = int(parts[0])
        except ValueError:
            raise ParseError(f"bad b field {parts[0]!r}") from None
        try:
            g = int(parts[1])
        except ValueError:
            raise ParseError(f"bad genus field {parts[1]!r}") from None
        fibers = []
        if parts[2]:
            for chunk in parts[2].split(","):
                m = re.fullmatch(r"\s*([+-]?\d+)\s*/\s*([+-]?\d+)\s*", chunk)
                if not m:
                    raise ParseError(f"bad fiber field {chunk.strip()!r}")
                fibers.append((int(m.group(1)), int(m.group(2))))
        try:
            return cls(b=b, g=g, fibers=tuple(fibers))
        except PreconditionError as exc:
            raise ParseError(str(exc)) from None

    def to_json_dict(self) -> dict:
        return {"b": self.b, "g": self.g, "fibers": [[a, b] for a, b in self.fibers]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "SeifertIndex":
        try:
            return cls(
                b=int(data["b"]),
                g=int(data["g"]),
                fibers=tuple((int(a), int(b)) for a, b in data["fibers"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad Seifert JSON document: {exc}") from None
        except PreconditionError as exc:
            raise ParseError(str(exc)) from None

    @classmethod
    def parse(cls, text: str) -> "SeifertIndex":
        """Accept either the text mini-language or an inline JSON document."""
        stripped = text.strip()
        if stripped.startswith("{"):
            try:
                data = json.loads(stripped)
            except json.JSONDecodeError as exc:
                raise ParseError(f"bad Seifert JSON document: {exc}") from None
            return cls.from_json_dict(data)
        return cls.from_text(stripped)


def h1_order(index: SeifertIndex) -> Fraction:
    """Order of the first homology group; 0 encodes infinite order.

    For genus 0 the group is finite of order
    alpha_1 ... alpha_m |b + sum beta_j/alpha_j| unless the sum vanishes;
    positive genus (or a vanishing sum) contributes free rank, so 0.
    """
    s = Fraction(index.b)
    prod = 1
    for alpha, beta in index.fibers:
        s += Fraction(beta, alpha)
        prod *= alpha
    if index.g > 0 or s == 0:
        return Fraction(0)
    return abs(prod * s)


def is_homology_sphere(index: SeifertIndex) -> bool:
    return h1_order(index) == 1


def orbifold_euler_char(index: SeifertIndex) -> Fraction:
    """chi of the base orbifold: 2 - 2g - sum (alpha_j - 1)/alpha_j."""
    chi = Fraction(2 - 2 * index.g)
    for alpha, _ in index.fibers:
        chi -= Fraction(alpha - 1, alpha)
    return chi


@dataclass(frozen=True)
class FiberDecomposition:
    """Exponents (mu, nu) writing the core as l = q^mu h^nu."""

    mu: int
    nu: int


def fiber_decomposition(alpha: int, beta: int) -> FiberDecomposition:
    """The unique (mu, nu) with alpha*nu - beta*mu = -1 and 0 < mu < alpha.

    The solid torus carrying the obstruction b has alpha = 1; there the
    convention mu = 1 is used (its core always has order 2 downstream).
    """
    if alpha < 1:
        raise PreconditionError("alpha must be positive")
    if math.gcd(alpha, beta) != 1:
        raise PreconditionError(f"({alpha}, {beta}) is not coprime")
    if alpha == 1:
        return FiberDecomposition(mu=1, nu=beta - 1)
    mu = pow(beta % alpha, -1, alpha)
    nu = (beta * mu - 1) // alpha
    return FiberDecomposition(mu=mu, nu=nu)


def lambda_of(alpha: int, beta: int, xi: int) -> int:
    """Half-order of the core's image on the component labeled xi.

    lambda = alpha / gcd(alpha, xi), with gcd(alpha, 0) = alpha: the labels
    0 and alpha (central images of q_j) give lambda = 1, and lambda = alpha
    exactly when xi and alpha are coprime.
    """
    if not 0 <= xi <= alpha:
        raise PreconditionError("xi must lie in [0, alpha]")
    if math.gcd(alpha, beta) != 1:
        raise PreconditionError(f"({alpha}, {beta}) is not coprime")
    return alpha // math.gcd(alpha, xi)


@dataclass(frozen=True)
class SeifertRep:
    """Eigenvalue data of the solid torus cores for one representation.

    eta_j is odd with the core's eigenvalues e^{+- i pi eta_j / alpha_j};
    it is normalized into (0, 2 alpha_j).  lambda_j = alpha_j /
    gcd(alpha_j, eta_j) is half the core's order and divides alpha_j.  The
    regular fiber is sent to -I by standing hypothesis; data violating it
    (even eta) is rejected.
    """

    etas: tuple[int, ...]
    lambdas: tuple[int, ...]

    @classmethod
    def from_etas(cls, index: SeifertIndex, etas: Sequence[int]) -> "SeifertRep":
        if len(etas) != index.m:
            raise PreconditionError("need one eta per exceptional fiber")
        normalized = []
        lambdas = []
        for (alpha, _), eta in zip(index.fibers, etas):
            eta = eta % (2 * alpha)
            if eta % 2 == 0:
                raise PreconditionError("every eta must be odd (regular fiber goes to -I)")
            normalized.append(eta)
            lambdas.append(alpha // math.gcd(alpha, eta))
        return cls(etas=tuple(normalized), lambdas=tuple(lambdas))

    @classmethod
    def from_xi(cls, index: SeifertIndex, xis: Sequence[int]) -> "SeifertRep":
        """Rep data from rotation-number labels xi_j of the q_j images.

        eta_j = mu_j xi_j - alpha_j nu_j, with (mu_j, nu_j) the fiber
        decomposition; the parity constraint xi_j = beta_j mod 2 makes every
        eta_j odd.
        """
        if len(xis) != index.m:
            raise PreconditionError("need one xi per exceptional fiber")
        etas = []
        for (alpha, beta), xi in zip(index.fibers, xis):
            if not 0 <= xi <= alpha:
                raise PreconditionError("xi must lie in [0, alpha]")
            if (xi - beta) % 2 != 0:
                raise PreconditionError(
                    f"xi = {xi} has the wrong parity for beta = {beta}"
                )
            dec = fiber_decomposition(alpha, beta)
            etas.append(dec.mu * xi - alpha * dec.nu)
        return cls.from_etas(index, etas)


def trivial_bundle_log_torsion(g: int, m: int, n_half: int) -> float:
    """log|Tor| of the trivial circle bundle over the (m+1)-holed surface:
    -2N (1 - 2g - m) log 2."""
    if g < 0 or m < 0 or n_half < 1:
        raise PreconditionError("need g >= 0, m >= 0, N >= 1")
    return -2.0 * n_half * (1 - 2 * g - m) * LOG2


def seifert_log_torsion(index: SeifertIndex, rep: SeifertRep, n_half: int) -> float:
    """Closed-form log|Tor| of the Seifert fibered space in dimension 2N."""
    if len(rep.etas) != index.m:
        raise PreconditionError("rep does not match the index")
    if n_half < 1:
        raise PreconditionError("N must be >= 1")
    total = -2.0 * n_half * (2 - 2 * index.g - index.m) * LOG2
    total -= 2.0 * math.fsum(
        log2sin_sum(eta, alpha, n_half) for eta, alpha in zip(rep.etas, index.alphas)
    )
    return total


def seifert_log_torsion_prefix(index: SeifertIndex, rep: SeifertRep, n_max: int) -> np.ndarray:
    """Vector of log|Tor| for N = 1..n_max (cumulative form of the closed form)."""
    if len(rep.etas) != index.m:
        raise PreconditionError("rep does not match the index")
    if n_max < 1:
        raise PreconditionError("N must be >= 1")
    n = np.arange(1, n_max + 1, dtype=float)
    total = -2.0 * n * (2 - 2 * index.g - index.m) * LOG2
    for eta, alpha in zip(rep.etas, index.alphas):
        total -= 2.0 * np.cumsum(log2sin_terms(eta, alpha, n_max))
    return total


def seifert_limits(index: SeifertIndex, lambdas: Sequence[int]) -> AsymptoticProfile:
    """Asymptotic profile for given core half-orders lambda_j | alpha_j.

    The (2N)^2 limit is 0 and the 2N limit is
    -(2 - 2g - sum (lambda_j - 1)/lambda_j) log 2, carried as an exact
    log-2 coefficient.
    """
    if len(lambdas) != index.m:
        raise PreconditionError("need one lambda per exceptional fiber")
    for lam, alpha in zip(lambdas, index.alphas):
        if lam < 1 or alpha % lam != 0:
            raise PreconditionError(f"lambda = {lam} does not divide alpha = {alpha}")
    coeff = Fraction(2 - 2 * index.g)
    for lam in lambdas:
        coeff -= Fraction(lam - 1, lam)
    return AsymptoticProfile.from_log2_coeffs(0, -coeff)


def seifert_limits_from_rep(index: SeifertIndex, rep: SeifertRep) -> AsymptoticProfile:
    return seifert_limits(index, rep.lambdas)


def max_limit(index: SeifertIndex) -> float:
    """The maximum of the leading-coefficient limits: -chi log 2.

    Attained exactly when every lambda_j equals alpha_j.
    """
    return float(-orbifold_euler_char(index)) * LOG2


def homology_sphere(alphas: Sequence[int]) -> SeifertIndex:
    """The Seifert homology sphere with b = 0 and the given multiplicities.

    Solves sum_j beta_j prod_{i != j} alpha_i = 1 by modular inverses; the
    multiplicities must be pairwise coprime and >= 2.  The paper-level data
    (which component labels exist, etc.) depends on the chosen beta_j only
    through their parities, and any valid choice describes the same manifold.
    """
    alphas = [int(a) for a in alphas]
    if any(a < 2 for a in alphas):
        raise PreconditionError("multiplicities must be >= 2")
    for i in range(len(alphas)):
        for j in range(i + 1, len(alphas)):
            if math.gcd(alphas[i], alphas[j]) != 1:
                raise PreconditionError("multiplicities must be pairwise coprime")
    prod = math.prod(alphas)
    betas = [pow((prod // a) % a, -1, a) for a in alphas]
    total = sum(b * (prod // a) for a, b in zip(alphas, betas))
    # total = 1 mod prod; shift the first beta by a multiple of alpha_1
    betas[0] -= (total - 1) // prod * alphas[0]
    index = SeifertIndex(b=0, g=0, fibers=tuple(zip(alphas, betas)))
    assert h1_order(index) == 1
    return index
