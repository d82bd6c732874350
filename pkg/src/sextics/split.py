"""Splitting the Jacobian of y^2 = f(x), deg f = 6, into elliptic factors.

When f factors completely over F_p with distinct roots, some ordering
a_1..a_6 of the roots may satisfy

    (a2 - a4)(a1 - a6)(a3 - a5) = (a2 - a6)(a1 - a5)(a3 - a4),

in which case the curve is isomorphic to
y^2 = theta x(x-1)(x-lambda)(x-mu)(x-nu) with

    lambda = (a1-a3)(a2-a4) / ((a2-a3)(a1-a4)),
    mu     = (a1-a3)(a2-a5) / ((a2-a3)(a1-a5)),
    theta  = c (a2-a3)(a1-a4)(a1-a5)(a1-a6),
    nu     = lambda (1-mu) / (1-lambda).

If additionally lambda(lambda - mu) is a square mod p, the Jacobian
splits as a product of the two Legendre-form cubics

    s^2 = A t(t-1)(t - lhat),  A = theta (1-mu)/(1-lambda),
    lhat = (1-lambda)(mu - 2 lambda +- 2 sqrt(lambda^2 - lambda mu)) / (mu-1),

and the point counts satisfy #D = #E_sigma + #E_tau - p - 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import InternalInvariantError
from .fields import inv_mod, legendre, sqrt_mod
from .polys import Poly, roots_fp

REASON_NOT_SPLIT = "not_split"
REASON_REPEATED_ROOTS = "repeated_roots"
REASON_NO_PERMUTATION = "no_admissible_permutation"
REASON_NO_SQUARE_ROOT = "no_square_root"

SKIP_REASONS = (
    REASON_NOT_SPLIT,
    REASON_REPEATED_ROOTS,
    REASON_NO_PERMUTATION,
    REASON_NO_SQUARE_ROOT,
)


@dataclass(frozen=True)
class NotApplicable:
    """Normal negative outcome of find_split, with the failing hypothesis."""

    reason: str

    def __post_init__(self):
        if self.reason not in SKIP_REASONS:
            raise ValueError(f"unknown reason {self.reason!r}")


@dataclass(frozen=True)
class LegendreCubic:
    """Elliptic curve s^2 = A t(t-1)(t - lam_hat) over F_p."""

    A: int
    lam_hat: int
    p: int

    def __post_init__(self):
        if self.A % self.p == 0:
            raise ValueError("leading coefficient must be nonzero")
        if self.lam_hat % self.p in (0, 1):
            raise ValueError("lam_hat in {0, 1} gives a singular cubic")

    def rhs_poly(self) -> Poly:
        return self.A * Poly.from_roots(1, [0, 1, self.lam_hat], self.p)


@dataclass(frozen=True)
class SplitResult:
    """Witness of a successful split: the admissible root ordering, the
    normal-form parameters and the two quotient curves."""

    p: int
    c: int
    ordered_roots: tuple
    lam: int
    mu: int
    theta: int
    sqrt_disc: int
    e_sigma: LegendreCubic
    e_tau: LegendreCubic

    def __post_init__(self):
        validate_split(self)

    @property
    def nu(self):
        p = self.p
        return self.lam * (1 - self.mu) % p * inv_mod(1 - self.lam, p) % p


def is_admissible(roots, p) -> bool:
    """The root-ordering condition that makes the cross ratios close up."""
    a1, a2, a3, a4, a5, a6 = roots
    lhs = (a2 - a4) * (a1 - a6) % p * (a3 - a5) % p
    rhs = (a2 - a6) * (a1 - a5) % p * (a3 - a4) % p
    return (lhs - rhs) % p == 0


def normal_form_parameters(c, roots, p):
    """(lambda, mu, theta) for an ordering of six distinct roots."""
    a1, a2, a3, a4, a5, a6 = roots
    den_l = (a2 - a3) * (a1 - a4) % p
    den_m = (a2 - a3) * (a1 - a5) % p
    if den_l == 0 or den_m == 0:
        raise ZeroDivisionError("coincident roots")
    lam = (a1 - a3) * (a2 - a4) % p * inv_mod(den_l, p) % p
    mu = (a1 - a3) * (a2 - a5) % p * inv_mod(den_m, p) % p
    theta = c * (a2 - a3) % p * (a1 - a4) % p * (a1 - a5) % p * (a1 - a6) % p
    return lam, mu, theta


def quotient_curves_from_parameters(lam, mu, theta, sqrt_disc, p):
    """The +/- pair of Legendre cubics; + goes with e_sigma."""
    A = theta * (1 - mu) % p * inv_mod(1 - lam, p) % p
    scale = (1 - lam) * inv_mod(mu - 1, p) % p
    lh_plus = scale * (mu - 2 * lam + 2 * sqrt_disc) % p
    lh_minus = scale * (mu - 2 * lam - 2 * sqrt_disc) % p
    try:
        return LegendreCubic(A, lh_plus, p), LegendreCubic(A, lh_minus, p)
    except ValueError as exc:  # cannot happen for distinct roots
        raise InternalInvariantError(f"singular quotient curve: {exc}") from exc


def quotient_curves(sr: SplitResult):
    """Recompute (e_sigma, e_tau) from the recorded parameters."""
    return quotient_curves_from_parameters(
        sr.lam, sr.mu, sr.theta, sr.sqrt_disc, sr.p
    )


def validate_split(sr: SplitResult):
    """Check every SplitResult invariant; raises ValueError on tampering."""
    p = sr.p
    roots = tuple(r % p for r in sr.ordered_roots)
    if len(roots) != 6 or len(set(roots)) != 6:
        raise ValueError("roots must be six distinct residues")
    if sr.c % p == 0:
        raise ValueError("leading coefficient must be nonzero")
    if not is_admissible(roots, p):
        raise ValueError("root ordering fails the admissibility condition")
    lam, mu, theta = normal_form_parameters(sr.c, roots, p)
    if (lam, mu, theta) != (sr.lam % p, sr.mu % p, sr.theta % p):
        raise ValueError("lambda/mu/theta do not match the root ordering")
    if lam in (0, 1) or mu in (0, 1) or lam == mu:
        raise ValueError("degenerate normal-form parameters")
    if theta == 0:
        raise ValueError("theta must be nonzero")
    if (sr.sqrt_disc * sr.sqrt_disc - lam * (lam - mu)) % p != 0:
        raise ValueError("sqrt_disc^2 != lambda(lambda - mu)")
    es, et = quotient_curves_from_parameters(lam, mu, theta, sr.sqrt_disc, p)
    if (es, et) != (sr.e_sigma, sr.e_tau):
        raise ValueError("quotient curves do not match the parameters")
    nu = sr.nu
    if len({0, 1, lam, mu, nu}) != 5:
        raise ValueError("0, 1, lambda, mu, nu must be pairwise distinct")


def find_split(f: Poly):
    """Split y^2 = f(x) (deg f = 6) over F_p, or say why not.

    Orderings are scanned in lexicographic order of the index
    permutation applied to the sorted root list, and the first one
    passing both the admissibility condition and the square-root test
    wins.  Different admissible orderings may give different
    (lambda, mu, theta) but always the same pair of point counts.
    """
    if f.degree != 6:
        raise ValueError(f"need a degree-6 polynomial, got degree {f.degree}")
    p = f.p
    roots = roots_fp(f)
    if len(roots) < 6:
        return NotApplicable(REASON_NOT_SPLIT)
    if len(set(roots)) < 6:
        return NotApplicable(REASON_REPEATED_ROOTS)
    c = f.lc
    saw_admissible = False
    for perm in itertools.permutations(roots):
        if not is_admissible(perm, p):
            continue
        saw_admissible = True
        lam, mu, theta = normal_form_parameters(c, perm, p)
        r = sqrt_mod(lam * (lam - mu) % p, p)
        if r is None:
            continue
        e_sigma, e_tau = quotient_curves_from_parameters(lam, mu, theta, r, p)
        return SplitResult(
            p=p,
            c=c,
            ordered_roots=perm,
            lam=lam,
            mu=mu,
            theta=theta,
            sqrt_disc=r,
            e_sigma=e_sigma,
            e_tau=e_tau,
        )
    if saw_admissible:
        return NotApplicable(REASON_NO_SQUARE_ROOT)
    return NotApplicable(REASON_NO_PERMUTATION)
