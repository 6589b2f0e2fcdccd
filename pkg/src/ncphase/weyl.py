"""Normal-ordering engine for polynomial differential operators.

Operators are polynomials in two multiplication variables (l1, l2) and the
matching derivatives (d1, d2), kept in the canonical order "multiplications
left of derivatives" and composed with the exact rewrite [d_i, l_j] = delta_ij.
This realizes the phase-space operators as first-order differential operators
in the entangled eigenvalue coordinates and lets the coupled-oscillator
Hamiltonian be expanded symbolically.
"""

import math
from dataclasses import dataclass, field
from typing import NamedTuple

from .params import NCParameters

COEFF_PURGE = 1e-15


class WeylMonomial(NamedTuple):
    """Powers (j1, j2, k1, k2) of l1^j1 l2^j2 d1^k1 d2^k2 in normal order."""

    j1: int
    j2: int
    k1: int
    k2: int


def _falling(n: int, k: int) -> int:
    """n (n-1) ... (n-k+1)."""
    out = 1
    for i in range(k):
        out *= n - i
    return out


@dataclass(frozen=True)
class WeylPolynomial:
    """Normal-ordered polynomial with complex coefficients.

    Zero coefficients (|c| <= 1e-15) are purged on construction, so equality
    of canonical forms is equality of the term dictionaries.
    """

    terms: dict[WeylMonomial, complex] = field(default_factory=dict)

    def __post_init__(self):
        purged = {m: complex(c) for m, c in self.terms.items() if abs(c) > COEFF_PURGE}
        object.__setattr__(self, "terms", purged)

    def coefficient(self, mono: WeylMonomial | tuple[int, int, int, int]) -> complex:
        return self.terms.get(WeylMonomial(*mono), 0.0 + 0.0j)

    def __add__(self, other: "WeylPolynomial") -> "WeylPolynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0.0) + c
        return WeylPolynomial(out)

    def __sub__(self, other: "WeylPolynomial") -> "WeylPolynomial":
        return self + (-1.0) * other

    def __mul__(self, other):
        if isinstance(other, WeylPolynomial):
            return weyl_multiply(self, other)
        return WeylPolynomial({m: c * other for m, c in self.terms.items()})

    def __rmul__(self, scalar: complex) -> "WeylPolynomial":
        return self * scalar

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeylPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def max_abs_coefficient(self) -> float:
        return max((abs(c) for c in self.terms.values()), default=0.0)

    def __repr__(self) -> str:
        if not self.terms:
            return "WeylPolynomial(0)"
        bits = []
        for m in sorted(self.terms):
            c = self.terms[m]
            sym = "".join(
                f"{name}^{p}" if p > 1 else name
                for name, p in zip(("l1", "l2", "d1", "d2"), m)
                if p
            )
            bits.append(f"({c:.6g}){sym or '1'}")
        return "WeylPolynomial(" + " + ".join(bits) + ")"


def poly(terms: dict[tuple[int, int, int, int], complex]) -> WeylPolynomial:
    return WeylPolynomial({WeylMonomial(*m): c for m, c in terms.items()})


ONE = poly({(0, 0, 0, 0): 1.0})
L1 = poly({(1, 0, 0, 0): 1.0})
L2 = poly({(0, 1, 0, 0): 1.0})
D1 = poly({(0, 0, 1, 0): 1.0})
D2 = poly({(0, 0, 0, 1): 1.0})


def weyl_multiply(p: WeylPolynomial, q: WeylPolynomial) -> WeylPolynomial:
    """Normal-ordered product of two polynomials.

    Each derivative block is commuted past the multiplication block of the
    right factor with d^k l^m = sum_s C(k,s) m!/(m-s)! l^(m-s) d^(k-s); the
    two variable pairs commute with each other.
    """
    out: dict[WeylMonomial, complex] = {}
    for m1, c1 in p.terms.items():
        for m2, c2 in q.terms.items():
            base = c1 * c2
            for s in range(min(m1.k1, m2.j1) + 1):
                cs = base * math.comb(m1.k1, s) * _falling(m2.j1, s)
                for t in range(min(m1.k2, m2.j2) + 1):
                    c = cs * math.comb(m1.k2, t) * _falling(m2.j2, t)
                    mono = WeylMonomial(
                        m1.j1 + m2.j1 - s,
                        m1.j2 + m2.j2 - t,
                        m1.k1 + m2.k1 - s,
                        m1.k2 + m2.k2 - t,
                    )
                    out[mono] = out.get(mono, 0.0) + c
    return WeylPolynomial(out)


def weyl_commutator(p: WeylPolynomial, q: WeylPolynomial) -> WeylPolynomial:
    return weyl_multiply(p, q) - weyl_multiply(q, p)


def lambda_rep_operator(which: str, params: NCParameters) -> WeylPolynomial:
    """Phase-space operator acting on wavefunctions of the (R,P)-eigenvalue labels.

    x  -> sqrt(hbar/2)(mu/nu)^(1/4) ( l1 - theta l2 + i d2)
    y  -> sqrt(hbar/2)(mu/nu)^(1/4) (-l1 + theta l2 + i d2)
    px -> sqrt(hbar/2)(nu/mu)^(1/4) ( l2 - theta l1 - i d1)
    py -> sqrt(hbar/2)(nu/mu)^(1/4) ( l2 - theta l1 + i d1)
    """
    th = params.theta
    s = math.sqrt(params.hbar / 2.0) * params.length_scale
    r = math.sqrt(params.hbar / 2.0) * params.momentum_scale
    forms = {
        "x": poly({(1, 0, 0, 0): s, (0, 1, 0, 0): -s * th, (0, 0, 0, 1): 1j * s}),
        "y": poly({(1, 0, 0, 0): -s, (0, 1, 0, 0): s * th, (0, 0, 0, 1): 1j * s}),
        "px": poly({(0, 1, 0, 0): r, (1, 0, 0, 0): -r * th, (0, 0, 1, 0): -1j * r}),
        "py": poly({(0, 1, 0, 0): r, (1, 0, 0, 0): -r * th, (0, 0, 1, 0): 1j * r}),
    }
    if which not in forms:
        raise ValueError(f"which must be one of x, y, px, py (got {which!r})")
    return forms[which]


def xi_rep_operator(which: str, params: NCParameters) -> WeylPolynomial:
    """Phase-space operator acting on wavefunctions of the (Q,K)-eigenvalue labels.

    x  -> sqrt(hbar/2)(mu/nu)^(1/4) ( x1 + theta x2 + i d2)
    y  -> sqrt(hbar/2)(mu/nu)^(1/4) ( x1 + theta x2 - i d2)
    px -> sqrt(hbar/2)(nu/mu)^(1/4) ( x2 + theta x1 - i d1)
    py -> sqrt(hbar/2)(nu/mu)^(1/4) (-x2 - theta x1 - i d1)

    The py prefactor carries (nu/mu)^(1/4) like every momentum; this is the
    only choice that closes the phase-space commutation relations.
    """
    th = params.theta
    s = math.sqrt(params.hbar / 2.0) * params.length_scale
    r = math.sqrt(params.hbar / 2.0) * params.momentum_scale
    forms = {
        "x": poly({(1, 0, 0, 0): s, (0, 1, 0, 0): s * th, (0, 0, 0, 1): 1j * s}),
        "y": poly({(1, 0, 0, 0): s, (0, 1, 0, 0): s * th, (0, 0, 0, 1): -1j * s}),
        "px": poly({(0, 1, 0, 0): r, (1, 0, 0, 0): r * th, (0, 0, 1, 0): -1j * r}),
        "py": poly({(0, 1, 0, 0): -r, (1, 0, 0, 0): -r * th, (0, 0, 1, 0): -1j * r}),
    }
    if which not in forms:
        raise ValueError(f"which must be one of x, y, px, py (got {which!r})")
    return forms[which]


def hamiltonian_lambda_form(op) -> WeylPolynomial:
    """Expand the coupled-oscillator Hamiltonian in the (R,P)-label representation.

    Substitutes the differential-operator forms into
    H = (px^2 + py^2)/2m + m w^2 (x^2 + y^2)/2 + k(xy + yx)/2 + l(px py + py px)/2
    and normal-orders.  The result is supported on exactly
    {d1^2, d2^2, l1^2, l2^2, l1 l2}: first-order, mixed and constant terms
    cancel identically.
    """
    p = op.nc
    x = lambda_rep_operator("x", p)
    y = lambda_rep_operator("y", p)
    px = lambda_rep_operator("px", p)
    py = lambda_rep_operator("py", p)
    m, w, k, l = op.m, op.omega, op.k, op.l
    h = (1.0 / (2.0 * m)) * (px * px + py * py)
    h = h + (m * w * w / 2.0) * (x * x + y * y)
    h = h + (k / 2.0) * (x * y + y * x)
    h = h + (l / 2.0) * (px * py + py * px)
    return h


@dataclass(frozen=True)
class PolynomialFunction:
    """Bivariate polynomial in the two label coordinates; exponent -> coefficient."""

    terms: dict[tuple[int, int], complex] = field(default_factory=dict)

    def __post_init__(self):
        purged = {e: complex(c) for e, c in self.terms.items() if abs(c) > COEFF_PURGE}
        object.__setattr__(self, "terms", purged)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolynomialFunction):
            return NotImplemented
        return self.terms == other.terms

    def evaluate(self, l1: complex, l2: complex) -> complex:
        return sum(c * l1**i * l2**j for (i, j), c in self.terms.items())


def apply_weyl(p: WeylPolynomial, f: PolynomialFunction) -> PolynomialFunction:
    """Exact action of a normal-ordered operator on a polynomial function."""
    out: dict[tuple[int, int], complex] = {}
    for mono, c in p.terms.items():
        for (e1, e2), fc in f.terms.items():
            if mono.k1 > e1 or mono.k2 > e2:
                continue
            coeff = c * fc * _falling(e1, mono.k1) * _falling(e2, mono.k2)
            expo = (e1 - mono.k1 + mono.j1, e2 - mono.k2 + mono.j2)
            out[expo] = out.get(expo, 0.0) + coeff
    return PolynomialFunction(out)
