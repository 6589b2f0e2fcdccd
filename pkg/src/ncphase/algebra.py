"""Matrix realization of the deformed two-mode boson algebra.

The deformed modes (a, b) with cross commutators [a, b+] = i*theta,
[b, a+] = -i*theta are realized as a rotation of two standard boson modes
(A, B),

    a = cos(phi) A + i sin(phi) B,    b = cos(phi) B - i sin(phi) A,

with phi = arcsin(theta)/2.  The rotation is exact and maps the standard
two-mode vacuum to the deformed vacuum, so on a truncated Fock space the
only algebra violations live in the top occupation shells; projected
residuals quantify this.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import BasisMismatch, CutoffTooSmall, MarginTooLarge
from .params import NCParameters

HERMITICITY_TOL = 1e-12


def sup_norm(entries: np.ndarray) -> float:
    """Entrywise sup norm, the norm used by all residual checks."""
    return float(np.max(np.abs(entries))) if entries.size else 0.0


@dataclass(frozen=True)
class FockBasis:
    """Two-mode Fock basis truncated at `cutoff` quanta per mode.

    Basis ordering is row-major: (n_a, n_b) -> n_a*(cutoff+1) + n_b.
    """

    cutoff: int

    def __post_init__(self):
        if self.cutoff < 2:
            raise CutoffTooSmall(f"cutoff must be >= 2 (got {self.cutoff})")

    @property
    def dim(self) -> int:
        return (self.cutoff + 1) ** 2

    def index(self, n_a: int, n_b: int) -> int:
        return n_a * (self.cutoff + 1) + n_b

    def total_occupation(self) -> np.ndarray:
        """n_a + n_b for every basis index."""
        n = np.arange(self.cutoff + 1)
        return np.add.outer(n, n).reshape(-1)

    def occupation_mask(self, max_total: int) -> np.ndarray:
        return self.total_occupation() <= max_total

    def vacuum(self) -> np.ndarray:
        v = np.zeros(self.dim, dtype=complex)
        v[0] = 1.0
        return v


@dataclass(frozen=True)
class OperatorMatrix:
    """Dense complex operator on a truncated two-mode Fock space."""

    basis: FockBasis
    entries: np.ndarray
    hermitian_hint: bool = False

    def __post_init__(self):
        if self.entries.shape != (self.basis.dim, self.basis.dim):
            raise BasisMismatch(
                f"entries shape {self.entries.shape} does not match basis dim {self.basis.dim}"
            )
        if self.hermitian_hint:
            defect = sup_norm(self.entries - self.entries.conj().T)
            if defect >= HERMITICITY_TOL:
                raise ValueError(f"hermitian_hint set but defect {defect:.3e} >= {HERMITICITY_TOL}")

    def dag(self) -> "OperatorMatrix":
        return OperatorMatrix(self.basis, self.entries.conj().T.copy(), self.hermitian_hint)

    def _check(self, other: "OperatorMatrix"):
        if self.basis != other.basis:
            raise BasisMismatch("operands built on different Fock bases")

    def __add__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        self._check(other)
        return OperatorMatrix(self.basis, self.entries + other.entries)

    def __sub__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        self._check(other)
        return OperatorMatrix(self.basis, self.entries - other.entries)

    def __mul__(self, scalar: complex) -> "OperatorMatrix":
        return OperatorMatrix(self.basis, self.entries * scalar)

    __rmul__ = __mul__

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        self._check(other)
        return OperatorMatrix(self.basis, self.entries @ other.entries)

    def apply(self, amplitudes: np.ndarray) -> np.ndarray:
        return self.entries @ amplitudes


def identity(basis: FockBasis) -> OperatorMatrix:
    return OperatorMatrix(basis, np.eye(basis.dim, dtype=complex), hermitian_hint=True)


def standard_lowering(basis: FockBasis) -> tuple[np.ndarray, np.ndarray]:
    """Dense lowering matrices (A, B) of the two standard modes."""
    d = basis.cutoff + 1
    single = np.diag(np.sqrt(np.arange(1.0, d)), 1).astype(complex)
    eye = np.eye(d, dtype=complex)
    return np.kron(single, eye), np.kron(eye, single)


@dataclass(frozen=True)
class ModeOperators:
    """Deformed modes (a, b) plus the underlying standard modes (A, B)."""

    basis: FockBasis
    a: OperatorMatrix
    b: OperatorMatrix
    a_dag: OperatorMatrix
    b_dag: OperatorMatrix
    A: OperatorMatrix
    B: OperatorMatrix
    phi: float

    @property
    def theta(self) -> float:
        return math.sin(2.0 * self.phi)


@dataclass(frozen=True)
class PhaseOperators:
    """Phase-space operators and the commuting quadrature pairs (R,P), (Q,K)."""

    basis: FockBasis
    x: OperatorMatrix
    y: OperatorMatrix
    px: OperatorMatrix
    py: OperatorMatrix
    R: OperatorMatrix
    P: OperatorMatrix
    Q: OperatorMatrix
    K: OperatorMatrix


def build_mode_operators(params: NCParameters, basis: FockBasis) -> ModeOperators:
    """Construct the deformed modes by rotating the standard ladder matrices.

    On the subspace with total occupation <= cutoff - 1 the matrices satisfy
    the deformed algebra exactly: [a,a+] = [b,b+] = 1, [a,b] = 0,
    [a,b+] = i*theta, [b,a+] = -i*theta.
    """
    phi = 0.5 * math.asin(params.theta)
    A_m, B_m = standard_lowering(basis)
    a_m = math.cos(phi) * A_m + 1j * math.sin(phi) * B_m
    b_m = math.cos(phi) * B_m - 1j * math.sin(phi) * A_m
    wrap = lambda m: OperatorMatrix(basis, m)
    return ModeOperators(
        basis=basis,
        a=wrap(a_m),
        b=wrap(b_m),
        a_dag=wrap(a_m.conj().T),
        b_dag=wrap(b_m.conj().T),
        A=wrap(A_m),
        B=wrap(B_m),
        phi=phi,
    )


def build_phase_operators(params: NCParameters, modes: ModeOperators) -> PhaseOperators:
    """Quadrature decomposition of (x, y, px, py) and the pairs (R,P,Q,K).

    x = sqrt(hbar/2) (mu/nu)^(1/4) (a + a+) and
    px = -i sqrt(hbar/2) (nu/mu)^(1/4) (a - a+); same for (y, py) with b.
    R = (x-y)/sqrt2, P = (px+py)/sqrt2, Q = (x+y)/sqrt2, K = (px-py)/sqrt2.
    """
    s = math.sqrt(params.hbar / 2.0) * params.length_scale
    r = math.sqrt(params.hbar / 2.0) * params.momentum_scale
    basis = modes.basis
    a, ad = modes.a.entries, modes.a_dag.entries
    b, bd = modes.b.entries, modes.b_dag.entries
    herm = lambda m: OperatorMatrix(basis, m, hermitian_hint=True)
    x = herm(s * (a + ad))
    y = herm(s * (b + bd))
    px = herm(-1j * r * (a - ad))
    py = herm(-1j * r * (b - bd))
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    return PhaseOperators(
        basis=basis,
        x=x,
        y=y,
        px=px,
        py=py,
        R=herm((x.entries - y.entries) * inv_sqrt2),
        P=herm((px.entries + py.entries) * inv_sqrt2),
        Q=herm((x.entries + y.entries) * inv_sqrt2),
        K=herm((px.entries - py.entries) * inv_sqrt2),
    )


def commutator(u: OperatorMatrix, v: OperatorMatrix) -> OperatorMatrix:
    if u.basis != v.basis:
        raise BasisMismatch("commutator operands built on different Fock bases")
    return OperatorMatrix(u.basis, u.entries @ v.entries - v.entries @ u.entries)


def projected_residual(u: OperatorMatrix, target: OperatorMatrix, margin: int) -> float:
    """Relative defect of u against target away from the truncation boundary.

    Returns ||P (u - target) P|| / max(1, ||P target P||) in the entrywise
    sup norm, where P projects onto total occupation <= cutoff - margin.
    Ladder-algebra violations are confined to the top shells, so a margin
    of 1-2 isolates the exact content of an operator identity.
    """
    if margin < 1:
        raise ValueError(f"margin must be >= 1 (got {margin})")
    if u.basis != target.basis:
        raise BasisMismatch("residual operands built on different Fock bases")
    keep = u.basis.cutoff - margin
    if keep < 0:
        raise MarginTooLarge(f"margin {margin} exceeds cutoff {u.basis.cutoff}")
    mask = u.basis.occupation_mask(keep)
    idx = np.ix_(mask, mask)
    defect = sup_norm(u.entries[idx] - target.entries[idx])
    scale = max(1.0, sup_norm(target.entries[idx]))
    return defect / scale
