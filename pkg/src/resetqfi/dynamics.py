"""Two-qubit master equation with dephasing and a particle-reset mechanism.

The generator combines a sigma_z sigma_z coupling Hamiltonian, local
dephasing at rate gamma, and replacement of either particle by a fresh
one in the reset state at rate r.  The steady state is produced by three
independent routes (closed-form matrix, superoperator kernel, RK4
integration) so they can cross-check each other.
"""

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import (
    BadDimensionError,
    DegenerateLimitError,
    DegenerateSteadyStateError,
    NoConvergenceError,
    NotHermitianError,
    NotNormalizedError,
    UnsupportedResetStateError,
)
from .qlinalg import (
    HermitianEig,
    hermitian_eig,
    hermiticity_defect,
    kron,
    partial_trace,
    sigma_z,
)

PLUS = np.array([1.0, 1.0], dtype=complex) / np.sqrt(2.0)
PLUS.flags.writeable = False

_I2 = np.eye(2, dtype=complex)
_Z1 = kron(sigma_z, _I2)
_Z2 = kron(_I2, sigma_z)

STEADY_STATE_METHODS = ("closed_form", "nullspace", "integrate")

# kernel-uniqueness threshold on the second-smallest eigenvalue of L^dag L
KERNEL_GAP_TOL = 1e-10
RK4_STEP_CAP = 10_000_000
RK4_BLOCK = 1_000  # re-hermitization and convergence-check cadence, in steps
RK4_RESIDUAL_TOL = 1e-12


def _default_reset_state() -> np.ndarray:
    return PLUS.copy()


@dataclass(frozen=True, eq=False)
class ModelParams:
    """Reset rate r, dephasing rate gamma, coupling g (all non-negative,
    hbar = 1) and the single-qubit state fresh particles arrive in."""

    r: float
    gamma: float
    g: float
    reset_state: np.ndarray = field(default_factory=_default_reset_state)

    def __post_init__(self):
        for name in ("r", "gamma", "g"):
            value = float(getattr(self, name))
            if not np.isfinite(value) or value < 0.0:
                raise ValueError(f"{name} must be finite and non-negative, got {value}")
            object.__setattr__(self, name, value)
        chi = np.asarray(self.reset_state, dtype=complex).reshape(-1)
        if chi.shape != (2,):
            raise BadDimensionError("reset_state must be a single-qubit state vector")
        if abs(np.linalg.norm(chi) - 1.0) > 1e-12:
            raise NotNormalizedError("reset_state must be normalized within 1e-12")
        chi = chi.copy()
        chi.flags.writeable = False
        object.__setattr__(self, "reset_state", chi)

    @property
    def reset_projector(self) -> np.ndarray:
        return np.outer(self.reset_state, self.reset_state.conj())

    def resets_to_plus(self) -> bool:
        # overlap modulus, so a global phase on the reset state is fine
        return abs(np.vdot(PLUS, self.reset_state)) >= 1.0 - 1e-12


class DensityMatrix:
    """Validated quantum state with a cached eigendecomposition.

    Hermitian within 1e-10, unit trace within 1e-10, smallest eigenvalue
    above -1e-10.  The stored matrix is read-only.
    """

    TRACE_TOL = 1e-10
    PSD_TOL = -1e-10

    def __init__(self, mat):
        mat = np.asarray(mat, dtype=complex)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise BadDimensionError(f"density matrix must be square, got shape {mat.shape}")
        defect = hermiticity_defect(mat)
        if defect > 1e-10:
            raise NotHermitianError(f"density matrix deviates from Hermitian by {defect:.3e}")
        trace = mat.trace()
        if abs(trace - 1.0) > self.TRACE_TOL:
            raise ValueError(f"density matrix trace {trace:.12g} differs from 1")
        smallest = float(np.linalg.eigvalsh(mat).min())
        if smallest < self.PSD_TOL:
            raise ValueError(f"density matrix has negative eigenvalue {smallest:.3e}")
        mat = mat.copy()
        mat.flags.writeable = False
        self._mat = mat

    @property
    def mat(self) -> np.ndarray:
        return self._mat

    @property
    def dim(self) -> int:
        return self._mat.shape[0]

    @cached_property
    def eig(self) -> HermitianEig:
        return hermitian_eig(self._mat)


def hamiltonian(p: ModelParams) -> np.ndarray:
    """H = g sigma_z x sigma_z = g diag(1, -1, -1, 1)."""
    return p.g * kron(sigma_z, sigma_z)


def liouvillian_apply(p: ModelParams, rho) -> np.ndarray:
    """Right-hand side of the master equation, drho/dt.

    Unitary part -i[H, rho], dephasing (gamma/2) sum_i (Z_i rho Z_i - rho)
    and reset r sum_i (|chi><chi|_i kron tr_i rho - rho).  Linear in rho;
    the result is traceless and Hermitian for Hermitian input.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise BadDimensionError(f"expected a 4x4 operator, got shape {rho.shape}")
    h = hamiltonian(p)
    out = -1j * (h @ rho - rho @ h)
    for z in (_Z1, _Z2):
        out = out + 0.5 * p.gamma * (z @ rho @ z - rho)
    proj = p.reset_projector
    out = out + p.r * (kron(proj, partial_trace(rho, 1)) - rho)
    out = out + p.r * (kron(partial_trace(rho, 2), proj) - rho)
    return out


def vectorize(mat) -> np.ndarray:
    """Column-stacking vectorization."""
    return np.asarray(mat, dtype=complex).reshape(-1, order="F")


def unvectorize(v) -> np.ndarray:
    """Inverse of ``vectorize``."""
    v = np.asarray(v, dtype=complex).reshape(-1)
    dim = math.isqrt(v.size)
    if dim * dim != v.size:
        raise BadDimensionError(f"cannot reshape a length-{v.size} vector into a square matrix")
    return v.reshape((dim, dim), order="F")


def liouvillian_superoperator(p: ModelParams) -> np.ndarray:
    """16x16 matrix L with L @ vectorize(rho) = vectorize(liouvillian_apply(p, rho)).

    Column stacking maps rho -> X rho Y to kron(Y.T, X).  The reset
    channel enters through its Kraus operators |chi><b| acting on the
    reset qubit, which keeps this construction independent of the
    partial-trace route used by ``liouvillian_apply``.
    """
    h = hamiltonian(p)
    eye4 = np.eye(4, dtype=complex)
    eye16 = np.eye(16, dtype=complex)
    sup = -1j * (np.kron(eye4, h) - np.kron(h.T, eye4))
    for z in (_Z1, _Z2):
        sup = sup + 0.5 * p.gamma * (np.kron(z.T, z) - eye16)
    chi = p.reset_state
    for qubit in (1, 2):
        gain = np.zeros((16, 16), dtype=complex)
        for b in range(2):
            bra = np.zeros(2, dtype=complex)
            bra[b] = 1.0
            k_small = np.outer(chi, bra)  # |chi><b|
            k_full = kron(k_small, _I2) if qubit == 1 else kron(_I2, k_small)
            gain = gain + np.kron(k_full.conj(), k_full)
        sup = sup + p.r * (gain - eye16)
    return sup


def closed_form_steady_state(p: ModelParams) -> DensityMatrix:
    """Steady state from the closed-form matrix elements.

    Valid for the |+> reset state.  All diagonal entries are 1/4; with
    s = r + gamma/2 and D = 2 g^2 + s (r + gamma), the anti-diagonal
    entries are r^2 s / (4 (r + gamma) D) and the remaining off-diagonal
    entries are r (s - i g) / (4 D) or the conjugate.  At r = 0 the
    continuity limit I/4 is returned; the kernel is degenerate there, see
    ``steady_state``.
    """
    if not p.resets_to_plus():
        raise UnsupportedResetStateError("closed form is derived for the |+> reset state only")
    if p.r == 0.0 and p.gamma == 0.0 and p.g == 0.0:
        raise DegenerateLimitError("r = gamma = g = 0 singles out no steady state")
    rho = np.zeros((4, 4), dtype=complex)
    np.fill_diagonal(rho, 0.25)
    if p.r > 0.0:
        shifted = p.r + 0.5 * p.gamma
        denom = 2.0 * p.g**2 + shifted * (p.r + p.gamma)
        anti = p.r**2 * shifted / (4.0 * (p.r + p.gamma) * denom)
        edge = p.r * (shifted - 1j * p.g) / (4.0 * denom)
        rho[0, 3] = rho[1, 2] = rho[2, 1] = rho[3, 0] = anti
        rho[0, 1] = rho[0, 2] = rho[3, 1] = rho[3, 2] = edge
        rho[1, 0] = rho[1, 3] = rho[2, 0] = rho[2, 3] = edge.conjugate()
    return DensityMatrix(rho)


def _nullspace_steady_state(p: ModelParams) -> DensityMatrix:
    sup = liouvillian_superoperator(p)
    gram = sup.conj().T @ sup
    gram = 0.5 * (gram + gram.conj().T)
    eig = hermitian_eig(gram)
    if eig.eigenvalues[1] < KERNEL_GAP_TOL:
        raise DegenerateSteadyStateError(
            "Liouvillian kernel is not one-dimensional (second eigenvalue of "
            f"L^dag L is {eig.eigenvalues[1]:.3e}); the steady state is not unique")
    rho = unvectorize(eig.eigenvectors[:, 0])
    rho = rho / np.trace(rho)  # |trace| >= Frobenius norm for a state, so >= 1 here
    rho = 0.5 * (rho + rho.conj().T)
    return DensityMatrix(rho)


def _integrate_steady_state(p: ModelParams) -> DensityMatrix:
    if p.r == 0.0:
        raise DegenerateSteadyStateError(
            "integration needs r > 0; at r = 0 the steady state is not unique")
    sup = liouvillian_superoperator(p)
    h = 0.01 / max(p.r, p.gamma, 4.0 * p.g, 1.0)  # step shrinks with the fastest rate
    a = h * sup
    a2 = a @ a
    one_step = np.eye(16, dtype=complex) + a + a2 / 2.0 + (a @ a2) / 6.0 + (a2 @ a2) / 24.0
    # RK4 on a linear equation is exactly this degree-4 polynomial, so a
    # block of RK4_BLOCK steps collapses into one matrix power; drift
    # control and the convergence check run at the block boundaries.
    block = np.linalg.matrix_power(one_step, RK4_BLOCK)
    state = vectorize(np.eye(4, dtype=complex) / 4.0)
    for _ in range(RK4_STEP_CAP // RK4_BLOCK):
        state = block @ state
        rho = unvectorize(state)
        rho = 0.5 * (rho + rho.conj().T)
        state = vectorize(rho)
        if np.abs(sup @ state).max() < RK4_RESIDUAL_TOL:
            return DensityMatrix(rho / np.trace(rho).real)
    raise NoConvergenceError(
        f"residual still above {RK4_RESIDUAL_TOL:.0e} after {RK4_STEP_CAP} RK4 steps")


def steady_state(p: ModelParams, method: str = "closed_form") -> DensityMatrix:
    """Steady state of the master equation by the requested route.

    closed_form
        Closed-form matrix elements (|+> reset state only).
    nullspace
        Kernel of the superoperator via the smallest eigenpair of
        L^dag L; raises DegenerateSteadyStateError when the kernel is
        not one-dimensional (e.g. r = 0).
    integrate
        Fixed-step RK4 from I/4 until ||drho/dt||_max < 1e-12.
    """
    if method == "closed_form":
        return closed_form_steady_state(p)
    if method == "nullspace":
        return _nullspace_steady_state(p)
    if method == "integrate":
        return _integrate_steady_state(p)
    raise ValueError(f"unknown method {method!r}; choose from {STEADY_STATE_METHODS}")
