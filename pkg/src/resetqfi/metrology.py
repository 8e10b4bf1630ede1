"""Quantum Fisher information for collective rotations of few-qubit states.

A rotation exp(i phi J_n) about the unit axis n imprints the phase phi;
the QFI of the state with respect to that generator bounds how well phi
can be estimated.  The 3x3 moment matrix C turns the direction search
into an eigenproblem: F(n) = n . C n, so the best axis is the top
eigenvector of C.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .dynamics import DensityMatrix
from .errors import (
    BadDimensionError,
    DimensionMismatchError,
    NonPositiveFisherError,
    NotNormalizedError,
    NotSymmetricError,
    OutOfRangeError,
    TooManyParticlesError,
)
from .qlinalg import kron, sigma_x, sigma_y, sigma_z

MAX_PARTICLES = 4
# eigenvalue pairs with p_i + p_j at or below this drop out of the spectral sums
EIGENVALUE_CUTOFF = 1e-12
IMAG_RESIDUE_TOL = 1e-10
DIRECTION_TIE_TOL = 1e-10


@dataclass(frozen=True)
class Direction:
    """Unit rotation axis (nx, ny, nz)."""

    nx: float
    ny: float
    nz: float

    def __post_init__(self):
        for name in ("nx", "ny", "nz"):
            object.__setattr__(self, name, float(getattr(self, name)))
        norm = math.sqrt(self.nx**2 + self.ny**2 + self.nz**2)
        if abs(norm - 1.0) > 1e-12:
            raise NotNormalizedError(f"direction norm {norm!r} differs from 1")

    @classmethod
    def from_vector(cls, v) -> "Direction":
        """Normalize an arbitrary nonzero 3-vector into a Direction."""
        v = np.asarray(v, dtype=float).reshape(3)
        norm = float(np.linalg.norm(v))
        if norm == 0.0:
            raise ValueError("the zero vector has no direction")
        return cls(*(v / norm))

    def as_array(self) -> np.ndarray:
        return np.array([self.nx, self.ny, self.nz])


X_AXIS = Direction(1.0, 0.0, 0.0)
Y_AXIS = Direction(0.0, 1.0, 0.0)
Z_AXIS = Direction(0.0, 0.0, 1.0)


@dataclass(frozen=True, eq=False)
class CollectiveSpin:
    """Collective spin components J_a = (1/2) sum_i sigma_a^(i)."""

    jx: np.ndarray
    jy: np.ndarray
    jz: np.ndarray
    n_particles: int

    @property
    def dim(self) -> int:
        return self.jx.shape[0]

    def along(self, direction: Direction) -> np.ndarray:
        """J_n = n . J for a unit axis n."""
        return direction.nx * self.jx + direction.ny * self.jy + direction.nz * self.jz


def collective_spin_ops(n_particles: int) -> CollectiveSpin:
    """Build J_x, J_y, J_z on the full 2^n tensor-product space."""
    if n_particles < 1:
        raise ValueError(f"need at least one particle, got {n_particles}")
    if n_particles > MAX_PARTICLES:
        raise TooManyParticlesError(
            f"dense operators are kept to <= {MAX_PARTICLES} particles, got {n_particles}")
    components = []
    for pauli in (sigma_x, sigma_y, sigma_z):
        total = np.zeros((2**n_particles,) * 2, dtype=complex)
        for site in range(n_particles):
            term = np.eye(1, dtype=complex)
            for k in range(n_particles):
                term = kron(term, pauli if k == site else np.eye(2, dtype=complex))
            total += term
        components.append(0.5 * total)
    return CollectiveSpin(*components, n_particles=n_particles)


@dataclass(frozen=True, eq=False)
class QfiResult:
    """Direction-optimized QFI summary for one state.

    ``c`` is the real symmetric moment matrix, ``lambda_max`` its top
    eigenvalue, ``f_max`` the QFI along the best axis (equal to
    lambda_max), ``mean_f`` the same per particle.
    """

    c: np.ndarray
    lambda_max: float
    f_max: float
    mean_f: float
    opt_dir: Direction


@dataclass(frozen=True)
class PhaseEstimate:
    """Cramer-Rao phase uncertainty after n_measurements repetitions."""

    n_measurements: int
    delta_phi: float


class SensitivityClass(Enum):
    WITHIN_SHOT_NOISE = "within_shot_noise"
    SUB_SHOT_NOISE_USEFUL = "sub_shot_noise_useful"


def _check_dims(rho: DensityMatrix, spin: CollectiveSpin) -> None:
    if rho.dim != spin.dim:
        raise DimensionMismatchError(
            f"state dimension {rho.dim} does not match spin dimension {spin.dim}")


def _spectral_weights(p: np.ndarray) -> np.ndarray:
    """(p_i - p_j)^2 / (p_i + p_j) with vanishing pairs excluded."""
    sums = p[:, None] + p[None, :]
    diffs = p[:, None] - p[None, :]
    keep = sums > EIGENVALUE_CUTOFF
    np.fill_diagonal(keep, False)
    weights = np.zeros_like(sums)
    weights[keep] = diffs[keep] ** 2 / sums[keep]
    return weights


def qfi_direction(rho: DensityMatrix, direction: Direction, spin: CollectiveSpin) -> float:
    """QFI of rho for the generator J_n along one fixed axis."""
    _check_dims(rho, spin)
    eig = rho.eig
    jn = spin.along(direction)
    a = eig.eigenvectors.conj().T @ jn @ eig.eigenvectors
    weights = _spectral_weights(eig.eigenvalues)
    return float(2.0 * (weights * np.abs(a) ** 2).sum())


def qfi_pure(psi, direction: Direction, spin: CollectiveSpin) -> float:
    """Pure-state QFI, four times the variance of J_n."""
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    if psi.shape[0] != spin.dim:
        raise DimensionMismatchError(
            f"state dimension {psi.shape[0]} does not match spin dimension {spin.dim}")
    if abs(np.linalg.norm(psi) - 1.0) > 1e-10:
        raise NotNormalizedError("state vector must be normalized within 1e-10")
    jpsi = spin.along(direction) @ psi
    mean = np.vdot(psi, jpsi).real
    mean_sq = np.vdot(jpsi, jpsi).real
    return float(4.0 * (mean_sq - mean**2))


def c_matrix(rho: DensityMatrix, spin: CollectiveSpin) -> np.ndarray:
    """Real symmetric 3x3 matrix C with n . C n = qfi_direction(rho, n, spin).

    C_kl sums (p_i - p_j)^2 / (p_i + p_j) times the symmetrized product
    of J_k and J_l matrix elements in the eigenbasis of rho.  The
    imaginary residue of that sum must stay below 1e-10; it is asserted
    and discarded.
    """
    _check_dims(rho, spin)
    eig = rho.eig
    basis = eig.eigenvectors
    mats = [basis.conj().T @ j @ basis for j in (spin.jx, spin.jy, spin.jz)]
    weights = _spectral_weights(eig.eigenvalues)
    c = np.zeros((3, 3), dtype=complex)
    for k in range(3):
        for l in range(k, 3):
            value = (weights * (mats[k] * mats[l].T + mats[l] * mats[k].T)).sum()
            c[k, l] = value
            c[l, k] = value
    residue = float(np.abs(c.imag).max())
    if residue > IMAG_RESIDUE_TOL:
        raise OutOfRangeError(f"moment matrix has imaginary residue {residue:.3e}")
    return np.ascontiguousarray(c.real)


def optimal_direction(c) -> Direction:
    """Top eigenvector of the moment matrix as a Direction.

    Ties within a relative 1e-10 are broken toward the axis with the
    largest |nx|, then largest |ny|.  The sign is fixed by making the
    first component of modulus above 1e-12 positive.
    """
    c = np.asarray(c, dtype=float)
    if c.shape != (3, 3):
        raise BadDimensionError(f"moment matrix must be 3x3, got shape {c.shape}")
    defect = float(np.abs(c - c.T).max())
    if defect > 1e-10:
        raise NotSymmetricError(f"moment matrix deviates from symmetric by {defect:.3e}")
    eigenvalues, eigenvectors = np.linalg.eigh(c)
    tie = DIRECTION_TIE_TOL * max(1.0, abs(eigenvalues[-1]))
    candidates = [eigenvectors[:, k] for k in range(3)
                  if eigenvalues[k] >= eigenvalues[-1] - tie]
    best = max(candidates, key=lambda u: (abs(u[0]), abs(u[1])))
    lead = best[np.abs(best) > 1e-12][0]
    if lead < 0.0:
        best = -best
    return Direction(*best)


def mean_qfi_max(rho: DensityMatrix, spin: CollectiveSpin) -> QfiResult:
    """Maximize the QFI over rotation axes and report it per particle."""
    c = c_matrix(rho, spin)
    lam = float(np.linalg.eigvalsh(c)[-1])
    lam = max(0.0, lam)  # C is positive semidefinite up to eigensolver noise
    return QfiResult(
        c=c,
        lambda_max=lam,
        f_max=lam,
        mean_f=lam / spin.n_particles,
        opt_dir=optimal_direction(c),
    )


def classify(mean_f: float, n_particles: int) -> SensitivityClass:
    """Shot-noise comparison of the mean QFI per particle.

    Values above 1 beat any uncorrelated ensemble of the same size;
    values up to n_particles are physical (Heisenberg scaling).
    """
    if mean_f < -1e-9 or mean_f > n_particles + 1e-9:
        raise OutOfRangeError(
            f"mean QFI per particle {mean_f} lies outside [0, {n_particles}]")
    if mean_f > 1.0 + 1e-12:
        return SensitivityClass.SUB_SHOT_NOISE_USEFUL
    return SensitivityClass.WITHIN_SHOT_NOISE


def rotate(rho: DensityMatrix, direction: Direction, phi: float, spin: CollectiveSpin) -> DensityMatrix:
    """Apply exp(i phi J_n) to the state."""
    _check_dims(rho, spin)
    jn = spin.along(direction)
    eigenvalues, eigenvectors = np.linalg.eigh(jn)
    u = (eigenvectors * np.exp(1j * phi * eigenvalues)) @ eigenvectors.conj().T
    return DensityMatrix(u @ rho.mat @ u.conj().T)


def qcrb(fisher: float, n_measurements: int) -> PhaseEstimate:
    """Quantum Cramer-Rao bound on the phase uncertainty."""
    if fisher <= 0.0:
        raise NonPositiveFisherError(f"Fisher information must be positive, got {fisher}")
    if n_measurements < 1:
        raise ValueError(f"need at least one measurement, got {n_measurements}")
    return PhaseEstimate(
        n_measurements=n_measurements,
        delta_phi=1.0 / math.sqrt(n_measurements * fisher),
    )
