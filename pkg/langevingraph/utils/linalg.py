"""
linalg module

Small dense real linear-algebra kernel used by every other module: spectra,
matrix functions and Lyapunov solves. The heavy lifting is LAPACK through
``scipy.linalg``; the functions here validate their inputs, translate LAPACK
failures into the library's exceptions and check the residual of every solve.
"""

from typing import Optional

import numpy as np
from scipy import linalg as sla

from .errors import (
    ConvergenceError,
    DefinitenessError,
    DimensionError,
    DomainError,
    NumericalError,
    StabilityError,
)

SYMMETRY_TOL = 1e-12
SPD_RELATIVE_TOL = 1e-12
LYAPUNOV_RESIDUAL_TOL = 1e-10


def as_matrix(a, name: str = "a", square: bool = True) -> np.ndarray:
    """
    Convert ``a`` to a finite 2-D float array.

    Args:
        a: Anything ``numpy.asarray`` accepts. Scalars become 1x1 matrices.
        name (str): Name used in error messages.
        square (bool): Whether the matrix must be square.

    Raises:
        DimensionError: If the array is not 2-D (or not square when required).
        DomainError: If an entry is not finite or complex.
    """
    arr = np.asarray(a)
    if np.iscomplexobj(arr):
        raise DomainError(f"{name} must be real, got a complex array")
    arr = np.atleast_2d(arr.astype(float, copy=False))
    if arr.ndim != 2:
        raise DimensionError(f"{name} must be a matrix, got shape {arr.shape}")
    if square and arr.shape[0] != arr.shape[1]:
        raise DimensionError(f"{name} must be square, got shape {arr.shape}")
    if arr.size == 0:
        raise DimensionError(f"{name} must have dimension >= 1")
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} has non-finite entries")
    return arr


def as_vector(v, name: str = "v", size: Optional[int] = None) -> np.ndarray:
    """
    Convert ``v`` to a finite 1-D float array, optionally of a given length.
    """
    arr = np.atleast_1d(np.asarray(v, dtype=float))
    if arr.ndim != 1:
        raise DimensionError(f"{name} must be a vector, got shape {arr.shape}")
    if size is not None and arr.shape[0] != size:
        raise DimensionError(f"{name} must have length {size}, got {arr.shape[0]}")
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} has non-finite entries")
    return arr


def symmetric_part(a: np.ndarray) -> np.ndarray:
    return 0.5 * (a + a.T)


def is_symmetric(a, tol: float = SYMMETRY_TOL) -> bool:
    """
    True when ``a`` is square and ``|a - a^T|`` is below ``tol`` relative to
    ``max(1, |a|)`` in the Frobenius norm.
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    scale = max(1.0, float(np.linalg.norm(a)))
    return float(np.linalg.norm(a - a.T)) <= tol * scale


def is_skew_symmetric(a, tol: float = SYMMETRY_TOL) -> bool:
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    scale = max(1.0, float(np.linalg.norm(a)))
    return float(np.linalg.norm(a + a.T)) <= tol * scale


def check_spd(a, name: str = "matrix", tol: float = SYMMETRY_TOL) -> np.ndarray:
    """
    Validate that ``a`` is symmetric positive definite.

    Returns:
        np.ndarray: The symmetrised matrix.

    Raises:
        DefinitenessError: If ``a`` is not symmetric or its smallest eigenvalue
            is not above ``1e-12`` times the largest.
    """
    a = as_matrix(a, name)
    if not is_symmetric(a, tol):
        raise DefinitenessError(f"{name} is not symmetric")
    a = symmetric_part(a)
    w = sla.eigvalsh(a)
    if w[-1] <= 0.0 or w[0] <= SPD_RELATIVE_TOL * w[-1]:
        raise DefinitenessError(
            f"{name} is not positive definite (eigenvalues in [{w[0]:.3e}, {w[-1]:.3e}])"
        )
    return a


def eigenvalues(a) -> np.ndarray:
    """
    All eigenvalues of a real square matrix, with multiplicity.

    LAPACK reduces to Hessenberg form and runs the shifted QR iteration; the
    complex eigenvalues of a real input come in conjugate pairs.

    Returns:
        np.ndarray: Complex array of length ``a.shape[0]`` sorted by real part
        (descending), then imaginary part.

    Raises:
        DimensionError: If ``a`` is not square.
        ConvergenceError: If the QR iteration fails.
    """
    a = as_matrix(a)
    try:
        w = sla.eigvals(a, check_finite=False)
    except sla.LinAlgError as e:
        raise ConvergenceError(f"eigenvalue iteration failed: {e}") from e
    order = np.lexsort((w.imag, -w.real))
    return w[order]


def spectral_abscissa(a) -> float:
    """
    Largest real part over the spectrum of ``a``.
    """
    return float(np.max(eigenvalues(a).real))


def spectral_radius(a) -> float:
    return float(np.max(np.abs(eigenvalues(a))))


def expm(a) -> np.ndarray:
    """
    Matrix exponential (Padé scaling and squaring).

    Raises:
        NumericalError: If the result overflows.
    """
    a = as_matrix(a)
    with np.errstate(over="ignore", invalid="ignore"):
        e = sla.expm(a)
    if not np.all(np.isfinite(e)):
        raise NumericalError(
            f"matrix exponential overflowed (norm of input {np.linalg.norm(a):.3e})"
        )
    return e


def _check_residual(residual: float, scale: float, what: str) -> None:
    if not np.isfinite(residual) or residual > LYAPUNOV_RESIDUAL_TOL * (scale + 1.0):
        raise NumericalError(
            f"{what} solve is inaccurate (residual {residual:.3e}, scale {scale:.3e})"
        )


def solve_lyapunov(a, q) -> np.ndarray:
    """
    Solve ``a X + X a^T + q = 0`` for a Hurwitz ``a``.

    With ``a`` the drift and ``q = C C^T`` the diffusion of an
    Ornstein-Uhlenbeck process, ``X`` is its stationary covariance.

    Args:
        a: Square matrix with spectral abscissa < 0.
        q: Symmetric matrix of the same size.

    Returns:
        np.ndarray: The symmetric solution.

    Raises:
        StabilityError: If ``a`` is not Hurwitz.
        DimensionError: On shape mismatch.
        NumericalError: If the Bartels-Stewart solve fails or its residual
            exceeds ``1e-10 * (|q|_F + 1)``.
    """
    a = as_matrix(a, "a")
    q = as_matrix(q, "q")
    if q.shape != a.shape:
        raise DimensionError(f"q has shape {q.shape}, expected {a.shape}")
    if not is_symmetric(q, 1e-10):
        raise DefinitenessError("q must be symmetric")
    abscissa = spectral_abscissa(a)
    if abscissa >= 0.0:
        raise StabilityError(f"a is not Hurwitz (spectral abscissa {abscissa:.6g})")

    try:
        x = sla.solve_continuous_lyapunov(a, -q)
    except (sla.LinAlgError, ValueError) as e:
        raise NumericalError(f"Lyapunov solve failed: {e}") from e
    x = symmetric_part(x)

    residual = float(np.linalg.norm(a @ x + x @ a.T + q))
    _check_residual(residual, float(np.linalg.norm(q)), "Lyapunov")
    return x


def solve_discrete_lyapunov(a, q) -> np.ndarray:
    """
    Solve the Stein equation ``X = a X a^T + q`` for ``a`` with spectral
    radius below one.

    Raises:
        StabilityError: If the spectral radius of ``a`` is >= 1.
        NumericalError: If the residual check fails.
    """
    a = as_matrix(a, "a")
    q = as_matrix(q, "q")
    if q.shape != a.shape:
        raise DimensionError(f"q has shape {q.shape}, expected {a.shape}")
    radius = spectral_radius(a)
    if radius >= 1.0:
        raise StabilityError(f"spectral radius of a is {radius:.6g} >= 1")

    try:
        x = sla.solve_discrete_lyapunov(a, q)
    except (sla.LinAlgError, ValueError) as e:
        raise NumericalError(f"discrete Lyapunov solve failed: {e}") from e
    x = symmetric_part(x)

    residual = float(np.linalg.norm(a @ x @ a.T - x + q))
    _check_residual(residual, float(np.linalg.norm(q)), "discrete Lyapunov")
    return x


def sqrtm_spd(s) -> np.ndarray:
    """
    Symmetric square root of a symmetric positive-definite matrix.

    Computed from the eigendecomposition ``s = V diag(w) V^T`` as
    ``V diag(sqrt(w)) V^T``.

    Raises:
        DefinitenessError: If ``s`` is not SPD (smallest eigenvalue at most
            ``1e-12`` times the largest).
    """
    s = as_matrix(s, "s")
    if not is_symmetric(s):
        raise DefinitenessError("s is not symmetric")
    s = symmetric_part(s)
    w, v = sla.eigh(s)
    if w[-1] <= 0.0 or w[0] <= SPD_RELATIVE_TOL * w[-1]:
        raise DefinitenessError(
            f"s is not positive definite (eigenvalues in [{w[0]:.3e}, {w[-1]:.3e}])"
        )
    r = (v * np.sqrt(w)) @ v.T
    return symmetric_part(r)
