"""
Optimal temperature ratio ``alpha = beta / beta_bar`` for linear systems.

The closed forms cover the scalar case and commuting ``(K, gamma)``; the
numeric search covers everything else by scanning the spectral abscissa of
``A(alpha)`` on a grid and refining the best grid point by golden-section
search.
"""

from typing import Dict, Tuple

import numpy as np
from scipy import linalg as sla
from scipy.optimize import minimize_scalar

from ..utils.errors import CommutationError, DomainError
from ..utils.linalg import check_spd, eigenvalues, spectral_abscissa
from ..utils.logging import get_logger
from .linear_model import LinearTemplate

logger = get_logger(__name__)

MIN_GRID_POINTS = 400
COMMUTATION_TOL = 1e-10
CLUSTER_TOL = 1e-8


def optimal_ratio_1d(k: float, g: float) -> float:
    """
    Critical-damping ratio ``2 sqrt(k) / g`` of a scalar oscillator.

    Raises:
        DomainError: If ``k`` or ``g`` is not positive.
    """
    if not (k > 0.0 and g > 0.0):
        raise DomainError(f"k and g must be positive, got k={k}, g={g}")
    return 2.0 * float(np.sqrt(k)) / g


def optimal_ratio_commuting(k_diag, g_diag) -> float:
    """
    Optimal ratio for simultaneously diagonal ``K`` and ``gamma``.

    Takes the smallest of ``sqrt(4 k_j / (g_j^2 - (g_j - g_1)^2))`` over the
    modes; the first mode wins ties.

    Args:
        k_diag: Positive stiffness eigenvalues.
        g_diag: Positive friction eigenvalues sorted ascending, paired with ``k_diag``.

    Raises:
        DomainError: On empty, unsorted or non-positive input.
    """
    k_diag = np.atleast_1d(np.asarray(k_diag, dtype=float))
    g_diag = np.atleast_1d(np.asarray(g_diag, dtype=float))
    if k_diag.size == 0 or k_diag.shape != g_diag.shape:
        raise DomainError("k_diag and g_diag must be non-empty and of equal length")
    if np.any(k_diag <= 0.0) or np.any(g_diag <= 0.0):
        raise DomainError("k_diag and g_diag must be positive")
    if np.any(np.diff(g_diag) < 0.0):
        raise DomainError("g_diag must be sorted ascending")

    g1 = g_diag[0]
    denominator = g_diag**2 - (g_diag - g1) ** 2
    assert np.all(denominator > 0.0)
    candidates = np.sqrt(4.0 * k_diag / denominator)
    return float(candidates[int(np.argmin(candidates))])


def diagonalize_commuting(k_mat, gamma) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Simultaneous orthogonal diagonalisation of commuting SPD matrices.

    Returns:
        tuple: ``(k_diag, g_diag, s)`` with ``s K s^-1`` and ``s gamma s^-1``
        diagonal, ``g_diag`` ascending and ``s`` orthogonal.

    Raises:
        CommutationError: If ``|K gamma - gamma K|_F`` exceeds
            ``1e-10 |K|_F |gamma|_F``.
    """
    k_mat = check_spd(k_mat, "k_mat")
    gamma = check_spd(gamma, "gamma")
    commutator = float(np.linalg.norm(k_mat @ gamma - gamma @ k_mat))
    if commutator > COMMUTATION_TOL * np.linalg.norm(k_mat) * np.linalg.norm(gamma):
        raise CommutationError(f"K and gamma do not commute (|[K, gamma]| = {commutator:.3e})")

    g_vals, v = sla.eigh(gamma)
    scale = max(float(g_vals[-1]), 1.0)
    # refine the basis inside each (numerically) repeated friction eigenvalue
    start = 0
    n = g_vals.shape[0]
    while start < n:
        stop = start + 1
        while stop < n and g_vals[stop] - g_vals[start] <= CLUSTER_TOL * scale:
            stop += 1
        if stop - start > 1:
            block = v[:, start:stop]
            _, w = sla.eigh(block.T @ k_mat @ block)
            v[:, start:stop] = block @ w
        start = stop

    s = v.T
    k_diag = np.diag(s @ k_mat @ v).copy()
    g_diag = np.diag(s @ gamma @ v).copy()
    return k_diag, g_diag, s


def commutes(k_mat, gamma) -> bool:
    k_mat = np.asarray(k_mat, dtype=float)
    gamma = np.asarray(gamma, dtype=float)
    commutator = float(np.linalg.norm(k_mat @ gamma - gamma @ k_mat))
    return commutator <= COMMUTATION_TOL * np.linalg.norm(k_mat) * np.linalg.norm(gamma)


def _check_range(alpha_range: Tuple[float, float]) -> Tuple[float, float]:
    lo, hi = (float(v) for v in alpha_range)
    if not (0.0 < lo < hi and np.isfinite(hi)):
        raise DomainError(f"alpha_range must satisfy 0 < lo < hi, got ({lo}, {hi})")
    return lo, hi


def abscissa_scan(template: LinearTemplate, alphas) -> Dict[str, np.ndarray]:
    """
    Spectral abscissa and sorted eigenvalue real parts of ``A(alpha)`` on a grid.

    Returns:
        dict: ``alpha`` (m,), ``abscissa`` (m,), ``real_parts`` (m, 2n) sorted
        in descending order per row.
    """
    alphas = np.asarray(alphas, dtype=float)
    real_parts = np.empty((alphas.shape[0], 2 * template.dimension))
    for i, alpha in enumerate(alphas):
        real_parts[i] = np.sort(eigenvalues(template.drift(alpha)).real)[::-1]
    return {"alpha": alphas, "abscissa": real_parts[:, 0].copy(), "real_parts": real_parts}


def eigenvalues_at(template: LinearTemplate, alpha: float) -> np.ndarray:
    return eigenvalues(template.drift(alpha))


def optimal_ratio_search(
    template: LinearTemplate,
    alpha_range: Tuple[float, float] = (0.05, 10.0),
    tol: float = 1e-6,
    n_grid: int = MIN_GRID_POINTS,
) -> Tuple[float, float]:
    """
    Ratio minimising the spectral abscissa of ``A(alpha)`` on ``alpha_range``.

    A uniform grid of at least 400 points locates the basin; golden-section
    search then refines inside the two neighbouring grid cells. The abscissa
    is only piecewise smooth in ``alpha`` (eigenvalue collisions), so no
    derivatives are used.

    Args:
        template (LinearTemplate): ``(K, gamma, beta)``.
        alpha_range (tuple): ``(lo, hi)`` with ``0 < lo < hi``.
        tol (float): Absolute tolerance on ``alpha``.
        n_grid (int): Grid size, raised to 400 if smaller.

    Returns:
        tuple: ``(alpha_star, rate)`` where ``rate = -2 * abscissa(alpha_star)``.

    Raises:
        DomainError: On an invalid range or tolerance.
    """
    lo, hi = _check_range(alpha_range)
    if not tol > 0.0:
        raise DomainError(f"tol must be positive, got {tol}")

    grid = np.linspace(lo, hi, max(int(n_grid), MIN_GRID_POINTS))
    values = abscissa_scan(template, grid)["abscissa"]
    i = int(np.argmin(values))

    def objective(alpha: float) -> float:
        return spectral_abscissa(template.drift(alpha))

    left, right = grid[max(i - 1, 0)], grid[min(i + 1, grid.shape[0] - 1)]
    result = None
    if 0 < i < grid.shape[0] - 1 and values[i] < values[i - 1] and values[i] < values[i + 1]:
        try:
            result = minimize_scalar(
                objective,
                bracket=(left, grid[i], right),
                method="golden",
                options={"xtol": tol / max(abs(grid[i]), 1.0)},
            )
        except ValueError:
            result = None
    if result is None or not (left <= result.x <= right):
        result = minimize_scalar(
            objective, bounds=(left, right), method="bounded", options={"xatol": tol}
        )

    alpha_star, best = float(result.x), float(result.fun)
    if values[i] < best:
        alpha_star, best = float(grid[i]), float(values[i])

    logger.debug(f"optimal ratio search: alpha*={alpha_star:.8f}, abscissa={best:.8f}")
    return alpha_star, -2.0 * best
