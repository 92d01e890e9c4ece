"""Spray, connection operator and Riemann curvature of homogeneous Finsler metrics.

All vectors live in m, in the coordinates of ``decomposition.m.basis``.
For a Lie group (trivial h) these are the coordinates of g itself.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve

from .errors import ConvexityError, DegenerateFlagError, DomainError, InputError, UnsupportedError
from .lie import ReductiveDecomposition
from .norms import NormModel, invariance_residual

SPRAY_FD_STEP = 1e-5


@dataclass(frozen=True, eq=False)
class HomogeneousModel:
    """A reductive decomposition together with an Ad(H)-invariant norm on m."""

    decomposition: ReductiveDecomposition
    norm: NormModel
    chain_basis_declared: bool = False
    name: str = ""

    def __post_init__(self):
        if self.norm.dim != self.decomposition.m_dim:
            raise InputError(f"norm dimension {self.norm.dim} differs from dim m = {self.decomposition.m_dim}")
        res = invariance_residual(self.norm, self.decomposition)
        if res > 1e-8:
            raise InputError(f"norm is not Ad(H)-invariant (residual {res:.3e})")

    @property
    def algebra(self):
        return self.decomposition.algebra

    @property
    def dim(self) -> int:
        return self.decomposition.m_dim

    @property
    def bracket_scale(self) -> float:
        """Largest |[e_a, e_b]_m| coefficient; 1 when m brackets vanish."""
        s = float(np.max(np.abs(self.decomposition.m_structure), initial=0.0))
        return s if s > 0 else 1.0

    def ad(self, y) -> np.ndarray:
        return self.decomposition.ad_m(y)


@dataclass(frozen=True, eq=False)
class CurvatureOperator:
    base: np.ndarray
    matrix: np.ndarray

    def __call__(self, u) -> np.ndarray:
        return self.matrix @ np.asarray(u, dtype=float)


def _check_y(M: HomogeneousModel, y) -> np.ndarray:
    y = np.asarray(y, dtype=float)
    if y.shape != (M.dim,):
        raise InputError(f"vector must have shape ({M.dim},), got {y.shape}")
    if not np.any(y):
        raise DomainError("y must be nonzero")
    return y


def _factor(G: np.ndarray):
    try:
        return cho_factor(G)
    except LinAlgError:
        raise ConvexityError("fundamental tensor cannot be Cholesky factored") from None


def _bracket_with_y(M: HomogeneousModel, y) -> np.ndarray:
    """B[a, k] = ([e_a, y]_m)_k."""
    return np.einsum("abk,b->ak", M.decomposition.m_structure, y)


def _spray(M: HomogeneousModel, y, G, factor) -> np.ndarray:
    B = _bracket_with_y(M, y)
    rhs = B @ (G @ y)
    return cho_solve(factor, rhs)


def spray_eta(M: HomogeneousModel, y) -> np.ndarray:
    """eta(y), defined by <eta(y), u>_y = <y, [u, y]_m>_y for all u."""
    y = _check_y(M, y)
    G = M.norm.fundamental_tensor(y)
    return _spray(M, y, G, _factor(G))


def _connection(M: HomogeneousModel, y, G=None, eta=None) -> np.ndarray:
    """Matrix of v -> N(y, v)."""
    if G is None:
        G = M.norm.fundamental_tensor(y)
    factor = _factor(G)
    if eta is None:
        eta = _spray(M, y, G, factor)
    cm = M.decomposition.m_structure
    # rows u = e_a, columns v = e_j
    t1 = cm @ (G @ y)
    t2 = _bracket_with_y(M, y) @ G
    C = M.norm.cartan_matrix(y, eta)
    rhs = t1 + t2 + t2.T - 2.0 * C
    return 0.5 * cho_solve(factor, rhs)


def connection_matrix(M: HomogeneousModel, y) -> np.ndarray:
    """The linear map N(y, .) as a matrix."""
    return _connection(M, _check_y(M, y))


def connection_N(M: HomogeneousModel, y, v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    return connection_matrix(M, y) @ v


def riemann_operator(M: HomogeneousModel, y) -> CurvatureOperator:
    """R_y(u) = D_eta N(y, u) - N(y, N(y, u)) + N(y, [y, u]) - [y, N(y, u)].

    D_eta N is the derivative of y' -> N(y', u) at y along eta(y), by central
    differences; it is exactly zero when eta(y) vanishes.
    """
    if not M.decomposition.is_group:
        raise UnsupportedError("Riemann curvature is only implemented for Lie groups (trivial h)")
    y = _check_y(M, y)
    G = M.norm.fundamental_tensor(y)
    eta = _spray(M, y, G, _factor(G))
    Nm = _connection(M, y, G, eta)
    ad_y = M.ad(y)
    eta_norm = np.linalg.norm(eta)
    if eta_norm <= 1e-14 * np.dot(y, y):
        DN = np.zeros_like(Nm)
    else:
        t = SPRAY_FD_STEP * np.linalg.norm(y) / (1.0 + eta_norm)
        DN = (_connection(M, y + t * eta) - _connection(M, y - t * eta)) / (2 * t)
    R = DN - Nm @ Nm + Nm @ ad_y - ad_y @ Nm
    return CurvatureOperator(base=y, matrix=R)


def flag_curvature(M: HomogeneousModel, y, u) -> float:
    """K(y, u) = <R_y u, u>_y / (F(y)^2 <u, u>_y - <y, u>_y^2)."""
    y = _check_y(M, y)
    u = np.asarray(u, dtype=float)
    G = M.norm.fundamental_tensor(y)
    F2 = y @ G @ y
    uu = u @ G @ u
    denom = F2 * uu - (y @ G @ u) ** 2
    if denom <= 1e-14 * F2 * max(uu, np.finfo(float).tiny):
        raise DegenerateFlagError("u is (numerically) parallel to y")
    R = riemann_operator(M, y).matrix
    return float((R @ u) @ G @ u / denom)


def ricci_scalar(M: HomogeneousModel, y) -> float:
    return float(np.trace(riemann_operator(M, y).matrix))
