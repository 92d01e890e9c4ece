"""Minkowski norms on m: Riemannian, (alpha, beta) and custom.

Every norm exposes ``value(y)``, ``fundamental_tensor(y)`` (the matrix of
g_y) and ``cartan_matrix(y, w)`` (the matrix of C_y(., ., w)).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import (
    AdmissibilityError,
    ConvexityError,
    DomainError,
    InputError,
    NormBoundError,
    NotPositiveDefiniteError,
)

PHI_GRID = 256
HESSIAN_STEP = 1e-4
CARTAN_STEP = 1e-5
COMPLEX_STEP = 1e-20


def _nonzero(y, dim: int) -> np.ndarray:
    y = np.asarray(y, dtype=float)
    if y.shape != (dim,):
        raise InputError(f"vector must have shape ({dim},), got {y.shape}")
    if not np.any(y):
        raise DomainError("the norm and its tensors are undefined at y = 0")
    return y


def _check_pd(G: np.ndarray, y) -> np.ndarray:
    try:
        np.linalg.cholesky(G)
    except np.linalg.LinAlgError:
        raise ConvexityError(f"fundamental tensor is not positive definite at y={np.asarray(y).tolist()}") from None
    return G


@dataclass(frozen=True, eq=False)
class EuclideanForm:
    """Inner product alpha(u, v) = u^T gram v."""

    gram: np.ndarray

    def __post_init__(self):
        g = np.array(self.gram, dtype=float)
        if g.ndim != 2 or g.shape[0] != g.shape[1]:
            raise InputError("gram must be a square matrix")
        if np.max(np.abs(g - g.T), initial=0.0) > 1e-12 * (1.0 + np.max(np.abs(g), initial=0.0)):
            raise NotPositiveDefiniteError("gram matrix is not symmetric")
        g = 0.5 * (g + g.T)
        if g.size and np.min(np.linalg.eigvalsh(g)) <= 0:
            raise NotPositiveDefiniteError("gram matrix is not positive definite")
        g.setflags(write=False)
        object.__setattr__(self, "gram", g)

    @classmethod
    def identity(cls, dim: int) -> "EuclideanForm":
        return cls(np.eye(dim))

    @property
    def dim(self) -> int:
        return self.gram.shape[0]

    def inner(self, u, v) -> float:
        return float(np.asarray(u) @ self.gram @ np.asarray(v))

    def norm(self, y) -> float:
        return float(np.sqrt(self.inner(y, y)))


@dataclass(frozen=True, eq=False)
class PhiProfile:
    """The profile phi of F = alpha * phi(beta / alpha) with exact derivatives.

    ``phi``, ``phi1``, ``phi2`` must accept numpy arrays.  Admissible
    arguments are |r| < b0.  ``complex_safe`` marks profiles whose
    callables are holomorphic numpy expressions, which enables complex-step
    Cartan tensors.
    """

    phi: Callable
    phi1: Callable
    phi2: Callable
    b0: float
    name: str = "custom"
    params: tuple = ()
    complex_safe: bool = False

    def __post_init__(self):
        if not self.b0 > 0:
            raise AdmissibilityError("b0 must be positive")
        r = self.grid()
        p, p1, p2 = self.evaluate(r)
        if np.any(~np.isfinite(p)) or np.min(p) <= 0:
            raise AdmissibilityError(f"phi is not positive on (-{self.b0}, {self.b0})")
        # strong convexity for every b in the grid and |r| <= b
        for b in np.abs(r[r >= 0]):
            mask = np.abs(r) <= b
            crit = p[mask] - r[mask] * p1[mask] + (b**2 - r[mask] ** 2) * p2[mask]
            if crit.size and np.min(crit) <= 0:
                raise AdmissibilityError(f"phi fails the strong convexity criterion at b={b:.6g}")
        eps = 1e-6 * self.b0
        inner = r[np.abs(r) < self.b0 - 2 * eps]
        fd1 = (self._eval(self.phi, inner + eps) - self._eval(self.phi, inner - eps)) / (2 * eps)
        fd2 = (self._eval(self.phi1, inner + eps) - self._eval(self.phi1, inner - eps)) / (2 * eps)
        scale = 1.0 + np.max(np.abs(p))
        if np.max(np.abs(fd1 - self._eval(self.phi1, inner))) > 1e-6 * scale:
            raise AdmissibilityError("phi1 is inconsistent with the derivative of phi")
        if np.max(np.abs(fd2 - self._eval(self.phi2, inner))) > 1e-6 * scale:
            raise AdmissibilityError("phi2 is inconsistent with the derivative of phi1")

    def grid(self) -> np.ndarray:
        """PHI_GRID interior points of (-b0, b0)."""
        return np.linspace(-self.b0, self.b0, PHI_GRID + 2)[1:-1]

    @staticmethod
    def _eval(fn, r):
        return np.broadcast_to(fn(r), np.shape(r)).astype(np.result_type(r, float))

    def evaluate(self, r):
        return self._eval(self.phi, r), self._eval(self.phi1, r), self._eval(self.phi2, r)

    def spec_string(self) -> str:
        if not self.params:
            return self.name
        return f"{self.name}({','.join(f'{p:g}' for p in self.params)})"


def phi_Phi(P: PhiProfile, r: float) -> float:
    """phi phi' - r phi'^2 - r phi phi''; it vanishes identically exactly for Riemannian profiles."""
    if abs(r) > P.b0:
        raise DomainError(f"|r| = {abs(r)} exceeds b0 = {P.b0}")
    p, p1, p2 = (float(v) for v in P.evaluate(np.float64(r)))
    return p * p1 - r * p1**2 - r * p * p2


# ---------------------------------------------------------------------------
# preset registry


def _riemannian(b0: float = 1.0) -> PhiProfile:
    return PhiProfile(
        lambda r: np.ones_like(r),
        lambda r: np.zeros_like(r),
        lambda r: np.zeros_like(r),
        b0=b0, name="riemannian", complex_safe=True,
    )


def _randers() -> PhiProfile:
    return PhiProfile(
        lambda r: 1.0 + r,
        lambda r: np.ones_like(r),
        lambda r: np.zeros_like(r),
        b0=1.0, name="randers", complex_safe=True,
    )


def _quadratic(c1: float, c2: float, b0: float = 1.0) -> PhiProfile:
    return PhiProfile(
        lambda r: np.sqrt(c1 * r**2 + c2),
        lambda r: c1 * r / np.sqrt(c1 * r**2 + c2),
        lambda r: c1 * c2 / (c1 * r**2 + c2) ** 1.5,
        b0=b0, name="quadratic", params=(c1, c2), complex_safe=True,
    )


def _matsumoto() -> PhiProfile:
    # admissible exactly for b < 1/2
    return PhiProfile(
        lambda r: 1.0 / (1.0 - r),
        lambda r: 1.0 / (1.0 - r) ** 2,
        lambda r: 2.0 / (1.0 - r) ** 3,
        b0=0.5, name="matsumoto", complex_safe=True,
    )


PHI_PRESETS: dict[str, tuple[Callable, tuple[str, ...]]] = {
    "riemannian": (_riemannian, ()),
    "randers": (_randers, ()),
    "quadratic": (_quadratic, ("c1", "c2")),
    "matsumoto": (_matsumoto, ()),
}


def phi_preset(name: str, *params: float) -> PhiProfile:
    """Look up a profile by name, e.g. ``phi_preset("quadratic", 0.3, 1)``.

    ``name`` may also carry its parameters: ``"quadratic(0.3,1)"``.
    """
    m = re.fullmatch(r"\s*([a-z_]+)\s*(?:\((.*)\))?\s*", name)
    if not m:
        raise InputError(f"cannot parse phi preset {name!r}")
    key, inline = m.group(1), m.group(2)
    if inline is not None and inline.strip():
        if params:
            raise InputError("parameters given both inline and as arguments")
        params = tuple(float(p) for p in inline.split(","))
    if key not in PHI_PRESETS:
        raise InputError(f"unknown phi preset {key!r}; known: {sorted(PHI_PRESETS)}")
    factory, names = PHI_PRESETS[key]
    if len(params) != len(names):
        raise InputError(f"preset {key!r} takes parameters {names}, got {len(params)} values")
    return factory(*(float(p) for p in params))


# ---------------------------------------------------------------------------
# norm models


class NormModel:
    """Common interface; subclasses are immutable."""

    kind: str = "abstract"
    dim: int

    def value(self, y) -> float:
        raise NotImplementedError

    def fundamental_tensor(self, y) -> np.ndarray:
        raise NotImplementedError

    def cartan_matrix(self, y, w) -> np.ndarray:
        """Matrix of (u, v) -> C_y(u, v, w), by central differences of g along w."""
        y = _nonzero(y, self.dim)
        w = np.asarray(w, dtype=float)
        wn = np.linalg.norm(w)
        if wn == 0.0:
            return np.zeros((self.dim, self.dim))
        t = CARTAN_STEP * np.linalg.norm(y) / wn
        return 0.25 * (self.fundamental_tensor(y + t * w) - self.fundamental_tensor(y - t * w)) / t

    def cartan_tensor(self, y) -> np.ndarray:
        """Full array C[a, b, c] = C_y(e_a, e_b, e_c)."""
        eye = np.eye(self.dim)
        return np.stack([self.cartan_matrix(y, eye[c]) for c in range(self.dim)], axis=-1)

    @property
    def is_riemannian(self) -> bool:
        return False


@dataclass(frozen=True, eq=False)
class RiemannianNorm(NormModel):
    alpha: EuclideanForm
    kind: str = field(default="riemannian", init=False)

    @property
    def dim(self) -> int:
        return self.alpha.dim

    @property
    def is_riemannian(self) -> bool:
        return True

    def value(self, y) -> float:
        return self.alpha.norm(_nonzero(y, self.dim))

    def fundamental_tensor(self, y) -> np.ndarray:
        _nonzero(y, self.dim)
        return np.array(self.alpha.gram)

    def cartan_matrix(self, y, w) -> np.ndarray:
        _nonzero(y, self.dim)
        return np.zeros((self.dim, self.dim))


@dataclass(frozen=True, eq=False)
class AlphaBetaNorm(NormModel):
    """F(y) = alpha(y) phi(beta(y) / alpha(y)) with beta = alpha(X, .)."""

    alpha: EuclideanForm
    X: np.ndarray
    profile: PhiProfile
    kind: str = field(default="alpha_beta", init=False)

    def __post_init__(self):
        X = np.array(self.X, dtype=float)
        if X.shape != (self.alpha.dim,):
            raise InputError(f"X must have shape ({self.alpha.dim},)")
        X.setflags(write=False)
        object.__setattr__(self, "X", X)
        b = self.alpha.norm(X)
        if b >= self.profile.b0:
            raise NormBoundError(
                f"|X|_alpha = {b:.6g} must be below b0 = {self.profile.b0:g} for profile {self.profile.name}"
            )
        beta = self.alpha.gram @ X
        beta.setflags(write=False)
        object.__setattr__(self, "beta", beta)

    @property
    def dim(self) -> int:
        return self.alpha.dim

    @property
    def b(self) -> float:
        return self.alpha.norm(self.X)

    @property
    def is_riemannian(self) -> bool:
        return not np.any(self.X) or self.profile.name in ("riemannian", "quadratic")

    def value(self, y) -> float:
        y = _nonzero(y, self.dim)
        s = np.sqrt(y @ self.alpha.gram @ y)
        return float(s * self.profile.phi(np.float64(self.beta @ y / s)))

    def _tensor(self, y) -> np.ndarray:
        # closed form of 1/2 d^2/ds dt F^2(y + s u + t v); complex y is allowed
        A = self.alpha.gram
        ay = A @ y
        ss = y @ ay
        s = np.sqrt(ss)
        by = self.beta @ y
        r = by / s
        p, p1, p2 = self.profile.evaluate(r)
        beta = self.beta
        G = p * p * A
        G = G - p * p1 * by / s**3 * np.outer(ay, ay)
        G = G + p * p1 / s * (np.outer(ay, beta) + np.outer(beta, ay) - by * A)
        d = beta - by / ss * ay
        G = G + (p1 * p1 + p * p2) * np.outer(d, d)
        return G

    def fundamental_tensor(self, y) -> np.ndarray:
        y = _nonzero(y, self.dim)
        return _check_pd(self._tensor(y), y)

    def cartan_matrix(self, y, w) -> np.ndarray:
        if not self.profile.complex_safe:
            return super().cartan_matrix(y, w)
        y = _nonzero(y, self.dim)
        w = np.asarray(w, dtype=float)
        wn = np.linalg.norm(w)
        if wn == 0.0:
            return np.zeros((self.dim, self.dim))
        t = COMPLEX_STEP * np.linalg.norm(y) / wn
        return 0.5 * self._tensor(y + 1j * t * w).imag / t


def randers(alpha: EuclideanForm, X) -> AlphaBetaNorm:
    return AlphaBetaNorm(alpha, np.asarray(X, dtype=float), phi_preset("randers"))


@dataclass(frozen=True, eq=False)
class CustomNorm(NormModel):
    """A user-supplied evaluator y -> F(y); tensors by finite differences."""

    evaluator: Callable
    dim: int
    kind: str = field(default="custom", init=False)

    def value(self, y) -> float:
        y = _nonzero(y, self.dim)
        v = float(self.evaluator(y))
        if not v > 0:
            raise AdmissibilityError(f"custom norm is not positive at y={y.tolist()}")
        return v

    def _half_sq(self, y) -> float:
        return 0.5 * float(self.evaluator(y)) ** 2

    def fundamental_tensor(self, y) -> np.ndarray:
        y = _nonzero(y, self.dim)
        h = HESSIAN_STEP * np.linalg.norm(y)
        E = h * np.eye(self.dim)
        f = self._half_sq
        G = np.empty((self.dim, self.dim))
        for i in range(self.dim):
            for j in range(i, self.dim):
                G[i, j] = G[j, i] = (
                    f(y + E[i] + E[j]) - f(y + E[i] - E[j]) - f(y - E[i] + E[j]) + f(y - E[i] - E[j])
                ) / (4 * h * h)
        return _check_pd(G, y)

    def cartan_matrix(self, y, w) -> np.ndarray:
        # direct third-order stencil; differencing the FD Hessian would amplify its rounding noise
        y = _nonzero(y, self.dim)
        w = np.asarray(w, dtype=float)
        wn = np.linalg.norm(w)
        if wn == 0.0:
            return np.zeros((self.dim, self.dim))
        h = 1e-3 * np.linalg.norm(y)
        W = h * w / wn
        E = h * np.eye(self.dim)
        f = self._half_sq
        C = np.empty((self.dim, self.dim))
        for i in range(self.dim):
            for j in range(i, self.dim):
                acc = 0.0
                for si in (1, -1):
                    for sj in (1, -1):
                        for sw in (1, -1):
                            acc += si * sj * sw * f(y + si * E[i] + sj * E[j] + sw * W)
                C[i, j] = C[j, i] = 0.5 * acc / (8 * h**3) * wn
        return C


def norm_value(N: NormModel, y) -> float:
    return N.value(y)


def fundamental_tensor(N: NormModel, y) -> np.ndarray:
    return N.fundamental_tensor(y)


def cartan_tensor(N: NormModel, y, u, v, w) -> float:
    """C_y(u, v, w) = 1/2 d/dt g_{y + t w}(u, v) at t = 0."""
    return float(np.asarray(u) @ N.cartan_matrix(y, w) @ np.asarray(v))


def invariance_residual(N: NormModel, D, n_samples: int = 64, seed: int = 0) -> float:
    """max |<[h, y]_m, y>_y| / F(y)^2 over sampled y and the basis of h.

    Zero exactly when F is invariant under the connected isotropy group.
    """
    if D.h.dim == 0:
        return 0.0
    if N.dim != D.m_dim:
        raise InputError(f"norm dimension {N.dim} differs from dim m = {D.m_dim}")
    rng = np.random.Generator(np.random.Philox(seed))
    worst = 0.0
    for y in rng.standard_normal((n_samples, N.dim)):
        G = N.fundamental_tensor(y)
        F2 = y @ G @ y
        for A in D.isotropy:
            worst = max(worst, abs((A @ y) @ G @ y) / F2)
    return float(worst)
