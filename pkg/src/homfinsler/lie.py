"""Real Lie algebras given by structure constants.

A Lie algebra of dimension ``n`` is stored as a dense array ``c`` of shape
``(n, n, n)`` with ``[e_i, e_j] = sum_k c[i, j, k] e_k``.  Vectors are plain
coordinate arrays in the basis ``e_1, ..., e_n`` (0-based internally).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DecompositionError, InputError, JacobiError

MAX_DIM = 64
RANK_RTOL = 1e-10


def _as_vector(x, n: int, name: str = "vector") -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (n,):
        raise InputError(f"{name} must have shape ({n},), got {x.shape}")
    return x


def _orthonormal_rows(vectors: np.ndarray, n: int) -> np.ndarray:
    """Orthonormal basis (as rows) of the row span, thresholded SVD."""
    vectors = np.asarray(vectors, dtype=float).reshape(-1, n)
    if vectors.shape[0] == 0:
        return np.zeros((0, n))
    _, s, vt = np.linalg.svd(vectors, full_matrices=False)
    if s.size == 0 or s[0] == 0.0:
        return np.zeros((0, n))
    rank = int(np.sum(s > RANK_RTOL * s[0]))
    return vt[:rank]


def _null_space(matrix: np.ndarray, n: int) -> np.ndarray:
    """Orthonormal rows spanning {v : matrix @ v = 0}."""
    matrix = np.asarray(matrix, dtype=float).reshape(-1, n)
    if matrix.shape[0] == 0 or not np.any(matrix):
        return np.eye(n)
    _, s, vt = np.linalg.svd(matrix, full_matrices=True)
    rank = int(np.sum(s > RANK_RTOL * s[0]))
    return vt[rank:]


@dataclass(frozen=True, eq=False)
class Subspace:
    """Linear subspace of R^n held by an orthonormal row basis."""

    ambient_dim: int
    basis: np.ndarray

    def __post_init__(self):
        basis = np.asarray(self.basis, dtype=float).reshape(-1, self.ambient_dim)
        if basis.shape[0] and np.linalg.matrix_rank(basis) != basis.shape[0]:
            raise InputError("subspace basis vectors are linearly dependent")
        basis.setflags(write=False)
        object.__setattr__(self, "basis", basis)

    @classmethod
    def span(cls, vectors, ambient_dim: int) -> "Subspace":
        """Span of arbitrary (possibly dependent) vectors."""
        return cls(ambient_dim, _orthonormal_rows(vectors, ambient_dim))

    @classmethod
    def spanned_by(cls, vectors, ambient_dim: int) -> "Subspace":
        """Span of independent vectors, orthonormalized in the given order.

        Gram-Schmidt keeps an already orthonormal list (e.g. coordinate
        vectors) unchanged, so coordinates on the subspace stay readable.
        """
        vectors = np.asarray(vectors, dtype=float).reshape(-1, ambient_dim)
        if vectors.shape[0] == 0:
            return cls(ambient_dim, np.zeros((0, ambient_dim)))
        if np.linalg.matrix_rank(vectors) != vectors.shape[0]:
            raise InputError("subspace basis vectors are linearly dependent")
        q, r = np.linalg.qr(vectors.T)
        q = q * np.sign(np.diag(r))
        return cls(ambient_dim, q.T)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, np.zeros((0, ambient_dim)))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, np.eye(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def project(self, v) -> np.ndarray:
        """Orthogonal projection of ``v`` (ambient coordinates)."""
        return self.basis.T @ (self.basis @ np.asarray(v, dtype=float))

    def contains(self, v, tol: float = 1e-9) -> bool:
        v = np.asarray(v, dtype=float)
        return bool(np.linalg.norm(v - self.project(v)) <= tol * max(1.0, np.linalg.norm(v)))

    def __repr__(self):
        return f"Subspace(ambient_dim={self.ambient_dim}, dim={self.dim})"


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    """Finite-dimensional real Lie algebra.

    Antisymmetry and the Jacobi identity are verified on construction, so
    every instance is certified.  Use :meth:`unchecked` only to inspect
    invalid data (e.g. with :func:`jacobi_residual`).
    """

    structure: np.ndarray
    basis_labels: tuple = ()
    certified: bool = field(default=True, compare=False)

    def __post_init__(self):
        c = np.array(self.structure, dtype=float)
        if c.ndim != 3 or not (c.shape[0] == c.shape[1] == c.shape[2]):
            raise InputError(f"structure constants must have shape (n, n, n), got {c.shape}")
        n = c.shape[0]
        if n < 1 or n > MAX_DIM:
            raise InputError(f"dimension must be in [1, {MAX_DIM}], got {n}")
        c.setflags(write=False)
        object.__setattr__(self, "structure", c)
        labels = tuple(self.basis_labels) or tuple(f"e{i + 1}" for i in range(n))
        if len(labels) != n:
            raise InputError(f"expected {n} basis labels, got {len(labels)}")
        object.__setattr__(self, "basis_labels", labels)
        if self.certified:
            scale = 1.0 + np.max(np.abs(c))
            if np.max(np.abs(c + c.transpose(1, 0, 2))) > 1e-12 * scale:
                raise JacobiError("structure constants are not antisymmetric")
            res = jacobi_residual(self)
            if res > 1e-12 * scale**2:
                raise JacobiError(f"Jacobi identity fails (residual {res:.3e})")

    @classmethod
    def unchecked(cls, structure, basis_labels=()) -> "LieAlgebra":
        return cls(structure, basis_labels, certified=False)

    @classmethod
    def from_brackets(cls, n: int, brackets: dict, basis_labels=()) -> "LieAlgebra":
        """Build from ``{(i, j): vector}`` with 0-based ``i, j``; antisymmetrized."""
        c = np.zeros((n, n, n))
        for (i, j), vec in brackets.items():
            c[i, j] = vec
            c[j, i] = -np.asarray(vec, dtype=float)
        return cls(c, basis_labels)

    @property
    def dim(self) -> int:
        return self.structure.shape[0]

    @property
    def scale(self) -> float:
        """Largest structure-constant magnitude."""
        return float(np.max(np.abs(self.structure)))

    def bracket(self, x, y) -> np.ndarray:
        return bracket(self, x, y)

    def ad(self, y) -> np.ndarray:
        return ad_operator(self, y)

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, labels={list(self.basis_labels)})"


def bracket(L: LieAlgebra, x, y) -> np.ndarray:
    """Lie bracket [x, y] in coordinates."""
    x = _as_vector(x, L.dim, "x")
    y = _as_vector(y, L.dim, "y")
    return np.einsum("i,j,ijk->k", x, y, L.structure)


def ad_operator(L: LieAlgebra, y) -> np.ndarray:
    """Matrix of ad(y) = [y, .]."""
    y = _as_vector(y, L.dim, "y")
    return np.einsum("i,ijk->kj", y, L.structure)


def jacobi_residual(L: LieAlgebra) -> float:
    """Max-norm of the Jacobiator over all basis triples."""
    c = L.structure
    # [[e_i, e_j], e_k] = sum_l c_ij^l c_lk^m
    t = np.einsum("ijl,lkm->ijkm", c, c)
    jac = t + t.transpose(1, 2, 0, 3) + t.transpose(2, 0, 1, 3)
    return float(np.max(np.abs(jac))) if jac.size else 0.0


def center(L: LieAlgebra) -> Subspace:
    """The center {y : [y, g] = 0}."""
    n = L.dim
    # rows indexed by (j, k): sum_i y_i c[i, j, k]
    stacked = L.structure.reshape(n, n * n).T
    return Subspace(n, _null_space(stacked, n))


def _bracket_span(L: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(L.dim)
    vecs = np.einsum("ai,bj,ijk->abk", a.basis, b.basis, L.structure).reshape(-1, L.dim)
    return Subspace.span(vecs, L.dim)


def derived_algebra(L: LieAlgebra) -> Subspace:
    full = Subspace.full(L.dim)
    return _bracket_span(L, full, full)


@dataclass(frozen=True)
class Classification:
    abelian: bool
    nilpotent: bool
    solvable: bool
    derived: Subspace


def classify(L: LieAlgebra) -> Classification:
    """Abelian / nilpotent / solvable predicates via lower-central and derived series."""
    n = L.dim
    full = Subspace.full(n)
    derived = _bracket_span(L, full, full)

    lower = derived
    for _ in range(n):
        if lower.dim == 0:
            break
        nxt = _bracket_span(L, full, lower)
        if nxt.dim == lower.dim:
            break
        lower = nxt
    series = derived
    for _ in range(n):
        if series.dim == 0:
            break
        nxt = _bracket_span(L, series, series)
        if nxt.dim == series.dim:
            break
        series = nxt
    return Classification(
        abelian=derived.dim == 0,
        nilpotent=lower.dim == 0,
        solvable=series.dim == 0,
        derived=derived,
    )


def direct_sum(L1: LieAlgebra, L2: LieAlgebra) -> LieAlgebra:
    n1, n2 = L1.dim, L2.dim
    c = np.zeros((n1 + n2,) * 3)
    c[:n1, :n1, :n1] = L1.structure
    c[n1:, n1:, n1:] = L2.structure
    labels = tuple(L1.basis_labels) + tuple(L2.basis_labels)
    if len(set(labels)) != len(labels):
        labels = ()
    return LieAlgebra(c, labels)


def change_basis(L: LieAlgebra, P) -> LieAlgebra:
    """Structure constants in the basis f_a = sum_i P[i, a] e_i."""
    P = np.asarray(P, dtype=float)
    if P.shape != (L.dim, L.dim) or abs(np.linalg.det(P)) < 1e-12:
        raise InputError("change of basis must be an invertible n x n matrix")
    Pinv = np.linalg.inv(P)
    c = np.einsum("ia,jb,ijk,ck->abc", P, P, L.structure, Pinv)
    return LieAlgebra(c)


def unimodularity_defect(L: LieAlgebra) -> np.ndarray:
    """The linear form x -> tr ad(x), as a vector of its values on the basis."""
    return np.einsum("ijj->i", L.structure)


@dataclass(frozen=True, eq=False)
class ReductiveDecomposition:
    """Splitting g = h + m with [h, h] in h and [h, m] in m.

    Vectors "in m" are coordinate arrays with respect to ``m.basis``.
    """

    algebra: LieAlgebra
    h: Subspace
    m: Subspace
    tol: float = 1e-9

    def __post_init__(self):
        L = self.algebra
        if not L.certified:
            raise JacobiError("decomposition requires a certified Lie algebra")
        n = L.dim
        if self.h.ambient_dim != n or self.m.ambient_dim != n:
            raise DecompositionError("subspace ambient dimension differs from the algebra")
        if self.h.dim + self.m.dim != n:
            raise DecompositionError("dim h + dim m must equal dim g")
        full = np.vstack([self.h.basis, self.m.basis])
        if np.linalg.matrix_rank(full) != n:
            raise DecompositionError("h and m do not span g")
        object.__setattr__(self, "_full_inv", np.linalg.inv(full.T))
        k = self.h.dim
        scale = 1.0 + L.scale

        hh = np.einsum("ai,bj,ijk->abk", self.h.basis, self.h.basis, L.structure)
        if hh.size and np.max(np.abs(self._coords(hh)[..., k:])) > self.tol * scale:
            raise DecompositionError("h is not a subalgebra")
        hm = np.einsum("ai,bj,ijk->abk", self.h.basis, self.m.basis, L.structure)
        if hm.size and np.max(np.abs(self._coords(hm)[..., :k])) > self.tol * scale:
            raise DecompositionError("decomposition is not reductive: [h, m] leaves m")

        mm = np.einsum("ai,bj,ijk->abk", self.m.basis, self.m.basis, L.structure)
        cm = self._coords(mm)[..., k:]
        cm.setflags(write=False)
        object.__setattr__(self, "m_structure", cm)
        ad_h = self._coords(hm)[..., k:]
        # ad_h[a] is the matrix of [h_a, .] restricted to m, in m coordinates
        ad_h = np.transpose(ad_h, (0, 2, 1)).copy()
        ad_h.setflags(write=False)
        object.__setattr__(self, "isotropy", ad_h)

    def _coords(self, v: np.ndarray) -> np.ndarray:
        """Coordinates in the combined basis (h first, then m)."""
        return v @ self._full_inv.T

    @classmethod
    def trivial(cls, L: LieAlgebra) -> "ReductiveDecomposition":
        return cls(L, Subspace.zero(L.dim), Subspace.full(L.dim))

    @classmethod
    def from_h(cls, L: LieAlgebra, h_vectors, m_vectors=None) -> "ReductiveDecomposition":
        """Decomposition with the given h; m defaults to the Euclidean complement."""
        n = L.dim
        h = Subspace.spanned_by(h_vectors, n) if len(h_vectors) else Subspace.zero(n)
        if m_vectors is None:
            m_basis = _null_space(h.basis, n) if h.dim else np.eye(n)
            # prefer coordinate vectors when the complement is coordinate aligned
            m = Subspace.spanned_by(_align_to_coordinates(m_basis), n)
        else:
            m = Subspace.spanned_by(m_vectors, n)
        return cls(L, h, m)

    @property
    def is_group(self) -> bool:
        return self.h.dim == 0

    @property
    def m_dim(self) -> int:
        return self.m.dim

    def lift(self, x) -> np.ndarray:
        """m coordinates -> ambient coordinates."""
        return np.asarray(x, dtype=float) @ self.m.basis

    def project_m(self, v) -> np.ndarray:
        """m-component of an ambient vector, in m coordinates."""
        return self._coords(np.asarray(v, dtype=float))[..., self.h.dim:]

    def ad_m(self, y) -> np.ndarray:
        """Matrix of v -> [y, v]_m on m."""
        y = _as_vector(y, self.m_dim, "y")
        return np.einsum("i,ijk->kj", y, self.m_structure)


def _align_to_coordinates(basis: np.ndarray) -> np.ndarray:
    """Replace an orthonormal basis by coordinate vectors when they span the same space."""
    n = basis.shape[1]
    proj = basis.T @ basis
    picks = [i for i in range(n) if abs(proj[i, i] - 1.0) < 1e-12]
    if len(picks) == basis.shape[0]:
        return np.eye(n)[picks]
    return basis


def bracket_m(D: ReductiveDecomposition, x, y) -> np.ndarray:
    """[x, y]_m for x, y given in m coordinates."""
    x = _as_vector(x, D.m_dim, "x")
    y = _as_vector(y, D.m_dim, "y")
    return np.einsum("i,j,ijk->k", x, y, D.m_structure)
