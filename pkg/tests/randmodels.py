"""Random valid Lie algebras and norms for property tests."""

import numpy as np

from homfinsler.constructions import heisenberg_algebra, so3_algebra, solvable_algebra
from homfinsler.homgeo import HomogeneousModel
from homfinsler.lie import LieAlgebra, ReductiveDecomposition, change_basis, direct_sum
from homfinsler.norms import AlphaBetaNorm, EuclideanForm, RiemannianNorm, phi_preset


def semidirect(rng, n, triangular=False, diagonal=False):
    """R e_n acting on the abelian ideal span{e_1..e_{n-1}} by a matrix D; Jacobi holds for any D."""
    D = rng.standard_normal((n - 1, n - 1))
    if triangular:
        D = np.triu(D)
    if diagonal:
        D = np.diag(np.diag(D))
    c = np.zeros((n, n, n))
    # [e_n, e_b] = sum_k D[k, b] e_k
    c[n - 1, : n - 1, : n - 1] = D.T
    c[: n - 1, n - 1, : n - 1] = -D.T
    return LieAlgebra(c)


def random_algebra(rng, n):
    kind = rng.integers(4)
    if kind == 0 or n < 3:
        L = semidirect(rng, n)
    elif kind == 1:
        L = heisenberg_algebra()
    elif kind == 2:
        L = so3_algebra()
    else:
        L = solvable_algebra(3, 1.0 + rng.random())
    if L.dim < n:
        L = direct_sum(L, semidirect(rng, n - L.dim) if n - L.dim >= 2 else LieAlgebra(np.zeros((1, 1, 1))))
    P = rng.standard_normal((n, n)) + 2 * np.eye(n)
    return change_basis(L, P)


def random_gram(rng, n):
    B = rng.standard_normal((n, n))
    return B @ B.T + 0.5 * np.eye(n)


def random_X(rng, alpha, bound):
    X = rng.standard_normal(alpha.dim)
    return X * (bound * rng.uniform(0.2, 1.0) / alpha.norm(X))


PROFILES = ("randers", "quadratic(0.3,1)", "matsumoto")


def random_ab_norm(rng, n, profile=None):
    alpha = EuclideanForm(random_gram(rng, n))
    name = profile or PROFILES[rng.integers(len(PROFILES))]
    phi = phi_preset(name)
    return AlphaBetaNorm(alpha, random_X(rng, alpha, 0.9 * phi.b0), phi)


def random_group_model(rng, n, finsler=True):
    L = random_algebra(rng, n)
    D = ReductiveDecomposition.trivial(L)
    norm = random_ab_norm(rng, n) if finsler else RiemannianNorm(EuclideanForm(random_gram(rng, n)))
    return HomogeneousModel(D, norm)
