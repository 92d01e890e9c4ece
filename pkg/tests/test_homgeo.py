import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homfinsler.constructions import (
    example,
    heisenberg_algebra,
    so3_symmetric_pair,
    solvable_algebra,
    solvable_cyclic_model,
    solvable_plus_center_model,
)
from homfinsler.errors import DegenerateFlagError, DomainError, InputError, UnsupportedError
from homfinsler.homgeo import (
    HomogeneousModel,
    connection_matrix,
    connection_N,
    flag_curvature,
    ricci_scalar,
    riemann_operator,
    spray_eta,
)
from homfinsler.lie import ReductiveDecomposition
from homfinsler.norms import EuclideanForm, RiemannianNorm, randers
from oracles import koszul_connection, koszul_riemann_operator, koszul_spray, sectional_curvature
from randmodels import random_gram, random_group_model


def riemannian_group(L, A=None):
    A = np.eye(L.dim) if A is None else A
    return HomogeneousModel(ReductiveDecomposition.trivial(L), RiemannianNorm(EuclideanForm(A)))


def test_heisenberg_values():
    M = riemannian_group(heisenberg_algebra())
    e = np.eye(3)
    assert flag_curvature(M, e[0], e[1]) == pytest.approx(-0.75, abs=1e-9)
    assert flag_curvature(M, e[0], e[2]) == pytest.approx(0.25, abs=1e-9)
    assert ricci_scalar(M, e[2]) == pytest.approx(0.5, abs=1e-9)
    assert ricci_scalar(M, e[0]) == pytest.approx(-0.5, abs=1e-9)


def test_abelian_is_flat(rng):
    M = example("abelian(4)")
    y, u = rng.standard_normal((2, 4))
    assert not np.any(spray_eta(M, y))
    assert not np.any(connection_matrix(M, y))
    assert not np.any(riemann_operator(M, y).matrix)


def test_koszul_agreement_riemannian(rng):
    for n in (3, 4, 5):
        for _ in range(5):
            M = random_group_model(rng, n, finsler=False)
            c, A = M.algebra.structure, M.norm.alpha.gram
            y = rng.standard_normal(n)
            scale = 1 + M.bracket_scale**2
            np.testing.assert_allclose(spray_eta(M, y), koszul_spray(c, A, y), atol=1e-10 * scale)
            np.testing.assert_allclose(connection_matrix(M, y), koszul_connection(c, A, y), atol=1e-10 * scale)
            R = riemann_operator(M, y).matrix
            assert np.max(np.abs(R - koszul_riemann_operator(c, A, y))) <= 1e-6 * scale**2


def test_flag_curvature_matches_sectional(rng):
    M = random_group_model(rng, 4, finsler=False)
    c, A = M.algebra.structure, M.norm.alpha.gram
    for _ in range(5):
        y, u = rng.standard_normal((2, 4))
        assert flag_curvature(M, y, u) == pytest.approx(sectional_curvature(c, A, u, y), abs=1e-6)


def test_solvable_spray_closed_form(rng):
    # alpha = I on [e_n, e_i] = a e_i: eta(y) = a (|ybar|^2 e_n - y_n ybar), ybar = first n-1 coordinates
    n, a = 4, 1.7
    M = riemannian_group(solvable_algebra(n, a))
    y = rng.standard_normal(n)
    ybar = np.append(y[:-1], 0.0)
    expected = a * (np.dot(ybar, ybar) * np.eye(n)[-1] - y[-1] * ybar)
    np.testing.assert_allclose(spray_eta(M, y), expected, atol=1e-12)


@pytest.mark.parametrize("a", [1.0, 2.0])
def test_solvable_constant_curvature(a, rng):
    # real hyperbolic space of curvature -a^2
    M = riemannian_group(solvable_algebra(3, a))
    for _ in range(10):
        y, u = rng.standard_normal((2, 3))
        assert flag_curvature(M, y, u) == pytest.approx(-(a**2), abs=1e-6)


def test_randers_solvable_spray_satisfies_definition(rng):
    M = solvable_cyclic_model(3, 1.0, 0.5)
    y, u = rng.standard_normal((2, 3))
    G = M.norm.fundamental_tensor(y)
    lhs = spray_eta(M, y) @ G @ u
    rhs = y @ G @ M.algebra.bracket(u, y)
    assert lhs == pytest.approx(rhs, abs=1e-12)


def test_lemma_on_center_direction():
    M = solvable_plus_center_model(3, 1.0, 0.5)
    y = np.eye(4)[3]
    ad = M.ad(y)
    assert np.linalg.norm(spray_eta(M, y)) <= 1e-10
    assert np.max(np.abs(connection_matrix(M, y) + ad)) <= 1e-10
    assert np.max(np.abs(riemann_operator(M, y).matrix + ad @ ad)) <= 1e-6


def test_connection_N_is_matrix_action(rng):
    M = random_group_model(rng, 4)
    y, v = rng.standard_normal((2, 4))
    np.testing.assert_allclose(connection_N(M, y, v), connection_matrix(M, y) @ v)


def test_finsler_spray_relations(rng):
    for _ in range(5):
        M = random_group_model(rng, 4)
        y = rng.standard_normal(4)
        eta = spray_eta(M, y)
        Nm = connection_matrix(M, y)
        # N(y, y) = eta(y) by Euler
        np.testing.assert_allclose(Nm @ y, eta, atol=1e-8 * (1 + np.linalg.norm(eta)))
        R = riemann_operator(M, y).matrix
        assert np.linalg.norm(R @ y) <= 1e-6 * (1 + np.max(np.abs(R))) * np.linalg.norm(y)
        G = M.norm.fundamental_tensor(y)
        GR = G @ R
        assert np.max(np.abs(GR - GR.T)) <= 1e-6 * (1 + np.max(np.abs(GR)))


def test_unsupported_isotropy():
    M = so3_symmetric_pair()
    # spray and connection are defined, curvature is not
    spray_eta(M, [1.0, 0.0])
    with pytest.raises(UnsupportedError):
        riemann_operator(M, [1.0, 0.0])


def test_degenerate_and_bad_input():
    M = riemannian_group(heisenberg_algebra())
    with pytest.raises(DegenerateFlagError):
        flag_curvature(M, [1, 0, 0], [2, 0, 0])
    with pytest.raises(DomainError):
        spray_eta(M, [0, 0, 0])
    with pytest.raises(InputError):
        spray_eta(M, [1, 0])


def test_model_rejects_noninvariant_norm():
    M = so3_symmetric_pair()
    with pytest.raises(InputError):
        HomogeneousModel(M.decomposition, randers(EuclideanForm.identity(2), [0.3, 0.0]))
    with pytest.raises(InputError):
        HomogeneousModel(M.decomposition, RiemannianNorm(EuclideanForm.identity(3)))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1), st.floats(0.2, 5.0))
def test_homogeneity_of_spray_and_curvature(seed, lam):
    rng = np.random.default_rng(seed)
    M = random_group_model(rng, int(rng.integers(2, 5)))
    y = rng.standard_normal(M.dim)
    eta = spray_eta(M, y)
    np.testing.assert_allclose(spray_eta(M, lam * y), lam**2 * eta, atol=1e-9 * (1 + np.max(np.abs(eta))) * lam**2)
    Nm = connection_matrix(M, y)
    np.testing.assert_allclose(connection_matrix(M, lam * y), lam * Nm, atol=1e-8 * (1 + np.max(np.abs(Nm))) * lam)
    R = riemann_operator(M, y).matrix
    R2 = riemann_operator(M, lam * y).matrix
    assert np.max(np.abs(R2 - lam**2 * R)) <= 1e-5 * (1 + np.max(np.abs(R))) * lam**2


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**32 - 1), st.floats(0.3, 3.0), st.floats(-2.0, 2.0))
def test_flag_curvature_invariances(seed, lam, mu):
    rng = np.random.default_rng(seed)
    M = random_group_model(rng, 3)
    y, u = rng.standard_normal((2, 3))
    K = flag_curvature(M, y, u)
    tol = 1e-5 * (1 + abs(K))
    # depends only on the flag span{y, u} and the flagpole direction
    assert flag_curvature(M, y, lam * u + mu * y) == pytest.approx(K, abs=tol)
    assert flag_curvature(M, lam * y, u) == pytest.approx(K, abs=tol)


def test_curvature_riemannian_random_gram(rng):
    L = solvable_algebra(3, 1.0)
    A = random_gram(rng, 3)
    M = riemannian_group(L, A)
    y = rng.standard_normal(3)
    R = riemann_operator(M, y).matrix
    assert np.max(np.abs(R - koszul_riemann_operator(L.structure, A, y))) <= 1e-6
