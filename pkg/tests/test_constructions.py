import numpy as np
import pytest

from homfinsler.conditions import (
    HOLDS,
    SamplingPlan,
    check_cyclic,
    check_douglas_ab,
    check_naturally_reductive,
    check_symmetric,
    douglas_hypotheses,
    proposition_criterion,
    theorem_suite,
)
from homfinsler.constructions import REGISTRY, example, parse_example_name, solvable_cyclic_model
from homfinsler.errors import InputError
from homfinsler.homgeo import HomogeneousModel
from homfinsler.lie import ReductiveDecomposition, center, classify, jacobi_residual
from homfinsler.norms import RiemannianNorm

SMALL = SamplingPlan(n_base=32, n_pairs=16)


def test_solvable_brackets():
    M = solvable_cyclic_model(4, 2.0, 0.5)
    e = np.eye(4)
    for i in range(3):
        np.testing.assert_array_equal(M.algebra.bracket(e[3], e[i]), 2.0 * e[i])
        for j in range(3):
            assert not np.any(M.algebra.bracket(e[i], e[j]))
    np.testing.assert_array_equal(M.norm.alpha.gram, np.eye(4))
    np.testing.assert_array_equal(M.norm.X, 0.5 * e[3])
    assert M.decomposition.is_group and M.chain_basis_declared


def test_solvable_n3_cyclic_and_douglas():
    M = solvable_cyclic_model(3, 1.0, 0.5)
    assert check_cyclic(M, SMALL).verdict == HOLDS
    assert check_douglas_ab(M).verdict == HOLDS


@pytest.mark.parametrize("args", [(2, 1.0, 0.0), (3, 1.0, 1.0), (3, 1.0, -1.5), (3, 0.0, 0.5), (1, 1.0, 0.5), (2.5, 1.0, 0.5)])
def test_solvable_parameter_errors(args):
    with pytest.raises(InputError):
        solvable_cyclic_model(*args)


def test_solvable_alpha_satisfies_triangular_criterion():
    M = solvable_cyclic_model(4, 2.0, -0.3)
    alpha_model = HomogeneousModel(M.decomposition, RiemannianNorm(M.norm.alpha), True)
    assert proposition_criterion(alpha_model)["holds"]


@pytest.mark.parametrize("n,a,c", [(2, 1.0, 0.5), (3, 2.0, -0.3), (5, 0.5, 0.9)])
def test_hypothesis_chain(n, a, c):
    M = solvable_cyclic_model(n, a, c)
    assert douglas_hypotheses(M)["all"]


def test_registry_examples():
    M = example("abelian(5)")
    assert classify(M.algebra).abelian
    for r in (check_cyclic(M), check_naturally_reductive(M), check_symmetric(M.decomposition)):
        assert r.verdict == HOLDS
    H = example("heisenberg3")
    cls = classify(H.algebra)
    assert cls.nilpotent and not cls.abelian
    assert check_cyclic(H).verdict == "fails"
    assert center(example("solvable_plus_center(3,1,0.5)").algebra).dim == 1


def test_example_parameter_forms():
    a = example("solvable_cyclic", {"n": 3, "a": 1, "c": 0.5})
    b = example("solvable_cyclic", [3, 1, 0.5])
    c = example("solvable_cyclic(3,1,0.5)")
    for m in (b, c):
        np.testing.assert_array_equal(m.algebra.structure, a.algebra.structure)
        np.testing.assert_array_equal(m.norm.X, a.norm.X)
    with pytest.raises(InputError):
        example("nope")
    with pytest.raises(InputError):
        example("solvable_cyclic", {"n": 3})
    with pytest.raises(InputError):
        example("heisenberg3(1)")
    assert parse_example_name(" abelian ( 4 ) ") == ("abelian", [4.0])


def test_every_recipe_is_valid_and_consistent():
    defaults = {"abelian": [3], "solvable_cyclic": [3, 1, 0.5], "solvable_plus_center": [3, 1, 0.5]}
    for name, recipe in REGISTRY.items():
        M = recipe.build(*defaults.get(name, []))
        assert jacobi_residual(M.algebra) <= 1e-12
        # rebuilding the decomposition from its own h must succeed
        ReductiveDecomposition(M.algebra, M.decomposition.h, M.decomposition.m)
        assert theorem_suite(M, SMALL)["status"] == "consistent"
        assert recipe.schema().startswith(name)


def test_so3_pair_is_symmetric():
    M = example("so3_symmetric_pair")
    assert M.decomposition.h.dim == 1 and M.dim == 2
    assert check_symmetric(M.decomposition).verdict == HOLDS
    assert check_cyclic(M).verdict == HOLDS
    assert check_naturally_reductive(M).verdict == HOLDS
