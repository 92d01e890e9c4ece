"""Homogeneous Finsler metrics from Lie-algebra data: sprays, curvature and the cyclic condition."""

from .conditions import (
    ConditionReport,
    SamplingPlan,
    check_cyclic,
    check_cyclic_ab_exact,
    check_douglas_ab,
    check_naturally_reductive,
    check_symmetric,
    cyclic_residual,
    psi_value,
    theorem_suite,
)
from .constructions import example, solvable_cyclic_model
from .errors import FinslerError
from .homgeo import (
    CurvatureOperator,
    HomogeneousModel,
    connection_N,
    flag_curvature,
    ricci_scalar,
    riemann_operator,
    spray_eta,
)
from .lie import LieAlgebra, ReductiveDecomposition, Subspace, bracket, bracket_m, center, classify
from .norms import AlphaBetaNorm, CustomNorm, EuclideanForm, PhiProfile, RiemannianNorm, phi_preset, randers

__version__ = "0.1.0"
