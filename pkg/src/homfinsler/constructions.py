"""Example models: the solvable Randers construction and a registry of test algebras."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import InputError
from .homgeo import HomogeneousModel
from .lie import LieAlgebra, ReductiveDecomposition, direct_sum
from .norms import AlphaBetaNorm, EuclideanForm, RiemannianNorm, phi_preset


def abelian_algebra(n: int) -> LieAlgebra:
    return LieAlgebra(np.zeros((n, n, n)))


def heisenberg_algebra() -> LieAlgebra:
    """[e1, e2] = e3."""
    return LieAlgebra.from_brackets(3, {(0, 1): [0, 0, 1]})


def so3_algebra() -> LieAlgebra:
    """[e1, e2] = e3, [e2, e3] = e1, [e3, e1] = e2."""
    return LieAlgebra.from_brackets(3, {(0, 1): [0, 0, 1], (1, 2): [1, 0, 0], (2, 0): [0, 1, 0]})


def solvable_algebra(n: int, a: float) -> LieAlgebra:
    """[e_n, e_i] = a e_i for i < n, all other brackets zero."""
    if n < 2:
        raise InputError("n must be at least 2")
    if not a > 0:
        raise InputError("a must be positive")
    c = np.zeros((n, n, n))
    for i in range(n - 1):
        c[n - 1, i, i] = a
        c[i, n - 1, i] = -a
    return LieAlgebra(c)


def _riemannian_group(L: LieAlgebra, name: str, chain: bool = False) -> HomogeneousModel:
    return HomogeneousModel(
        ReductiveDecomposition.trivial(L), RiemannianNorm(EuclideanForm.identity(L.dim)), chain, name
    )


def _as_int(n) -> int:
    if float(n) != int(n):
        raise InputError(f"n must be an integer, got {n}")
    return int(n)


def _check_c(c: float):
    if not (0 < abs(c) < 1):
        raise InputError(f"c must lie in (-1, 1) without 0, got {c}")


def solvable_cyclic_model(n: int, a: float, c: float, phi: str = "randers") -> HomogeneousModel:
    """Left-invariant F = alpha phi(beta/alpha) on the solvable group, X = c e_n, alpha standard.

    With the default Randers profile this is a non-Riemannian Douglas metric
    which is cyclic.
    """
    n = _as_int(n)
    _check_c(c)
    L = solvable_algebra(n, float(a))
    X = np.zeros(L.dim)
    X[-1] = c
    norm = AlphaBetaNorm(EuclideanForm.identity(L.dim), X, phi_preset(phi))
    return HomogeneousModel(ReductiveDecomposition.trivial(L), norm, True, f"solvable_cyclic({n},{a:g},{c:g})")


def solvable_plus_center_model(n: int, a: float, c: float, phi: str = "randers") -> HomogeneousModel:
    """The solvable model with a central R summand, alpha block diagonal, X = c e_n."""
    n = _as_int(n)
    _check_c(c)
    L = direct_sum(solvable_algebra(n, float(a)), abelian_algebra(1))
    X = np.zeros(L.dim)
    X[n - 1] = c
    norm = AlphaBetaNorm(EuclideanForm.identity(L.dim), X, phi_preset(phi))
    return HomogeneousModel(ReductiveDecomposition.trivial(L), norm, False, f"solvable_plus_center({n},{a:g},{c:g})")


def so3_symmetric_pair() -> HomogeneousModel:
    L = so3_algebra()
    D = ReductiveDecomposition.from_h(L, [[0, 0, 1]], [[1, 0, 0], [0, 1, 0]])
    return HomogeneousModel(D, RiemannianNorm(EuclideanForm.identity(2)), False, "so3_symmetric_pair")


@dataclass(frozen=True)
class ModelRecipe:
    name: str
    params: tuple
    build: Callable[..., HomogeneousModel]
    description: str

    def schema(self) -> str:
        return f"{self.name}({', '.join(self.params)})" if self.params else self.name


REGISTRY: dict[str, ModelRecipe] = {
    r.name: r
    for r in [
        ModelRecipe("abelian", ("n",), lambda n: _riemannian_group(abelian_algebra(_as_int(n)), f"abelian({_as_int(n)})", True),
                    "abelian R^n, Euclidean norm"),
        ModelRecipe("heisenberg3", (), lambda: _riemannian_group(heisenberg_algebra(), "heisenberg3"),
                    "Heisenberg algebra [e1,e2]=e3, Euclidean norm"),
        ModelRecipe("so3_bi_invariant", (), lambda: _riemannian_group(so3_algebra(), "so3_bi_invariant"),
                    "so(3) with the bi-invariant inner product, trivial isotropy"),
        ModelRecipe("so3_symmetric_pair", (), so3_symmetric_pair,
                    "so(3) with h = span{e3}, m = span{e1, e2}, Euclidean norm on m"),
        ModelRecipe("solvable_cyclic", ("n", "a", "c"), solvable_cyclic_model,
                    "[e_n, e_i] = a e_i, Randers F = alpha + beta with X = c e_n"),
        ModelRecipe("solvable_plus_center", ("n", "a", "c"), solvable_plus_center_model,
                    "solvable_cyclic algebra plus a central R summand, same Randers data"),
    ]
}


def parse_example_name(text: str) -> tuple[str, list[float]]:
    """Split ``"solvable_cyclic(3,1,0.5)"`` into name and parameters."""
    m = re.fullmatch(r"\s*([A-Za-z0-9_]+)\s*(?:\((.*)\))?\s*", text)
    if not m:
        raise InputError(f"cannot parse example name {text!r}")
    args = m.group(2)
    params = [float(p) for p in args.split(",")] if args and args.strip() else []
    return m.group(1), params


def example(name: str, params=None) -> HomogeneousModel:
    """Build a registered model; ``params`` is a mapping or sequence, or inline in ``name``."""
    key, inline = parse_example_name(name)
    if key not in REGISTRY:
        raise InputError(f"unknown example {key!r}; known: {sorted(REGISTRY)}")
    recipe = REGISTRY[key]
    if params is None:
        values = inline
    elif isinstance(params, dict):
        missing = [p for p in recipe.params if p not in params]
        if missing or len(params) != len(recipe.params):
            raise InputError(f"example {key!r} takes parameters {recipe.params}")
        values = [params[p] for p in recipe.params]
    else:
        values = list(params)
    if len(values) != len(recipe.params):
        raise InputError(f"example {key!r} takes parameters {recipe.params}, got {len(values)} values")
    return recipe.build(*values)
