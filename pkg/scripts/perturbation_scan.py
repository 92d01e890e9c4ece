"""Deform [e_n, e_1] = a e_1 to (a + eps) e_1 on the solvable Randers model and track both sides of the Psi equivalence."""

import argparse
import json
from dataclasses import dataclass, field

import numpy as np

from homfinsler import HomogeneousModel, LieAlgebra, ReductiveDecomposition, SamplingPlan, check_cyclic, check_cyclic_ab_exact
from homfinsler.constructions import solvable_cyclic_model


@dataclass
class ScanConfig:
    n: int = 3
    a: float = 1.0
    c: float = 0.5
    eps: list = field(default_factory=lambda: [0.0, 1e-6, 1e-4, 1e-3, 1e-2, 1e-1, 0.5])
    seed: int = 42


def run(cfg: ScanConfig):
    base = solvable_cyclic_model(cfg.n, cfg.a, cfg.c)
    plan = SamplingPlan(seed=cfg.seed)
    rows = []
    for eps in cfg.eps:
        c = np.array(base.algebra.structure)
        c[-1, 0, 0] += eps
        c[0, -1, 0] -= eps
        M = HomogeneousModel(ReductiveDecomposition.trivial(LieAlgebra(c)), base.norm)
        cyc, psi = check_cyclic(M, plan), check_cyclic_ab_exact(M)
        rows.append({"eps": eps, "cyclic": cyc.verdict, "cyclic_residual": cyc.worst_residual,
                     "psi": psi.verdict, "psi_residual": psi.worst_residual})
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=3)
    args = p.parse_args()
    for row in run(ScanConfig(n=args.n)):
        print(json.dumps(row))


if __name__ == "__main__":
    main()
