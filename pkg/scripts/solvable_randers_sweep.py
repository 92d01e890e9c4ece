"""Sweep the solvable (alpha, beta) construction over n, a, c and profile.

For each configuration records the sampled cyclic residual, the exact Psi
decision, the naturally reductive residual and the range of sampled flag
curvatures.  Writes one JSON object per line.
"""

import argparse
import itertools
import json
import sys
from dataclasses import asdict, dataclass, field

import numpy as np

from homfinsler import SamplingPlan, check_cyclic, check_cyclic_ab_exact, check_naturally_reductive, flag_curvature
from homfinsler.constructions import solvable_cyclic_model
from homfinsler.norms import phi_preset


@dataclass
class SweepConfig:
    dims: list = field(default_factory=lambda: [2, 3, 4, 5])
    a_values: list = field(default_factory=lambda: [0.5, 1.0, 2.0])
    c_values: list = field(default_factory=lambda: [-0.4, 0.2, 0.45])
    profiles: list = field(default_factory=lambda: ["randers", "matsumoto"])
    seed: int = 42
    n_base: int = 64
    n_pairs: int = 32
    n_flags: int = 32


def run(cfg: SweepConfig, out=sys.stdout):
    plan = SamplingPlan(seed=cfg.seed, n_base=cfg.n_base, n_pairs=cfg.n_pairs)
    rng = plan.rng(10)
    for n, a, c, phi in itertools.product(cfg.dims, cfg.a_values, cfg.c_values, cfg.profiles):
        if abs(c) >= phi_preset(phi).b0:
            continue
        M = solvable_cyclic_model(n, a, c, phi)
        cyc = check_cyclic(M, plan)
        exact = check_cyclic_ab_exact(M)
        nat = check_naturally_reductive(M, plan)
        flags = [flag_curvature(M, y, u) for y, u in rng.standard_normal((cfg.n_flags, 2, n))] if n > 1 else []
        row = {
            "n": n, "a": a, "c": c, "phi": phi,
            "cyclic": cyc.verdict, "cyclic_residual": cyc.worst_residual,
            "psi_zero": exact.holds, "psi_residual": exact.worst_residual,
            "natred": nat.verdict, "natred_residual": nat.worst_residual,
            "flag_min": min(flags), "flag_max": max(flags),
        }
        out.write(json.dumps(row) + "\n")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=SweepConfig.seed)
    p.add_argument("--samples", type=int, default=SweepConfig.n_base)
    p.add_argument("--pairs", type=int, default=SweepConfig.n_pairs)
    args = p.parse_args()
    cfg = SweepConfig(seed=args.seed, n_base=args.samples, n_pairs=args.pairs)
    print(json.dumps({"config": asdict(cfg)}))
    run(cfg)


if __name__ == "__main__":
    main()
