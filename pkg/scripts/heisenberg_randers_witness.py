"""Draw random admissible Randers norms on the Heisenberg group and record how badly each fails the cyclic condition."""

import argparse
import json
from dataclasses import asdict, dataclass

import numpy as np

from homfinsler import EuclideanForm, HomogeneousModel, ReductiveDecomposition, SamplingPlan, check_cyclic, randers
from homfinsler.constructions import heisenberg_algebra


@dataclass
class WitnessConfig:
    trials: int = 200
    max_x_norm: float = 0.9
    seed: int = 7
    n_base: int = 64
    n_pairs: int = 32


def run(cfg: WitnessConfig) -> dict:
    rng = np.random.default_rng(cfg.seed)
    D = ReductiveDecomposition.trivial(heisenberg_algebra())
    plan = SamplingPlan(seed=cfg.seed, n_base=cfg.n_base, n_pairs=cfg.n_pairs)
    residuals, verdicts = [], {}
    for _ in range(cfg.trials):
        B = rng.standard_normal((3, 3))
        alpha = EuclideanForm(B @ B.T + 0.5 * np.eye(3))
        X = rng.standard_normal(3)
        X *= cfg.max_x_norm * rng.uniform() / alpha.norm(X)
        r = check_cyclic(HomogeneousModel(D, randers(alpha, X)), plan)
        residuals.append(r.worst_residual)
        verdicts[r.verdict] = verdicts.get(r.verdict, 0) + 1
    q = np.quantile(residuals, [0.0, 0.1, 0.5, 0.9, 1.0])
    return {"config": asdict(cfg), "verdicts": verdicts,
            "residual_quantiles": dict(zip(["min", "p10", "median", "p90", "max"], q.tolist()))}


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--trials", type=int, default=WitnessConfig.trials)
    p.add_argument("--seed", type=int, default=WitnessConfig.seed)
    args = p.parse_args()
    print(json.dumps(run(WitnessConfig(trials=args.trials, seed=args.seed)), indent=2))


if __name__ == "__main__":
    main()
