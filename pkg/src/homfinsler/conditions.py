"""Cyclic, naturally reductive, Douglas and symmetric conditions.

Riemannian norms are decided exactly on basis triples.  Genuinely Finsler
norms are sampled: y uniform on the alpha-unit sphere and the remaining
arguments Gaussian then normalized, from a Philox generator keyed by the
plan seed.  For (alpha, beta) metrics satisfying the hypotheses of the
Douglas reduction, cyclicity is also decided exactly through the
polynomial identity Psi == 0 (:func:`check_cyclic_ab_exact`).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

import numpy as np

from .errors import FinslerError, InputError, UnsupportedError
from .homgeo import (
    HomogeneousModel,
    connection_matrix,
    flag_curvature,
    riemann_operator,
    spray_eta,
)
from .lie import ReductiveDecomposition, center, classify, unimodularity_defect
from .norms import AlphaBetaNorm, CustomNorm, phi_Phi

HOLDS, FAILS, INCONCLUSIVE = "holds", "fails", "inconclusive"
TOL_ANALYTIC = 1e-7
TOL_FD = 1e-4


@dataclass(frozen=True)
class SamplingPlan:
    seed: int = 42
    n_base: int = 256
    n_pairs: int = 64
    tol: float | None = None

    def __post_init__(self):
        if self.n_base < 1 or self.n_pairs < 1:
            raise InputError("sample counts must be at least 1")
        if self.tol is not None and not self.tol > 0:
            raise InputError("tol must be positive")
        if not 0 <= self.seed < 2**64:
            raise InputError("seed must be a 64-bit unsigned integer")

    def tol_for(self, M: HomogeneousModel) -> float:
        if self.tol is not None:
            return self.tol
        return TOL_FD if isinstance(M.norm, CustomNorm) else TOL_ANALYTIC

    def rng(self, stream: int = 0) -> np.random.Generator:
        return np.random.Generator(np.random.Philox(key=[self.seed, stream]))


@dataclass
class ConditionReport:
    condition: str
    verdict: str
    worst_residual: float
    witness: dict = field(default_factory=dict)
    samples_used: int = 0
    exact: bool = False
    tol: float = TOL_ANALYTIC
    seed: int | None = None
    extra: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    def to_dict(self) -> dict:
        d = {
            "condition": self.condition,
            "verdict": self.verdict,
            "worst_residual": float(self.worst_residual),
            "witness": {k: [float(t) for t in v] for k, v in self.witness.items()},
            "samples": int(self.samples_used),
            "seed": self.seed,
            "tol": float(self.tol),
            "exact": bool(self.exact),
        }
        if self.extra:
            d["extra"] = self.extra
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _verdict(worst: float, tol: float) -> str:
    if worst <= tol:
        return HOLDS
    if worst >= 10 * tol:
        return FAILS
    return INCONCLUSIVE


def _unit(rng, shape) -> np.ndarray:
    g = rng.standard_normal(shape)
    return g / np.linalg.norm(g, axis=-1, keepdims=True)


def _alpha_gram(M: HomogeneousModel) -> np.ndarray:
    alpha = getattr(M.norm, "alpha", None)
    return alpha.gram if alpha is not None else np.eye(M.dim)


def _sample_base(M: HomogeneousModel, rng, count: int) -> np.ndarray:
    """Directions uniform on the alpha-unit sphere."""
    A = _alpha_gram(M)
    g = rng.standard_normal((count, M.dim))
    return g / np.sqrt(np.einsum("si,ij,sj->s", g, A, g))[:, None]


def _riemannian_gram(M: HomogeneousModel) -> np.ndarray:
    return M.norm.fundamental_tensor(np.eye(M.dim)[0])


# ---------------------------------------------------------------------------
# cyclic


def _cyclic_form(M: HomogeneousModel, y, G) -> np.ndarray:
    """W with x^T W z = <[x,y]_m,z>_y + <[y,z]_m,x>_y + <[z,x]_m,y>_y."""
    cm = M.decomposition.m_structure
    BG = np.einsum("abk,b->ak", cm, y) @ G  # BG[a, c] = <[e_a, y]_m, e_c>_y
    # <[y, z], x> = -BG[z, x];  <[z, x], y> = (cm G y)[z, x]
    return BG - BG.T + (cm @ (G @ y)).T


def _cyclic_normalizer(M: HomogeneousModel, y, G, x, z) -> float:
    return (
        (1.0 + np.linalg.norm(G, 2))
        * np.linalg.norm(x)
        * np.linalg.norm(z)
        * (1.0 + np.linalg.norm(y))
        * M.bracket_scale
    )


def cyclic_residual(M: HomogeneousModel, x, y, z) -> float:
    """Normalized |<[x,y]_m,z>_y + <[y,z]_m,x>_y + <[z,x]_m,y>_y|."""
    from .homgeo import _check_y

    y = _check_y(M, y)
    x = np.asarray(x, dtype=float)
    z = np.asarray(z, dtype=float)
    G = M.norm.fundamental_tensor(y)
    norm = _cyclic_normalizer(M, y, G, x, z)
    if norm == 0.0:
        return 0.0
    return float(abs(x @ _cyclic_form(M, y, G) @ z) / norm)


def cyclic_sum_raw(M: HomogeneousModel, x, y, z) -> float:
    """The signed, unnormalized cyclic sum."""
    G = M.norm.fundamental_tensor(np.asarray(y, dtype=float))
    return float(np.asarray(x) @ _cyclic_form(M, np.asarray(y, dtype=float), G) @ np.asarray(z))


def _trilinear(M: HomogeneousModel, A: np.ndarray) -> np.ndarray:
    """T[a, b, c] = <[e_a, e_b]_m, e_c> for a constant inner product A."""
    return M.decomposition.m_structure @ A


def _riemannian_cyclic_exact(M: HomogeneousModel, tol: float) -> ConditionReport:
    A = _riemannian_gram(M)
    T = _trilinear(M, A)
    S = T + np.transpose(T, (1, 2, 0)) + np.transpose(T, (2, 0, 1))
    norm = (1.0 + np.linalg.norm(A, 2)) * M.bracket_scale
    resid = np.abs(S) / norm
    idx = np.unravel_index(int(np.argmax(resid)), resid.shape) if resid.size else (0, 0, 0)
    eye = np.eye(M.dim)
    report = ConditionReport(
        "cyclic",
        _verdict(float(resid.max(initial=0.0)), tol),
        float(resid.max(initial=0.0)),
        witness={"y": eye[idx[1]], "x": eye[idx[0]], "z": eye[idx[2]]},
        samples_used=M.dim**3,
        exact=True,
        tol=tol,
    )
    crit = proposition_criterion(M)
    if crit is not None:
        report.extra["triangular_criterion"] = crit
    return report


def check_cyclic(M: HomogeneousModel, plan: SamplingPlan = SamplingPlan(), method: str = "auto") -> ConditionReport:
    """Decide the cyclic condition.

    ``method="auto"`` uses the exact trilinear check for Riemannian norms
    and sampling otherwise; ``"sampled"`` forces sampling.
    """
    tol = plan.tol_for(M)
    if method not in ("auto", "sampled", "exact"):
        raise InputError(f"unknown method {method!r}")
    if method != "sampled" and M.norm.is_riemannian:
        report = _riemannian_cyclic_exact(M, tol)
        report.seed = plan.seed
        return report
    if method == "exact":
        return check_cyclic_ab_exact(M, tol)

    rng = plan.rng(0)
    ys = _sample_base(M, rng, plan.n_base)
    xs = _unit(rng, (plan.n_base, plan.n_pairs, M.dim))
    zs = _unit(rng, (plan.n_base, plan.n_pairs, M.dim))
    worst, witness = -1.0, None
    for s, y in enumerate(ys):
        G = M.norm.fundamental_tensor(y)
        W = _cyclic_form(M, y, G)
        vals = np.abs(np.einsum("pi,ij,pj->p", xs[s], W, zs[s]))
        norm = (1.0 + np.linalg.norm(G, 2)) * (1.0 + np.linalg.norm(y)) * M.bracket_scale
        vals = vals / norm
        p = int(np.argmax(vals))
        if vals[p] > worst:
            worst, witness = float(vals[p]), {"y": y, "x": xs[s, p], "z": zs[s, p]}
    return ConditionReport(
        "cyclic", _verdict(worst, tol), worst, witness,
        samples_used=plan.n_base * plan.n_pairs, exact=False, tol=tol, seed=plan.seed,
    )


def proposition_criterion(M: HomogeneousModel) -> dict | None:
    """Structure-constant criterion c_ik^j = c_jk^i (i < j < k) for a triangular orthonormal basis.

    Applies only to Lie groups whose basis was declared adapted to a chain
    of ideals span{e_1..e_i}, with alpha the identity in that basis.
    Returns None when not applicable.
    """
    if not M.chain_basis_declared or not M.decomposition.is_group:
        return None
    L = M.algebra
    n = L.dim
    c = L.structure
    tol = 1e-10 * (1.0 + L.scale)
    A = _alpha_gram(M)
    if not np.allclose(A, np.eye(n), atol=1e-12):
        return {"applicable": False, "reason": "alpha is not orthonormal in the declared basis"}
    # span{e_1..e_b} is an ideal for every b  <=>  c[a, b, k] = 0 whenever k > b
    k_idx = np.arange(n)
    mask = k_idx[None, None, :] > k_idx[None, :, None]
    if np.max(np.abs(c[np.broadcast_to(mask, c.shape)]), initial=0.0) > tol:
        return {"applicable": False, "reason": "declared basis is not adapted to a chain of ideals"}
    worst = 0.0
    for i, j, k in itertools.combinations(range(n), 3):
        worst = max(worst, abs(c[i, k, j] - c[j, k, i]))
    return {"applicable": True, "holds": bool(worst <= tol), "worst_residual": float(worst)}


# ---------------------------------------------------------------------------
# (alpha, beta): Douglas, Psi


def _require_ab(M: HomogeneousModel) -> AlphaBetaNorm:
    if not isinstance(M.norm, AlphaBetaNorm):
        raise UnsupportedError("condition requires an (alpha, beta) norm")
    return M.norm


def check_douglas_ab(M: HomogeneousModel, tol: float = TOL_ANALYTIC) -> ConditionReport:
    """Exact check of alpha([e_i, e_j]_m, X) = 0 over basis pairs."""
    N = _require_ab(M)
    if not np.any(N.X):
        raise InputError("Douglas check needs X != 0")
    vals = M.decomposition.m_structure @ N.beta
    norm = np.linalg.norm(N.beta) * M.bracket_scale
    resid = np.abs(vals) / norm
    worst = float(resid.max(initial=0.0))
    i, j = np.unravel_index(int(np.argmax(resid)), resid.shape) if resid.size else (0, 0)
    eye = np.eye(M.dim)
    return ConditionReport(
        "douglas", _verdict(worst, tol), worst, {"x": eye[i], "z": eye[j]},
        samples_used=M.dim**2, exact=True, tol=tol,
    )


def psi_value(A: AlphaBetaNorm, D: ReductiveDecomposition, u, v, y) -> float:
    """Psi(u, v, y); its vanishing decides cyclicity of Douglas (alpha, beta) metrics."""
    g = A.alpha.gram
    X = A.X
    u, v, y = (np.asarray(t, dtype=float) for t in (u, v, y))
    cm = D.m_structure
    br = lambda p, q: np.einsum("i,j,ijk->k", p, q, cm)
    al = lambda p, q: p @ g @ q
    yy, Xy = al(y, y), al(X, y)
    return float(
        al(y, br(y, u)) * (yy * al(X, v) - al(y, v) * Xy)
        + al(y, br(v, y)) * (yy * al(X, u) - al(y, u) * Xy)
    )


def _sym4(T: np.ndarray) -> np.ndarray:
    return sum(np.transpose(T, p) for p in itertools.permutations(range(4))) / 24.0


def psi_coefficients(A: AlphaBetaNorm, D: ReductiveDecomposition) -> np.ndarray:
    """Symmetric quartic coefficients of y -> Psi(e_a, e_b, y), shape (d, d, d, d, d, d)."""
    g = A.alpha.gram
    beta = A.beta
    cm = D.m_structure
    d = g.shape[0]
    # alpha(y, [y, e_a]) = y^T Q[a] y with Q[a][p, q] = sum_k g[p, k] c[q, a, k]
    Q = np.einsum("pk,qak->apq", g, cm)
    Q = 0.5 * (Q + np.transpose(Q, (0, 2, 1)))
    # alpha(y,y) alpha(X, e_b) - alpha(y, e_b) alpha(X, y) = y^T R[b] y
    ge = g  # columns g e_b
    R = np.einsum("b,pq->bpq", beta, g) - np.einsum("pb,q->bpq", ge, beta)
    R = 0.5 * (R + np.transpose(R, (0, 2, 1)))
    out = np.empty((d, d) + (d,) * 4)
    for a in range(d):
        for b in range(d):
            # Psi(e_a, e_b) = Q[a] R[b] - Q[b] R[a]   since alpha(y,[e_b,y]) = -y^T Q[b] y
            T = np.einsum("pq,rs->pqrs", Q[a], R[b]) - np.einsum("pq,rs->pqrs", Q[b], R[a])
            out[a, b] = _sym4(T)
    return out


def douglas_hypotheses(M: HomogeneousModel) -> dict:
    """Check alpha cyclic, F Douglas and F non-Riemannian for an (alpha, beta) model."""
    N = _require_ab(M)
    alpha_model = HomogeneousModel(M.decomposition, _as_riemannian(N), M.chain_basis_declared)
    alpha_cyclic = _riemannian_cyclic_exact(alpha_model, TOL_ANALYTIC).holds
    non_riemannian = bool(np.any(N.X)) and not N.is_riemannian
    if non_riemannian:
        r = N.profile.grid() * (N.b / N.profile.b0)
        Phi = np.array([phi_Phi(N.profile, t) for t in r])
        non_riemannian = bool(np.max(np.abs(Phi)) > 1e-9)
    douglas = bool(np.any(N.X)) and check_douglas_ab(M).holds
    return {
        "alpha_cyclic": alpha_cyclic,
        "douglas": douglas,
        "non_riemannian": non_riemannian,
        "all": alpha_cyclic and douglas and non_riemannian,
    }


def _as_riemannian(N: AlphaBetaNorm):
    from .norms import RiemannianNorm

    return RiemannianNorm(N.alpha)


def check_cyclic_ab_exact(M: HomogeneousModel, tol: float = TOL_ANALYTIC) -> ConditionReport:
    """Exact cyclic decision for Douglas (alpha, beta) metrics over a cyclic alpha.

    Under those hypotheses F is cyclic iff the polynomial Psi vanishes
    identically, which is decided on its symmetric coefficient tensor.
    """
    N = _require_ab(M)
    hyp = douglas_hypotheses(M)
    if not hyp["all"]:
        raise UnsupportedError(f"exact (alpha, beta) path needs alpha cyclic, Douglas and non-Riemannian: {hyp}")
    coeffs = psi_coefficients(N, M.decomposition)
    g = N.alpha.gram
    scale = np.linalg.norm(g, 2) ** 2 * np.linalg.norm(N.beta) * M.bracket_scale
    resid = np.abs(coeffs) / scale
    worst = float(resid.max(initial=0.0))
    idx = np.unravel_index(int(np.argmax(resid)), resid.shape)
    eye = np.eye(M.dim)
    return ConditionReport(
        "cyclic", _verdict(worst, tol), worst,
        {"x": eye[idx[0]], "z": eye[idx[1]], "y": eye[idx[2]]},
        samples_used=int(coeffs.size), exact=True, tol=tol, extra={"method": "psi_polynomial"},
    )


# ---------------------------------------------------------------------------
# naturally reductive, symmetric


def _natred_form(M: HomogeneousModel, y, G, C) -> np.ndarray:
    """Z[a, b, c] = <[e_a,e_b]_m, e_c>_y + <[e_a,e_c]_m, e_b>_y + 2 C_y([e_a,y]_m, e_b, e_c)."""
    T = _trilinear(M, G)
    B = np.einsum("abk,b->ak", M.decomposition.m_structure, y)
    return T + np.transpose(T, (0, 2, 1)) + 2.0 * np.einsum("bck,ak->abc", C, B)


def check_naturally_reductive(M: HomogeneousModel, plan: SamplingPlan = SamplingPlan(), method: str = "auto") -> ConditionReport:
    tol = plan.tol_for(M)
    eye = np.eye(M.dim)
    if method != "sampled" and M.norm.is_riemannian:
        A = _riemannian_gram(M)
        Z = _natred_form(M, eye[0], A, np.zeros((M.dim,) * 3))
        resid = np.abs(Z) / ((1.0 + np.linalg.norm(A, 2)) * M.bracket_scale)
        worst = float(resid.max(initial=0.0))
        a, b, c = np.unravel_index(int(np.argmax(resid)), resid.shape) if resid.size else (0, 0, 0)
        return ConditionReport(
            "naturally_reductive", _verdict(worst, tol), worst,
            {"x": eye[a], "u": eye[b], "v": eye[c]},
            samples_used=M.dim**3, exact=True, tol=tol, seed=plan.seed,
        )
    rng = plan.rng(1)
    ys = _sample_base(M, rng, plan.n_base)
    xs = _unit(rng, (plan.n_base, plan.n_pairs, M.dim))
    us = _unit(rng, (plan.n_base, plan.n_pairs, M.dim))
    vs = _unit(rng, (plan.n_base, plan.n_pairs, M.dim))
    worst, witness = -1.0, None
    for s, y in enumerate(ys):
        G = M.norm.fundamental_tensor(y)
        C = M.norm.cartan_tensor(y)
        Z = _natred_form(M, y, G, C)
        vals = np.abs(np.einsum("abc,pa,pb,pc->p", Z, xs[s], us[s], vs[s]))
        vals = vals / ((1.0 + np.linalg.norm(G, 2)) * (1.0 + np.linalg.norm(y)) * M.bracket_scale)
        p = int(np.argmax(vals))
        if vals[p] > worst:
            worst, witness = float(vals[p]), {"y": y, "x": xs[s, p], "u": us[s, p], "v": vs[s, p]}
    return ConditionReport(
        "naturally_reductive", _verdict(worst, tol), worst, witness,
        samples_used=plan.n_base * plan.n_pairs, exact=False, tol=tol, seed=plan.seed,
    )


def natred_residual(M: HomogeneousModel, y, x, u, v) -> float:
    y = np.asarray(y, dtype=float)
    G = M.norm.fundamental_tensor(y)
    Z = _natred_form(M, y, G, M.norm.cartan_tensor(y))
    norm = (1.0 + np.linalg.norm(G, 2)) * (1.0 + np.linalg.norm(y)) * M.bracket_scale
    return float(abs(np.einsum("abc,a,b,c->", Z, x, u, v)) / (norm * np.linalg.norm(x) * np.linalg.norm(u) * np.linalg.norm(v)))


def check_symmetric(D: ReductiveDecomposition, tol: float = TOL_ANALYTIC) -> ConditionReport:
    """[m, m] contained in h, checked on basis pairs."""
    cm = D.m_structure
    scale = D.algebra.scale or 1.0
    resid = np.linalg.norm(cm, axis=-1) / scale if cm.size else np.zeros((0, 0))
    worst = float(resid.max(initial=0.0))
    d = D.m_dim
    i, j = np.unravel_index(int(np.argmax(resid)), resid.shape) if resid.size else (0, 0)
    eye = np.eye(d) if d else np.zeros((1, 0))
    return ConditionReport(
        "symmetric", _verdict(worst, tol), worst,
        {"x": eye[i], "z": eye[j]} if d else {},
        samples_used=d * d, exact=True, tol=tol,
    )


# ---------------------------------------------------------------------------
# theorem cross-checks


def _subcheck(status: str, **details) -> dict:
    return {"status": status, **details}


def _g_dot_derived(M: HomogeneousModel, y, G) -> float:
    """max |<[e_a, e_b], y>_y| normalized; zero iff <[g, g], y>_y = 0."""
    T1 = M.decomposition.m_structure @ (G @ y)
    return float(np.max(np.abs(T1), initial=0.0) / ((1.0 + np.linalg.norm(G, 2)) * np.linalg.norm(y) * M.bracket_scale))


def lemma_checks(M: HomogeneousModel, y) -> dict:
    """Residuals of the conclusions eta(y)=0, N(y,.)=-ad(y), R_y=-ad(y)^2, ad(y) g_y-self-adjoint."""
    y = np.asarray(y, dtype=float)
    G = M.norm.fundamental_tensor(y)
    ad = M.ad(y)
    GA = G @ ad
    out = {
        "eta": float(np.linalg.norm(spray_eta(M, y))),
        "N_plus_ad": float(np.max(np.abs(connection_matrix(M, y) + ad))),
        "self_adjoint": float(np.max(np.abs(GA - GA.T))),
    }
    if M.decomposition.is_group:
        out["R_plus_ad2"] = float(np.max(np.abs(riemann_operator(M, y).matrix + ad @ ad)))
    return out


LEMMA_TOLS = {"eta": 1e-8, "N_plus_ad": 1e-8, "self_adjoint": 1e-8, "R_plus_ad2": 1e-5}


def theorem_suite(M: HomogeneousModel, plan: SamplingPlan = SamplingPlan()) -> dict:
    """Run every theorem-level implication on one model.

    Each subcheck reports ``holds`` (the implication was exercised and is
    consistent), ``vacuous`` (its premise is false), ``informational``
    (computed without a premise to assert), ``inconclusive`` or
    ``contradiction``.
    """
    L = M.algebra
    cls = classify(L)
    tol = plan.tol_for(M)
    cyc = check_cyclic(M, plan)
    nat = check_naturally_reductive(M, plan)
    sym = check_symmetric(M.decomposition)
    report = {
        "model": M.name,
        "plan": {"seed": plan.seed, "n_base": plan.n_base, "n_pairs": plan.n_pairs, "tol": tol},
        "cyclic": cyc.verdict,
        "naturally_reductive": nat.verdict,
        "symmetric": sym.verdict,
        "abelian": cls.abelian,
        "nilpotent": cls.nilpotent,
        "unimodularity_defect": float(np.max(np.abs(unimodularity_defect(L)), initial=0.0)),
        "subchecks": {},
    }
    sub = report["subchecks"]

    # (a) cyclic and naturally reductive => symmetric
    if cyc.holds and nat.holds:
        sub["cyclic_natred_symmetric"] = _subcheck(HOLDS if sym.holds else "contradiction", symmetric=sym.verdict)
    elif INCONCLUSIVE in (cyc.verdict, nat.verdict):
        sub["cyclic_natred_symmetric"] = _subcheck(INCONCLUSIVE)
    else:
        sub["cyclic_natred_symmetric"] = _subcheck("vacuous")

    # (b) y with <[g,g], y>_y = 0 on a cyclic group
    sub["orthogonal_to_derived"] = _lemma_subcheck(M, plan, cyc, tol)

    # (c) Douglas (alpha, beta): cyclic <=> Psi == 0
    if isinstance(M.norm, AlphaBetaNorm) and np.any(M.norm.X):
        hyp = douglas_hypotheses(M)
        if hyp["all"]:
            exact = check_cyclic_ab_exact(M, tol)
            if cyc.verdict == INCONCLUSIVE:
                status = INCONCLUSIVE
            else:
                status = HOLDS if cyc.holds == exact.holds else "contradiction"
            sub["psi_equivalence"] = _subcheck(
                status, sampled=cyc.verdict, psi_identically_zero=exact.holds, psi_residual=exact.worst_residual
            )
        else:
            sub["psi_equivalence"] = _subcheck("vacuous", hypotheses=hyp)
    else:
        sub["psi_equivalence"] = _subcheck("vacuous")

    # (d) cyclic non-abelian group => some flag curvature is nonzero
    if cyc.holds and not cls.abelian and M.decomposition.is_group:
        rng = plan.rng(3)
        best = 0.0
        count = min(plan.n_base, 64)
        for y, u in zip(_sample_base(M, rng, count), rng.standard_normal((count, M.dim))):
            try:
                best = max(best, abs(flag_curvature(M, y, u)))
            except FinslerError:
                continue
        sub["flat_implies_abelian"] = _subcheck(
            HOLDS if best > 10 * TOL_FD else "contradiction", max_abs_flag_curvature=best
        )
    else:
        sub["flat_implies_abelian"] = _subcheck("vacuous")

    # nilpotent non-abelian => not cyclic
    if cls.nilpotent and not cls.abelian and M.decomposition.is_group:
        sub["nilpotent_not_cyclic"] = _subcheck(
            "contradiction" if cyc.holds else (HOLDS if cyc.verdict == FAILS else INCONCLUSIVE),
            cyclic=cyc.verdict,
        )
    else:
        sub["nilpotent_not_cyclic"] = _subcheck("vacuous")

    statuses = [s["status"] for s in sub.values()]
    report["contradictions"] = statuses.count("contradiction")
    report["status"] = (
        "contradiction" if "contradiction" in statuses else INCONCLUSIVE if INCONCLUSIVE in statuses else "consistent"
    )
    return report


def _lemma_subcheck(M: HomogeneousModel, plan: SamplingPlan, cyc: ConditionReport, tol: float) -> dict:
    if not M.decomposition.is_group:
        return _subcheck("vacuous", reason="lemma is stated for Lie groups")
    candidates = [("center", v) for v in center(M.algebra).basis]
    rng = plan.rng(2)
    candidates += [("sampled", y) for y in _sample_base(M, rng, min(plan.n_base, 32))]
    results = []
    contradiction = False
    for origin, y in candidates:
        G = M.norm.fundamental_tensor(y)
        premise = _g_dot_derived(M, y, G)
        if premise > tol:
            if origin == "center" and cyc.holds:
                # central vectors must satisfy the premise on a cyclic group
                contradiction = True
                results.append({"y": y.tolist(), "origin": origin, "premise": premise, "ok": False})
            continue
        res = lemma_checks(M, y)
        ok = all(res[k] <= LEMMA_TOLS[k] * (1.0 + M.bracket_scale) ** 2 for k in res)
        if cyc.holds and not ok:
            contradiction = True
        results.append({"y": y.tolist(), "origin": origin, "premise": premise, "residuals": res, "ok": ok})
    if not results:
        return _subcheck("vacuous", reason="no direction satisfies the premise")
    if contradiction:
        return _subcheck("contradiction", directions=results)
    return _subcheck(HOLDS if cyc.holds else "informational", directions=results)
