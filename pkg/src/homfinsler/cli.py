"""Command line interface and the JSON model document format.

Model documents use 1-based indices, matching the basis e_1 .. e_n::

    {
      "dim": 3,
      "basis": ["e1", "e2", "e3"],
      "brackets": [{"i": 3, "j": 1, "k": 1, "value": 1.0}, ...],
      "h_basis": [[0, 0, 1]],                       # optional
      "metric": {"kind": "randers", "alpha": [[...]], "x": [0, 0, 0.5],
                 "phi": {"name": "randers", "params": []}},
      "chain_basis_declared": true
    }

Exit codes: 0 holds / success, 1 fails, 2 inconclusive, 3 input error,
4 unsupported configuration, 5 other numerical error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass

import numpy as np

from . import conditions as cond
from .constructions import REGISTRY, example
from .errors import DocumentError, FinslerError, InputError, UnsupportedError
from .homgeo import (
    HomogeneousModel,
    connection_matrix,
    flag_curvature,
    ricci_scalar,
    riemann_operator,
    spray_eta,
)
from .lie import LieAlgebra, ReductiveDecomposition
from .norms import AlphaBetaNorm, EuclideanForm, RiemannianNorm, phi_preset

EXIT_HOLDS, EXIT_FAILS, EXIT_INCONCLUSIVE = 0, 1, 2
EXIT_INPUT, EXIT_UNSUPPORTED, EXIT_NUMERIC = 3, 4, 5
METRIC_KINDS = ("riemannian", "alpha_beta", "randers")


@dataclass
class ModelDocument:
    dim: int
    basis: list
    brackets: list
    metric: dict
    h_basis: list | None = None
    chain_basis_declared: bool = False
    name: str = ""

    def to_dict(self) -> dict:
        d = asdict(self)
        if d["h_basis"] is None:
            del d["h_basis"]
        if not d["name"]:
            del d["name"]
        return d


def _field(d: dict, key: str, path: str, required: bool = True, default=None):
    if key not in d:
        if required:
            raise DocumentError(f"{path}.{key}" if path else key, "missing required field")
        return default
    return d[key]


def _matrix(value, shape, path: str) -> np.ndarray:
    try:
        arr = np.asarray(value, dtype=float)
    except (TypeError, ValueError):
        raise DocumentError(path, "expected numbers") from None
    if arr.shape != shape:
        raise DocumentError(path, f"expected shape {shape}, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise DocumentError(path, "non-finite entries")
    return arr


def load_document(data) -> ModelDocument:
    """Validate the structure of a parsed JSON document (a dict or a JSON string)."""
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise DocumentError("$", f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise DocumentError("$", "document must be a JSON object")
    dim = _field(data, "dim", "")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise DocumentError("dim", "must be a positive integer")
    basis = _field(data, "basis", "", required=False, default=[f"e{i + 1}" for i in range(dim)])
    if not isinstance(basis, list) or len(basis) != dim or not all(isinstance(b, str) for b in basis):
        raise DocumentError("basis", f"must be a list of {dim} labels")
    brackets = _field(data, "brackets", "")
    if not isinstance(brackets, list):
        raise DocumentError("brackets", "must be a list")
    seen = set()
    for n, entry in enumerate(brackets):
        path = f"brackets[{n}]"
        if not isinstance(entry, dict):
            raise DocumentError(path, "must be an object {i, j, k, value}")
        idx = []
        for key in ("i", "j", "k"):
            v = _field(entry, key, path)
            if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= dim:
                raise DocumentError(f"{path}.{key}", f"index must be an integer in 1..{dim}")
            idx.append(v)
        value = _field(entry, "value", path)
        if not isinstance(value, (int, float)) or isinstance(value, bool) or not np.isfinite(value):
            raise DocumentError(f"{path}.value", "must be a finite number")
        i, j, k = idx
        if i == j:
            raise DocumentError(path, "i == j (the bracket [e_i, e_i] is zero by antisymmetry)")
        key = (min(i, j), max(i, j), k)
        if key in seen:
            raise DocumentError(path, f"duplicate entry for [e{key[0]}, e{key[1]}] component {k}")
        seen.add(key)
    h_basis = _field(data, "h_basis", "", required=False)
    h_dim = 0
    if h_basis is not None:
        if not isinstance(h_basis, list):
            raise DocumentError("h_basis", "must be a list of vectors")
        h_dim = len(h_basis)
        if h_dim:
            _matrix(h_basis, (h_dim, dim), "h_basis")
    metric = _field(data, "metric", "")
    if not isinstance(metric, dict):
        raise DocumentError("metric", "must be an object")
    kind = _field(metric, "kind", "metric")
    if kind not in METRIC_KINDS:
        raise DocumentError("metric.kind", f"must be one of {METRIC_KINDS}")
    m_dim = dim - h_dim
    if "alpha" in metric:
        _matrix(metric["alpha"], (m_dim, m_dim), "metric.alpha")
    if kind != "riemannian":
        _matrix(_field(metric, "x", "metric"), (m_dim,), "metric.x")
    if kind == "alpha_beta":
        phi = _field(metric, "phi", "metric")
        if not isinstance(phi, dict) or "name" not in phi:
            raise DocumentError("metric.phi", "must be an object {name, params}")
    chain = _field(data, "chain_basis_declared", "", required=False, default=False)
    if not isinstance(chain, bool):
        raise DocumentError("chain_basis_declared", "must be a boolean")
    name = _field(data, "name", "", required=False, default="")
    return ModelDocument(dim, list(basis), brackets, metric, h_basis, chain, name)


def dump_document(doc: ModelDocument) -> str:
    return json.dumps(doc.to_dict(), indent=2, sort_keys=True)


def _at(path: str, exc: FinslerError) -> FinslerError:
    if not getattr(exc, "path", None):
        exc.path = path
    return exc


def build_model(doc: ModelDocument) -> HomogeneousModel:
    """Turn a validated document into a model, enforcing every invariant.

    Errors keep their specific type and gain a ``path`` naming the field.
    """
    n = doc.dim
    c = np.zeros((n, n, n))
    for e in doc.brackets:
        i, j, k = e["i"] - 1, e["j"] - 1, e["k"] - 1
        c[i, j, k] = e["value"]
        c[j, i, k] = -e["value"]
    try:
        L = LieAlgebra(c, tuple(doc.basis))
    except FinslerError as exc:
        raise _at("brackets", exc) from None
    try:
        D = ReductiveDecomposition.from_h(L, doc.h_basis or [])
    except FinslerError as exc:
        raise _at("h_basis", exc) from None
    metric = doc.metric
    try:
        alpha = EuclideanForm(np.asarray(metric.get("alpha", np.eye(D.m_dim)), dtype=float))
    except FinslerError as exc:
        raise _at("metric.alpha", exc) from None
    kind = metric["kind"]
    try:
        if kind == "riemannian":
            norm = RiemannianNorm(alpha)
        else:
            X = np.asarray(metric["x"], dtype=float)
            if kind == "randers":
                profile = phi_preset("randers")
            else:
                phi = metric["phi"]
                profile = phi_preset(phi["name"], *phi.get("params", []))
            norm = AlphaBetaNorm(alpha, X, profile)
    except FinslerError as exc:
        raise _at("metric.x" if kind != "riemannian" else "metric", exc) from None
    try:
        return HomogeneousModel(D, norm, doc.chain_basis_declared, doc.name)
    except FinslerError as exc:
        raise _at("metric", exc) from None


def parse_model(text) -> HomogeneousModel:
    return build_model(load_document(text))


def document_from_model(M: HomogeneousModel) -> ModelDocument:
    """Serialize a model whose norm is Riemannian or uses a preset profile."""
    L = M.algebra
    c = L.structure
    brackets = [
        {"i": i + 1, "j": j + 1, "k": k + 1, "value": float(c[i, j, k])}
        for i in range(L.dim)
        for j in range(i + 1, L.dim)
        for k in range(L.dim)
        if c[i, j, k] != 0.0
    ]
    D = M.decomposition
    if not D.is_group and not np.allclose(D.m.basis @ D.h.basis.T, 0.0):
        raise UnsupportedError("documents describe m as the orthogonal complement of h")
    N = M.norm
    if isinstance(N, RiemannianNorm):
        metric = {"kind": "riemannian", "alpha": N.alpha.gram.tolist()}
    elif isinstance(N, AlphaBetaNorm):
        metric = {"kind": "alpha_beta", "alpha": N.alpha.gram.tolist(), "x": N.X.tolist(),
                  "phi": {"name": N.profile.name, "params": list(N.profile.params)}}
        if N.profile.name == "randers":
            metric = {"kind": "randers", "alpha": N.alpha.gram.tolist(), "x": N.X.tolist()}
    else:
        raise UnsupportedError("custom norms cannot be serialized")
    return ModelDocument(
        L.dim, list(L.basis_labels), brackets, metric,
        D.h.basis.tolist() if D.h.dim else None, M.chain_basis_declared, M.name,
    )


# ---------------------------------------------------------------------------
# commands


def parse_vector(text: str, dim: int, name: str) -> np.ndarray:
    try:
        vec = np.array([float(t) for t in text.split(",")])
    except ValueError:
        raise InputError(f"--{name}: expected comma-separated decimals, got {text!r}") from None
    if vec.shape != (dim,):
        raise InputError(f"--{name}: expected {dim} components, got {vec.size}")
    return vec


def _plan(args) -> cond.SamplingPlan:
    return cond.SamplingPlan(seed=args.seed, n_base=args.samples, n_pairs=args.pairs, tol=args.tol)


def _plan_dict(plan: cond.SamplingPlan, tol: float) -> dict:
    return {"seed": plan.seed, "n_base": plan.n_base, "n_pairs": plan.n_pairs, "tol": tol}


def _verdict_code(verdict: str) -> int:
    return {cond.HOLDS: EXIT_HOLDS, cond.FAILS: EXIT_FAILS}.get(verdict, EXIT_INCONCLUSIVE)


def run_check(M: HomogeneousModel, which: str, plan: cond.SamplingPlan) -> tuple[dict, int]:
    tol = plan.tol_for(M)
    if which == "cyclic":
        report = cond.check_cyclic(M, plan)
    elif which == "natred":
        report = cond.check_naturally_reductive(M, plan)
    elif which == "douglas":
        report = cond.check_douglas_ab(M, tol)
    else:
        report = cond.check_symmetric(M.decomposition, tol)
    out = report.to_dict()
    out["seed"] = plan.seed
    out["plan"] = _plan_dict(plan, tol)
    return out, _verdict_code(report.verdict)


def run_curvature(M: HomogeneousModel, y, u=None) -> dict:
    out = {
        "y": y.tolist(),
        "eta": spray_eta(M, y).tolist(),
        "N": connection_matrix(M, y).tolist(),
        "R": riemann_operator(M, y).matrix.tolist(),
        "ricci": ricci_scalar(M, y),
    }
    if u is not None:
        out["u"] = u.tolist()
        out["flag"] = flag_curvature(M, y, u)
    return out


def _to_jsonable(obj):
    if isinstance(obj, dict):
        return {k: _to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_to_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (np.floating, np.integer, np.bool_)):
        return obj.item()
    return obj


def _emit(payload: dict, fmt: str, out):
    payload = _to_jsonable(payload)
    if fmt == "json":
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        return
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        out.write(f"{key}: {value}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--model", metavar="FILE", help="model document (JSON)")
    src.add_argument("--example", metavar="NAME", help="registered example, e.g. 'solvable_cyclic(3,1,0.5)'")
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--samples", type=int, default=256, help="base directions y")
    common.add_argument("--pairs", type=int, default=64, help="argument pairs per y")
    common.add_argument("--tol", type=float, default=None)
    common.add_argument("--format", choices=("json", "text"), default="json")

    parser = argparse.ArgumentParser(prog="homfinsler", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("check", parents=[common], help="decide a metric condition")
    p.add_argument("condition", choices=("cyclic", "natred", "douglas", "symmetric"))
    p = sub.add_parser("curvature", parents=[common], help="spray, connection and curvature at y")
    p.add_argument("--y", required=True, help="comma-separated components (use --y=-1,0 for negatives)")
    p.add_argument("--u", default=None, help="second flag vector for the flag curvature")
    sub.add_parser("verify-theorems", parents=[common], help="run the theorem cross-check suite")
    sub.add_parser("list-examples", parents=[common], help="list registered example models")
    return parser


def _load(args) -> HomogeneousModel:
    if args.model:
        try:
            with open(args.model, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read model file: {exc}") from None
        return parse_model(text)
    if args.example:
        return example(args.example)
    raise InputError("one of --model or --example is required")


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "list-examples":
            payload = {
                "examples": [
                    {"name": r.name, "params": list(r.params), "schema": r.schema(), "description": r.description}
                    for r in REGISTRY.values()
                ]
            }
            _emit(payload, args.format, out)
            return EXIT_HOLDS
        plan = _plan(args)
        M = _load(args)
        if args.command == "check":
            payload, code = run_check(M, args.condition, plan)
        elif args.command == "curvature":
            y = parse_vector(args.y, M.dim, "y")
            u = parse_vector(args.u, M.dim, "u") if args.u else None
            payload, code = run_curvature(M, y, u), EXIT_HOLDS
        else:
            payload = cond.theorem_suite(M, plan)
            code = {"consistent": EXIT_HOLDS, "contradiction": EXIT_FAILS}.get(payload["status"], EXIT_INCONCLUSIVE)
        _emit(payload, args.format, out)
        return code
    except InputError as exc:
        _error(exc, out)
        return EXIT_INPUT
    except UnsupportedError as exc:
        _error(exc, out)
        return EXIT_UNSUPPORTED
    except FinslerError as exc:
        _error(exc, out)
        return EXIT_NUMERIC


def _error(exc: Exception, out):
    payload = {"error": type(exc).__name__, "message": str(exc)}
    if hasattr(exc, "path"):
        payload["path"] = exc.path
    out.write(json.dumps(payload, sort_keys=True) + "\n")


if __name__ == "__main__":
    sys.exit(main())
