"""Command-line front end: ``normgeom <command> ...`` writes a JSON report.

Exit status is 0 on success, 2 when the computation rejects its input (the
report names the error) and 1 for unreadable files, malformed JSON or bad
arguments.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone

import numpy as np

from normgeom import __version__, spaces
from normgeom.characterizations import (VIOLATION_THRESHOLD, classify_space,
                                        default_conditions)
from normgeom.errors import NormGeomError
from normgeom.extension import (ISOMETRY_TOL, Correspondence,
                                certify_nonextendable_flip, extend_isometry,
                                verify_isometry)
from normgeom.geometry import (CM_TOL, DistanceMatrix, PointConfig,
                               cayley_menger, distance_matrix,
                               is_affinely_dependent, trilaterate)
from normgeom.locus import (LOCUS_TOL, build_isosceles_config,
                            strict_convexity_search, trace_locus)


class InputError(Exception):
    """Unreadable input: missing file, malformed JSON or bad arguments."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(f"{self.prog}: {message}")


@dataclass
class Tolerances:
    residual_tol: float = ISOMETRY_TOL
    rank_tol: float = CM_TOL
    locus_tol: float = LOCUS_TOL
    violation_threshold: float = VIOLATION_THRESHOLD


@dataclass
class RunConfig:
    seed: int = 0
    budget: int = 10_000
    tolerances: Tolerances = field(default_factory=Tolerances)
    output_path: str | None = None

    def validate(self):
        if self.seed < 0:
            raise InputError("seed must be a nonnegative integer")
        if self.budget < 1:
            raise InputError("budget must be a positive integer")
        for k, v in asdict(self.tolerances).items():
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise InputError(f"tolerance {k} must be positive, got {v!r}")


_TOL_FLAGS = {"tol_residual": "residual_tol", "tol_rank": "rank_tol",
              "tol_locus": "locus_tol", "tol_violation": "violation_threshold"}


def _load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: "
                         f"{exc.msg}") from None


def _effective_config(args):
    cfg = RunConfig()
    if args.config:
        raw = _load_json(args.config)
        if not isinstance(raw, dict):
            raise InputError(f"{args.config}: config must be a JSON object")
        tol = raw.get("tolerances", {})
        if not isinstance(tol, dict):
            raise InputError(f"{args.config}: 'tolerances' must be an object")
        try:
            cfg = RunConfig(int(raw.get("seed", cfg.seed)), int(raw.get("budget", cfg.budget)),
                            Tolerances(**{**asdict(cfg.tolerances), **tol}),
                            raw.get("output_path"))
        except (TypeError, ValueError) as exc:
            raise InputError(f"{args.config}: bad config value ({exc})") from None
    if args.seed is not None:
        cfg.seed = args.seed
    if args.budget is not None:
        cfg.budget = args.budget
    for flag, key in _TOL_FLAGS.items():
        if getattr(args, flag) is not None:
            setattr(cfg.tolerances, key, getattr(args, flag))
    if args.out is not None:
        cfg.output_path = args.out
    cfg.validate()
    return cfg


def _vector(text, name):
    """A vector given as ``1,0.5`` or as a JSON list."""
    try:
        vals = json.loads(text) if text.strip().startswith("[") else \
            [float(x) for x in text.split(",") if x.strip()]
        return np.array(vals, dtype=float)
    except (ValueError, TypeError):
        raise InputError(f"--{name}: expected comma-separated numbers, got {text!r}") from None


def _space(path):
    return spaces.NormedSpace.from_json(_load_json(path))


def _points(path, space=None):
    return PointConfig.from_json(_load_json(path), space)


# -- commands --------------------------------------------------------------------

def _cmd_classify(args, cfg):
    space = _space(args.space)
    conds = default_conditions(gamma_prime=args.gamma_prime, gamma=args.gamma, n=args.n)
    rep = classify_space(space, cfg.budget, cfg.seed,
                         cfg.tolerances.violation_threshold, conds)
    return rep.to_json()


def _cmd_extend(args, cfg):
    src = _points(args.source)
    dst = _points(args.target, src.space)
    pairing = None if args.pairing is None else [int(x) for x in _vector(args.pairing, "pairing")]
    corr = Correspondence(src, dst, pairing)
    chk = verify_isometry(corr, cfg.tolerances.residual_tol)
    ext = extend_isometry(corr, cfg.tolerances.residual_tol)
    return {"isometry": chk.to_json(), "extension": ext.to_json(),
            "pairing": list(corr.pairing)}


def _cmd_trilaterate(args, cfg):
    raw = _load_json(args.anchors)
    anchors = PointConfig.from_json(raw)
    if args.dists is not None:
        d = _vector(args.dists, "dists")
    elif isinstance(raw, dict) and "dists" in raw:
        d = np.asarray(raw["dists"], dtype=float)
    else:
        raise InputError("trilaterate needs --dists or a 'dists' entry in the anchors file")
    out = trilaterate(anchors, d, tol=cfg.tolerances.residual_tol,
                      rank_tol=cfg.tolerances.rank_tol)
    return out.to_json()


def _cmd_cm(args, cfg):
    raw = _load_json(args.matrix)
    if isinstance(raw, dict) and "points" in raw:
        dm = distance_matrix(PointConfig.from_json(raw))
    else:
        dm = DistanceMatrix.from_json(raw)
    verdict = is_affinely_dependent(dm, cfg.tolerances.rank_tol)
    return {"distance_matrix": dm.to_json(), "cayley_menger": cayley_menger(dm).tolist(),
            **verdict.to_json()}


def _fg(args, space):
    f = spaces.as_vector(space, _vector(args.f, "f"))
    g = spaces.as_vector(space, _vector(args.g, "g"))
    return f, g


def _cmd_locus(args, cfg):
    space = _space(args.space)
    f, g = _fg(args, space)
    pts = trace_locus(space, f, g, args.count, cfg.seed, cfg.tolerances.locus_tol,
                      max_segments=cfg.budget)
    return {"f": f.tolist(), "g": g.tolist(), "points": [p.to_json() for p in pts]}


def _cmd_certify(args, cfg):
    space = _space(args.space)
    cert = certify_nonextendable_flip(space, args.gamma, cfg.budget, cfg.seed,
                                      cfg.tolerances.violation_threshold)
    return {"space": space.to_json(), "certificate": None if cert is None else cert.to_json()}


def _cmd_isosceles(args, cfg):
    space = _space(args.space)
    real = spaces.real_view(space)
    if args.f is None and args.g is None:
        e = np.eye(real.dim)
        f, g = e[0], e[1] if real.dim > 1 else -e[0]
        g = g * spaces.norm(real, f) / spaces.norm(real, g)
    elif args.f is None or args.g is None:
        raise InputError("give both --f and --g, or neither")
    else:
        f, g = _fg(args, space)
    cfg_out = build_isosceles_config(space, f, g, args.n, cfg.seed, cfg.tolerances.locus_tol)
    return cfg_out.to_json()


def _cmd_strict(args, cfg):
    space = _space(args.space)
    w = strict_convexity_search(space, cfg.budget, cfg.seed)
    return {"space": space.to_json(), "witness": None if w is None else w.to_json()}


def _build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="RNG seed (default 0)")
    common.add_argument("--budget", type=int, default=None,
                        help="candidate count for seeded searches (default 10000)")
    common.add_argument("--tol-residual", type=float, default=None)
    common.add_argument("--tol-rank", type=float, default=None)
    common.add_argument("--tol-locus", type=float, default=None)
    common.add_argument("--tol-violation", type=float, default=None)
    common.add_argument("--out", default=None, help="write the report here instead of stdout")
    common.add_argument("--config", default=None, help="JSON run configuration")

    parser = _Parser(prog="normgeom", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common], help="search for inner-product violations")
    p.add_argument("space")
    p.add_argument("--gamma-prime", type=float, default=2.0)
    p.add_argument("--gamma", type=float, default=2.0)
    p.add_argument("--n", type=int, default=4)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("extend", parents=[common], help="extend a finite isometry")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--pairing", default=None, help="target index for each source point")
    p.set_defaults(func=_cmd_extend)

    p = sub.add_parser("trilaterate", parents=[common], help="locate a point from distances")
    p.add_argument("anchors")
    p.add_argument("--dists", default=None)
    p.set_defaults(func=_cmd_trilaterate)

    p = sub.add_parser("cm", parents=[common], help="Cayley-Menger determinant and dependence")
    p.add_argument("matrix")
    p.set_defaults(func=_cmd_cm)

    p = sub.add_parser("locus", parents=[common], help="points equidistant from f and g")
    p.add_argument("space")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--count", type=int, default=3)
    p.set_defaults(func=_cmd_locus)

    p = sub.add_parser("certify-flip", parents=[common],
                       help="isosceles flip with no onto extension")
    p.add_argument("space")
    p.add_argument("--gamma", type=float, default=2.0)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("isosceles", parents=[common], help="n-point flip-symmetric configuration")
    p.add_argument("space")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--f", default=None)
    p.add_argument("--g", default=None)
    p.set_defaults(func=_cmd_isosceles)

    p = sub.add_parser("strict-convexity", parents=[common],
                       help="unit pairs with ||a + b|| = 2")
    p.add_argument("space")
    p.set_defaults(func=_cmd_strict)
    return parser


def _clean(obj):
    """JSON-safe copy: numpy scalars unwrapped, non-finite floats as strings."""
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _clean(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        return x if math.isfinite(x) else str(x)
    return obj


def dumps(report):
    return json.dumps(_clean(report), sort_keys=True, indent=2) + "\n"


def run(argv=None):
    """Execute one command; returns ``(exit_code, report)``."""
    report = {"version": __version__,
              "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds")}
    out_path = None
    try:
        args = _build_parser().parse_args(argv)
        report["command"] = args.command
        cfg = _effective_config(args)
        out_path = cfg.output_path
        report["config"] = asdict(cfg)
        report["results"] = args.func(args, cfg)
        code = 0
    except NormGeomError as exc:
        report["error"] = {"name": exc.name, "message": str(exc)}
        code = 2
    except InputError as exc:
        report["error"] = {"name": "InputError", "message": str(exc)}
        code = 1
    except (ValueError, TypeError, KeyError) as exc:
        # malformed content that slipped past the readers
        report["error"] = {"name": type(exc).__name__, "message": str(exc)}
        code = 1
    text = dumps(report)
    if out_path:
        try:
            with open(out_path, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            sys.stderr.write(f"normgeom: cannot write {out_path}: {exc.strerror or exc}\n")
            sys.stdout.write(text)
            return 1, report
    else:
        sys.stdout.write(text)
    if code:
        sys.stderr.write(f"normgeom: {report['error']['name']}: {report['error']['message']}\n")
    return code, report


def main(argv=None):
    code, _ = run(argv)
    sys.exit(code)


if __name__ == "__main__":  # pragma: no cover
    main()
