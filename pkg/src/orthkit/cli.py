"""Command-line front end.

Subcommands::

    orthkit norm T.json                  norm value + attainment summary
    orthkit orth T.json A.json           orthogonality verdict + certificate
    orthkit oracle T.json A.json         direct minimization of ||T + lam A||
    orthkit bs T.json A.json             Hilbert-space route verdict + witness
    orthkit maxnr T.json A.json --csv f  maximal numerical range boundary
    orthkit omega T.json A.json --csv f  sampled scalar cloud
    orthkit smooth T.json                smoothness report
    orthkit sip-check T.json A.json      semi-inner-product limit probe

Exit status: 0 decided, 2 undetermined, 1 error.  All commands accept
--tol, --restarts, --seed and --json; the environment variable ORTHKIT_SEED
is the seed fallback.  Identical argv and seed produce byte-identical
structured output.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from dataclasses import dataclass

import numpy as np

from .spaces import FieldTag
from .multilinear import TuplePoint, attainment_set
from .orthogonality import (
    CaratheodoryCertificate,
    Decision,
    NumericalRangeEvidence,
    OracleRecord,
    SeparatingDirection,
    SolverConfig,
    bs_decide_hilbert,
    decide_orthogonality,
    maximal_numerical_range,
    omega_samples,
    oracle_min_norm,
)
from .smoothness import (
    SmoothDecision,
    decide_smooth,
    sip_orthogonality_probe,
)
from .mapio import MapFileError, emit_plot, load_map, map_to_dict

__all__ = ["RunConfig", "run_command", "main"]


@dataclass(frozen=True)
class RunConfig:
    """CLI-level configuration; mirrors SolverConfig plus output switches."""

    tol: float = 1e-6
    restarts: int = 32
    max_iter: int = 500
    seed: int = 0
    angles: int = 720
    oracle_grid: int = 48
    json_mode: bool = False
    verify: bool = False

    def solver(self) -> SolverConfig:
        return SolverConfig(restarts=self.restarts, max_iter=self.max_iter,
                            tol_decision=self.tol, tol_attain=self.tol,
                            seed=self.seed, oracle_grid=self.oracle_grid,
                            angle_count=self.angles)


def _scalar_out(v):
    if isinstance(v, complex) or np.iscomplexobj(np.asarray(v)):
        c = complex(v)
        return [c.real, c.imag]
    return float(v)


def _vector_out(v):
    arr = np.asarray(v)
    if np.iscomplexobj(arr):
        return [[float(x.real), float(x.imag)] for x in arr]
    return [float(x) for x in arr]


def _point_out(point: TuplePoint):
    return [_vector_out(p) for p in point.parts]


def _evidence_out(ev, sample_values=None):
    if isinstance(ev, CaratheodoryCertificate):
        out = {"type": "caratheodory",
               "indices": [int(i) for i in ev.indices],
               "weights": [float(w) for w in ev.weights]}
        if sample_values is not None:
            out["lambda_values"] = [_scalar_out(sample_values[i]) for i in ev.indices]
            out["residual"] = ev.residual(sample_values)
        return out
    if isinstance(ev, SeparatingDirection):
        return {"type": "separating_direction",
                "direction": _scalar_out(ev.direction),
                "margin": float(ev.margin)}
    if isinstance(ev, OracleRecord):
        return {"type": "oracle", "lambda_star": _scalar_out(ev.lambda_star),
                "min_value": float(ev.min_value), "heuristic": bool(ev.heuristic)}
    if isinstance(ev, NumericalRangeEvidence):
        return {"type": "numerical_range", "min_support": float(ev.min_support),
                "theta_star": float(ev.theta_star),
                "undetermined": bool(ev.undetermined)}
    return {"type": type(ev).__name__}


def _verdict_out(verdict, include_samples=True):
    vals = [s.value for s in verdict.samples]
    out = {"decision": verdict.decision.value,
           "evidence": _evidence_out(verdict.evidence, vals if vals else None),
           "notes": verdict.notes}
    if include_samples:
        out["sample_count"] = len(verdict.samples)
        out["sample_values"] = [_scalar_out(v) for v in vals]
    if verdict.witness is not None:
        out["witness"] = _point_out(verdict.witness)
        out["witness_residuals"] = [float(r) for r in verdict.witness_residuals]
    return out


def _verify_verdict(verdict, T, A):
    """Recompute certificate residuals from the returned evidence."""
    from .spaces import lp_norm
    from .multilinear import evaluate

    vals = [s.value for s in verdict.samples]
    checks = {}
    ev = verdict.evidence
    if isinstance(ev, CaratheodoryCertificate) and vals:
        checks["weight_sum_error"] = abs(ev.weight_sum() - 1.0)
        checks["combination_residual"] = ev.residual(vals)
        checks["ok"] = bool(checks["weight_sum_error"] <= 1e-12
                            and checks["combination_residual"] <= 1e-6 * max(
                                1.0, max(abs(complex(v)) for v in vals)))
    elif isinstance(ev, SeparatingDirection) and vals:
        margin = ev.recompute_margin(vals)
        checks["recomputed_margin"] = margin
        checks["ok"] = bool(margin > 0)
    elif isinstance(ev, OracleRecord):
        from .multilinear import operator_norm
        val, _ = operator_norm(T + ev.lambda_star * A)
        checks["recomputed_f_at_lambda_star"] = float(val)
        checks["ok"] = bool(abs(val - ev.min_value)
                            <= 1e-6 * max(1.0, ev.min_value))
    if verdict.witness is not None:
        tx = evaluate(T, verdict.witness)
        ax = evaluate(A, verdict.witness)
        checks["witness_attain_residual"] = float(
            abs(lp_norm(tx, T.codomain) - operator_norm_cached(T)))
        checks["witness_pairing"] = _scalar_out(np.sum(np.conj(tx) * ax))
    return checks


_norm_cache = {}


def operator_norm_cached(T):
    key = id(T)
    if key not in _norm_cache:
        from .multilinear import operator_norm
        _norm_cache[key] = operator_norm(T)[0]
    return _norm_cache[key]


def _exit_for(decision) -> int:
    if decision in (Decision.UNDETERMINED, SmoothDecision.UNDETERMINED):
        return 2
    return 0


def _add_common(p):
    p.add_argument("--tol", type=float, default=1e-6,
                   help="relative decision tolerance (default 1e-6)")
    p.add_argument("--restarts", type=int, default=32)
    p.add_argument("--max-iter", type=int, default=500)
    p.add_argument("--seed", type=int, default=None,
                   help="RNG seed; falls back to ORTHKIT_SEED, then 0")
    p.add_argument("--angles", type=int, default=720)
    p.add_argument("--oracle-grid", type=int, default=48)
    p.add_argument("--json", action="store_true", dest="json_mode",
                   help="emit one structured JSON object")
    p.add_argument("--verify", action="store_true",
                   help="recompute certificate residuals and attach them")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="orthkit",
        description="Birkhoff-James orthogonality and smoothness of "
                    "multilinear maps between finite-dimensional lp spaces")
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, maps, help_, plots=False):
        p = sub.add_parser(name, help=help_)
        p.add_argument("map_t", metavar="T.json")
        if maps == 2:
            p.add_argument("map_a", metavar="A.json")
        if plots:
            p.add_argument("--csv", default=None, help="write a CSV table here")
            p.add_argument("--svg", default=None, help="write an SVG plot here")
        _add_common(p)
        return p

    cmd("norm", 1, "norm value and attainment summary")
    cmd("orth", 2, "orthogonality verdict with certificate")
    cmd("oracle", 2, "minimize ||T + lam A|| directly")
    cmd("bs", 2, "Hilbert-space (numerical range) verdict with witness")
    cmd("maxnr", 2, "maximal numerical range boundary", plots=True)
    cmd("omega", 2, "sampled scalar cloud", plots=True)
    cmd("smooth", 1, "smoothness report")
    cmd("sip-check", 2, "semi-inner-product limit probe")
    return parser


def _run(args) -> tuple:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("ORTHKIT_SEED", "0"))
    run_cfg = RunConfig(tol=args.tol, restarts=args.restarts,
                        max_iter=args.max_iter, seed=seed, angles=args.angles,
                        oracle_grid=args.oracle_grid,
                        json_mode=args.json_mode, verify=args.verify)
    cfg = run_cfg.solver()
    report = {"command": args.command,
              "config": {"tol": run_cfg.tol, "restarts": run_cfg.restarts,
                         "max_iter": run_cfg.max_iter, "seed": run_cfg.seed,
                         "angles": run_cfg.angles,
                         "oracle_grid": run_cfg.oracle_grid},
              "inputs": {"T": str(args.map_t)}}
    T = load_map(args.map_t)
    A = None
    if hasattr(args, "map_a"):
        report["inputs"]["A"] = str(args.map_a)
        A = load_map(args.map_a)

    if args.command == "norm":
        cluster = attainment_set(T, cfg)
        report["result"] = {
            "value": cluster.value,
            "confidence": cluster.confidence,
            "maximizer_count": len(cluster.maximizers),
            "is_single_orbit": bool(cluster.is_single_orbit),
            "representative": _point_out(cluster.orbit_representative),
            "note": cluster.note,
        }
        return 0, report

    if args.command == "orth":
        verdict = decide_orthogonality(T, A, cfg)
        report["result"] = _verdict_out(verdict)
        if run_cfg.verify:
            report["verification"] = _verify_verdict(verdict, T, A)
        return _exit_for(verdict.decision), report

    if args.command == "oracle":
        result = oracle_min_norm(T, A, cfg)
        record = result.verdict.evidence
        report["result"] = {
            "lambda_star": _scalar_out(result.lambda_star),
            "min_value": float(result.min_value),
            "decision": result.verdict.decision.value,
            "heuristic": bool(record.heuristic),
            "notes": result.verdict.notes,
        }
        return _exit_for(result.verdict.decision), report

    if args.command == "bs":
        verdict = bs_decide_hilbert(T, A, cfg)
        report["result"] = _verdict_out(verdict)
        if run_cfg.verify:
            report["verification"] = _verify_verdict(verdict, T, A)
        return _exit_for(verdict.decision), report

    if args.command == "maxnr":
        region = maximal_numerical_range(T, A, cfg.angle_count)
        if args.csv:
            emit_plot(region, args.csv, "csv")
        if args.svg:
            emit_plot(region, args.svg, "svg")
        b = region.boundary_points
        report["result"] = {
            "angle_count": int(len(region.angles)),
            "support_min": float(np.min(region.support_values)),
            "support_max": float(np.max(region.support_values)),
            "boundary_bbox": [float(b.real.min()), float(b.imag.min()),
                              float(b.real.max()), float(b.imag.max())],
            "csv": args.csv, "svg": args.svg,
        }
        return 0, report

    if args.command == "omega":
        samples = omega_samples(T, A, cfg)
        if args.csv:
            emit_plot(samples, args.csv, "csv")
        if args.svg:
            emit_plot(samples, args.svg, "svg")
        report["result"] = {
            "sample_count": len(samples),
            "values": [_scalar_out(s.value) for s in samples],
            "max_attain_residual": max(s.attain_residual for s in samples),
            "csv": args.csv, "svg": args.svg,
        }
        return 0, report

    if args.command == "smooth":
        rep = decide_smooth(T, cfg)
        witnesses = {}
        if "second_orbit" in rep.witnesses:
            witnesses["second_orbit"] = [_point_out(p)
                                         for p in rep.witnesses["second_orbit"]]
        if "image_tie" in rep.witnesses:
            tie = rep.witnesses["image_tie"]
            witnesses["image_tie"] = {
                "point": _vector_out(tie["point"]),
                "tied_or_zero_coordinates": tie["tied_or_zero_coordinates"],
            }
        if "additivity_counterexample" in rep.witnesses:
            a1, a2 = rep.witnesses["additivity_counterexample"]
            witnesses["additivity_counterexample"] = [map_to_dict(a1),
                                                      map_to_dict(a2)]
        if "omega_spread" in rep.witnesses:
            witnesses["omega_spread"] = rep.witnesses["omega_spread"]
        report["result"] = {
            "decision": rep.decision.value,
            "orbit_ok": bool(rep.orbit_ok),
            "image_smooth": bool(rep.image_smooth),
            "confidence": rep.confidence,
            "representative": _point_out(rep.representative),
            "omega_spreads": [{"probe": s.probe, "spread": s.spread,
                               "value": _scalar_out(s.value)}
                              for s in rep.omega_spreads],
            "witnesses": witnesses,
            "notes": rep.notes,
        }
        return _exit_for(rep.decision), report

    if args.command == "sip-check":
        probe = sip_orthogonality_probe(T, A, cfg)
        report["result"] = {
            "max_limit_modulus": probe.max_limit_modulus,
            "converged": bool(probe.converged),
            "tol": probe.tol,
            "entries": [{"sequence": e.sequence, "variant": e.variant,
                         "limit": _scalar_out(e.limit),
                         "hull_distance": float(e.hull_distance)}
                        for e in probe.entries],
        }
        return 0, report

    raise ValueError(f"unknown command {args.command!r}")


def run_command(argv) -> tuple:
    """Execute one CLI command; returns (exit_status, report dict)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (int(exc.code) if exc.code else 0,
                {"error": "argument parsing failed"})
    try:
        return _run(args)
    except (MapFileError, ValueError) as exc:
        return 1, {"command": args.command, "error": str(exc)}


def _human_lines(report):
    lines = []

    def walk(prefix, obj):
        if isinstance(obj, dict):
            for k, v in obj.items():
                walk(f"{prefix}{k}.", v) if isinstance(v, dict) \
                    else lines.append(f"{prefix}{k} = {_compact(v)}")
        else:
            lines.append(f"{prefix} = {_compact(obj)}")

    def _compact(v):
        s = json.dumps(v)
        return s if len(s) <= 120 else s[:117] + "..."

    walk("", report)
    return lines


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    t0 = time.perf_counter()
    code, report = run_command(list(argv))
    elapsed = time.perf_counter() - t0
    json_mode = "--json" in argv
    if json_mode:
        sys.stdout.write(json.dumps(report, indent=1, sort_keys=True) + "\n")
    else:
        for line in _human_lines(report):
            sys.stdout.write(line + "\n")
        sys.stdout.write(f"elapsed = {elapsed:.3f}s\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
