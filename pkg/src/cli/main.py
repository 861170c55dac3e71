"""
Command Line Module

Verbs:
    validate FILE            parse a CloudSpec and run every metric check
    run (--scenario ID | --file FILE) [flags]
    reproduce-paper [--list] [--only ROW]

Exit codes: 0 success, 1 validation failure, 2 audit failure,
3 solver non-convergence.
"""

import argparse
import json
import sys
from dataclasses import replace
from typing import List, Optional

from pydantic import ValidationError

from src.common.config import get_solver_config, log, set_solver_config
from src.common.errors import (
    AuditFailure,
    CloudMismatchError,
    MetricValidationError,
    ParameterDomainError,
    SolverNonConvergence,
)
from src.common.types import ComplexKind
from src.cli.acceptance import CATALOG, run_catalog
from src.cli.cloud_spec import CloudSpec
from src.cli.report import anchor_separation_document, emit, ksw_document, run_document
from src.cli.scenarios import DEFAULTS, ScenarioId, ScenarioOptions, build_scenario

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_AUDIT = 2
EXIT_SOLVER = 3


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, SolverNonConvergence):
        return EXIT_SOLVER
    if isinstance(exc, AuditFailure):
        return EXIT_AUDIT
    if isinstance(exc, (MetricValidationError, ParameterDomainError, CloudMismatchError, ValidationError)):
        return EXIT_VALIDATION
    raise exc


def describe_error(exc: BaseException) -> List[str]:
    """One diagnostic line per problem, field paths first"""
    if isinstance(exc, ValidationError):
        return [f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in exc.errors()]
    if isinstance(exc, MetricValidationError):
        prefix = f"{exc.field}: " if exc.field and not str(exc).startswith(exc.field) else ""
        return [f"{prefix}{exc}"]
    if isinstance(exc, SolverNonConvergence):
        return [f"{exc}", f"centers={exc.centers}", f"radii={exc.radii}"]
    if isinstance(exc, AuditFailure):
        return [f"{exc} (simplex={exc.simplex}, t={exc.scale})"]
    return [str(exc)]


def _report_failure(verb: str, exc: BaseException) -> int:
    code = exit_code_for(exc)
    for line in describe_error(exc):
        print(f"[{verb}] error: {line}", file=sys.stderr)
    return code


def _parse_grid(raw: str) -> List[float]:
    try:
        return [float(v) for v in raw.split(",") if v.strip()]
    except ValueError:
        raise ParameterDomainError(f"malformed scale grid {raw!r}")


# =============================================================================
# VERBS
# =============================================================================

def cmd_validate(args: argparse.Namespace) -> int:
    try:
        spec = CloudSpec.from_file(args.file)
        cloud = spec.build()
        spec.bindings()
    except (OSError, json.JSONDecodeError) as e:
        print(f"[Validate] error: cannot read {args.file}: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except (ValidationError, MetricValidationError, ParameterDomainError) as e:
        return _report_failure("Validate", e)

    for warning in spec.radius_warnings():
        print(f"[Validate] warning: {warning.describe()}", file=sys.stderr)
    print(f"valid: {cloud.n_c} CP points (anchor {cloud.anchor}), {len(cloud.y_vertices())} Y points, "
          f"p={cloud.params.p}, λ={cloud.params.lambda_:g}, α={cloud.params.alpha:g}")
    return EXIT_OK


def _scenario_options(args: argparse.Namespace) -> ScenarioOptions:
    fields = {"p": args.p, "r_plus": args.r_plus, "r_minus": args.r_minus, "D": args.D,
              "m": args.m, "n": args.n, "epsilon": args.epsilon, "n_max": args.n_max}
    return ScenarioOptions(**{k: v for k, v in fields.items() if v is not None})


def cmd_run(args: argparse.Namespace) -> int:
    try:
        if args.scenario:
            sid = ScenarioId(args.scenario)
            options = _scenario_options(args)
            log("Run", f"scenario {sid.value}")
            if sid == ScenarioId.ANCHOR_SEPARATION:
                doc = anchor_separation_document(options)
            elif sid == ScenarioId.KSW_SCALAR:
                doc = ksw_document()
            else:
                spec = build_scenario(sid, options)
                defaults = DEFAULTS[sid]
                doc = run_document(
                    spec,
                    _grid_from(args) or defaults.t_grid,
                    [ComplexKind(k) for k in args.complex] if args.complex else defaults.complexes,
                    args.maxdim,
                    args.audit,
                    scenario=sid.value,
                )
        else:
            spec = CloudSpec.from_file(args.file)
            if args.p is not None:
                spec = spec.model_copy(update={"params": spec.params.model_copy(update={"p": ScenarioOptions(p=args.p).p})})
            grid = _grid_from(args)
            if not grid:
                raise ParameterDomainError("run --file needs --t or --t-grid")
            kinds = [ComplexKind(k) for k in args.complex] if args.complex else [ComplexKind.RIPS]
            doc = run_document(spec, grid, kinds, args.maxdim, args.audit)
    except (OSError, json.JSONDecodeError) as e:
        print(f"[Run] error: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except (ValidationError, MetricValidationError, ParameterDomainError, CloudMismatchError,
            AuditFailure, SolverNonConvergence) as e:
        return _report_failure("Run", e)

    text = emit(doc, args.emit, args.out)
    if not args.out:
        print(text)
    audit = doc.get("audit")
    if audit is not None and not audit["passed"]:
        return EXIT_AUDIT
    if doc.get("holds") is False:
        return EXIT_AUDIT
    return EXIT_OK


def _grid_from(args: argparse.Namespace) -> List[float]:
    if args.t_grid:
        return _parse_grid(args.t_grid)
    if args.t is not None:
        return [args.t]
    return []


def cmd_reproduce(args: argparse.Namespace) -> int:
    if args.list:
        for entry in CATALOG:
            print(f"{entry.row:>3}  {entry.title}")
        return EXIT_OK

    results = run_catalog(args.only)
    if args.emit == "json":
        print(json.dumps([r.to_json() for r in results], indent=2, ensure_ascii=False))
    else:
        print("=" * 72)
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            print(f"{r.row:>3}  {status}  {r.title:<30} {r.seconds:7.2f}s  {r.detail}")
        print("=" * 72)
    failed = [r.row for r in results if not r.passed]
    if failed:
        print(f"[ReproducePaper] failing rows: {failed}", file=sys.stderr)
        return EXIT_AUDIT
    return EXIT_OK


# =============================================================================
# PARSER
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bk-wedge", description="BK ℓp-wedge metrics, complexes and homology")
    parser.add_argument("--quiet", action="store_true", help="suppress informational log lines")
    sub = parser.add_subparsers(dest="verb", required=True)

    v = sub.add_parser("validate", help="parse a CloudSpec and check every metric axiom")
    v.add_argument("file")
    v.set_defaults(handler=cmd_validate)

    r = sub.add_parser("run", help="build complexes and Betti profiles for a cloud")
    source = r.add_mutually_exclusive_group(required=True)
    source.add_argument("--scenario", choices=[s.value for s in ScenarioId])
    source.add_argument("--file")
    r.add_argument("--t", type=float)
    r.add_argument("--t-grid", dest="t_grid", help="comma-separated scales")
    r.add_argument("--complex", action="append", choices=[k.value for k in ComplexKind])
    r.add_argument("--maxdim", type=int)
    r.add_argument("--p", help="gluing exponent, a number >= 1 or 'inf'")
    r.add_argument("--r-plus", dest="r_plus", type=float, help="default 0.95")
    r.add_argument("--r-minus", dest="r_minus", type=float, help="default 0.95")
    r.add_argument("--D", type=float, help="default 1.9")
    r.add_argument("--m", type=int, help="default 2")
    r.add_argument("--n", type=int, help="default 2")
    r.add_argument("--epsilon", type=float, help="attachment Y radius scale, default 0.1")
    r.add_argument("--n-max", dest="n_max", type=int, help="sequence length for anchor-separation, default 256")
    r.add_argument("--audit", action="store_true")
    r.add_argument("--emit", choices=["json", "csv"], default="json")
    r.add_argument("--out")
    r.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS)
    r.set_defaults(handler=cmd_run)

    rp = sub.add_parser("reproduce-paper", help="run the reference acceptance catalog")
    rp.add_argument("--list", action="store_true")
    rp.add_argument("--only", type=int, action="append", metavar="ROW")
    rp.add_argument("--emit", choices=["table", "json"], default="table")
    rp.set_defaults(handler=cmd_reproduce)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.quiet:
        set_solver_config(replace(get_solver_config(), verbose=False))
    return args.handler(args)
