# superal/cli/verifier_cli.py
"""
Command line for the verifier.

    python -m superal.cli.verifier_cli verify-al --n 1 --mode exact
    python -m superal.cli.verifier_cli check --suite thm41
    python -m superal.cli.verifier_cli basis --algebra osp --n 1 --format text
    python -m superal.cli.verifier_cli counterexample --p 1 --q 1 --k 8

Reports go to stdout (or --out); logs and progress go to stderr.
Exit status: 0 verified, 1 falsified, 2 usage or toolkit error.
"""
from __future__ import annotations

import argparse
import json
import sys
from math import factorial
from pathlib import Path
from typing import Any, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from superal.algebra.graded_core import SuperAlgebra, algebra_to_dict, gl_basis, render_algebra_text
from superal.algebra.osp_construct import osp_basis, weyl_realization
from superal.cli.suites import SUITES, cmd_check_suite
from superal.core.config import settings
from superal.core.errors import SuperalError
from superal.core.schemas import VerificationReport
from superal.identities.superpoly import counterexample_gl, verify_al
from superal.metrics.cb import build_metrics_cb
from superal.utils.logging_setup import get_logger

log = get_logger("superal.cli")

Format = Literal["json", "text"]


class RunConfig(BaseModel):
    """One verify-al invocation; defaults come from the environment settings."""
    model_config = ConfigDict(extra="forbid")

    n: int = Field(..., ge=1)
    mode: Literal["exact", "modular", "random"] = "exact"
    samples: int = Field(100, ge=1)
    seed: int = Field(0, ge=0, lt=2**64)
    jobs: int = Field(default_factory=lambda: settings.AL_JOBS, ge=1)
    prime: int = Field(default_factory=lambda: settings.AL_PRIME, ge=2)
    spot_checks: int = Field(0, ge=0)
    strict_bound: bool = True
    out: Optional[Path] = None
    format: Format = "json"


# ---------------------------------------------------------------------------
# Report output
# ---------------------------------------------------------------------------

def _stringify_ints(obj: Any) -> Any:
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {k: _stringify_ints(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_stringify_ints(v) for v in obj]
    return obj


def _render_text(report: VerificationReport, include_timing: bool) -> str:
    lines = [
        f"claim:    {report.claim}",
        f"status:   {report.status}",
        f"mode:     {report.mode}",
        f"checked:  {report.tuples_checked}",
    ]
    if report.primes:
        lines.append(f"primes:   {', '.join(map(str, report.primes))}")
    if report.coefficient_bound is not None:
        lines.append(f"bound:    {report.coefficient_bound}")
    if report.seed is not None:
        lines.append(f"seed:     {report.seed}")
    for key in sorted(report.parameters):
        lines.append(f"  {key} = {report.parameters[key]}")
    for key in sorted(report.checks):
        lines.append(f"  [{'ok' if report.checks[key] else 'FAIL'}] {key}")
    for w in report.failures:
        lines.append(f"  witness {w.indices} {w.note or ''}".rstrip())
        lines.extend("    " + " ".join(row) for row in w.value)
    if include_timing and report.elapsed_s is not None:
        lines.append(f"elapsed:  {report.elapsed_s}s")
    lines.append(f"toolkit {report.toolkit_version}, schema {report.schema_version}")
    return "\n".join(lines) + "\n"


def emit_report(report: VerificationReport, format: Format = "json", include_timing: bool = False) -> bytes:
    """Deterministic bytes: sorted keys, integers as decimal strings, timing only on request."""
    if format == "text":
        return _render_text(report, include_timing).encode("utf-8")
    data = report.model_dump(exclude=None if include_timing else {"elapsed_s"})
    return (json.dumps(_stringify_ints(data), sort_keys=True, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def write_output(data: bytes, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(data.decode("utf-8"))
        sys.stdout.flush()
        return
    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_bytes(data)
    except OSError as e:
        raise OSError(f"cannot write report to {out}: {e}") from e
    log.info("report written to %s", out)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_verify_al(config: RunConfig) -> VerificationReport:
    cb = build_metrics_cb()
    if cb:
        cb("verify_al_start", {"n": config.n, "mode": config.mode, "jobs": config.jobs, "seed": config.seed})
    report = verify_al(
        config.n,
        config.mode,
        samples=config.samples,
        seed=config.seed,
        jobs=config.jobs,
        prime=config.prime,
        strict_bound=config.strict_bound,
        spot_checks=config.spot_checks,
        progress=cb,
    )
    if cb:
        cb("verify_al_end", {"status": report.status, "tuples_checked": report.tuples_checked, "elapsed_s": report.elapsed_s})
    return report


def _algebra(name: str, n: int, p: int, q: int) -> SuperAlgebra:
    if name == "osp":
        return osp_basis(n)
    if name == "weyl":
        return weyl_realization(n)
    return gl_basis(p, q)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="superal", description="Exact verification of super standard identities.")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify-al", help="check A_{4n+2} = 0 on osp(1,2n)")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--mode", choices=["exact", "modular", "random"], default="exact")
    v.add_argument("--samples", type=int, default=100, help="random mode: number of sampled tuples")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=None, help="worker processes (default AL_JOBS)")
    v.add_argument("--prime", type=int, default=None, help="modulus for modular mode (default AL_PRIME)")
    v.add_argument("--spot-checks", type=int, default=0, help="extra exact random tuples after an exhaustive run")
    v.add_argument("--allow-fallback", action="store_true", help="fall back to exact arithmetic instead of aborting on a small prime")
    v.add_argument("--out", type=Path, default=None)
    v.add_argument("--format", choices=["json", "text"], default="json")

    c = sub.add_parser("check", help="run a named check suite")
    c.add_argument("--suite", required=True, help=f"one of: {', '.join(SUITES)}")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--out", type=Path, default=None)
    c.add_argument("--format", choices=["json", "text"], default="json")

    b = sub.add_parser("basis", help="dump a basis with structure constants")
    b.add_argument("--algebra", choices=["osp", "gl", "weyl"], required=True)
    b.add_argument("--n", type=int, default=1)
    b.add_argument("--p", type=int, default=1)
    b.add_argument("--q", type=int, default=1)
    b.add_argument("--format", choices=["json", "text"], default="text")

    x = sub.add_parser("counterexample", help="A_k(X,...,X) = k! X^k in gl(p,q)")
    x.add_argument("--p", type=int, default=1)
    x.add_argument("--q", type=int, default=1)
    x.add_argument("--k", type=int, default=8)
    return ap


def _run(args: argparse.Namespace) -> int:
    if args.command == "verify-al":
        overrides = {k: v for k, v in (("jobs", args.jobs), ("prime", args.prime)) if v is not None}
        config = RunConfig(
            n=args.n,
            mode=args.mode,
            samples=args.samples,
            seed=args.seed,
            spot_checks=args.spot_checks,
            strict_bound=not args.allow_fallback,
            out=args.out,
            format=args.format,
            **overrides,
        )
        report = cmd_verify_al(config)
        write_output(emit_report(report, config.format), config.out)
        return 0 if report.verified else 1

    if args.command == "check":
        report = cmd_check_suite(args.suite, seed=args.seed)
        write_output(emit_report(report, args.format), args.out)
        return 0 if report.verified else 1

    if args.command == "basis":
        alg = _algebra(args.algebra, args.n, args.p, args.q)
        if args.format == "json":
            text = json.dumps(algebra_to_dict(alg), sort_keys=True, indent=2) + "\n"
        else:
            text = render_algebra_text(alg)
        write_output(text.encode("utf-8"), None)
        return 0

    if args.command == "counterexample":
        x, value = counterexample_gl(args.p, args.q, args.k)
        expected = x.power(args.k).scale(factorial(args.k))
        ok = value.flat() == expected.flat() and not value.is_zero()
        lines = [f"X in gl({args.p},{args.q}):", str(x), f"A_{args.k}(X,...,X):", str(value), f"equals {args.k}! X^{args.k}: {ok}"]
        write_output(("\n".join(lines) + "\n").encode("utf-8"), None)
        return 0 if ok else 1

    raise SuperalError(f"unknown command {args.command!r}")


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except (SuperalError, ValidationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
