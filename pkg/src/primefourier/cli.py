"""Command-line interface.

JSON on stdout by default; ``--format text`` renders flat key/value lines.
Exit codes: 0 success, 1 theorem-violation assertion (reserved; cannot fire
unless the arithmetic is broken), 2 usage or validation error, 3 domain-level
negative result (recovery found no consistent signal).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import fourier_minors, fp_poly, recovery, uncertainty
from .cyclotomic import CycInt, Prime, valuation_and_cofactor
from .errors import Inconsistent, PrimeFourierError, TheoremViolation
from .fourier_minors import IndexSet, SparseCycPoly
from .fp_poly import FpPoly
from .recovery import MeasurementSet
from .uncertainty import Signal

DEFAULT_SEED = 0x5EED


@dataclass(frozen=True)
class RunConfig:
    """Parsed invocation: one subcommand plus the flags shared by all of them."""

    command: str
    seed: int
    jobs: int
    fmt: str

    def __post_init__(self):
        if self.jobs < 1:
            raise ValueError("--jobs must be >= 1")


def _ints_csv(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")] if text else []
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _load_json(path: str):
    from .errors import MalformedInput

    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path} is not valid JSON: {exc}") from exc


def _cmd_verify_minors(cfg: RunConfig, args) -> tuple[int, dict]:
    p = Prime(args.p)
    report = fourier_minors.verify_all_minors(
        p, size_filter=args.size, jobs=cfg.jobs, allow_large=args.allow_large
    )
    return (0 if report.all_nonzero else 1), report.json()


def _cmd_det(cfg: RunConfig, args) -> tuple[int, dict]:
    p = Prime(args.p)
    rows = IndexSet.of(p, args.rows)
    cols = IndexSet.of(p, args.cols)
    minor = fourier_minors.build_minor(p, rows, cols)
    det = fourier_minors.determinant(minor).to_cycint()
    return 0, {"p": p.p, "rows": rows.json(), "cols": cols.json(), "det": det.json()}


def _cmd_valuation(cfg: RunConfig, args) -> tuple[int, dict]:
    p = Prime(args.p)
    if args.element_file is not None:
        element = CycInt.from_json(p, _load_json(args.element_file))
    else:
        element = CycInt.from_coeffs(p, args.coeffs)
    val, cofactor = valuation_and_cofactor(element)
    payload = {"p": p.p, "valuation": val.json()}
    if cofactor is not None:
        payload["cofactor"] = cofactor.json()
    return 0, payload


def _cmd_lemma2(cfg: RunConfig, args) -> tuple[int, dict]:
    p = Prime(args.p)
    g = FpPoly.from_coeffs(p, args.poly)
    report = fp_poly.multiplicity_bound(g, args.root)
    payload = {"p": p.p, "poly": g.json(), "root": args.root % p.p}
    payload.update(report.json())
    return 0, payload


def _cmd_lemma2_scan(cfg: RunConfig, args) -> tuple[int, dict]:
    p = Prime(args.p)
    if args.exhaustive:
        report = fp_poly.exhaustive_bound_scan(p)
    else:
        report = fp_poly.random_bound_scan(p, args.count, cfg.seed)
    return (0 if report.violations == 0 else 1), report.json()


def _cmd_uncertainty(cfg: RunConfig, args) -> tuple[int, dict]:
    p = Prime(args.p)
    f = Signal.from_json(p, _load_json(args.signal))
    report = uncertainty.uncertainty_check(f)
    return 0, report.json()


def _cmd_recover(cfg: RunConfig, args) -> tuple[int, dict]:
    p = Prime(args.p)
    m = MeasurementSet.from_json(p, _load_json(args.measurements))
    try:
        result = recovery.recover(m, args.k)
    except Inconsistent:
        return 3, {"p": p.p, "k": args.k, "consistent": False}
    return 0, {"p": p.p, "k": args.k, "consistent": True, **result.json()}


def _cmd_trace(cfg: RunConfig, args) -> tuple[int, dict]:
    p = Prime(args.p)
    rows = IndexSet.of(p, args.rows)
    coeffs = SparseCycPoly.from_json(p, _load_json(args.coeffs))
    trace = fourier_minors.descent_trace(p, rows, coeffs)
    return 0, trace.json()


def _cmd_composite(cfg: RunConfig, args) -> tuple[int, dict]:
    return 0, fourier_minors.composite_counterexample().json()


HANDLERS = {
    "verify-minors": _cmd_verify_minors,
    "det": _cmd_det,
    "valuation": _cmd_valuation,
    "lemma2": _cmd_lemma2,
    "lemma2-scan": _cmd_lemma2_scan,
    "uncertainty": _cmd_uncertainty,
    "recover": _cmd_recover,
    "trace": _cmd_trace,
    "composite-counterexample": _cmd_composite,
}


def _render_text(payload: dict) -> str:
    lines = []
    for key, value in payload.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value)
        lines.append(f"{key}: {value}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help=f"seed for randomized scans (default {DEFAULT_SEED:#x})")
    common.add_argument("--jobs", type=int, default=1,
                        help="worker count for parallelizable subcommands")

    parser = argparse.ArgumentParser(
        prog="primefourier",
        description="Exact verification of non-vanishing Fourier minors over Z/p "
                    "and its consequences: the support-size inequality and exact "
                    "sparse recovery.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("verify-minors", parents=[common],
                        help="check every square minor for a non-zero determinant")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--size", type=int, default=None, help="restrict to minors of one size")
    sp.add_argument("--allow-large", action="store_true",
                    help="override the p <= 13 enumeration guard")

    sp = sub.add_parser("det", parents=[common], help="exact determinant of one minor")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--rows", type=_ints_csv, required=True)
    sp.add_argument("--cols", type=_ints_csv, required=True)

    sp = sub.add_parser("valuation", parents=[common],
                        help="(1-w)-adic valuation and cofactor of an element of Z[w]")
    sp.add_argument("--p", type=int, required=True)
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--coeffs", type=_ints_csv, help="inline coefficients, length p-1")
    group.add_argument("--element-file", help="JSON array of coefficient strings")

    sp = sub.add_parser("lemma2", parents=[common],
                        help="root multiplicity vs non-zero coefficient count for one polynomial")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--poly", type=_ints_csv, required=True,
                    help="little-endian integer coefficients")
    sp.add_argument("--root", type=int, required=True)

    sp = sub.add_parser("lemma2-scan", parents=[common],
                        help="scan the multiplicity bound exhaustively or at random")
    sp.add_argument("--p", type=int, required=True)
    mode = sp.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--random", action="store_true")
    sp.add_argument("--count", type=int, default=10000,
                    help="polynomials to sample in random mode")

    sp = sub.add_parser("uncertainty", parents=[common],
                        help="support sizes of a signal and its transform")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--signal", required=True, help="signal JSON file")

    sp = sub.add_parser("recover", parents=[common],
                        help="reconstruct a sparse signal from spectral samples")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--k", type=int, required=True, help="sparsity bound")
    sp.add_argument("--measurements", required=True, help="measurement JSON file")

    sp = sub.add_parser("trace", parents=[common],
                        help="descent trace for a sparse coefficient vector")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--rows", type=_ints_csv, required=True)
    sp.add_argument("--coeffs", required=True, help="sparse polynomial JSON file")

    sub.add_parser("composite-counterexample", parents=[common],
                   help="the vanishing 2x2 minor at composite order 4")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(args.command, args.seed, args.jobs, args.format)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        code, payload = HANDLERS[args.command](cfg, args)
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return 1
    except PrimeFourierError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if cfg.fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(_render_text(payload))
    return code


if __name__ == "__main__":
    sys.exit(main())
