"""Command-line front end: ``ekbounds {bounds,verify,generate,compare}``.

Exit codes: 0 every checked claim holds, 1 some claim is violated by the
computed spectrum, 2 operational error (bad input, singular A_m, solver
failure).  ``-`` stands for stdin/stdout wherever a path is expected.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .bounds import (
    MEMBERSHIP_RTOL,
    THEOREM_ORDER,
    TheoremId,
    all_bounds,
    region_holds,
    tightness_report,
)
from .eigensolve import polyeig
from .errors import EKBoundsError
from .generators import GeneratorConfig, InstanceClass, generate
from .linalg_core import NormKind
from .serialization import (
    bound_record,
    bounds_csv,
    dumps,
    geometry_csv,
    instance_digest,
    parse_instance,
    region_to_dict,
    serialize_instance,
    spectrum_record,
    tightness_csv,
    tightness_table,
)

EXIT_OK, EXIT_VIOLATED, EXIT_ERROR = 0, 1, 2
NORM_ENV = "EK_DEFAULT_NORM"


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        Path(path).write_text(text, encoding="utf-8")


def _default_norm() -> str:
    return os.environ.get(NORM_ENV, "2")


def _norm(value: str) -> NormKind:
    kind = NormKind.parse(value)
    if kind is NormKind.FROBENIUS:
        raise UsageError("--norm must be one of 2, 1, inf")
    return kind


def _theorems(value: str) -> list[TheoremId]:
    if value.strip().lower() == "all":
        return list(THEOREM_ORDER)
    try:
        return [TheoremId.parse(v) for v in value.split(",") if v.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _verify_instance(text: str, source: str, kind: NormKind, rtol: float,
                     theorems=None, method: str = "lapack"):
    p, claims = parse_instance(text, source)
    results = all_bounds(p, kind, theorems)
    spectrum = polyeig(p, method=method)
    lams = spectrum.eigenvalues
    records, violated = [], []
    for res in results:
        if res.region is None:
            records.append(bound_record(res, None, "not-applicable", with_verdict=True))
            continue
        ok = region_holds(res.region, lams, rtol)
        if not ok:
            violated.append(res.theorem_id.value)
        records.append(bound_record(res, res.region.slack(lams),
                                    "contained" if ok else "violated", with_verdict=True))
    claim_records = []
    for claim in claims:
        ok = region_holds(claim.region, lams, rtol)
        if not ok:
            violated.append(claim.label)
        claim_records.append({"label": claim.label, "region": region_to_dict(claim.region),
                              "slack": claim.region.slack(lams),
                              "verdict": "contained" if ok else "violated"})
    doc = {
        "instance_digest": instance_digest(p),
        "norm": kind.value,
        "tolerance": rtol,
        "bounds": records,
    }
    if claim_records:
        doc["claims"] = claim_records
    doc["spectrum"] = spectrum_record(spectrum)
    return doc, results, spectrum, violated


# --------------------------------------------------------------------------
# subcommands


def cmd_bounds(args) -> int:
    kind = _norm(args.norm)
    p, _ = parse_instance(_read(args.input), args.input)
    results = all_bounds(p, kind, _theorems(args.theorems))
    if args.format == "csv":
        _write(args.out, bounds_csv(results))
    else:
        doc = {"instance_digest": instance_digest(p), "norm": kind.value,
               "bounds": [bound_record(r) for r in results]}
        _write(args.out, dumps(doc))
    return EXIT_OK


def _tolerance(value: float) -> float:
    if not (value >= 0.0 and math.isfinite(value)):
        raise UsageError("--tol must be a nonnegative finite number")
    return value


def cmd_verify(args) -> int:
    kind = _norm(args.norm)
    rtol = _tolerance(args.tol)
    if args.input_dir:
        return _verify_directory(args, kind, rtol)
    if args.input is None:
        raise UsageError("verify needs an input path or --input-dir")
    doc, _, _, violated = _verify_instance(_read(args.input), args.input, kind, rtol,
                                           method=args.method)
    _write(args.out, dumps(doc))
    if violated:
        print(f"violated: {', '.join(violated)}", file=sys.stderr)
        return EXIT_VIOLATED
    return EXIT_OK


def _verify_directory(args, kind: NormKind, rtol: float) -> int:
    files = sorted(Path(args.input_dir).glob("*.json"))
    entries, any_violation, any_error = [], False, False
    for path in files:
        try:
            doc, _, _, violated = _verify_instance(path.read_text(encoding="utf-8"),
                                                   str(path), kind, rtol, method=args.method)
        except (EKBoundsError, OSError) as exc:
            any_error = True
            print(f"{path}: {exc}", file=sys.stderr)
            entries.append({"file": path.name, "error": str(exc)})
            continue
        if violated:
            any_violation = True
            print(f"{path}: violated: {', '.join(violated)}", file=sys.stderr)
        entries.append({"file": path.name, **doc})
    _write(args.out, dumps({"results": entries}))
    if any_violation:
        return EXIT_VIOLATED
    return EXIT_ERROR if any_error else EXIT_OK


def cmd_generate(args) -> int:
    try:
        cfg = GeneratorConfig(seed=args.seed, n=args.n, m=args.degree,
                              instance_class=InstanceClass.parse(args.instance_class),
                              t=args.t, k=args.k, alpha=args.alpha)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    p = generate(cfg)
    _write(args.out, serialize_instance(p))
    report = sys.stderr if args.out in (None, "-") else sys.stdout
    params = {
        InstanceClass.UNCONSTRAINED: "",
        InstanceClass.LOEWNER_CHAIN: "",
        InstanceClass.GEOMETRIC_NORM_CHAIN: f" t={cfg.t!r}",
        InstanceClass.FROBENIUS_CONE: f" k={cfg.k!r} alpha={cfg.alpha!r}",
        InstanceClass.HERMITIAN_SCALED_CHAIN: f" k={cfg.k!r} t={cfg.t!r}",
    }[cfg.instance_class]
    print(f"class={cfg.instance_class.value} seed={cfg.seed} n={cfg.n} degree={cfg.m}{params}",
          file=report)
    return EXIT_OK


def cmd_compare(args) -> int:
    kind = _norm(args.norm)
    rtol = _tolerance(args.tol)
    doc, results, spectrum, violated = _verify_instance(_read(args.input), args.input, kind, rtol)
    rows = tightness_report(results, spectrum.eigenvalues)
    table = tightness_table(rows)
    if args.out:
        _write(args.out, dumps(doc))
        sys.stdout.write(table)
    else:
        sys.stdout.write(table)
    if args.csv:
        _write(args.csv, tightness_csv(rows))
    if args.geometry:
        _write(args.geometry, geometry_csv(rows))
    if violated:
        print(f"violated: {', '.join(violated)}", file=sys.stderr)
        return EXIT_VIOLATED
    return EXIT_OK


# --------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ekbounds",
        description="Enestrom-Kakeya type eigenvalue regions for matrix polynomials.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_norm(p):
        p.add_argument("--norm", default=None,
                       help=f"subordinate norm: 2, 1 or inf (default ${NORM_ENV} or 2)")

    p = sub.add_parser("bounds", help="compute every theorem's region")
    p.add_argument("input", help="instance JSON file or -")
    add_norm(p)
    p.add_argument("--theorems", default="all", help="comma-separated ids or 'all'")
    p.add_argument("--out", default="-")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="check every region against the computed spectrum")
    p.add_argument("input", nargs="?", help="instance JSON file or -")
    p.add_argument("--input-dir", help="verify every *.json file in a directory")
    p.add_argument("--tol", type=float, default=MEMBERSHIP_RTOL, help="relative tolerance")
    add_norm(p)
    p.add_argument("--method", choices=("lapack", "qr"), default="lapack",
                   help="dense eigensolver")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write a random instance of a hypothesis class")
    p.add_argument("--class", dest="instance_class", required=True,
                   choices=[c.value for c in InstanceClass])
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--degree", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--t", type=float, default=1.0)
    p.add_argument("--k", type=float, default=1.0)
    p.add_argument("--alpha", type=float, default=math.pi / 6)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("compare", help="tightness table of all satisfied bounds")
    p.add_argument("input", help="instance JSON file or -")
    p.add_argument("--tol", type=float, default=MEMBERSHIP_RTOL)
    add_norm(p)
    p.add_argument("--out", default=None, help="also write the full result JSON here")
    p.add_argument("--csv", default=None, help="write the tightness table as CSV")
    p.add_argument("--geometry", default=None, help="write region geometry CSV")
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    if getattr(args, "norm", "unset") is None:
        args.norm = _default_norm()
    try:
        return args.func(args)
    except (EKBoundsError, UsageError, OSError, ValueError) as exc:
        print(f"ekbounds {args.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
