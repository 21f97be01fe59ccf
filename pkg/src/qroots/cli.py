"""Command-line front end.

    qroots bounds   POLY [--holder r,s ...] [--theorem-e-r auto|R]
    qroots roots    POLY
    qroots verify   POLY [--holder r,s ...] [--theorem-e-r auto|R] [--tol X]
    qroots campaign [--config FILE] [--seed N] [--trials N] ...

POLY is a path to a polynomial JSON file, the JSON text itself, or an inline
list ``"w,x,y,z;w,x,y,z;..."`` in ascending powers (entries may also be
quaternion literals such as ``1-k``).  Machine output goes to stdout (or
``--out``), diagnostics to stderr.  Exit codes: 0 success, 1 a bound failed,
2 bad input, 3 the root oracle failed.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import harness
from .bounds import (
    CONTAIN_RTOL,
    HolderPair,
    all_origin_bounds,
    feasible_r,
    rather_region,
)
from .oracle import ConvergenceError, solve
from .polynomial import CompanionError, QPolynomial, Side, monic_normalize, poly_from_json
from .quaternion import ONE, Quaternion

log = logging.getLogger("qroots")

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_ORACLE = 0, 1, 2, 3


class InputError(ValueError):
    pass


def _parse_inline(text: str, side: Side) -> QPolynomial:
    coeffs = []
    pos = 0
    for idx, entry in enumerate(text.split(";")):
        chunk = entry.strip()
        try:
            if not chunk:
                raise ValueError("empty coefficient")
            if "," in chunk:
                parts = [float(t) for t in chunk.split(",")]
                if len(parts) != 4:
                    raise ValueError(f"expected 4 components, got {len(parts)}")
                coeffs.append(Quaternion(*parts))
            else:
                coeffs.append(Quaternion.from_any(chunk))
        except ValueError as exc:
            raise InputError(f"inline coefficient {idx} (position {pos}): {exc}") from None
        pos += len(entry) + 1
    if len(coeffs) >= 2 and coeffs[-1] != ONE and any(coeffs[-1]):
        log.warning("leading coefficient %s is not 1; normalizing to monic", coeffs[-1])
    try:
        return monic_normalize(coeffs, side)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def parse_poly(source: str, side: Side | None = None) -> QPolynomial:
    """Read a polynomial from a file path, JSON text or inline coefficient list.

    ``side`` overrides whatever the source declares; inline lists default to
    RIGHT.  Non-monic input is normalized with a warning.

    Raises
    ------
    InputError
        On malformed text or a zero leading coefficient.
    """
    text = source
    origin = "argument"
    if os.path.isfile(source):
        origin = source
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"{origin}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
        if side is not None and isinstance(obj, dict):
            obj = {**obj, "side": side.value}
        try:
            return poly_from_json(obj)
        except ValueError as exc:
            raise InputError(f"{origin}: {exc}") from None
    return _parse_inline(text.strip(), side or Side.RIGHT)


def _theorem_e_r(text):
    if text is None or text.lower() == "auto":
        return None
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'auto' or a positive real, got {text!r}")
    if not value > 0:
        raise argparse.ArgumentTypeError("theorem-e r must be positive")
    return value


def _holder(text):
    try:
        return HolderPair.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + ("" if text.endswith("\n") else "\n"))
    else:
        sys.stdout.write(text + ("" if text.endswith("\n") else "\n"))


def cmd_bounds(args) -> int:
    p = parse_poly(args.poly, args.side)
    holders = args.holder or [HolderPair(2.0, 2.0)]
    regions = all_origin_bounds(p, holders)
    if p.degree < 2:
        log.info("degree 1: two-ball region not applicable")
    else:
        r = args.theorem_e_r if args.theorem_e_r is not None else feasible_r(p)
        if r is None:
            log.warning("two-ball region infeasible: coefficient norms not orderable")
        else:
            try:
                regions.append(rather_region(p, r))
            except ValueError as exc:
                raise InputError(str(exc)) from None
    _emit(json.dumps([reg.to_json() for reg in regions], indent=1), args.out)
    return EXIT_OK


def cmd_roots(args) -> int:
    p = parse_poly(args.poly, args.side)
    result = solve(p)
    for exc in result.inconsistencies:
        log.warning("unresolved companion root: %s", exc)
    _emit(json.dumps([z.to_json() for z in result.zeros], indent=1), args.out)
    return EXIT_ORACLE if result.inconsistencies else EXIT_OK


def cmd_verify(args) -> int:
    p = parse_poly(args.poly, args.side)
    cfg = harness.CampaignConfig(holder_pairs=tuple(args.holder or [HolderPair(2.0, 2.0)]),
                                 rtol=args.tol)
    try:
        record = harness.verify_one(p, cfg, theorem_e_r=args.theorem_e_r)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    record["trial"] = 0
    report = {"config": cfg.to_json(), "summary": harness.summarize([record]), "trials": [record]}
    if args.format == "csv":
        _emit(harness.report_to_csv(report), args.out)
    else:
        _emit(json.dumps(report, indent=1), args.out)
    if record["status"] != "verified" or record["inconsistencies"]:
        return EXIT_ORACLE
    return EXIT_FAILED if report["summary"]["status"] == "FAILED" else EXIT_OK


def cmd_campaign(args) -> int:
    params = {}
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                params = json.load(fh)
        except OSError as exc:
            raise InputError(str(exc)) from None
        except json.JSONDecodeError as exc:
            raise InputError(f"{args.config}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    overrides = {
        "seed": args.seed, "trials": args.trials, "degree_min": args.degree_min,
        "degree_max": args.degree_max, "coeff_norm_max": args.coeff_norm_max,
        "side": args.campaign_side, "rtol": args.tol, "workers": args.workers,
    }
    params.update({k: v for k, v in overrides.items() if v is not None})
    if args.holder:
        params["holder_pairs"] = tuple(args.holder)
    if args.no_theorem_e:
        params["include_theorem_e"] = False
    try:
        cfg = harness.CampaignConfig(**params)
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad campaign configuration: {exc}") from None
    report = harness.run_campaign(cfg)
    summary = report["summary"]
    log.info("campaign %s: %d trials, %d not contained, %d oracle failures, %.2fs",
             summary["status"], summary["trials"], summary["not_contained"],
             summary["oracle_failures"], report["meta"]["elapsed_seconds"])
    if args.format == "csv":
        _emit(harness.report_to_csv(report), args.out)
    else:
        _emit(json.dumps(report, indent=1), args.out)
    if summary["status"] == "FAILED":
        return EXIT_FAILED
    return EXIT_ORACLE if summary["oracle_failures"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qroots", description="Zero bounds for quaternionic polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    def poly_cmd(name, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("poly", help="JSON file, JSON text, or inline 'w,x,y,z;...' ascending powers")
        sp.add_argument("--side", type=Side.parse, choices=[Side.LEFT, Side.RIGHT], default=None,
                        metavar="{left,right}",
                        help="coefficient side (overrides the source; inline default right)")
        sp.add_argument("--out", help="write output here instead of stdout")
        return sp

    sp = poly_cmd("bounds", "print every zero-containing region")
    sp.add_argument("--holder", type=_holder, action="append", help="Hölder pair r,s (repeatable; default 2,2)")
    sp.add_argument("--theorem-e-r", type=_theorem_e_r, default=None, help="auto (default) or a positive r")
    sp.set_defaults(func=cmd_bounds)

    sp = poly_cmd("roots", "print the zero classes")
    sp.set_defaults(func=cmd_roots)

    sp = poly_cmd("verify", "check all regions against the zeros of one polynomial")
    sp.add_argument("--holder", type=_holder, action="append")
    sp.add_argument("--theorem-e-r", type=_theorem_e_r, default=None)
    sp.add_argument("--tol", type=float, default=CONTAIN_RTOL, help="relative containment tolerance")
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("campaign", help="seeded randomized verification run")
    sp.add_argument("--config", help="campaign JSON; flags override its fields")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--trials", type=int)
    sp.add_argument("--degree-min", type=int)
    sp.add_argument("--degree-max", type=int)
    sp.add_argument("--coeff-norm-max", type=float)
    sp.add_argument("--side", dest="campaign_side", choices=["left", "right", "both"])
    sp.add_argument("--holder", type=_holder, action="append")
    sp.add_argument("--no-theorem-e", action="store_true", help="skip the two-ball region")
    sp.add_argument("--tol", type=float)
    sp.add_argument("--workers", type=int)
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_campaign)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("qroots: %(levelname)s: %(message)s"))
    log.addHandler(handler)
    log.setLevel(logging.INFO)
    try:
        return args.func(args)
    except InputError as exc:
        log.error("%s", exc)
        return EXIT_INPUT
    except (ConvergenceError, CompanionError) as exc:
        log.error("root oracle failed: %s", exc)
        return EXIT_ORACLE
    finally:
        log.removeHandler(handler)


if __name__ == "__main__":
    sys.exit(main())
