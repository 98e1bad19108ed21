"""
Command-line front end.

    slanthelix analyze  --input curve.csv [--report out.json] [--fd-step H] [--tol T]
    slanthelix generate --k1 const:1 --k2 const:1 --C 1 --D 0 --eps1 +1 --eps2 +1
                        --s-max 1 --out curve.csv [--report out.json]
    slanthelix verify   --input profile.csv --eps1 +1 --eps2 +1 [--tol T]

Exit codes: 0 success (``verify``: profile is slant), 1 ``verify`` verdict
"not slant", 2 invalid input or arguments (one line on stderr).
"""

import argparse
import json
import sys

import numpy as np

from .curves import DEFAULT_FD_STEP, load_curve_csv
from .errors import GeometryError
from .frenet import (
    DEFAULT_RK_STEP,
    frame_curvatures,
    has_frame_columns,
    load_framed_csv,
    sample_frames,
)
from .functions import parse_function_spec
from .generator import SlantSpec, generate_slant_curve
from .profile import load_profile_csv, validate_signature
from .slant import _classify, check_slant, slant_report

#: Point-only curves are analyzed on at most this many samples.
MAX_ANALYZE_SAMPLES = 100


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _sign(text):
    if text.strip() in ("+1", "1"):
        return 1
    if text.strip() == "-1":
        return -1
    raise argparse.ArgumentTypeError(f"sign must be +1 or -1, got {text!r}")


def _positive(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text!r}")
    return value


def _function(text):
    try:
        return parse_function_spec(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="slanthelix", description="Spacelike B2-slant helices in Minkowski 4-space.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="analyze a curve CSV (s,x1..x4 or a full frame table)")
    a.add_argument("--input", required=True)
    a.add_argument("--report", help="JSON report path (default: stdout)")
    a.add_argument("--fd-step", type=_positive, default=DEFAULT_FD_STEP)
    a.add_argument("--tol", type=_positive)

    g = sub.add_parser("generate", help="generate a slant helix from C, D and k1, k2")
    g.add_argument("--k1", type=_function, default=parse_function_spec("const:1"))
    g.add_argument("--k2", type=_function, default=parse_function_spec("const:1"))
    g.add_argument("--C", type=float, default=1.0)
    g.add_argument("--D", type=float, default=0.0)
    g.add_argument("--eps1", type=_sign, default=1)
    g.add_argument("--eps2", type=_sign, default=1)
    g.add_argument("--s-min", type=float, default=0.0)
    g.add_argument("--s-max", type=float, default=1.0)
    g.add_argument("--step", type=_positive, default=DEFAULT_RK_STEP)
    g.add_argument("--precision", choices=("double", "double-double"), default="double")
    g.add_argument("--tol", type=_positive)
    g.add_argument("--out", required=True, help="frame CSV path")
    g.add_argument("--report", help="JSON report path (default: stdout)")

    v = sub.add_parser("verify", help="test a curvature profile CSV (s,k1,k2,k3)")
    v.add_argument("--input", required=True)
    v.add_argument("--eps1", type=_sign, default=1)
    v.add_argument("--eps2", type=_sign, default=1)
    v.add_argument("--tol", type=_positive)
    v.add_argument("--report", help="also write the JSON verdict here")
    return p


def _emit(text, path):
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_analyze(args) -> int:
    if has_frame_columns(args.input):
        # integrated frames are far more accurate than re-deriving them
        fc = load_framed_csv(args.input)
        profile = frame_curvatures(fc)
    else:
        curve = load_curve_csv(args.input, fd_step=args.fd_step)
        fc, profile = sample_frames(curve, curve.interior_samples(MAX_ANALYZE_SAMPLES))
    _emit(slant_report(fc, profile, args.tol).dumps(), args.report)
    return 0


def cmd_generate(args) -> int:
    spec = SlantSpec(args.k1, args.k2, args.C, args.D, args.eps1, args.eps2,
                     (args.s_min, args.s_max), args.step)
    fc, report = generate_slant_curve(spec, precision=args.precision, tol=args.tol)
    fc.to_csv(args.out)
    _emit(report.dumps(), args.report)
    return 0


def cmd_verify(args) -> int:
    profile = load_profile_csv(args.input, args.eps1, args.eps2)
    verdict = check_slant(profile, tol=args.tol)
    out = {
        "is_slant": verdict.is_slant,
        "F_mean": verdict.F_mean,
        "F_spread": verdict.F_spread,
        "f_residual_max": verdict.f_residual_max,
        "degenerate_constant_ratio": verdict.degenerate_constant_ratio,
        "axis_class": None,
        "axis_norm_squared": None,
    }
    if verdict.is_slant:
        norm2 = profile.eps1 * verdict.F_mean + profile.eps2
        out["axis_norm_squared"] = norm2
        out["axis_class"] = str(_classify(norm2, verdict.tol * max(1.0, abs(verdict.F_mean))))
    text = _dumps(out)
    sys.stdout.write(text)
    if args.report:
        _emit(text, args.report)
    return 0 if verdict.is_slant else 1


COMMANDS = {"analyze": cmd_analyze, "generate": cmd_generate, "verify": cmd_verify}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if hasattr(args, "eps2") and not validate_signature(args.eps1, args.eps2):
            raise UsageError("SignatureViolation: eps1 = -1 requires eps2 = +1")
        with np.errstate(all="ignore"):
            return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"slanthelix: error: {exc}", file=sys.stderr)
    except (GeometryError, ValueError, OSError) as exc:
        msg = " ".join(str(exc).split())
        print(f"slanthelix: error: {type(exc).__name__}: {msg}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
