"""Command-line front end: epsilon, curves, elliptic, plot, survey, verify.

Exit codes: 0 success, 2 malformed input, 3 precondition violation.
All output is JSON with sorted keys, so runs are byte-deterministic.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from pathlib import Path

from .elliptic import eps_elliptic_capped, eps_elliptic_submaximal
from .engine import seshadri_constant, verify_ample_curve
from .envelope import build_envelope, emit_plot
from .errors import BadFamily, PreconditionError, SeshadriError, ValidationError
from .exact import frac_str
from .lattice import as_matrix, validate_matrix

_DEFAULT_GRID = [Fraction(-16 + k, 16) for k in range(33)]


def _load_matrix(arg: str):
    text = arg
    if not arg.lstrip().startswith(("[", "{")):
        try:
            text = Path(arg).read_text()
        except OSError as e:
            raise ValidationError(f"cannot read matrix file {arg}: {e}") from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError(f"matrix is not valid JSON: {e}") from e
    if isinstance(data, dict):
        data = data.get("matrix")
    if not isinstance(data, list):
        raise ValidationError("matrix JSON must be [[...], ...] or {\"matrix\": [[...], ...]}")
    S = as_matrix(data)
    validate_matrix(S)
    return S


def _parse_class(arg: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(part.strip()) for part in arg.split(","))
    except (ValueError, ZeroDivisionError) as e:
        raise ValidationError(f"bad class {arg!r}: {e}") from e


def _dump(obj, compact: bool) -> str:
    if compact:
        return json.dumps(obj, sort_keys=True, separators=(",", ":"))
    return json.dumps(obj, sort_keys=True, indent=2)


def cmd_epsilon(args) -> dict:
    S = _load_matrix(args.matrix)
    res = seshadri_constant(S, _parse_class(args.cls))
    return res.to_dict()


def cmd_curves(args) -> dict:
    S = _load_matrix(args.matrix)
    res = seshadri_constant(S, _parse_class(args.cls))
    return {"value": res.value.to_dict(), "curves": [c.to_dict() for c in res.curves]}


def _int_class(arg: str) -> tuple[int, ...]:
    cls = _parse_class(arg)
    if any(x.denominator != 1 for x in cls):
        raise ValidationError(f"class {arg!r} must have integer coordinates here")
    return tuple(int(x) for x in cls)


def cmd_elliptic(args) -> dict:
    S = _load_matrix(args.matrix)
    cls = _int_class(args.cls)
    if args.cap is not None:
        res = eps_elliptic_capped(S, cls, Fraction(args.cap))
    else:
        res = eps_elliptic_submaximal(S, cls)
    if res is None:
        return {"value": None, "minimizers": []}
    return {"value": res.value, "minimizers": [list(E) for E in res.minimizers]}


def cmd_verify(args) -> dict:
    S = _load_matrix(args.matrix)
    cls = _int_class(args.cls)
    return {"class": list(cls), "verified": verify_ample_curve(S, cls)}


def _plot_one(S, delta: Fraction):
    segments, report = build_envelope(S, _DEFAULT_GRID, delta=delta)
    return segments, report


def cmd_plot(args) -> dict:
    S = _load_matrix(args.matrix)
    delta = Fraction(args.delta)
    segments, report = _plot_one(S, delta)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    for fmt in args.formats.split(","):
        fmt = fmt.strip()
        data = emit_plot(segments, report, fmt)
        path = outdir / f"plot.{fmt if fmt != 'tikz' else 'tex'}"
        path.write_bytes(data)
        written.append(str(path))
    gap_path = outdir / "gaps.json"
    gap_path.write_text(_dump(report.to_dict(), compact=False) + "\n")
    written.append(str(gap_path))
    return {"segments": report.segment_count, "gaps": len(report.uncovered), "files": written}


_ENTRY_RE = re.compile(r"^[0-9a-z+\-*() ]*$")


def _family_matrices(template: str, ranges: str):
    """Expand a family template like [[0,n],[n,0]] over --range n=1:6."""
    env_ranges: dict[str, range] = {}
    for part in ranges.split(","):
        m = re.fullmatch(r"\s*([a-z])\s*=\s*(-?\d+)\s*:\s*(-?\d+)\s*", part)
        if not m:
            raise BadFamily(f"bad range component {part!r}; expected v=lo:hi")
        env_ranges[m.group(1)] = range(int(m.group(2)), int(m.group(3)) + 1)
    text = template.strip().replace(" ", "")
    if not (text.startswith("[[") and text.endswith("]]")):
        raise BadFamily("family template must look like [[...],[...]]")
    body = text[2:-2]
    entries = [row.split(",") for row in body.split("],[")]
    names = sorted(env_ranges)
    combos = [()]
    for n in names:
        combos = [c + (v,) for c in combos for v in env_ranges[n]]
    out = []
    for combo in combos:
        env = dict(zip(names, combo))
        matrix = []
        for row in entries:
            vals = []
            for cell in row:
                cell = cell.strip()
                if not _ENTRY_RE.fullmatch(cell):
                    raise BadFamily(f"bad entry {cell!r} in family template")
                expr = re.sub(r"(\d)([a-z])", r"\1*\2", cell)
                try:
                    vals.append(int(eval(expr, {"__builtins__": {}}, env)))  # noqa: S307
                except Exception as e:
                    raise BadFamily(f"cannot evaluate entry {cell!r}: {e}") from e
            matrix.append(vals)
        out.append((dict(env), matrix))
    return out


def _survey_one(item, delta: Fraction):
    env, rows = item
    try:
        S = as_matrix(rows)
        validate_matrix(S)
    except SeshadriError as e:
        return {"params": env, "matrix": rows, "error": str(e)}
    _segments, report = _plot_one(S, delta)
    loci = [frac_str((lo + hi) / 2) for lo, hi in report.uncovered]
    return {
        "params": env,
        "matrix": rows,
        "piecewise_linear": not report.uncovered,
        "gap_loci": loci,
        "segment_count": report.segment_count,
    }


def cmd_survey(args) -> dict:
    items = _family_matrices(args.family, args.range)
    delta = Fraction(args.delta)
    threads = int(os.environ.get("SESHADRI_THREADS", "0")) or min(8, len(items)) or 1
    with ThreadPoolExecutor(max_workers=threads) as pool:
        rows = list(pool.map(lambda it: _survey_one(it, delta), items))
    return {"family": args.family, "delta": frac_str(delta), "results": rows}


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="seshadri", description="Seshadri constants from intersection matrices")
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(sp, with_class=True):
        sp.add_argument("-m", "--matrix", required=True, help="inline JSON or a path to a JSON file")
        if with_class:
            sp.add_argument("-c", "--class", dest="cls", required=True, help="comma-separated rational coordinates")
        sp.add_argument("--json", action="store_true", help="compact single-line JSON output")

    sp = sub.add_parser("epsilon", help="Seshadri constant and witnessing curves")
    add_common(sp)
    sp.set_defaults(func=cmd_epsilon)

    sp = sub.add_parser("curves", help="witnessing Seshadri curves only")
    add_common(sp)
    sp.set_defaults(func=cmd_curves)

    sp = sub.add_parser("elliptic", help="minimal elliptic degree (submaximal, or below --cap)")
    add_common(sp)
    sp.add_argument("--cap", help="degree cap (rational); default: strict submaximality")
    sp.set_defaults(func=cmd_elliptic)

    sp = sub.add_parser("verify", help="check that a class carries a submaximal ample curve")
    add_common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("plot", help="certified section plot (rho = 2)")
    add_common(sp, with_class=False)
    sp.add_argument("--delta", default="1/100", help="gap-report resolution (rational)")
    sp.add_argument("--formats", default="csv,svg,tikz")
    sp.add_argument("--out", default="plots")
    sp.set_defaults(func=cmd_plot)

    sp = sub.add_parser("survey", help="plot a family of matrices and report gap evidence")
    sp.add_argument("-f", "--family", required=True, help="template like [[0,n],[n,0]]")
    sp.add_argument("--range", required=True, help="e.g. n=1:6 or a=1:2,b=0:5")
    sp.add_argument("--delta", default="1/50")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_survey)

    return p


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except ValidationError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except PreconditionError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 3
    print(_dump(out, compact=getattr(args, "json", False)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
