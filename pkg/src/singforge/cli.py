"""Command line front end.

Exit codes: 0 success (every certificate passes), 1 bad input or unreadable
file, 2 the braid lacks the required symmetry, 3 approximation or search
failed, 4 a certificate did not pass.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from contextlib import ExitStack
from pathlib import Path

import numpy as np

from . import __version__, config
from .braid import TWO_PI, BraidError, detect_symmetry
from .certificate import Certificate
from .looppoly import (
    MarginViolated,
    ResidualTooLarge,
    RootDriftTooLarge,
    SolverDiverged,
    batch_roots,
    from_braid,
)
from .mixedpoly import InadmissibleK, MixedPoly, WeightVector, from_loop, minimal_weight, newton
from .nondegeneracy import check_inner_nondegenerate, check_strongly_inner_nondegenerate
from .obstruction import IntLaurentPoly, SearchExhausted, symmetry_report
from .pfibered import PFiberData, realize, verify_compatible
from .serialize import dumps, load_braid, load_json, load_loop, load_poly, load_trig

EXIT_OK, EXIT_INPUT, EXIT_SYMMETRY, EXIT_APPROX, EXIT_CERT = 0, 1, 2, 3, 4

PIPELINE_TAGS = ("u_even", "divisor_symmetric")


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _emit(obj, out) -> None:
    text = dumps(obj) if not isinstance(obj, str) else obj
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _arg_margin(cert: Certificate) -> float:
    found = [p.margin for p in _walk(cert) if p.check.endswith("_arg")]
    return min(found) if found else float("nan")


def _walk(cert: Certificate):
    yield cert
    for p in cert.parts:
        yield from _walk(p)


def _pick_symmetry(report, wanted: str | None) -> str:
    tags = report.tags
    if wanted is not None:
        if wanted not in tags:
            raise CliError(EXIT_SYMMETRY, f"braid is not {wanted} (tags: {sorted(tags)})")
        if wanted == "divisor_symmetric":
            k = report.largest_divisor_k()
            return "odd" if k == 1 else f"k{k}"
        return wanted
    if "u_even" in tags:
        return "u_even"
    if "divisor_symmetric" in tags:
        k = report.largest_divisor_k()
        return "odd" if k == 1 else f"k{k}"
    raise CliError(EXIT_SYMMETRY, f"braid is neither u-even nor divisor-symmetric (tags: {sorted(tags)})")


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_forge(args) -> int:
    try:
        B = load_braid(args.word, args.strands)
    except (OSError, ValueError, BraidError) as err:
        raise CliError(EXIT_INPUT, str(err)) from err
    report = detect_symmetry(B)
    sym = _pick_symmetry(report, args.symmetry)
    try:
        g = from_braid(B, sym)
    except (ResidualTooLarge, RootDriftTooLarge, SolverDiverged) as err:
        raise CliError(EXIT_APPROX, f"approximation failed: {err}") from err
    try:
        if args.k is not None:
            P = WeightVector(args.k, args.p2)
            f = from_loop(g, args.k, args.p2)
        else:
            P = minimal_weight(g)
            f = from_loop(g, P.p1, P.p2)
    except InadmissibleK as err:
        raise CliError(EXIT_INPUT, str(err)) from err
    weak = check_inner_nondegenerate(f)
    certs = [weak]
    strong = None
    if not args.weak_only:
        strong = check_strongly_inner_nondegenerate(f)
        certs.append(strong)
    ok = all(c.passed for c in certs)
    bundle = {
        "braid": args.word if args.word is not None else str(args.strands),
        "symmetry": report.to_json(),
        "symmetry_used": sym,
        "loop": g.to_json(),
        "weight": list(P),
        "poly": f.to_json(),
        "poly_text": str(f),
        "certificates": {"weak": weak.to_json(), **({"strong": strong.to_json()} if strong else {})},
        "g_margin": weak.margin,
        "arg_margin": _arg_margin(strong) if strong else None,
        "pass": ok,
    }
    _emit(bundle, args.out)
    return EXIT_OK if ok else EXIT_CERT


def _read_json(path) -> dict:
    try:
        return load_json(path)
    except (OSError, ValueError) as err:
        raise CliError(EXIT_INPUT, f"cannot read {path}: {err}") from err


def _read_poly(path) -> MixedPoly:
    try:
        return load_poly(_read_json(path))
    except (KeyError, TypeError, ValueError, IndexError) as err:
        raise CliError(EXIT_INPUT, f"bad polynomial in {path}: {err}") from err


def cmd_certify(args) -> int:
    f = _read_poly(args.poly)
    cert = check_strongly_inner_nondegenerate(f) if args.strong else check_inner_nondegenerate(f)
    _emit({"poly_text": str(f), "strong": bool(args.strong), "certificate": cert.to_json(), "pass": cert.passed},
          args.out)
    return EXIT_OK if cert.passed else EXIT_CERT


def _sequence(obj) -> list:
    braids = obj.get("braids")
    if not braids:
        raise CliError(EXIT_INPUT, "empty sequence")
    n = len(braids)
    o_mults = obj.get("o_mults", [None] * n)
    coefs = obj.get("coefficients", [1.0] * n)
    if len(o_mults) != n or len(coefs) != n:
        raise CliError(EXIT_INPUT, "braids, o_mults and coefficients must have equal length")
    seq, total = [], 0
    for b, m, a in zip(braids, o_mults, coefs):
        if isinstance(b, str):
            B = load_braid(b)
            g = from_braid(B, _pick_symmetry(detect_symmetry(B), None))
        else:
            g = load_loop(b)
        m = total if m is None else int(m)
        seq.append(PFiberData(g, m, load_trig(a)))
        total += g.degree
    return seq


def cmd_compat(args) -> int:
    obj = _read_json(args.sequence)
    try:
        seq = _sequence(obj)
    except (KeyError, TypeError, ValueError, BraidError) as err:
        raise CliError(EXIT_INPUT, f"bad sequence: {err}") from err
    report = verify_compatible(seq)
    out = {"report": report.to_json(), "compatible": report.ok}
    if not report.ok:
        _emit(out, args.out)
        return EXIT_CERT
    try:
        real = realize(seq)
    except ValueError as err:
        out["error"] = str(err)
        _emit(out, args.out)
        return EXIT_APPROX
    out.update({"poly": real.poly.to_json(), "poly_text": str(real.poly),
                "weights": [list(w) for w in real.weights], "certificate": real.certificate.to_json(),
                "symmetry": real.symmetry, "pass": real.certificate.passed})
    _emit(out, args.out)
    return EXIT_OK if real.certificate.passed else EXIT_CERT


def cmd_obstruct(args) -> int:
    try:
        delta = IntLaurentPoly([int(c) for c in args.coeffs])
    except ValueError as err:
        raise CliError(EXIT_INPUT, f"bad coefficient list: {err}") from err
    try:
        rep = symmetry_report(delta)
    except SearchExhausted as err:
        raise CliError(EXIT_APPROX, f"inconclusive: {err}") from err
    _emit(rep, args.out)
    return EXIT_OK


def cmd_newton(args) -> int:
    f = _read_poly(args.poly)
    if f.is_zero() or (0, 0) in f.support():
        raise CliError(EXIT_INPUT, "the polynomial does not vanish at the origin")
    nd = newton(f)
    _emit(nd.to_json(), args.out)
    return EXIT_OK


def _circle_indices(radii: np.ndarray, tol: float) -> np.ndarray:
    order = np.argsort(radii)
    idx = np.empty(radii.size, dtype=int)
    level, last = -1, None
    for i in order:
        if last is None or radii[i] - last > tol:
            level += 1
            last = radii[i]
        idx[i] = level
    return idx


def cmd_plotdata(args) -> int:
    obj = _read_json(args.loop)
    try:
        g = load_loop(obj)
    except (KeyError, TypeError, ValueError) as err:
        raise CliError(EXIT_INPUT, f"bad loop: {err}") from err
    if g.degree < 1:
        raise CliError(EXIT_INPUT, "a constant loop has no roots")
    ts = np.linspace(0.0, TWO_PI, args.samples + 1)
    R = batch_roots(g, ts)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["t", "root_index", "re", "im", "circle_radius", "circle_index"])
    for t, row in zip(ts, R):
        order = np.lexsort((np.angle(row), np.abs(row)))
        row = row[order]
        radii = np.abs(row)
        circles = _circle_indices(radii, 1e-9 * (1 + radii.max()))
        for j, z in enumerate(row):
            w.writerow(["%.17g" % t, j, "%.17g" % z.real, "%.17g" % z.imag, "%.17g" % radii[j], int(circles[j])])
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


def cmd_symmetry(args) -> int:
    try:
        B = load_braid(args.word, args.strands)
    except (OSError, ValueError, BraidError) as err:
        raise CliError(EXIT_INPUT, str(err)) from err
    rep = detect_symmetry(B)
    _emit(rep.to_json(), args.out)
    return EXIT_OK if any(t in rep.tags for t in PIPELINE_TAGS) else EXIT_SYMMETRY


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _setting(text: str):
    key, sep, value = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected key=value, got {text!r}")
    try:
        num = float(value)
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"value for {key} must be numeric") from err
    if not num > 0:
        raise argparse.ArgumentTypeError(f"value for {key} must be positive")
    return key, int(num) if num.is_integer() and "." not in value and "e" not in value.lower() else num


def _braid_args(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--word", help='braid word, e.g. "s=2: s1 s1"')
    src.add_argument("--strands", help="CSV file of sampled strands")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="singforge", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--grid", type=int, help="override every default grid size")
    parser.add_argument("--set", type=_setting, action="append", default=[], metavar="KEY=VALUE",
                        help="override one numeric default (repeatable)")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--out", help="write output here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("forge", parents=[common], help="braid -> loop -> mixed polynomial with certificates")
    _braid_args(p)
    p.add_argument("--k", type=int, help="weight p1 (default: smallest admissible)")
    p.add_argument("--p2", type=int, default=1, help="weight p2 used with --k")
    p.add_argument("--symmetry", choices=["u_even", "odd", "divisor_symmetric"] + [f"k{2 ** i}" for i in range(1, 6)])
    p.add_argument("--weak-only", action="store_true", help="skip the strong certificate")
    p.set_defaults(func=cmd_forge)

    p = sub.add_parser("certify", parents=[common], help="inner non-degeneracy certificate of a polynomial JSON")
    p.add_argument("poly")
    p.add_argument("--strong", action="store_true")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("compat", parents=[common], help="verify and realize a compatible sequence")
    p.add_argument("sequence")
    p.set_defaults(func=cmd_compat)

    p = sub.add_parser("obstruct", parents=[common], help="Alexander polynomial symmetry obstructions")
    p.add_argument("coeffs", nargs="+", help="integer coefficients, lowest degree first")
    p.set_defaults(func=cmd_obstruct)

    p = sub.add_parser("newton", parents=[common], help="Newton boundary of a polynomial JSON")
    p.add_argument("poly")
    p.set_defaults(func=cmd_newton)

    p = sub.add_parser("plotdata", parents=[common], help="CSV of root positions of a loop over t")
    p.add_argument("loop")
    p.add_argument("--samples", type=int, default=64)
    p.set_defaults(func=cmd_plotdata)

    p = sub.add_parser("symmetry", parents=[common], help="symmetry tags of a braid")
    _braid_args(p)
    p.set_defaults(func=cmd_symmetry)
    return parser


def _overrides(args) -> dict:
    values = dict(args.set)
    if args.grid is not None:
        if args.grid < 8:
            raise CliError(EXIT_INPUT, "--grid must be at least 8")
        for key in ("braid_grid", "loop_grid", "track_grid", "pfiber_grid"):
            values[key] = args.grid
    unknown = set(values) - set(config.DEFAULTS)
    if unknown:
        raise CliError(EXIT_INPUT, f"unknown settings: {sorted(unknown)}")
    return values


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with ExitStack() as stack:
            stack.enter_context(config.override(**_overrides(args)))
            return args.func(args)
    except CliError as err:
        print(f"singforge: {err}", file=sys.stderr)
        return err.code
    except MarginViolated as err:
        print(f"singforge: {err}", file=sys.stderr)
        return EXIT_APPROX


if __name__ == "__main__":
    sys.exit(main())
