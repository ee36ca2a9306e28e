"""Command line interface.

Exit codes: 0 success, 1 a negative verdict or failed identity check,
2 bad input.  JSON output always uses sorted keys so reruns are
byte-identical; determinants are printed as decimal strings.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import basis_checker, chebyshev, surface_gen
from .coloring import Residue, lift_residue, parse_coloring, parse_values, residue
from .graded_skein import complementary, threaded_form
from .normal_curves import FoldedUnsupported, primitive_decomposition
from .triangulation import ParseError, euler_characteristic, folded_edges, format_triangulation, parse_triangulation, validate


class InputError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _load_triangulation(path: str, check: bool = True):
    try:
        t = parse_triangulation(_read(path))
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None
    if check:
        report = validate(t)
        if not report.valid:
            raise InputError(f"{path}: invalid triangulation: " + "; ".join(report.violations))
    return t


def _load_coloring(path: str, t):
    try:
        return parse_coloring(_read(path), t)
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None


def _odd(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1 or n % 2 == 0:
        raise argparse.ArgumentTypeError(f"N must be odd and positive, got {n}")
    return n


def cmd_validate(args, out):
    t = _load_triangulation(args.triangulation, check=False)
    report = validate(t)
    result = {"valid": report.valid, "violations": list(report.violations), "triangles": t.num_triangles, "edges": t.num_edges}
    if report.valid:
        try:
            result["eulerCharacteristic"] = euler_characteristic(t)
        except ValueError as exc:
            result["valid"] = False
            result["violations"].append(str(exc))
        result["foldedEdges"] = sorted(folded_edges(t))
    print(_dump(result), file=out)
    return 0 if result["valid"] else 1


def cmd_residue(args, out):
    t = _load_triangulation(args.triangulation)
    f = _load_coloring(args.coloring, t)
    print(_dump({"N": args.n, "residue": list(residue(f, args.n).values)}), file=out)
    return 0


def cmd_lift(args, out):
    t = _load_triangulation(args.triangulation)
    try:
        vals = parse_values(_read(args.residue), t.num_edges)
        g = Residue(tuple(vals), args.n)
    except (ParseError, ValueError) as exc:
        raise InputError(f"{args.residue}: {exc}") from None
    f = lift_residue(t, g)
    print(_dump({"N": args.n, "residue": list(g.values), "coloring": list(f.values)}), file=out)
    return 0


def cmd_decompose(args, out):
    t = _load_triangulation(args.triangulation)
    f = _load_coloring(args.coloring, t)
    dec = primitive_decomposition(f)
    ok = dec.reconstruct(t) == f
    if args.json:
        parts = [{"multiplicity": k, "coloring": list(c.values)} for c, k in dec.parts]
        print(_dump({"parts": parts, "reconstructs": ok, "total": list(f.values)}), file=out)
    else:
        for c, k in dec.parts:
            print(f"({k}) x {list(c.values)}", file=out)
        print(f"checksum {sum(f.values)} {'ok' if ok else 'MISMATCH'}", file=out)
    return 0 if ok else 1


def cmd_cheb(args, out):
    if args.verify is not None:
        results = chebyshev.verify_identities(args.verify)
        print(_dump({"max": args.verify, "results": results}), file=out)
        return 0 if all(results.values()) else 1
    if args.k is None:
        raise InputError("give k or --verify MAX")
    p = chebyshev.chebyshev_T(args.k)
    print(_dump({"k": args.k, "coefficients": list(p.coeffs), "polynomial": str(p)}), file=out)
    return 0


def cmd_check_basis(args, out):
    t = _load_triangulation(args.triangulation)
    family = [_load_coloring(path, t) for path in args.colorings]
    try:
        if args.boundary:
            cert = basis_checker.certify_over_extended_center(family, args.boundary, args.n, args.punctures)
        else:
            cert = basis_checker.certify_local_basis(family, args.n, args.punctures)
    except basis_checker.NotABasis as exc:
        print(_dump({"verdict": "NotBasis", "reason": str(exc)}), file=out)
        return 1
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.json:
        print(cert.to_json(), file=out)
    else:
        print(f"{cert.verdict.value} det={cert.det} N={cert.N}", file=out)
    return 0 if cert.verdict is basis_checker.Verdict.LOCAL_BASIS else 1


def _spec(args):
    try:
        return surface_gen.SurfaceSpec(args.genus, args.punctures)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_gen_surface(args, out):
    spec = _spec(args)
    if args.emit == "triangulation":
        out.write(format_triangulation(surface_gen.build_triangulation(spec)))
        return 0
    if spec.genus < 2:
        raise InputError("curves are generated for genus >= 2")
    fam = surface_gen.build_curves(spec)
    labels = surface_gen.edge_labels(spec)
    if args.emit == "curves":
        curves = [
            {"name": n, "family": surface_gen.family_of(n), "coloring": list(c.values)} for n, c in fam.curves
        ]
        print(_dump({"edges": labels, "curves": curves}), file=out)
    else:
        print(_dump({"edges": labels, "rows": fam.names, "matrix": [list(c.values) for _, c in fam.curves]}), file=out)
    return 0


def _grid_cell(job):
    g, p, moduli = job
    spec = surface_gen.SurfaceSpec(g, p)
    try:
        cert = surface_gen.verify_pants_split(spec, moduli)
    except surface_gen.GeneratorError as exc:
        return {"genus": g, "punctures": p, "error": str(exc)}, False
    return cert.to_dict(), cert.certified


def _grid(gmax: int, pmax: int, moduli, jobs: int, out) -> int:
    cells = [(g, p, tuple(moduli)) for g in range(2, gmax + 1) for p in range(1, pmax + 1)]
    ok = True
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = pool.map(_grid_cell, cells)
            for record, good in results:
                print(_dump(record), file=out, flush=True)
                ok &= good
    else:
        for cell in cells:
            record, good = _grid_cell(cell)
            print(_dump(record), file=out, flush=True)
            ok &= good
    return 0 if ok else 1


def cmd_verify_pants(args, out):
    moduli = args.n or [3, 5, 7, 9, 15]
    if args.grid:
        return _grid(args.grid[0], args.grid[1], moduli, args.jobs, out)
    if args.genus is None or args.punctures is None:
        raise InputError("give --genus and --punctures, or --grid GMAX PMAX")
    spec = _spec(args)
    if spec.genus < 2:
        raise InputError("the splitting check needs genus >= 2")
    try:
        cert = surface_gen.verify_pants_split(spec, moduli)
    except surface_gen.GeneratorError as exc:
        print(_dump({"genus": spec.genus, "punctures": spec.punctures, "error": str(exc)}), file=out)
        return 1
    print(_dump(cert.to_dict()), file=out)
    return 0 if cert.certified else 1


def cmd_grid_report(args, out):
    return _grid(args.grid[0], args.grid[1], args.n or [3, 5, 7, 9, 15], args.jobs, out)


def cmd_complementary(args, out):
    t = _load_triangulation(args.triangulation)
    f1 = _load_coloring(args.first, t)
    f2 = _load_coloring(args.second, t)
    r1, r2 = residue(f1, args.n), residue(f2, args.n)
    print(_dump({"N": args.n, "first": list(r1.values), "second": list(r2.values), "complementary": complementary(r1, r2)}), file=out)
    return 0


def cmd_threaded_form(args, out):
    t = _load_triangulation(args.triangulation)
    f = _load_coloring(args.coloring, t)
    word = threaded_form(f)
    factors = [{"curve": list(c.values), "level": k} for c, k in word.factors]
    print(_dump({"factors": factors, "lead": list(f.values)}), file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="skeinbasis", description="Colorings, residues and local-basis certificates.")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check a triangulation file")
    s.add_argument("triangulation")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("residue", help="reduce a coloring mod N")
    s.add_argument("--n", type=_odd, required=True)
    s.add_argument("triangulation")
    s.add_argument("coloring")
    s.set_defaults(func=cmd_residue)

    s = sub.add_parser("lift", help="admissible coloring with a given residue")
    s.add_argument("--n", type=_odd, required=True)
    s.add_argument("triangulation")
    s.add_argument("residue", help="file in the coloring format with entries in [0, N)")
    s.set_defaults(func=cmd_lift)

    s = sub.add_parser("decompose", help="primitive decomposition of a coloring")
    s.add_argument("triangulation")
    s.add_argument("coloring")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("cheb", help="Chebyshev polynomial T_k, or verify identities")
    s.add_argument("k", type=int, nargs="?")
    s.add_argument("--verify", type=int, metavar="MAX")
    s.set_defaults(func=cmd_cheb)

    s = sub.add_parser("check-basis", help="certify a family of |E| colorings")
    s.add_argument("--n", type=_odd, required=True)
    s.add_argument("--json", action="store_true")
    s.add_argument("--boundary", type=int, action="append", metavar="INDEX", help="family index of a central curve")
    s.add_argument("--punctures", type=int)
    s.add_argument("triangulation")
    s.add_argument("colorings", nargs="+")
    s.set_defaults(func=cmd_check_basis)

    s = sub.add_parser("gen-surface", help="generated triangulation, curves or matrix")
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--punctures", type=int, required=True)
    s.add_argument("--emit", choices=["triangulation", "curves", "matrix"], default="triangulation")
    s.set_defaults(func=cmd_gen_surface)

    s = sub.add_parser("verify-pants", help="determinant certificate for the pants splitting")
    s.add_argument("--genus", type=int)
    s.add_argument("--punctures", type=int)
    s.add_argument("--n", type=_odd, action="append")
    s.add_argument("--grid", type=int, nargs=2, metavar=("GMAX", "PMAX"))
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_verify_pants)

    s = sub.add_parser("grid-report", help="one JSON line per (g, p)")
    s.add_argument("--grid", type=int, nargs=2, metavar=("GMAX", "PMAX"), required=True)
    s.add_argument("--n", type=_odd, action="append")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_grid_report)

    s = sub.add_parser("complementary", help="do two residues sum to zero")
    s.add_argument("--n", type=_odd, required=True)
    s.add_argument("triangulation")
    s.add_argument("first")
    s.add_argument("second")
    s.set_defaults(func=cmd_complementary)

    s = sub.add_parser("threaded-form", help="threaded primitive word with a given lead")
    s.add_argument("triangulation")
    s.add_argument("coloring")
    s.set_defaults(func=cmd_threaded_form)
    return ap


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (InputError, FoldedUnsupported) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
