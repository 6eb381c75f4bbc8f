"""Command-line front end.

Verbs: validate, fp-dims, characters, trace, flexible, frobenius, vectg,
builtin.  Output is byte-deterministic for fixed inputs and flags; ``--json``
emits one JSON document per invocation.  Exit codes: 0 computed, 1 an
``--assert-matched`` query failed, 2 malformed input or usage, 3 numeric
failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import catalog, files
from .chars import DimChar, enumerate_characters, validate_dim_char
from .common import (
    DEFAULT_TOL,
    NumericError,
    PreconditionError,
    StructuralError,
    UnsupportedError,
    UsageError,
)
from .frobenius import frobenius_report, morita_rescale_check
from .fusion import FusionRing, fp_dimensions, validate_fusion_ring
from .groups import GroupTable, group_characters, subgroups, vect_g_module
from .nimrep import NimRep, regular_module, validate_nimrep
from .solver import matched_report, solve_module_trace

EXIT_OK = 0
EXIT_ASSERT = 1
EXIT_INPUT = 2
EXIT_NUMERIC = 3


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _fmt_complex(z: complex) -> str:
    re, im = files.round12(z.real), files.round12(z.imag)
    if im == 0.0:
        return _fmt(re)
    sign = "+" if im >= 0 else "-"
    return f"{_fmt(re)}{sign}{_fmt(abs(im))}i"


class _Failure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load_valid_ring(path: str) -> FusionRing:
    ring = files.load_ring(path)
    report = validate_fusion_ring(ring)
    if not report.valid:
        lines = [f"{path}: ring violates {len(report.violations)} axiom instance(s)"]
        lines += [f"  {v.axiom} at {v.index}: {v.lhs} != {v.rhs}" for v in report.violations[:20]]
        raise _Failure(EXIT_INPUT, "\n".join(lines))
    return ring


def _load_char(source: str, ring: FusionRing, tol: float) -> DimChar:
    try:
        index = int(source)
    except ValueError:
        char = files.load_char(source, ring)
    else:
        chars = enumerate_characters(ring, tol)
        if not 0 <= index < len(chars):
            raise UsageError(f"character index {index} out of range (ring has {len(chars)})")
        return chars[index]
    report = validate_dim_char(char, tol)
    if not report.valid:
        raise _Failure(EXIT_INPUT, f"{source}: invalid character ({report.violations[0].axiom})")
    return char


def _load_valid_module(path: str, ring: FusionRing) -> NimRep:
    rep = files.load_module(path, ring)
    report = validate_nimrep(rep)
    if not report.valid:
        raise _Failure(EXIT_INPUT, f"{path}: invalid module ({report.violations[0].axiom})")
    return rep


def _load_group(source: str) -> GroupTable:
    if source.startswith("Z:") or source in ("S3", "Z2xZ2"):
        return catalog.builtin_group(source)
    return files.load_group(source)


def _print_cert(cert, out) -> None:
    print(f"matched:   {str(cert.matched).lower()}", file=out)
    print(f"dimC:      {_fmt(cert.dim_c)}", file=out)
    print(f"C:         {_fmt_complex(cert.c)}", file=out)
    print(f"spherical by C: {str(cert.spherical_by_c).lower()}", file=out)
    if cert.trace is not None:
        for i, z in enumerate(cert.trace.d):
            print(f"d[{i}]:      {_fmt_complex(z)}", file=out)
    for name in sorted(cert.residuals):
        print(f"residual {name}: {_fmt(cert.residuals[name])}", file=out)
    for diag in cert.diagnostics:
        print(f"diagnostic: {diag}", file=out)


def _cmd_validate(args, out) -> int:
    ring = files.load_ring(args.ring)
    report = validate_fusion_ring(ring)
    if args.json:
        payload = report.to_dict()
        payload["hash"] = ring.content_hash()
        print(files.dumps(payload), file=out)
    else:
        print(f"ring hash: {ring.content_hash()}", file=out)
        print(f"valid:     {str(report.valid).lower()}", file=out)
        for v in report.violations:
            print(f"  {v.axiom} at {v.index}: {v.lhs} != {v.rhs}", file=out)
    return EXIT_OK if report.valid else EXIT_INPUT


def _cmd_fp_dims(args, out) -> int:
    ring = _load_valid_ring(args.ring)
    dims = fp_dimensions(ring)
    if args.json:
        print(files.dumps({"labels": list(ring.labels), "fp_dims": [float(x) for x in dims]}), file=out)
    else:
        for label, x in zip(ring.labels, dims):
            print(f"{label}: {_fmt(x)}", file=out)
    return EXIT_OK


def _cmd_characters(args, out) -> int:
    ring = _load_valid_ring(args.ring)
    chars = enumerate_characters(ring, args.tol)
    if args.json:
        payload = {
            "labels": list(ring.labels),
            "characters": [[files.complex_pair(z) for z in ch.d] for ch in chars],
        }
        print(files.dumps(payload), file=out)
    else:
        for idx, ch in enumerate(chars):
            row = "  ".join(f"{lbl}: {_fmt_complex(z)}" for lbl, z in zip(ring.labels, ch.d))
            print(f"char {idx}:  {row}", file=out)
    return EXIT_OK


def _cmd_trace(args, out) -> int:
    ring = _load_valid_ring(args.ring)
    char = _load_char(args.char, ring, args.tol)
    rep = _load_valid_module(args.module, ring)
    cert = solve_module_trace(ring, char, rep, args.tol)
    if args.json:
        print(files.dumps(cert.to_dict()), file=out)
    else:
        _print_cert(cert, out)
    if args.assert_matched and not cert.matched:
        return EXIT_ASSERT
    return EXIT_OK


def _cmd_flexible(args, out) -> int:
    ring = _load_valid_ring(args.ring)
    char = _load_char(args.char, ring, args.tol)
    reps = [_load_valid_module(p, ring) for p in args.modules]
    report = matched_report(ring, char, reps, args.tol)
    if args.json:
        print(files.dumps(report.to_dict()), file=out)
    else:
        print(f"flexible: {str(report.flexible).lower()}  ({report.note})", file=out)
        for path, cert in zip(args.modules, report.certificates):
            print(f"  {path}: {'matched' if cert.matched else 'unmatched'}", file=out)
    if args.assert_matched and not report.flexible:
        return EXIT_ASSERT
    return EXIT_OK


def _cmd_frobenius(args, out) -> int:
    ring = _load_valid_ring(args.ring)
    char = _load_char(args.char, ring, args.tol)
    rep = _load_valid_module(args.module, ring)
    cert = solve_module_trace(ring, char, rep, args.tol)
    frob = frobenius_report(ring, char, rep, args.object, cert, args.tol)
    morita = None
    if cert.matched:
        morita = morita_rescale_check(ring, char, rep, args.object, cert, args.tol)
    if args.json:
        payload = cert.to_dict()
        payload["frobenius"] = frob.to_dict()
        if morita is not None:
            payload["frobenius"]["morita"] = morita.to_dict()
        print(files.dumps(payload), file=out)
    else:
        _print_cert(cert, out)
        print(f"object:    {frob.object_index}", file=out)
        mults = "  ".join(
            f"{lbl}:{int(x)}" for lbl, x in zip(ring.labels, frob.multiplicities)
        )
        print(f"inner-hom multiplicities: {mults}", file=out)
        print(f"dimA:      {_fmt(frob.dim_a)}", file=out)
        print(f"haploid:   {str(frob.haploid).lower()}", file=out)
        print(f"beta1:     {_fmt(frob.beta_1)}", file=out)
        print(f"betaA:     {_fmt(frob.beta_a)}", file=out)
        print(f"positivity_ok: {str(frob.positivity_ok).lower()}", file=out)
        if morita is not None:
            print(f"morita scale: {_fmt_complex(morita.scale)}", file=out)
            print(f"morita residual: {_fmt(morita.max_residual)} ok: {str(morita.ok).lower()}", file=out)
    if args.assert_matched and not cert.matched:
        return EXIT_ASSERT
    return EXIT_OK


def _emit_group_files(table: GroupTable, subs, chars, directory) -> list[str]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    from .groups import group_ring  # local import to keep module top light

    written = []
    ring = group_ring(table)
    files.save_group(table, directory / "group.json")
    written.append("group.json")
    files.save_ring(ring, directory / "ring.json")
    written.append("ring.json")
    for idx, ch in enumerate(chars):
        name = f"char-{idx:02d}.json"
        files.save_char(ch, directory / name)
        written.append(name)
    for idx, sub in enumerate(subs):
        name = f"module-H{idx:02d}.json"
        files.save_module(vect_g_module(table, sub), directory / name)
        written.append(name)
    return written


def _cmd_vectg(args, out) -> int:
    table = _load_group(args.group)
    abelian = table.is_abelian()
    subs = subgroups(table)
    chars = group_characters(table) if abelian else []
    if args.characters and not abelian:
        raise UnsupportedError("characters are only enumerated for abelian groups")
    written = []
    if args.emit:
        written = _emit_group_files(table, subs, chars, args.emit)
    if args.json:
        payload = {
            "order": table.order,
            "abelian": abelian,
            "subgroup_count": len(subs),
        }
        if args.subgroups:
            payload["subgroups"] = [list(s) for s in subs]
        if args.characters:
            payload["characters"] = [[files.complex_pair(z) for z in ch.d] for ch in chars]
        if args.emit:
            payload["written"] = written
        print(files.dumps(payload), file=out)
    else:
        print(f"order:     {table.order}", file=out)
        print(f"abelian:   {str(abelian).lower()}", file=out)
        print(f"subgroups: {len(subs)}", file=out)
        if args.subgroups:
            for idx, sub in enumerate(subs):
                elems = ", ".join(table.label(x) for x in sub)
                print(f"  H{idx:02d} (order {len(sub)}): {{{elems}}}", file=out)
        if args.characters:
            for idx, ch in enumerate(chars):
                row = "  ".join(
                    f"{table.label(a)}: {_fmt_complex(z)}" for a, z in enumerate(ch.d)
                )
                print(f"char {idx}:  {row}", file=out)
        for name in written:
            print(f"wrote {name}", file=out)
    return EXIT_OK


def _cmd_builtin(args, out) -> int:
    ring, chars = catalog.builtin(args.name)
    written = []
    if args.emit:
        directory = Path(args.emit)
        directory.mkdir(parents=True, exist_ok=True)
        files.save_ring(ring, directory / "ring.json")
        written.append("ring.json")
        for idx, ch in enumerate(chars):
            name = f"char-{idx:02d}.json"
            files.save_char(ch, directory / name)
            written.append(name)
        files.save_module(regular_module(ring), directory / "module-regular.json")
        written.append("module-regular.json")
    if args.json:
        payload = {
            "name": args.name,
            "hash": ring.content_hash(),
            "rank": ring.rank,
            "labels": list(ring.labels),
            "fp_dims": [float(x) for x in fp_dimensions(ring)],
            "characters": [[files.complex_pair(z) for z in ch.d] for ch in chars],
        }
        if args.emit:
            payload["written"] = written
        print(files.dumps(payload), file=out)
    else:
        print(f"name:      {args.name}", file=out)
        print(f"ring hash: {ring.content_hash()}", file=out)
        print(f"labels:    {', '.join(ring.labels)}", file=out)
        dims = "  ".join(
            f"{lbl}: {_fmt(x)}" for lbl, x in zip(ring.labels, fp_dimensions(ring))
        )
        print(f"fp dims:   {dims}", file=out)
        for idx, ch in enumerate(chars):
            row = "  ".join(f"{lbl}: {_fmt_complex(z)}" for lbl, z in zip(ring.labels, ch.d))
            print(f"char {idx}:  {row}", file=out)
        for name in written:
            print(f"wrote {name}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modtrace",
        description="Module-trace existence and quantum-dimension reports for fusion rings.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="comparison tolerance")
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument(
        "--assert-matched",
        action="store_true",
        help="exit 1 when a trace query is unmatched / not flexible",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("validate", parents=[common], help="check the fusion ring axioms")
    p.add_argument("ring")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("fp-dims", parents=[common], help="Frobenius-Perron dimensions")
    p.add_argument("ring")
    p.set_defaults(func=_cmd_fp_dims)

    p = sub.add_parser("characters", parents=[common], help="enumerate pivotal candidates")
    p.add_argument("ring")
    p.set_defaults(func=_cmd_characters)

    p = sub.add_parser("trace", parents=[common], help="module-trace existence certificate")
    p.add_argument("ring")
    p.add_argument("--char", required=True, help="character file or index")
    p.add_argument("--module", required=True, help="module file")
    p.set_defaults(func=_cmd_trace)

    p = sub.add_parser("flexible", parents=[common], help="trace test over a module list")
    p.add_argument("ring")
    p.add_argument("--char", required=True, help="character file or index")
    p.add_argument("--modules", required=True, nargs="+", help="module files")
    p.set_defaults(func=_cmd_flexible)

    p = sub.add_parser("frobenius", parents=[common], help="inner-hom algebra report")
    p.add_argument("ring")
    p.add_argument("--char", required=True, help="character file or index")
    p.add_argument("--module", required=True, help="module file")
    p.add_argument("--object", required=True, type=int, help="simple module object index")
    p.set_defaults(func=_cmd_frobenius)

    p = sub.add_parser("vectg", parents=[common], help="group-graded instance generator")
    p.add_argument("--group", required=True, help="group file or builtin (Z:<n>, S3, Z2xZ2)")
    p.add_argument("--subgroups", action="store_true", help="list all subgroups")
    p.add_argument("--characters", action="store_true", help="list the linear characters")
    p.add_argument("--emit", metavar="DIR", help="write ring/char/module files")
    p.set_defaults(func=_cmd_vectg)

    p = sub.add_parser("builtin", parents=[common], help="builtin ring catalogue")
    p.add_argument("name", help="fibonacci, ising, rep_s3 or zn:<n>")
    p.add_argument("--emit", metavar="DIR", help="write ring/char/module files")
    p.set_defaults(func=_cmd_builtin)

    return parser


def run(argv, out=None, err=None) -> int:
    """Parse and execute one invocation; returns the exit code."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except _Failure as exc:
        print(str(exc), file=err)
        return exc.code
    except (StructuralError, UnsupportedError, PreconditionError, UsageError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except NumericError as exc:
        print(f"numeric failure: {exc}", file=err)
        return EXIT_NUMERIC


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
