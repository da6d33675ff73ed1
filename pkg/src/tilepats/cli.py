"""Command-line front end.

Exit codes: 0 success, 1 legitimate negative answer (unsolvable, mismatch,
stuck), 2 usage or file-format error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import formats, reduction, render, solver
from .assembler import assemble, column_glue_trace, row_glue_trace, verify_solves
from .tiles import canonicalize

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _load(path, parser, what):
    if path is None:
        raise UsageError(f"--{what} is required")
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parser(text, source=str(path))


def _emit(data, out):
    if isinstance(data, str):
        data = data.encode()
    if out is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        Path(out).write_bytes(data)


def _height(args, inst):
    if args.height is not None:
        return args.height
    if args.min_height is not None:
        return reduction.display_height(inst, args.min_height)
    return reduction.circuit_height(inst)


def _palette(args):
    if args.palette is None:
        return render.DEFAULT_PALETTE
    return render.merge_palette(_load(args.palette, formats.parse_palette, "palette"))


def cmd_gen_circuit(args):
    inst = _load(args.instance, formats.parse_instance, "instance")
    p = reduction.build_circuit_pattern(inst, _height(args, inst))
    _emit(formats.format_pattern(p), args.out)
    return EXIT_OK


def cmd_gen_t26(args):
    _emit(formats.format_tileset(reduction.T26), args.out)
    return EXIT_OK


def cmd_gen_seed(args):
    inst = _load(args.instance, formats.parse_instance, "instance")
    if args.choices is None:
        raise UsageError("--choices is required")
    seed = reduction.build_seed(inst, _height(args, inst), args.choices)
    _emit(formats.format_seed(seed), args.out)
    return EXIT_OK


def _system(args):
    ts = _load(args.tileset, formats.parse_tileset, "tileset")
    seed = _load(args.seed, formats.parse_seed, "seed")
    return ts, seed


def cmd_assemble(args):
    ts, seed = _system(args)
    out = assemble(ts, seed, seed.width, seed.height)
    if out.complete and args.out is not None:
        Path(args.out).write_text(formats.format_pattern(out.assembly.color_pattern()))
    line = f"status={out.status} width={seed.width} height={seed.height} placed={len(out.assembly.placed)}"
    if out.cell is not None:
        line += f" cell={out.cell[0]},{out.cell[1]}"
    print(line)
    return EXIT_OK if out.complete else EXIT_NEGATIVE


def cmd_verify(args):
    ts, seed = _system(args)
    p = _load(args.pattern, formats.parse_pattern, "pattern")
    if (seed.width, seed.height) != (p.width, p.height):
        raise UsageError(f"seed is {seed.width}x{seed.height} but pattern is {p.width}x{p.height}")
    v = verify_solves(ts, seed, p)
    if v:
        print("verified=true")
        return EXIT_OK
    cell = f" cell={v.cell[0]},{v.cell[1]}" if v.cell else ""
    print(f"verified=false{cell} reason={v.reason.replace(' ', '_')}")
    return EXIT_NEGATIVE


def cmd_trace(args):
    ts, seed = _system(args)
    out = assemble(ts, seed, seed.width, seed.height)
    if (args.column is None) == (args.row is None):
        raise UsageError("give exactly one of --column or --row")
    try:
        if args.column is not None:
            tr = column_glue_trace(out.assembly, args.column)
        else:
            tr = row_glue_trace(out.assembly, args.row)
    except ValueError as exc:
        print(f"error={str(exc).replace(' ', '_')}")
        return EXIT_NEGATIVE
    line = f"{tr.side}={tr.position} glues={','.join(tr.glues)}"
    try:
        line += f" value={reduction.decode_trace(tr.glues)}"
    except ValueError:
        pass
    print(line)
    return EXIT_OK


def cmd_solve_ss(args):
    inst = _load(args.instance, formats.parse_instance, "instance")
    h = _height(args, inst)
    choice = reduction.solve_ss_by_assembly(inst, h)
    if choice is None:
        print("unsolvable")
        return EXIT_NEGATIVE
    print(reduction.format_choices(choice))
    return EXIT_OK


def cmd_pats_min(args):
    p = _load(args.pattern, formats.parse_pattern, "pattern")
    guard = args.guard if args.guard is not None else solver.DEFAULT_GUARD
    try:
        cert = solver.minimize_tileset(p, budget=args.budget, guard=guard)
        status = "optimal"
    except solver.SearchLimit as exc:
        if exc.best is None:
            print(f"k=none status=bound lower_bound={exc.lower_bound}")
            return EXIT_NEGATIVE
        cert, status = exc.best, "bound"
    if args.out is not None:
        Path(f"{args.out}.tiles").write_text(formats.format_tileset(cert.tileset))
        Path(f"{args.out}.seed").write_text(formats.format_seed(cert.seed))
    print(f"k={cert.k} status={status}")
    return EXIT_OK


def cmd_brute_min(args):
    p = _load(args.pattern, formats.parse_pattern, "pattern")
    guard = args.guard if args.guard is not None else solver.BRUTE_FORCE_GUARD
    print(f"k={solver.brute_force_min(p, guard=guard)}")
    return EXIT_OK


def cmd_splice(args):
    p1 = _load(args.pattern, formats.parse_pattern, "pattern")
    p2 = _load(args.pattern2, formats.parse_pattern, "pattern2")
    if args.v1 is None or args.v2 is None:
        raise UsageError("--v1 and --v2 are required")
    _emit(formats.format_pattern(reduction.splice(p1, args.v1, p2, args.v2, p1.height)), args.out)
    return EXIT_OK


def cmd_canon(args):
    ts = _load(args.tileset, formats.parse_tileset, "tileset")
    _emit(formats.format_tileset(canonicalize(ts)), args.out)
    return EXIT_OK


def cmd_render(args):
    if args.pattern is not None:
        obj = _load(args.pattern, formats.parse_pattern, "pattern")
    else:
        ts, seed = _system(args)
        out = assemble(ts, seed, seed.width, seed.height)
        if not out.complete:
            print(f"status={out.status} cell={out.cell[0]},{out.cell[1]}", file=sys.stderr)
            return EXIT_NEGATIVE
        obj = out.assembly
    try:
        data = render.render(obj, args.format, _palette(args), args.scale)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    _emit(data, args.out)
    return EXIT_OK


COMMANDS = {
    "gen-circuit": (cmd_gen_circuit, "write the circuit pattern for a Subset Sum instance"),
    "gen-t26": (cmd_gen_t26, "write the 26-type circuit tile set"),
    "gen-seed": (cmd_gen_seed, "write the seed for a choice string such as '**x*'"),
    "assemble": (cmd_assemble, "grow a tile set from a seed"),
    "verify": (cmd_verify, "check that a tile set and seed assemble a pattern"),
    "trace": (cmd_trace, "print the east glues of a column or north glues of a row"),
    "solve-ss": (cmd_solve_ss, "solve Subset Sum by searching circuit seeds"),
    "pats-min": (cmd_pats_min, "exact minimum tile set for a small pattern"),
    "brute-min": (cmd_brute_min, "minimum tile count by exhaustive enumeration"),
    "splice": (cmd_splice, "join two circuit patterns with a connector element"),
    "canon": (cmd_canon, "canonical form of a tile set"),
    "render": (cmd_render, "draw a pattern or assembly as ASCII or PPM"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tilepats", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        p = sub.add_parser(name, help=help_)
        p.add_argument("--instance")
        p.add_argument("--height", type=int)
        p.add_argument("--min-height", type=int)
        p.add_argument("--choices")
        p.add_argument("--pattern")
        p.add_argument("--tileset")
        p.add_argument("--seed")
        p.add_argument("--out")
        p.add_argument("--format", choices=("ascii", "ppm"), default="ascii")
        p.add_argument("--scale", type=int, default=1)
        p.add_argument("--guard", type=int)
        p.add_argument("--palette")
        if name == "pats-min":
            p.add_argument("--budget", type=int)
        if name == "trace":
            p.add_argument("--column", type=int)
            p.add_argument("--row", type=int)
        if name == "splice":
            p.add_argument("--pattern2")
            p.add_argument("--v1", type=int)
            p.add_argument("--v2", type=int)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    func = COMMANDS[args.command][0]
    try:
        return func(args)
    except (UsageError, formats.FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
