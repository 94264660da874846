"""Command-line surface tying the pipeline together.

Exit codes: 0 success / exact cover, 1 unsatisfiable or cover failure,
2 input error, 3 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import compiler, render, simulate, solver, wang
from .geometry import GeometryError, TorusLattice, bounding_box, is_connected

EXIT_OK = 0
EXIT_UNSAT = 1
EXIT_INPUT = 2
EXIT_LIMIT = 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read {path}: {exc}")


def _write(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _dump_json(path: str | None, obj) -> None:
    _write(path, json.dumps(obj, indent=1) + "\n")


def cmd_compile(args) -> int:
    tileset = wang.WangTileSet.from_json(_load_json(args.wang_set))
    pieces = compiler.compile_pieces(tileset)
    _dump_json(args.output, pieces.to_json())
    return EXIT_OK


def cmd_solve_wang(args) -> int:
    tileset = wang.WangTileSet.from_json(_load_json(args.wang_set))
    p, q = args.torus
    result = wang.solve_torus(tileset, p, q, args.mode)
    if args.mode == "count":
        _write(args.output, f"{result}\n")
        return EXIT_OK
    if args.mode == "enumerate":
        _dump_json(args.output, [t.to_json() for t in result])
        return EXIT_OK if result else EXIT_UNSAT
    if result is None:
        _write(args.output, "UNSAT\n")
        return EXIT_UNSAT
    _dump_json(args.output, result.to_json())
    return EXIT_OK


def _parse_region(args) -> solver.Region:
    if args.rect:
        return solver.Rectangle(args.rect[0], args.rect[1])
    if args.torus_lattice:
        x1, y1, x2, y2 = args.torus_lattice
        return solver.Torus(TorusLattice((x1, y1), (x2, y2)))
    raise CliError("need --rect W H or --torus-lattice X1 Y1 X2 Y2")


def cmd_solve_poly(args) -> int:
    pieces = _load_polyominoes(args.pieces)
    region = _parse_region(args)
    universe = solver.build_universe(region, pieces)
    try:
        result = solver.solve(universe, args.mode, limit=args.limit,
                              max_nodes=args.max_nodes)
    except solver.SearchLimitError as exc:
        print(f"LIMIT after {exc.partial_count} solutions", file=sys.stderr)
        return EXIT_LIMIT
    if args.mode == "count":
        _write(args.output, f"{result}\n")
        return EXIT_OK
    sols = [result] if args.mode == "first" and result is not None else \
        (result if args.mode == "enumerate" else [])
    if not sols:
        _write(args.output, "UNSAT\n")
        return EXIT_UNSAT
    _dump_json(args.output, [_tiling_json(region, s) for s in sols]
               if args.mode == "enumerate" else _tiling_json(region, sols[0]))
    return EXIT_OK


def _load_polyominoes(path: str):
    from .geometry import Polyomino
    obj = _load_json(path)
    entries = obj["pieces"] if isinstance(obj, dict) else obj
    return tuple(Polyomino(frozenset(map(tuple, e["cells"])), e["name"])
                 for e in entries)


def _tiling_json(region: solver.Region, placements) -> dict:
    out = {"placements": [pl.to_json() for pl in placements]}
    if isinstance(region, solver.Torus):
        out["lattice"] = [list(region.lattice.b1), list(region.lattice.b2)]
    else:
        out["rect"] = [region.width, region.height]
    return out


def cmd_simulate(args) -> int:
    tileset = wang.WangTileSet.from_json(_load_json(args.wang_set))
    tiling = wang.WangTiling.from_json(_load_json(args.wang_tiling))
    sim = simulate.emit_placements(tileset, tiling)
    _dump_json(args.output, sim.to_json())
    return EXIT_OK


def _region_from_tiling_json(obj: dict) -> solver.Region:
    if "lattice" in obj:
        return solver.Torus(TorusLattice(tuple(obj["lattice"][0]),
                                         tuple(obj["lattice"][1])))
    if "rect" in obj:
        return solver.Rectangle(*obj["rect"])
    raise CliError("tiling file lacks a region (lattice or rect)")


def cmd_verify(args) -> int:
    pieces = _load_polyominoes(args.pieces)
    obj = _load_json(args.tiling)
    region = _region_from_tiling_json(obj)
    placements = [solver.Placement.from_json(p) for p in obj["placements"]]
    report = solver.check_tiling(region, pieces, placements)
    _dump_json(args.output, report.to_json())
    return EXIT_OK if report.exact else EXIT_UNSAT


def cmd_render(args) -> int:
    obj = _load_json(args.input)
    spec = render.RenderSpec(cell_size=args.cell_size, grid=args.grid)
    if "placements" in obj:
        sim = simulate.SimulatedTiling.from_json(obj)
        if not args.pieces:
            raise CliError("rendering a tiling needs --pieces")
        svg = render.render_svg(spec, sim, _load_polyominoes(args.pieces))
    else:
        svg = render.render_svg(spec, _load_polyominoes(args.input))
    _write(args.output, svg)
    return EXIT_OK


def cmd_info(args) -> int:
    pieces = _load_polyominoes(args.pieces)
    rows = []
    for p in pieces:
        x0, y0, x1, y1 = bounding_box(p.cells)
        rows.append(f"{p.name:12s} {len(p.cells):6d} cells  "
                    f"bbox {x1 - x0}x{y1 - y0} at ({x0},{y0})  "
                    f"connected={is_connected(p.cells)}")
    _write(args.output, "\n".join(rows) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="polywang")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compile", help="Wang set -> seven-piece file")
    c.add_argument("wang_set")
    c.add_argument("-o", "--output")
    c.set_defaults(fn=cmd_compile)

    sw = sub.add_parser("solve-wang", help="search Wang torus tilings")
    sw.add_argument("wang_set")
    sw.add_argument("--torus", nargs=2, type=int, required=True,
                    metavar=("P", "Q"))
    sw.add_argument("--mode", choices=("first", "count", "enumerate"),
                    default="first")
    sw.add_argument("-o", "--output")
    sw.set_defaults(fn=cmd_solve_wang)

    sp = sub.add_parser("solve-poly", help="exact-cover tiling search")
    sp.add_argument("pieces")
    sp.add_argument("--rect", nargs=2, type=int, metavar=("W", "H"))
    sp.add_argument("--torus-lattice", nargs=4, type=int,
                    metavar=("X1", "Y1", "X2", "Y2"))
    sp.add_argument("--mode", choices=("first", "count", "enumerate"),
                    default="first")
    sp.add_argument("--limit", type=int)
    sp.add_argument("--max-nodes", type=int)
    sp.add_argument("-o", "--output")
    sp.set_defaults(fn=cmd_solve_poly)

    sm = sub.add_parser("simulate", help="Wang tiling -> polyomino tiling")
    sm.add_argument("wang_set")
    sm.add_argument("wang_tiling")
    sm.add_argument("-o", "--output")
    sm.set_defaults(fn=cmd_simulate)

    v = sub.add_parser("verify", help="check a tiling for exact cover")
    v.add_argument("pieces")
    v.add_argument("tiling")
    v.add_argument("-o", "--output")
    v.set_defaults(fn=cmd_verify)

    r = sub.add_parser("render", help="render pieces or tiling to SVG")
    r.add_argument("input")
    r.add_argument("--pieces", help="piece file (needed for tilings)")
    r.add_argument("--cell-size", type=int, default=4)
    r.add_argument("--grid", action="store_true")
    r.add_argument("-o", "--output")
    r.set_defaults(fn=cmd_render)

    i = sub.add_parser("info", help="summarize a piece file")
    i.add_argument("pieces")
    i.add_argument("-o", "--output")
    i.set_defaults(fn=cmd_info)
    return ap


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (wang.WangInputError, compiler.CompileError, GeometryError,
            solver.SolverInputError, render.RenderError,
            KeyError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
