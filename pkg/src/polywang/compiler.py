"""Build the seven polyominoes from a Wang tile set.

The pieces are assembled on a block grid: each grid cell holds one building
block, scaled by 10 units.  Tab blocks additionally carry a unit anchor
offset inside their grid cell (left slots at x=1, right slots at x=6).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import blocks
from .blocks import BLOCK, BlockKind, block_cells, geometry, partner
from .geometry import CellSet, Polyomino, Vec, canonical, is_connected, translate
from .wang import WangTileSet

PIECE_NAMES = ("encoder", "l_linker", "r_linker", "a_filler", "b_filler",
               "connector", "t_filler")

TAB_ANCHOR_LEFT: Vec = (1, 0)
TAB_ANCHOR_RIGHT: Vec = (6, 0)


class CompileError(ValueError):
    """Unsupported input or inconsistent block assembly."""


def encode_color(index: int, t: int) -> tuple[BlockKind, ...]:
    """Big-endian t-bit code of a color index as slot kinds (0=l, 1=r)."""
    if not 0 <= index < (1 << t):
        raise CompileError(f"color index {index} needs more than {t} bits")
    return tuple(
        BlockKind.SLOT_RIGHT if (index >> (t - 1 - j)) & 1 else BlockKind.SLOT_LEFT
        for j in range(t)
    )


def encoder_width(tileset: WangTileSet) -> int:
    return 2 * tileset.n * (2 * tileset.t + 1)


def encoder_block_at(tileset: WangTileSet, col: int, row: int) -> BlockKind:
    """Block kind at a column/row of the encoder's block grid.

    The encoder interlaces all n tiles: in each encoding segment, tile i
    (1-based) owns the even column 2(i-1).  Left segments carry the west
    (top row) and south (bottom row) color bits, right segments the north
    and east bits; segment j of a side carries bit j+1 of the color code.
    """
    n, t = tileset.n, tileset.t
    width = encoder_width(tileset)
    if not (0 <= col < width and 0 <= row < 3):
        raise CompileError(f"encoder position ({col}, {row}) out of range")
    if row == 1:
        if col == 0:
            return BlockKind.A_DENT
        if col == width - 1:
            return BlockKind.B_BUMP
        return BlockKind.FUNCTIONAL
    if col % 2 == 1:
        return BlockKind.Y_PLUS if row == 2 else BlockKind.Y_MINUS
    seg, rem = divmod(col, 2 * n)
    if seg == t:
        return BlockKind.FUNCTIONAL
    tile = tileset.tiles[rem // 2]
    if seg < t:
        color = tile.west if row == 2 else tile.south
        bit_pos = seg + 1
    else:
        color = tile.north if row == 2 else tile.east
        bit_pos = seg - t
    return encode_color(color, t)[bit_pos - 1]


@dataclass
class BlockGrid:
    """Sparse block-coordinate grid; values are (kind, unit anchor)."""

    entries: dict[tuple[int, int], tuple[BlockKind, Vec]] = field(default_factory=dict)

    def place(self, col: int, row: int, kind: BlockKind, anchor: Vec = (0, 0)):
        if (col, row) in self.entries:
            raise CompileError(f"block cell ({col}, {row}) already occupied")
        self.entries[(col, row)] = (kind, anchor)


def assemble(grid: BlockGrid, name: str) -> Polyomino:
    """Realize a block grid as a unit-cell polyomino.

    Cells may only coincide where a bump exactly fills a neighboring dent;
    a dent that faces an occupied neighbor must end up filled.
    """
    occupied = grid.entries
    cells: set = set()
    for (col, row), (kind, anchor) in occupied.items():
        geo = geometry(kind)
        shift = (BLOCK * col + anchor[0], BLOCK * row + anchor[1])
        placed = translate(geo.cells, shift)
        clash = cells & placed
        if clash:
            raise CompileError(f"{name}: overlap at {sorted(clash)[:3]}")
        cells |= placed
        if geo.bump_dir is not None:
            nb = (col + geo.bump_dir[0], row + geo.bump_dir[1])
            if nb in occupied and occupied[nb][0] != partner(kind):
                raise CompileError(f"{name}: bump at {(col, row)} hits {nb}")
    for (col, row), (kind, anchor) in occupied.items():
        geo = geometry(kind)
        if geo.dent_dir is None:
            continue
        nb = (col + geo.dent_dir[0], row + geo.dent_dir[1])
        if nb in occupied:
            shift = (BLOCK * col + anchor[0], BLOCK * row + anchor[1])
            if not translate(geo.dent, shift) <= cells:
                raise CompileError(f"{name}: unfilled dent at {(col, row)}")
    if not is_connected(cells):
        raise CompileError(f"{name}: assembly is not connected")
    return Polyomino(frozenset(cells), name)


def _encoder_grid(tileset: WangTileSet) -> BlockGrid:
    grid = BlockGrid()
    for row in range(3):
        for col in range(encoder_width(tileset)):
            grid.place(col, row, encoder_block_at(tileset, col, row))
    return grid


def _linker_grid(tileset: WangTileSet, anchor: Vec) -> BlockGrid:
    grid = _linker_body(tileset)
    grid.place(0, -1, BlockKind.TAB, anchor)
    grid.place(0, 3, BlockKind.TAB, anchor)
    return grid


def _linker_body(tileset: WangTileSet, col0: int = 0, row0: int = 0,
                 grid: BlockGrid | None = None) -> BlockGrid:
    if grid is None:
        grid = BlockGrid()
    width = 2 * tileset.n
    for col in range(width):
        grid.place(col0 + col, row0 + 0,
                   BlockKind.Y_PLUS_DENT if col % 2 else BlockKind.FUNCTIONAL)
        grid.place(col0 + col, row0 + 2,
                   BlockKind.Y_MINUS_DENT if col % 2 else BlockKind.FUNCTIONAL)
        if col == 0:
            mid = BlockKind.X_DENT
        elif col == width - 1:
            mid = BlockKind.X_BUMP
        else:
            mid = BlockKind.FUNCTIONAL
        grid.place(col0 + col, row0 + 1, mid)
    return grid


def _filler_grid(dent: BlockKind, bump: BlockKind, col0: int = 0, row0: int = 0,
                 grid: BlockGrid | None = None) -> BlockGrid:
    if grid is None:
        grid = BlockGrid()
    grid.place(col0, row0 + 0, BlockKind.FUNCTIONAL)
    grid.place(col0, row0 + 1, dent)
    grid.place(col0, row0 + 2, BlockKind.FUNCTIONAL)
    grid.place(col0 + 1, row0 + 0, BlockKind.Y_MINUS)
    grid.place(col0 + 1, row0 + 1, bump)
    grid.place(col0 + 1, row0 + 2, BlockKind.Y_PLUS)
    return grid


def _connector_grid(tileset: WangTileSet) -> BlockGrid:
    grid = _linker_body(tileset, 0, 0)
    # Mixed filler (b dent west, A bump east) between the two bodies,
    # left-aligned; its Y bumps cancel the bodies' dents at column 1.
    _filler_grid(BlockKind.B_DENT, BlockKind.A_BUMP, 0, 3, grid)
    _linker_body(tileset, 0, 6, grid)
    return grid


@dataclass(frozen=True)
class SevenPieceSet:
    """The compiled pieces, in canonical order, plus their source set."""

    pieces: tuple[Polyomino, ...]
    source: WangTileSet

    def __post_init__(self):
        assert tuple(p.name for p in self.pieces) == PIECE_NAMES

    def __getitem__(self, name: str) -> Polyomino:
        for p in self.pieces:
            if p.name == name:
                return p
        raise KeyError(name)

    @property
    def cell_counts(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.pieces)

    def to_json(self) -> dict:
        return {
            "source": self.source.to_json(),
            "n": self.source.n,
            "m": self.source.m,
            "t": self.source.t,
            "pieces": [
                {"name": p.name, "cells": [list(c) for c in p.canonical_cells()]}
                for p in self.pieces
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SevenPieceSet":
        source = WangTileSet.from_json(obj["source"])
        pieces = tuple(
            Polyomino(frozenset(map(tuple, entry["cells"])), entry["name"])
            for entry in obj["pieces"]
        )
        return cls(pieces, source)


def compile_pieces(tileset: WangTileSet) -> SevenPieceSet:
    """Compile a Wang tile set into its seven polyominoes."""
    if tileset.n < 2 or tileset.m < 2:
        raise CompileError("need at least 2 tiles and 2 colors")
    pieces = (
        assemble(_encoder_grid(tileset), "encoder"),
        assemble(_linker_grid(tileset, TAB_ANCHOR_LEFT), "l_linker"),
        assemble(_linker_grid(tileset, TAB_ANCHOR_RIGHT), "r_linker"),
        assemble(_filler_grid(BlockKind.A_DENT, BlockKind.A_BUMP), "a_filler"),
        assemble(_filler_grid(BlockKind.B_DENT, BlockKind.B_BUMP), "b_filler"),
        assemble(_connector_grid(tileset), "connector"),
        Polyomino(blocks.TAB_CELLS, "t_filler"),
    )
    return SevenPieceSet(pieces, tileset)


def load_pieces(path: str) -> SevenPieceSet:
    with open(path) as fh:
        return SevenPieceSet.from_json(json.load(fh))
