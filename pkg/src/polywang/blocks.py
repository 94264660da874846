"""Catalog of the elementary building blocks.

Every block is a 10x10 functional square, possibly with a bump protruding
outside the frame or a dent/slot carved out of it.  Geometry is transcribed
as rectilinear polygons and rasterized once at import time.  Blocks are
anchored at their southwest frame corner.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .geometry import (
    CellSet,
    RectilinearPolygon,
    Vec,
    rasterize,
    translate,
)

BLOCK = 10  # frame edge length in unit cells


class BlockKind(Enum):
    FUNCTIONAL = "functional"
    SLOT_LEFT = "l"
    SLOT_RIGHT = "r"
    TAB = "tab"
    Y_PLUS = "Y+"
    Y_PLUS_DENT = "y+"
    Y_MINUS = "Y-"
    Y_MINUS_DENT = "y-"
    X_BUMP = "X"
    X_DENT = "x"
    A_BUMP = "A"
    A_DENT = "a"
    B_BUMP = "B"
    B_DENT = "b"


# Slot/bump outlines, one authoritative polygon per shape.
_SLOT_POLY = RectilinearPolygon(
    ((1, 0), (1, 10), (2, 10), (2, 9), (4, 9), (4, 6), (3, 6), (3, 8),
     (2, 8), (2, 2), (3, 2), (3, 4), (4, 4), (4, 1), (2, 1), (2, 0))
)
_Y_PLUS_POLY = RectilinearPolygon(
    ((4, 10), (4, 13), (2, 13), (2, 12), (3, 12), (3, 11), (1, 11),
     (1, 14), (5, 14), (5, 10))
)
_Y_MINUS_POLY = RectilinearPolygon(
    ((4, 0), (4, -3), (2, -3), (2, -2), (3, -2), (3, -1), (1, -1),
     (1, -4), (5, -4), (5, 0))
)
_X_POLY = RectilinearPolygon(
    ((10, 9), (12, 9), (12, 1), (11, 1), (11, 8), (10, 8))
)
_A_POLY = RectilinearPolygon(
    ((10, 9), (14, 9), (14, 6), (12, 6), (12, 1), (11, 1), (11, 7),
     (13, 7), (13, 8), (10, 8))
)
_B_POLY = RectilinearPolygon(
    ((10, 9), (14, 9), (14, 2), (12, 2), (12, 1), (11, 1), (11, 7),
     (12, 7), (12, 3), (13, 3), (13, 8), (10, 8))
)

SQUARE: CellSet = frozenset((x, y) for x in range(BLOCK) for y in range(BLOCK))

SLOT_CELLS = rasterize(_SLOT_POLY)               # the l-slot; r is this +(5,0)
TAB_CELLS = translate(SLOT_CELLS, (-1, 0))       # tab with its own origin at x=0

_YP_BUMP = rasterize(_Y_PLUS_POLY)
_YM_BUMP = rasterize(_Y_MINUS_POLY)
_X_BUMP = rasterize(_X_POLY)
_A_BUMP = rasterize(_A_POLY)
_B_BUMP = rasterize(_B_POLY)


@dataclass(frozen=True)
class BlockGeometry:
    """Block cells split into the frame part and any protrusion.

    ``dent`` holds the missing frame cells for dent/slot kinds and
    ``dent_dir`` the block-grid direction of the neighbor whose bump fills
    the dent (slots have no such direction: they are filled by tabs).
    ``bump_dir`` is the direction a protrusion extends into.
    """

    base: CellSet
    protrusion: CellSet = frozenset()
    dent: CellSet = frozenset()
    dent_dir: Vec | None = None
    bump_dir: Vec | None = None

    @property
    def cells(self) -> CellSet:
        return self.base | self.protrusion


_CATALOG: dict[BlockKind, BlockGeometry] = {
    BlockKind.FUNCTIONAL: BlockGeometry(SQUARE),
    BlockKind.SLOT_LEFT: BlockGeometry(SQUARE - SLOT_CELLS, dent=SLOT_CELLS),
    BlockKind.SLOT_RIGHT: BlockGeometry(
        SQUARE - translate(SLOT_CELLS, (5, 0)),
        dent=translate(SLOT_CELLS, (5, 0)),
    ),
    BlockKind.TAB: BlockGeometry(TAB_CELLS),
    BlockKind.Y_PLUS: BlockGeometry(SQUARE, protrusion=_YP_BUMP, bump_dir=(0, 1)),
    BlockKind.Y_PLUS_DENT: BlockGeometry(
        SQUARE - translate(_YP_BUMP, (0, -BLOCK)),
        dent=translate(_YP_BUMP, (0, -BLOCK)),
        dent_dir=(0, -1),
    ),
    BlockKind.Y_MINUS: BlockGeometry(SQUARE, protrusion=_YM_BUMP, bump_dir=(0, -1)),
    BlockKind.Y_MINUS_DENT: BlockGeometry(
        SQUARE - translate(_YM_BUMP, (0, BLOCK)),
        dent=translate(_YM_BUMP, (0, BLOCK)),
        dent_dir=(0, 1),
    ),
    BlockKind.X_BUMP: BlockGeometry(SQUARE, protrusion=_X_BUMP, bump_dir=(1, 0)),
    BlockKind.X_DENT: BlockGeometry(
        SQUARE - translate(_X_BUMP, (-BLOCK, 0)),
        dent=translate(_X_BUMP, (-BLOCK, 0)),
        dent_dir=(-1, 0),
    ),
    BlockKind.A_BUMP: BlockGeometry(SQUARE, protrusion=_A_BUMP, bump_dir=(1, 0)),
    BlockKind.A_DENT: BlockGeometry(
        SQUARE - translate(_A_BUMP, (-BLOCK, 0)),
        dent=translate(_A_BUMP, (-BLOCK, 0)),
        dent_dir=(-1, 0),
    ),
    BlockKind.B_BUMP: BlockGeometry(SQUARE, protrusion=_B_BUMP, bump_dir=(1, 0)),
    BlockKind.B_DENT: BlockGeometry(
        SQUARE - translate(_B_BUMP, (-BLOCK, 0)),
        dent=translate(_B_BUMP, (-BLOCK, 0)),
        dent_dir=(-1, 0),
    ),
}

_PARTNER = {
    BlockKind.Y_PLUS: BlockKind.Y_PLUS_DENT,
    BlockKind.Y_PLUS_DENT: BlockKind.Y_PLUS,
    BlockKind.Y_MINUS: BlockKind.Y_MINUS_DENT,
    BlockKind.Y_MINUS_DENT: BlockKind.Y_MINUS,
    BlockKind.X_BUMP: BlockKind.X_DENT,
    BlockKind.X_DENT: BlockKind.X_BUMP,
    BlockKind.A_BUMP: BlockKind.A_DENT,
    BlockKind.A_DENT: BlockKind.A_BUMP,
    BlockKind.B_BUMP: BlockKind.B_DENT,
    BlockKind.B_DENT: BlockKind.B_BUMP,
    BlockKind.SLOT_LEFT: BlockKind.TAB,
    BlockKind.SLOT_RIGHT: BlockKind.TAB,
}

# Offset at which a dent/slot is completed by its partner: the partner block
# position for bump/dent pairs, the tab anchor for the two slots.
CANONICAL_OFFSETS = {
    BlockKind.Y_PLUS: (0, BLOCK),
    BlockKind.Y_MINUS: (0, -BLOCK),
    BlockKind.X_BUMP: (BLOCK, 0),
    BlockKind.A_BUMP: (BLOCK, 0),
    BlockKind.B_BUMP: (BLOCK, 0),
    BlockKind.SLOT_LEFT: (1, 0),
    BlockKind.SLOT_RIGHT: (6, 0),
}

BUMP_KINDS = (BlockKind.Y_PLUS, BlockKind.Y_MINUS, BlockKind.X_BUMP,
              BlockKind.A_BUMP, BlockKind.B_BUMP)
DENT_KINDS = (BlockKind.Y_PLUS_DENT, BlockKind.Y_MINUS_DENT, BlockKind.X_DENT,
              BlockKind.A_DENT, BlockKind.B_DENT)
SLOT_KINDS = (BlockKind.SLOT_LEFT, BlockKind.SLOT_RIGHT)


def geometry(kind: BlockKind) -> BlockGeometry:
    return _CATALOG[kind]


@lru_cache(maxsize=None)
def block_cells(kind: BlockKind) -> CellSet:
    return _CATALOG[kind].cells


def partner(kind: BlockKind) -> BlockKind:
    if kind not in _PARTNER:
        raise ValueError(f"{kind} has no complementary kind")
    return _PARTNER[kind]


def complement_check(bump_kind: BlockKind, dent_kind: BlockKind,
                     offset: Vec) -> bool:
    """Whether the two blocks fit together exactly at the given offset.

    For bump/dent kinds the offset positions the dent block's frame relative
    to the bump block's; a perfect fit fills both frames with no overlap.
    For a slot kind the second block is the tab and the offset is its anchor
    inside the slot block's frame.
    """
    u = block_cells(bump_kind)
    v = translate(block_cells(dent_kind), offset)
    if bump_kind in SLOT_KINDS:
        expected = SQUARE
    else:
        expected = SQUARE | translate(SQUARE, offset)
    return len(u) + len(v) == len(expected) and (u | v) == expected
