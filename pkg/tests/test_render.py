import pytest

from polywang.blocks import BlockKind, block_cells
from polywang.render import RenderSpec, RenderError, boundary_loops, render_svg
from polywang.simulate import emit_placements
from polywang.geometry import Polyomino


def _signed_area(loop):
    s = 0
    for i, (x0, y0) in enumerate(loop):
        x1, y1 = loop[(i + 1) % len(loop)]
        s += x0 * y1 - x1 * y0
    return s / 2


def test_loops_signed_area_equals_cell_count():
    for kind in BlockKind:
        cells = block_cells(kind)
        loops = boundary_loops(cells)
        assert sum(_signed_area(lp) for lp in loops) == len(cells), kind


def test_single_tab_outline(three_tile_pieces):
    svg = render_svg(RenderSpec(), [three_tile_pieces["t_filler"]])
    assert svg.count("<path") == 1


def test_piece_set_renders_seven_paths(three_tile_pieces):
    svg = render_svg(RenderSpec(), three_tile_pieces)
    assert svg.count("<path") == 7
    assert svg.startswith("<svg")


def test_tiling_renders_one_path_per_placement(
        three_tile_set, three_tile_torus, three_tile_pieces):
    sim = emit_placements(three_tile_set, three_tile_torus)
    svg = render_svg(RenderSpec(cell_size=2), sim, three_tile_pieces.pieces)
    assert svg.count("<path") == 72


def test_render_is_deterministic(three_tile_pieces):
    a = render_svg(RenderSpec(), three_tile_pieces)
    b = render_svg(RenderSpec(), three_tile_pieces)
    assert a == b


def test_empty_payload_rejected():
    with pytest.raises(RenderError):
        render_svg(RenderSpec(), [])


def test_grid_lines():
    piece = Polyomino(frozenset({(0, 0), (1, 0)}), "d")
    svg = render_svg(RenderSpec(grid=True), [piece])
    assert "<line" in svg
