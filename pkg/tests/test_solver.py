import pytest

from polywang.blocks import BlockKind, geometry
from polywang.geometry import Polyomino, TorusLattice, translate
from polywang.solver import (
    Placement,
    Rectangle,
    SearchLimitError,
    SolverInputError,
    Torus,
    build_universe,
    check_tiling,
    contained_placements,
    solve,
)

MONO = Polyomino(frozenset({(0, 0)}), "mono")
H_DOM = Polyomino(frozenset({(0, 0), (1, 0)}), "h")
V_DOM = Polyomino(frozenset({(0, 0), (0, 1)}), "v")
L_TROMINO = Polyomino(frozenset({(0, 0), (1, 0), (0, 1)}), "L")


def _count(region, pieces, **kw):
    return solve(build_universe(region, pieces), "count", **kw)


def test_monomino_3x3():
    assert _count(Rectangle(3, 3), (MONO,)) == 1


def test_domino_fibonacci():
    expected = [1, 2, 3, 5, 8, 13, 21, 34, 55, 89]
    got = [_count(Rectangle(2, n), (H_DOM, V_DOM)) for n in range(1, 11)]
    assert got == expected


def test_single_l_tromino_2x3():
    assert _count(Rectangle(2, 3), (L_TROMINO,)) == 0


def test_solutions_pass_check_tiling():
    region = Rectangle(2, 4)
    universe = build_universe(region, (H_DOM, V_DOM))
    for sol in solve(universe, "enumerate"):
        assert check_tiling(region, (H_DOM, V_DOM), sol).exact


def test_first_mode():
    universe = build_universe(Rectangle(2, 2), (H_DOM, V_DOM))
    sol = solve(universe, "first")
    assert sol is not None and len(sol) == 2
    assert solve(build_universe(Rectangle(3, 3), (H_DOM, V_DOM)), "first") is None


def test_thread_count_invariance():
    for region in (Rectangle(2, 8), Rectangle(4, 4)):
        universe = build_universe(region, (H_DOM, V_DOM))
        counts = {solve(universe, "count", workers=w) for w in (1, 2, 4)}
        assert len(counts) == 1
        sols = [solve(universe, "enumerate", workers=w) for w in (1, 2, 4)]
        assert sols[0] == sols[1] == sols[2]


def test_limit_is_scheduling_independent():
    universe = build_universe(Rectangle(2, 8), (H_DOM, V_DOM))
    base = solve(universe, "enumerate", limit=10, workers=1)
    assert len(base) == 10
    for w in (2, 4):
        assert solve(universe, "enumerate", limit=10, workers=w) == base


def test_piece_permutation_invariance():
    a = _count(Rectangle(2, 6), (H_DOM, V_DOM))
    b = _count(Rectangle(2, 6), (V_DOM, H_DOM))
    assert a == b == 13


def test_torus_counts_and_basis_invariance():
    # three bases of the same 4-cell ring lattice
    for basis in (((4, 0), (0, 1)), ((4, 0), (4, 1)), ((8, 1), (4, 1))):
        region = Torus(TorusLattice(*basis))
        assert _count(region, (H_DOM,)) == 2  # two phase classes on the ring


def test_area_pruning():
    # 9 cells cannot be written as a sum of 2s: no search needed.
    assert _count(Rectangle(3, 3), (H_DOM, V_DOM)) == 0
    assert solve(build_universe(Rectangle(3, 3), (H_DOM,)), "first") is None


def test_search_limit_error():
    universe = build_universe(Rectangle(2, 10), (H_DOM, V_DOM))
    with pytest.raises(SearchLimitError) as err:
        solve(universe, "count", max_nodes=3)
    assert err.value.partial_count >= 0


def test_check_tiling_reports():
    region = Rectangle(2, 2)
    good = [Placement("v", (0, 0)), Placement("v", (1, 0))]
    assert check_tiling(region, (V_DOM,), good).exact

    gap = check_tiling(region, (V_DOM,), good[:1])
    assert set(gap.uncovered) == {(1, 0), (1, 1)}
    assert not gap.overlaps

    dup = check_tiling(region, (V_DOM,), good + [Placement("v", (0, 0))])
    assert {(c, i, j) for c, i, j in dup.overlaps} == \
        {((0, 0), 0, 2), ((0, 1), 0, 2)}

    outside = check_tiling(region, (V_DOM,), good + [Placement("v", (5, 0))])
    assert set(outside.out_of_region) == {(5, 0), (5, 1)}
    assert not outside.exact


def test_check_tiling_torus_wraps():
    lat = TorusLattice((2, 0), (0, 2))
    placements = [Placement("v", (0, 0)), Placement("v", (1, 4))]
    assert check_tiling(Torus(lat), (V_DOM,), placements).exact


def test_check_tiling_unknown_piece():
    with pytest.raises(SolverInputError):
        check_tiling(Rectangle(2, 2), (V_DOM,), [Placement("zzz", (0, 0))])


def test_duplicate_piece_names_rejected():
    with pytest.raises(SolverInputError):
        build_universe(Rectangle(2, 2), (V_DOM, Polyomino(V_DOM.cells, "v")))


def test_contained_placements_empty_container():
    assert contained_placements(frozenset(), (MONO, H_DOM)) == []


def test_contained_placements_slot(three_tile_pieces):
    slot = geometry(BlockKind.SLOT_LEFT).dent
    found = contained_placements(slot, three_tile_pieces.pieces)
    assert len(found) == 1 and found[0].piece == "t_filler"
    r_slot = geometry(BlockKind.SLOT_RIGHT).dent
    found_r = contained_placements(r_slot, three_tile_pieces.pieces)
    assert len(found_r) == 1 and found_r[0].piece == "t_filler"


def test_contained_placements_rectangle_scan(three_tile_pieces):
    box = frozenset((x, y) for x in range(10) for y in range(20))
    t_filler = three_tile_pieces["t_filler"]
    found = contained_placements(box, (t_filler,))
    assert len(found) == 8 * 11  # 3x10 bounding box sliding in 10x20
