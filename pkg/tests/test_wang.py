import random

import pytest

from conftest import random_tileset
from polywang.wang import (
    WangInputError,
    WangTile,
    WangTileSet,
    WangTiling,
    find_periodic,
    solve_torus,
    validate,
)


def _self_matching():
    return WangTileSet((WangTile(0, 0, 0, 0),), ("a",))


def _vertical_mismatch():
    return WangTileSet((WangTile(0, 1, 1, 1),), ("a", "b"))


def test_three_tile_set_shape(three_tile_set):
    s = three_tile_set
    assert (s.n, s.m, s.t) == (3, 4, 2)
    assert s.colors == ("red", "green", "yellow", "blue")
    assert s.tiles[0] == WangTile(0, 2, 0, 1)
    assert s.tiles[1] == WangTile(3, 0, 3, 2)
    assert s.tiles[2] == WangTile(2, 1, 2, 0)


def test_validate_three_tile_row(three_tile_set):
    tiling = WangTiling(3, 1, True, (0, 1, 2))
    assert validate(three_tile_set, tiling) == []


def test_validate_single_tile_torus():
    ok = WangTiling(1, 1, True, (0,))
    assert validate(_self_matching(), ok) == []
    assert validate(_vertical_mismatch(), ok) == [("v", 0, 0)]


def test_validate_rejects_bad_index(three_tile_set):
    with pytest.raises(WangInputError):
        validate(three_tile_set, WangTiling(1, 1, True, (7,)))


def test_solve_torus_three_tile(three_tile_set):
    first = solve_torus(three_tile_set, 3, 1, "first")
    assert first is not None and validate(three_tile_set, first) == []
    assert solve_torus(three_tile_set, 3, 1, "count") == 3
    sols = solve_torus(three_tile_set, 3, 1, "enumerate")
    assert {s.cells for s in sols} == {(0, 1, 2), (1, 2, 0), (2, 0, 1)}
    assert solve_torus(three_tile_set, 1, 1, "count") == 0


def test_solve_torus_self_matching():
    assert solve_torus(_self_matching(), 1, 1, "count") == 1


def test_find_periodic(three_tile_set):
    p, q, tiling = find_periodic(three_tile_set, 9)
    assert (p, q) == (3, 1)
    assert validate(three_tile_set, tiling) == []
    assert find_periodic(_self_matching(), 4) == (1, 1, WangTiling(1, 1, True, (0,)))
    assert find_periodic(_vertical_mismatch(), 12) is None


def test_solutions_always_validate():
    rng = random.Random(11)
    for _ in range(15):
        ts = random_tileset(rng, rng.randint(1, 4), rng.randint(1, 4))
        for tiling in solve_torus(ts, 2, 2, "enumerate")[:20]:
            assert validate(ts, tiling) == []


def test_count_invariant_under_color_renaming(three_tile_set):
    renamed = WangTileSet(three_tile_set.tiles[::],
                          ("c0", "c1", "c2", "c3"))
    # Permute indices with a nontrivial bijection as well.
    perm = {0: 2, 1: 3, 2: 0, 3: 1}
    permuted = WangTileSet(
        tuple(WangTile(*(perm[c] for c in t.edges())) for t in three_tile_set.tiles),
        three_tile_set.colors,
    )
    base = solve_torus(three_tile_set, 3, 2, "count")
    assert solve_torus(renamed, 3, 2, "count") == base
    assert solve_torus(permuted, 3, 2, "count") == base


def test_count_invariant_under_tile_rotation(three_tile_set):
    rotated = WangTileSet(three_tile_set.tiles[1:] + three_tile_set.tiles[:1],
                          three_tile_set.colors)
    for p, q in ((3, 1), (3, 2)):
        assert solve_torus(rotated, p, q, "count") == \
            solve_torus(three_tile_set, p, q, "count")


def test_torus_solution_unrolls(three_tile_set):
    base = solve_torus(three_tile_set, 3, 1, "first")
    p2, q2 = 6, 2
    cells = tuple(base.at(a % 3, b % 1) for b in range(q2) for a in range(p2))
    assert validate(three_tile_set, WangTiling(p2, q2, True, cells)) == []


def test_json_round_trip(three_tile_set):
    assert WangTileSet.from_json(three_tile_set.to_json()) == three_tile_set
    tiling = WangTiling(3, 1, True, (0, 1, 2))
    assert WangTiling.from_json(tiling.to_json()) == tiling


def test_input_validation():
    with pytest.raises(WangInputError):
        WangTileSet((), ())
    with pytest.raises(WangInputError):
        WangTileSet((WangTile(0, 0, 0, 5),), ("a",))
    with pytest.raises(WangInputError):
        WangTiling(2, 2, True, (0, 0, 0))
    with pytest.raises(WangInputError):
        solve_torus(_self_matching(), 0, 1)


def test_explicit_color_order():
    obj = {"colors": ["b", "a"], "tiles": [{"n": "a", "e": "a", "s": "a", "w": "b"}]}
    ts = WangTileSet.from_json(obj)
    assert ts.colors == ("b", "a")
    assert ts.tiles[0] == WangTile(1, 1, 1, 0)
    with pytest.raises(WangInputError):
        WangTileSet.from_json(
            {"colors": ["a"], "tiles": [{"n": "z", "e": "a", "s": "a", "w": "a"}]})
