import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polywang.geometry import (
    GeometryError,
    Polyomino,
    RectilinearPolygon,
    TorusLattice,
    bounding_box,
    canonical,
    is_connected,
    rasterize,
    reduce_mod,
    translate,
)

L_SLOT_POLY = RectilinearPolygon(
    ((1, 0), (1, 10), (2, 10), (2, 9), (4, 9), (4, 6), (3, 6), (3, 8),
     (2, 8), (2, 2), (3, 2), (3, 4), (4, 4), (4, 1), (2, 1), (2, 0))
)
L_SLOT_CELLS = frozenset(
    [(1, y) for y in range(10)]
    + [(2, 1), (3, 1), (3, 2), (3, 3), (3, 6), (3, 7), (2, 8), (3, 8)]
)


def test_rasterize_unit_square():
    poly = RectilinearPolygon(((0, 0), (1, 0), (1, 1), (0, 1)))
    assert rasterize(poly) == {(0, 0)}


def test_rasterize_slot_polygon_exact_cells():
    assert rasterize(L_SLOT_POLY) == L_SLOT_CELLS
    assert len(L_SLOT_CELLS) == 18 == L_SLOT_POLY.shoelace_area()


def test_rasterize_upper_bump_polygon():
    poly = RectilinearPolygon(
        ((4, 10), (4, 13), (2, 13), (2, 12), (3, 12), (3, 11), (1, 11),
         (1, 14), (5, 14), (5, 10))
    )
    assert len(rasterize(poly)) == 10 == poly.shoelace_area()


def test_polygon_rejects_non_simple():
    with pytest.raises(GeometryError):
        RectilinearPolygon(((0, 0), (2, 0), (2, 2), (1, 2), (1, -1), (0, -1)))


def test_polygon_rejects_non_alternating():
    with pytest.raises(GeometryError):
        RectilinearPolygon(((0, 0), (1, 0), (2, 0), (2, 1), (0, 1), (0, 0)))


def test_polygon_rejects_diagonal_edge():
    with pytest.raises(GeometryError):
        RectilinearPolygon(((0, 0), (1, 1), (1, 0), (0, 0)))


def test_translate_trivial():
    assert translate({(0, 0)}, (0, 0)) == {(0, 0)}
    assert translate({(0, 0)}, (5, 0)) == {(5, 0)}


def test_translate_slot_left_gives_slot_right():
    right_poly = RectilinearPolygon(
        tuple((x + 5, y) for x, y in L_SLOT_POLY.vertices)
    )
    assert translate(L_SLOT_CELLS, (5, 0)) == rasterize(right_poly)


def test_is_connected():
    assert is_connected({(0, 0), (1, 0)})
    assert not is_connected({(0, 0), (1, 1)})  # diagonal does not count
    assert not is_connected(set())
    assert is_connected(L_SLOT_CELLS)  # 18-cell tab shape


def test_reduce_mod_square_lattice():
    lat = TorusLattice((10, 0), (0, 10))
    assert reduce_mod((0, 0), lat) == (0, 0)
    assert reduce_mod((13, 2), lat) == (3, 2)


def test_skew_lattice_representative_count():
    lat = TorusLattice((180, -60), (180, 60))
    assert lat.num_cells == 21600
    reps = set(lat.representatives())
    assert len(reps) == 21600
    assert {lat.reduce(r) for r in reps} == reps


def test_degenerate_lattice_rejected():
    with pytest.raises(GeometryError):
        TorusLattice((2, 4), (1, 2))


def test_canonical_order():
    assert canonical([(1, 0), (0, 1), (0, 0)]) == ((0, 0), (1, 0), (0, 1))


def test_bounding_box():
    assert bounding_box([(0, 0), (2, 3)]) == (0, 0, 3, 4)


def test_polyomino_validation():
    with pytest.raises(GeometryError):
        Polyomino(frozenset(), "empty")
    with pytest.raises(GeometryError):
        Polyomino(frozenset({(0, 0), (2, 0)}), "gap")
    assert len(Polyomino(frozenset({(0, 0), (1, 0)}), "domino")) == 2


@st.composite
def staircase_polygons(draw):
    """Monotone staircases: right/up steps, then close along top and left."""
    steps = draw(st.lists(
        st.tuples(st.integers(1, 5), st.integers(1, 5)), min_size=1, max_size=6))
    verts = [(0, 0)]
    x = y = 0
    for dx, dy in steps:
        x += dx
        verts.append((x, y))
        y += dy
        verts.append((x, y))
    verts.append((0, y))
    return RectilinearPolygon(tuple(verts))


@given(staircase_polygons())
@settings(max_examples=100)
def test_rasterize_area_law(poly):
    assert len(rasterize(poly)) == poly.shoelace_area()


@given(st.sets(st.tuples(st.integers(-8, 8), st.integers(-8, 8)), min_size=1),
       st.tuples(st.integers(-20, 20), st.integers(-20, 20)))
def test_translate_preserves_cardinality_and_connectivity(cells, v):
    moved = translate(cells, v)
    assert len(moved) == len(cells)
    assert is_connected(moved) == is_connected(cells)


@given(st.tuples(st.integers(-300, 300), st.integers(-300, 300)),
       st.integers(-3, 3), st.integers(-3, 3))
def test_reduce_mod_idempotent_and_orbit_constant(c, i, j):
    lat = TorusLattice((7, 3), (-2, 5))
    r = lat.reduce(c)
    assert lat.reduce(r) == r
    shifted = (c[0] + i * 7 - 2 * j, c[1] + 3 * i + 5 * j)
    assert lat.reduce(shifted) == r
