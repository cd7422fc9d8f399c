import pytest

from matroidlimit.generators import GenerationError, cycle, directed_cycle, generate, path, random_regular, torus_grid


def test_cycle_orientation_tail_below_head():
    g = cycle(5)
    assert all(t < h for t, h in g.edges)
    assert g.edge_count == 5 and g.is_connected()


def test_directed_cycle_is_consistent():
    g = directed_cycle(4)
    assert [d for d in g.degrees()] == [2, 2, 2, 2]
    assert g.edges[-1] == (3, 0)


def test_path_and_torus():
    assert path(4).edge_count == 3
    t = torus_grid(4)
    assert t.vertex_count == 16 and set(t.degrees()) == {4}


def test_random_regular_deterministic():
    a, b = random_regular(10, 3, 7), random_regular(10, 3, 7)
    assert a == b
    assert set(a.degrees()) == {3} and a.is_connected()


def test_random_regular_parity():
    with pytest.raises(GenerationError):
        random_regular(5, 3, 0)


def test_generate_dispatch():
    assert generate("cycle", 6) == cycle(6)
    assert generate("random_regular", 8, 3, seed=1) == generate("random_regular", 8, 3, seed=1)
    with pytest.raises(GenerationError):
        generate("petersen", 10)
