import pytest

from matroidlimit.generators import cycle, path
from matroidlimit.graph import Graph
from matroidlimit.nets import (
    Decoration,
    MissingNet,
    NetRegistry,
    build_net,
    check_decoration_injective,
    decorate,
    greedy_net,
    grid_side,
    is_net,
    necessary_members,
    net_size,
    net_violations,
    transported_net,
)


def test_grid_side_values():
    assert [grid_side(1, 1), grid_side(2, 1), grid_side(2, 2)] == [6, 8, 16]
    assert net_size(2, 1) == 8**4


@pytest.mark.parametrize("g", [cycle(3), cycle(4), path(4)], ids=["C3", "C4", "P4"])
@pytest.mark.parametrize("n", [1, 2])
def test_built_net_covers_everything(g, n):
    net = build_net(g, 2, n)
    assert len(net) == net_size(2, n)
    assert net_violations(g, 2, n, net.distinct()) == []


def test_mutation_detected():
    g = cycle(3)
    net = build_net(g, 2, 2)
    needed = necessary_members(g, 2, 2, net)
    assert needed
    assert not is_net(g, 2, 2, net.without(needed[0]))


def test_empty_list_is_not_a_net():
    assert not is_net(cycle(3), 2, 1, [])


def test_greedy_net_covers_exact_set_on_small_graph():
    g = cycle(4)
    members = greedy_net(g, 2, 1, samples=2000, seed=0)
    assert is_net(g, 2, 1, members)


def test_size_independent_of_graph():
    assert len(build_net(cycle(3), 1, 1)) == len(build_net(Graph(2, ((0, 1),), 1), 1, 1))


def test_registry_round_trip_and_transport(tmp_path):
    reg = NetRegistry(seed=4)
    g = cycle(4)
    reg.build_window(g, [(1, 1), (2, 1)])
    path_ = tmp_path / "reg.json"
    reg.save(str(path_))
    back = NetRegistry.load(str(path_))
    assert back.entries == reg.entries and back.seed == 4
    h = g.relabel([2, 0, 3, 1])
    net_h = transported_net(h, back, 2, 1)
    assert is_net(h, 2, 1, net_h.distinct())
    with pytest.raises(MissingNet):
        transported_net(h, back, 2, 2)


def test_registry_rejects_bad_format():
    with pytest.raises(ValueError):
        NetRegistry.from_json('{"format_version": 99, "seed": 0, "entries": []}')


def test_decoration_injective_on_c3():
    g = cycle(3)
    reg = NetRegistry()
    reg.build_window(g, [(2, 1), (2, 2)])
    dec = decorate(g, reg, [(2, 1), (2, 2)])
    assert check_decoration_injective(g, dec) == (True, None)
    assert Decoration.from_json(dec.to_json()) == dec
    assert len(dec.edge_tuple(0)) == dec.arity


def test_constant_decoration_collides():
    ok, pair = check_decoration_injective(cycle(3), Decoration.constant(3))
    assert not ok and pair == (0, 1)


def test_projection_levels():
    g = cycle(3)
    reg = NetRegistry()
    reg.build_window(g, [(1, 1), (2, 2)])
    dec = decorate(g, reg, [(1, 1), (2, 2)])
    assert all(key == () for key in dec.edge_keys(0))
    assert len(set(dec.edge_keys(1))) == 1  # k=1 nets carry one color
    assert dec.labels(2) != dec.labels(1)
