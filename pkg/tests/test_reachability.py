import pytest

from lotkit.errors import UnknownVertex
from lotkit.graph import LogGraph
from lotkit.reachability import (
    Propagator,
    closure,
    is_reachable_from,
    shortcut_applies,
    reachable_set,
    reaches_all,
    replay,
)


@pytest.mark.parametrize(
    "seed, expected",
    [
        ({"x1", "x4"}, {"x1", "x3", "x4"}),
        ({"x1", "x6"}, {"x1", "x2", "x3", "x6"}),
        ({"x1", "x4", "x6"}, {"x1", "x2", "x3", "x4", "x5", "x6"}),
    ],
)
def test_six_tree_panels(six_tree, seed, expected):
    result = closure(six_tree, seed)
    assert result.closure_names == expected
    assert result.seed_names == seed
    assert result.complete == (len(expected) == 6)
    assert replay(six_tree, result)


def test_full_seed_has_empty_trace(star4):
    result = closure(star4, star4.names)
    assert result.complete and result.trace == ()
    assert replay(star4, result)


def test_seed_reached_by_other_seeds_is_not_traced(star4):
    result = closure(star4, ["a", "c", "d"])
    assert [str(step) for step in result.trace] == ["b via d->b:c"]
    assert replay(star4, result)


def test_seed_all_matches_one_at_a_time(six_tree):
    together = Propagator(six_tree, record=False)
    assert together.seed_all([0, 3, 5]) == 6
    apart = Propagator(six_tree, record=False)
    for x in (0, 3, 5):
        apart.add(x)
    assert together.reached == apart.reached


def test_trace_steps_are_justified(star4):
    result = closure(star4, ["a", "c"])
    assert [str(step) for step in result.trace] == ["d via a->d:c", "b via d->b:c"]
    assert result.complete


def test_tampered_trace_fails_replay(star4):
    result = closure(star4, ["a", "c"])
    swapped = type(result)(result.seed, result.closure, result.trace[::-1], result.complete)
    assert not replay(star4, swapped)
    shrunk = type(result)(frozenset([star4.vertex("a")]), result.closure, result.trace, result.complete)
    assert not replay(star4, shrunk)


def test_unknown_seed_vertex(star4):
    with pytest.raises(UnknownVertex):
        closure(star4, ["z"])


def test_is_reachable_from(star4, six_tree):
    assert is_reachable_from(six_tree, ["x1", "x4", "x6"])
    assert not is_reachable_from(six_tree, ["x1", "x4"])
    assert is_reachable_from(star4, ["a", "c"])
    assert not is_reachable_from(star4, ["a", "b"])


def test_orientation_is_ignored(six_tree):
    flipped = six_tree.reoriented(range(len(six_tree.edges)))
    for seed in (["x1", "x4"], ["x1", "x6"], ["x2", "x5"]):
        assert reachable_set(flipped, seed) == reachable_set(six_tree, seed)


def test_propagator_counts_new_vertices(star4):
    state = Propagator(star4, record=False)
    assert state.add(0) == 1
    assert state.add(0) == 0
    assert state.add(2) == 3
    assert state.complete


def test_counting_shortcut_only_for_reduced_connected_graphs(star4, single):
    assert shortcut_applies(star4)
    assert not shortcut_applies(single)
    assert not shortcut_applies(LogGraph.from_names("ab", [("a", "b", "a")]))
    assert not shortcut_applies(LogGraph.from_names("abc", [("a", "b", "c")]))
    # the shortcut and the full closure agree
    for seed in ([0, 1], [0, 2], [1, 3], [2]):
        assert reaches_all(star4, seed, shortcut=True) == reaches_all(star4, seed, shortcut=False)


def test_non_reduced_graph_closes_without_shortcut():
    g = LogGraph.from_names("abc", [("a", "b", "a"), ("b", "c", "a")])
    assert reachable_set(g, ["a"]) == frozenset(g.vertices)
    assert not is_reachable_from(g, ["b"])
