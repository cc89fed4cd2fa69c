import hypothesis.strategies as st
from hypothesis import assume, given, settings

from lotkit.complexity import exact_complexity, greedy_seed
from lotkit.decomposition import decompose, replay
from lotkit.display import serialize_lot
from lotkit.extract import parse_lot_file, parse_presentation
from lotkit.gen import random_lot, rosebrock_chain
from lotkit.presentation import format_presentation, log_to_presentation, presentation_to_log
from lotkit.reachability import closure, reachable_set, reaches_all
from lotkit.reachability import replay as replay_closure

sizes = st.integers(min_value=3, max_value=7)
seeds = st.integers(min_value=0, max_value=2**32)
any_size = st.integers(min_value=1, max_value=12).filter(lambda m: m != 2)


@st.composite
def lots(draw, sizes=sizes):
    return random_lot(draw(sizes), draw(seeds))


@st.composite
def lots_with_seed_sets(draw):
    g = draw(lots())
    subset = draw(st.sets(st.sampled_from(g.names)))
    return g, subset


def names(vertices):
    return {v.name for v in vertices}


@settings(deadline=None, max_examples=1500)
@given(lots_with_seed_sets(), st.data())
def test_closure_is_monotone(case, data):
    g, small = case
    large = small | data.draw(st.sets(st.sampled_from(g.names)))
    assert names(reachable_set(g, small)) <= names(reachable_set(g, large))


@settings(deadline=None, max_examples=1500)
@given(lots_with_seed_sets())
def test_closure_is_idempotent(case):
    g, seed = case
    once = reachable_set(g, seed)
    assert reachable_set(g, once) == once
    assert names(once) >= seed


@settings(deadline=None, max_examples=1000)
@given(lots_with_seed_sets())
def test_trace_replays_and_skips_seeds(case):
    g, seed = case
    result = closure(g, seed)
    assert replay_closure(g, result)
    assert not {step.vertex.name for step in result.trace} & seed
    assert len(result.trace) == len(result.closure) - len(seed)


@settings(deadline=None, max_examples=1500)
@given(lots_with_seed_sets(), st.data())
def test_closure_ignores_edge_order(case, data):
    g, seed = case
    order = data.draw(st.permutations(range(len(g.edges))))
    assert reachable_set(g.with_edges_in_order(order), seed) == reachable_set(g, seed)


@settings(deadline=None, max_examples=500)
@given(lots_with_seed_sets(), st.data())
def test_orientation_does_not_matter(case, data):
    g, seed = case
    flipped = g.reoriented(data.draw(st.sets(st.sampled_from(range(len(g.edges))))))
    assert reachable_set(flipped, seed) == reachable_set(g, seed)
    assert exact_complexity(flipped).value == exact_complexity(g).value


@settings(deadline=None, max_examples=500)
@given(lots(), st.data())
def test_adding_an_edge_never_hurts(g, data):
    pairs = [(u, v) for u in g.names for v in g.names if u < v and g.find_edge(u, v) is None]
    assume(pairs)
    u, v = data.draw(st.sampled_from(pairs))
    label = data.draw(st.sampled_from([x for x in g.names if x not in (u, v)]))
    bigger = g.with_edge(u, v, label)
    seed = data.draw(st.sets(st.sampled_from(g.names)))
    assert names(reachable_set(g, seed)) <= names(reachable_set(bigger, seed))
    assert exact_complexity(bigger).value <= exact_complexity(g).value


@settings(deadline=None, max_examples=1500)
@given(lots())
def test_every_vertex_but_one_reaches_all(g):
    for left_out in range(g.m):
        seed = [x for x in range(g.m) if x != left_out]
        assert reaches_all(g, seed, shortcut=False)


@settings(deadline=None, max_examples=500)
@given(lots())
def test_greedy_bound_and_growth(g):
    report = greedy_seed(g)
    assert report.value <= (g.m + 1) // 2
    assert all(b - a >= 2 for a, b in zip(report.growth, report.growth[1:]))
    assert reaches_all(g, [v.index for v in report.witness], shortcut=False)
    assert exact_complexity(g).value <= report.value


@settings(deadline=None, max_examples=1500)
@given(lots(any_size))
def test_lot_file_roundtrip(g):
    assert parse_lot_file(serialize_lot(g)) == g


@settings(deadline=None, max_examples=1500)
@given(lots(any_size))
def test_presentation_roundtrip(g):
    text = format_presentation(log_to_presentation(g))
    assert presentation_to_log(parse_presentation(text)) == g


@settings(deadline=None, max_examples=500)
@given(st.integers(min_value=1, max_value=5), st.sampled_from(["chain", "star", "random"]), seeds, st.data())
def test_decomposition_is_unique(s, attachment, rng_seed, data):
    g = rosebrock_chain(s, attachment, rng_seed)
    order = data.draw(st.permutations(range(len(g.edges))))
    shuffled = g.with_edges_in_order(order)

    def parts(graph):
        return {frozenset((p.e1.as_names(), p.e2.as_names())) for p in decompose(graph).parts}

    assert parts(shuffled) == parts(g)
    assert replay(decompose(shuffled)).same_structure(g)
