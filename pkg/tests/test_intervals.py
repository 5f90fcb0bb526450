import random

import pytest

from listiso import (
    CliqueOrdering,
    Graph,
    ListInstance,
    UsageError,
    brute_solve,
    build_mpq,
    recognize_interval,
    solve_disconnected,
    solve_interval,
    verify_list_iso,
)
from listiso.intervals import _IntervalMatcher

from helpers import (
    planted_instance,
    random_graph,
    random_interval_graph,
    scrambled_instance,
)


def cycle(n):
    return Graph(n, [(v, (v + 1) % n) for v in range(n)])


def complete(n):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def test_recognize_path():
    ordering = recognize_interval(Graph(3, [(0, 1), (1, 2)]))
    assert ordering is not None
    assert set(ordering.cliques) == {frozenset({0, 1}), frozenset({1, 2})}


def test_recognize_rejects_c4():
    assert recognize_interval(cycle(4)) is None


def test_recognize_triangle():
    ordering = recognize_interval(complete(3))
    assert ordering is not None
    assert ordering.cliques == (frozenset({0, 1, 2}),)


def test_recognize_rejects_chordal_non_interval():
    # Three legs of length two from a hub: chordal, but the leg tips form
    # an asteroidal triple.
    g = Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    assert recognize_interval(g) is None


def test_recognize_requires_connected():
    with pytest.raises(UsageError):
        recognize_interval(Graph(2, []))


def test_mpq_of_complete_graph_is_single_leaf():
    tree = build_mpq(complete(4), recognize_interval(complete(4)))
    assert tree.root.kind == "leaf"
    assert tree.root.sections == (0, 1, 2, 3)


def test_mpq_of_p3_is_p_node():
    g = Graph(3, [(0, 1), (1, 2)])
    tree = build_mpq(g, recognize_interval(g))
    root = tree.root
    assert root.kind == "p"
    assert root.sections == (1,)
    assert sorted(child.kind for child in root.children) == ["leaf", "leaf"]
    assert sorted(child.sections for child in root.children) == [(0,), (2,)]


def test_mpq_builds_on_random_interval_graphs():
    # Sections invariants are asserted inside build_mpq on every build.
    rng = random.Random(61)
    for _ in range(150):
        n = rng.randint(1, 9)
        g = random_interval_graph(rng, n, connected=True)
        ordering = recognize_interval(g)
        assert ordering is not None, "generated interval graph must be recognized"
        build_mpq(g, ordering)


def test_mpq_rejects_invalid_ordering():
    g = Graph(3, [(0, 1), (1, 2)])
    bad = CliqueOrdering((frozenset({0, 1}), frozenset({2}), frozenset({1, 2})))
    with pytest.raises(UsageError):
        build_mpq(g, bad)


def test_solve_complete_graphs():
    inst = ListInstance(complete(4), complete(4), [[0, 1, 2, 3]] * 4)
    result = solve_interval(inst)
    assert result.is_yes
    assert verify_list_iso(inst, result.mapping)


def test_solve_detects_center_leaf_clash():
    g = Graph(3, [(0, 1), (1, 2)])
    inst = ListInstance(g, g, [[0, 1, 2], [0], [0, 1, 2]])
    assert not solve_interval(inst).is_yes


def test_solve_rejects_non_interval():
    inst = ListInstance(cycle(4), cycle(4), [[0, 1, 2, 3]] * 4)
    with pytest.raises(UsageError):
        solve_interval(inst)


def test_solve_matches_oracle_on_random_instances():
    rng = random.Random(62)
    for _ in range(250):
        n = rng.randint(1, 10)
        g = random_interval_graph(rng, n, connected=True)
        if rng.random() < 0.6:
            inst = planted_instance(rng, g, width=3, noise=0.35 * rng.random())
        else:
            h = random_interval_graph(rng, n, connected=True)
            inst = scrambled_instance(rng, g, h, 3)
        result = solve_interval(inst)
        assert result.is_yes == brute_solve(inst).is_yes
        if result.is_yes:
            assert verify_list_iso(inst, result.mapping)


def test_full_lists_decide_plain_isomorphism():
    rng = random.Random(63)
    for _ in range(120):
        n = rng.randint(1, 9)
        g = random_interval_graph(rng, n, connected=True)
        h = random_interval_graph(rng, n, connected=True)
        inst = ListInstance(g, h, [list(range(n))] * n)
        assert solve_interval(inst).is_yes == brute_solve(inst).is_yes


def test_equivalent_orderings_give_identical_answers():
    rng = random.Random(64)
    for _ in range(80):
        n = rng.randint(2, 9)
        g = random_interval_graph(rng, n, connected=True)
        inst = planted_instance(rng, g, width=3, noise=0.4 * rng.random())
        ord_g = recognize_interval(inst.g)
        ord_h = recognize_interval(inst.h)
        forward = _IntervalMatcher(
            inst, build_mpq(inst.g, ord_g), build_mpq(inst.h, ord_h)
        ).run()
        reversed_g = CliqueOrdering(ord_g.cliques[::-1])
        flipped = _IntervalMatcher(
            inst, build_mpq(inst.g, reversed_g), build_mpq(inst.h, ord_h)
        ).run()
        assert forward == flipped


def test_disconnected_interval_instances_compose():
    rng = random.Random(65)
    for _ in range(100):
        pieces = rng.randint(1, 3)
        edges, offset = [], 0
        for _ in range(pieces):
            size = rng.randint(1, 5)
            part = random_interval_graph(rng, size, connected=True)
            edges += [(u + offset, v + offset) for u, v in part.edges()]
            offset += size
        g = Graph(offset, edges)
        inst = planted_instance(rng, g, width=3, noise=0.3 * rng.random())
        result = solve_disconnected(inst, solve_interval)
        assert result.is_yes == brute_solve(inst).is_yes


def test_not_interval_is_clean_on_random_graphs():
    rng = random.Random(66)
    seen_noninterval = 0
    for _ in range(120):
        n = rng.randint(1, 8)
        g = random_graph(rng, n, 0.5)
        comps = [g.induced(c) for c in __import__("listiso").connected_components(g)]
        for comp in comps:
            if recognize_interval(comp) is None:
                seen_noninterval += 1
    assert seen_noninterval > 0
