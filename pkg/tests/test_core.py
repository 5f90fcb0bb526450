import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from listiso import (
    Graph,
    Infeasible,
    InstanceError,
    ListInstance,
    brute_solve,
    classify_instance,
    connected_components,
    degree_prune,
    propagate_singletons,
    verify_list_iso,
)

from helpers import planted_instance, random_graph, scrambled_instance


def k2_pair():
    g = Graph(2, [(0, 1)])
    h = Graph(2, [(0, 1)])
    return g, h


def test_graph_invariants_enforced():
    with pytest.raises(InstanceError):
        Graph(2, [(0, 0)])
    with pytest.raises(InstanceError):
        Graph(2, [(0, 1), (1, 0)])
    with pytest.raises(InstanceError):
        Graph(2, [(0, 2)])
    g = Graph(3, [(2, 0), (0, 1)])
    assert g.adj == ((1, 2), (0,), (0,))
    assert g.m == 2


def test_list_instance_validation():
    g, h = k2_pair()
    with pytest.raises(InstanceError):
        ListInstance(g, h, [[0]])
    with pytest.raises(InstanceError):
        ListInstance(g, h, [[0], [2]])
    inst = ListInstance(g, h, [[1, 0, 1], [0]])
    assert inst.lists == ((0, 1), (0,))
    assert inst.total_list_size == 3


def test_verify_identity_on_k2():
    g, h = k2_pair()
    inst = ListInstance(g, h, [[0, 1], [0, 1]])
    assert verify_list_iso(inst, [0, 1])


def test_verify_swap_on_k2():
    g, h = k2_pair()
    inst = ListInstance(g, h, [[1], [0]])
    assert verify_list_iso(inst, [1, 0])


def test_verify_rejects_unpreserved_edge():
    g = Graph(2, [(0, 1)])
    h = Graph(2, [])
    inst = ListInstance(g, h, [[0, 1], [0, 1]])
    assert not verify_list_iso(inst, [0, 1])


def test_verify_rejects_malformed():
    g, h = k2_pair()
    inst = ListInstance(g, h, [[0, 1], [0, 1]])
    assert not verify_list_iso(inst, [0])
    assert not verify_list_iso(inst, [0, 0])
    assert not verify_list_iso(inst, [0, 5])
    assert not verify_list_iso(inst, ["a", 1])


def test_degree_prune_keeps_matching_degrees():
    p3 = Graph(3, [(0, 1), (1, 2)])
    inst = ListInstance(p3, p3, [[0, 1, 2], [0, 1, 2], [0, 1, 2]])
    pruned = degree_prune(inst)
    assert pruned.lists[1] == (1,)
    assert pruned.lists[0] == (0, 2)


def test_degree_prune_no_op_on_regular():
    c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    inst = ListInstance(c4, c4, [[0, 1, 2, 3]] * 4)
    assert degree_prune(inst) == inst


def test_degree_prune_infeasible():
    p3 = Graph(3, [(0, 1), (1, 2)])
    k3 = Graph(3, [(0, 1), (1, 2), (0, 2)])
    inst = ListInstance(p3, k3, [[0, 1, 2]] * 3)
    outcome = degree_prune(inst)
    assert isinstance(outcome, Infeasible)
    assert outcome.rule == "degree"


def test_propagate_forced_center():
    p3 = Graph(3, [(0, 1), (1, 2)])
    inst = ListInstance(p3, p3, [[0, 1, 2], [1], [0, 1, 2]])
    result = propagate_singletons(inst)
    assert result.lists[0] == (0, 2)
    assert result.lists[2] == (0, 2)


def test_propagate_no_op_on_full_lists():
    c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    inst = ListInstance(c4, c4, [[0, 1, 2, 3]] * 4)
    assert propagate_singletons(inst) == inst


def test_propagate_detects_injectivity_clash():
    g = Graph(2, [])
    inst = ListInstance(g, g, [[0], [0]])
    outcome = propagate_singletons(inst)
    assert isinstance(outcome, Infeasible)
    assert outcome.rule == "injectivity"


def test_propagate_idempotent_random():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(1, 8)
        g = random_graph(rng, n, 0.4)
        inst = scrambled_instance(rng, g, random_graph(rng, n, 0.4), 3)
        once = propagate_singletons(inst)
        if isinstance(once, Infeasible):
            continue
        assert propagate_singletons(once) == once


def test_components_blocks():
    g = Graph(3, [(0, 1)])
    assert connected_components(g) == [[0, 1], [2]]
    g = Graph(3, [(0, 1), (1, 2)])
    assert connected_components(g) == [[0, 1, 2]]
    g = Graph(3, [])
    assert connected_components(g) == [[0], [1], [2]]


def test_classification_priorities():
    tree = Graph(4, [(0, 1), (0, 2), (0, 3)])
    big_lists = [[0, 1, 2, 3]] * 4
    assert classify_instance(ListInstance(tree, tree, big_lists)) == "tree"

    any_g = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
    two_lists = [[0, 1]] * 4
    assert classify_instance(ListInstance(any_g, any_g, two_lists)) == "lists2"

    c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    three_lists = [[0, 1, 2]] * 4
    assert classify_instance(ListInstance(c4, c4, three_lists)) == "deg2"

    k4 = Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert classify_instance(ListInstance(k4, k4, three_lists)) == "interval"

    # C4 is not interval, has degree 2; force lists wide and a hub so the
    # bucket falls through to the oracle.
    gadget = Graph(5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4), (2, 4)])
    wide = [[0, 1, 2, 3, 4]] * 5
    assert classify_instance(ListInstance(gadget, gadget, wide)) == "oracle"


def test_verify_implies_inverse_instance_accepts():
    rng = random.Random(21)
    for _ in range(50):
        n = rng.randint(1, 7)
        g = random_graph(rng, n, 0.5)
        inst = planted_instance(rng, g, width=3)
        result = brute_solve(inst)
        if not result.is_yes:
            continue
        pi = result.mapping
        inverse_lists = [
            [u for u in range(n) if w in inst.list_sets[u]] for w in range(n)
        ]
        inv_inst = ListInstance(inst.h, inst.g, inverse_lists)
        inv_pi = [0] * n
        for u, w in enumerate(pi):
            inv_pi[w] = u
        assert verify_list_iso(inv_inst, inv_pi)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 6), st.randoms(use_true_random=False))
def test_pruning_preserves_answer(n, rng):
    g = random_graph(rng, n, 0.5)
    h = random_graph(rng, n, 0.5)
    inst = scrambled_instance(rng, g, h, 3)
    before = brute_solve(inst).is_yes
    pruned = degree_prune(inst)
    if isinstance(pruned, Infeasible):
        assert not before
        return
    pruned = propagate_singletons(pruned)
    if isinstance(pruned, Infeasible):
        assert not before
        return
    assert brute_solve(pruned).is_yes == before


def test_pruning_preserves_answer_exhaustive_tiny():
    # All graph pairs on up to 3 vertices with a few list patterns.
    from itertools import combinations

    def graphs(n):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            yield Graph(n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])

    rng = random.Random(5)
    for n in (1, 2, 3):
        for g in graphs(n):
            for h in graphs(n):
                for _ in range(2):
                    inst = scrambled_instance(rng, g, h, 2)
                    before = brute_solve(inst).is_yes
                    pruned = degree_prune(inst)
                    if isinstance(pruned, Infeasible):
                        assert not before
                        continue
                    pruned = propagate_singletons(pruned)
                    if isinstance(pruned, Infeasible):
                        assert not before
                        continue
                    assert brute_solve(pruned).is_yes == before
