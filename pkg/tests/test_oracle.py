import random

from listiso import Graph, ListInstance, brute_solve, count_list_isos, verify_list_iso

from helpers import brute_force_listiso, random_graph, scrambled_instance


def test_single_vertex():
    g = Graph(1, [])
    inst = ListInstance(g, g, [[0]])
    result = brute_solve(inst)
    assert result.is_yes and result.mapping == (0,)


def test_empty_list_means_no():
    g = Graph(2, [(0, 1)])
    inst = ListInstance(g, g, [[], [0, 1]])
    assert not brute_solve(inst).is_yes
    assert count_list_isos(inst) == 0


def test_c4_anchored_identity():
    c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    inst = ListInstance(c4, c4, [[0], [0, 1, 2, 3], [0, 1, 2, 3], [0, 1, 2, 3]])
    result = brute_solve(inst)
    assert result.is_yes
    assert verify_list_iso(inst, result.mapping)


def test_counts_on_symmetric_graphs():
    c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert count_list_isos(ListInstance(c4, c4, [[0, 1, 2, 3]] * 4)) == 8
    k3 = Graph(3, [(0, 1), (1, 2), (0, 2)])
    assert count_list_isos(ListInstance(k3, k3, [[0, 1, 2]] * 3)) == 6


def test_yes_iff_positive_count():
    rng = random.Random(13)
    for _ in range(150):
        n = rng.randint(1, 7)
        inst = scrambled_instance(
            rng, random_graph(rng, n, 0.4), random_graph(rng, n, 0.4), 3
        )
        assert brute_solve(inst).is_yes == (count_list_isos(inst) > 0)


def test_exploration_order_is_irrelevant():
    rng = random.Random(29)
    for _ in range(60):
        n = rng.randint(1, 7)
        inst = scrambled_instance(
            rng, random_graph(rng, n, 0.5), random_graph(rng, n, 0.5), 3
        )
        baseline = brute_solve(inst).is_yes
        for _ in range(3):
            order = list(range(n))
            rng.shuffle(order)
            shuffled = brute_solve(inst, order=order)
            assert shuffled.is_yes == baseline
            if shuffled.is_yes:
                assert verify_list_iso(inst, shuffled.mapping)


def test_matches_permutation_sweep():
    rng = random.Random(31)
    for _ in range(80):
        n = rng.randint(1, 5)
        inst = scrambled_instance(
            rng, random_graph(rng, n, 0.5), random_graph(rng, n, 0.5), n
        )
        assert brute_solve(inst).is_yes == brute_force_listiso(inst)
