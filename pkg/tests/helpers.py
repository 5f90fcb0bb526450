"""Shared test fixtures: independent reference implementations and random
instance builders.  The reference code here deliberately avoids the
library's algorithms so bugs cannot be mirrored.
"""

from __future__ import annotations

import random
from itertools import permutations

from listiso import Graph, ListInstance
from listiso.matching import BipartiteGraph
from listiso.twosat import TwoSatFormula


# --- naive single-augmenting-path matcher (vs Hopcroft-Karp) ---------------

def naive_matching_size(b: BipartiteGraph) -> int:
    match_r = [-1] * b.nr

    def augment(u: int, seen: set[int]) -> bool:
        for v in b.edges[u]:
            if v in seen:
                continue
            seen.add(v)
            if match_r[v] == -1 or augment(match_r[v], seen):
                match_r[v] = u
                return True
        return False

    size = 0
    for u in range(b.nl):
        if augment(u, set()):
            size += 1
    return size


def random_bipartite(rng: random.Random, max_side: int = 12) -> BipartiteGraph:
    nl = rng.randint(0, max_side)
    nr = rng.randint(0, max_side)
    p = rng.choice([0.1, 0.3, 0.5, 0.8])
    edges = [
        sorted(v for v in range(nr) if rng.random() < p) for _ in range(nl)
    ]
    return BipartiteGraph(nl, nr, edges)


# --- truth-table 2-SAT (bitmask-parallel over all assignments) --------------

def twosat_by_enumeration(f: TwoSatFormula) -> bool:
    n = f.var_count
    assignments = 1 << n
    full = (1 << assignments) - 1
    var_mask = []
    for v in range(n):
        mask = 0
        for a in range(assignments):
            if (a >> v) & 1:
                mask |= 1 << a
        var_mask.append(mask)

    def lit_mask(lit):
        var, polarity = lit
        return var_mask[var] if polarity else full ^ var_mask[var]

    sat = full
    for l1, l2 in f.clauses:
        sat &= lit_mask(l1) | lit_mask(l2)
    return sat != 0


def random_2sat(rng: random.Random, max_vars: int = 15) -> TwoSatFormula:
    n = rng.randint(1, max_vars)
    clause_count = rng.randint(1, 3 * n)
    clauses = []
    for _ in range(clause_count):
        l1 = (rng.randrange(n), rng.random() < 0.5)
        if rng.random() < 0.1:
            clauses.append((l1, l1))
        else:
            clauses.append((l1, (rng.randrange(n), rng.random() < 0.5)))
    return TwoSatFormula(n, clauses)


# --- treewidth by elimination orderings (subset DP) --------------------------

def treewidth_by_elimination(g: Graph) -> int:
    """Exact treewidth via DP over eliminated subsets; for n <= ~14."""
    n = g.n
    if n == 0:
        return 0
    masks = [0] * n
    for u in range(n):
        for v in g.adj[u]:
            masks[u] |= 1 << v
    best = {0: -1}
    for subset in range(1, 1 << n):
        cost = n + 1
        for v in range(n):
            if not (subset >> v) & 1:
                continue
            prev = subset ^ (1 << v)
            if prev not in best:
                continue
            reach = _fill_degree(masks, prev, v, n)
            cost = min(cost, max(best[prev], reach))
        if cost <= n:
            best[subset] = cost
    return best[(1 << n) - 1]


def _fill_degree(masks, eliminated, v, n):
    """Neighbors of v outside `eliminated` after eliminating that set,
    counting fill paths through it."""
    seen = 1 << v
    stack = [v]
    degree = 0
    while stack:
        x = stack.pop()
        rest = masks[x] & ~seen
        while rest:
            y = (rest & -rest).bit_length() - 1
            rest ^= 1 << y
            seen |= 1 << y
            if (eliminated >> y) & 1:
                stack.append(y)
            else:
                degree += 1
    return degree


# --- random graphs and instances ---------------------------------------------

def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def random_permutation(rng: random.Random, n: int) -> list[int]:
    sigma = list(range(n))
    rng.shuffle(sigma)
    return sigma


def planted_instance(
    rng: random.Random, g: Graph, width: int, noise: float = 0.0
) -> ListInstance:
    """h is a relabeled copy of g; lists contain the planted image unless
    noise strikes."""
    n = g.n
    sigma = random_permutation(rng, n)
    h = g.relabeled(sigma)
    lists = []
    for u in range(n):
        entries = {sigma[u]}
        while len(entries) < min(width, n):
            entries.add(rng.randrange(n))
        if noise > 0 and rng.random() < noise:
            entries.discard(sigma[u])
        lists.append(sorted(entries))
    return ListInstance(g, h, lists)


def scrambled_instance(
    rng: random.Random, g: Graph, h: Graph, width: int
) -> ListInstance:
    """Unrelated graphs with random lists; answer unknown a priori."""
    lists = []
    for _ in range(g.n):
        k = rng.randint(0, min(width, max(h.n, 1)))
        lists.append(sorted(rng.sample(range(h.n), k)) if h.n else [])
    return ListInstance(g, h, lists)


def random_tree(rng: random.Random, n: int) -> Graph:
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    return Graph(n, edges)


def random_deg2_graph(rng: random.Random, n: int) -> Graph:
    edges = []
    start = 0
    while start < n:
        size = rng.randint(1, n - start)
        block = list(range(start, start + size))
        edges += list(zip(block, block[1:]))
        if size >= 3 and rng.random() < 0.5:
            edges.append((block[0], block[-1]))
        start += size
    return Graph(n, edges)


def random_interval_graph(
    rng: random.Random, n: int, connected: bool = False
) -> Graph:
    """Ground-truth interval graph from a random interval model."""
    while True:
        spans = []
        for _ in range(n):
            a = rng.randrange(2 * n)
            b = rng.randrange(2 * n)
            spans.append((min(a, b), max(a, b)))
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if spans[u][0] <= spans[v][1] and spans[v][0] <= spans[u][1]
        ]
        g = Graph(n, edges)
        if not connected or _connected(g):
            return g


def _connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in g.adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == g.n


def random_bounded_treewidth_graph(rng: random.Random, n: int, k: int) -> Graph:
    """Random subgraph of a random k-tree: treewidth at most k by
    construction."""
    edges: set[tuple[int, int]] = set()
    cliques = [list(range(min(n, k + 1)))]
    base = cliques[0]
    for u in base:
        for v in base:
            if u < v:
                edges.add((u, v))
    for v in range(min(n, k + 1), n):
        host = rng.choice(cliques)
        drop = rng.randrange(len(host))
        bag = [x for i, x in enumerate(host) if i != drop] + [v]
        for u in bag:
            if u != v:
                edges.add((min(u, v), max(u, v)))
        cliques.append(bag)
    kept = [e for e in edges if rng.random() < 0.8]
    return Graph(n, kept)


def brute_force_listiso(inst: ListInstance) -> bool:
    """Permutation sweep, fully independent of the library's oracle.
    Only for very small n."""
    g, h = inst.g, inst.h
    if g.n != h.n:
        return False
    g_edges = {(min(u, v), max(u, v)) for u, v in g.edges()}
    for pi in permutations(range(h.n)):
        if any(pi[u] not in inst.list_sets[u] for u in range(g.n)):
            continue
        mapped = {(min(pi[u], pi[v]), max(pi[u], pi[v])) for u, v in g_edges}
        if mapped == {(min(u, v), max(u, v)) for u, v in h.edges()}:
            return True
    return False
