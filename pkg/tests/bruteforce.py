"""Definition-level reference implementations used as independent checks.

Everything here recomputes from scratch: distances come from networkx, the
set predicates quantify directly over vertices, and the optima scan the
full subset lattice.  Nothing imports the package's search internals, so
agreement with the library is a genuine dual-route check.
"""

from __future__ import annotations

from itertools import chain, combinations

import networkx as nx


def nx_distances(n, edges):
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    raw = dict(nx.all_pairs_shortest_path_length(g))
    return [[raw[u][v] for v in range(n)] for u in range(n)]


def representation(dist, subset, v):
    return tuple(dist[v][x] for x in subset)


def resolves(dist, n, subset):
    if not subset:
        return n == 1
    return len({representation(dist, subset, v) for v in range(n)}) == n


def ft_resolves(dist, n, subset):
    if len(subset) < 2:
        return False
    return all(resolves(dist, n, [x for x in subset if x != y]) for y in subset)


def all_subsets(items):
    items = list(items)
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


def metric_dimension(n, edges):
    dist = nx_distances(n, edges)
    for r in range(1, n + 1):
        for s in combinations(range(n), r):
            if resolves(dist, n, s):
                return r
    raise AssertionError("V resolves every graph")


def fdim(n, edges):
    dist = nx_distances(n, edges)
    for r in range(2, n + 1):
        for s in combinations(range(n), r):
            if ft_resolves(dist, n, s):
                return r
    raise AssertionError("V is fault-tolerant for n >= 2")


def ft_bases(n, edges):
    dist = nx_distances(n, edges)
    k = fdim(n, edges)
    return [s for s in combinations(range(n), k) if ft_resolves(dist, n, s)]


def minimal_ft_sets(n, edges):
    """All fault-tolerant sets without a fault-tolerant proper subset.

    Checks every proper subset by definition, deliberately not relying on
    the monotonicity shortcut the library uses.
    """
    dist = nx_distances(n, edges)
    ft = [s for s in all_subsets(range(n)) if ft_resolves(dist, n, s)]
    ft_frozen = {frozenset(s) for s in ft}
    return [s for s in ft if not any(other < frozenset(s) for other in ft_frozen)]


def fdim_plus(n, edges):
    return max(len(s) for s in minimal_ft_sets(n, edges))


def attaching_ft_resolves(dist, n, at, f):
    if not f:
        return resolves(dist, n, sorted(at))
    union = sorted(set(at) | set(f))
    return all(resolves(dist, n, [x for x in union if x != y]) for y in f)


def fdim_star(n, edges, at):
    dist = nx_distances(n, edges)
    free = [v for v in range(n) if v not in set(at)]
    for r in range(len(free) + 1):
        for f in combinations(free, r):
            if attaching_ft_resolves(dist, n, at, f):
                return r
    raise AssertionError("all non-anchor vertices together always qualify")


def theta(n, edges, at):
    dist = nx_distances(n, edges)
    if at and resolves(dist, n, sorted(at)):
        return fdim(n, edges)
    return max(len(set(b) & set(at)) for b in ft_bases(n, edges))


def automorphisms(n, edges):
    """All adjacency-preserving permutations, by pruned backtracking."""
    adjacency = [set() for _ in range(n)]
    for u, v in edges:
        adjacency[u].add(v)
        adjacency[v].add(u)
    degrees = [len(a) for a in adjacency]
    image = [-1] * n
    used = [False] * n
    found = []

    def extend(v):
        if v == n:
            found.append(tuple(image))
            return
        for c in range(n):
            if used[c] or degrees[c] != degrees[v]:
                continue
            if all((w in adjacency[v]) == (image[w] in adjacency[c]) for w in range(v)):
                image[v] = c
                used[c] = True
                extend(v + 1)
                used[c] = False
                image[v] = -1

    extend(0)
    return found
