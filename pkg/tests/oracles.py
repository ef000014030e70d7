"""Slow reference implementations used only by the tests.

Nothing here touches the package's BFS, packing or cascade code paths; each
oracle works from the raw edge list.
"""
import itertools
import math

INF = math.inf


def edge_list(g):
    return [(int(u), int(v)) for u, v in g.edges()]


def floyd_warshall(n, edges):
    dist = [[INF] * n for _ in range(n)]
    for v in range(n):
        dist[v][v] = 0
    for u, v in edges:
        dist[u][v] = dist[v][u] = 1
    for w in range(n):
        dw = dist[w]
        for i in range(n):
            di = dist[i]
            via = di[w]
            if via == INF:
                continue
            for j in range(n):
                if via + dw[j] < di[j]:
                    di[j] = via + dw[j]
    return dist


def brute_influence(n, edges):
    """Per-vertex sum over reachable others of 2**-distance."""
    dist = floyd_warshall(n, edges)
    return [sum(0.5 ** d for j, d in enumerate(row) if j != i and d != INF)
            for i, row in enumerate(dist)]


def reach(n, edges, seeds):
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = set(seeds)
    stack = list(seen)
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def live_edge_moments(n, edges, seeds, p):
    """Exact mean and variance of the final active count, enumerating every
    kept/deleted outcome of every edge."""
    m = len(edges)
    mean = second = 0.0
    for keep in itertools.product((False, True), repeat=m):
        kept = [e for e, k in zip(edges, keep) if k]
        w = p ** len(kept) * (1 - p) ** (m - len(kept))
        s = len(reach(n, kept, seeds))
        mean += w * s
        second += w * s * s
    return mean, second - mean * mean


def nearest_seed_distance(dist, seeds):
    n = len(dist)
    return [min(dist[s][v] for s in seeds) for v in range(n)]
