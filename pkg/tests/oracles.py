"""Independent reference computations used only by the tests.

Nothing here calls the classifier or the root generator under test.
"""

from __future__ import annotations

from itertools import product

import networkx as nx
import numpy as np
from networkx.algorithms import isomorphism


def form_values(n, edges, xs):
    xs = np.asarray(xs, dtype=np.int64)
    out = (xs * xs).sum(axis=1)
    for i, j in edges:
        out -= xs[:, i] * xs[:, j]
    return out


def box_minimum(n, edges, bound=6, chunk=1 << 18):
    """Exact minimum of the Tits form over nonzero ``x`` in ``{0..bound}^n``.

    Enumerates the vertices outside a greedy independent set ``I``; for fixed
    outer values each ``x_i`` with ``i`` in ``I`` enters only through
    ``x_i^2 - x_i * s_i`` (``s_i`` = sum of its neighbours) and is minimised
    in closed form.
    """
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    indep = []
    for v in sorted(range(n), key=lambda v: (len(adj[v]), v)):
        if not adj[v] & set(indep):
            indep.append(v)
    outer = [v for v in range(n) if v not in indep]
    pos = {v: c for c, v in enumerate(outer)}
    outer_edges = [(pos[u], pos[v]) for u, v in edges if u in pos and v in pos]
    links = [[pos[w] for w in adj[i]] for i in indep]

    best = 1 if indep else None  # outer all zero: best nonzero choice is a unit vector
    t = np.arange(bound + 1)
    m = len(outer)
    total = (bound + 1) ** m
    for start in range(1 if m else 0, total if m else 0, chunk):
        idx = np.arange(start, min(start + chunk, total))
        xs = np.empty((len(idx), m), dtype=np.int64)
        rest = idx.copy()
        for c in range(m):
            xs[:, c] = rest % (bound + 1)
            rest //= bound + 1
        vals = form_values(m, outer_edges, xs)
        for nb in links:
            s = xs[:, nb].sum(axis=1) if nb else np.zeros(len(xs), dtype=np.int64)
            vals += (t[None, :] ** 2 - t[None, :] * s[:, None]).min(axis=1)
        low = int(vals.min())
        best = low if best is None else min(best, low)
    return best


def _box_chunks(n, bound, chunk=1 << 20):
    base = bound + 1
    total = base**n
    for start in range(0, total, chunk):
        rest = np.arange(start, min(start + chunk, total), dtype=np.int64)
        xs = np.empty((len(rest), n), dtype=np.int64)
        for c in range(n):
            xs[:, c] = rest % base
            rest //= base
        yield xs


def brute_roots(n, edges, bound):
    """All ``0 < x <= bound`` with form value 1, by full scan."""
    out = set()
    for xs in _box_chunks(n, bound):
        for row in xs[form_values(n, edges, xs) == 1]:
            out.add(tuple(int(v) for v in row))
    return out


def brute_box_minimum(n, edges, bound=6):
    """Plain full scan; used to cross-check :func:`box_minimum` on small graphs."""
    best = None
    for xs in _box_chunks(n, bound):
        vals = form_values(n, edges, xs)
        nonzero = xs.any(axis=1)
        if nonzero.any():
            low = int(vals[nonzero].min())
            best = low if best is None else min(best, low)
    return best


def euclidean_nx(kind, n):
    if kind == "Atilde":
        return nx.cycle_graph(n + 1)
    if kind == "Dtilde":
        g = nx.path_graph(range(2, n - 1))
        g.add_edges_from([(0, 2), (1, 2), (n - 2, n - 1), (n - 2, n)])
        return g
    arms = {6: (2, 2, 2), 7: (1, 3, 3), 8: (1, 2, 5)}[n]
    g = nx.Graph()
    g.add_node(0)
    nxt = 1
    for length in arms:
        prev = 0
        for _ in range(length):
            g.add_edge(prev, nxt)
            prev, nxt = nxt, nxt + 1
    return g


def euclidean_catalogue(max_vertices):
    out = []
    for n in range(2, max_vertices):
        out.append(("Atilde", n))
    for n in range(4, max_vertices):
        out.append(("Dtilde", n))
    for n in (6, 7, 8):
        if n + 1 <= max_vertices:
            out.append(("Etilde", n))
    return out


def contains_euclidean(nxg):
    """True iff some Euclidean diagram is a (not necessarily induced) subgraph."""
    for kind, n in euclidean_catalogue(nxg.number_of_nodes()):
        gm = isomorphism.GraphMatcher(nxg, euclidean_nx(kind, n))
        if next(gm.subgraph_monomorphisms_iter(), None) is not None:
            return True
    return False


def to_nx(graph):
    g = nx.Graph()
    g.add_nodes_from(range(graph.n))
    g.add_edges_from(graph.edges)
    return g
