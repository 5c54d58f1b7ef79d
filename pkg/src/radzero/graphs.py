"""Dynkin / Euclidean recognition for simple undirected graphs.

Every connected component is either a Dynkin diagram (A_n, D_n, E_6, E_7,
E_8) or contains a Euclidean diagram as a (not necessarily induced)
subgraph. :func:`classify` decides which and, for the second case, returns
an explicit embedding of the Euclidean template that can be checked edge by
edge with :func:`verify_certificate`.

Search order (fixes which certificate is returned):

* components are processed by smallest vertex index;
* a cycle is found by depth-first search from the smallest vertex, visiting
  neighbours in increasing order; the first back edge closes the cycle;
* in a tree, the smallest vertex of degree >= 4 gives a D~4 star on its
  four smallest neighbours;
* otherwise the smallest branch vertex and its nearest other branch vertex
  (smallest index on ties) give a D~n;
* with a single branch vertex the arms are sorted by (length, first vertex)
  and truncated to the E~6, E~7 or E~8 shape.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    pass


class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        self.n = int(n)
        adj: list[set[int]] = [set() for _ in range(self.n)]
        seen = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range for {self.n} vertices")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"multiple edges between {key[0]} and {key[1]}")
            seen.add(key)
            adj[u].add(v)
            adj[v].add(u)
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(seen))
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)

    def __repr__(self) -> str:
        return f"Graph({self.n}, {list(self.edges)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and (self.n, self.edges) == (other.n, other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            comp, stack = [], [start]
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def subgraph(self, vertices: Sequence[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..len-1`` plus the back map."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(vertices), edges), list(vertices)

    def is_connected(self) -> bool:
        return self.n == 0 or len(self.components()) == 1


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def dynkin_graph(name: str) -> Graph:
    """Template graph for ``"A5"``, ``"D4"``, ``"E8"`` and so on.

    D_n: path ``0..n-2`` with ``n-1`` attached to ``n-3``.
    E_n: path ``0..n-2`` with ``n-1`` attached to ``2``.
    """
    t = parse_dynkin_name(name)
    n = t.n
    if t.family == "A":
        return path_graph(n)
    edges = [(i, i + 1) for i in range(n - 2)]
    if t.family == "D":
        edges.append((n - 3, n - 1))
    else:
        edges.append((2, n - 1))
    return Graph(n, edges)


# -- result types -----------------------------------------------------------


@dataclass(frozen=True)
class DynkinType:
    family: str  # "A", "D" or "E"
    n: int

    def __post_init__(self):
        ok = (
            (self.family == "A" and self.n >= 1)
            or (self.family == "D" and self.n >= 4)
            or (self.family == "E" and self.n in (6, 7, 8))
        )
        if not ok:
            raise ValueError(f"no Dynkin diagram {self.family}{self.n}")

    def __str__(self) -> str:
        return f"{self.family}{self.n}"


def parse_dynkin_name(name: str) -> DynkinType:
    name = name.strip().upper()
    if len(name) < 2 or name[0] not in "ADE" or not name[1:].isdigit():
        raise ValueError(f"cannot parse Dynkin type {name!r}")
    return DynkinType(name[0], int(name[1:]))


EUCLIDEAN_KINDS = ("Atilde", "Dtilde", "Etilde")


def euclidean_template(kind: str, n: int) -> Graph:
    """Template with ``n + 1`` vertices in the order used by radical generators.

    * Atilde n: cycle ``0..n``.
    * Dtilde n: ``[tip, tip, path_0 .. path_{n-4}, tip, tip]``.
    * Etilde 6: row of five (``0..4``) then ``5, 6`` going up from the middle.
    * Etilde 7: row of seven (``0..6``), ``7`` attached to the middle.
    * Etilde 8: row of eight (``0..7``), ``8`` attached to ``2``.
    """
    if kind == "Atilde":
        if n < 2:
            raise ValueError(f"Atilde needs n >= 2 in a simple graph, got {n}")
        return Graph(n + 1, [(i, (i + 1) % (n + 1)) for i in range(n + 1)])
    if kind == "Dtilde":
        if n < 4:
            raise ValueError(f"Dtilde needs n >= 4, got {n}")
        first, last = 2, n - 2
        edges = [(0, first), (1, first)]
        edges += [(i, i + 1) for i in range(first, last)]
        edges += [(last, n - 1), (last, n)]
        return Graph(n + 1, edges)
    if kind == "Etilde":
        if n == 6:
            return Graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)])
        if n == 7:
            return Graph(8, [(i, i + 1) for i in range(6)] + [(3, 7)])
        if n == 8:
            return Graph(9, [(i, i + 1) for i in range(7)] + [(2, 8)])
        raise ValueError(f"Etilde needs n in 6, 7, 8, got {n}")
    raise ValueError(f"unknown Euclidean kind {kind!r}")


@dataclass(frozen=True)
class EuclideanCertificate:
    """``embedding[t]`` is the host vertex carrying template vertex ``t``."""

    kind: str
    n: int
    embedding: tuple[int, ...]

    @property
    def name(self) -> str:
        return f"{self.kind}{self.n}"

    def template(self) -> Graph:
        return euclidean_template(self.kind, self.n)

    def to_json(self) -> dict:
        return {"kind": self.kind, "n": self.n, "embedding": list(self.embedding)}


def verify_certificate(graph: Graph, cert: EuclideanCertificate) -> bool:
    """Injective, in range, and every template edge lands on a host edge."""
    try:
        tmpl = cert.template()
    except ValueError:
        return False
    emb = cert.embedding
    if len(emb) != tmpl.n or len(set(emb)) != len(emb):
        return False
    if any(not (0 <= v < graph.n) for v in emb):
        return False
    return all(graph.has_edge(emb[u], emb[v]) for u, v in tmpl.edges)


@dataclass(frozen=True)
class ComponentResult:
    vertices: tuple[int, ...]
    dynkin: DynkinType | None = None
    certificate: EuclideanCertificate | None = None

    @property
    def is_dynkin(self) -> bool:
        return self.dynkin is not None

    def to_json(self) -> dict:
        out: dict = {"vertices": list(self.vertices)}
        if self.dynkin is not None:
            out["type"] = str(self.dynkin)
        else:
            out["euclidean"] = self.certificate.to_json()
        return out


@dataclass(frozen=True)
class GraphClassification:
    components: tuple[ComponentResult, ...]

    @property
    def all_dynkin(self) -> bool:
        return all(c.is_dynkin for c in self.components)

    def dynkin_types(self) -> list[DynkinType]:
        return [c.dynkin for c in self.components if c.dynkin is not None]

    def certificates(self) -> list[EuclideanCertificate]:
        return [c.certificate for c in self.components if c.certificate is not None]

    def to_json(self) -> dict:
        return {"components": [c.to_json() for c in self.components]}


# -- recognition ------------------------------------------------------------


def _find_cycle(graph: Graph, start: int) -> list[int] | None:
    parent = {start: None}
    depth = {start: 0}
    stack = [(start, iter(graph.adj[start]))]
    while stack:
        v, it = stack[-1]
        for w in it:
            if w == parent[v]:
                continue
            if w in parent:
                # back edge to an ancestor: walk the tree path w .. v
                path = [v]
                while path[-1] != w:
                    path.append(parent[path[-1]])
                return path[::-1]
            parent[w] = v
            depth[w] = depth[v] + 1
            stack.append((w, iter(graph.adj[w])))
            break
        else:
            stack.pop()
    return None


def _arm(graph: Graph, centre: int, first: int) -> list[int]:
    """Walk outward from ``centre`` through ``first`` until a leaf (degree-<=2 tree)."""
    arm = [first]
    prev, cur = centre, first
    while True:
        nxt = [w for w in graph.adj[cur] if w != prev]
        if len(nxt) != 1:
            return arm
        prev, cur = cur, nxt[0]
        arm.append(cur)


def _tree_path(graph: Graph, u: int) -> tuple[dict[int, int], dict[int, int]]:
    dist = {u: 0}
    parent = {u: -1}
    queue = deque([u])
    while queue:
        v = queue.popleft()
        for w in graph.adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                parent[w] = v
                queue.append(w)
    return dist, parent


def _classify_component(graph: Graph, comp: Sequence[int]) -> ComponentResult:
    verts = tuple(comp)
    cycle = _find_cycle(graph, verts[0])
    if cycle is not None:
        cert = EuclideanCertificate("Atilde", len(cycle) - 1, tuple(cycle))
        return ComponentResult(verts, certificate=cert)

    big = [v for v in verts if graph.degree(v) >= 4]
    if big:
        c = big[0]
        a, b, x, y = graph.adj[c][:4]
        return ComponentResult(verts, certificate=EuclideanCertificate("Dtilde", 4, (a, b, c, x, y)))

    branch = [v for v in verts if graph.degree(v) == 3]
    if len(branch) >= 2:
        u = branch[0]
        dist, parent = _tree_path(graph, u)
        v = min(branch[1:], key=lambda w: (dist[w], w))
        path = [v]
        while path[-1] != u:
            path.append(parent[path[-1]])
        path.reverse()
        ends_u = [w for w in graph.adj[u] if w != path[1]]
        ends_v = [w for w in graph.adj[v] if w != path[-2]]
        emb = tuple(ends_u) + tuple(path) + tuple(ends_v)
        return ComponentResult(verts, certificate=EuclideanCertificate("Dtilde", len(emb) - 1, emb))

    if not branch:
        return ComponentResult(verts, dynkin=DynkinType("A", len(verts)))

    c = branch[0]
    arms = sorted((_arm(graph, c, w) for w in graph.adj[c]), key=lambda a: (len(a), a[0]))
    p, q, s = (len(a) for a in arms)
    short, mid, long_ = arms
    if p == 1 and q == 1:
        return ComponentResult(verts, dynkin=DynkinType("D", s + 3))
    if p == 1 and q == 2 and s <= 4:
        return ComponentResult(verts, dynkin=DynkinType("E", s + 4))
    if p == 1 and q == 2:
        emb = (mid[1], mid[0], c, *long_[:5], short[0])
        return ComponentResult(verts, certificate=EuclideanCertificate("Etilde", 8, emb))
    if p == 1:
        emb = (*mid[2::-1], c, *long_[:3], short[0])
        return ComponentResult(verts, certificate=EuclideanCertificate("Etilde", 7, emb))
    emb = (short[1], short[0], c, mid[0], mid[1], long_[0], long_[1])
    return ComponentResult(verts, certificate=EuclideanCertificate("Etilde", 6, emb))


def classify(graph: Graph) -> GraphClassification:
    return GraphClassification(
        tuple(_classify_component(graph, comp) for comp in graph.components())
    )


def find_euclidean_subgraph(graph: Graph) -> EuclideanCertificate | None:
    """Certificate for a connected graph, or ``None`` when it is Dynkin."""
    comps = graph.components()
    if len(comps) != 1:
        raise GraphError(f"expected a connected graph, got {len(comps)} components")
    return _classify_component(graph, comps[0]).certificate


# -- exhaustive enumeration in trees ----------------------------------------


def _paths_from(graph: Graph, centre: int, first: int, length: int) -> Iterator[tuple[int, ...]]:
    """Simple paths ``first, ...`` of the given length leaving ``centre`` (tree only)."""

    def rec(prev, cur, acc):
        if len(acc) == length:
            yield tuple(acc)
            return
        for w in graph.adj[cur]:
            if w != prev:
                acc.append(w)
                yield from rec(cur, w, acc)
                acc.pop()

    yield from rec(centre, first, [first])


def iter_tree_euclidean(graph: Graph, comp: Sequence[int]) -> Iterator[EuclideanCertificate]:
    """Every Euclidean subgraph embedding inside an acyclic component.

    Order: D~4 stars, then D~n by vertex pairs, then E~6, E~7, E~8 by centre.
    Automorphic duplicates are not removed.
    """
    for c in comp:
        if graph.degree(c) >= 4:
            for a, b, x, y in combinations(graph.adj[c], 4):
                yield EuclideanCertificate("Dtilde", 4, (a, b, c, x, y))

    branch = [v for v in comp if graph.degree(v) >= 3]
    for i, u in enumerate(branch):
        _, parent = _tree_path(graph, u)
        for v in branch[i + 1 :]:
            path = [v]
            while path[-1] != u:
                path.append(parent[path[-1]])
            path.reverse()
            if len(path) < 2:
                continue
            on_path = set(path)
            for ends_u in combinations([w for w in graph.adj[u] if w not in on_path], 2):
                for ends_v in combinations([w for w in graph.adj[v] if w not in on_path], 2):
                    emb = ends_u + tuple(path) + ends_v
                    yield EuclideanCertificate("Dtilde", len(emb) - 1, emb)

    shapes = ((6, (2, 2, 2)), (7, (1, 3, 3)), (8, (1, 2, 5)))
    for n, (p, q, s) in shapes:
        for c in branch:
            for x, y, z in permutations(graph.adj[c], 3):
                if n == 6 and not x < y < z:
                    continue
                if n == 7 and not y < z:
                    continue
                for ax in _paths_from(graph, c, x, p):
                    for ay in _paths_from(graph, c, y, q):
                        for az in _paths_from(graph, c, z, s):
                            if n == 6:
                                emb = (ax[1], ax[0], c, ay[0], ay[1], az[0], az[1])
                            elif n == 7:
                                emb = (ay[2], ay[1], ay[0], c, *az, ax[0])
                            else:
                                emb = (ay[1], ay[0], c, *az, ax[0])
                            yield EuclideanCertificate("Etilde", n, emb)


def iter_euclidean_subgraphs(graph: Graph) -> Iterator[EuclideanCertificate]:
    """Candidate Euclidean subgraphs, component by component.

    For each non-Dynkin component: the :func:`classify` certificate first,
    then (for trees) every other embedding. Components with a cycle only
    contribute the cycle, whose generator is all ones.
    """
    for comp in graph.components():
        res = _classify_component(graph, comp)
        if res.certificate is None:
            continue
        yield res.certificate
        if res.certificate.kind != "Atilde":
            yield from iter_tree_euclidean(graph, comp)


def has_cycle(graph: Graph) -> bool:
    """Forest test by edge count per component."""
    return any(
        sum(graph.degree(v) for v in comp) // 2 >= len(comp) for comp in graph.components()
    )


def find_cycle(graph: Graph) -> list[int] | None:
    for comp in graph.components():
        cyc = _find_cycle(graph, comp[0])
        if cyc is not None:
            return cyc
    return None
