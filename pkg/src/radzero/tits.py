"""Tits form, radical generators, positive roots and class counting."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .algebra import AlgebraSpec, require_valid
from .graphs import (
    EuclideanCertificate,
    Graph,
    classify,
    iter_euclidean_subgraphs,
)
from .quiver import Quiver, dimension_vector, separated, separated_graph


class QuadraticForm:
    """``q(x) = sum x_i^2 - sum over arrows (i, j) of x_i x_j``.

    Orientation is irrelevant; a loop at ``i`` contributes ``-x_i^2``.
    """

    def __init__(self, n: int, pairs: Sequence[tuple[int, int]]):
        self.n = int(n)
        self.pairs = tuple((int(i), int(j)) for i, j in pairs)

    @classmethod
    def of(cls, obj: Quiver | Graph) -> "QuadraticForm":
        if isinstance(obj, Quiver):
            return cls(len(obj), obj.arrows)
        return cls(obj.n, obj.edges)

    def __call__(self, x: Sequence[int]) -> int:
        return tits_value(self, x)

    def gram(self) -> np.ndarray:
        """Integer matrix ``G`` with ``q(x) = x^T G x / 2``."""
        g = 2 * np.eye(self.n, dtype=np.int64)
        for i, j in self.pairs:
            g[i, j] -= 1
            g[j, i] -= 1
        return g


def tits_value(form: QuadraticForm, x: Sequence[int]) -> int:
    if len(x) != form.n:
        raise ValueError(f"dimension vector has length {len(x)}, form has {form.n} vertices")
    x = [int(v) for v in x]
    return sum(v * v for v in x) - sum(x[i] * x[j] for i, j in form.pairs)


def tits_values(form: QuadraticForm, xs: np.ndarray) -> np.ndarray:
    """Vectorised :func:`tits_value` over the rows of ``xs``."""
    xs = np.asarray(xs, dtype=np.int64)
    out = (xs * xs).sum(axis=1)
    for i, j in form.pairs:
        out -= xs[:, i] * xs[:, j]
    return out


# -- radical generators -----------------------------------------------------


def radical_generator(kind: str, n: int) -> tuple[int, ...]:
    """Positive generator of the radical, in the template order of :mod:`graphs`."""
    if kind == "Atilde":
        if n < 2:
            raise ValueError(f"Atilde needs n >= 2, got {n}")
        return (1,) * (n + 1)
    if kind == "Dtilde":
        if n < 4:
            raise ValueError(f"Dtilde needs n >= 4, got {n}")
        return (1, 1) + (2,) * (n - 3) + (1, 1)
    if kind == "Etilde":
        table = {
            6: (1, 2, 3, 2, 1, 2, 1),
            7: (1, 2, 3, 4, 3, 2, 1, 2),
            8: (2, 4, 6, 5, 4, 3, 2, 1, 3),
        }
        if n not in table:
            raise ValueError(f"Etilde needs n in 6, 7, 8, got {n}")
        return table[n]
    raise ValueError(f"unknown Euclidean kind {kind!r}")


def in_radical_line(kind: str, n: int, x: Sequence[int]) -> bool:
    """True iff ``x`` is an integer multiple of the radical generator."""
    gen = radical_generator(kind, n)
    if len(x) != len(gen):
        return False
    t, rem = divmod(x[0], gen[0])
    return rem == 0 and all(xi == t * gi for xi, gi in zip(x, gen))


@dataclass(frozen=True)
class Obstruction:
    """A Euclidean subgraph of the separated graph whose radical generator fits under ``d``."""

    certificate: EuclideanCertificate
    generator: tuple[int, ...]
    bound: tuple[int, ...]  # d restricted to the embedded vertices
    labels: tuple = ()

    def to_json(self) -> dict:
        out = {
            "subgraph": self.certificate.to_json(),
            "generator": list(self.generator),
            "dimension_bound": list(self.bound),
        }
        if self.labels:
            out["vertex_labels"] = [list(v) for v in self.labels]
        return out


def find_radical_obstruction(spec: AlgebraSpec) -> Obstruction | None:
    """First Euclidean subgraph whose radical generator is ``<=`` the projected ``d``.

    A hit shows that some representation space inside ``rep_d`` has a
    nonzero dimension vector with nonpositive form value, so the number of
    conjugacy classes is infinite.
    """
    require_valid(spec)
    quiver = separated(spec)
    graph = quiver.underlying_graph()
    d = dimension_vector(spec)
    for cert in iter_euclidean_subgraphs(graph):
        gen = radical_generator(cert.kind, cert.n)
        e = tuple(d[v] for v in cert.embedding)
        if all(g <= b for g, b in zip(gen, e)):
            labels = tuple(quiver.vertices[v] for v in cert.embedding)
            return Obstruction(cert, gen, e, labels)
    return None


# -- positive roots ---------------------------------------------------------


@dataclass(frozen=True)
class RootSet:
    roots: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __contains__(self, x) -> bool:
        return tuple(x) in set(self.roots)

    def max_coordinate(self) -> int:
        return max(max(r) for r in self.roots)


ROOT_BOUND = 6


def positive_roots(graph: Graph, bound: int = ROOT_BOUND) -> RootSet:
    """All ``x > 0`` with ``q(x) = 1`` and every coordinate ``<= bound``.

    Grown from the unit vectors by adding one unit vector at a time while
    staying a root; for a Dynkin graph this reaches every positive root.
    """
    if not graph.is_connected() or graph.n == 0:
        raise ValueError("positive_roots needs a connected nonempty graph")
    cls = classify(graph)
    if not cls.all_dynkin:
        cert = cls.certificates()[0]
        raise ValueError(f"graph is not Dynkin (contains {cert.name}); root set is infinite")

    form = QuadraticForm.of(graph)
    n = graph.n
    units = [tuple(int(i == v) for i in range(n)) for v in range(n)]
    found = set(units)
    queue = deque(units)
    while queue:
        x = queue.popleft()
        for v in range(n):
            if x[v] >= bound:
                continue
            y = x[:v] + (x[v] + 1,) + x[v + 1 :]
            if y not in found and tits_value(form, y) == 1:
                found.add(y)
                queue.append(y)
    return RootSet(tuple(sorted(found)))


# -- counting ---------------------------------------------------------------


class Unbounded(enum.Enum):
    INFINITE = "infinite"
    UNKNOWN = "unknown"


INFINITE = Unbounded.INFINITE
UNKNOWN = Unbounded.UNKNOWN


def format_count(c: int | Unbounded) -> str:
    return c.value if isinstance(c, Unbounded) else str(c)


def count_decompositions(roots: Sequence[Sequence[int]], d: Sequence[int]) -> int:
    """Number of multisets of ``roots`` summing to ``d`` (exact, Python ints).

    Dynamic programme over the box ``0 <= x <= d``, roots in sorted order:
    ``ways[x] += ways[x - root]`` with ``x`` increasing, done slab by slab
    along the first axis where the root is nonzero.
    """
    d = tuple(int(v) for v in d)
    if not d:
        return 1
    usable = sorted(tuple(r) for r in roots if all(ri <= di for ri, di in zip(r, d)))
    ways = np.zeros(tuple(v + 1 for v in d), dtype=object)
    ways[(0,) * len(d)] = 1
    for root in usable:
        axis = next(i for i, ri in enumerate(root) if ri)
        step = root[axis]
        dst = [slice(ri, None) for ri in root]
        src = [slice(0, di + 1 - ri) for ri, di in zip(root, d)]
        for t in range(step, d[axis] + 1):
            dst[axis], src[axis] = t, t - step
            ways[tuple(dst)] += ways[tuple(src)]
    return int(ways[d])


def count_classes(spec: AlgebraSpec) -> int | Unbounded:
    """Number of conjugacy classes of nilpotent left ideals, or INFINITE / UNKNOWN.

    Finite counts are only reported when every component of the separated
    graph is Dynkin; they count multisets of positive roots summing to the
    dimension vector, component by component.
    """
    require_valid(spec)
    graph = separated_graph(spec)
    d = dimension_vector(spec)
    cls = classify(graph)
    if cls.all_dynkin:
        total = 1
        for comp in cls.components:
            sub, back = graph.subgraph(comp.vertices)
            dc = [d[v] for v in back]
            if not any(dc):
                continue
            total *= count_decompositions(positive_roots(sub).roots, dc)
        return total
    if find_radical_obstruction(spec) is not None:
        return INFINITE
    return UNKNOWN
