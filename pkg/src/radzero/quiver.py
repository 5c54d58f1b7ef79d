"""Ordinary and separated quivers of a spec, and the dimension vector."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Hashable, Sequence

from .algebra import AlgebraSpec, a_vector, require_valid
from .graphs import Graph


@dataclass(frozen=True)
class Quiver:
    """Finite directed multigraph; arrows are pairs of vertex positions."""

    vertices: tuple[Hashable, ...]
    arrows: tuple[tuple[int, int], ...]

    def __init__(self, vertices: Sequence[Hashable], arrows: Sequence[Sequence[int]]):
        vertices = tuple(vertices)
        arrows = tuple((int(s), int(t)) for s, t in arrows)
        n = len(vertices)
        for s, t in arrows:
            if not (0 <= s < n and 0 <= t < n):
                raise ValueError(f"arrow ({s}, {t}) has an endpoint outside 0..{n - 1}")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "arrows", arrows)

    def __len__(self) -> int:
        return len(self.vertices)

    def loops(self) -> int:
        return sum(1 for s, t in self.arrows if s == t)

    def underlying_graph(self) -> Graph:
        """Undirected simple graph; raises on loops or parallel/antiparallel pairs."""
        return Graph(len(self.vertices), self.arrows)

    def to_json(self) -> dict:
        labels = [list(v) if isinstance(v, tuple) else v for v in self.vertices]
        return {"vertices": labels, "arrows": [list(a) for a in self.arrows]}

    def to_dot(self, name: str = "Q") -> str:
        lines = [f"digraph {name} {{"]
        for idx, label in enumerate(self.vertices):
            text = json.dumps(str(label))
            lines.append(f"  v{idx} [label={text}];")
        for s, t in self.arrows:
            lines.append(f"  v{s} -> v{t};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def ordinary_quiver(spec: AlgebraSpec) -> Quiver:
    """Vertices ``1..k``; an arrow ``i -> j`` for each nonzero ``J_ij``."""
    require_valid(spec)
    return Quiver(range(1, spec.k + 1), spec.arrows())


def separated(spec: AlgebraSpec) -> Quiver:
    """Separated quiver: ``2k`` vertices, all ``(i, 0)`` first, then all ``(i, 1)``.

    Arrow ``(i, 0) -> (j, 1)`` for each nonzero ``J_ij``; always bipartite and
    loop-free, so a loop ``J_ii`` becomes a single edge.
    """
    require_valid(spec)
    k = spec.k
    labels = [(i, 0) for i in range(1, k + 1)] + [(i, 1) for i in range(1, k + 1)]
    return Quiver(labels, [(i, k + j) for i, j in spec.arrows()])


def reverse(q: Quiver) -> Quiver:
    return Quiver(q.vertices, [(t, s) for s, t in q.arrows])


def dimension_vector(spec: AlgebraSpec) -> tuple[int, ...]:
    """``(a_1, ..., a_k, r_1, ..., r_k)``, aligned with :func:`separated`."""
    return a_vector(spec) + spec.r


def separated_graph(spec: AlgebraSpec) -> Graph:
    return separated(spec).underlying_graph()
