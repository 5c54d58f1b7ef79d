"""Exhaustive finite-field ground truth for class counts.

Nilpotent left ideals of ``A`` correspond to tuples ``(V_1, ..., V_k)`` of
subspaces ``V_i`` of ``W_i``, the span of the coordinate blocks ``j`` with
``J_ij != 0`` (so ``dim W_i = a_i``). Conjugacy classes are the orbits of
``GL_{r_1} x ... x GL_{r_k}`` acting blockwise on the right. This module
counts those orbits over a small GF(q) in two independent ways:

* on subspace tuples, by breadth-first search over canonical RREF forms;
* on the block matrices themselves, under row operations inside each
  ``a_i``-row block and the same blockwise column action.

Group elements are never enumerated; orbits are explored with generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterator, Sequence

from .algebra import AlgebraSpec, a_vector, require_valid
from .ffield import GF, Basis, field, iter_subspaces, subspace_count

DEFAULT_BUDGET = 10**6
DEFAULT_MATRIX_BUDGET = 2**20

Matrix = tuple[tuple[int, ...], ...]
SubspaceTuple = tuple[Basis, ...]


class BudgetExceeded(RuntimeError):
    def __init__(self, what: str, size: int, budget: int):
        super().__init__(f"{what}: {size} states exceed the budget of {budget}")
        self.size = size
        self.budget = budget


@dataclass(frozen=True)
class FFInstance:
    spec: AlgebraSpec
    q: int

    def __post_init__(self):
        require_valid(self.spec)
        field(self.q)  # rejects unsupported q

    @property
    def gf(self) -> GF:
        return field(self.q)

    @cached_property
    def a(self) -> tuple[int, ...]:
        return a_vector(self.spec)

    @cached_property
    def layout(self) -> tuple[tuple[tuple[int, int, int], ...], ...]:
        """Per block row ``i``: ``(j, offset, r_j)`` segments of ``W_i`` in increasing ``j``."""
        out = []
        for row in self.spec.j_pattern:
            segs, off = [], 0
            for j, bit in enumerate(row):
                if bit:
                    segs.append((j, off, self.spec.r[j]))
                    off += self.spec.r[j]
            out.append(tuple(segs))
        return tuple(out)

    def ideal_count(self) -> int:
        """Closed-form number of nilpotent left ideals (Gaussian binomials)."""
        total = 1
        for ai in self.a:
            total *= subspace_count(ai, self.q)
        return total

    def matrix_entries(self) -> int:
        return sum(ai * ai for ai in self.a)


# -- group generators -------------------------------------------------------


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def gl_generators(n: int, gf: GF, kind: str = "elementary") -> list[Matrix]:
    """Generating set of ``GL_n(GF(q))``.

    ``elementary``: every transvection ``I + c E_st`` (``c != 0``) plus one
    diagonal scaling by a primitive element. ``small``: a transposition, an
    ``n``-cycle, ``I + E_01`` and the diagonal scaling.
    """
    gens: list[list[list[int]]] = []
    if kind == "elementary":
        for s in range(n):
            for t in range(n):
                if s != t:
                    for c in gf.units:
                        m = _identity(n)
                        m[s][t] = c
                        gens.append(m)
    elif kind == "small":
        if n >= 2:
            swap = _identity(n)
            swap[0], swap[1] = swap[1], swap[0]
            cycle = [[int(j == (i + 1) % n) for j in range(n)] for i in range(n)]
            tv = _identity(n)
            tv[0][1] = 1
            gens += [swap, cycle, tv]
    else:
        raise ValueError(f"unknown generator set {kind!r}")
    if gf.q > 2 and n >= 1:
        m = _identity(n)
        m[0][0] = gf.primitive
        gens.append(m)
    return [tuple(tuple(r) for r in m) for m in gens]


def block_generators(inst: FFInstance, kind: str = "elementary") -> list[tuple[int, Matrix]]:
    """``(j, u)`` pairs generating ``prod_j GL_{r_j}``."""
    gf = inst.gf
    return [(j, u) for j, rj in enumerate(inst.spec.r) for u in gl_generators(rj, gf, kind)]


# -- subspace route ---------------------------------------------------------


def enumerate_ideals(inst: FFInstance, budget: int = DEFAULT_BUDGET) -> Iterator[SubspaceTuple]:
    """Every subspace tuple exactly once; raises before iterating if over budget."""
    count = inst.ideal_count()
    if count > budget:
        raise BudgetExceeded("nilpotent left ideals", count, budget)
    return product(*(iter_subspaces(ai, inst.q) for ai in inst.a))


def _right_multiply(gf: GF, rows: Sequence[Sequence[int]], segs, us: dict[int, Matrix]):
    out = []
    for row in rows:
        new = list(row)
        for j, off, size in segs:
            u = us.get(j)
            if u is None:
                continue
            seg = row[off : off + size]
            new[off : off + size] = gf.matmul((seg,), u)[0]
        out.append(new)
    return out


def act_subspaces(inst: FFInstance, state: SubspaceTuple, us: dict[int, Matrix]) -> SubspaceTuple:
    """Right action of ``(u_j)`` (missing ``j`` = identity), re-canonicalised."""
    gf = inst.gf
    out = []
    for basis, segs in zip(state, inst.layout):
        if basis and any(j in us for j, _, _ in segs):
            basis = gf.rref(_right_multiply(gf, basis, segs, us))
        out.append(basis)
    return tuple(out)


def _count_orbits(states, neighbours) -> int:
    seen = set()
    orbits = 0
    for start in states:
        if start in seen:
            continue
        orbits += 1
        seen.add(start)
        stack = [start]
        while stack:
            s = stack.pop()
            for t in neighbours(s):
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
    return orbits


def orbit_count_subspaces(
    inst: FFInstance, budget: int = DEFAULT_BUDGET, generators: str = "elementary"
) -> int:
    gens = block_generators(inst, generators)

    def neighbours(state):
        for j, u in gens:
            yield act_subspaces(inst, state, {j: u})

    return _count_orbits(enumerate_ideals(inst, budget), neighbours)


# -- matrix route -----------------------------------------------------------


def iter_block_matrices(inst: FFInstance, budget: int = DEFAULT_MATRIX_BUDGET):
    """All tuples ``(M_1, ..., M_k)`` with ``M_i`` an ``a_i x a_i`` matrix over GF(q).

    The columns of ``M_i`` are the coordinates of ``W_i``; blocks with
    ``J_ij = 0`` are identically zero and are left out.
    """
    size = inst.q ** inst.matrix_entries()
    if size > budget:
        raise BudgetExceeded("block matrices", size, budget)
    q = inst.q

    def one(ai):
        for flat in product(range(q), repeat=ai * ai):
            yield tuple(tuple(flat[r * ai : (r + 1) * ai]) for r in range(ai))

    return product(*(one(ai) for ai in inst.a))


def row_space_tuple(inst: FFInstance, mats) -> SubspaceTuple:
    return tuple(inst.gf.rref(m) for m in mats)


def orbit_count_matrices(
    inst: FFInstance, budget: int = DEFAULT_MATRIX_BUDGET, generators: str = "elementary"
) -> int:
    """Orbits of ``prod GL_{a_i} x prod GL_{r_j}`` on block matrices (left x right)."""
    gf = inst.gf
    right = block_generators(inst, generators)
    left = [(i, g) for i, ai in enumerate(inst.a) for g in gl_generators(ai, gf, generators)]

    def neighbours(mats):
        for i, g in left:
            if inst.a[i]:
                yield mats[:i] + (gf.matmul(g, mats[i]),) + mats[i + 1 :]
        for j, u in right:
            us = {j: u}
            new = []
            for m, segs in zip(mats, inst.layout):
                if m and any(s[0] == j for s in segs):
                    m = tuple(tuple(r) for r in _right_multiply(gf, m, segs, us))
                new.append(m)
            yield tuple(new)

    return _count_orbits(iter_block_matrices(inst, budget), neighbours)


# -- diagnostics ------------------------------------------------------------


@dataclass(frozen=True)
class GrowthRow:
    q: int
    orbits: int | None
    error: str | None = None


@dataclass(frozen=True)
class GrowthReport:
    rows: tuple[GrowthRow, ...]

    @property
    def counts(self) -> tuple[int | None, ...]:
        return tuple(r.orbits for r in self.rows)

    @property
    def strictly_increasing(self) -> bool:
        """Advisory hint of infinitely many orbits over the algebraic closure."""
        c = [x for x in self.counts if x is not None]
        return len(c) >= 2 and len(c) == len(self.rows) and all(x < y for x, y in zip(c, c[1:]))

    def to_json(self) -> dict:
        return {
            "rows": [
                {"q": r.q, "orbits": r.orbits} if r.error is None else {"q": r.q, "error": r.error}
                for r in self.rows
            ],
            "strictly_increasing": self.strictly_increasing,
        }


def growth_probe(spec: AlgebraSpec, qs: Sequence[int], budget: int = DEFAULT_BUDGET) -> GrowthReport:
    rows = []
    for q in qs:
        try:
            rows.append(GrowthRow(q, orbit_count_subspaces(FFInstance(spec, q), budget)))
        except BudgetExceeded as exc:
            rows.append(GrowthRow(q, None, str(exc)))
    return GrowthReport(tuple(rows))
