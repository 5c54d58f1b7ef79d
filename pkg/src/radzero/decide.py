"""Finiteness of the semigroup of conjugacy classes of left ideals.

Decision ladder (first rule that applies wins):

1. separated graph is a disjoint union of Dynkin diagrams -> finite;
2. basic algebra (all ``r_i = 1``) -> finite iff the separated graph is a
   forest and every ``a_i <= 3``;
3. some Euclidean subgraph has its radical generator under ``d`` -> infinite;
4. otherwise unknown.

Rule 3 always fires when every ``r_i >= 6`` and some component is not
Dynkin, so :func:`decide_scaled` with ``m >= 6`` never answers unknown.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .algebra import AlgebraSpec, a_vector, require_valid, scale
from .graphs import (
    EuclideanCertificate,
    classify,
    find_cycle,
    has_cycle,
    verify_certificate,
)
from .quiver import dimension_vector, separated
from .tits import Obstruction, QuadraticForm, find_radical_obstruction, radical_generator, tits_value


class Status(enum.Enum):
    FINITE = "finite"
    INFINITE = "infinite"
    UNKNOWN = "unknown"


class RepType(enum.Enum):
    FINITE = "finite"
    INFINITE = "infinite"


GABRIEL = "Gabriel's theorem (finite type iff separated graph is Dynkin)"
FINITE_TYPE = "finite representation type implies finitely many conjugacy classes"
BASIC = "basic-algebra criterion (forest and dim eJ(A) <= 3)"
RADICAL = "radical-vector obstruction (Euclidean subgraph with generator under d)"
TITS = "Tits dimension argument (q(x) <= 0 for some x > 0)"
BLOCK_SIX = "block-size-six theorem (all r_i >= 6: finite iff finite type)"


@dataclass(frozen=True)
class DynkinDecomposition:
    types: tuple[str, ...]
    kind = "dynkin_decomposition"

    def to_json(self) -> dict:
        return {"kind": self.kind, "components": list(self.types)}


@dataclass(frozen=True)
class BasicCriterion:
    max_a: int
    kind = "basic_criterion"

    def to_json(self) -> dict:
        return {"kind": self.kind, "acyclic": True, "max_a": self.max_a}


@dataclass(frozen=True)
class BasicViolation:
    """Either a block with ``a_i > 3`` (1-based ``block``) or a cycle of the separated graph."""

    block: int | None = None
    a: int | None = None
    cycle: tuple[int, ...] | None = None
    kind = "basic_violation"

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.block is not None:
            out.update(block=self.block, a=self.a)
        if self.cycle is not None:
            out["cycle"] = list(self.cycle)
        return out


@dataclass(frozen=True)
class RadicalObstruction:
    obstruction: Obstruction
    kind = "radical_obstruction"

    def to_json(self) -> dict:
        return {"kind": self.kind, **self.obstruction.to_json()}


@dataclass(frozen=True)
class NoApplicableTheorem:
    reasons: tuple[str, ...]
    kind = "no_applicable_theorem"

    def to_json(self) -> dict:
        return {"kind": self.kind, "reasons": list(self.reasons)}


Certificate = (
    DynkinDecomposition | BasicCriterion | BasicViolation | RadicalObstruction | NoApplicableTheorem
)


@dataclass(frozen=True)
class Verdict:
    status: Status
    rep_type: RepType
    certificate: Certificate
    citations: tuple[str, ...] = field(default_factory=tuple)

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "rep_type": self.rep_type.value,
            "certificate": self.certificate.to_json(),
            "citations": list(self.citations),
        }


class ConsistencyError(AssertionError):
    """Two rules of the ladder disagree; this would be a bug, never a verdict."""


def decide(spec: AlgebraSpec) -> Verdict:
    require_valid(spec)
    graph = separated(spec).underlying_graph()
    cls = classify(graph)
    rep_type = RepType.FINITE if cls.all_dynkin else RepType.INFINITE
    a = a_vector(spec)

    if cls.all_dynkin:
        if spec.is_basic and (has_cycle(graph) or max(a) > 3):
            raise ConsistencyError(f"{spec!r}: Dynkin separated graph but basic criterion fails")
        cert = DynkinDecomposition(tuple(str(t) for t in cls.dynkin_types()))
        return Verdict(Status.FINITE, rep_type, cert, (GABRIEL, FINITE_TYPE))

    obstruction = find_radical_obstruction(spec)

    if spec.is_basic:
        cycle = find_cycle(graph)
        worst = max(range(spec.k), key=lambda i: (a[i], -i))
        if cycle is None and a[worst] <= 3:
            if obstruction is not None:
                raise ConsistencyError(f"{spec!r}: basic criterion finite but obstruction found")
            return Verdict(Status.FINITE, rep_type, BasicCriterion(max(a)), (BASIC,))
        if a[worst] > 3:
            cert = BasicViolation(block=worst + 1, a=a[worst])
        else:
            cert = BasicViolation(cycle=tuple(cycle))
        return Verdict(Status.INFINITE, rep_type, cert, (BASIC,))

    if obstruction is not None:
        cites = (RADICAL, TITS)
        if min(spec.r) >= 6:
            cites += (BLOCK_SIX,)
        return Verdict(Status.INFINITE, rep_type, RadicalObstruction(obstruction), cites)

    reasons = (
        "separated graph is not a union of Dynkin diagrams",
        "algebra is not basic",
        f"smallest block size is {min(spec.r)} < 6 and no radical generator fits under d",
    )
    return Verdict(Status.UNKNOWN, rep_type, NoApplicableTheorem(reasons), ())


def decide_scaled(spec: AlgebraSpec, m: int) -> Verdict:
    return decide(scale(spec, m))


# -- independent re-check ---------------------------------------------------


def _forest(n: int, edges) -> bool:
    parent = list(range(n))

    def root(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = root(u), root(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def verify_verdict(spec: AlgebraSpec, verdict: Verdict) -> bool:
    """Re-check a verdict's certificate from the spec alone."""
    require_valid(spec)
    quiver = separated(spec)
    graph = quiver.underlying_graph()
    d = dimension_vector(spec)
    a = d[: spec.k]
    cert = verdict.certificate

    if isinstance(cert, DynkinDecomposition):
        cls = classify(graph)
        return (
            verdict.status is Status.FINITE
            and verdict.rep_type is RepType.FINITE
            and cls.all_dynkin
            and list(cert.types) == [str(t) for t in cls.dynkin_types()]
        )

    if isinstance(cert, BasicCriterion):
        return (
            verdict.status is Status.FINITE
            and spec.is_basic
            and _forest(graph.n, graph.edges)
            and max(a) == cert.max_a <= 3
        )

    if isinstance(cert, BasicViolation):
        if verdict.status is not Status.INFINITE or not spec.is_basic:
            return False
        if cert.block is not None:
            return 1 <= cert.block <= spec.k and a[cert.block - 1] == cert.a > 3
        cyc = cert.cycle or ()
        return (
            len(cyc) >= 3
            and len(set(cyc)) == len(cyc)
            and all(graph.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))
        )

    if isinstance(cert, RadicalObstruction):
        ob = cert.obstruction
        c: EuclideanCertificate = ob.certificate
        if verdict.status is not Status.INFINITE or not verify_certificate(graph, c):
            return False
        gen = radical_generator(c.kind, c.n)
        bound = tuple(d[v] for v in c.embedding)
        form = QuadraticForm.of(c.template())
        return (
            tuple(ob.generator) == gen
            and tuple(ob.bound) == bound
            and all(g <= b for g, b in zip(gen, bound))
            and min(gen) > 0
            and tits_value(form, gen) == 0
        )

    if isinstance(cert, NoApplicableTheorem):
        return (
            verdict.status is Status.UNKNOWN
            and not classify(graph).all_dynkin
            and not spec.is_basic
            and find_radical_obstruction(spec) is None
        )

    return False
