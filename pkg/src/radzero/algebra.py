"""Block data model for radical-square-zero distributive algebras.

An algebra ``A`` with ``A/J(A) = M_{r_1}(k) x ... x M_{r_k}(k)`` and
``J(A)^2 = 0`` is determined (under distributivity) by the block sizes ``r``
and the 0/1 pattern recording which ``f_i J(A) f_j`` are nonzero.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence


class SpecError(ValueError):
    """Base class for every problem with an algebra spec."""


class SpecSyntaxError(SpecError):
    """Input is not well-formed JSON."""

    def __init__(self, msg: str, line: int, column: int, pos: int):
        super().__init__(f"{msg} (line {line}, column {column}, char {pos})")
        self.line = line
        self.column = column
        self.pos = pos


class SpecSchemaError(SpecError):
    """JSON is well formed but does not have the ``{k, r, j}`` shape."""

    def __init__(self, msg: str, path: str = "$"):
        super().__init__(f"{path}: {msg}")
        self.path = path


class SpecInvariantError(SpecError):
    """Shape is fine but a standing hypothesis is violated (e.g. ``r_i = 0``)."""

    def __init__(self, problems: Sequence[str]):
        super().__init__("; ".join(problems))
        self.problems = list(problems)


@dataclass(frozen=True)
class AlgebraSpec:
    """Block sizes and radical pattern.

    ``j_pattern[i][j]`` is True iff ``J_ij != 0``. Construction does not
    validate; call :func:`validate` or any operation (they all check).
    """

    k: int
    r: tuple[int, ...]
    j_pattern: tuple[tuple[bool, ...], ...]

    def __init__(self, k: int, r: Sequence[int], j_pattern: Sequence[Sequence]):
        object.__setattr__(self, "k", int(k))
        object.__setattr__(self, "r", tuple(int(x) for x in r))
        object.__setattr__(
            self, "j_pattern", tuple(tuple(bool(x) for x in row) for row in j_pattern)
        )

    @classmethod
    def from_pattern(cls, r: Sequence[int], j_pattern: Sequence[Sequence]) -> "AlgebraSpec":
        return cls(len(r), r, j_pattern)

    @property
    def n(self) -> int:
        return sum(self.r)

    @property
    def is_basic(self) -> bool:
        return all(x == 1 for x in self.r)

    def arrows(self) -> list[tuple[int, int]]:
        """Pairs ``(i, j)`` with ``J_ij != 0``, row-major."""
        return [
            (i, j)
            for i, row in enumerate(self.j_pattern)
            for j, bit in enumerate(row)
            if bit
        ]

    def __repr__(self) -> str:
        j = [[int(b) for b in row] for row in self.j_pattern]
        return f"AlgebraSpec(k={self.k}, r={list(self.r)}, j={j})"


@dataclass(frozen=True)
class ValidationReport:
    problems: tuple[str, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.problems

    def __bool__(self) -> bool:
        return self.ok


def validate(spec: AlgebraSpec) -> ValidationReport:
    """Check the standing hypotheses and list every violation found."""
    problems = []
    if spec.k < 1:
        problems.append(f"k = {spec.k} must be at least 1")
    if len(spec.r) != spec.k:
        problems.append(f"r has length {len(spec.r)}, expected k = {spec.k}")
    for i, ri in enumerate(spec.r):
        if ri < 1:
            problems.append(f"r_{i + 1} = {ri} must be at least 1")
    if len(spec.j_pattern) != spec.k:
        problems.append(f"j has {len(spec.j_pattern)} rows, expected k = {spec.k}")
    for i, row in enumerate(spec.j_pattern):
        if len(row) != spec.k:
            problems.append(f"j row {i + 1} has {len(row)} entries, expected k = {spec.k}")
    return ValidationReport(tuple(problems))


def require_valid(spec: AlgebraSpec) -> AlgebraSpec:
    report = validate(spec)
    if not report.ok:
        raise SpecInvariantError(report.problems)
    return spec


def a_vector(spec: AlgebraSpec) -> tuple[int, ...]:
    """``a_i`` = sum of ``r_j`` over the ``j`` with ``J_ij != 0`` (0 for an empty row)."""
    require_valid(spec)
    return tuple(
        sum(rj for rj, bit in zip(spec.r, row) if bit) for row in spec.j_pattern
    )


def scale(spec: AlgebraSpec, m: int) -> AlgebraSpec:
    """Block data of ``M_m(A)``: every ``r_i`` multiplied by ``m``, same pattern."""
    require_valid(spec)
    if m < 1:
        raise ValueError(f"scale factor must be positive, got {m}")
    return AlgebraSpec(spec.k, [m * x for x in spec.r], spec.j_pattern)


# -- JSON ingestion ---------------------------------------------------------

_KEYS = ("k", "r", "j")


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def from_dict(obj) -> AlgebraSpec:
    """Build a spec from decoded JSON, raising schema/invariant errors."""
    if not isinstance(obj, dict):
        raise SpecSchemaError("expected a JSON object")
    missing = [key for key in _KEYS if key not in obj]
    if missing:
        raise SpecSchemaError(f"missing field(s) {', '.join(missing)}")
    extra = sorted(set(obj) - set(_KEYS))
    if extra:
        raise SpecSchemaError(f"unexpected field(s) {', '.join(extra)}")

    k, r, j = obj["k"], obj["r"], obj["j"]
    if not _is_int(k):
        raise SpecSchemaError("must be an integer", "$.k")
    if not isinstance(r, list) or not all(_is_int(x) for x in r):
        raise SpecSchemaError("must be a list of integers", "$.r")
    if len(r) != k:
        raise SpecSchemaError(f"length {len(r)} does not match k = {k}", "$.r")
    if not isinstance(j, list) or len(j) != k:
        raise SpecSchemaError(f"must be a list of k = {k} rows", "$.j")
    for i, row in enumerate(j):
        if not isinstance(row, list) or len(row) != k:
            raise SpecSchemaError(f"must be a list of k = {k} entries", f"$.j[{i}]")
        for c, x in enumerate(row):
            if not _is_int(x) or x not in (0, 1):
                raise SpecSchemaError(f"entry {x!r} is not 0 or 1", f"$.j[{i}][{c}]")

    spec = AlgebraSpec(k, r, j)
    require_valid(spec)
    return spec


def to_dict(spec: AlgebraSpec) -> dict:
    return {
        "k": spec.k,
        "r": list(spec.r),
        "j": [[int(b) for b in row] for row in spec.j_pattern],
    }


def parse(text: bytes | str) -> AlgebraSpec:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SpecSyntaxError(f"invalid UTF-8: {exc.reason}", 1, 1, exc.start) from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecSyntaxError(exc.msg, exc.lineno, exc.colno, exc.pos) from exc
    return from_dict(obj)


def serialize(spec: AlgebraSpec) -> bytes:
    """Canonical compact form: keys ``k, r, j`` in that order, blocks in input order."""
    require_valid(spec)
    return json.dumps(to_dict(spec), separators=(",", ":")).encode("utf-8")
