"""Small finite fields, row reduction and subspace enumeration.

Elements of GF(q) are the integers ``0..q-1``. For prime ``q`` arithmetic is
modular; GF(4) elements are bit patterns of polynomials over GF(2) reduced
modulo ``x^2 + x + 1`` (so ``2`` is ``x`` and ``3`` is ``x + 1``).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Sequence

SUPPORTED_Q = (2, 3, 4, 5)

Vector = tuple[int, ...]
Basis = tuple[Vector, ...]  # rows of a reduced row echelon form


class GF:
    def __init__(self, q: int):
        if q not in SUPPORTED_Q:
            raise ValueError(f"unsupported field size {q}; choose from {SUPPORTED_Q}")
        self.q = q
        if q == 4:
            add = [[a ^ b for b in range(4)] for a in range(4)]
            mul = [[_gf4_mul(a, b) for b in range(4)] for a in range(4)]
        else:
            add = [[(a + b) % q for b in range(q)] for a in range(q)]
            mul = [[(a * b) % q for b in range(q)] for a in range(q)]
        self.add = add
        self.mul = mul
        self.neg = [next(b for b in range(q) if add[a][b] == 0) for a in range(q)]
        self.inv = [None] + [next(b for b in range(q) if mul[a][b] == 1) for a in range(1, q)]
        self.units = tuple(range(1, q))
        self.primitive = next(g for g in self.units if self._order(g) == q - 1)

    def _order(self, g: int) -> int:
        x, n = g, 1
        while x != 1:
            x, n = self.mul[x][g], n + 1
        return n

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]

    def matmul(self, a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> tuple[Vector, ...]:
        add, mul = self.add, self.mul
        cols = list(zip(*b)) if b else []
        out = []
        for row in a:
            new = []
            for col in cols:
                s = 0
                for x, y in zip(row, col):
                    if x and y:
                        s = add[s][mul[x][y]]
                new.append(s)
            out.append(tuple(new))
        return tuple(out)

    def rref(self, rows: Sequence[Sequence[int]]) -> Basis:
        """Reduced row echelon form with zero rows dropped."""
        add, mul, neg, inv = self.add, self.mul, self.neg, self.inv
        m = [list(r) for r in rows]
        if not m:
            return ()
        width = len(m[0])
        pivot_row = 0
        for col in range(width):
            sel = next((i for i in range(pivot_row, len(m)) if m[i][col]), None)
            if sel is None:
                continue
            m[pivot_row], m[sel] = m[sel], m[pivot_row]
            piv = m[pivot_row]
            s = inv[piv[col]]
            if s != 1:
                piv[:] = [mul[s][x] for x in piv]
            for i, row in enumerate(m):
                if i != pivot_row and row[col]:
                    f = neg[row[col]]
                    row[:] = [add[x][mul[f][y]] for x, y in zip(row, piv)]
            pivot_row += 1
            if pivot_row == len(m):
                break
        return tuple(tuple(r) for r in m[:pivot_row])

    def rank(self, rows: Sequence[Sequence[int]]) -> int:
        return len(self.rref(rows))


def _gf4_mul(a: int, b: int) -> int:
    r = 0
    for bit in range(2):
        if (b >> bit) & 1:
            r ^= a << bit
    if r & 4:
        r ^= 0b111
    return r


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    return GF(q)


def gaussian_binomial(a: int, m: int, q: int) -> int:
    """Number of ``m``-dimensional subspaces of ``GF(q)^a`` (product formula)."""
    if m < 0 or m > a:
        return 0
    num = den = 1
    for i in range(m):
        num *= q ** (a - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def subspace_count(a: int, q: int) -> int:
    return sum(gaussian_binomial(a, m, q) for m in range(a + 1))


def iter_subspaces(a: int, q: int) -> Iterator[Basis]:
    """Every subspace of ``GF(q)^a`` once, as its RREF basis.

    Chooses pivot columns, then fills the non-pivot entries to the right
    of each pivot with arbitrary field elements.
    """
    for m in range(a + 1):
        for pivots in combinations(range(a), m):
            free = [
                (i, c)
                for i, p in enumerate(pivots)
                for c in range(p + 1, a)
                if c not in pivots
            ]
            for values in product(range(q), repeat=len(free)):
                rows = [[0] * a for _ in range(m)]
                for i, p in enumerate(pivots):
                    rows[i][p] = 1
                for (i, c), val in zip(free, values):
                    rows[i][c] = val
                yield tuple(tuple(r) for r in rows)
