"""Exact linear algebra over Q and GF(p).

Matrices are passed column-wise as sparse mappings ``{row: coefficient}``,
which is the natural shape of simplicial boundary maps. Small integer
matrices go through Bareiss' fraction-free elimination. Everything else
uses sparse column reduction: over GF(p) with normalised pivots, over Q
with primitive integer vectors so that no fractions ever appear.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

Column = Mapping[int, int]

# rows * cols up to which rational ranks use dense Bareiss; sparse
# primitive-vector reduction is faster beyond that
DENSE_LIMIT = 400


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldChoice:
    """Coefficient field: exact rationals (``characteristic == 0``) or GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic and not _is_prime(self.characteristic):
            raise ValueError(f"GF({self.characteristic}): characteristic must be prime")

    @classmethod
    def rationals(cls) -> "FieldChoice":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "FieldChoice":
        return cls(p)

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def convert(self, x):
        if self.characteristic:
            return int(x) % self.characteristic
        return Fraction(x)

    def inverse(self, x):
        if self.characteristic:
            return pow(x, -1, self.characteristic)
        return 1 / x

    def __str__(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = FieldChoice(0)
GF2 = FieldChoice(2)


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free Gaussian elimination.

    All intermediate entries stay integral: after each pivot step the
    previous pivot divides every updated entry exactly.
    """
    m = [list(map(int, row)) for row in matrix]
    if not m or not m[0]:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot = next((r for r in range(rank, n_rows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, n_rows):
            row = m[r]
            f = row[col]
            for c in range(col + 1, n_cols):
                row[c] = (p * row[c] - f * m[rank][c]) // prev
            row[col] = 0
        prev = p
        rank += 1
    return rank


def _primitive(*vectors: dict[int, int]) -> None:
    """Divide integer vectors in place by the gcd of all their entries."""
    g = 0
    for v in vectors:
        for c in v.values():
            g = gcd(g, c)
            if g == 1:
                return
    if g > 1:
        for v in vectors:
            for k in v:
                v[k] //= g


def _axpy(v: dict, a, b, w: Mapping, p: int) -> None:
    """In place ``v <- a * v - b * w``, reduced mod ``p`` when ``p`` is nonzero."""
    if a != 1:
        for k in v:
            v[k] *= a
    for k, c in w.items():
        val = v.get(k, 0) - b * c
        if p:
            val %= p
        if val:
            v[k] = val
        else:
            v.pop(k, None)


class Echelon:
    """Incrementally maintained echelon basis of a subspace.

    Vectors are dicts ``{index: coefficient}`` keyed by their largest
    index. Over GF(p) stored vectors are normalised to leading coefficient
    1; over Q they are kept as primitive integer vectors, which avoids
    rational arithmetic altogether.
    """

    def __init__(self, field: FieldChoice = QQ):
        self.field = field
        self._pivots: dict[int, dict[int, int]] = {}

    def __len__(self) -> int:
        return len(self._pivots)

    def _start(self, vector: Mapping[int, object]) -> dict[int, int]:
        p = self.field.characteristic
        if p:
            v = {k: int(c) % p for k, c in vector.items()}
        else:
            v = {}
            for k, c in vector.items():
                if type(c) is not int:
                    c = Fraction(c)
                    if c.denominator != 1:
                        raise ValueError("rational vectors must have integer entries")
                    c = int(c)
                v[k] = c
        return {k: c for k, c in v.items() if c}

    def reduce(self, vector: Mapping[int, object]) -> dict[int, int]:
        """Remainder of ``vector`` modulo the span (up to a nonzero scalar over Q)."""
        p = self.field.characteristic
        v = self._start(vector)
        pivots = self._pivots
        while v:
            top = max(v)
            basis = pivots.get(top)
            if basis is None:
                break
            if p:
                _axpy(v, 1, v[top], basis, p)
            else:
                _axpy(v, basis[top], v[top], basis, 0)
                _primitive(v)
        return v

    def add(self, vector: Mapping[int, object]) -> bool:
        """Insert ``vector``; return True iff it was independent of the span."""
        v = self.reduce(vector)
        if not v:
            return False
        top = max(v)
        p = self.field.characteristic
        if p:
            inv = pow(v[top], -1, p)
            v = {k: (c * inv) % p for k, c in v.items()}
        self._pivots[top] = v
        return True


def sparse_rank(columns: Iterable[Column], field: FieldChoice = QQ) -> int:
    ech = Echelon(field)
    return sum(1 for col in columns if ech.add(col))


def rank(columns: Sequence[Column], n_rows: int, field: FieldChoice = QQ) -> int:
    """Rank of the matrix with the given sparse integer columns."""
    n_cols = len(columns)
    if n_cols == 0 or n_rows == 0:
        return 0
    if field.is_rational and n_rows * n_cols <= DENSE_LIMIT:
        dense = [[0] * n_cols for _ in range(n_rows)]
        for j, col in enumerate(columns):
            for i, c in col.items():
                dense[i][j] = c
        return bareiss_rank(dense)
    return sparse_rank(columns, field)


def kernel_basis(columns: Sequence[Column], field: FieldChoice = QQ) -> list[dict[int, int]]:
    """Basis of the null space of the matrix whose j-th column is ``columns[j]``.

    Kernel vectors are returned as ``{column_index: coefficient}``; over Q
    they are primitive integer vectors.
    """
    p = field.characteristic
    # reduce columns left to right, tracking the combination of original
    # columns that produced each reduced vector
    pivots: dict[int, tuple[dict[int, int], dict[int, int]]] = {}
    kernel = []
    ech = Echelon(field)
    for j, col in enumerate(columns):
        v = ech._start(col)
        combo = {j: 1}
        while v:
            top = max(v)
            hit = pivots.get(top)
            if hit is None:
                break
            bv, bcombo = hit
            if p:
                factor = v[top]
                _axpy(v, 1, factor, bv, p)
                _axpy(combo, 1, factor, bcombo, p)
            else:
                a, b = bv[top], v[top]
                _axpy(v, a, b, bv, 0)
                _axpy(combo, a, b, bcombo, 0)
                _primitive(v, combo)
        if v:
            top = max(v)
            if p:
                inv = pow(v[top], -1, p)
                v = {k: (c * inv) % p for k, c in v.items()}
                combo = {k: (c * inv) % p for k, c in combo.items()}
            pivots[top] = (v, combo)
        else:
            kernel.append(combo)
    return kernel
