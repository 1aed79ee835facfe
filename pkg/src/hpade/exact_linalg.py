"""Exact dense linear algebra over Q: square solve, rank, null space.

All public operations are pure functions on immutable :class:`RatMatrix`
values and return ``fractions.Fraction`` results that re-verify exactly.

The elimination kernel works on integer rows (each row of a rational
matrix is scaled by the lcm of its denominators, which changes neither
solution set, rank nor kernel) and is provided in two interchangeable
implementations: a compiled Cython extension and a pure-Python fallback,
selected at import time.  ``BACKEND`` records which one is active.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import DimensionMismatch, SingularMatrix
from .series_core import _as_fraction

try:  # pragma: no cover - exercised indirectly via the backend parity test
    from ._elim import echelon as _echelon

    BACKEND = "compiled"
except ImportError:  # pragma: no cover
    from ._elim_py import echelon as _echelon

    BACKEND = "python"

_ZERO = Fraction(0)
_ONE = Fraction(1)


class RatMatrix:
    """Immutable dense matrix over Q, row-major."""

    __slots__ = ("_rows", "_cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(_as_fraction(e) for e in entries)
        if len(entries) != rows * cols:
            raise DimensionMismatch(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(entries)}"
            )
        self._rows = rows
        self._cols = cols
        self._entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RatMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(nrows, ncols, (e for row in rows for e in row))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, (_ONE if i == j else _ZERO for i in range(n) for j in range(n)))

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def entries(self) -> tuple[Fraction, ...]:
        return self._entries

    def entry(self, i: int, j: int) -> Fraction:
        return self._entries[i * self._cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._entries[i * self._cols : (i + 1) * self._cols]

    def matvec(self, x: Sequence) -> tuple[Fraction, ...]:
        if len(x) != self._cols:
            raise DimensionMismatch(f"vector length {len(x)} != cols {self._cols}")
        xs = [_as_fraction(v) for v in x]
        return tuple(
            sum((self.entry(i, j) * xs[j] for j in range(self._cols)), _ZERO)
            for i in range(self._rows)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return (
            self._rows == other._rows
            and self._cols == other._cols
            and self._entries == other._entries
        )

    def __hash__(self) -> int:
        return hash((self._rows, self._cols, self._entries))

    def __repr__(self) -> str:
        body = "; ".join(
            ", ".join(str(self.entry(i, j)) for j in range(self._cols))
            for i in range(self._rows)
        )
        return f"RatMatrix({self._rows}x{self._cols}: {body})"


def _integer_rows(matrix: RatMatrix, extra: Sequence[Fraction] | None = None) -> list[list[int]]:
    """Rows scaled to integers (optionally augmented by one extra column)."""
    out: list[list[int]] = []
    for i in range(matrix.rows):
        row = list(matrix.row(i))
        if extra is not None:
            row.append(extra[i])
        scale = lcm(*(f.denominator for f in row)) if row else 1
        out.append([int(f * scale) for f in row])
    return out


def _back_substitute(
    rows: list[list[int]], pivot_cols: list[int], ncols: int, values: dict[int, Fraction]
) -> None:
    """Solve for the pivot coordinates of a vector in ker/solution form.

    ``values`` maps already-fixed coordinates (free variables or the
    right-hand-side marker) to Fractions and is filled in for the pivots.
    """
    for t in range(len(pivot_cols) - 1, -1, -1):
        pc = pivot_cols[t]
        row = rows[t]
        acc = _ZERO
        for j in range(pc + 1, ncols):
            vj = values.get(j)
            if vj is not None and row[j] != 0:
                acc += row[j] * vj
        values[pc] = -acc / row[pc]


def nullspace(matrix: RatMatrix) -> list[tuple[Fraction, ...]]:
    """Exact basis of ker(matrix); empty iff the matrix has full column rank.

    Each basis vector has a 1 in one free coordinate and 0 in the others.
    """
    n = matrix.cols
    rows = _integer_rows(matrix)
    pivot_cols = _echelon(rows, matrix.rows, n)
    pivots = set(pivot_cols)
    basis: list[tuple[Fraction, ...]] = []
    for fc in range(n):
        if fc in pivots:
            continue
        values: dict[int, Fraction] = {fc: _ONE}
        _back_substitute(rows, pivot_cols, n, values)
        basis.append(tuple(values.get(j, _ZERO) for j in range(n)))
    return basis


def rank(matrix: RatMatrix) -> int:
    """Exact rank via fraction-free elimination."""
    rows = _integer_rows(matrix)
    return len(_echelon(rows, matrix.rows, matrix.cols))


def solve_square(matrix: RatMatrix, b: Sequence) -> tuple[Fraction, ...]:
    """Exact solution of matrix * x == b for square systems.

    Raises :class:`SingularMatrix` with the exact rank and one kernel
    vector when the matrix is rank-deficient.
    """
    if matrix.rows != matrix.cols:
        raise DimensionMismatch(f"solve_square needs a square matrix, got {matrix.rows}x{matrix.cols}")
    if len(b) != matrix.rows:
        raise DimensionMismatch(f"right-hand side length {len(b)} != {matrix.rows}")
    n = matrix.cols
    bs = [_as_fraction(v) for v in b]
    rows = _integer_rows(matrix, extra=bs)
    pivot_cols = _echelon(rows, matrix.rows, n + 1)
    rank_a = sum(1 for pc in pivot_cols if pc < n)
    if rank_a < n:
        witness = nullspace(matrix)[0]
        raise SingularMatrix(rank=rank_a, witness=witness)
    # Full rank: pivot columns are exactly 0..n-1; solve the triangular system.
    values: dict[int, Fraction] = {n: Fraction(-1)}
    _back_substitute(rows, pivot_cols, n + 1, values)
    return tuple(values[j] for j in range(n))
