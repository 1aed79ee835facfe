"""Polynomial matrices over Q and the exact inverse-pair identity.

The type I solutions for k = 0..m fill the rows of M1, the type II
solutions for s = 0..m fill the COLUMNS of M2, and on a tuple in general
position the product M1(z)*M2(z) is the identity matrix, exactly.  The
column orientation of M2 is what makes entry (k, s) of the product equal
the scalar product of row k of M1 with the s-th solution vector; the row
orientation demonstrably breaks the identity already for m = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch, MixedInputs
from .series_core import Polynomial
from .type1_hp import Type1Solution
from .type2_hp import Type2Solution


class PolyMatrix:
    """Immutable square matrix of polynomials in z, row-major."""

    __slots__ = ("_dim", "_entries")

    def __init__(self, dim: int, entries: Iterable[Polynomial]):
        entries = tuple(entries)
        if len(entries) != dim * dim:
            raise DimensionMismatch(
                f"expected {dim * dim} entries for a {dim}x{dim} matrix, got {len(entries)}"
            )
        if not all(isinstance(e, Polynomial) for e in entries):
            raise TypeError("PolyMatrix entries must be Polynomial values")
        self._dim = dim
        self._entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Polynomial]]) -> "PolyMatrix":
        dim = len(rows)
        if any(len(r) != dim for r in rows):
            raise DimensionMismatch("rows of a PolyMatrix must all have length dim")
        return cls(dim, (e for row in rows for e in row))

    @classmethod
    def identity(cls, dim: int) -> "PolyMatrix":
        one = Polynomial.one()
        zero = Polynomial.zero()
        return cls(dim, (one if i == j else zero for i in range(dim) for j in range(dim)))

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def entries(self) -> tuple[Polynomial, ...]:
        return self._entries

    def entry(self, i: int, j: int) -> Polynomial:
        return self._entries[i * self._dim + j]

    def row(self, i: int) -> tuple[Polynomial, ...]:
        return self._entries[i * self._dim : (i + 1) * self._dim]

    @property
    def is_identity(self) -> bool:
        """True iff every diagonal entry is 1 and every off-diagonal entry is 0."""
        one = Polynomial.one()
        return all(
            self.entry(i, j) == (one if i == j else Polynomial.zero())
            for i in range(self._dim)
            for j in range(self._dim)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self._dim == other._dim and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self._dim, self._entries))

    def __repr__(self) -> str:
        body = "; ".join(
            ", ".join(str(self.entry(i, j)) for j in range(self._dim))
            for i in range(self._dim)
        )
        return f"PolyMatrix({self._dim}x{self._dim}: {body})"


def polymatrix_mul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    """Exact polynomial matrix product."""
    if a.dim != b.dim:
        raise DimensionMismatch(f"cannot multiply {a.dim}x{a.dim} by {b.dim}x{b.dim}")
    dim = a.dim
    entries = []
    for i in range(dim):
        for j in range(dim):
            acc = Polynomial.zero()
            for t in range(dim):
                acc = acc + a.entry(i, t) * b.entry(t, j)
            entries.append(acc)
    return PolyMatrix(dim, entries)


def polymatrix_det(a: PolyMatrix) -> Polynomial:
    """Exact determinant by cofactor expansion (dimensions here stay small)."""
    rows = [list(a.row(i)) for i in range(a.dim)]
    return _det(rows)


def _det(rows: list[list[Polynomial]]) -> Polynomial:
    n = len(rows)
    if n == 0:
        return Polynomial.one()
    if n == 1:
        return rows[0][0]
    acc = Polynomial.zero()
    for j, head in enumerate(rows[0]):
        if head.is_zero:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = head * _det(minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def _consistent_solutions(solutions, slot_of, family: str) -> list:
    """Order m+1 solutions by their distinguished slot; reject mixed batches."""
    if not solutions:
        raise MixedInputs(f"no {family} solutions given")
    n = solutions[0].index.n
    m = solutions[0].index.m
    fp = solutions[0].tuple_fingerprint
    if len(solutions) != m + 1:
        raise MixedInputs(f"need {m + 1} {family} solutions for m={m}, got {len(solutions)}")
    by_slot = {}
    for sol in solutions:
        if sol.index.n != n or sol.index.m != m:
            raise MixedInputs(
                f"{family} solutions mix indices: {sol.index} vs n={n}, m={m}"
            )
        if sol.tuple_fingerprint != fp:
            raise MixedInputs(f"{family} solutions come from different tuples")
        slot = slot_of(sol)
        if slot in by_slot:
            raise MixedInputs(f"{family} solutions repeat slot {slot}")
        by_slot[slot] = sol
    return [by_slot[slot] for slot in range(m + 1)]


def assemble_m1(solutions: Sequence[Type1Solution]) -> PolyMatrix:
    """Row k = (z*Q_0, ..., z*Q_{k-1}, Q_k, z*Q_{k+1}, ..., z*Q_m) from solution k.

    All solutions must share n and the tuple fingerprint; raises
    :class:`MixedInputs` otherwise.
    """
    ordered = _consistent_solutions(solutions, lambda sol: sol.index.k, "type I")
    m = ordered[0].index.m
    entries = []
    for k, sol in enumerate(ordered):
        for j in range(m + 1):
            q = sol.polynomials[j]
            entries.append(q if j == k else q.shift(1))
    return PolyMatrix(m + 1, entries)


def assemble_m2(solutions: Sequence[Type2Solution]) -> PolyMatrix:
    """Column s = (z*P_0, ..., P_s, ..., z*P_m)^T from solution s.

    The transpose-free row convention is wrong: the product identity pairs
    row k of M1 with solution s down a column.  Raises
    :class:`MixedInputs` on mismatched n or tuple fingerprints.
    """
    ordered = _consistent_solutions(solutions, lambda sol: sol.index.s, "type II")
    m = ordered[0].index.m
    entries = []
    for j in range(m + 1):
        for s, sol in enumerate(ordered):
            p = sol.polynomials[j]
            entries.append(p if j == s else p.shift(1))
    return PolyMatrix(m + 1, entries)


def scalar_product(sol1: Type1Solution, sol2: Type2Solution) -> Polynomial:
    """The pairing sum_j z**w_j * Q_j * P_j with w_j = (j != k) + (j != s).

    Computed straight from the two solution vectors, bypassing matrix
    assembly; on a tuple in general position it equals 1 when k == s and
    0 otherwise.
    """
    if sol1.tuple_fingerprint != sol2.tuple_fingerprint:
        raise MixedInputs("solutions come from different tuples")
    if sol1.index.n != sol2.index.n or sol1.index.m != sol2.index.m:
        raise MixedInputs(f"solutions mix indices: {sol1.index} vs {sol2.index}")
    k = sol1.index.k
    s = sol2.index.s
    acc = Polynomial.zero()
    for j in range(sol1.index.m + 1):
        weight = (0 if j == k else 1) + (0 if j == s else 1)
        acc = acc + (sol1.polynomials[j] * sol2.polynomials[j]).shift(weight)
    return acc


@dataclass(frozen=True)
class DualityReport:
    """Entry-granular outcome of the product-equals-identity check.

    ``offending`` lists the (row, col) positions where the product differs
    from the identity; the full product stays available so callers can
    tell a normality failure from an assembly bug.
    """

    product: PolyMatrix
    offending: tuple[tuple[int, int], ...]

    @property
    def holds(self) -> bool:
        return not self.offending

    def __str__(self) -> str:
        if self.holds:
            return "product == identity"
        spots = ", ".join(f"({i},{j})" for i, j in self.offending)
        return f"product != identity at {spots}"


def check_duality(m1: PolyMatrix, m2: PolyMatrix) -> DualityReport:
    """Multiply exactly and compare against the identity entry by entry."""
    if m1.dim != m2.dim:
        raise DimensionMismatch(f"dim {m1.dim} vs {m2.dim}")
    product = polymatrix_mul(m1, m2)
    one = Polynomial.one()
    zero = Polynomial.zero()
    offending = tuple(
        (i, j)
        for i in range(product.dim)
        for j in range(product.dim)
        if product.entry(i, j) != (one if i == j else zero)
    )
    return DualityReport(product=product, offending=offending)
