"""Type II Hermite-Pade polynomials at infinity.

For a tuple [f_0, ..., f_m] and the multi-index that raises the s-th
degree bound to m*n (all others m*n - 1), this module builds the linear
system for polynomials (P_0, ..., P_m) with

    z*f_s(z)*P_j(z) - f_j(z)*P_s(z)  =  O(1/z**n)   for every j != s,

solves it under the normalization P_s(0) = 1, and independently re-checks
each pair residual through series arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .diagnostics import DegreeDrop, OrderShortfall, Singular, VerificationReport
from .diagnostics import CHECK_DEGREE_ATTAINMENT, CHECK_DEGREE_BOUND, CHECK_NORMALIZATION, CHECK_ORDER
from .errors import NotNormal, SingularMatrix
from .exact_linalg import RatMatrix, solve_square
from .series_core import (
    LaurentSeries,
    OrderBound,
    Polynomial,
    SeriesTuple,
    poly_shift_mul_series,
    residual_order,
    series_add,
)

_ONE = Fraction(1)


@dataclass(frozen=True)
class MultiIndexType2:
    """Multi-index (mn-1, ..., mn-1, mn, mn-1, ..., mn-1) with the mn at slot s."""

    n: int
    s: int
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not 0 <= self.s <= self.m:
            raise ValueError(f"s must lie in [0, {self.m}], got {self.s}")

    def degree_bound(self, j: int) -> int:
        mn = self.m * self.n
        return mn if j == self.s else mn - 1

    @property
    def system_size(self) -> int:
        """Number of unknowns (= equations) of the pinned system: m*(m*n + n)."""
        return self.m * (self.m * self.n + self.n)

    @property
    def required_known_through(self) -> int:
        """Every series must be trusted through this power of z."""
        return -(self.m * self.n + self.n - 1)

    @property
    def required_order(self) -> int:
        return self.n

    def __str__(self) -> str:
        return f"type2(n={self.n}, s={self.s}, m={self.m})"


@dataclass(frozen=True)
class Type2Solution:
    """Normalized type II solution with its recomputed pair residuals.

    ``residuals`` and ``residual_orders_achieved`` are ordered by the pair
    index j, ascending over j != s.
    """

    index: MultiIndexType2
    polynomials: tuple[Polynomial, ...]
    residuals: tuple[LaurentSeries, ...]
    residual_orders_achieved: tuple[OrderBound, ...]
    tuple_fingerprint: str


def pair_indices(idx: MultiIndexType2) -> list[int]:
    """The indices j != s, ascending: one pair condition per entry."""
    return [j for j in range(idx.m + 1) if j != idx.s]


def unknown_columns(idx: MultiIndexType2) -> list[tuple[int, int]]:
    """Column layout of the pinned system: (polynomial t, coefficient i) pairs.

    Coefficients ascend within each polynomial, polynomials ascend in t,
    and the pinned constant coefficient of P_s is skipped.
    """
    cols = []
    for t in range(idx.m + 1):
        for i in range(idx.degree_bound(t) + 1):
            if t == idx.s and i == 0:
                continue
            cols.append((t, i))
    return cols


def row_powers(idx: MultiIndexType2) -> range:
    """Equation rows within one pair block: z**p for p = mn down to -n+1."""
    return range(idx.m * idx.n, -idx.required_order, -1)


def build_type2_system(F: SeriesTuple, idx: MultiIndexType2) -> tuple[RatMatrix, tuple[Fraction, ...]]:
    """Pinned square system (matrix, right-hand side) for the pair conditions.

    Row blocks follow :func:`pair_indices`; within pair j, the coefficient
    of z**p in z*f_s*P_j - f_j*P_s vanishes for each p in
    :func:`row_powers`.  The pinned constant of P_s contributes -c_j[p]
    and moves to the right-hand side as +c_j[p].
    """
    _check_inputs(F, idx)
    cols = unknown_columns(idx)
    powers = row_powers(idx)
    f_s = F[idx.s]
    entries = []
    rhs = []
    for j in pair_indices(idx):
        f_j = F[j]
        for p in powers:
            for (t, i) in cols:
                if t == j:
                    entries.append(f_s.coeff(p - 1 - i))
                elif t == idx.s:
                    entries.append(-f_j.coeff(p - i))
                else:
                    entries.append(0)
            rhs.append(f_j.coeff(p))
    size = idx.system_size
    return RatMatrix(size, size, entries), tuple(rhs)


def build_type2_homogeneous(F: SeriesTuple, idx: MultiIndexType2) -> RatMatrix:
    """Unnormalized pair-condition system over all coefficients (oracle path).

    Columns follow the same ascending layout as :func:`unknown_columns`
    but include the constant coefficient of P_s at its natural position.
    On a normal tuple its kernel is one-dimensional and spanned by the
    normalized solution.
    """
    _check_inputs(F, idx)
    powers = row_powers(idx)
    cols = [(t, i) for t in range(idx.m + 1) for i in range(idx.degree_bound(t) + 1)]
    f_s = F[idx.s]
    entries = []
    for j in pair_indices(idx):
        f_j = F[j]
        for p in powers:
            for (t, i) in cols:
                if t == j:
                    entries.append(f_s.coeff(p - 1 - i))
                elif t == idx.s:
                    entries.append(-f_j.coeff(p - i))
                else:
                    entries.append(0)
    return RatMatrix(idx.system_size, len(cols), entries)


def vector_to_polynomials(
    idx: MultiIndexType2, values: Sequence[Fraction], pinned_value: Fraction = _ONE
) -> tuple[Polynomial, ...]:
    """Rebuild (P_0, ..., P_m) from a pinned-system vector.

    ``values`` follows :func:`unknown_columns`; the pinned constant of P_s
    takes ``pinned_value`` (1 for solutions, 0 for kernel witnesses).
    """
    coeffs = {(idx.s, 0): pinned_value}
    for (t, i), v in zip(unknown_columns(idx), values):
        coeffs[(t, i)] = v
    return tuple(
        Polynomial(coeffs.get((t, i), 0) for i in range(idx.degree_bound(t) + 1))
        for t in range(idx.m + 1)
    )


def pair_residual(F: SeriesTuple, polynomials: Sequence[Polynomial], s: int, j: int) -> LaurentSeries:
    """The series z*f_s*P_j - f_j*P_s for one pair j != s."""
    left = poly_shift_mul_series(polynomials[j], 1, F[s])
    right = poly_shift_mul_series(-polynomials[s], 0, F[j])
    return series_add(left, right)


def solve_type2(F: SeriesTuple, idx: MultiIndexType2) -> Type2Solution:
    """Unique normalized type II solution for the given multi-index.

    Raises :class:`NotNormal` when the pinned system is singular, the
    degree of P_s drops below m*n, or any recomputed pair residual
    misses the required order n.
    """
    matrix, rhs = build_type2_system(F, idx)
    try:
        x = solve_square(matrix, rhs)
    except SingularMatrix as exc:
        raise NotNormal(idx, Singular(rank=exc.rank, witness=exc.witness)) from exc
    polys = vector_to_polynomials(idx, x)
    p_s = polys[idx.s]
    if p_s.degree != idx.m * idx.n:
        raise NotNormal(idx, DegreeDrop(polynomial_index=idx.s, achieved_degree=p_s.degree))
    residuals = []
    orders = []
    for j in pair_indices(idx):
        r = pair_residual(F, polys, idx.s, j)
        order = residual_order(r)
        if not order.meets(idx.required_order):
            raise NotNormal(idx, OrderShortfall(achieved=order, required=idx.required_order, pair_index=j))
        residuals.append(r)
        orders.append(order)
    return Type2Solution(
        index=idx,
        polynomials=polys,
        residuals=tuple(residuals),
        residual_orders_achieved=tuple(orders),
        tuple_fingerprint=F.fingerprint,
    )


def verify_type2(F: SeriesTuple, sol: Type2Solution) -> VerificationReport:
    """Recheck a type II solution from scratch through series arithmetic.

    Recomputes every pair residual from the polynomials (never from the
    linear system) and reports normalization, degree attainment, degree
    bounds and the vanishing orders.
    """
    idx = sol.index
    mn = idx.m * idx.n
    failures = []
    if sol.polynomials[idx.s].constant_term != 1:
        failures.append(CHECK_NORMALIZATION)
    if sol.polynomials[idx.s].degree != mn:
        failures.append(CHECK_DEGREE_ATTAINMENT)
    if any(
        sol.polynomials[j].degree > mn - 1
        for j in range(idx.m + 1)
        if j != idx.s and not sol.polynomials[j].is_zero
    ):
        failures.append(CHECK_DEGREE_BOUND)
    orders = []
    order_failed = False
    for j in pair_indices(idx):
        order = residual_order(pair_residual(F, sol.polynomials, idx.s, j))
        orders.append(order)
        if not order.meets(idx.required_order):
            order_failed = True
    if order_failed:
        failures.append(CHECK_ORDER)
    return VerificationReport(failures=tuple(failures), residual_orders=tuple(orders))


def _check_inputs(F: SeriesTuple, idx: MultiIndexType2) -> None:
    if F.m != idx.m:
        raise ValueError(f"tuple has m={F.m} but index expects m={idx.m}")
    F.require_known_through(idx.required_known_through)
