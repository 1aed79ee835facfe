"""Type I Hermite-Pade polynomials at infinity.

For a tuple [f_0, ..., f_m] and the multi-index that raises the k-th
degree bound to n (all others n-1), this module builds the linear system
for polynomials (Q_0, ..., Q_m) with

    z*Q_0*f_0 + ... + Q_k*f_k + ... + z*Q_m*f_m  =  O(1/z**(m*n)),

solves it under the normalization Q_k(0) = 1, and independently re-checks
the order condition through series arithmetic.
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
class MultiIndexType1:
    """Multi-index (n-1, ..., n-1, n, n-1, ..., n-1) with the n at slot k."""

    n: int
    k: int
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not 0 <= self.k <= self.m:
            raise ValueError(f"k must lie in [0, {self.m}], got {self.k}")

    def degree_bound(self, j: int) -> int:
        return self.n if j == self.k else self.n - 1

    @property
    def system_size(self) -> int:
        """Number of unknowns (= equations) of the pinned system: m*n + n."""
        return self.m * self.n + self.n

    @property
    def required_known_through(self) -> int:
        """Every series must be trusted through this power of z."""
        return -(self.m * self.n + self.n - 1)

    @property
    def required_order(self) -> int:
        return self.m * self.n

    def __str__(self) -> str:
        return f"type1(n={self.n}, k={self.k}, m={self.m})"


@dataclass(frozen=True)
class Type1Solution:
    """Normalized type I solution with its recomputed residual."""

    index: MultiIndexType1
    polynomials: tuple[Polynomial, ...]
    residual: LaurentSeries
    residual_order_achieved: OrderBound
    tuple_fingerprint: str


def _weight(idx: MultiIndexType1, j: int) -> int:
    """The power of z multiplying Q_j in the combination (1 except at k)."""
    return 0 if j == idx.k else 1


def unknown_columns(idx: MultiIndexType1) -> list[tuple[int, int]]:
    """Column layout of the pinned system: (series j, coefficient i) pairs.

    Coefficients ascend within each polynomial, polynomials ascend in j,
    and the pinned constant coefficient of Q_k is skipped.
    """
    cols = []
    for j in range(idx.m + 1):
        for i in range(idx.degree_bound(j) + 1):
            if j == idx.k and i == 0:
                continue
            cols.append((j, i))
    return cols


def row_powers(idx: MultiIndexType1) -> range:
    """Equation rows: vanishing coefficient of z**p for p = n down to -mn+1."""
    return range(idx.n, -idx.required_order, -1)


def build_type1_system(F: SeriesTuple, idx: MultiIndexType1) -> tuple[RatMatrix, tuple[Fraction, ...]]:
    """Pinned square system (matrix, right-hand side) for the order condition.

    The unknowns are all polynomial coefficients except the constant of
    Q_k, which is pinned to 1 and moved to the right-hand side.
    """
    _check_inputs(F, idx)
    cols = unknown_columns(idx)
    powers = row_powers(idx)
    f_k = F[idx.k]
    entries = []
    rhs = []
    for p in powers:
        for (j, i) in cols:
            entries.append(F[j].coeff(p - _weight(idx, j) - i))
        rhs.append(-f_k.coeff(p))
    size = idx.system_size
    return RatMatrix(size, size, entries), tuple(rhs)


def build_type1_homogeneous(F: SeriesTuple, idx: MultiIndexType1) -> RatMatrix:
    """Unnormalized system over all m*n + n + 1 coefficients (oracle path).

    Columns follow the same ascending layout as :func:`unknown_columns`
    but include the constant coefficient of Q_k at its natural position.
    On a normal tuple its kernel is one-dimensional and spanned by the
    normalized solution.
    """
    _check_inputs(F, idx)
    powers = row_powers(idx)
    cols = [(j, i) for j in range(idx.m + 1) for i in range(idx.degree_bound(j) + 1)]
    entries = []
    for p in powers:
        for (j, i) in cols:
            entries.append(F[j].coeff(p - _weight(idx, j) - i))
    return RatMatrix(len(powers), len(cols), entries)


def vector_to_polynomials(
    idx: MultiIndexType1, values: Sequence[Fraction], pinned_value: Fraction = _ONE
) -> tuple[Polynomial, ...]:
    """Rebuild (Q_0, ..., Q_m) from a pinned-system vector.

    ``values`` follows :func:`unknown_columns`; the pinned constant of Q_k
    takes ``pinned_value`` (1 for solutions, 0 for kernel witnesses).
    """
    coeffs = {(idx.k, 0): pinned_value}
    for (j, i), v in zip(unknown_columns(idx), values):
        coeffs[(j, i)] = v
    return tuple(
        Polynomial(coeffs.get((j, i), 0) for i in range(idx.degree_bound(j) + 1))
        for j in range(idx.m + 1)
    )


def combination(F: SeriesTuple, polynomials: Sequence[Polynomial], k: int) -> LaurentSeries:
    """The weighted sum z*Q_0*f_0 + ... + Q_k*f_k + ... + z*Q_m*f_m."""
    total = None
    for j, q in enumerate(polynomials):
        term = poly_shift_mul_series(q, 0 if j == k else 1, F[j])
        total = term if total is None else series_add(total, term)
    return total


def solve_type1(F: SeriesTuple, idx: MultiIndexType1) -> Type1Solution:
    """Unique normalized type I solution for the given multi-index.

    Raises :class:`NotNormal` when the pinned system is singular, the
    degree of Q_k drops below n, or the recomputed residual misses the
    required order m*n.
    """
    matrix, rhs = build_type1_system(F, idx)
    try:
        x = solve_square(matrix, rhs)
    except SingularMatrix as exc:
        raise NotNormal(idx, Singular(rank=exc.rank, witness=exc.witness)) from exc
    polys = vector_to_polynomials(idx, x)
    q_k = polys[idx.k]
    if q_k.degree != idx.n:
        raise NotNormal(idx, DegreeDrop(polynomial_index=idx.k, achieved_degree=q_k.degree))
    residual = combination(F, polys, idx.k)
    order = residual_order(residual)
    if not order.meets(idx.required_order):
        raise NotNormal(idx, OrderShortfall(achieved=order, required=idx.required_order))
    return Type1Solution(
        index=idx,
        polynomials=polys,
        residual=residual,
        residual_order_achieved=order,
        tuple_fingerprint=F.fingerprint,
    )


def verify_type1(F: SeriesTuple, sol: Type1Solution) -> VerificationReport:
    """Recheck a type I solution from scratch through series arithmetic.

    Recomputes the residual from the polynomials (never from the linear
    system) and reports normalization, degree attainment, degree bounds
    and the vanishing order.
    """
    idx = sol.index
    failures = []
    if sol.polynomials[idx.k].constant_term != 1:
        failures.append(CHECK_NORMALIZATION)
    if sol.polynomials[idx.k].degree != idx.n:
        failures.append(CHECK_DEGREE_ATTAINMENT)
    if any(
        sol.polynomials[j].degree > idx.n - 1
        for j in range(idx.m + 1)
        if j != idx.k and not sol.polynomials[j].is_zero
    ):
        failures.append(CHECK_DEGREE_BOUND)
    residual = combination(F, sol.polynomials, idx.k)
    order = residual_order(residual)
    if not order.meets(idx.required_order):
        failures.append(CHECK_ORDER)
    return VerificationReport(failures=tuple(failures), residual_orders=(order,))


def _check_inputs(F: SeriesTuple, idx: MultiIndexType1) -> None:
    if F.m != idx.m:
        raise ValueError(f"tuple has m={F.m} but index expects m={idx.m}")
    F.require_known_through(idx.required_known_through)
