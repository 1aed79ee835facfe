"""Shared diagnostic vocabulary: per-index verdicts and verification reports.

Solvers raise :class:`hpade.errors.NotNormal` carrying one of the verdicts
below; the normality checker collects the same verdicts into a report
instead of raising.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar, Union

from .series_core import OrderBound


@dataclass(frozen=True)
class Normal:
    kind: ClassVar[str] = "normal"

    def __str__(self) -> str:
        return "normal"


@dataclass(frozen=True)
class Singular:
    """The pinned linear system is rank-deficient.

    ``witness`` is a kernel vector of the pinned square system: substituted
    back (with the pinned coefficient set to 0) it yields a nonzero
    polynomial vector satisfying the order condition.
    """

    rank: int
    witness: tuple[Fraction, ...]
    kind: ClassVar[str] = "singular"

    def __str__(self) -> str:
        return f"singular (rank {self.rank})"


@dataclass(frozen=True)
class DegreeDrop:
    """The solution exists but the distinguished polynomial drops degree."""

    polynomial_index: int
    achieved_degree: object  # int or the NEG_INFINITY sentinel
    kind: ClassVar[str] = "degree-drop"

    def __str__(self) -> str:
        return f"degree drop in polynomial {self.polynomial_index} (degree {self.achieved_degree})"


@dataclass(frozen=True)
class OrderShortfall:
    """The recomputed residual does not reach the required vanishing order."""

    achieved: OrderBound
    required: int
    pair_index: int | None = None
    kind: ClassVar[str] = "order-shortfall"

    def __str__(self) -> str:
        where = "" if self.pair_index is None else f" at pair j={self.pair_index}"
        return f"order shortfall{where}: achieved {self.achieved}, required {self.required}"


Verdict = Union[Normal, Singular, DegreeDrop, OrderShortfall]

#: Check names used by the verification reports.
CHECK_NORMALIZATION = "normalization"
CHECK_DEGREE_ATTAINMENT = "degree-attainment"
CHECK_DEGREE_BOUND = "degree-bound"
CHECK_ORDER = "order"


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of the from-scratch recheck of a solved instance.

    ``failures`` lists the names of violated checks (empty means the
    solution honors normalization, degree bounds, degree attainment and
    the vanishing order).  ``residual_orders`` holds the independently
    recomputed orders (one entry for a type I solution, m for type II).
    """

    failures: tuple[str, ...]
    residual_orders: tuple[OrderBound, ...]

    @property
    def passed(self) -> bool:
        return not self.failures

    def __str__(self) -> str:
        status = "pass" if self.passed else "fail(" + ", ".join(self.failures) + ")"
        orders = ", ".join(str(o) for o in self.residual_orders)
        return f"{status}; residual order(s): {orders}"
