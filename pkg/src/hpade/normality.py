"""Detection of degeneracy at the indices the construction instantiates.

"General position at n" here means: all 2(m+1) pinned systems (type I at
k = 0..m, type II at s = 0..m) are nonsingular and their solutions attain
the distinguished degree.  This is decidable from the truncated data and
is exactly the hypothesis the inverse-pair assembly consumes; nothing is
claimed about multi-indices the construction never touches.

Classification runs on the rank path only (build + rank, no back
substitution), so tests can play it against the independent solve path:

  * singular: the pinned square matrix is rank-deficient; the verdict
    carries the exact rank and a kernel vector.
  * degree drop: the matrix is nonsingular, but the unique solution has a
    zero coefficient at the distinguished top degree.  Detected without
    solving: the coefficient at column c vanishes iff the right-hand side
    lies in the span of the remaining columns, a rank question.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from . import type1_hp, type2_hp
from .diagnostics import DegreeDrop, Normal, Singular, Verdict
from .exact_linalg import RatMatrix, nullspace, rank
from .series_core import LaurentSeries, SeriesTuple

__all__ = [
    "NormalityReport",
    "SeriesTuple",
    "check_general_position",
    "random_tuple",
]


@dataclass(frozen=True)
class NormalityReport:
    """Per-index verdicts for all 2(m+1) systems at a given n.

    ``type1_verdicts[k]`` classifies the type I system distinguishing
    slot k; ``type2_verdicts[s]`` the type II system distinguishing s.
    """

    m: int
    n: int
    type1_verdicts: tuple[Verdict, ...]
    type2_verdicts: tuple[Verdict, ...]

    def __post_init__(self) -> None:
        for name, verdicts in (("type1", self.type1_verdicts), ("type2", self.type2_verdicts)):
            if len(verdicts) != self.m + 1:
                raise ValueError(
                    f"{name}_verdicts needs {self.m + 1} slots, got {len(verdicts)}"
                )

    @property
    def general_position_at_n(self) -> bool:
        return all(
            isinstance(v, Normal)
            for v in self.type1_verdicts + self.type2_verdicts
        )

    def items(self) -> Iterator[tuple[str, int, Verdict]]:
        """Yield (family, slot, verdict) rows in report order."""
        for k, v in enumerate(self.type1_verdicts):
            yield ("type1", k, v)
        for s, v in enumerate(self.type2_verdicts):
            yield ("type2", s, v)

    def __str__(self) -> str:
        rows = "; ".join(f"{fam}[{slot}]: {v}" for fam, slot, v in self.items())
        flag = "in general position" if self.general_position_at_n else "degenerate"
        return f"n={self.n}: {flag} ({rows})"


def _solution_coefficient_vanishes(matrix: RatMatrix, rhs: Sequence[Fraction], col: int) -> bool:
    """For nonsingular ``matrix``, whether the unique solution of Ax = b has x[col] == 0.

    Rank-only: x[col] == 0 iff b lies in the span of the other columns,
    i.e. iff replacing column ``col`` by b does not reach full rank.
    """
    size = matrix.rows
    entries = []
    for i in range(size):
        row = matrix.row(i)
        entries.extend(row[:col])
        entries.extend(row[col + 1 :])
        entries.append(rhs[i])
    return rank(RatMatrix(size, size, entries)) == size - 1


def _classify_pinned_system(
    matrix: RatMatrix,
    rhs: Sequence[Fraction],
    poly_index: int,
    required_degree: int,
    descending_columns: Sequence[int],
) -> Verdict:
    """Rank-path verdict for one pinned system.

    ``descending_columns`` holds the column positions of the distinguished
    polynomial's coefficients for degrees required_degree down to 1.
    """
    size = matrix.rows
    r = rank(matrix)
    if r < size:
        return Singular(rank=r, witness=nullspace(matrix)[0])
    if not _solution_coefficient_vanishes(matrix, rhs, descending_columns[0]):
        return Normal()
    achieved = 0
    for offset, col in enumerate(descending_columns[1:], start=1):
        if not _solution_coefficient_vanishes(matrix, rhs, col):
            achieved = required_degree - offset
            break
    return DegreeDrop(polynomial_index=poly_index, achieved_degree=achieved)


def check_general_position(F: SeriesTuple, n: int) -> NormalityReport:
    """Classify all 2(m+1) systems the construction uses at this n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    m = F.m
    F.require_known_through(-(m * n + n - 1))
    type1 = []
    for k in range(m + 1):
        idx = type1_hp.MultiIndexType1(n=n, k=k, m=m)
        matrix, rhs = type1_hp.build_type1_system(F, idx)
        cols = type1_hp.unknown_columns(idx)
        descending = [cols.index((k, i)) for i in range(n, 0, -1)]
        type1.append(_classify_pinned_system(matrix, rhs, k, n, descending))
    type2 = []
    mn = m * n
    for s in range(m + 1):
        idx = type2_hp.MultiIndexType2(n=n, s=s, m=m)
        matrix, rhs = type2_hp.build_type2_system(F, idx)
        cols = type2_hp.unknown_columns(idx)
        descending = [cols.index((s, i)) for i in range(mn, 0, -1)]
        type2.append(_classify_pinned_system(matrix, rhs, s, mn, descending))
    return NormalityReport(m=m, n=n, type1_verdicts=tuple(type1), type2_verdicts=tuple(type2))


def random_tuple(seed: int, m: int, num_coeffs: int, height: int) -> SeriesTuple:
    """Deterministic tuple of m+1 series with bounded-height rational coefficients.

    Numerators are uniform in [-height, height], denominators uniform in
    [1, height]; the leading draw of each series is redrawn (numerator and
    denominator together) until the numerator is nonzero.  Same seed, same
    tuple, bit for bit.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if num_coeffs < 1:
        raise ValueError("num_coeffs must be >= 1")
    if height < 1:
        raise ValueError("height must be >= 1")
    rng = random.Random(seed)
    series = []
    for _ in range(m + 1):
        coeffs = []
        for l in range(num_coeffs):
            num = rng.randint(-height, height)
            den = rng.randint(1, height)
            while l == 0 and num == 0:
                num = rng.randint(-height, height)
                den = rng.randint(1, height)
            coeffs.append(Fraction(num, den))
        series.append(LaurentSeries(0, coeffs))
    return SeriesTuple(series)
