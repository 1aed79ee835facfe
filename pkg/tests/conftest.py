from fractions import Fraction

import pytest

from hpade.series_core import LaurentSeries, SeriesTuple


def make_tuple(*coefficient_rows) -> SeriesTuple:
    """Tuple from per-series coefficient lists (index l = coefficient of z**-l)."""
    return SeriesTuple([LaurentSeries(0, row) for row in coefficient_rows])


@pytest.fixture
def worked_tuple() -> SeriesTuple:
    """f0 = 1, f1 = 1 + 1/z, both trusted through z**-2.

    The extra zero coefficient lets residuals show their exact order
    instead of only a lower bound.
    """
    return make_tuple([1, 0, 0], [1, 1, 0])


@pytest.fixture
def minimal_tuple() -> SeriesTuple:
    """Same tuple at the minimal window for m=1, n=1 (trusted through z**-1)."""
    return make_tuple([1, 0], [1, 1])


@pytest.fixture
def halfsq_tuple() -> SeriesTuple:
    """f0 = 1, f1 = 1 + 1/z + (1/2)/z**2."""
    return make_tuple([1, 0, 0], [1, 1, Fraction(1, 2)])


@pytest.fixture
def geometric_tuple() -> SeriesTuple:
    """f0 = 1, f1 = the geometric series: rational of small type, degenerate at n=2."""
    return make_tuple([1, 0, 0, 0], [1, 1, 1, 1])


@pytest.fixture
def dropping_tuple() -> SeriesTuple:
    """Nonsingular at n=2 but the distinguished degree drops (found by search).

    At n=2 the slot-1 type I solution is (1, 1 - z), degree 1 < 2, and the
    slot-0 type II solution drops likewise, while both systems stay
    invertible: degeneracy without singularity.
    """
    return make_tuple([1, -1, -1, -1], [1, 0, -1, -1])
