"""Exact arithmetic for polynomials in z and truncated Laurent series in 1/z.

Coefficients live in Q (``fractions.Fraction``): every operation is exact,
which is what makes the duality identity machine-checkable with zero
tolerance.  Floats are rejected on construction.

A Laurent series at infinity is stored as a finite window of coefficients
for powers ``top_power`` down to ``known_through``.  Powers above
``top_power`` are exactly zero; powers below ``known_through`` are unknown
(not zero), and no operation ever claims a coefficient beneath the trusted
window of its inputs.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import InsufficientTruncation, LeadingZero

#: Degree of the zero polynomial.  A distinct sentinel, never an integer.
NEG_INFINITY = float("-inf")

_ZERO = Fraction(0)
_ONE = Fraction(1)

CoeffLike = Union[int, Fraction]


def _as_fraction(value: CoeffLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"exact coefficient expected (int or Fraction), got {type(value).__name__}")


def format_coefficient(c: Fraction) -> str:
    """Render a rational as 'p' or 'p/q' (never a float)."""
    return str(c)


class Polynomial:
    """Dense polynomial in z over Q, trailing zero coefficients trimmed.

    ``coeffs[i]`` is the coefficient of z**i.  The zero polynomial has an
    empty coefficient tuple and degree ``NEG_INFINITY``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[CoeffLike] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((_ONE,))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self):
        """Degree, or NEG_INFINITY for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else NEG_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def constant_term(self) -> Fraction:
        return self._coeffs[0] if self._coeffs else _ZERO

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return _ZERO

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self._coeffs), len(other._coeffs))
        return Polynomial(self[i] + other[i] for i in range(n))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self._coeffs), len(other._coeffs))
        return Polynomial(self[i] - other[i] for i in range(n))

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self._coeffs)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [_ZERO] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    def scale(self, factor: CoeffLike) -> "Polynomial":
        f = _as_fraction(factor)
        return Polynomial(f * c for c in self._coeffs)

    def shift(self, e: int) -> "Polynomial":
        """Multiply by z**e, e >= 0."""
        if e < 0:
            raise ValueError("shift exponent must be nonnegative")
        if self.is_zero:
            return self
        return Polynomial((_ZERO,) * e + self._coeffs)

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self._coeffs]})"


def format_polynomial(p: Polynomial) -> str:
    """Fixed rendering: ascending powers, explicit signs, e.g. '1 - 1*z'."""
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = format_coefficient(abs(c))
        if i == 0:
            term = mag
        elif i == 1:
            term = f"{mag}*z"
        else:
            term = f"{mag}*z^{i}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)


class LaurentSeries:
    """Truncated formal Laurent series at infinity with a trust window.

    ``coeffs[t]`` is the coefficient of ``z**(top_power - t)``; the window
    runs from ``top_power`` down to ``known_through`` inclusive.  Leading
    (highest-power) zero coefficients are trimmed on construction, so a
    series that vanishes on its whole window is stored as a single zero
    coefficient at ``top_power == known_through``.
    """

    __slots__ = ("_top", "_coeffs")

    def __init__(self, top_power: int, coeffs: Iterable[CoeffLike]):
        cs = [_as_fraction(c) for c in coeffs]
        if not cs:
            raise ValueError("a Laurent series needs at least one stored coefficient")
        while len(cs) > 1 and cs[0] == 0:
            cs.pop(0)
            top_power -= 1
        self._top = top_power
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls, known_through: int = 0) -> "LaurentSeries":
        return cls(known_through, (_ZERO,))

    @property
    def top_power(self) -> int:
        return self._top

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def known_through(self) -> int:
        """Lowest power of z whose coefficient is trusted."""
        return self._top - len(self._coeffs) + 1

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self._coeffs)

    def coeff(self, power: int) -> Fraction:
        """Exact coefficient of z**power; zero above the window, error below."""
        if power > self._top:
            return _ZERO
        if power < self.known_through:
            raise InsufficientTruncation(required=power, available=self.known_through)
        return self._coeffs[self._top - power]

    def truncate(self, new_known_through: int) -> "LaurentSeries":
        """Shrink the trust window, discarding coefficients below the new bound."""
        kt = self.known_through
        if new_known_through <= kt:
            return self
        if new_known_through > self._top:
            return LaurentSeries.zero(new_known_through)
        return LaurentSeries(self._top, self._coeffs[: self._top - new_known_through + 1])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self._top == other._top and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._top, self._coeffs))

    def __str__(self) -> str:
        parts: list[str] = []
        for t, c in enumerate(self._coeffs):
            if c == 0:
                continue
            p = self._top - t
            mag = format_coefficient(abs(c))
            if p == 0:
                term = mag
            elif p == 1:
                term = f"{mag}*z"
            else:
                term = f"{mag}*z^{p}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        body = " ".join(parts) if parts else "0"
        return f"{body} [known through z^{self.known_through}]"

    def __repr__(self) -> str:
        return (
            f"LaurentSeries(top_power={self._top}, "
            f"coeffs={[str(c) for c in self._coeffs]})"
        )


@dataclass(frozen=True)
class OrderBound:
    """Vanishing order of a residual: exact, or a lower bound.

    ``value`` is the largest d such that every trusted coefficient of z**p
    with p > -d vanishes.  When the whole trusted window vanishes the order
    is only bounded below and ``is_lower_bound`` is set; an exact-order
    claim beyond the computed data is never made.
    """

    value: int
    is_lower_bound: bool

    @classmethod
    def exactly(cls, d: int) -> "OrderBound":
        return cls(d, False)

    @classmethod
    def at_least(cls, d: int) -> "OrderBound":
        return cls(d, True)

    def meets(self, threshold: int) -> bool:
        """True when the order is certainly >= threshold."""
        return self.value >= threshold

    def __str__(self) -> str:
        return f"at least {self.value}" if self.is_lower_bound else f"exactly {self.value}"


def poly_shift_mul_series(q: Polynomial, e: int, f: LaurentSeries) -> LaurentSeries:
    """Exact product z**e * q(z) * f(z).

    The trust window propagates as known_through_out = e + f.known_through:
    each monomial z**(e+i) of z**e*q shifts the window of f upward by
    e+i >= e, so the lowest power about which the stored data says anything
    is e + f.known_through.  The stored coefficients are the exact
    convolution of the stored data.
    """
    if e < 0:
        raise ValueError("shift exponent must be nonnegative")
    if q.is_zero:
        return LaurentSeries.zero(e + f.known_through)
    q_desc = tuple(reversed(q.coeffs))  # z^deg .. z^0
    f_desc = f.coeffs
    out = [_ZERO] * (len(q_desc) + len(f_desc) - 1)
    for a, qa in enumerate(q_desc):
        if qa == 0:
            continue
        for b, cb in enumerate(f_desc):
            out[a + b] += qa * cb
    result = LaurentSeries(e + len(q.coeffs) - 1 + f.top_power, out)
    assert result.known_through == e + f.known_through
    return result


def series_add(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    """Coefficient-wise sum; the trust window is the intersection."""
    kt = max(a.known_through, b.known_through)
    top = max(a.top_power, b.top_power)
    coeffs = [a.coeff(p) + b.coeff(p) for p in range(top, kt - 1, -1)]
    return LaurentSeries(top, coeffs)


def residual_order(r: LaurentSeries) -> OrderBound:
    """Vanishing order of r at infinity, measured inside the trusted window.

    Returns exactly d when the highest nonvanishing trusted coefficient sits
    at z**-d; returns at_least(-known_through + 1) when every trusted
    coefficient vanishes.
    """
    for t, c in enumerate(r.coeffs):
        if c != 0:
            return OrderBound.exactly(-(r.top_power - t))
    return OrderBound.at_least(-r.known_through + 1)


def series_reciprocal(f: LaurentSeries, terms: int) -> LaurentSeries:
    """Series g with f*g = 1 + O(z**-(terms+1)), computed by long division.

    Requires f.top_power == 0 and f(infinity) != 0; needs f known through
    z**-terms.
    """
    if terms < 0:
        raise ValueError("terms must be nonnegative")
    if f.top_power != 0 or f.coeff(0) == 0:
        raise LeadingZero("reciprocal needs top_power == 0 and nonzero leading coefficient")
    if f.known_through > -terms:
        raise InsufficientTruncation(required=-terms, available=f.known_through)
    c0 = f.coeff(0)
    g = [_ONE / c0]
    for l in range(1, terms + 1):
        acc = _ZERO
        for i in range(1, l + 1):
            acc += f.coeff(-i) * g[l - i]
        g.append(-acc / c0)
    return LaurentSeries(0, g)


class SeriesTuple:
    """The input tuple [f_0, ..., f_m], each with top_power 0 and f_j(inf) != 0.

    Immutable; ``fingerprint`` digests every stored coefficient and window so
    downstream assemblies can detect mixed inputs exactly.
    """

    __slots__ = ("_m", "_series", "_fingerprint")

    def __init__(self, series: Sequence[LaurentSeries]):
        series = tuple(series)
        if len(series) < 2:
            raise ValueError("a tuple needs at least two series (m >= 1)")
        for j, f in enumerate(series):
            if f.top_power > 0:
                raise ValueError(f"series {j}: top_power must be 0, got {f.top_power}")
            if f.top_power < 0 or f.coeff(0) == 0:
                raise LeadingZero(f"series {j} has f_{j}(infinity) == 0")
        self._m = len(series) - 1
        self._series = series
        digest = hashlib.sha256()
        digest.update(str(self._m).encode())
        for f in series:
            digest.update(f";{f.top_power};{f.known_through};".encode())
            digest.update(",".join(str(c) for c in f.coeffs).encode())
        self._fingerprint = digest.hexdigest()

    @property
    def m(self) -> int:
        return self._m

    @property
    def series(self) -> tuple[LaurentSeries, ...]:
        return self._series

    @property
    def fingerprint(self) -> str:
        return self._fingerprint

    def __getitem__(self, j: int) -> LaurentSeries:
        return self._series[j]

    def __len__(self) -> int:
        return len(self._series)

    def coarsest_known_through(self) -> int:
        """The shallowest trust bound across the tuple (max of known_through)."""
        return max(f.known_through for f in self._series)

    def require_known_through(self, power: int) -> None:
        """Raise InsufficientTruncation unless every series is trusted through z**power."""
        for j, f in enumerate(self._series):
            if f.known_through > power:
                raise InsufficientTruncation(
                    required=power, available=f.known_through, series_index=j
                )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SeriesTuple):
            return NotImplemented
        return self._series == other._series

    def __hash__(self) -> int:
        return hash(self._series)

    def __repr__(self) -> str:
        return f"SeriesTuple(m={self._m}, fingerprint={self._fingerprint[:12]}...)"
