"""Exception taxonomy shared by all hpade modules.

Every error raised by the library derives from :class:`HermitePadeError`,
so callers (in particular the CLI) can map failures to exit codes without
enumerating modules.
"""

from __future__ import annotations


class HermitePadeError(Exception):
    """Base class for all hpade errors."""


class LeadingZero(HermitePadeError):
    """A series that must satisfy f(infinity) != 0 has leading coefficient 0."""


class InsufficientTruncation(HermitePadeError):
    """A computation needs series coefficients below the trusted window.

    ``required`` and ``available`` are powers of z: the computation needs
    coefficients known through z**required but the series is only known
    through z**available.
    """

    def __init__(self, required: int, available: int, series_index: int | None = None):
        self.required = required
        self.available = available
        self.series_index = series_index
        where = "" if series_index is None else f" (series {series_index})"
        super().__init__(
            f"need coefficients through z^{required}, "
            f"but only known through z^{available}{where}"
        )


class SingularMatrix(HermitePadeError):
    """A square solve hit a rank-deficient matrix.

    Carries the exact rank and one kernel vector so callers can classify
    the degeneracy instead of just failing.
    """

    def __init__(self, rank: int, witness: tuple):
        self.rank = rank
        self.witness = witness
        super().__init__(f"singular system (rank {rank})")


class NotNormal(HermitePadeError):
    """A multi-index is not normal for the given tuple.

    ``index`` is the offending multi-index and ``verdict`` one of the
    diagnostic verdicts (singular / degree-drop / order-shortfall).
    """

    def __init__(self, index, verdict):
        self.index = index
        self.verdict = verdict
        super().__init__(f"index {index} is not normal: {verdict}")


class MixedInputs(HermitePadeError):
    """Solutions passed to an assembly step disagree on n or on the tuple."""


class DimensionMismatch(HermitePadeError):
    """Matrix operands have incompatible dimensions."""


class ParseError(HermitePadeError):
    """A document is syntactically invalid (bad JSON or bad rational literal)."""

    def __init__(self, reason: str, position: str | None = None):
        self.reason = reason
        self.position = position
        where = f" at {position}" if position else ""
        super().__init__(f"parse error{where}: {reason}")


class SchemaError(HermitePadeError):
    """A document is well-formed but violates the tuple document schema."""
