"""Exceptions shared across the library."""


class ExactRealError(Exception):
    """Base class for all library errors."""


class EffortExhausted(ExactRealError):
    """A search or refinement hit its effort budget without a witness.

    Raised by ``select`` when neither Kleenean reaches true within the
    budget, and by real-number operations whose precondition (divisor
    nonzero, argument positive, ...) could not be certified.
    """

    def __init__(self, budget, what=""):
        self.budget = budget
        self.what = what
        msg = f"effort budget {budget} exhausted"
        if what:
            msg += f" while {what}"
        super().__init__(msg)


class DivisorStraddlesZero(ExactRealError):
    """Interval division was attempted with a divisor containing zero.

    Callers at the real-number layer catch this and retry at higher
    accuracy; it only escapes to users when the divisor really is zero.
    """


class ExponentOverflow(ExactRealError, OverflowError):
    """A dyadic exponent left the supported machine range."""


class ParseError(ExactRealError):
    """Expression source text could not be parsed."""

    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} (column {position + 1})")
