"""Exact binary rationals m * 2**e with canonical (odd-or-zero) mantissas.

These are the endpoint scalars of all interval computation: addition,
subtraction and multiplication are exact, and directed rounding is the
only lossy operation.  Values are immutable and hashable.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ExponentOverflow

# Exponents are kept inside a comfortable machine range; anything beyond
# this indicates a runaway computation rather than a legitimate value.
_EXP_LIMIT = 1 << 62


def _normalize(mantissa: int, exponent: int) -> tuple[int, int]:
    if mantissa == 0:
        return 0, 0
    shift = (mantissa & -mantissa).bit_length() - 1
    mantissa >>= shift
    exponent += shift
    if not -_EXP_LIMIT < exponent < _EXP_LIMIT:
        raise ExponentOverflow(f"dyadic exponent {exponent} out of range")
    return mantissa, exponent


class Dyadic:
    """An exact binary rational ``mantissa * 2**exponent``.

    The representation is canonical: the mantissa is odd or zero, and
    zero is always ``0 * 2**0``.  Structural equality therefore equals
    value equality.
    """

    __slots__ = ("mantissa", "exponent")

    def __init__(self, mantissa: int, exponent: int = 0):
        m, e = _normalize(mantissa, exponent)
        object.__setattr__(self, "mantissa", m)
        object.__setattr__(self, "exponent", e)

    def __setattr__(self, name, value):
        raise AttributeError("Dyadic values are immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_int(cls, n: int) -> "Dyadic":
        return cls(n, 0)

    @classmethod
    def from_fraction(cls, fr: Fraction) -> "Dyadic":
        """Exact conversion; the denominator must be a power of two."""
        den = fr.denominator
        if den & (den - 1):
            raise ValueError(f"{fr} is not a dyadic rational")
        return cls(fr.numerator, -(den.bit_length() - 1))

    @classmethod
    def parse(cls, text: str) -> "Dyadic":
        """Parse a decimal literal that is exactly representable.

        Decimals whose fractional part is not a power-of-two fraction
        (e.g. ``0.1``) are rejected here; higher layers realize those
        as exact rationals instead.
        """
        return cls.from_fraction(Fraction(text))

    # -- conversions --------------------------------------------------

    def to_fraction(self) -> Fraction:
        if self.exponent >= 0:
            return Fraction(self.mantissa << self.exponent)
        return Fraction(self.mantissa, 1 << -self.exponent)

    def to_decimal_string(self) -> str:
        """Exact decimal rendering (finite because 2 divides 10)."""
        if self.exponent >= 0:
            return str(self.mantissa << self.exponent)
        shift = -self.exponent
        # m / 2**k == m * 5**k / 10**k
        scaled = self.mantissa * 5 ** shift
        sign = "-" if scaled < 0 else ""
        digits = str(abs(scaled)).rjust(shift + 1, "0")
        return f"{sign}{digits[:-shift]}.{digits[-shift:]}"

    def to_hex_string(self) -> str:
        sign = "-" if self.mantissa < 0 else ""
        return f"{sign}0x{abs(self.mantissa):x}p{self.exponent:+d}"

    def __repr__(self):
        return f"Dyadic({self.mantissa}, {self.exponent})"

    def __str__(self):
        return self.to_decimal_string()

    # -- arithmetic (exact) -------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Dyadic):
            return other
        if isinstance(other, int):
            return Dyadic(other, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        e = min(self.exponent, other.exponent)
        m = (self.mantissa << (self.exponent - e)) + (
            other.mantissa << (other.exponent - e)
        )
        return Dyadic(m, e)

    __radd__ = __add__

    def __neg__(self):
        return Dyadic(-self.mantissa, self.exponent)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Dyadic(self.mantissa * other.mantissa, self.exponent + other.exponent)

    __rmul__ = __mul__

    def scale2(self, k: int) -> "Dyadic":
        """Exact multiplication by ``2**k``."""
        if self.mantissa == 0:
            return self
        return Dyadic(self.mantissa, self.exponent + k)

    def __abs__(self):
        return Dyadic(abs(self.mantissa), self.exponent)

    # -- comparison (total order on values) ---------------------------

    def _cmp(self, other) -> int:
        e = min(self.exponent, other.exponent)
        a = self.mantissa << (self.exponent - e)
        b = other.mantissa << (other.exponent - e)
        return (a > b) - (a < b)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # canonical form: value equality is structural equality
        return self.mantissa == other.mantissa and self.exponent == other.exponent

    def __hash__(self):
        return hash((self.mantissa, self.exponent))

    def __lt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._cmp(other) < 0

    def __le__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._cmp(other) <= 0

    def __gt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._cmp(other) > 0

    def __ge__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._cmp(other) >= 0

    @property
    def sign(self) -> int:
        return (self.mantissa > 0) - (self.mantissa < 0)

    # -- rounding -----------------------------------------------------

    def round_down(self, bits: int) -> "Dyadic":
        """Largest dyadic <= self representable with ``bits`` precision.

        Precision counts fraction bits below the leading one (floating
        point style), so the error is below one ulp, 2**(e_lead - bits).
        """
        if bits < 1:
            raise ValueError("bits must be >= 1")
        excess = abs(self.mantissa).bit_length() - bits - 1
        if excess <= 0:
            return self
        return Dyadic(self.mantissa >> excess, self.exponent + excess)

    def round_up(self, bits: int) -> "Dyadic":
        """Smallest dyadic >= self representable with ``bits`` precision."""
        if bits < 1:
            raise ValueError("bits must be >= 1")
        excess = abs(self.mantissa).bit_length() - bits - 1
        if excess <= 0:
            return self
        return Dyadic(-((-self.mantissa) >> excess), self.exponent + excess)

    def floor_to_grid(self, k: int) -> "Dyadic":
        """Largest multiple of ``2**-k`` that is <= self."""
        shift = self.exponent + k
        if shift >= 0:
            return self
        return Dyadic(self.mantissa >> -shift, -k)

    def ceil_to_grid(self, k: int) -> "Dyadic":
        """Smallest multiple of ``2**-k`` that is >= self."""
        shift = self.exponent + k
        if shift >= 0:
            return self
        return Dyadic(-((-self.mantissa) >> -shift), -k)


ZERO = Dyadic(0)
ONE = Dyadic(1)


def div_directed(a: Dyadic, b: Dyadic, bits: int, up: bool) -> Dyadic:
    """Directed rounding of ``a / b`` to at most ``bits`` significant bits.

    ``up`` rounds toward +infinity, otherwise toward -infinity.  The
    divisor must be nonzero.
    """
    if b.mantissa == 0:
        raise ZeroDivisionError("dyadic division by zero")
    if a.mantissa == 0:
        return ZERO
    n, d = a.mantissa, b.mantissa
    # pre-shift so the integer quotient carries > bits significant bits
    shift = bits - (abs(n).bit_length() - abs(d).bit_length()) + 2
    if shift >= 0:
        n <<= shift
    else:
        d <<= -shift
    if up:
        q = -((-n) // d)
    else:
        q = n // d
    res = Dyadic(q, a.exponent - b.exponent - shift)
    return res.round_up(bits) if up else res.round_down(bits)
