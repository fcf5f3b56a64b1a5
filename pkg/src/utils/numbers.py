"""Exact arithmetic over Q(sqrt 2) and helpers for mixed numeric weights.

Weights in this package are ``int``, ``Fraction``, ``Surd`` (exact
``a + b*sqrt(2)``) or ``float``. Exact types stay exact under + - * /;
anything combined with a ``float`` becomes a ``float``.
"""

import math
from fractions import Fraction
from typing import Optional, Union


class Surd:
    """Exact number ``a + b*sqrt(2)`` with rational coefficients.

    Q(sqrt 2) is a field, so the class is closed under division, and it is
    totally ordered: the sign of ``a + b*sqrt(2)`` follows from comparing
    ``a**2`` with ``2*b**2`` when the coefficients have opposite signs.
    """

    __slots__ = ("a", "b")

    def __init__(self, a: Union[int, Fraction] = 0, b: Union[int, Fraction] = 0):
        if isinstance(a, float) or isinstance(b, float):
            raise TypeError("Surd coefficients must be int or Fraction")
        self.a = Fraction(a)
        self.b = Fraction(b)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def conjugate(self) -> "Surd":
        return Surd(self.a, -self.b)

    def inverse(self) -> "Surd":
        norm = self.a * self.a - 2 * self.b * self.b
        if norm == 0:
            raise ZeroDivisionError("Surd division by zero")
        return Surd(self.a / norm, -self.b / norm)

    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # Opposite signs; a**2 == 2*b**2 is impossible for nonzero rationals
        return sa if self.a * self.a > 2 * self.b * self.b else sb

    # Arithmetic

    def __add__(self, other):
        lifted = _lift(other)
        if lifted is None:
            return float(self) + other if isinstance(other, float) else NotImplemented
        return Surd(self.a + lifted.a, self.b + lifted.b)

    __radd__ = __add__

    def __sub__(self, other):
        lifted = _lift(other)
        if lifted is None:
            return float(self) - other if isinstance(other, float) else NotImplemented
        return Surd(self.a - lifted.a, self.b - lifted.b)

    def __rsub__(self, other):
        lifted = _lift(other)
        if lifted is None:
            return other - float(self) if isinstance(other, float) else NotImplemented
        return Surd(lifted.a - self.a, lifted.b - self.b)

    def __mul__(self, other):
        lifted = _lift(other)
        if lifted is None:
            return float(self) * other if isinstance(other, float) else NotImplemented
        return Surd(
            self.a * lifted.a + 2 * self.b * lifted.b,
            self.a * lifted.b + self.b * lifted.a,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        lifted = _lift(other)
        if lifted is None:
            return float(self) / other if isinstance(other, float) else NotImplemented
        return self * lifted.inverse()

    def __rtruediv__(self, other):
        lifted = _lift(other)
        if lifted is None:
            return other / float(self) if isinstance(other, float) else NotImplemented
        return lifted * self.inverse()

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return float(self) ** exponent
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = Surd(1), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __neg__(self) -> "Surd":
        return Surd(-self.a, -self.b)

    def __pos__(self) -> "Surd":
        return self

    def __abs__(self) -> "Surd":
        return -self if self.sign() < 0 else self

    # Comparison

    def _compare(self, other) -> Optional[int]:
        lifted = _lift(other)
        if lifted is None:
            if isinstance(other, float):
                value = float(self)
                return (value > other) - (value < other)
            return None
        return (self - lifted).sign()

    def __eq__(self, other):
        lifted = _lift(other)
        if lifted is None:
            return float(self) == other if isinstance(other, float) else NotImplemented
        return self.a == lifted.a and self.b == lifted.b

    def __lt__(self, other):
        result = self._compare(other)
        return NotImplemented if result is None else result < 0

    def __le__(self, other):
        result = self._compare(other)
        return NotImplemented if result is None else result <= 0

    def __gt__(self, other):
        result = self._compare(other)
        return NotImplemented if result is None else result > 0

    def __ge__(self, other):
        result = self._compare(other)
        return NotImplemented if result is None else result >= 0

    def __hash__(self) -> int:
        return hash(self.a) if self.b == 0 else hash((self.a, self.b))

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(2)

    def __repr__(self) -> str:
        return f"Surd({self.a!s}, {self.b!s})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        surd = "sqrt2" if self.b == 1 else f"{self.b}*sqrt2"
        return surd if self.a == 0 else f"{self.a}+{surd}"


Number = Union[int, Fraction, float, Surd]

SQRT2 = Surd(0, 1)


def _lift(value) -> Optional[Surd]:
    if isinstance(value, Surd):
        return value
    if isinstance(value, (int, Fraction)):
        return Surd(value)
    return None


def is_exact(value) -> bool:
    """True for int, Fraction and Surd values."""
    return isinstance(value, (int, Fraction, Surd))


def to_float(value) -> float:
    return float(value)


def normalize(value):
    """Collapse exact values to the simplest type (Surd -> Fraction -> int)."""
    if isinstance(value, Surd):
        if value.b != 0:
            return value
        value = value.a
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value.numerator)
    return value


def to_exact(value):
    """Lift an exact value into a type whose division is exact."""
    if isinstance(value, Surd):
        return value
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    raise TypeError(f"{value!r} is not an exact number")


def div(numerator, denominator):
    """Divide, staying exact when both operands are exact.

    Raises:
        ZeroDivisionError: If the denominator is zero.
    """
    if denominator == 0:
        raise ZeroDivisionError("division by zero")
    if isinstance(numerator, (int, Fraction)) and isinstance(denominator, (int, Fraction)):
        return normalize(Fraction(numerator) / Fraction(denominator))
    result = numerator / denominator
    return normalize(result) if isinstance(result, Surd) else result


def power_of_two(exponent: int):
    """Return ``2**exponent`` as an int, or as a Fraction for negative exponents."""
    if exponent >= 0:
        return 2**exponent
    return Fraction(1, 2 ** (-exponent))


def _rational_log2(value: Fraction) -> Optional[int]:
    num, den = value.numerator, value.denominator
    if num <= 0:
        return None
    if num & (num - 1) == 0 and den & (den - 1) == 0:
        return num.bit_length() - den.bit_length()
    return None


def exact_log2(value) -> Optional[Fraction]:
    """Exact base-2 logarithm when it is rational and recognisable.

    Recognises ``2**j`` (any exact type or float) and ``2**j * sqrt(2)``.

    Returns:
        The logarithm as a Fraction, or None when it is not available exactly.
    """
    if isinstance(value, Surd):
        if value.b == 0:
            return exact_log2(value.a)
        if value.a == 0 and value.b > 0:
            j = _rational_log2(value.b)
            return None if j is None else Fraction(j) + Fraction(1, 2)
        return None
    if isinstance(value, (int, Fraction)):
        j = _rational_log2(Fraction(value))
        return None if j is None else Fraction(j)
    if isinstance(value, float) and math.isfinite(value) and value > 0:
        mantissa, exponent = math.frexp(value)
        if mantissa == 0.5:
            return Fraction(exponent - 1)
    return None


def log2_value(value) -> float:
    """Floating point base-2 logarithm that tolerates huge integers."""
    if isinstance(value, int):
        return math.log2(value)
    if isinstance(value, Fraction):
        return math.log2(value.numerator) - math.log2(value.denominator)
    return math.log2(float(value))


def floor_log2(value) -> int:
    """Exact ``floor(log2(value))`` for positive values.

    Raises:
        ValueError: If the value is not positive.
    """
    if not value > 0:
        raise ValueError(f"floor_log2 needs a positive value, got {value!r}")
    if isinstance(value, (int, Fraction)):
        q = Fraction(value)
        guess = q.numerator.bit_length() - q.denominator.bit_length()
    else:
        guess = math.floor(log2_value(value))
    target = Fraction(value) if isinstance(value, float) else value
    while power_of_two(guess) > target:
        guess -= 1
    while power_of_two(guess + 1) <= target:
        guess += 1
    return guess


def fraction_from_float(value: float, bits: int) -> Fraction:
    """Round a float to the nearest multiple of ``2**-bits``."""
    scale = 2**bits
    return Fraction(round(value * scale), scale)


def split_log2(value, bits: int) -> tuple[int, Fraction, bool]:
    """Split ``log2(value)`` into integer part and fractional part.

    Args:
        value: Positive weight.
        bits: Precision of the rational approximation used when the
            logarithm is not exactly representable.

    Returns:
        Tuple ``(q, f, exact)`` with ``q = floor(log2(value))`` and
        ``f`` in ``[0, 1)``; ``exact`` tells whether ``f`` is exact.
    """
    q = floor_log2(value)
    log = exact_log2(value)
    if log is not None:
        return q, log - q, True
    frac = fraction_from_float(log2_value(value) - q, bits)
    ceiling = 1 - Fraction(1, 2**bits)
    frac = min(max(frac, Fraction(0)), ceiling)
    return q, frac, False
