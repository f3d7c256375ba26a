"""Exact Gaussian rationals: complex numbers a + bi with a, b in Q."""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

__all__ = ["GaussianRational", "GR", "ZERO", "ONE", "I", "as_gr", "parse_scalar", "format_scalar"]


class GaussianRational:
    """The value (a + b i) / d with integers a, b and d > 0 in lowest terms.

    Instances are immutable and hashable. Arithmetic accepts ints and
    Fractions on either side.
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, im=0):
        re = _to_fraction(re)
        im = _to_fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        a = re.numerator * (d // re.denominator)
        b = im.numerator * (d // im.denominator)
        self._a, self._b, self._d = a, b, d

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "GaussianRational":
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(a, b, d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        obj = object.__new__(cls)
        obj._a, obj._b, obj._d = a, b, d
        return obj

    # --- accessors -------------------------------------------------------
    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    @property
    def parts(self) -> tuple[int, int, int]:
        """Raw (a, b, d) with value (a + b i)/d."""
        return self._a, self._b, self._d

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def is_real(self) -> bool:
        return self._b == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """|z|^2 as a Fraction."""
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    def sort_key(self) -> tuple[Fraction, Fraction]:
        return (self.re, self.im)

    # --- arithmetic ------------------------------------------------------
    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self._d == o._d:
            return GaussianRational._raw(self._a + o._a, self._b + o._b, self._d)
        return GaussianRational._raw(
            self._a * o._d + o._a * self._d,
            self._b * o._d + o._b * self._d,
            self._d * o._d,
        )

    __radd__ = __add__

    def __neg__(self):
        obj = object.__new__(GaussianRational)
        obj._a, obj._b, obj._d = -self._a, -self._b, self._d
        return obj

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, e = self._a, self._b, o._a, o._b
        return GaussianRational._raw(a * c - b * e, a * e + b * c, self._d * o._d)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        n = self._a * self._a + self._b * self._b
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        # d / (a + bi) = d (a - bi) / n
        return GaussianRational._raw(self._d * self._a, -self._d * self._b, n)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # --- comparison ------------------------------------------------------
    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self._a == o._a and self._b == o._b and self._d == o._d

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __bool__(self):
        return not self.is_zero()

    # --- text ------------------------------------------------------------
    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"GR({format_scalar(self)!r})"


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, GaussianRational) and x.is_real():
        return x.re
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as a rational component")


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, int):
        obj = object.__new__(GaussianRational)
        obj._a, obj._b, obj._d = x, 0, 1
        return obj
    if isinstance(x, Fraction):
        return GaussianRational._raw(x.numerator, 0, x.denominator)
    return None


def as_gr(x) -> GaussianRational:
    """Coerce an int, Fraction, scalar string or GaussianRational."""
    if isinstance(x, str):
        return parse_scalar(x)
    o = _coerce(x)
    if o is None:
        raise TypeError(f"cannot convert {type(x).__name__} to GaussianRational")
    return o


GR = as_gr
ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


# --- scalar text format ----------------------------------------------------

_RAT = r"\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"""^(?:
        (?P<re>[+-]?{_RAT})(?:(?P<isign>[+-])(?P<im>{_RAT})?i)?   # real part, optional imaginary
      | (?P<sign>[+-]?)(?P<im2>{_RAT})?i                          # pure imaginary
    )$""",
    re.VERBOSE,
)


def parse_scalar(text: str) -> GaussianRational:
    """Parse the scalar text format, e.g. ``3/4-1/2i``, ``2``, ``i``, ``-i``."""
    s = "".join(text.split())
    m = _SCALAR_RE.match(s)
    if not m:
        raise ValueError(f"malformed scalar: {text!r}")
    if m.group("re") is not None:
        re_part = _parse_rat(m.group("re"))
        if m.group("isign") is None:
            return GaussianRational(re_part)
        im_part = _parse_rat(m.group("im") or "1")
        if m.group("isign") == "-":
            im_part = -im_part
        return GaussianRational(re_part, im_part)
    im_part = _parse_rat(m.group("im2") or "1")
    if m.group("sign") == "-":
        im_part = -im_part
    return GaussianRational(0, im_part)


def _parse_rat(s: str) -> Fraction:
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {s!r}") from None


def _fmt_rat(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(z: GaussianRational) -> str:
    re_part, im_part = z.re, z.im
    if im_part == 0:
        return _fmt_rat(re_part)
    mag = abs(im_part)
    im_txt = "i" if mag == 1 else _fmt_rat(mag) + "i"
    if re_part == 0:
        return ("-" if im_part < 0 else "") + im_txt
    return _fmt_rat(re_part) + ("-" if im_part < 0 else "+") + im_txt
