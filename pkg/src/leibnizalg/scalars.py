"""Exact Gaussian-rational scalars.

Every computation in this package runs over Q(i): complex numbers with
rational real and imaginary parts.  All constants appearing in the printed
classification tables are Gaussian rationals, so this field is enough, and
exactness turns every identity we want to verify into a decidable equality.

Rationals are backed by gmpy2.mpq when available (about 10x faster than
fractions.Fraction); the stdlib is used as a fallback so the package stays
importable without the C extension.
"""

from __future__ import annotations

import re as _re

try:
    from gmpy2 import mpq as _mpq

    def _rat(a=0, b=1):
        return _mpq(a, b)

except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as _mpq

    def _rat(a=0, b=1):
        return _mpq(a, b)


_RAT_ZERO = _rat(0)
_RAT_ONE = _rat(1)

_COMPONENT = _re.compile(r"^([+-]?)(?:(\d+(?:/\d+)?)(i?)|(i))$")


class Scalar:
    """An immutable element a + b*i of Q(i), always in lowest terms."""

    __slots__ = ("re", "im", "_hash")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", re if type(re) is type(_RAT_ZERO) else _rat(re))
        object.__setattr__(self, "im", im if type(im) is type(_RAT_ZERO) else _rat(im))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def rational(cls, num, den=1) -> "Scalar":
        return cls(_rat(num, den))

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """Parse the canonical text format, e.g. '2', '-3/2+1/4i', '-i'."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty scalar literal")
        # split into at most two signed components
        parts = []
        start = 0
        for pos in range(1, len(s)):
            if s[pos] in "+-" and s[pos - 1] not in "+-":
                parts.append(s[start:pos])
                start = pos
        parts.append(s[start:])
        if len(parts) > 2:
            raise ValueError(f"cannot parse scalar {text!r}")
        re_part = _RAT_ZERO
        im_part = _RAT_ZERO
        seen_re = seen_im = False
        for p in parts:
            m = _COMPONENT.match(p)
            if not m:
                raise ValueError(f"cannot parse scalar {text!r}")
            sign, body, itag, lone_i = m.groups()
            neg = sign == "-"
            if itag or lone_i:
                if seen_im:
                    raise ValueError(f"two imaginary parts in {text!r}")
                seen_im = True
                mag = _rat(1) if lone_i or not body else _parse_rat(body)
                im_part = -mag if neg else mag
            else:
                if seen_re:
                    raise ValueError(f"two real parts in {text!r}")
                seen_re = True
                mag = _parse_rat(body)
                re_part = -mag if neg else mag
        return cls(re_part, im_part)

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_one(self) -> bool:
        return self.re == _RAT_ONE and not self.im

    def is_rational(self) -> bool:
        return not self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = as_scalar(other)
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_scalar(other)
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return as_scalar(other).__sub__(self)

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __mul__(self, other):
        other = as_scalar(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return Scalar(a * c)
        return Scalar(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_scalar(other)
        if other.is_zero():
            raise ZeroDivisionError("scalar division by zero")
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return Scalar(a / c)
        norm = c * c + d * d
        return Scalar((a * c + b * d) / norm, (b * c - a * d) / norm)

    def __rtruediv__(self, other):
        return as_scalar(other).__truediv__(self)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return (ONE / self) ** (-exponent)
        result = ONE
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Scalar":
        return ONE / self

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, type(_RAT_ZERO))):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.re, self.im))
            object.__setattr__(self, "_hash", h)
        return h

    # -- formatting --------------------------------------------------------

    def __str__(self):
        re_part, im_part = self.re, self.im
        if not im_part:
            return str(re_part)
        mag = -im_part if im_part < 0 else im_part
        istr = "i" if mag == _RAT_ONE else f"{mag}i"
        if not re_part:
            return f"-{istr}" if im_part < 0 else istr
        sign = "-" if im_part < 0 else "+"
        return f"{re_part}{sign}{istr}"

    def __repr__(self):
        return f"Scalar({self})"


def _parse_rat(body: str):
    if "/" in body:
        num, den = body.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {body!r}")
        return _rat(int(num), int(den))
    return _rat(int(body))


def as_scalar(x) -> Scalar:
    """Coerce ints, rationals and strings to Scalar."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, str):
        return Scalar.parse(x)
    return Scalar(_rat(x))


def rational(num, den=1) -> Scalar:
    return Scalar(_rat(num, den))


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)
