"""Exact scalar arithmetic over Q, F_p and Z.

Matrices and subspaces store *raw* Python values (``Fraction`` for Q, ``int``
for F_p and Z) and do arithmetic through their :class:`Ring`; the
:class:`Scalar` wrapper is the value-level API for single elements.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .errors import NotAUnit, RingMismatch


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Ring:
    """An exact commutative ring acting on raw element values."""

    is_field = False
    tag = "?"

    zero: Any
    one: Any

    def coerce(self, x):
        raise NotImplementedError

    def add(self, a, b):
        return self.coerce(a + b)

    def sub(self, a, b):
        return self.coerce(a - b)

    def mul(self, a, b):
        return self.coerce(a * b)

    def neg(self, a):
        return self.coerce(-a)

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, a) -> str:
        return str(a)

    def __call__(self, x) -> "Scalar":
        return Scalar(self.coerce(x), self)

    def __repr__(self):
        return f"{type(self).__name__}()"

    def __eq__(self, other):
        return type(self) is type(other)

    def __hash__(self):
        return hash(type(self))


class Rationals(Ring):
    is_field = True
    tag = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Scalar):
            x = x.value
        if isinstance(x, float):
            raise TypeError("floats are not exact; pass an int, Fraction or string")
        return Fraction(x)

    # Fraction arithmetic is already canonical, skip the coerce round-trip.
    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_unit(self, a):
        return a != 0

    def inv(self, a):
        if a == 0:
            raise NotAUnit("0 is not invertible in Q")
        return 1 / a

    def parse(self, text):
        text = str(text).strip()
        if not re.fullmatch(r"[+-]?\d+(/[+-]?\d+)?", text):
            raise ValueError(f"not a rational: {text!r}")
        return Fraction(text)

    def format(self, a):
        return str(a)


class Integers(Ring):
    tag = "Z"
    zero = 0
    one = 1

    def coerce(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Scalar):
            x = x.value
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"{x} is not an integer")
            return int(x.numerator)
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"cannot coerce {x!r} into Z")
        return x

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_unit(self, a):
        return a in (1, -1)

    def inv(self, a):
        if a not in (1, -1):
            raise NotAUnit(f"{a} is not a unit in Z")
        return a

    def parse(self, text):
        text = str(text).strip()
        if not re.fullmatch(r"[+-]?\d+", text):
            raise ValueError(f"not an integer: {text!r}")
        return int(text)


class PrimeField(Ring):
    is_field = True

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    @property
    def tag(self):
        return f"Fp:{self.p}"

    def coerce(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Scalar):
            x = x.value
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise NotAUnit(f"denominator of {x} vanishes mod {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def is_unit(self, a):
        return a % self.p != 0

    def inv(self, a):
        if a % self.p == 0:
            raise NotAUnit(f"0 is not invertible in F_{self.p}")
        return pow(a, -1, self.p)

    def parse(self, text):
        text = str(text).strip()
        m = re.fullmatch(r"([+-]?\d+)(?:\s*mod\s*(\d+))?", text)
        if not m:
            raise ValueError(f"not an element of F_{self.p}: {text!r}")
        if m.group(2) is not None and int(m.group(2)) != self.p:
            raise RingMismatch(f"{text!r} is not in F_{self.p}")
        return int(m.group(1)) % self.p

    def format(self, a):
        return f"{a} mod {self.p}"

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


QQ = Rationals()
ZZ = Integers()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def ring_from_spec(spec: str) -> Ring:
    """Parse a field selector: ``"Q"``, ``"Z"``, ``"Fp:<p>"`` or ``"F<p>"``."""
    s = spec.strip()
    if s in ("Q", "QQ"):
        return QQ
    if s in ("Z", "ZZ"):
        return ZZ
    m = re.fullmatch(r"F(?:p:|_)?(\d+)", s)
    if m:
        return PrimeField(int(m.group(1)))
    raise ValueError(f"unknown field selector {spec!r}")


@dataclass(frozen=True)
class Scalar:
    """An immutable element of a :class:`Ring`."""

    value: Any
    ring: Ring

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")
            return other.value
        return self.ring.coerce(other)

    def __add__(self, other):
        return Scalar(self.ring.add(self.value, self._other(other)), self.ring)

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.ring.sub(self.value, self._other(other)), self.ring)

    def __rsub__(self, other):
        return Scalar(self.ring.sub(self._other(other), self.value), self.ring)

    def __mul__(self, other):
        return Scalar(self.ring.mul(self.value, self._other(other)), self.ring)

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(self.ring.neg(self.value), self.ring)

    def __truediv__(self, other):
        return self * invert(Scalar(self._other(other), self.ring))

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.ring == other.ring and self.value == other.value
        try:
            return self.value == self.ring.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.value, self.ring))

    def __str__(self):
        return self.ring.format(self.value)


def is_unit(a: Scalar) -> bool:
    return a.ring.is_unit(a.value)


def invert(a: Scalar) -> Scalar:
    """Multiplicative inverse; raises :class:`NotAUnit` for non-units."""
    return Scalar(a.ring.inv(a.value), a.ring)


def parse_scalar(text: str, ring: Ring) -> Scalar:
    return Scalar(ring.parse(text), ring)
