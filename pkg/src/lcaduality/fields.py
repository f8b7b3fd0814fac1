"""Exact scalar fields: prime fields GF(p) and the rationals.

Scalars are plain Python values so that elimination loops stay cheap:
a GF(p) scalar is an ``int`` residue in ``[0, p)`` and a rational scalar is
a :class:`fractions.Fraction` (always in lowest terms, positive denominator).
The field object knows how to combine them.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .errors import UsageError

PRIME_LIMIT = 2**31


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    for d in range(3, isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


class Field:
    """Common interface; see :class:`PrimeField` and :class:`Rationals`."""

    zero = 0
    one = 1
    characteristic = 0

    def __call__(self, x):
        raise NotImplementedError

    def add(self, x, y):
        raise NotImplementedError

    def sub(self, x, y):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def dot(self, u, v):
        """Sum of products of two equal-length sequences."""
        raise NotImplementedError

    def axpy(self, a, x, y):
        """Return the list ``a*x + y`` for vectors x, y."""
        raise NotImplementedError

    def format(self, x) -> str:
        return str(x)

    def parse(self, text: str):
        text = text.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return self.div(self(int(num)), self(int(den)))
        return self(int(text))

    def from_bits(self, bits: int):
        """Map 64 random bits to a scalar (used by seeded generators)."""
        raise NotImplementedError


class PrimeField(Field):
    """The prime field GF(p), 2 <= p < 2**31."""

    def __init__(self, p: int):
        p = int(p)
        if not 2 <= p < PRIME_LIMIT:
            raise UsageError(f"prime field modulus must satisfy 2 <= p < 2^31, got {p}")
        if not is_prime(p):
            raise UsageError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"F{p}"

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __call__(self, x):
        if isinstance(x, Fraction):
            if x.denominator == 1:
                return x.numerator % self.p
            return self.div(x.numerator % self.p, x.denominator % self.p)
        if isinstance(x, bool) or not isinstance(x, int):
            raise UsageError(f"cannot coerce {x!r} into {self.name}")
        return x % self.p

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def mul(self, x, y):
        return (x * y) % self.p

    def neg(self, x):
        return -x % self.p

    def inv(self, x):
        if x % self.p == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self.name}")
        return pow(x, -1, self.p)

    def dot(self, u, v):
        return sum(a * b for a, b in zip(u, v)) % self.p

    def axpy(self, a, x, y):
        p = self.p
        return [(a * s + t) % p for s, t in zip(x, y)]

    def parse(self, text: str):
        if "/" in text:
            raise UsageError(f"denominators are not allowed in {self.name}: {text.strip()!r}")
        return super().parse(text)

    def from_bits(self, bits: int):
        return bits % self.p


class Rationals(Field):
    """The field Q with arbitrary-precision numerators and denominators."""

    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def __repr__(self):
        return "Rationals()"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __call__(self, x):
        if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
            raise UsageError(f"cannot coerce {x!r} into Q")
        return Fraction(x)

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("0 has no inverse in Q")
        return 1 / Fraction(x)

    def dot(self, u, v):
        return sum((a * b for a, b in zip(u, v)), Fraction(0))

    def axpy(self, a, x, y):
        return [a * s + t for s, t in zip(x, y)]

    def from_bits(self, bits: int):
        # numerator in [-4, 4], denominator in {1, 2, 3}
        return Fraction((bits & 0xF) % 9 - 4, (bits >> 4) % 3 + 1)


QQ = Rationals()


def field_from_name(name: str) -> Field:
    """Parse ``"Q"`` or ``"F<p>"``."""
    name = name.strip()
    if name == "Q":
        return QQ
    if len(name) > 1 and name[0] == "F" and name[1:].isdigit():
        return PrimeField(int(name[1:]))
    raise UsageError(f"unknown field {name!r}; expected 'Q' or 'F<p>'")
