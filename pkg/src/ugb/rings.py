"""Exact coefficient arithmetic: integers, residues mod n, rationals.

Ring objects operate on plain Python values (``int`` for Z and Z/n,
``Fraction`` for Q).  The interface is deliberately small: add, neg, mul,
zero/one, zero test, equality, unit recognition and unit inversion.  The
reduction engine never divides by anything else, so no general division
is offered.
"""

from __future__ import annotations

import operator
import re
from fractions import Fraction
from math import gcd

from .errors import NotAUnit

_INT_RE = re.compile(r"[+-]?\d+\Z")
_RAT_RE = re.compile(r"[+-]?\d+(/\d+)?\Z")


class Ring:
    """A commutative ring with unity, acting on raw element values."""

    name = "?"

    def coerce(self, x):
        """Canonical element from user input; raises on junk."""
        raise NotImplementedError

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        raise NotImplementedError

    def is_zero(self, a):
        return a == self.zero()

    def equals(self, a, b):
        return a == b

    def is_unit(self, a):
        raise NotImplementedError

    def inv_unit(self, a):
        raise NotImplementedError

    def parse(self, text):
        raise NotImplementedError

    def format(self, a):
        return str(a)

    def split_sign(self, a):
        """(is_negative, magnitude) for printing; identity by default."""
        return False, a

    def __repr__(self):
        return self.name


class IntegerRing(Ring):
    name = "Z"

    def coerce(self, x):
        return operator.index(x)

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a == 1 or a == -1

    def inv_unit(self, a):
        if a == 1 or a == -1:
            return a
        raise NotAUnit(f"{a} is not a unit in Z")

    def parse(self, text):
        if not _INT_RE.match(text):
            raise ValueError(f"not an integer: {text!r}")
        return int(text)

    def split_sign(self, a):
        return (a < 0, -a if a < 0 else a)

    def __eq__(self, other):
        return type(other) is IntegerRing

    def __hash__(self):
        return hash("Z")


class RationalField(Ring):
    name = "Q"

    def coerce(self, x):
        if isinstance(x, float):
            raise TypeError("floats are not exact; use Fraction or str")
        return Fraction(x)

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a != 0

    def inv_unit(self, a):
        if a == 0:
            raise NotAUnit("0 is not a unit in Q")
        return 1 / a

    def parse(self, text):
        if not _RAT_RE.match(text):
            raise ValueError(f"not a rational: {text!r}")
        return Fraction(text)

    def split_sign(self, a):
        return (a < 0, -a if a < 0 else a)

    def __eq__(self, other):
        return type(other) is RationalField

    def __hash__(self):
        return hash("Q")


class ModularRing(Ring):
    """Z/n with canonical residues in [0, n); unit inversion via xgcd."""

    def __init__(self, modulus):
        modulus = operator.index(modulus)
        if modulus < 2:
            raise ValueError("modulus must be at least 2")
        self.modulus = modulus
        self.name = f"Z/{modulus}"

    def coerce(self, x):
        return operator.index(x) % self.modulus

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def sub(self, a, b):
        return (a - b) % self.modulus

    def mul(self, a, b):
        return (a * b) % self.modulus

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return gcd(a, self.modulus) == 1

    def inv_unit(self, a):
        try:
            return pow(a, -1, self.modulus)
        except ValueError:
            raise NotAUnit(f"{a} is not a unit in {self.name}") from None

    def parse(self, text):
        if not _INT_RE.match(text):
            raise ValueError(f"not a residue: {text!r}")
        return int(text) % self.modulus

    def __eq__(self, other):
        return type(other) is ModularRing and other.modulus == self.modulus

    def __hash__(self):
        return hash(("Z/", self.modulus))


ZZ = IntegerRing()
QQ = RationalField()
Zmod = ModularRing


def ring_from_name(text):
    """Ring from its text name: "Z", "Q" or "Z/<n>"."""
    text = text.strip()
    if text == "Z":
        return ZZ
    if text == "Q":
        return QQ
    if text.startswith("Z/"):
        tail = text[2:]
        if not tail.isdigit():
            raise ValueError(f"bad modulus in ring name {text!r}")
        return ModularRing(int(tail))
    raise ValueError(f"unknown ring {text!r} (expected Z, Q or Z/<n>)")
