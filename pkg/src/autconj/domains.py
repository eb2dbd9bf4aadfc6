"""Coefficient domains with a uniform context interface.

Polynomial code in this package never touches element internals; it goes
through a domain object K providing zero/one/add/sub/mul/neg plus inv and
div when K.is_field.  Elements stay plain Python values (Fraction, int,
or tuples for extension fields) so hashing and equality come for free.

QQ and ZZ live here; finite fields are in finitefield.py.
"""

from __future__ import annotations

import math
from fractions import Fraction


class RationalField:
    """The field Q with Fraction elements."""

    char = 0
    is_field = True
    order = None          # infinite
    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / b

    def is_square(self, a) -> bool:
        a = Fraction(a)
        if a < 0:
            return False
        n, d = a.numerator, a.denominator
        return math.isqrt(n) ** 2 == n and math.isqrt(d) ** 2 == d

    def sqrt(self, a) -> Fraction:
        a = Fraction(a)
        if not self.is_square(a):
            raise ValueError("not a square in Q: %s" % a)
        return Fraction(math.isqrt(a.numerator), math.isqrt(a.denominator))

    def sort_key(self, a):
        return Fraction(a)

    def __repr__(self):
        return "QQ"


class IntegerRing:
    """Z with int elements; not a field, but handy as a polynomial domain."""

    char = 0
    is_field = False
    order = None
    zero = 0
    one = 1

    def from_int(self, n: int) -> int:
        return int(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def __repr__(self):
        return "ZZ"


QQ = RationalField()
ZZ = IntegerRing()
