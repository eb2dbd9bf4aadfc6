"""Prime fields, extension towers, and the GF constructor.

PrimeField elements are plain ints in [0, p).  ExtensionField elements are
fixed-length tuples of base-field elements (coefficients of the residue
class modulo a monic irreducible, lowest degree first).  Towers compose:
the base of an ExtensionField can itself be an ExtensionField, or QQ, which
is how quadratic number fields enter the rational fixed-point solver.

Only canonical representatives exist, so == and hash are structural.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Optional

from .ntheory import is_prime
from . import poly as P


class PrimeField:
    """GF(p) with int elements."""

    is_field = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError("%d is not prime" % p)
        self.p = p
        self.char = p
        self.order = p
        self.zero = 0
        self.one = 1 % p
        self._nonsquare: Optional[int] = None

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.p)
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def pow(self, a, n: int):
        if n < 0:
            return pow(self.inv(a), -n, self.p)
        return pow(a, n, self.p)

    def frobenius(self, a):
        return a % self.p

    def is_square(self, a) -> bool:
        a %= self.p
        if a == 0 or self.p == 2:
            return True
        return pow(a, (self.p - 1) // 2, self.p) == 1

    def _smallest_nonsquare(self) -> int:
        if self._nonsquare is None:
            c = 2
            while self.is_square(c):
                c += 1
            self._nonsquare = c
        return self._nonsquare

    def sqrt(self, a):
        """Square root, canonicalized to min(r, p - r).  Tonelli-Shanks."""
        p = self.p
        a %= p
        if a == 0 or p == 2:
            return a
        if not self.is_square(a):
            raise ValueError("%d is not a square in GF(%d)" % (a, p))
        if p % 4 == 3:
            r = pow(a, (p + 1) // 4, p)
        else:
            q, s = p - 1, 0
            while q % 2 == 0:
                q //= 2
                s += 1
            z = self._smallest_nonsquare()
            m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
            while t != 1:
                i, tt = 0, t
                while tt != 1:
                    tt = tt * tt % p
                    i += 1
                b = pow(c, 1 << (m - i - 1), p)
                m, c, t, r = i, b * b % p, t * b % p * b % p, r * b % p
        return min(r, p - r)

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    def random_element(self, rng):
        return rng.randrange(self.p)

    def sort_key(self, a):
        return a

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p


class ExtensionField:
    """base[x] / (modulus), modulus monic of degree >= 2 over base.

    Elements are length-k tuples of base elements.  embed/retract move
    between the base field and the subfield of constants; rationality
    tests throughout the package are 'retract is not None'.
    """

    is_field = True

    def __init__(self, base, modulus):
        modulus = tuple(modulus)
        k = len(modulus) - 1
        if k < 2:
            raise ValueError("extension degree must be >= 2")
        if modulus[-1] != base.one:
            raise ValueError("modulus must be monic")
        self.base = base
        self.modulus = modulus
        self.k = k
        self.char = base.char
        self.order = base.order ** k if base.order is not None else None
        self.zero = (base.zero,) * k
        self.one = (base.one,) + (base.zero,) * (k - 1)
        # x^(k+j) mod modulus for j = 0..k-2, as coefficient tuples
        red = []
        cur = list(P.pmod(base, P.pmono(base, k), modulus))
        for _ in range(k - 1):
            cur = cur + [base.zero] * (k - len(cur))
            red.append(tuple(cur))
            nxt = [base.zero] + cur[: k - 1]
            top = cur[k - 1]
            if top != base.zero:
                for i in range(k):
                    nxt[i] = base.sub(nxt[i], base.mul(top, self.modulus[i]))
            cur = nxt
        self._red = red
        self.gen = (base.zero, base.one) + (base.zero,) * (k - 2)

    def from_int(self, n: int):
        return self.embed(self.base.from_int(n))

    def embed(self, a):
        return (a,) + (self.base.zero,) * (self.k - 1)

    def retract(self, e):
        """Base-field value of e, or None if e is not in the base field."""
        for c in e[1:]:
            if c != self.base.zero:
                return None
        return e[0]

    def add(self, a, b):
        B = self.base
        return tuple(B.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        B = self.base
        return tuple(B.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        B = self.base
        return tuple(B.neg(x) for x in a)

    def mul(self, a, b):
        B = self.base
        k = self.k
        conv = [B.zero] * (2 * k - 1)
        for i, x in enumerate(a):
            if x == B.zero:
                continue
            for j, y in enumerate(b):
                conv[i + j] = B.add(conv[i + j], B.mul(x, y))
        out = conv[:k]
        for j in range(k - 1):
            c = conv[k + j]
            if c == B.zero:
                continue
            row = self._red[j]
            for i in range(k):
                out[i] = B.add(out[i], B.mul(c, row[i]))
        return tuple(out)

    def inv(self, a):
        B = self.base
        f = P.pstrip(B, a)
        if not f:
            raise ZeroDivisionError("inverse of zero in %r" % self)
        d, s, _ = P.pxgcd(B, f, self.modulus)
        if len(d) != 1:
            raise ZeroDivisionError("element not invertible")
        s = P.pscale(B, s, B.inv(d[0]))
        return tuple(s) + (B.zero,) * (self.k - len(s))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n: int):
        if n < 0:
            a, n = self.inv(a), -n
        out = self.one
        while n:
            if n & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            n >>= 1
        return out

    def frobenius(self, a):
        """The q-power map, q = |base|; fixes exactly the base field."""
        if self.base.order is None:
            raise ValueError("frobenius needs a finite base")
        return self.pow(a, self.base.order)

    def is_square(self, a) -> bool:
        if a == self.zero:
            return True
        if self.char == 2:
            return True
        return self.pow(a, (self.order - 1) // 2) == self.one

    def sqrt(self, a):
        if a == self.zero:
            return a
        if self.char == 2:
            # squaring is a bijection in characteristic 2
            return self.pow(a, self.order // 2)
        if not self.is_square(a):
            raise ValueError("element is not a square")
        q = self.order
        if q % 4 == 3:
            r = self.pow(a, (q + 1) // 4)
        else:
            # generic Tonelli-Shanks with a scanned non-square
            z = None
            for e in self.elements():
                if e != self.zero and not self.is_square(e):
                    z = e
                    break
            qq, s = q - 1, 0
            while qq % 2 == 0:
                qq //= 2
                s += 1
            m, c = s, self.pow(z, qq)
            t, r = self.pow(a, qq), self.pow(a, (qq + 1) // 2)
            while t != self.one:
                i, tt = 0, t
                while tt != self.one:
                    tt = self.mul(tt, tt)
                    i += 1
                b = self.pow(c, 1 << (m - i - 1))
                m, c = i, self.mul(b, b)
                t, r = self.mul(t, self.mul(b, b)), self.mul(r, b)
        other = self.neg(r)
        return min(r, other, key=self.sort_key)

    def elements(self) -> Iterator[tuple]:
        base_elems = list(self.base.elements())
        for coeffs in itertools.product(base_elems, repeat=self.k):
            yield tuple(coeffs)

    def random_element(self, rng):
        return tuple(self.base.random_element(rng) for _ in range(self.k))

    def sort_key(self, a):
        return tuple(self.base.sort_key(c) for c in a)

    def __eq__(self, other):
        return (isinstance(other, ExtensionField)
                and other.base == self.base and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("ExtensionField", self.base, self.modulus))

    def __repr__(self):
        if self.order is not None:
            return "GF(%d^%d over %r)" % (self.base.order, self.k, self.base)
        return "Ext(%r, deg %d)" % (self.base, self.k)


def _is_irreducible_over_prime(F: PrimeField, f) -> bool:
    # x^(p^k) = x mod f, and x^(p^(k/l)) - x coprime to f for prime l | k
    k = len(f) - 1
    p = F.p
    x = P.pmono(F, 1)
    if P.ppow_mod(F, x, p**k, f) != P.pmod(F, x, f):
        return False
    ell = 2
    kk = k
    checked = set()
    while ell * ell <= kk:
        if kk % ell == 0:
            checked.add(ell)
            while kk % ell == 0:
                kk //= ell
        ell += 1
    if kk > 1:
        checked.add(kk)
    for ell in checked:
        g = P.psub(F, P.ppow_mod(F, x, p ** (k // ell), f), x)
        if len(P.pgcd(F, g, f)) != 1:
            return False
    return True


def GF(p: int, k: int = 1):
    """The field with p^k elements; k = 1 gives a PrimeField.

    For k = 2 the modulus is x^2 - c (c the smallest non-square) when p is
    odd and x^2 + x + 1 for p = 2.  Larger k searches monic polynomials in
    lexicographic order, so the construction is deterministic.
    """
    base = PrimeField(p)
    if k == 1:
        return base
    if k == 2:
        if p == 2:
            return ExtensionField(base, (1, 1, 1))
        c = base._smallest_nonsquare()
        return ExtensionField(base, ((-c) % p, 0, 1))
    for tail in itertools.product(range(p), repeat=k):
        f = tuple(tail) + (1,)
        if _is_irreducible_over_prime(base, f):
            return ExtensionField(base, f)
    raise RuntimeError("no irreducible found")  # unreachable
