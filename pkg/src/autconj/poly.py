"""Dense univariate polynomials and binary forms over a domain context.

Polynomials are stripped tuples of coefficients, lowest degree first; the
zero polynomial is ().  Binary forms of declared degree D are full tuples
of length D + 1 with c[i] the coefficient of X^i Y^(D-i); they are never
stripped, since the declared degree carries the multiplicity of the root
at infinity (c[D] = 0 iff (1:0) is a root).

Every function takes the domain K first.  K only needs the small context
interface from domains.py, so this layer works uniformly over Q, Z, prime
fields and extension towers.
"""

from __future__ import annotations

import math
from typing import Sequence

Poly = tuple
Form = tuple


def pstrip(K, f) -> Poly:
    f = tuple(f)
    n = len(f)
    while n > 0 and f[n - 1] == K.zero:
        n -= 1
    return f[:n]


def pdeg(f) -> int:
    """Degree, with deg 0 = -1 by convention."""
    return len(f) - 1


def pconst(K, c) -> Poly:
    return () if c == K.zero else (c,)


def pmono(K, n: int, c=None) -> Poly:
    """c * x^n (c defaults to 1)."""
    if c is None:
        c = K.one
    if c == K.zero:
        return ()
    return (K.zero,) * n + (c,)


def padd(K, f, g) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = K.add(out[i], c)
    return pstrip(K, out)


def pneg(K, f) -> Poly:
    return tuple(K.neg(c) for c in f)


def psub(K, f, g) -> Poly:
    return padd(K, f, pneg(K, g))


def pscale(K, f, c) -> Poly:
    if c == K.zero:
        return ()
    return pstrip(K, tuple(K.mul(c, a) for a in f))


def pmul(K, f, g) -> Poly:
    if not f or not g:
        return ()
    out = [K.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == K.zero:
            continue
        for j, b in enumerate(g):
            out[i + j] = K.add(out[i + j], K.mul(a, b))
    return pstrip(K, out)


def pdivmod(K, f, g) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if not K.is_field:
        raise ValueError("division needs a field domain")
    f = list(f)
    dg = len(g) - 1
    lg_inv = K.inv(g[-1])
    q = [K.zero] * max(len(f) - dg, 0)
    for i in range(len(f) - 1, dg - 1, -1):
        c = K.mul(f[i], lg_inv)
        if c == K.zero:
            continue
        q[i - dg] = c
        for j, b in enumerate(g):
            f[i - dg + j] = K.sub(f[i - dg + j], K.mul(c, b))
    return pstrip(K, q), pstrip(K, f)


def pquo(K, f, g) -> Poly:
    return pdivmod(K, f, g)[0]


def pmod(K, f, g) -> Poly:
    return pdivmod(K, f, g)[1]


def ppow_mod(K, f, e: int, m) -> Poly:
    if e < 0:
        raise ValueError("negative exponent")
    f = pmod(K, f, m)
    out = pmod(K, (K.one,), m)
    while e:
        if e & 1:
            out = pmod(K, pmul(K, out, f), m)
        f = pmod(K, pmul(K, f, f), m)
        e >>= 1
    return out


def pmonic(K, f) -> Poly:
    if not f:
        return f
    if f[-1] == K.one:
        return tuple(f)
    return pscale(K, f, K.inv(f[-1]))


def pgcd(K, f, g) -> Poly:
    while g:
        f, g = g, pmod(K, f, g)
    return pmonic(K, f)


def pxgcd(K, f, g) -> tuple[Poly, Poly, Poly]:
    """(d, s, t) with s*f + t*g = d, d monic (or zero)."""
    r0, r1 = tuple(f), tuple(g)
    s0, s1 = (K.one,), ()
    t0, t1 = (), (K.one,)
    while r1:
        q, r = pdivmod(K, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, psub(K, s0, pmul(K, q, s1))
        t0, t1 = t1, psub(K, t0, pmul(K, q, t1))
    if r0 and r0[-1] != K.one:
        c = K.inv(r0[-1])
        r0, s0, t0 = pscale(K, r0, c), pscale(K, s0, c), pscale(K, t0, c)
    return r0, s0, t0


def pderiv(K, f) -> Poly:
    return pstrip(K, tuple(K.mul(K.from_int(i), c) for i, c in enumerate(f))[1:])


def peval(K, f, x):
    acc = K.zero
    for c in reversed(f):
        acc = K.add(K.mul(acc, x), c)
    return acc


def pcompose(K, f, g) -> Poly:
    """f(g(x)) by Horner."""
    acc: Poly = ()
    for c in reversed(f):
        acc = padd(K, pmul(K, acc, g), pconst(K, c))
    return acc


# ---------------------------------------------------------------------------
# integer-coefficient helpers

def content(f: Sequence[int]) -> int:
    g = 0
    for c in f:
        g = math.gcd(g, c)
    return g


def primitive(f: Sequence[int]) -> tuple[int, ...]:
    """Divide by content and normalize the first nonzero coefficient > 0."""
    g = content(f)
    if g == 0:
        return tuple(f)
    out = [c // g for c in f]
    for c in out:
        if c:
            if c < 0:
                out = [-x for x in out]
            break
    return tuple(out)


# ---------------------------------------------------------------------------
# binary forms

def form_degree(F) -> int:
    return len(F) - 1


def dehom(K, F) -> Poly:
    """F(x, 1) as a polynomial; drops the Y-multiplicity information."""
    return pstrip(K, F)


def form_ymult(K, F) -> int:
    """Multiplicity of the root at infinity, i.e. the exact power of Y in F."""
    d = pstrip(K, F)
    if not d:
        raise ValueError("zero form")
    return len(F) - len(d)


def form_mul(K, F, G) -> Form:
    out = [K.zero] * (len(F) + len(G) - 1)
    for i, a in enumerate(F):
        if a == K.zero:
            continue
        for j, b in enumerate(G):
            out[i + j] = K.add(out[i + j], K.mul(a, b))
    return tuple(out)


def form_scale(K, F, c) -> Form:
    return tuple(K.mul(c, a) for a in F)


def form_eval(K, F, x0, x1):
    d = len(F) - 1
    y_pows = [K.one]
    for _ in range(d):
        y_pows.append(K.mul(y_pows[-1], x1))
    acc = K.zero
    xp = K.one
    for i, c in enumerate(F):
        if c != K.zero:
            acc = K.add(acc, K.mul(K.mul(c, xp), y_pows[d - i]))
        if i < d:
            xp = K.mul(xp, x0)
    return acc


def form_compose(K, F, S0, S1) -> Form:
    """F(S0, S1) for forms S0, S1 of the same declared degree."""
    if len(S0) != len(S1):
        raise ValueError("component forms must share a degree")
    d = len(F) - 1
    e = len(S0) - 1
    pow0: list[Form] = [(K.one,)]
    pow1: list[Form] = [(K.one,)]
    for _ in range(d):
        pow0.append(form_mul(K, pow0[-1], S0))
        pow1.append(form_mul(K, pow1[-1], S1))
    out = [K.zero] * (d * e + 1)
    for i, c in enumerate(F):
        if c == K.zero:
            continue
        term = form_mul(K, pow0[i], pow1[d - i])
        for j, t in enumerate(term):
            out[j] = K.add(out[j], K.mul(c, t))
    return tuple(out)


# ---------------------------------------------------------------------------
# resultant of two binary forms of declared degree d, integer coefficients

def resultant_forms(F: Sequence[int], G: Sequence[int], d: int) -> int:
    """Sylvester resultant at declared degree d (Bareiss, exact)."""
    if len(F) != d + 1 or len(G) != d + 1:
        raise ValueError("forms must have declared degree %d" % d)
    n = 2 * d
    fa = list(reversed(F))          # descending in X
    ga = list(reversed(G))
    m = []
    for j in range(d):
        m.append([0] * j + fa + [0] * (d - 1 - j))
    for j in range(d):
        m.append([0] * j + ga + [0] * (d - 1 - j))
    # Bareiss fraction-free elimination
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
