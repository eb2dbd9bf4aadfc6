"""Factorization toolbox.

Finite fields get the full classical stack: Musser squarefree decomposition
(with p-th root descent), distinct-degree splitting, Cantor-Zassenhaus
equal-degree splitting (trace map in characteristic 2).

Over Q we only ever need factors of degree <= 2 (fixed-point and 2-periodic
data of a rational map live in at worst quadratic extensions), so instead
of a general rational factorizer there is small_factors_qq: reduce mod a
good prime, pull out the part whose irreducible factors have degree <= 2
with one gcd against x^(p^2) - x, Hensel-lift those factors, and test the
symmetric lifts for exact divisibility.  Mignotte's bound says a monic
factor g with deg g <= 2 of F has |coeffs of lc(F)*g| <= 2*||F||_2, so
lifting past 4*||F||_2 identifies every candidate uniquely.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

from .domains import QQ
from .finitefield import PrimeField
from . import poly as P

_CZ_SEED = 0xC0FFEE


def pth_root(K, f):
    """Inverse of x -> x^p on polynomials with zero derivative (K finite)."""
    p = K.char
    e = K.order // p
    out = []
    for i, c in enumerate(f):
        if i % p == 0:
            out.append(K.pow(c, e))
        elif c != K.zero:
            raise ValueError("not a p-th power")
    return P.pstrip(K, out)


def squarefree_decomposition(K, f) -> dict:
    """{multiplicity: monic product of the factors with that multiplicity}."""
    f = P.pmonic(K, f)
    out: dict[int, tuple] = {}

    def merge(mult, g):
        if P.pdeg(g) > 0:
            out[mult] = P.pmul(K, out.get(mult, (K.one,)), g)

    def run(f, scale):
        if P.pdeg(f) < 1:
            return
        fp = P.pderiv(K, f)
        if not fp:
            run(pth_root(K, f), scale * K.char)
            return
        c = P.pgcd(K, f, fp)
        w = P.pquo(K, f, c)
        i = 1
        while P.pdeg(w) > 0:
            y = P.pgcd(K, w, c)
            merge(i * scale, P.pquo(K, w, y))
            w = y
            c = P.pquo(K, c, y)
            i += 1
        if P.pdeg(c) > 0:
            run(pth_root(K, c), scale * K.char)

    run(f, 1)
    return out


def squarefree_part(K, f):
    """Monic product of the distinct irreducible factors."""
    parts = squarefree_decomposition(K, f)
    out = (K.one,)
    for mult in sorted(parts):
        out = P.pmul(K, out, parts[mult])
    return out


def distinct_degree(K, f) -> list[tuple[int, tuple]]:
    """[(d, product of irreducible factors of degree d)], f monic squarefree."""
    q = K.order
    out = []
    cur = P.pmonic(K, f)
    h = P.pmod(K, P.pmono(K, 1), cur)
    d = 0
    while P.pdeg(cur) > 2 * d + 1:
        d += 1
        h = P.ppow_mod(K, h, q, cur)
        g = P.pgcd(K, P.psub(K, h, P.pmono(K, 1)), cur)
        if P.pdeg(g) > 0:
            out.append((d, g))
            cur = P.pquo(K, cur, g)
            h = P.pmod(K, h, cur)
    if P.pdeg(cur) > 0:
        out.append((P.pdeg(cur), cur))
    return out


def equal_degree(K, f, d: int, rng) -> list[tuple]:
    """Split a monic squarefree product of degree-d irreducibles."""
    n = P.pdeg(f)
    if n == d:
        return [f]
    q = K.order
    while True:
        a = P.pstrip(K, tuple(K.random_element(rng) for _ in range(n)))
        if P.pdeg(a) < 1:
            continue
        g = P.pgcd(K, a, f)
        if 0 < P.pdeg(g) < n:
            break
        if q % 2 == 1:
            b = P.ppow_mod(K, a, (q**d - 1) // 2, f)
            g = P.pgcd(K, P.psub(K, b, (K.one,)), f)
        else:
            # trace map over GF(2): sum of a^(2^i), i < log2(q^d)
            md = (q**d).bit_length() - 1
            t = a
            s = a
            for _ in range(md - 1):
                s = P.pmod(K, P.pmul(K, s, s), f)
                t = P.padd(K, t, s)
            g = P.pgcd(K, t, f)
        if 0 < P.pdeg(g) < n:
            break
    return equal_degree(K, g, d, rng) + equal_degree(K, P.pquo(K, f, g), d, rng)


def factor_ff(K, f, rng=None) -> list[tuple[tuple, int]]:
    """Monic irreducible factorization over a finite field.

    Returns [(factor, multiplicity)] sorted by degree then coefficients;
    the unit is dropped.  Deterministic for a fixed seed.
    """
    if rng is None:
        rng = random.Random(_CZ_SEED)
    if P.pdeg(f) < 1:
        return []
    out = []
    for mult, part in squarefree_decomposition(K, f).items():
        for d, prod in distinct_degree(K, part):
            for g in equal_degree(K, prod, d, rng):
                out.append((g, mult))
    out.sort(key=lambda t: (P.pdeg(t[0]), [K.sort_key(c) for c in t[0]]))
    return out


def factors_up_to(K, f, bound: int, rng=None) -> list[tuple[tuple, int]]:
    """Monic irreducible factors of degree <= bound only, with multiplicity.

    Stops the distinct-degree sieve at the bound and discards the cofactor
    unfactored, so the cost scales with bound, not with deg f.  The
    dynatomic polynomials this feeds are large but only their linear and
    quadratic factors ever matter.
    """
    if rng is None:
        rng = random.Random(_CZ_SEED)
    if P.pdeg(f) < 1:
        return []
    q = K.order
    out = []
    for mult, part in squarefree_decomposition(K, f).items():
        cur = P.pmonic(K, part)
        h = P.pmod(K, P.pmono(K, 1), cur)
        d = 0
        while d < bound and P.pdeg(cur) > 2 * d + 1:
            d += 1
            h = P.ppow_mod(K, h, q, cur)
            g = P.pgcd(K, P.psub(K, h, P.pmono(K, 1)), cur)
            if P.pdeg(g) > 0:
                for w in equal_degree(K, g, d, rng):
                    out.append((w, mult))
                cur = P.pquo(K, cur, g)
                h = P.pmod(K, h, cur)
        # anything left with all factors past d is irreducible only if it
        # fits under 2d + 1; either way it matters only below the bound
        if 0 < P.pdeg(cur) <= bound:
            out.append((cur, mult))
    out.sort(key=lambda t: (P.pdeg(t[0]), [K.sort_key(c) for c in t[0]]))
    return out


def roots_ff(K, f) -> list[tuple]:
    """[(root, multiplicity)] over a finite field K, sorted."""
    w = squarefree_part(K, f)
    xq = P.ppow_mod(K, P.pmono(K, 1), K.order, w)
    lin = P.pgcd(K, P.psub(K, xq, P.pmono(K, 1)), w)
    roots = []
    if P.pdeg(lin) >= 1:
        rng = random.Random(_CZ_SEED)
        for g in equal_degree(K, lin, 1, rng):
            roots.append(K.neg(g[0]))
    out = []
    for r in roots:
        lin_factor = (K.neg(r), K.one)
        mult = 0
        cur = f
        while True:
            q, rem = P.pdivmod(K, cur, lin_factor)
            if rem:
                break
            mult += 1
            cur = q
        out.append((r, mult))
    out.sort(key=lambda t: K.sort_key(t[0]))
    return out


def factorization_type(K, f) -> tuple:
    """Multiset of (degree, multiplicity) over the ground field, sorted."""
    out = []
    for mult, part in squarefree_decomposition(K, f).items():
        for d, prod in distinct_degree(K, part):
            out.extend([(d, mult)] * (P.pdeg(prod) // d))
    return tuple(sorted(out))


def is_irreducible(K, f) -> bool:
    """Irreducibility over a finite field via the Frobenius criterion."""
    n = P.pdeg(f)
    if n < 1:
        return False
    if n == 1:
        return True
    q = K.order
    x = P.pmono(K, 1)
    if P.ppow_mod(K, x, q**n, f) != P.pmod(K, x, f):
        return False
    for ell in _prime_divisors(n):
        g = P.psub(K, P.ppow_mod(K, x, q ** (n // ell), f), x)
        if P.pdeg(P.pgcd(K, g, f)) != 0:
            return False
    return True


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def irreducible_poly(K, n: int) -> tuple:
    """A monic irreducible of degree n over finite K.

    Deterministic for a given (field, n): sparse binomials and trinomials
    in element order first, then a fixed-seed random search (the density
    of irreducibles is ~1/n, so this ends fast).
    """
    if n == 1:
        return (K.zero, K.one)
    elems = list(K.elements())
    for a in elems:
        f = (a,) + (K.zero,) * (n - 1) + (K.one,)
        if is_irreducible(K, f):
            return f
    for b in elems:
        for a in elems:
            f = (a, b) + (K.zero,) * (n - 2) + (K.one,)
            if is_irreducible(K, f):
                return f
    rng = random.Random(_CZ_SEED * (K.order * 1009 + n))
    while True:
        f = tuple(rng.choice(elems) for _ in range(n)) + (K.one,)
        if is_irreducible(K, f):
            return f


# ---------------------------------------------------------------------------
# forms

def form_radical(K, F) -> tuple:
    """Squarefree form with the same roots in P^1, including infinity."""
    g = squarefree_part(K, P.dehom(K, F))
    if P.form_ymult(K, F) > 0:
        return tuple(g) + (K.zero,)
    return tuple(g)


def form_distinct_root_count(K, F) -> int:
    """Number of distinct roots in P^1 over the algebraic closure."""
    # the radical's declared degree already counts the slot at infinity
    return P.pdeg(form_radical(K, F))


def form_factorization_type(K, F) -> tuple:
    """factorization_type of the dehomogenization, plus a (1, ymult) entry."""
    out = list(factorization_type(K, P.dehom(K, F)))
    m = P.form_ymult(K, F)
    if m > 0:
        out.append((1, m))
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# rational factors of degree <= 2 via mod-p reduction and Hensel lifting

def _zmul(f, g, m):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % m
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _zsub(f, g, m):
    out = list(f) + [0] * (len(g) - len(f))
    for i, c in enumerate(g):
        out[i] = (out[i] - c) % m
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _zdivmod_monic(f, g, m):
    """Divide by monic g in (Z/m)[x]."""
    f = list(f)
    dg = len(g) - 1
    q = [0] * max(len(f) - dg, 0)
    for i in range(len(f) - 1, dg - 1, -1):
        c = f[i] % m
        if c:
            q[i - dg] = c
            for j, b in enumerate(g):
                f[i - dg + j] = (f[i - dg + j] - c * b) % m
    while q and q[-1] == 0:
        q.pop()
    r = f[:dg]
    while r and r[-1] == 0:
        r.pop()
    return tuple(q), tuple(r)


def _sym(c, m):
    c %= m
    return c - m if 2 * c > m else c


def _hensel_pair(F, g, h, t, p, target):
    """Lift F = g*h from mod p to mod p^(2^j) >= target; g monic.

    t is the inverse of h mod (g, p).  Returns (g, h, modulus).
    """
    m = p
    while m < target:
        m2 = m * m
        e = _zsub(tuple(c % m2 for c in F), _zmul(g, h, m2), m2)
        dg = _zdivmod_monic(_zmul(t, e, m2), g, m2)[1]
        g2 = tuple((a + b) % m2 for a, b in
                   zip(g, list(dg) + [0] * (len(g) - len(dg))))
        num = _zsub(e, _zmul(h, dg, m2), m2)
        dh, rem = _zdivmod_monic(num, g2, m2)
        if rem:
            raise ArithmeticError("hensel step lost divisibility")
        h2 = list(h)
        for i, c in enumerate(dh):
            if i < len(h2):
                h2[i] = (h2[i] + c) % m2
            else:
                h2.append(c % m2)
        h2 = tuple(h2)
        # newton-update the inverse: t <- t*(2 - h2*t) mod (g2, m2)
        ht = _zdivmod_monic(_zmul(h2, t, m2), g2, m2)[1]
        two_minus = _zsub((2,), ht, m2)
        t = _zdivmod_monic(_zmul(t, two_minus, m2), g2, m2)[1]
        g, h, m = g2, h2, m2
    return g, h, m


def _monic_qq(f):
    lead = Fraction(f[-1])
    return tuple(Fraction(c) / lead for c in f)


def _exact_divides(cand, F) -> bool:
    """cand | F in Q[x]; both given as integer coefficient tuples."""
    fq = tuple(Fraction(c) for c in F)
    gq = tuple(Fraction(c) for c in cand)
    return not P.pdivmod(QQ, fq, gq)[1]


def _squarefree_int(F):
    """Primitive integer squarefree part of an integer polynomial."""
    fq = tuple(Fraction(c) for c in F)
    g = P.pgcd(QQ, fq, P.pderiv(QQ, fq))
    w = P.pquo(QQ, fq, g)
    den = math.lcm(*(c.denominator for c in w))
    return P.primitive(tuple(int(c * den) for c in w))


def squarefree_part_qq(f) -> tuple[int, ...]:
    """Squarefree part of a rational polynomial, as a primitive integer
    tuple.

    Probes a few primes first: a squarefree reduction with unit leading
    coefficient certifies f itself is squarefree, skipping the rational
    gcd, whose coefficient growth is brutal at the degrees the dynatomic
    polynomials reach.
    """
    fq = P.pstrip(QQ, tuple(Fraction(c) for c in f))
    if P.pdeg(fq) < 1:
        return (1,) if fq else ()
    den = math.lcm(*(c.denominator for c in fq))
    fi = P.primitive(tuple(int(c * den) for c in fq))
    probe = 3
    for _ in range(25):
        probe = _next_odd_prime(probe)
        if fi[-1] % probe == 0:
            continue
        Kp = PrimeField(probe)
        fbar = tuple(c % probe for c in fi)
        if P.pdeg(P.pgcd(Kp, fbar, P.pderiv(Kp, fbar))) == 0:
            return fi
    return _squarefree_int(fi)


def form_radical_qq(F) -> tuple[int, ...]:
    """Primitive integer squarefree form with the same projective roots."""
    g = squarefree_part_qq(P.dehom(QQ, F))
    if P.form_ymult(QQ, F) > 0:
        return tuple(g) + (0,)
    return tuple(g)


def small_factors_qq(F) -> tuple[list, list]:
    """Monic rational factors of degree 1 and 2 of an integer polynomial.

    Returns (linears, quadratics): linears as monic (c0, 1) Fraction pairs,
    quadratics as monic irreducible (c0, c1, 1) Fraction triples.  Each
    distinct factor is reported once, without multiplicity.
    """
    fq = P.pstrip(QQ, tuple(Fraction(c) for c in F))
    if P.pdeg(fq) < 1:
        return [], []
    Fs = squarefree_part_qq(fq)
    n = P.pdeg(Fs)
    linears: list[tuple] = []
    quads: list[tuple] = []

    def classify(monic):
        if len(monic) == 2:
            if monic not in linears:
                linears.append(monic)
            return
        c0, c1, _ = monic
        disc = c1 * c1 - 4 * c0
        if QQ.is_square(disc):
            r = QQ.sqrt(disc)
            for root in ((-c1 + r) / 2, (-c1 - r) / 2):
                lin = (-root, Fraction(1))
                if lin not in linears:
                    linears.append(lin)
        elif monic not in quads:
            quads.append(monic)

    if n <= 2:
        classify(_monic_qq(tuple(Fraction(c) for c in Fs)))
        linears.sort()
        quads.sort()
        return linears, quads

    # pick a good small prime: lc stays a unit and the reduction stays
    # squarefree; among a few such primes prefer the smallest deg <= 2 part
    lead = Fs[-1]
    best = None
    p = 3
    tried = 0
    while tried < 3:
        p = _next_odd_prime(p)
        if lead % p == 0:
            continue
        K = PrimeField(p)
        fbar = tuple(c % p for c in Fs)
        if P.pdeg(P.pgcd(K, fbar, P.pderiv(K, fbar))) != 0:
            continue
        tried += 1
        part = _deg_le2_part(K, fbar)
        if best is None or P.pdeg(part) < P.pdeg(best[2]):
            best = (p, fbar, part)
        if P.pdeg(part) == 0:
            break
    if best is None:
        raise ArithmeticError("no good prime found")  # practically impossible
    p, fbar, part = best
    if P.pdeg(part) == 0:
        return [], []

    K = PrimeField(p)
    small = [g for g, _ in factor_ff(K, part)]
    # mignotte: coefficients of lc*g are bounded by 2*||Fs||_2
    target = 4 * (math.isqrt(sum(c * c for c in Fs)) + 1) + 1
    lifted = []
    for g in small:
        h = P.pquo(K, fbar, g)
        t = P.pxgcd(K, h, g)[1]
        t = P.pmod(K, t, g)
        gl, _, m = _hensel_pair(Fs, g, h, t, p, target)
        lifted.append((P.pdeg(g), gl, m))

    candidates = [(g, m) for d, g, m in lifted]
    lin_lifts = [(g, m) for d, g, m in lifted if d == 1]
    for (g1, m), (g2, _) in itertools.combinations(lin_lifts, 2):
        candidates.append((_zmul(g1, g2, m), m))

    seen = set()
    for g, m in candidates:
        c = tuple(_sym(lead * coef % m, m) for coef in g)
        c = P.primitive(c)
        if c in seen:
            continue
        seen.add(c)
        if _exact_divides(c, Fs):
            classify(_monic_qq(c))
    linears.sort()
    quads.sort()
    return linears, quads


def _next_odd_prime(p: int) -> int:
    from .ntheory import next_prime
    q = next_prime(p)
    return q if q > 2 else 3


def _deg_le2_part(K, f):
    """gcd(f, x^(p^2) - x): the factors of degree dividing 2."""
    x = P.pmono(K, 1)
    xp2 = _ppow_mod_int(f, K.p, K.p ** 2)
    return P.pgcd(K, P.psub(K, xp2, x), f)


def _ppow_mod_int(f, p: int, e: int):
    """x^e mod f over GF(p), with raw-int coefficient arithmetic."""
    def mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = (out[i + j] + x * y) % p
        return out

    def mod(a):
        a = list(a)
        df = len(f) - 1
        inv_l = pow(f[-1], -1, p)
        for i in range(len(a) - 1, df - 1, -1):
            c = a[i] * inv_l % p
            if c:
                for j in range(df + 1):
                    a[i - df + j] = (a[i - df + j] - c * f[j]) % p
        while a and a[-1] == 0:
            a.pop()
        return a

    base = mod([0, 1])
    out = mod([1])
    while e:
        if e & 1:
            out = mod(mul(out, base))
        base = mod(mul(base, base))
        e >>= 1
    return tuple(out)


def rational_roots_qq(F) -> list[tuple[Fraction, int]]:
    """[(root, multiplicity)] of an integer polynomial, over Q."""
    linears, _ = small_factors_qq(F)
    fq = P.pstrip(QQ, tuple(Fraction(c) for c in F))
    out = []
    for c0, _one in linears:
        root = -c0
        mult = 0
        cur = fq
        while True:
            q, rem = P.pdivmod(QQ, cur, (c0, Fraction(1)))
            if rem:
                break
            mult += 1
            cur = q
        out.append((root, mult))
    out.sort(key=lambda t: t[0])
    return out
