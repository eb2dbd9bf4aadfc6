"""Polynomial factorization over finite fields and partial factorization over Q."""

import random
from fractions import Fraction

import autconj.poly as P
from autconj.domains import QQ
from autconj.factor import (
    factor_ff,
    factorization_type,
    factors_up_to,
    form_distinct_root_count,
    form_factorization_type,
    form_radical,
    form_radical_qq,
    irreducible_poly,
    is_irreducible,
    rational_roots_qq,
    roots_ff,
    small_factors_qq,
    squarefree_decomposition,
    squarefree_part_qq,
)
from autconj.finitefield import GF


def _rand_monic(K, deg, rng):
    return tuple(K.random_element(rng) for _ in range(deg)) + (K.one,)


def test_factor_ff_examples():
    K = GF(5)
    # x^2 - 1 = (x + 1)(x + 4)
    assert factor_ff(K, (4, 0, 1)) == [((1, 1), 1), ((4, 1), 1)]
    # x^2 + 1 = (x + 2)(x + 3), i.e. roots 3 and 2
    assert factor_ff(K, (1, 0, 1)) == [((2, 1), 1), ((3, 1), 1)]
    # x^2 + 2 stays irreducible
    assert factor_ff(K, (2, 0, 1)) == [((2, 0, 1), 1)]
    assert is_irreducible(K, (2, 0, 1))


def test_factor_ff_roundtrip():
    rng = random.Random(3)
    for p in (2, 3, 5, 13):
        K = GF(p)
        for _ in range(40):
            f = _rand_monic(K, rng.randrange(1, 8), rng)
            fac = factor_ff(K, f)
            prod = (K.one,)
            for g, m in fac:
                assert is_irreducible(K, g)
                assert g[-1] == K.one
                for _ in range(m):
                    prod = P.pmul(K, prod, g)
            assert prod == P.pmonic(K, f)


def test_factor_ff_brute_irreducibility():
    # enumerate all monic quadratics and cubics over tiny fields
    for p in (2, 3):
        K = GF(p)
        els = list(K.elements())
        for deg in (2, 3):
            def all_polys(d):
                if d == 0:
                    yield ()
                    return
                for rest in all_polys(d - 1):
                    for c in els:
                        yield (c,) + rest
            for tail in all_polys(deg):
                f = tail + (K.one,)
                has_root = any(P.peval(K, f, x) == K.zero for x in els)
                if deg == 2:
                    want = not has_root
                else:
                    want = not has_root  # cubic reducible iff it has a root
                assert is_irreducible(K, f) == want, f


def test_roots_ff_examples():
    K5 = GF(5)
    assert roots_ff(K5, (4, 0, 1)) == [(1, 1), (4, 1)]
    assert roots_ff(K5, (1, 0, 1)) == [(2, 1), (3, 1)]
    assert roots_ff(K5, (2, 0, 1)) == []
    K3 = GF(3)
    assert roots_ff(K3, (0, 2, 0, 1)) == [(0, 1), (1, 1), (2, 1)]


def test_roots_ff_multiplicity():
    K = GF(7)
    # (x - 1)^2 (x - 3)
    f = P.pmul(K, P.pmul(K, (6, 1), (6, 1)), (4, 1))
    assert roots_ff(K, f) == [(1, 2), (3, 1)]


def test_factorization_type():
    K = GF(7)
    assert factorization_type(K, (1, 5, 1)) == ((1, 2),)
    K5 = GF(5)
    # x^2 + 1 splits; x^2 + 2 is inert
    assert factorization_type(K5, (1, 0, 1)) == ((1, 1), (1, 1))
    assert factorization_type(K5, (2, 0, 1)) == ((2, 1),)


def test_squarefree_decomposition():
    rng = random.Random(5)
    for p in (2, 3, 5):
        K = GF(p)
        for _ in range(30):
            f = _rand_monic(K, rng.randrange(1, 6), rng)
            parts = squarefree_decomposition(K, f)
            prod = (K.one,)
            for m, g in parts.items():
                # each part is squarefree: gcd(g, g') = 1
                d = P.pgcd(K, g, P.pderiv(K, g))
                assert P.pdeg(d) == 0
                for _ in range(m):
                    prod = P.pmul(K, prod, g)
            assert prod == P.pmonic(K, f)


def test_factors_up_to_agrees_with_full_factorization():
    rng = random.Random(7)
    for p in (3, 5, 11):
        K = GF(p)
        for _ in range(30):
            f = _rand_monic(K, rng.randrange(2, 9), rng)
            for bound in (1, 2):
                got = sorted(factors_up_to(K, f, bound))
                want = sorted((g, m) for g, m in factor_ff(K, f) if P.pdeg(g) <= bound)
                assert got == want, (p, f, bound)


def test_irreducible_poly_search():
    for q_args in ((2, None), (3, None), (5, None), (7, None)):
        K = GF(q_args[0])
        for n in (1, 2, 3, 5, 8):
            f = irreducible_poly(K, n)
            assert P.pdeg(f) == n
            assert f[-1] == K.one
            assert is_irreducible(K, f)
    # deterministic: same modulus on repeated calls
    K = GF(11)
    assert irreducible_poly(K, 6) == irreducible_poly(K, 6)


def test_form_radical_and_types():
    K5 = GF(5)
    # XY(Y - X): three distinct roots 0, 1 (wait: Y - X vanishes at (1:1)), infinity
    F = (0, 1, -1 % 5, 0)
    assert form_factorization_type(K5, F) == ((1, 1), (1, 1), (1, 1))
    assert form_distinct_root_count(K5, F) == 3
    rad = form_radical(K5, F)
    assert form_distinct_root_count(K5, rad) == 3
    # Y * (X^2 - XY + Y^2): the quadratic has no root mod 5
    G = P.form_mul(K5, (1, 0), (1, -1 % 5, 1))
    assert form_factorization_type(K5, G) == ((1, 1), (2, 1))
    # (x - 1)^2 as a degree-2 form over F7
    K7 = GF(7)
    H = (1, -2 % 7, 1)
    assert form_factorization_type(K7, H) == ((1, 2),)
    assert form_distinct_root_count(K7, H) == 1


def test_form_radical_drops_multiplicity():
    K = GF(7)
    rng = random.Random(9)
    for _ in range(30):
        # build a form with a planted square factor
        a = K.random_element(rng)
        lin = (a, K.one)
        g = tuple(K.random_element(rng) for _ in range(3))
        if not any(x != K.zero for x in g):
            continue
        F = P.form_mul(K, P.form_mul(K, lin, lin), g)
        rad = form_radical(K, F)
        ftype = form_factorization_type(K, rad)
        assert all(m == 1 for _, m in ftype)


def test_small_factors_qq_examples():
    lin, quad = small_factors_qq((-1, 0, 0, 0, 1))
    assert lin == [(Fraction(-1), Fraction(1)), (Fraction(1), Fraction(1))]
    assert quad == [(Fraction(1), Fraction(0), Fraction(1))]
    lin, quad = small_factors_qq((-2, 0, 0, 1))
    assert lin == [] and quad == []
    lin, quad = small_factors_qq((-1, 0, 0, 0, 0, 1))
    assert lin == [(Fraction(-1), Fraction(1))] and quad == []


def test_small_factors_qq_planted():
    rng = random.Random(11)
    for _ in range(25):
        # plant (x - r)(x^2 + c) with c > 0 (no real root, certainly irreducible
        # when c is not a perfect square times anything rational: keep c prime)
        r = Fraction(rng.randrange(-5, 6), rng.randrange(1, 4))
        c = rng.choice([2, 3, 5, 7])
        lin_f = (-r, Fraction(1))
        quad_f = (Fraction(c), Fraction(0), Fraction(1))
        f = P.pmul(QQ, lin_f, quad_f)
        cub = tuple(rng.randrange(1, 5) for _ in range(2)) + (1,)
        f = P.pmul(QQ, f, cub) if P.pdeg(P.pgcd(QQ, f, cub)) <= 0 else f
        lin, quad = small_factors_qq(f)
        assert any(P.pmod(QQ, f, g) == () for g in lin)
        assert lin_f in [P.pmonic(QQ, g) for g in lin]
        assert quad_f in [P.pmonic(QQ, g) for g in quad]


def test_small_factors_divide_input():
    rng = random.Random(13)
    for _ in range(30):
        f = tuple(Fraction(rng.randrange(-6, 7)) for _ in range(rng.randrange(3, 8)))
        f = P.pstrip(QQ, f)
        if P.pdeg(f) < 1:
            continue
        lin, quad = small_factors_qq(f)
        for g in lin + quad:
            assert P.pmod(QQ, f, g) == ()


def test_rational_roots_qq():
    assert rational_roots_qq((0, -1, 1)) == [(Fraction(0), 1), (Fraction(1), 1)]
    assert rational_roots_qq((1, 0, 1)) == []
    # 2x^2 - x - 1 = (2x + 1)(x - 1)
    assert rational_roots_qq((-1, -1, 2)) == [(Fraction(-1, 2), 1), (Fraction(1), 1)]


def test_rational_roots_qq_brute():
    rng = random.Random(15)
    for _ in range(30):
        f = tuple(rng.randrange(-8, 9) for _ in range(rng.randrange(2, 7)))
        f = P.pstrip(QQ, f)
        if P.pdeg(f) < 1:
            continue
        got = rational_roots_qq(f)
        for r, m in got:
            assert P.peval(QQ, f, r) == 0
        # rational root theorem scan for candidates
        a0 = f[0]
        an = f[-1]
        if a0 != 0:
            cands = set()
            for p in range(1, abs(int(a0)) + 1):
                if a0 % p:
                    continue
                for q in range(1, abs(int(an)) + 1):
                    if an % q:
                        continue
                    cands.add(Fraction(p, q))
                    cands.add(Fraction(-p, q))
            cands.add(Fraction(0))
            roots = {r for r in cands if P.peval(QQ, f, r) == 0}
            assert {r for r, _ in got} == roots


def test_squarefree_part_qq():
    assert squarefree_part_qq((1, 2, 1)) == (1, 1)
    rng = random.Random(17)
    for _ in range(25):
        g = tuple(rng.randrange(-4, 5) for _ in range(3))
        if P.pdeg(P.pstrip(QQ, g)) < 1:
            continue
        h = tuple(rng.randrange(-4, 5) for _ in range(3))
        if P.pdeg(P.pstrip(QQ, h)) < 1:
            continue
        f = P.pmul(QQ, P.pmul(QQ, g, g), h)
        sf = squarefree_part_qq(f)
        # the squarefree part divides f and is killed by neither square
        assert P.pmod(QQ, f, sf) == ()
        d = P.pgcd(QQ, sf, P.pderiv(QQ, sf))
        assert P.pdeg(d) == 0


def test_form_radical_qq():
    assert form_radical_qq((0, 1, -1, 0)) == (0, 1, -1, 0)
    # (XY)^2 -> XY up to sign
    sq = (0, 0, 1, 0, 0)
    rad = form_radical_qq(sq)
    assert rad in ((0, 1, 0), (0, -1, 0))
