"""Automorphism and conjugation solvers over Q: fixed points and CRT lifting."""

import random
from fractions import Fraction

from autconj.domains import QQ
from autconj.exact import l2_norm_sq
from autconj.groups import is_closed
from autconj.projline import Mobius, RatMap, conjugate_map, is_automorphism, is_conjugating, random_map_qq
from autconj.qqsolvers import (
    aut_qq,
    conj_qq,
    conjugacy_height_bound,
    invariant_int_form,
)


def _zmap(num, den):
    return RatMap.from_rational_function(QQ, num, den)


Z2 = _zmap((0, 0, 1), (1,))
Z3 = _zmap((0, 0, 0, 1), (1,))
TWO_Z5 = _zmap((0, 0, 0, 0, 0, 2), (1,))

def _tset(*rows):
    return {Mobius(QQ, *r).t for r in rows}


# aut = {z, -z/(z+1), 1/z, -z-1, (-z-1)/z, -1/(z+1)} for the degree-2 map below
SIX = _zmap((0, 2, 1), (-1, -2))
SIX_SET = _tset(
    (1, 0, 0, 1),
    (-1, 0, 1, 1),
    (0, 1, 1, 0),
    (-1, -1, 0, 1),
    (-1, -1, 1, 0),
    (0, -1, 1, 1),
)

C4 = _zmap((7, -3, -21, 1), (1, 21, -3, -7))
C4_SET = _tset((1, 0, 0, 1), (0, -1, 1, 0), (1, -1, 1, 1), (-1, -1, 1, -1))
MINUS_SET = _tset((1, 0, 0, 1), (-1, 0, 0, 1))


def test_invariant_int_form():
    f = invariant_int_form(Z2)
    # the fixed points 0, 1, infinity give XY(X - Y) up to sign
    assert l2_norm_sq(f) == 3 or l2_norm_sq(f) == 2
    f2 = invariant_int_form(_zmap((0, 0, 1), (1,)))
    assert f2 == f


def test_height_bound_small_maps():
    assert conjugacy_height_bound(Z2) == 48
    assert conjugacy_height_bound(Z3) == 48


def test_aut_fixed_points_six_elements():
    res = aut_qq(SIX, algorithm="fixed-points")
    assert {m.t for m in res.elements} == SIX_SET
    assert res.group == "D6"
    assert res.algorithm == "fixed-points"


def test_aut_fixed_points_c4():
    res = aut_qq(C4, algorithm="fixed-points")
    assert {m.t for m in res.elements} == C4_SET
    assert res.group == "C4"


def test_aut_two_z5():
    res = aut_qq(TWO_Z5)
    assert {m.t for m in res.elements} == MINUS_SET
    assert res.group == "C2"


def test_aut_crt_matches_fixed_points():
    for phi, want in ((SIX, SIX_SET), (C4, C4_SET), (TWO_Z5, MINUS_SET)):
        res = aut_qq(phi, algorithm="crt")
        assert {m.t for m in res.elements} == want
        assert res.algorithm == "crt"
        assert res.primes and res.fibers
        assert len(res.primes) == len(res.fibers)
        assert res.height_bound >= max(m.height() for m in res.elements)


def test_aut_crt_monomial_with_bad_primes():
    # 345025251 = 3^5 * 17^5; the nontrivial automorphism is z -> 1/(2601 z)
    phi = _zmap((0, 0, 0, 0, 0, 0, 345025251), (1,))
    res = aut_qq(phi, algorithm="crt")
    assert {m.t for m in res.elements} == {(1, 0, 0, 1), (0, 1, 2601, 0)}
    assert res.group == "C2"
    for p in res.primes:
        assert p not in (2, 3, 17)


def test_aut_elements_verify_and_close():
    for phi in (SIX, C4, TWO_Z5):
        res = aut_qq(phi)
        for s in res.elements:
            assert is_automorphism(s, phi)
        assert is_closed(list(res.elements))


def test_aut_auto_dispatch():
    assert aut_qq(Z2).algorithm == "fixed-points"
    deg21 = _zmap((0,) * 21 + (1,), (1,))
    # degree above the fixed-point comfort zone falls back to CRT
    assert aut_qq(deg21).algorithm == "crt"


def test_aut_rejects_finite_field_input():
    from autconj.finitefield import GF

    K = GF(5)
    phi = RatMap.from_rational_function(K, (0, 0, 1), (1,))
    try:
        aut_qq(phi)
        assert False
    except TypeError:
        pass


def test_aut_random_crt_agrees_with_fixed_points():
    rng = random.Random(67)
    for _ in range(10):
        d = rng.randrange(2, 5)
        phi = random_map_qq(d, 20, rng)
        a = aut_qq(phi, algorithm="fixed-points")
        b = aut_qq(phi, algorithm="crt")
        assert {m.t for m in a.elements} == {m.t for m in b.elements}


def test_conj_is_coset_of_aut():
    f = Mobius(QQ, 1, 2, 1, 1)
    psi = conjugate_map(SIX, f)
    res = conj_qq(SIX, psi)
    assert res.is_conjugate
    aut = aut_qq(SIX)
    assert len(res.elements) == len(aut.elements)
    for s in res.elements:
        assert is_conjugating(s, SIX, psi)
    got = {m.t for m in res.elements}
    want = {f.compose(a).t for a in aut.elements}
    assert got == want


def test_conj_twist_of_z3():
    f = Mobius(QQ, 3, -7, 5, -1)
    psi = conjugate_map(Z3, f)
    res = conj_qq(Z3, psi)
    assert res.is_conjugate
    assert len(res.elements) == 4
    for s in res.elements:
        assert is_conjugating(s, Z3, psi)
    assert f.t in {m.t for m in res.elements}


def test_conj_rules_out_z2_vs_z2_plus_1():
    psi = _zmap((1, 0, 1), (1,))
    res = conj_qq(Z2, psi)
    assert not res.is_conjugate
    assert res.elements == ()
    assert res.reason


def test_conj_degree_mismatch():
    res = conj_qq(Z2, Z3)
    assert not res.is_conjugate
    assert res.reason


def test_conj_self_is_aut():
    res = conj_qq(Z3, Z3)
    aut = aut_qq(Z3)
    assert {m.t for m in res.elements} == {m.t for m in aut.elements}


def test_conj_without_coset_reuse():
    f = Mobius(QQ, 1, 0, 1, 1)
    psi = conjugate_map(C4, f)
    a = conj_qq(C4, psi)
    b = conj_qq(C4, psi, reuse_coset=False)
    assert {m.t for m in a.elements} == {m.t for m in b.elements}


def test_conj_respects_height_bound():
    f = Mobius(QQ, 1, 2, 1, 1)
    psi = conjugate_map(SIX, f)
    res = conj_qq(SIX, psi)
    assert res.height_bound is not None
    for s in res.elements:
        assert s.height() <= res.height_bound


def test_good_reduction_lands_in_fiber():
    from autconj.ffsolvers import _aut_ff_fixed_points

    res = aut_qq(SIX)
    for p in (5, 7, 11):
        assert SIX.is_good_prime(p)
        fib = {m.t for m in _aut_ff_fixed_points(SIX.reduce_mod_p(p))}
        for s in res.elements:
            sp = Mobius(SIX.reduce_mod_p(p).K, *[c % p for c in s.coeff_ints()])
            assert sp.t in fib
