"""Aut and Conj solvers over Q.

For Aut at moderate degree the field-generic fixed point engine runs
unchanged over Q (the char-p loop is vacuous and the multiplier lists
collapse to -1 and the quadratic cyclotomics).

The CRT engine handles everything else: reduce both maps at good primes
p >= 5, compute the finite fiber mod p, CRT all combinations of residue
vectors together, lift each to the short integer vectors of its
congruence lattice, and verify candidates exactly.  Reduction at a good
prime is injective on the rational answer, which yields the termination
tests:

  (a) the rational count matches some fiber count: nothing is missing;
  (b) group bookkeeping: the rational group order divides every fiber
      order, and each rational element of order n reduces to a fiber
      element of order n, so the fiber order statistics can certify that
      the subgroup found so far is everything;
  (c) once the combined modulus exceeds twice the squared height bound,
      the lattice enumeration provably sees every element.

An empty Conj fiber at any prime proves non-conjugacy immediately.
"""

from __future__ import annotations

import itertools
import math

from .domains import QQ
from .exact import crt_combine, l2_norm_sq, shortest_congruent_lift
from .factor import form_radical_qq
from .ffsolvers import _aut_ff_fixed_points, _sorted_mobius, aut_fixed_points, conj_ff
from .groups import closure, group_structure
from .ntheory import divisors, next_prime
from . import poly as P
from .projline import Mobius, RatMap, is_automorphism, is_conjugating
from .results import AutResult, ConjResult

PRIME_CAP = 40          # rounds before the CRT search gives up
COMBO_GUARD = 500_000   # hard cap on residue combinations per lifting pass
COMBO_BUDGET = 10_000   # lifting works on the cheapest primes within this
QQ_ORDERS = (2, 3, 4, 6)  # possible orders > 1 of a rational Mobius map

FIXED_POINT_DEGREE_LIMIT = 12


def invariant_int_form(phi: RatMap) -> tuple[int, ...]:
    """Primitive integer radical form cutting out the invariant point set
    (fixed points, pulled back through phi until at least three points)."""
    R = form_radical_qq(phi.fixed_point_form())
    stages = 0
    while P.pdeg(R) < 3:
        stages += 1
        if stages > 3:
            raise RuntimeError("invariant set did not reach three points")
        R = form_radical_qq(P.form_compose(QQ, R, phi.F0, phi.F1))
    return R


def conjugacy_height_bound(phi: RatMap, psi: RatMap | None = None) -> int:
    """ceil(6 * |f_T(phi)|_2^3 * |f_T(psi)|_2^3): every rational
    conjugation between the maps has height at most this."""
    a = l2_norm_sq(invariant_int_form(phi))
    b = a if psi is None or psi is phi else l2_norm_sq(invariant_int_form(psi))
    t = 36 * a**3 * b**3
    s = math.isqrt(t)
    return s if s * s == t else s + 1


def _good_primes(maps):
    bad = {2, 3}
    for m in maps:
        bad.update(m.bad_primes())
    p = 3
    while True:
        p = next_prime(p)
        if p not in bad:
            yield p


def _choose_fibers(vec_fibers):
    """The primes whose fibers get combined this round: smallest fibers
    first (bigger prime breaking ties, for a larger combined modulus),
    as many as keep the combination count within budget."""
    ranked = sorted(vec_fibers, key=lambda t: (len(t[1]), -t[0]))
    use = []
    total = 1
    for p, vecs in ranked:
        if use and total * len(vecs) > COMBO_BUDGET:
            break
        use.append((p, vecs))
        total *= len(vecs)
    return use


def _lift_candidates(vec_fibers, M):
    """CRT every combination of per-prime residue vectors and enumerate
    the short lifts of each, deduplicated.  Returns the candidates and
    the combined modulus actually used."""
    total = 1
    for _, vecs in vec_fibers:
        total *= len(vecs)
    if total > COMBO_GUARD:
        raise RuntimeError("fiber combinations exceed %d" % COMBO_GUARD)
    out = []
    seen = set()
    N = 1
    for p, _ in vec_fibers:
        N *= p
    for combo in itertools.product(*[vecs for _, vecs in vec_fibers]):
        pairs = [(vec, p) for vec, (p, _) in zip(combo, vec_fibers)]
        r, n = crt_combine(pairs)
        for v in shortest_congruent_lift(r, n, height_bound=M):
            if v not in seen:
                seen.add(v)
                out.append(v)
    return out, N


def _order_bound(fibers, g_order: int) -> int:
    """Largest group order compatible with every fiber: divides the gcd
    of the fiber sizes, is a multiple of the order found so far, and fits
    under 1 + (elements of each rational order available in every fiber)."""
    G = 0
    for _, fib in fibers:
        G = math.gcd(G, len(fib))
    caps = 0
    for n in QQ_ORDERS:
        caps += min(sum(1 for s in fib if s.order() == n) for _, fib in fibers)
    best = g_order
    for D in divisors(G):
        if D % g_order == 0 and D <= 1 + caps and D > best:
            best = D
    return best


def _aut_crt(phi: RatMap) -> AutResult:
    M = conjugacy_height_bound(phi)
    stream = _good_primes([phi])
    fibers = []
    vec_fibers = []
    found = {Mobius.identity(QQ)}
    rejected = set()
    last_used = None
    while True:
        if len(fibers) >= PRIME_CAP:
            raise RuntimeError("CRT search used %d primes without terminating"
                               % PRIME_CAP)
        p = next(stream)
        fib = _aut_ff_fixed_points(phi.reduce_mod_p(p))
        fibers.append((p, fib))
        vec_fibers.append((p, [s.t for s in fib]))
        use = _choose_fibers(vec_fibers)
        used_key = tuple(p for p, _ in use)
        N = 1
        if used_key != last_used:
            last_used = used_key
            cands, N = _lift_candidates(use, M)
            for v in cands:
                if v in rejected:
                    continue
                s = Mobius(QQ, *v)
                if s not in found and not is_automorphism(s, phi):
                    rejected.add(v)
                    continue
                found.add(s)
            found = set(closure(list(found)))
        if any(len(found) == len(fib) for _, fib in fibers):
            break
        if _order_bound(fibers, len(found)) == len(found):
            break
        if N > 2 * M * M:
            break
    els = _sorted_mobius(found)
    return AutResult(tuple(els), group_structure(els), "crt",
                     primes=tuple(p for p, _ in fibers),
                     fibers=tuple(len(fib) for _, fib in fibers),
                     height_bound=M)


def _conj_crt(phi: RatMap, psi: RatMap, reuse_coset: bool = True) -> ConjResult:
    if phi.d != psi.d:
        return ConjResult((), "crt", "degree mismatch")
    M = conjugacy_height_bound(phi, psi)
    stream = _good_primes([phi, psi])
    fibers = []
    vec_fibers = []
    found = set()
    rejected = set()
    last_used = None
    while True:
        if len(fibers) >= PRIME_CAP:
            raise RuntimeError("CRT search used %d primes without terminating"
                               % PRIME_CAP)
        p = next(stream)
        res = conj_ff(phi.reduce_mod_p(p), psi.reduce_mod_p(p), "auto")
        if not res.elements:
            reason = res.reason or "empty conjugating set mod %d" % p
            return ConjResult((), "crt", reason,
                              primes=tuple([q for q, _ in fibers] + [p]),
                              height_bound=M)
        fib = list(res.elements)
        fibers.append((p, fib))
        vec_fibers.append((p, [s.t for s in fib]))
        use = _choose_fibers(vec_fibers)
        used_key = tuple(p for p, _ in use)
        N = 1
        if used_key != last_used:
            last_used = used_key
            cands, N = _lift_candidates(use, M)
            for v in cands:
                if v in rejected:
                    continue
                s = Mobius(QQ, *v)
                if s in found:
                    continue
                if not is_conjugating(s, phi, psi):
                    rejected.add(v)
                    continue
                if reuse_coset:
                    # one rational conjugation f determines the rest:
                    # Conj = f . Aut(phi)
                    aut = aut_qq(phi)
                    els = _sorted_mobius(s.compose(a) for a in aut.elements)
                    return ConjResult(tuple(els), "crt", "",
                                      primes=tuple(q for q, _ in fibers),
                                      fibers=tuple(len(f) for _, f in fibers),
                                      height_bound=M)
                found.add(s)
        if found and any(len(found) == len(fib) for _, fib in fibers):
            break
        if N > 2 * M * M:
            break
    els = _sorted_mobius(found)
    reason = "" if els else "no conjugation of height at most %d" % M
    return ConjResult(tuple(els), "crt", reason,
                      primes=tuple(p for p, _ in fibers),
                      fibers=tuple(len(fib) for _, fib in fibers),
                      height_bound=M)


def aut_qq(phi: RatMap, algorithm: str = "auto") -> AutResult:
    """Automorphism group of a rational map over Q."""
    if phi.K is not QQ:
        raise TypeError("aut_qq needs a map over Q")
    if algorithm == "auto":
        algorithm = ("fixed-points" if phi.d <= FIXED_POINT_DEGREE_LIMIT
                     else "crt")
    if algorithm == "fixed-points":
        els = aut_fixed_points(phi)
        return AutResult(tuple(els), group_structure(els), "fixed-points")
    if algorithm == "crt":
        return _aut_crt(phi)
    raise ValueError("unknown algorithm %r" % algorithm)


def conj_qq(phi: RatMap, psi: RatMap, algorithm: str = "auto",
            reuse_coset: bool = True) -> ConjResult:
    """Conjugating set between two rational maps over Q."""
    if phi.K is not QQ or psi.K is not QQ:
        raise TypeError("conj_qq needs maps over Q")
    if algorithm == "auto":
        algorithm = "crt"
    if algorithm != "crt":
        raise ValueError("unknown algorithm %r" % algorithm)
    return _conj_crt(phi, psi, reuse_coset=reuse_coset)
