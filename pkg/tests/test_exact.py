"""Integer CRT, rational reconstruction, and short-lattice-vector lifting."""

import math
import random
from fractions import Fraction

from autconj.exact import (
    canonical_proj,
    crt_combine,
    crt_int,
    hnf_rows,
    l2_norm_sq,
    lll_reduce,
    proj_height,
    rational_reconstruct,
    shortest_congruent_lift,
)


def test_crt_int():
    x, n = crt_int([(2, 5), (3, 7)])
    assert n == 35 and x % 5 == 2 and x % 7 == 3
    rng = random.Random(11)
    for _ in range(300):
        m1 = rng.randrange(2, 80)
        m2 = rng.randrange(2, 80)
        if math.gcd(m1, m2) != 1:
            continue
        a1, a2 = rng.randrange(m1), rng.randrange(m2)
        x, n = crt_int([(a1, m1), (a2, m2)])
        assert n == m1 * m2 and 0 <= x < n
        assert x % m1 == a1 and x % m2 == a2


def test_crt_int_rejects_common_factor():
    try:
        crt_int([(1, 6), (1, 4)])
        assert False
    except ValueError:
        pass


def test_crt_combine_identity():
    vec, n = crt_combine([((1, 0, 0, 1), 5), ((1, 0, 0, 1), 7)])
    assert n == 35
    assert vec == (1, 0, 0, 1)


def test_crt_combine_scalar_ambiguity():
    # (1,0,0,1) mod 5 and (2,0,0,2) mod 7 name the same projective point,
    # and the combined class must too
    vec, n = crt_combine([((1, 0, 0, 1), 5), ((2, 0, 0, 2), 7)])
    assert n == 35
    # vec = lambda*(1,0,0,1) mod 35 for a unit lambda
    assert vec[1] == 0 and vec[2] == 0 and vec[0] == vec[3]
    assert math.gcd(vec[0], 35) == 1
    x, _ = crt_int([(1, 5), (2, 7)])
    assert x == 16


def test_crt_combine_antidiagonal():
    vec, n = crt_combine([((0, 1, 1, 0), 5), ((0, 1, 4, 0), 7)])
    assert n == 35
    # proportional to (0, 1, 2601, 0) mod 35: 2601 = 11 mod 35... check directly
    lam = vec[1]
    assert math.gcd(lam, 35) == 1
    assert vec[0] == 0 and vec[3] == 0
    assert (vec[2] - lam * 2601) % 35 == 0


def test_crt_combine_no_unit_coordinate():
    # every coordinate shares a factor with the composite modulus
    try:
        crt_combine([((2, 0, 3, 0), 6)])
        assert False
    except ValueError:
        pass


def test_rational_reconstruct_examples():
    assert rational_reconstruct(3, 101, 7) == Fraction(3)
    assert rational_reconstruct(51, 101, 7) == Fraction(1, 2)
    assert rational_reconstruct(67, 101, 7) == Fraction(-1, 3)


def test_rational_reconstruct_scan():
    # every fraction r/t within the bound comes back exactly
    for n in (101, 97, 103):
        b = math.isqrt((n - 1) // 2)
        for r in range(-b, b + 1):
            for t in range(1, b + 1):
                if math.gcd(abs(r), t) != 1 or t % n == 0:
                    continue
                a = r * pow(t, -1, n) % n
                got = rational_reconstruct(a, n, b)
                assert got == Fraction(r, t), (r, t, n, got)


def test_rational_reconstruct_none():
    # 2^-1 mod 101 is 51; with bound 1 no small fraction exists
    assert rational_reconstruct(51, 101, 1) is None


def test_canonical_proj_and_height():
    assert canonical_proj((2, 0, 0, 2)) == (1, 0, 0, 1)
    assert canonical_proj((0, -3, -6, 0)) == (0, 1, 2, 0)
    assert proj_height((1, 0, 0, 1)) == 1
    assert proj_height((0, 1, 2601, 0)) == 2601
    assert proj_height((2, -3, 5, 7)) == 7
    assert proj_height((4, 0, 0, 6)) == 3


def test_l2_norm_sq():
    # X^2 Y - X Y^2 as the coefficient vector (0, -1, 1, 0)
    assert l2_norm_sq((0, -1, 1, 0)) == 2
    # x^3 - 3x
    assert l2_norm_sq((0, -3, 0, 1)) == 10
    assert l2_norm_sq((0, 0, 0, 0)) == 0


def _row_span_key(rows):
    return tuple(tuple(r) for r in hnf_rows(rows))


def test_hnf_fixed_lattice():
    rows = [[1, 0, 0, 1], [5, 0, 0, 0], [0, 5, 0, 0], [0, 0, 5, 0], [0, 0, 0, 5]]
    h = hnf_rows(rows)
    assert len(h) == 4
    # determinant of the HNF basis is the lattice index 5^3
    det = h[0][0] * h[1][1] * h[2][2] * h[3][3]
    assert abs(det) == 125


def test_lll_preserves_lattice():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.choice([35, 77, 1001, 30031])
        r = [rng.randrange(n) for _ in range(4)]
        if not any(r):
            continue
        rows = [r] + [[n if i == j else 0 for j in range(4)] for i in range(4)]
        basis = hnf_rows(rows)
        red = lll_reduce(basis)
        assert _row_span_key(red) == _row_span_key(basis)
        # first reduced vector is never longer than the shortest input row
        m_in = min(l2_norm_sq(v) for v in basis)
        assert l2_norm_sq(red[0]) <= m_in


def test_lll_size_reduction_property():
    # |mu_ij| <= 1/2 for i > j on the reduced basis
    rng = random.Random(3)
    for _ in range(25):
        n = rng.choice([101, 1009, 10007])
        r = [rng.randrange(n) for _ in range(4)]
        if not any(r):
            continue
        rows = [r] + [[n if i == j else 0 for j in range(4)] for i in range(4)]
        red = lll_reduce(hnf_rows(rows))
        k = len(red)
        # Gram-Schmidt from scratch
        star = [[Fraction(x) for x in red[0]]]
        mu = [[Fraction(0)] * k for _ in range(k)]
        for i in range(1, k):
            v = [Fraction(x) for x in red[i]]
            for j in range(i):
                num = sum(a * b for a, b in zip(red[i], star[j]))
                den = sum(a * a for a in star[j])
                mu[i][j] = Fraction(num) / den
                v = [a - mu[i][j] * b for a, b in zip(v, star[j])]
            star.append(v)
        for i in range(k):
            for j in range(i):
                assert abs(mu[i][j]) <= Fraction(1, 2)


def test_shortest_congruent_lift_identity():
    out = shortest_congruent_lift((1, 0, 0, 1), 35)
    assert out and out[0] == (1, 0, 0, 1)


def test_shortest_congruent_lift_scaled_residue():
    out = shortest_congruent_lift((2, 0, 0, 2), 7)
    assert out and out[0] == (1, 0, 0, 1)


def test_shortest_congruent_lift_tall_point():
    # modulus comfortably above 2 * 2601^2 so the point is inside the
    # uniqueness radius and must come back first
    target = (0, 1, 2601, 0)
    n = 1
    for p in (101, 103, 107, 109):
        n *= p
    assert n > 2 * 2601 * 2601
    res = tuple(x % n for x in target)
    out = shortest_congruent_lift(res, n)
    assert out[0] == target


def test_shortest_congruent_lift_brute():
    # small-modulus brute force: enumerate all canonical points with
    # sup norm <= B and unit scalar relation to the residue
    rng = random.Random(23)
    n = 3 * 5 * 7
    b = math.isqrt((n - 1) // 2)
    units = [u for u in range(1, n) if math.gcd(u, n) == 1]
    for _ in range(6):
        r = tuple(rng.randrange(n) for _ in range(4))
        if not any(r):
            continue
        want = set()
        for v0 in range(-b, b + 1):
            for v1 in range(-b, b + 1):
                for v2 in range(-b, b + 1):
                    for v3 in range(-b, b + 1):
                        v = (v0, v1, v2, v3)
                        if not any(v):
                            continue
                        g = math.gcd(math.gcd(v0, v1), math.gcd(v2, v3))
                        if math.gcd(g, n) != 1:
                            continue
                        if any(all((v[i] - u * r[i]) % n == 0 for i in range(4)) for u in units):
                            want.add(canonical_proj(v))
        got = set(shortest_congruent_lift(r, n))
        assert got == want, (r, sorted(want - got), sorted(got - want))


def test_shortest_congruent_lift_height_bound():
    # explicit cap below the point's height filters it out
    target = (0, 1, 12, 0)
    n = 10007
    out = shortest_congruent_lift(tuple(x % n for x in target), n, height_bound=5)
    assert target not in out
    out2 = shortest_congruent_lift(tuple(x % n for x in target), n, height_bound=12)
    assert target in out2
