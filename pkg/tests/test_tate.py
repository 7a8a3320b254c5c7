from fractions import Fraction

import pytest

from nashift import sampling
from nashift.padic import DomainError, PrimeConfig
from nashift.sequences import C0Vector, shift_S, shift_T
from nashift.tate import (
    MonicPoly,
    S1_apply,
    T1_apply,
    TateSeries,
    apply_shift_polynomial,
    commutant_poly_approx,
    divides,
    evaluate,
    gauss_norm,
    ideal_member,
    multiply,
    weierstrass_reduce,
)

from oracles import poly_from_roots, poly_mul, vanishes_with_multiplicity


def series(values, cfg):
    return TateSeries.from_values(values, cfg)


def test_gauss_norm_examples(cfg5):
    assert gauss_norm(series([1], cfg5)) == 1
    assert gauss_norm(series([5, 1], cfg5)) == 1
    assert gauss_norm(series([25, 5], cfg5)) == Fraction(1, 5)


def test_norm_multiplicative(cfg, rng):
    for _ in range(100):
        f = sampling.series(rng, cfg, rng.randint(1, 8))
        g = sampling.series(rng, cfg, rng.randint(1, 8))
        fg = multiply(f, g)
        assert fg.is_exact()
        assert gauss_norm(fg) == gauss_norm(f) * gauss_norm(g)


def test_multiply_identities(cfg5, rng):
    one = series([1], cfg5)
    z = TateSeries.monomial(1, cfg5)
    f = sampling.series(rng, cfg5, 6)
    assert multiply(f, one) == f
    assert multiply(z, z) == TateSeries.monomial(2, cfg5)


def test_multiply_against_integer_product(cfg5, rng):
    for _ in range(20):
        a = [rng.randint(-50, 50) for _ in range(rng.randint(1, 7))]
        b = [rng.randint(-50, 50) for _ in range(rng.randint(1, 7))]
        assert multiply(series(a, cfg5), series(b, cfg5)) == series(poly_mul(a, b), cfg5)


def test_multiply_ring_laws(cfg, rng):
    for _ in range(30):
        f, g, h = (sampling.series(rng, cfg, rng.randint(1, 6)) for _ in range(3))
        assert multiply(f, g) == multiply(g, f)
        assert multiply(multiply(f, g), h) == multiply(f, multiply(g, h))


def test_truncated_multiply_reports_tail(cfg5):
    f = series([1, 1], cfg5)
    g = series([1, 5], cfg5)
    full = multiply(f, g)                 # 1 + 6z + 5z^2
    cut = multiply(f, g, length=2)
    assert len(cut) == 2 and cut.coeffs == full.coeffs.truncate(2)
    assert cut.tail_norm == Fraction(1, 5)
    assert not cut.is_exact()


def test_evaluate_examples(cfg5, rng):
    z2 = TateSeries.monomial(2, cfg5)
    assert evaluate(z2, cfg5(5)) == 25
    f = sampling.series(rng, cfg5, 5)
    assert evaluate(f, cfg5.zero()) == f[0]


def test_evaluate_bounded_by_norm(cfg, rng):
    for _ in range(100):
        f = sampling.series(rng, cfg, rng.randint(1, 8))
        z = sampling.integral(rng, cfg)
        assert evaluate(f, z).norm() <= gauss_norm(f)


def test_evaluate_matches_integer_polynomial(cfg5, rng):
    for _ in range(20):
        a = [rng.randint(-99, 99) for _ in range(6)]
        x = rng.randint(-20, 20)
        assert evaluate(series(a, cfg5), cfg5(x)) == sum(c * x ** n for n, c in enumerate(a))


def test_evaluate_domain(cfg5):
    with pytest.raises(DomainError):
        evaluate(series([1, 1], cfg5), cfg5(Fraction(1, 5)))


def test_S1_examples(cfg5):
    assert S1_apply(series([1], cfg5)) == TateSeries.monomial(1, cfg5)


def test_S1_conjugacy(cfg, rng):
    for _ in range(100):
        f = sampling.series(rng, cfg, rng.randint(1, 10))
        out = S1_apply(f)
        assert out.coeffs == shift_S(f.coeffs)
        assert len(out.coeffs) == len(f.coeffs) + 1
        assert gauss_norm(out) == gauss_norm(f)


def test_T1_examples(cfg5):
    assert T1_apply(TateSeries.monomial(1, cfg5)) == series([1], cfg5)
    assert all(c.is_zero() for c in T1_apply(series([1], cfg5)).coeffs)


def test_T1_conjugacy(cfg, rng):
    for _ in range(100):
        f = sampling.series(rng, cfg, rng.randint(1, 10))
        out = T1_apply(f)
        assert out.coeffs == shift_T(f.coeffs)
        assert len(out.coeffs) == len(f.coeffs) - 1


def test_weierstrass_example():
    cfg = PrimeConfig(5, 24)
    P = MonicPoly(cfg, (cfg(-5), cfg(0)))           # z^2 - 5
    q, r = weierstrass_reduce(TateSeries.monomial(3, cfg), P)
    assert q == TateSeries.monomial(1, cfg)
    assert r == series([0, 5], cfg)


def test_weierstrass_of_P(cfg5, rng):
    for _ in range(10):
        P = sampling.monic(rng, cfg5)
        q, r = weierstrass_reduce(P.as_series(), P)
        assert q == series([1], cfg5)
        assert all(c.is_zero() for c in r.coeffs)


def test_weierstrass_reconstruction(cfg, rng):
    for _ in range(100):
        P = sampling.monic(rng, cfg)
        f = sampling.series(rng, cfg, rng.randint(1, 12))
        q, r = weierstrass_reduce(f, P)
        assert len(r) == P.degree
        assert multiply(q, P.as_series()) + r == f
        assert gauss_norm(r) <= gauss_norm(f)
        assert gauss_norm(q) <= gauss_norm(f)
        # reducing the remainder again changes nothing
        q2, r2 = weierstrass_reduce(r, P)
        assert r2 == r and all(c.is_zero() for c in q2.coeffs)


def test_weierstrass_rejects_non_integral(cfg5):
    with pytest.raises(DomainError):
        MonicPoly(cfg5, (cfg5(Fraction(1, 5)),))


def test_from_roots_matches_integer_expansion(cfg5):
    roots = [2, -3, 2]
    P = MonicPoly.from_roots(roots, cfg5)
    assert P.as_series() == series(poly_from_roots(roots), cfg5)


def test_member_z_times_f(cfg5, rng):
    z = MonicPoly(cfg5, (cfg5.zero(),))
    for _ in range(10):
        g = S1_apply(sampling.series(rng, cfg5, 6))
        member, r = ideal_member(g, z)
        assert member and gauss_norm(r) == 0


def test_not_member_when_root_not_killed(cfg5):
    a = 3
    P = MonicPoly.from_roots([a], cfg5)
    g = series([1, 1, 1], cfg5)                 # g(3) = 13
    assert sum(a ** n for n in range(3)) != 0
    member, r = ideal_member(g, P)
    assert not member and r == series([13], cfg5)


def test_products_are_members(cfg, rng):
    for _ in range(100):
        P = sampling.monic(rng, cfg)
        f = sampling.series(rng, cfg, rng.randint(1, 10))
        g = multiply(P.as_series(), f)
        assert ideal_member(g, P)[0]
        # ideals are S_1-invariant
        assert ideal_member(S1_apply(g), P)[0]


def test_membership_root_oracle(cfg, rng):
    for _ in range(100):
        roots = [rng.randint(-6, 6) for _ in range(rng.randint(1, 3))]
        g = poly_mul(poly_from_roots(roots), [rng.randint(-20, 20) for _ in range(6)])
        if rng.random() < 0.5:
            g[rng.randrange(len(g))] += rng.choice([-3, -1, 1, 2])
        verdict, _ = ideal_member(series(g, cfg), MonicPoly.from_roots(roots, cfg))
        assert verdict == vanishes_with_multiplicity(g, roots)


def test_near_miss_remainder_is_reported(cfg5):
    P = MonicPoly.from_roots([0], cfg5)
    g = series([5 ** 20, 1], cfg5)
    member, r = ideal_member(g, P)
    assert not member and gauss_norm(r) == Fraction(1, 5 ** 20)


def test_divides_examples(cfg5):
    z = MonicPoly.from_roots([0], cfg5)
    z2 = MonicPoly.from_roots([0, 0], cfg5)
    assert divides(z, z2)
    assert not divides(z2, z)
    a, b = 2, 7
    assert divides(MonicPoly.from_roots([a], cfg5), MonicPoly.from_roots([a, b], cfg5))
    assert not divides(MonicPoly.from_roots([a + 1], cfg5), MonicPoly.from_roots([a, b], cfg5))


def test_divides_agrees_with_membership(cfg, rng):
    for _ in range(100):
        P2 = sampling.monic(rng, cfg, max_degree=2)
        if rng.random() < 0.5:
            P1q = multiply(P2.as_series(), sampling.monic(rng, cfg, max_degree=1).as_series())
            P1 = MonicPoly(cfg, P1q.coeffs.entries[:-1])
        else:
            P1 = sampling.monic(rng, cfg)
        assert ideal_member(P1.as_series(), P2)[0] == divides(P2, P1)


def test_divides_matches_root_containment(cfg5, rng):
    from collections import Counter
    for _ in range(100):
        r1 = [rng.randint(-3, 3) for _ in range(rng.randint(1, 3))]
        r2 = [rng.randint(-3, 3) for _ in range(rng.randint(1, 3))]
        expected = not (Counter(r2) - Counter(r1))
        assert divides(MonicPoly.from_roots(r2, cfg5), MonicPoly.from_roots(r1, cfg5)) == expected


def test_divides_is_a_partial_order(cfg5, rng):
    for _ in range(30):
        P = sampling.monic(rng, cfg5)
        assert divides(P, P)
        Q = MonicPoly(cfg5, multiply(P.as_series(), sampling.monic(rng, cfg5, 1).as_series())
                      .coeffs.entries[:-1])
        R = MonicPoly(cfg5, multiply(Q.as_series(), sampling.monic(rng, cfg5, 1).as_series())
                      .coeffs.entries[:-1])
        assert divides(P, Q) and divides(Q, R) and divides(P, R)
        assert not divides(R, P)


def test_commutant_polynomial_symbol(cfg5, rng):
    phi = sampling.series(rng, cfg5, 4)
    _, err = commutant_poly_approx(phi, 5)
    assert err == 0


def test_commutant_geometric_symbol(cfg):
    p = cfg.p
    phi = series([p ** n for n in range(10)], cfg)
    for cutoff in range(8):
        _, err = commutant_poly_approx(phi, cutoff)
        assert err == Fraction(1, p ** (cutoff + 1))


def test_commutant_applied_to_e0(cfg5, rng):
    phi = sampling.series(rng, cfg5, 8)
    coeffs, _ = commutant_poly_approx(phi, 7)
    assert apply_shift_polynomial(coeffs, TateSeries.monomial(0, cfg5)) == phi


def test_multiplication_commutes_with_S1(cfg, rng):
    for _ in range(30):
        phi = sampling.series(rng, cfg, 5)
        f = sampling.series(rng, cfg, 6)
        assert multiply(phi, S1_apply(f)) == S1_apply(multiply(phi, f))


def _matmul(A, B):
    n = len(A)
    return [[sum((A[i][k] * B[k][j] for k in range(n)), A[0][0] * 0) for j in range(n)]
            for i in range(n)]


def test_truncated_commutant_is_toeplitz(cfg5, rng):
    # matrices of M_phi on polynomials of degree < L commute with the truncated shift
    L = 6
    zero, one = cfg5.zero(), cfg5.one()
    J = [[one if i == j + 1 else zero for j in range(L)] for i in range(L)]
    phi = sampling.series(rng, cfg5, L)
    A = [[phi[i - j] if i >= j else zero for j in range(L)] for i in range(L)]
    AJ, JA = _matmul(A, J), _matmul(J, A)
    assert all(AJ[i][j] == JA[i][j] for i in range(L) for j in range(L))
    # a generic lower-triangular matrix that is not Toeplitz does not commute
    B = [row[:] for row in A]
    B[3][1] = B[3][1] + 1
    BJ, JB = _matmul(B, J), _matmul(J, B)
    assert not all(BJ[i][j] == JB[i][j] for i in range(L) for j in range(L))
