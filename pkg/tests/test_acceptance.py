"""One check per acceptance criterion; each records a PASS/FAIL line for the summary."""

import random
import time
from fractions import Fraction

import pytest

from nashift import sampling
from nashift.mahler import (
    GridFunction,
    coherent_state,
    difference,
    indefinite_sum,
    mahler_coeffs,
)
from nashift.models import FactorialSeries, T3_apply, vector_norm, verify_universality
from nashift.padic import PrimeConfig, digit_sum, factorial_valuation, norm_of_exponent
from nashift.sequences import (
    DOUBLY_EXPONENTIAL,
    QUADRATIC,
    BoundedVector,
    annihilator_geometric,
    cyclic_error,
    cyclic_vector,
    densify_cyclic,
    pairing,
    shift_S,
    shift_T,
)
from nashift.tate import (
    MonicPoly,
    S1_apply,
    T1_apply,
    TateSeries,
    apply_shift_polynomial,
    commutant_poly_approx,
    divides,
    gauss_norm,
    ideal_member,
    multiply,
)

from conftest import ACCEPTANCE_LINES
from oracles import factorial_p_count, poly_from_roots, poly_mul, vanishes_with_multiplicity
from test_cli import GOLDEN, GOLDEN_RUNS, run

PRIMES = (2, 3, 5)
N = 24


def record(number, title, ok, detail):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}: {detail}")
    assert ok, detail


def test_criterion_01_model_conjugacy():
    start = time.perf_counter()
    failures = {"S1": 0, "T1": 0, "S2": 0, "T2": 0, "T3": 0}
    L, trials = 16, 200
    for p in PRIMES:
        cfg = PrimeConfig(p, N)
        rng = random.Random(1000 + p)
        for _ in range(trials):
            f = sampling.series(rng, cfg, L)
            failures["S1"] += S1_apply(f).coeffs != shift_S(f.coeffs)
            failures["T1"] += T1_apply(f).coeffs != shift_T(f.coeffs)
            phi = sampling.grid(rng, cfg, L - 1)
            b = mahler_coeffs(phi)
            failures["S2"] += mahler_coeffs(indefinite_sum(phi)) != shift_S(b).truncate(L)
            failures["T2"] += mahler_coeffs(difference(phi)) != shift_T(b)
            g = FactorialSeries(sampling.vector(rng, cfg, L))
            failures["T3"] += T3_apply(g).coeffs != shift_T(g.coeffs)
    elapsed = time.perf_counter() - start
    ok = not any(failures.values()) and elapsed < 30
    record(1, "model conjugacy S1,T1,S2,T2,T3", ok,
           f"{3 * trials} instances per operator, failures {failures}, {elapsed:.1f} s (< 30 s)")


def test_criterion_02_norm_laws():
    bad = {"|Sx|=|x|": 0, "|Tx|<=|x|": 0, "poly product": 0, "series product": 0}
    for p in PRIMES:
        cfg = PrimeConfig(p, N)
        rng = random.Random(2000 + p)
        for _ in range(100):
            x = sampling.vector(rng, cfg, 16, -3, 6)
            bad["|Sx|=|x|"] += shift_S(x).norm() != x.norm()
            bad["|Tx|<=|x|"] += shift_T(x).norm() > x.norm()
            a = sampling.small_int_series(rng, cfg, rng.randint(1, 6), bound=60)
            c = sampling.small_int_series(rng, cfg, rng.randint(1, 6), bound=60)
            bad["poly product"] += gauss_norm(multiply(a, c)) != gauss_norm(a) * gauss_norm(c)
            f = sampling.series(rng, cfg, 16)
            g = sampling.series(rng, cfg, 16)
            bad["series product"] += gauss_norm(multiply(f, g)) != gauss_norm(f) * gauss_norm(g)
    record(2, "norm laws", not any(bad.values()),
           f"100 instances per law at each p in {PRIMES}, failures {bad}")


def test_criterion_03_ideal_membership():
    bad = {"P*f member": 0, "root oracle": 0, "lattice": 0}
    for p in PRIMES:
        cfg = PrimeConfig(p, N)
        rng = random.Random(3000 + p)
        for _ in range(100):
            P = sampling.monic(rng, cfg)
            f = sampling.series(rng, cfg, 16 - P.degree)
            bad["P*f member"] += not ideal_member(multiply(P.as_series(), f), P)[0]

            roots = [rng.randint(-6, 6) for _ in range(rng.randint(1, 3))]
            g = poly_mul(poly_from_roots(roots), [rng.randint(-20, 20) for _ in range(8)])
            if rng.random() < 0.5:
                g[rng.randrange(len(g))] += rng.choice([-1, 1]) * rng.randint(1, 5)
            verdict, _ = ideal_member(TateSeries.from_values(g, cfg), MonicPoly.from_roots(roots, cfg))
            bad["root oracle"] += verdict != vanishes_with_multiplicity(g, roots)

            roots2 = [rng.randint(-4, 4) for _ in range(rng.randint(1, 2))]
            roots1 = (roots2 + [rng.randint(-4, 4)] if rng.random() < 0.5
                      else [rng.randint(-4, 4) for _ in range(rng.randint(1, 3))])
            P1, P2 = MonicPoly.from_roots(roots1, cfg), MonicPoly.from_roots(roots2, cfg)
            # P1 H is inside P2 H exactly when P2 | P1, i.e. P1 itself lies in P2 H
            contained = ideal_member(P1.as_series(), P2)[0]
            bad["lattice"] += divides(P2, P1) != contained
    record(3, "ideal membership instances", not any(bad.values()),
           f"100 instances per check at each p in {PRIMES}, discrepancies {bad}")


def test_criterion_04_commutant():
    failures = 0
    for p in PRIMES:
        cfg = PrimeConfig(p, N)
        rng = random.Random(4000 + p)
        for _ in range(50):
            phi = sampling.series(rng, cfg, 16, max_val=8)
            cutoff = rng.randrange(16)
            coeffs, err = commutant_poly_approx(phi, cutoff)
            tail = max((phi[n].norm() for n in range(cutoff + 1, 16)), default=Fraction(0))
            ok = err == tail
            for j in range(3):
                e_j = TateSeries.monomial(j, cfg)
                approx = apply_shift_polynomial(coeffs, e_j)
                exact = multiply(phi, e_j)
                # agreement through degree cutoff + j, and the residual is exactly the tail
                ok = ok and approx.coeffs == exact.coeffs.truncate(cutoff + j + 1)
                ok = ok and gauss_norm(TateSeries(exact.coeffs - approx.coeffs)) == err
            failures += not ok
    record(4, "commutant approximation", failures == 0,
           f"50 symbols at each p in {PRIMES}, failures {failures}")


def test_criterion_05_cyclic_vectors():
    cfg2 = PrimeConfig(2, N)
    x = cyclic_vector(QUADRATIC, 0, 10, cfg2)
    quad = [cyclic_error(x, k) for k in range(7)]
    quad_ok = quad == [Fraction(1, 2 ** (k + 1)) for k in range(7)]
    xd = cyclic_vector(DOUBLY_EXPONENTIAL, 0, 5, cfg2)
    dexp = [cyclic_error(xd, k) for k in range(4)]
    dexp_ok = dexp == [Fraction(1, 2 ** (2 ** k)) for k in range(4)]
    dens_fail = 0
    for p in PRIMES:
        cfg = PrimeConfig(p, N)
        rng = random.Random(5000 + p)
        for _ in range(50):
            y = sampling.vector(rng, cfg, rng.randint(1, 12), 0, 6)
            eps = norm_of_exponent(p, rng.randint(0, 5))
            yt, k0 = densify_cyclic(y, eps)
            errs = [cyclic_error(yt, k) for k in range(k0, len(yt) - 1)]
            decays = all(a > b for a, b in zip(errs, errs[1:]))
            dens_fail += not ((yt - y).norm() < eps and decays)
    ok = quad_ok and dexp_ok and dens_fail == 0
    record(5, "cyclic vectors", ok,
           f"quadratic errors {[str(e) for e in quad]}, doubly-exponential {[str(e) for e in dexp]}, "
           f"densify failures {dens_fail}/{50 * len(PRIMES)}")


def test_criterion_06_coherent_states():
    failures = 0
    for p in PRIMES:
        cfg = PrimeConfig(p, N)
        rng = random.Random(6000 + p)
        for _ in range(20):
            lam = sampling.pZp(rng, cfg)
            phi = coherent_state(lam, 64)
            eigen = difference(phi) == GridFunction(cfg, tuple(lam * v for v in phi.values[:-1]))
            coeffs = mahler_coeffs(phi)
            powers = all(coeffs[n] == lam ** n for n in range(65))
            failures += not (eigen and powers)
    record(6, "coherent states on M = 64", failures == 0,
           f"20 lambda in pZ_p at each p in {PRIMES}, failures {failures}")


def test_criterion_07_factorial_model():
    bad_nu = bad_deficit = 0
    for p in PRIMES:
        for n in range(2001):
            bad_nu += factorial_valuation(n, p) != factorial_p_count(n, p)
        for n in range(1001):
            lhs = Fraction(n, p - 1) - factorial_valuation(n, p)
            bad_deficit += lhs != Fraction(digit_sum(n, p), p - 1)
    record(7, "factorial valuations", bad_nu == 0 and bad_deficit == 0,
           f"Legendre vs counting n <= 2000: {bad_nu} mismatches; "
           f"deficit identity n <= 1000: {bad_deficit} mismatches (p in {PRIMES})")


def test_criterion_08_universality():
    start = time.perf_counter()
    failures = {1: 0, 2: 0, 3: 0}
    trials = 0
    cfg = PrimeConfig(3, N)
    rng = random.Random(8000)
    for d in (1, 2, 3):
        for _ in range(50):
            A = sampling.contraction(rng, cfg, d)
            for _ in range(50):
                u = tuple(sampling.scalar(rng, cfg, -2, 4) for _ in range(d))
                report = verify_universality(A, u, 12)
                trials += 1
                failures[d] += not (report.ok and report.isometry)
    elapsed = time.perf_counter() - start
    record(8, "universality T_E W = W A", not any(failures.values()),
           f"{trials} trials (50 matrices x 50 u per d, L = 12, p = 3), failures by d {failures}, "
           f"{elapsed:.1f} s")


def test_criterion_09_duality():
    adj_fail = ann_fail = 0
    for p in PRIMES:
        cfg = PrimeConfig(p, N)
        rng = random.Random(9000 + p)
        for _ in range(100):
            x = BoundedVector(cfg, sampling.vector(rng, cfg, 16).entries)
            y = sampling.vector(rng, cfg, 16)
            adj_fail += not (pairing(x, shift_S(y)) == pairing(shift_T(x), y)
                             and pairing(x, shift_T(y)) == pairing(shift_S(x), y))
        for _ in range(50):
            a = sampling.integral(rng, cfg)
            b = sampling.vector(rng, cfg, 15)
            ann = annihilator_geometric(a, 16)
            ann_fail += not pairing(ann, shift_S(b) - b.scale(a)).is_zero()
    record(9, "duality", adj_fail == 0 and ann_fail == 0,
           f"adjoint failures {adj_fail}/{100 * len(PRIMES)}, "
           f"annihilator failures {ann_fail}/{50 * len(PRIMES)}")


def test_criterion_10_cli_determinism():
    mismatched = []
    for name, argv in sorted(GOLDEN_RUNS.items()):
        code, out, _ = run(argv)
        if code != 0 or out != (GOLDEN / name).read_text():
            mismatched.append(name)
    record(10, "demo golden files byte-equal", not mismatched,
           f"{len(GOLDEN_RUNS) - len(mismatched)}/{len(GOLDEN_RUNS)} match"
           + (f", mismatched {mismatched}" if mismatched else "")
           + "; suite time is reported below")
