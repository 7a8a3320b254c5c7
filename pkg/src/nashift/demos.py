"""Seeded, instance-wise checks of the shift-operator theorems.

Every demo returns a JSON-ready report listing, for each property, how many
random trials held exactly.
"""

from __future__ import annotations

import random
from collections import Counter
from fractions import Fraction

from . import sampling
from .models import verify_universality
from .padic import PrimeConfig, norm_of_exponent
from .sequences import (
    DOUBLY_EXPONENTIAL,
    QUADRATIC,
    C0Vector,
    BoundedVector,
    annihilator_geometric,
    basis_error,
    cyclic_error,
    cyclic_vector,
    densify_cyclic,
    pairing,
    shift_S,
    shift_T,
)
from .tate import (
    MonicPoly,
    S1_apply,
    TateSeries,
    apply_shift_polynomial,
    commutant_poly_approx,
    divides,
    gauss_norm,
    ideal_member,
    multiply,
)


class _Tally:
    def __init__(self):
        self.rows = []

    def add(self, name: str, outcomes) -> None:
        outcomes = list(outcomes)
        self.rows.append((name, sum(bool(o) for o in outcomes), len(outcomes)))

    def report(self, demo: str, cfg: PrimeConfig, seed: int, **params) -> dict:
        props = [{"name": n, "passed": k, "trials": t, "status": "PASS" if k == t else "FAIL"}
                 for n, k, t in self.rows]
        return {
            "demo": demo,
            "p": cfg.p,
            "prec": cfg.N,
            "seed": seed,
            **params,
            "properties": props,
            "summary": [f"{n}: {k}/{t} exact" for n, k, t in self.rows],
            "all_passed": all(k == t for _, k, t in self.rows),
        }


def demo_duality(cfg: PrimeConfig, length: int = 16, trials: int = 100, seed: int = 0) -> dict:
    rng = random.Random(seed)
    tally = _Tally()

    def adjoint_trial():
        x = BoundedVector(cfg, sampling.vector(rng, cfg, length).entries)
        y = sampling.vector(rng, cfg, length)
        return (pairing(x, shift_S(y)) == pairing(shift_T(x), y)
                and pairing(x, shift_T(y)) == pairing(shift_S(x), y))

    tally.add("adjoint identities", [adjoint_trial() for _ in range(trials)])

    def annihilator_trial():
        a = sampling.integral(rng, cfg)
        b = sampling.vector(rng, cfg, length - 1)
        x = annihilator_geometric(a, length)
        image = shift_S(b) - b.scale(a)
        invariant = shift_T(x) == x.scale(a).truncate(length - 1)
        return pairing(x, image).is_zero() and invariant

    tally.add("annihilator pairing and T-invariance",
              [annihilator_trial() for _ in range(min(trials, 50))])
    return tally.report("duality", cfg, seed, len=length, trials=trials)


def _int_poly_eval(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _int_poly_derivative(coeffs):
    return [n * c for n, c in enumerate(coeffs)][1:]


def vanishes_at_roots(coeffs: list[int], roots: list[int]) -> bool:
    """Exact integer test: each root r of multiplicity m kills g, g', ..., g^(m-1)."""
    for r, m in Counter(roots).items():
        g = list(coeffs)
        for _ in range(m):
            if _int_poly_eval(g, r) != 0:
                return False
            g = _int_poly_derivative(g)
    return True


def _int_poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _int_from_roots(roots):
    poly = [1]
    for r in roots:
        poly = _int_poly_mul(poly, [-r, 1])
    return poly


def demo_thm1(cfg: PrimeConfig, length: int = 16, trials: int = 100, seed: int = 0) -> dict:
    rng = random.Random(seed)
    tally = _Tally()

    def product_trial():
        P = sampling.monic(rng, cfg)
        f = sampling.series(rng, cfg, length - P.degree)
        g = multiply(P.as_series(), f)
        member, _ = ideal_member(g, P)
        return member and ideal_member(S1_apply(g), P)[0]

    tally.add("P*f in P H(A_p), and S_1 keeps it there", [product_trial() for _ in range(trials)])

    def oracle_trial():
        roots = [rng.randint(-6, 6) for _ in range(rng.randint(1, 3))]
        f = [rng.randint(-20, 20) for _ in range(length - len(roots))]
        g = _int_poly_mul(_int_from_roots(roots), f)
        if rng.random() < 0.5:
            g[rng.randrange(len(g))] += rng.choice([-1, 1]) * rng.randint(1, 5)
        verdict, _ = ideal_member(TateSeries.from_values(g, cfg), MonicPoly.from_roots(roots, cfg))
        return verdict == vanishes_at_roots(g, roots)

    tally.add("membership agrees with root evaluation", [oracle_trial() for _ in range(trials)])

    def lattice_trial():
        roots2 = [rng.randint(-4, 4) for _ in range(rng.randint(1, 2))]
        if rng.random() < 0.5:
            roots1 = roots2 + [rng.randint(-4, 4) for _ in range(rng.randint(0, 1))]
        else:
            roots1 = [rng.randint(-4, 4) for _ in range(rng.randint(1, 3))]
        P1 = MonicPoly.from_roots(roots1, cfg)
        P2 = MonicPoly.from_roots(roots2, cfg)
        exact = not (Counter(roots2) - Counter(roots1))
        f = sampling.series(rng, cfg, 4)
        contained = ideal_member(multiply(P1.as_series(), f), P2)[0]
        return divides(P2, P1) == exact and (not exact or contained)

    tally.add("divisibility matches ideal containment", [lattice_trial() for _ in range(trials)])

    def commutant_trial():
        phi = sampling.series(rng, cfg, length)
        cutoff = rng.randrange(length)
        coeffs, err = commutant_poly_approx(phi, cutoff)
        direct = max((phi[n].norm() for n in range(cutoff + 1, length)), default=Fraction(0))
        ok = err == direct
        for j in range(3):
            e_j = TateSeries.monomial(j, cfg)
            approx = apply_shift_polynomial(coeffs, e_j)
            exact = multiply(phi, e_j)
            ok = ok and approx.coeffs == exact.coeffs.truncate(cutoff + j + 1)
            ok = ok and gauss_norm(TateSeries(exact.coeffs - approx.coeffs)) == err
        return ok

    tally.add("commutant approximation error is the symbol tail",
              [commutant_trial() for _ in range(min(trials, 50))])
    return tally.report("thm1", cfg, seed, len=length, trials=trials)


def demo_thm2(cfg: PrimeConfig, length: int = 16, trials: int = 100, seed: int = 0) -> dict:
    rng = random.Random(seed)
    tally = _Tally()
    p = cfg.p
    x = cyclic_vector(QUADRATIC, 0, max(length, 8), cfg)
    tally.add("quadratic-gap error p^-(k+1), k = 0..6",
              [cyclic_error(x, k) == norm_of_exponent(p, k + 1) for k in range(7)])
    tally.add("e_n approximation, n <= 4",
              [basis_error(x, n, k) == norm_of_exponent(p, k + 1)
               for n in range(5) for k in range(n, n + 3)])
    xd = cyclic_vector(DOUBLY_EXPONENTIAL, 0, 5, cfg)
    tally.add("doubly-exponential error p^-(p^(k+1) - p^k), k <= 3",
              [cyclic_error(xd, k) == norm_of_exponent(p, p ** (k + 1) - p ** k) for k in range(4)])

    def densify_trial():
        y = sampling.vector(rng, cfg, rng.randint(1, length), 0, 6)
        eps = norm_of_exponent(p, rng.randint(0, 5))
        yt, k0 = densify_cyclic(y, eps)
        errs = [cyclic_error(yt, k) for k in range(k0, len(yt) - 1)]
        decays = all(a > b for a, b in zip(errs, errs[1:]))
        return (yt - y).norm() < eps and decays

    tally.add("densified vector is within epsilon and cyclic",
              [densify_trial() for _ in range(min(trials, 50))])
    return tally.report("thm2", cfg, seed, len=length, trials=trials)


def demo_thm3(cfg: PrimeConfig, length: int = 12, trials: int = 50, seed: int = 0) -> dict:
    rng = random.Random(seed)
    tally = _Tally()
    for d in (1, 2, 3):
        outcomes = []
        for _ in range(trials):
            A = sampling.contraction(rng, cfg, d)
            u = tuple(sampling.scalar(rng, cfg, -2, 4) for _ in range(d))
            outcomes.append(verify_universality(A, u, length).ok)
        tally.add(f"T_E W u = W A u and ||Wu|| = ||u||, d = {d}", outcomes)
    return tally.report("thm3", cfg, seed, len=length, trials=trials)


DEMOS = {
    "thm1": demo_thm1,
    "thm2": demo_thm2,
    "thm3": demo_thm3,
    "duality": demo_duality,
}
