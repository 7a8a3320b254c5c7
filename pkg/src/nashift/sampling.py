"""Seeded random instances for demos and property checks."""

from __future__ import annotations

import random

from .mahler import GridFunction
from .models import ContractionMatrix
from .padic import PadicScalar, PrimeConfig
from .sequences import C0Vector
from .tate import MonicPoly, TateSeries


def scalar(rng: random.Random, cfg: PrimeConfig, min_val: int = 0, max_val: int = 4,
           zero_prob: float = 0.1) -> PadicScalar:
    """A random scalar with valuation in [min_val, max_val], or exact zero."""
    if rng.random() < zero_prob:
        return cfg.zero()
    v = rng.randint(min_val, max_val)
    unit = rng.randrange(1, cfg.p ** cfg.N)
    while unit % cfg.p == 0:
        unit = rng.randrange(1, cfg.p ** cfg.N)
    return PadicScalar(cfg, v, unit, v + cfg.N)


def integral(rng, cfg, max_val=4, zero_prob=0.1) -> PadicScalar:
    return scalar(rng, cfg, 0, max_val, zero_prob)


def vector(rng, cfg, length, min_val=0, max_val=4) -> C0Vector:
    return C0Vector(cfg, tuple(scalar(rng, cfg, min_val, max_val) for _ in range(length)))


def grid(rng, cfg, M, max_val=4) -> GridFunction:
    return GridFunction(cfg, tuple(integral(rng, cfg, max_val) for _ in range(M + 1)))


def series(rng, cfg, length, max_val=4) -> TateSeries:
    return TateSeries(C0Vector(cfg, tuple(integral(rng, cfg, max_val) for _ in range(length))))


def small_int_series(rng, cfg, length, bound=20) -> TateSeries:
    return TateSeries.from_values([rng.randint(-bound, bound) for _ in range(length)], cfg)


def monic(rng, cfg, max_degree=3, max_val=3) -> MonicPoly:
    d = rng.randint(1, max_degree)
    return MonicPoly(cfg, tuple(integral(rng, cfg, max_val) for _ in range(d)))


def split_monic(rng, cfg, max_degree=3, root_bound=6) -> tuple[MonicPoly, list[int]]:
    d = rng.randint(1, max_degree)
    roots = [rng.randint(-root_bound, root_bound) for _ in range(d)]
    return MonicPoly.from_roots(roots, cfg), roots


def contraction(rng, cfg, d, max_val=4) -> ContractionMatrix:
    return ContractionMatrix(cfg, tuple(
        tuple(scalar(rng, cfg, 1, max_val, zero_prob=0.2) for _ in range(d)) for _ in range(d)))


def pZp(rng, cfg, max_val=4) -> PadicScalar:
    """A random element of pZ_p (possibly zero)."""
    return scalar(rng, cfg, 1, max_val, zero_prob=0.05)
