"""Truncated Tate algebra H(A_p), the models S_1/T_1, and ideals P H(A_p).

A :class:`TateSeries` holds the coefficients a_0..a_{L-1} of f and a bound
``tail_norm`` on the Gauss norm of everything that was cut off.  A series
with ``tail_norm == 0`` is an honest polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .padic import DomainError, PadicScalar, PrimeConfig
from .sequences import C0Vector


@dataclass(frozen=True, eq=False)
class TateSeries:
    coeffs: C0Vector
    tail_norm: Fraction = Fraction(0)

    @classmethod
    def from_values(cls, values: Iterable, cfg: PrimeConfig) -> "TateSeries":
        return cls(C0Vector.from_values(values, cfg))

    @classmethod
    def monomial(cls, n: int, cfg: PrimeConfig, c=1) -> "TateSeries":
        c = c if isinstance(c, PadicScalar) else cfg(c)
        return cls(C0Vector(cfg, (cfg.zero(),) * n + (c,)))

    @property
    def cfg(self) -> PrimeConfig:
        return self.coeffs.cfg

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> PadicScalar:
        return self.coeffs.entry(n)

    def is_exact(self) -> bool:
        return self.tail_norm == 0

    def degree(self) -> int:
        """Index of the last coefficient that is not zero at precision; -1 for 0."""
        for n in range(len(self.coeffs) - 1, -1, -1):
            if not self.coeffs[n].is_zero():
                return n
        return -1

    def __add__(self, other: "TateSeries") -> "TateSeries":
        return TateSeries(self.coeffs + other.coeffs, max(self.tail_norm, other.tail_norm))

    def __sub__(self, other: "TateSeries") -> "TateSeries":
        return TateSeries(self.coeffs - other.coeffs, max(self.tail_norm, other.tail_norm))

    def scale(self, c) -> "TateSeries":
        c = c if isinstance(c, PadicScalar) else self.cfg(c)
        return TateSeries(self.coeffs.scale(c), self.tail_norm * c.norm())

    def truncate(self, length: int) -> "TateSeries":
        dropped = C0Vector(self.cfg, self.coeffs.entries[length:]).norm()
        return TateSeries(self.coeffs.truncate(length), max(self.tail_norm, dropped))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TateSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def __repr__(self) -> str:
        tail = f", tail<={self.tail_norm}" if self.tail_norm else ""
        return f"TateSeries({[c.lift() for c in self.coeffs]}{tail}, p={self.cfg.p})"


@dataclass(frozen=True, eq=False)
class MonicPoly:
    """z**d + c_{d-1} z**(d-1) + ... + c_0 with every |c_i|_p <= 1."""

    cfg: PrimeConfig
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(
            c if isinstance(c, PadicScalar) else self.cfg(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a monic polynomial here has degree >= 1")
        for i, c in enumerate(self.coeffs):
            if c.val < 0:
                raise DomainError(f"coefficient c_{i} is not integral (valuation {c.val})")

    @classmethod
    def from_roots(cls, roots: Sequence, cfg: PrimeConfig) -> "MonicPoly":
        """prod (z - r) over the given roots (each |r|_p <= 1)."""
        poly = [cfg.one()]
        for r in roots:
            r = r if isinstance(r, PadicScalar) else cfg(r)
            shifted = [cfg.zero()] + poly
            poly = [s - r * (poly[i] if i < len(poly) else cfg.zero())
                    for i, s in enumerate(shifted)]
        return cls(cfg, tuple(poly[:-1]))

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def full_coeffs(self) -> tuple:
        return self.coeffs + (self.cfg.one(),)

    def as_series(self) -> TateSeries:
        return TateSeries(C0Vector(self.cfg, self.full_coeffs()))

    def __repr__(self) -> str:
        return f"MonicPoly({[c.lift() for c in self.full_coeffs()]}, p={self.cfg.p})"


def gauss_norm(f: TateSeries) -> Fraction:
    """max_n |a_n|_p over the stored coefficients."""
    return f.coeffs.norm()


def multiply(f: TateSeries, g: TateSeries, length: Optional[int] = None) -> TateSeries:
    """Cauchy product; with ``length`` given, truncated and the cut tail bounded."""
    if f.cfg.p != g.cfg.p:
        raise ValueError("multiply: mismatched primes")
    cfg = f.cfg
    lf, lg = len(f), len(g)
    full = lf + lg - 1 if lf and lg else 0
    n_out = full if length is None else length
    out = []
    for n in range(min(n_out, full)):
        total = cfg.zero()
        for i in range(max(0, n - lg + 1), min(n, lf - 1) + 1):
            total = total + f.coeffs[i] * g.coeffs[n - i]
        out.append(total)
    out.extend(cfg.zero() for _ in range(n_out - len(out)))
    prod = TateSeries(C0Vector(cfg, tuple(out)))
    tail = max(f.tail_norm * gauss_norm(g), g.tail_norm * gauss_norm(f),
               f.tail_norm * g.tail_norm)
    if n_out < full:
        # coefficients n_out..full-1 of the exact product
        dropped = cfg.zero().norm()
        for n in range(n_out, full):
            total = cfg.zero()
            for i in range(max(0, n - lg + 1), min(n, lf - 1) + 1):
                total = total + f.coeffs[i] * g.coeffs[n - i]
            dropped = max(dropped, total.norm())
        tail = max(tail, dropped)
    return TateSeries(prod.coeffs, tail)


def evaluate(f: TateSeries, z: PadicScalar) -> PadicScalar:
    """Horner evaluation of the stored coefficients at |z|_p <= 1."""
    if z.val < 0:
        raise DomainError(f"evaluate needs |z|_p <= 1, got valuation {z.val}")
    acc = f.cfg.zero()
    for c in reversed(f.coeffs.entries):
        acc = acc * z + c
    return acc


def _z(cfg: PrimeConfig) -> TateSeries:
    return TateSeries.monomial(1, cfg)


def S1_apply(f: TateSeries) -> TateSeries:
    """(S_1 f)(z) = z f(z)."""
    return multiply(f, _z(f.cfg))


def T1_apply(f: TateSeries) -> TateSeries:
    """(T_1 f)(z) = (f(z) - f(0)) / z."""
    cfg = f.cfg
    f0 = evaluate(f, cfg.zero())
    q, r = weierstrass_reduce(f - TateSeries(C0Vector(cfg, (f0,))), MonicPoly(cfg, (cfg.zero(),)))
    assert all(c.is_zero() for c in r.coeffs)
    return TateSeries(q.coeffs.truncate(max(len(f) - 1, 0)), f.tail_norm)


def weierstrass_reduce(f: TateSeries, P: MonicPoly) -> tuple[TateSeries, TateSeries]:
    """f = q P + r with deg r < deg P.

    Each step rewrites the leading z**(d+k) term via the integral polynomial
    z**d - P, which cannot raise the Gauss norm.
    """
    cfg = f.cfg
    if P.cfg.p != cfg.p:
        raise ValueError("weierstrass_reduce: mismatched primes")
    d = P.degree
    work = list(f.coeffs.entries)
    qlen = max(len(work) - d, 0)
    q = [cfg.zero()] * qlen
    for k in range(len(work) - 1, d - 1, -1):
        c = work[k]
        if c.is_exact_zero():
            continue
        q[k - d] = c
        work[k] = cfg.zero()
        for i, pc in enumerate(P.coeffs):
            work[k - d + i] = work[k - d + i] - c * pc
    r = work[:d] + [cfg.zero()] * (d - len(work))
    return (TateSeries(C0Vector(cfg, tuple(q)), f.tail_norm),
            TateSeries(C0Vector(cfg, tuple(r)), f.tail_norm))


def ideal_member(g: TateSeries, P: MonicPoly) -> tuple[bool, TateSeries]:
    """Whether g lies in P H(A_p) at the working precision, and the remainder."""
    _, r = weierstrass_reduce(g, P)
    return all(c.is_zero() for c in r.coeffs), r


def divides(P2: MonicPoly, P1: MonicPoly) -> bool:
    """True iff P2 divides P1, i.e. P1 H(A_p) is contained in P2 H(A_p)."""
    if P1.degree < P2.degree:
        return False
    member, _ = ideal_member(P1.as_series(), P2)
    return member


def commutant_poly_approx(phi: TateSeries, cutoff: int) -> tuple[tuple, Fraction]:
    """sum_{n<=cutoff} a_n S_1**n approximating multiplication by phi.

    The operator-norm error is the Gauss norm of the discarded symbol tail.
    """
    if cutoff < 0:
        raise ValueError("cutoff must be >= 0")
    cfg = phi.cfg
    coeffs = tuple(phi[n] for n in range(cutoff + 1))
    rest = C0Vector(cfg, phi.coeffs.entries[cutoff + 1:]).norm()
    return coeffs, max(rest, phi.tail_norm)


def apply_shift_polynomial(coeffs: Sequence[PadicScalar], f: TateSeries) -> TateSeries:
    """(sum_n c_n S_1**n) f, built from repeated applications of S_1."""
    cfg = f.cfg
    total = TateSeries(C0Vector.zeros(0, cfg))
    power = f
    for c in coeffs:
        total = total + power.scale(c)
        power = S1_apply(power)
    return total


def multiplication_operator(phi: TateSeries):
    """M_phi as a callable f -> phi f."""
    return lambda f: multiply(phi, f)
