"""Continuous functions on Z_p through their values on 0..M.

Mahler coefficients are iterated forward differences at 0 and use only
integer binomials, so the transform never divides by p.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable

from .padic import DomainError, PadicScalar, PrimeConfig
from .sequences import C0Vector

MahlerCoeffs = C0Vector


@dataclass(frozen=True, eq=False)
class GridFunction:
    """phi(0), ..., phi(M)."""

    cfg: PrimeConfig
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if not self.values:
            raise ValueError("a grid function needs at least phi(0)")
        for i, v in enumerate(self.values):
            if not isinstance(v, PadicScalar) or v.p != self.cfg.p:
                raise ValueError(f"value {i} is not a scalar over p={self.cfg.p}")

    @classmethod
    def from_values(cls, values: Iterable, cfg: PrimeConfig) -> "GridFunction":
        return cls(cfg, tuple(v if isinstance(v, PadicScalar) else cfg(v) for v in values))

    @classmethod
    def constant(cls, c, M: int, cfg: PrimeConfig) -> "GridFunction":
        c = c if isinstance(c, PadicScalar) else cfg(c)
        return cls(cfg, (c,) * (M + 1))

    @property
    def M(self) -> int:
        return len(self.values) - 1

    def __call__(self, x: int) -> PadicScalar:
        return self.values[x]

    def scale(self, c) -> "GridFunction":
        return GridFunction(self.cfg, tuple(c * v for v in self.values))

    def restrict(self, M: int) -> "GridFunction":
        return GridFunction(self.cfg, self.values[:M + 1])

    def sup_norm(self):
        return C0Vector(self.cfg, self.values).norm()

    def __eq__(self, other) -> bool:
        if not isinstance(other, GridFunction):
            return NotImplemented
        return len(self.values) == len(other.values) and all(
            a == b for a, b in zip(self.values, other.values))

    __hash__ = None

    def __repr__(self) -> str:
        return f"GridFunction(p={self.cfg.p}, M={self.M}, {list(self.values)!r})"


def mahler_P(n: int, x: int, cfg: PrimeConfig) -> PadicScalar:
    """P_n(x) = x(x-1)...(x-n+1)/n!, i.e. binomial(x, n) for integer x >= 0."""
    if n < 0:
        raise ValueError("mahler_P needs n >= 0")
    if x < 0:
        raise DomainError("grid points are nonnegative integers")
    return cfg(comb(x, n))


def mahler_coeffs(phi: GridFunction) -> MahlerCoeffs:
    """b_n = (Delta^n phi)(0) for n = 0..M."""
    row = list(phi.values)
    out = []
    while row:
        out.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    return C0Vector(phi.cfg, tuple(out))


def mahler_eval(b: MahlerCoeffs, x: int) -> PadicScalar:
    """sum_n b_n binomial(x, n); terms with n > x vanish."""
    if x < 0:
        raise DomainError("grid points are nonnegative integers")
    total = b.cfg.zero()
    for n in range(min(len(b), x + 1)):
        total = total + b[n] * comb(x, n)
    return total


def mahler_function(b: MahlerCoeffs, M: int) -> GridFunction:
    """Values of sum_n b_n P_n on 0..M."""
    return GridFunction(b.cfg, tuple(mahler_eval(b, x) for x in range(M + 1)))


def indefinite_sum(phi: GridFunction) -> GridFunction:
    """(S_2 phi)(n) = phi(0) + ... + phi(n-1) on 0..M."""
    if phi.M < 1:
        raise ValueError("indefinite_sum needs M >= 1")
    out = [phi.cfg.zero()]
    for v in phi.values[:-1]:
        out.append(out[-1] + v)
    return GridFunction(phi.cfg, tuple(out))


def difference(phi: GridFunction) -> GridFunction:
    """(T_2 phi)(x) = phi(x+1) - phi(x) on 0..M-1."""
    if phi.M < 1:
        raise ValueError("difference needs M >= 1")
    v = phi.values
    return GridFunction(phi.cfg, tuple(v[x + 1] - v[x] for x in range(phi.M)))


def shifted_convolution(phi: GridFunction, psi: GridFunction) -> GridFunction:
    """(phi *_ psi)(n) = sum_{i+j=n-1} phi(i) psi(j) on 0..min(M_phi, M_psi)."""
    if phi.cfg.p != psi.cfg.p:
        raise ValueError("shifted_convolution: mismatched primes")
    M = min(phi.M, psi.M)
    out = [phi.cfg.zero()]
    for n in range(1, M + 1):
        total = phi.cfg.zero()
        for i in range(n):
            total = total + phi(i) * psi(n - 1 - i)
        out.append(total)
    return GridFunction(phi.cfg, tuple(out))


def coherent_state(lam: PadicScalar, M: int) -> GridFunction:
    """phi_lambda(x) = (1 + lambda)**x, the eigenfunction of T_2 for lambda.

    Over Q_p the admissible eigenvalues are lambda in pZ_p.
    """
    if lam.val < 1:
        raise DomainError(
            f"coherent_state needs |lambda|_p < 1 (valuation >= 1), got valuation {lam.val}")
    cfg = lam.cfg
    base = cfg.one() + lam
    out = [cfg.one()]
    for _ in range(M):
        out.append(out[-1] * base)
    return GridFunction(cfg, tuple(out))
