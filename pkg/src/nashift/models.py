"""The differentiation model T_3 and the universal model of a contraction.

``FactorialSeries`` stores the b_n of g(z) = sum b_n z**n / n!; nothing is
ever divided by n!.  ``ContractionMatrix`` is a d x d matrix over pZ_p,
which makes ||A**n u|| <= p**-n ||u|| a one-line certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional, Sequence

from .padic import (
    INFINITE,
    DomainError,
    PadicScalar,
    PrimeConfig,
    digit_sum,
    factorial_valuation,
    norm_of_exponent,
)
from .sequences import C0Vector


@dataclass(frozen=True, eq=False)
class FactorialSeries:
    coeffs: C0Vector

    @classmethod
    def from_values(cls, values, cfg: PrimeConfig) -> "FactorialSeries":
        return cls(C0Vector.from_values(values, cfg))

    @property
    def cfg(self) -> PrimeConfig:
        return self.coeffs.cfg

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FactorialSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None


def derivative_weight(n: int) -> Fraction:
    """Coefficient of z**(n-1)/(n-1)! in d/dz [z**n / n!]."""
    return Fraction(n * factorial(n - 1), factorial(n))


def T3_apply(g: FactorialSeries) -> FactorialSeries:
    """(T_3 g)(z) = g'(z), term by term on the factorial basis."""
    cfg = g.cfg
    out = tuple(g.coeffs[n] * derivative_weight(n) for n in range(1, len(g)))
    return FactorialSeries(C0Vector(cfg, out))


def factorial_norm(g: FactorialSeries) -> Fraction:
    return g.coeffs.norm()


def radius_deficit(n: int, p: int) -> Fraction:
    """n/(p-1) - nu(n); nonnegative, and equal to s_p(n)/(p-1)."""
    return Fraction(n, p - 1) - factorial_valuation(n, p)


def radius_check(n_max: int, p: int) -> bool:
    """|z**n / n!|_p <= 1 on |z|_p <= p**(-1/(p-1)) for every n <= n_max."""
    return all(radius_deficit(n, p) >= 0 for n in range(n_max + 1))


def digit_sum_deficit(n: int, p: int) -> Fraction:
    return Fraction(digit_sum(n, p), p - 1)


@dataclass(frozen=True, eq=False)
class ContractionMatrix:
    cfg: PrimeConfig
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(a if isinstance(a, PadicScalar) else self.cfg(a) for a in row)
                     for row in self.rows)
        object.__setattr__(self, "rows", rows)
        d = len(rows)
        if d < 1:
            raise ValueError("matrix dimension must be >= 1")
        for i, row in enumerate(rows):
            if len(row) != d:
                raise ValueError(f"row {i} has length {len(row)}, expected {d}")
            for j, a in enumerate(row):
                if a.val < 1:
                    raise DomainError(
                        f"entry ({i},{j}) has valuation {a.val}; contraction entries must lie in pZ_p")

    @property
    def d(self) -> int:
        return len(self.rows)

    def apply(self, u: Sequence[PadicScalar]) -> tuple:
        if len(u) != self.d:
            raise ValueError(f"vector has dimension {len(u)}, matrix has {self.d}")
        out = []
        for row in self.rows:
            total = self.cfg.zero()
            for a, x in zip(row, u):
                total = total + a * x
            out.append(total)
        return tuple(out)


def vector_norm(u: Sequence[PadicScalar], p: int) -> Fraction:
    return norm_of_exponent(p, min((x.val for x in u), default=INFINITE))


def _vectors_equal(u: Sequence[PadicScalar], w: Sequence[PadicScalar]) -> bool:
    return len(u) == len(w) and all(a == b for a, b in zip(u, w))


@dataclass(frozen=True, eq=False)
class EVectorSequence:
    """(x_0, ..., x_{L-1}) with every x_j in Q_p**d."""

    cfg: PrimeConfig
    d: int
    blocks: tuple

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(b) for b in self.blocks))
        for j, b in enumerate(self.blocks):
            if len(b) != self.d:
                raise ValueError(f"block {j} has dimension {len(b)}, expected {self.d}")

    def __len__(self) -> int:
        return len(self.blocks)

    def __getitem__(self, j):
        return self.blocks[j]

    def norm(self) -> Fraction:
        return max((vector_norm(b, self.cfg.p) for b in self.blocks), default=Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, EVectorSequence):
            return NotImplemented
        return len(self) == len(other) and all(
            _vectors_equal(a, b) for a, b in zip(self.blocks, other.blocks))

    __hash__ = None


def embed_W(A: ContractionMatrix, u: Sequence[PadicScalar], length: int) -> EVectorSequence:
    """W u = (u, A u, ..., A**(L-1) u)."""
    u = tuple(u)
    if len(u) != A.d:
        raise ValueError(f"vector has dimension {len(u)}, matrix has {A.d}")
    blocks = []
    cur = u
    for _ in range(length):
        blocks.append(cur)
        cur = A.apply(cur)
    return EVectorSequence(A.cfg, A.d, tuple(blocks))


def TE_apply(x: EVectorSequence) -> EVectorSequence:
    """T_E (x_0, x_1, ...) = (x_1, x_2, ...)."""
    return EVectorSequence(x.cfg, x.d, x.blocks[1:])


@dataclass(frozen=True)
class UniversalityReport:
    ok: bool
    length: int
    first_mismatch: Optional[int]
    in_subspace: bool
    isometry: bool

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "length": self.length,
            "first_mismatch": self.first_mismatch,
            "in_subspace": self.in_subspace,
            "isometry": self.isometry,
        }


def verify_universality(A: ContractionMatrix, u: Sequence[PadicScalar],
                        length: int) -> UniversalityReport:
    """Check T_E W u = W A u block by block, plus range and isometry."""
    Wu = embed_W(A, u, length)
    lhs = TE_apply(Wu)
    rhs = embed_W(A, A.apply(tuple(u)), length - 1)
    mismatch = None
    for j in range(max(len(lhs), len(rhs))):
        if j >= len(lhs) or j >= len(rhs) or not _vectors_equal(lhs[j], rhs[j]):
            mismatch = j
            break
    # the image is W applied to its own first block
    in_subspace = len(lhs) == 0 or embed_W(A, lhs[0], len(lhs)) == lhs
    isometry = Wu.norm() == vector_norm(tuple(u), A.cfg.p)
    return UniversalityReport(
        ok=mismatch is None and in_subspace and isometry,
        length=length,
        first_mismatch=mismatch,
        in_subspace=in_subspace,
        isometry=isometry,
    )
