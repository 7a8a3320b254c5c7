"""Truncated c_0 and l^infinity, the unilateral shift S and backward shift T.

A vector of length L stands for a sequence whose entries past L-1 are
exactly zero.  Operators change L explicitly; nothing is padded behind the
caller's back except in equality, where the zero tail is part of the
meaning.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .padic import (
    INFINITE,
    DomainError,
    PadicScalar,
    PrecisionError,
    PrimeConfig,
    norm_of_exponent,
)

QUADRATIC = "quadratic"
DOUBLY_EXPONENTIAL = "doubly-exponential"
CYCLIC_KINDS = (QUADRATIC, DOUBLY_EXPONENTIAL)

# Largest valuation a generated cyclic vector may carry.
MAX_CYCLIC_VALUATION = 1 << 12


class PrecisionOverflow(PrecisionError, OverflowError):
    pass


@dataclass(frozen=True, eq=False)
class C0Vector:
    """A finitely supported element of c_0."""

    cfg: PrimeConfig
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        for i, x in enumerate(self.entries):
            if not isinstance(x, PadicScalar):
                raise TypeError(f"entry {i} is not a PadicScalar")
            if x.p != self.cfg.p:
                raise ValueError(f"entry {i} has prime {x.p}, expected {self.cfg.p}")

    @classmethod
    def from_values(cls, values: Iterable, cfg: PrimeConfig):
        return cls(cfg, tuple(v if isinstance(v, PadicScalar) else cfg(v) for v in values))

    @classmethod
    def zeros(cls, length: int, cfg: PrimeConfig):
        return cls(cfg, (cfg.zero(),) * length)

    @classmethod
    def unit_vector(cls, n: int, length: int, cfg: PrimeConfig):
        if not 0 <= n < length:
            raise ValueError(f"e_{n} does not fit in length {length}")
        return cls(cfg, tuple(cfg.one() if i == n else cfg.zero() for i in range(length)))

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def entry(self, n: int) -> PadicScalar:
        """x_n, reading past the stored length as exact zero."""
        return self.entries[n] if n < len(self.entries) else self.cfg.zero()

    def norm(self) -> Fraction:
        return sup_norm(self)

    def norm_exponent(self):
        return min((x.val for x in self.entries), default=INFINITE)

    def _like(self, entries):
        return type(self)(self.cfg, tuple(entries))

    def __add__(self, other: "C0Vector") -> "C0Vector":
        n = max(len(self), len(other))
        return self._like(self.entry(i) + other.entry(i) for i in range(n))

    def __sub__(self, other: "C0Vector") -> "C0Vector":
        n = max(len(self), len(other))
        return self._like(self.entry(i) - other.entry(i) for i in range(n))

    def __neg__(self) -> "C0Vector":
        return self._like(-x for x in self.entries)

    def scale(self, c) -> "C0Vector":
        return self._like(c * x for x in self.entries)

    def truncate(self, length: int) -> "C0Vector":
        return self._like(self.entry(i) for i in range(length))

    def __eq__(self, other) -> bool:
        if not isinstance(other, C0Vector):
            return NotImplemented
        n = max(len(self), len(other))
        return all(self.entry(i) == other.entry(i) for i in range(n))

    __hash__ = None

    def valuations(self) -> list:
        return [x.val for x in self.entries]

    def __repr__(self) -> str:
        return f"{type(self).__name__}(p={self.cfg.p}, {list(self.entries)!r})"


@dataclass(frozen=True, eq=False)
class BoundedVector(C0Vector):
    """A truncation of an element of l^infinity, optionally with a declared bound."""

    bound: Optional[Fraction] = None

    def __post_init__(self):
        super().__post_init__()
        if self.bound is not None and sup_norm(self) > self.bound:
            raise DomainError(f"norm {sup_norm(self)} exceeds declared bound {self.bound}")

    def _like(self, entries):
        return BoundedVector(self.cfg, tuple(entries))


def sup_norm(x: C0Vector) -> Fraction:
    return norm_of_exponent(x.cfg.p, x.norm_exponent())


def shift_S(x: C0Vector) -> C0Vector:
    return x._like((x.cfg.zero(),) + x.entries)


def shift_T(x: C0Vector) -> C0Vector:
    return x._like(x.entries[1:])


def pairing(x: C0Vector, y: C0Vector) -> PadicScalar:
    """<x, y> = sum_n x_n y_n over the overlapping indices."""
    if x.cfg.p != y.cfg.p:
        raise ValueError("pairing: mismatched primes")
    total = x.cfg.zero()
    for a, b in zip(x.entries, y.entries):
        total = total + a * b
    return total


def annihilator_geometric(a: PadicScalar, length: int) -> BoundedVector:
    """(a**n) truncated: the annihilator of the closure of {Sb - a b}."""
    if a.val < 0:
        raise DomainError(f"annihilator_geometric needs |a|_p <= 1, got valuation {a.val}")
    cfg = a.cfg
    out = []
    cur = cfg.one()
    for _ in range(length):
        out.append(cur)
        cur = cur * a
    return BoundedVector(cfg, tuple(out), Fraction(1))


def cyclic_valuation(kind: str, k: int, p: int) -> int:
    if kind == QUADRATIC:
        return k * (k + 1) // 2
    if kind == DOUBLY_EXPONENTIAL:
        return p ** k
    raise ValueError(f"unknown cyclic kind {kind!r}; expected one of {CYCLIC_KINDS}")


def cyclic_vector(kind: str, k0: int, length: int, cfg: PrimeConfig,
                  max_valuation: int = MAX_CYCLIC_VALUATION) -> C0Vector:
    """x_k = 1 for k < k0 and x_k = p**v(k) beyond, with gaps v(k+1) - v(k) unbounded."""
    if not 0 <= k0 < length:
        raise ValueError(f"need 0 <= k0 < length, got k0={k0}, length={length}")
    top = cyclic_valuation(kind, length - 1, cfg.p)
    if top > max_valuation:
        raise PrecisionOverflow(
            f"{kind} cyclic vector of length {length} needs valuation {top} "
            f"> budget {max_valuation}")
    return C0Vector(cfg, tuple(
        cfg.one() if k < k0 else cfg.power_of_p(cyclic_valuation(kind, k, cfg.p))
        for k in range(length)))


def cyclic_error(x: C0Vector, k: int) -> Fraction:
    """|| x_k^{-1} T^k x - e_0 ||, computed from the vectors themselves."""
    return basis_error(x, 0, k)


def basis_error(x: C0Vector, n: int, k: int) -> Fraction:
    """Distance from e_n of x_k^{-1} (T^{k-n} x - sum_{i<n} x_{k-n+i} e_i).

    The subtracted part lies in the span of e_0..e_{n-1}, so a small value
    certifies e_n is close to the closed span of the T-orbit of x once the
    earlier basis vectors are known to be there.
    """
    if not 0 <= n <= k:
        raise ValueError(f"need 0 <= n <= k, got n={n}, k={k}")
    xk = x.entry(k)
    if xk.is_zero():
        if xk.is_exact_zero():
            raise DomainError(f"x_{k} is zero")
        raise PrecisionError(f"x_{k} is zero at precision O({x.cfg.p}^{xk.absprec})")
    v = x
    for _ in range(k - n):
        v = shift_T(v)
    head = C0Vector(x.cfg, v.entries[:n])
    v = v - head
    target = C0Vector.unit_vector(n, max(len(v), n + 1), x.cfg)
    return sup_norm(v.scale(x.cfg.one() / xk) - target)


def densify_cyclic(y: C0Vector, epsilon: Fraction, kind: str = QUADRATIC,
                   tail: int = 6) -> tuple[C0Vector, int]:
    """A cyclic vector within epsilon of y.

    Keeps y_0..y_{k0-1} and continues with the cyclic vector's entries from
    k0 on, where k0 is the first index past which both y and the cyclic
    vector stay below epsilon.  Returns the new vector and k0.
    """
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    cfg = y.cfg
    for j, yj in enumerate(y.entries):
        if yj.is_zero() and not yj.is_exact_zero() and norm_of_exponent(cfg.p, yj.absprec) >= epsilon:
            raise PrecisionError(
                f"y_{j} is only known modulo {cfg.p}^{yj.absprec}; "
                f"cannot certify |y_{j}|_p < {epsilon}")
    k0 = len(y)
    while k0 > 0 and y.entries[k0 - 1].norm() < epsilon:
        k0 -= 1
    while norm_of_exponent(cfg.p, cyclic_valuation(kind, k0, cfg.p)) >= epsilon:
        k0 += 1
    length = max(len(y), k0) + tail
    x = cyclic_vector(kind, 0, length, cfg)
    return C0Vector(cfg, tuple(y.entry(j) if j < k0 else x[j] for j in range(length))), k0
