"""Capped relative-precision p-adic scalars.

A nonzero scalar is stored as ``unit * p**val + O(p**absprec)`` with
``unit`` prime to p and at most ``N`` significant digits.  Zero comes in
two flavours: the exact zero (``absprec`` infinite) and a zero known only
modulo ``p**absprec``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

INFINITE = math.inf


class PadicError(Exception):
    """Base class for errors raised by this package."""


class ConfigError(PadicError, ValueError):
    pass


class DomainError(PadicError, ValueError):
    """An operand lies outside the domain of the operation (e.g. |z|_p > 1)."""


class PrecisionError(PadicError, ZeroDivisionError):
    """The working precision cannot support the requested operation."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def int_valuation(n: int, p: int) -> float:
    """Exponent of p in the integer n; INFINITE for n == 0."""
    if n == 0:
        return INFINITE
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def digit_sum(n: int, p: int) -> int:
    s = 0
    while n:
        n, r = divmod(n, p)
        s += r
    return s


def factorial_valuation(n: int, p: int) -> int:
    """nu(n) = v_p(n!) by Legendre's formula, so that |n!|_p = p**-nu(n)."""
    if n < 0:
        raise ValueError("factorial_valuation needs n >= 0")
    total = 0
    q = n // p
    while q:
        total += q
        q //= p
    return total


@dataclass(frozen=True)
class PrimeConfig:
    """A prime together with the number of significant digits kept."""

    p: int
    N: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ConfigError(f"p must be a prime integer, got {self.p!r}")
        if not isinstance(self.N, int) or self.N < 1:
            raise ConfigError(f"precision must be an integer >= 1, got {self.N!r}")

    def __call__(self, a: Union[int, Fraction] = 0, b: int = 1) -> "PadicScalar":
        return from_rational(a, b, self)

    def zero(self) -> "PadicScalar":
        return PadicScalar(self, INFINITE, 0, INFINITE)

    def one(self) -> "PadicScalar":
        return PadicScalar(self, 0, 1, self.N)

    def power_of_p(self, k: int) -> "PadicScalar":
        return PadicScalar(self, k, 1, k + self.N)

    def zero_at(self, absprec: int) -> "PadicScalar":
        """The zero known only modulo p**absprec."""
        return PadicScalar(self, INFINITE, 0, absprec)


Number = Union["PadicScalar", int, Fraction]


class PadicScalar:
    """An element of Q_p known modulo ``p**absprec``."""

    __slots__ = ("cfg", "val", "unit", "absprec")

    def __init__(self, cfg: PrimeConfig, val, unit: int, absprec):
        self.cfg = cfg
        self.val = val
        self.unit = unit
        self.absprec = absprec

    # construction -------------------------------------------------------

    @classmethod
    def _normalize(cls, cfg: PrimeConfig, n: int, v: int, absprec) -> "PadicScalar":
        # value n * p**v known modulo p**absprec
        p = cfg.p
        if absprec != INFINITE:
            if v >= absprec:
                return cfg.zero_at(absprec)
            n %= p ** (absprec - v)
        if n == 0:
            return cfg.zero_at(absprec) if absprec != INFINITE else cfg.zero()
        while n % p == 0:
            n //= p
            v += 1
        absprec = min(absprec, v + cfg.N)
        return cls(cfg, v, n % p ** (absprec - v), absprec)

    def _coerce(self, other: Number) -> "PadicScalar":
        if isinstance(other, PadicScalar):
            if other.cfg.p != self.cfg.p:
                raise ConfigError(
                    f"mismatched primes {self.cfg.p} and {other.cfg.p}")
            return other
        if isinstance(other, (int, Fraction)):
            return from_rational(other, 1, self.cfg)
        return NotImplemented

    def _result_cfg(self, other: "PadicScalar") -> PrimeConfig:
        return self.cfg if self.cfg.N <= other.cfg.N else other.cfg

    # inspection ---------------------------------------------------------

    @property
    def p(self) -> int:
        return self.cfg.p

    @property
    def relprec(self) -> int:
        if self.is_zero():
            return 0
        return self.absprec - self.val

    def is_zero(self) -> bool:
        return self.val == INFINITE

    def is_exact_zero(self) -> bool:
        return self.val == INFINITE and self.absprec == INFINITE

    def valuation(self):
        return self.val

    def abs_exponent(self):
        """The exponent e with |x|_p = p**-e."""
        return self.val

    def norm(self) -> Fraction:
        """|x|_p as an exact rational."""
        if self.is_zero():
            return Fraction(0)
        return Fraction(1, self.p ** self.val) if self.val >= 0 else Fraction(self.p ** -self.val)

    @property
    def digits(self) -> list[int]:
        """Little-endian base-p digits of the unit part, trailing zeros dropped."""
        out = []
        n = self.unit
        while n:
            n, r = divmod(n, self.p)
            out.append(r)
        return out

    def lift(self) -> Fraction:
        """The canonical rational representative unit * p**val."""
        if self.is_zero():
            return Fraction(0)
        if self.val >= 0:
            return Fraction(self.unit * self.p ** self.val)
        return Fraction(self.unit, self.p ** -self.val)

    # arithmetic ---------------------------------------------------------

    def __add__(self, other: Number) -> "PadicScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        cfg = self._result_cfg(other)
        if self.is_exact_zero():
            return other if other.cfg is cfg else _recap(other, cfg)
        if other.is_exact_zero():
            return self if self.cfg is cfg else _recap(self, cfg)
        absprec = min(self.absprec, other.absprec)
        live = [x for x in (self, other) if not x.is_zero()]
        if not live:
            return cfg.zero_at(absprec)
        v0 = min(x.val for x in live)
        n = sum(x.unit * cfg.p ** (x.val - v0) for x in live)
        return PadicScalar._normalize(cfg, n, v0, absprec)

    __radd__ = __add__

    def __neg__(self) -> "PadicScalar":
        if self.is_zero():
            return self
        mod = self.p ** self.relprec
        return PadicScalar(self.cfg, self.val, (-self.unit) % mod, self.absprec)

    def __sub__(self, other: Number) -> "PadicScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Number) -> "PadicScalar":
        return (-self) + other

    def __mul__(self, other: Number) -> "PadicScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        cfg = self._result_cfg(other)
        if self.is_exact_zero() or other.is_exact_zero():
            return cfg.zero()
        if self.is_zero() or other.is_zero():
            if self.is_zero() and other.is_zero():
                return cfg.zero_at(self.absprec + other.absprec)
            z, x = (self, other) if self.is_zero() else (other, self)
            return cfg.zero_at(z.absprec + x.val)
        rel = min(self.relprec, other.relprec, cfg.N)
        v = self.val + other.val
        unit = (self.unit * other.unit) % cfg.p ** rel
        return PadicScalar(cfg, v, unit, v + rel)

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "PadicScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        cfg = self._result_cfg(other)
        if other.is_exact_zero():
            raise ZeroDivisionError("division by exact zero")
        if other.is_zero():
            raise PrecisionError(
                f"divisor is zero at precision O({cfg.p}^{other.absprec}); "
                "cannot tell it from a nonzero value")
        if self.is_exact_zero():
            return cfg.zero()
        if self.is_zero():
            return cfg.zero_at(self.absprec - other.val)
        rel = min(self.relprec, other.relprec, cfg.N)
        mod = cfg.p ** rel
        v = self.val - other.val
        return PadicScalar(cfg, v, self.unit * pow(other.unit, -1, mod) % mod, v + rel)

    def __rtruediv__(self, other: Number) -> "PadicScalar":
        return self._coerce(other) / self

    def __pow__(self, n: int) -> "PadicScalar":
        if n < 0:
            return self.cfg.one() / self ** (-n)
        result = self.cfg.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other) if isinstance(other, (PadicScalar, int, Fraction)) else NotImplemented
        if other is NotImplemented:
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __repr__(self) -> str:
        if self.is_exact_zero():
            return f"PadicScalar(0, p={self.p})"
        if self.is_zero():
            return f"PadicScalar(O({self.p}^{self.absprec}), p={self.p})"
        return (f"PadicScalar(val={self.val}, digits={self.digits}, "
                f"O({self.p}^{self.absprec}), p={self.p})")


def _recap(x: PadicScalar, cfg: PrimeConfig) -> PadicScalar:
    if x.is_zero():
        return PadicScalar(cfg, INFINITE, 0, x.absprec)
    absprec = min(x.absprec, x.val + cfg.N)
    return PadicScalar(cfg, x.val, x.unit % cfg.p ** (absprec - x.val), absprec)


def from_rational(a: Union[int, Fraction], b: int, cfg: PrimeConfig) -> PadicScalar:
    """The p-adic expansion of a/b to ``cfg.N`` significant digits."""
    if b == 0:
        raise ZeroDivisionError("from_rational: denominator is zero")
    q = Fraction(a) / b
    if q == 0:
        return cfg.zero()
    p = cfg.p
    num, den = q.numerator, q.denominator
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    mod = p ** cfg.N
    return PadicScalar(cfg, v, num * pow(den, -1, mod) % mod, v + cfg.N)


def add(x: PadicScalar, y: PadicScalar) -> PadicScalar:
    return x + y


def sub(x: PadicScalar, y: PadicScalar) -> PadicScalar:
    return x - y


def neg(x: PadicScalar) -> PadicScalar:
    return -x


def mul(x: PadicScalar, y: PadicScalar) -> PadicScalar:
    return x * y


def div(x: PadicScalar, y: PadicScalar) -> PadicScalar:
    return x / y


def valuation(x: PadicScalar):
    return x.valuation()


def abs_exponent(x: PadicScalar):
    return x.abs_exponent()


def norm_of_exponent(p: int, e) -> Fraction:
    """p**-e as an exact rational (0 for INFINITE)."""
    if e == INFINITE:
        return Fraction(0)
    return Fraction(1, p ** e) if e >= 0 else Fraction(p ** -e)


def exponent_of_norm(p: int, r: Fraction):
    """Inverse of :func:`norm_of_exponent` for exact powers of p."""
    r = Fraction(r)
    if r == 0:
        return INFINITE
    num_v = int_valuation(r.numerator, p)
    den_v = int_valuation(r.denominator, p)
    if r.numerator != p ** num_v or r.denominator != p ** den_v:
        raise ValueError(f"{r} is not a power of {p}")
    return den_v - num_v
