"""JSON encodings of scalars, vectors, grids, series, polynomials and matrices.

Scalars may be given as integers, rational strings ``"a/b"``, the
zero-at-precision form ``"O(p^k)"``, or the digit form
``{"p": 5, "prec": 24, "val": 2, "digits": [1, 3, 0]}``.  Output always
uses the canonical rational representative as a string.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any, Optional

from .mahler import GridFunction
from .models import ContractionMatrix, FactorialSeries
from .padic import INFINITE, PadicScalar, PrimeConfig, from_rational
from .sequences import BoundedVector, C0Vector
from .tate import MonicPoly, TateSeries

_BIG_O = re.compile(r"^\s*O\(\s*(\d+)\s*\^\s*(-?\d+)\s*\)\s*$")


class ParseError(ValueError):
    """Malformed input; ``field`` names where it went wrong."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def load_json(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(source, f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}")


def dump_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def parse_scalar(obj: Any, cfg: PrimeConfig, field: str = "value") -> PadicScalar:
    if isinstance(obj, bool):
        raise ParseError(field, "booleans are not scalars")
    if isinstance(obj, int):
        return cfg(obj)
    if isinstance(obj, str):
        m = _BIG_O.match(obj)
        if m:
            if int(m.group(1)) != cfg.p:
                raise ParseError(field, f"O-term uses prime {m.group(1)}, expected {cfg.p}")
            return cfg.zero_at(int(m.group(2)))
        try:
            q = Fraction(obj.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(field, f"not a rational 'a/b': {obj!r} ({exc})")
        return from_rational(q, 1, cfg)
    if isinstance(obj, dict):
        return _parse_digit_form(obj, cfg, field)
    raise ParseError(field, f"cannot read a scalar from {type(obj).__name__}")


def _parse_digit_form(obj: dict, cfg: PrimeConfig, field: str) -> PadicScalar:
    p = obj.get("p", cfg.p)
    if p != cfg.p:
        raise ParseError(f"{field}.p", f"prime {p} does not match {cfg.p}")
    digits = obj.get("digits", [])
    if not isinstance(digits, list) or any(
            not isinstance(d, int) or isinstance(d, bool) or not 0 <= d < p for d in digits):
        raise ParseError(f"{field}.digits", f"digits must be integers in [0, {p})")
    val = obj.get("val")
    absprec = obj.get("absprec")
    if val is None:
        if digits:
            raise ParseError(f"{field}.digits", "a zero (val null) has no digits")
        return cfg.zero() if absprec is None else cfg.zero_at(absprec)
    if not isinstance(val, int):
        raise ParseError(f"{field}.val", "valuation must be an integer or null")
    if not digits or digits[0] == 0:
        raise ParseError(f"{field}.digits", "leading digit must be nonzero")
    unit = sum(d * p ** i for i, d in enumerate(digits))
    if absprec is None:
        absprec = val + cfg.N
    if absprec - val < len(digits):
        raise ParseError(f"{field}.absprec", "fewer known digits than listed")
    return PadicScalar._normalize(cfg, unit, val, absprec)


def scalar_str(x: PadicScalar) -> str:
    if x.is_zero():
        return "0" if x.is_exact_zero() else f"O({x.p}^{x.absprec})"
    return str(x.lift())


def dump_scalar(x: PadicScalar) -> dict:
    out = {"p": x.p, "prec": x.cfg.N, "val": None if x.is_zero() else x.val,
           "digits": x.digits}
    if x.is_zero():
        if not x.is_exact_zero():
            out["absprec"] = x.absprec
    elif x.relprec != x.cfg.N:
        out["absprec"] = x.absprec
    return out


def norm_str(r: Fraction) -> str:
    return str(Fraction(r))


def exponent_json(e):
    return None if e == INFINITE else e


DEFAULT_P = 5
DEFAULT_PREC = 24


def config_from(obj: dict, p: Optional[int], prec: Optional[int], field: str) -> PrimeConfig:
    """Prime and precision from the document, then the flags, then the defaults."""
    file_p = obj.get("p")
    file_prec = obj.get("prec")
    if file_p is not None and p is not None and file_p != p:
        raise ParseError(f"{field}.p", f"file says p={file_p} but --p {p} was given")
    use_p = file_p if file_p is not None else p
    use_prec = file_prec if file_prec is not None else prec
    use_p = DEFAULT_P if use_p is None else use_p
    use_prec = DEFAULT_PREC if use_prec is None else use_prec
    if not isinstance(use_p, int) or not isinstance(use_prec, int):
        raise ParseError(field, "p and prec must be integers")
    try:
        return PrimeConfig(use_p, use_prec)
    except ValueError as exc:
        raise ParseError(field, str(exc))


def _scalar_list(obj: dict, key: str, cfg: PrimeConfig, field: str) -> tuple:
    items = obj.get(key)
    if not isinstance(items, list):
        raise ParseError(f"{field}.{key}", "expected a list")
    return tuple(parse_scalar(v, cfg, f"{field}.{key}[{i}]") for i, v in enumerate(items))


def _require_dict(obj: Any, field: str) -> dict:
    if not isinstance(obj, dict):
        raise ParseError(field, "expected a JSON object")
    return obj


def parse_vector(obj: Any, p=None, prec=None, field="vector", bounded=False) -> C0Vector:
    obj = _require_dict(obj, field)
    cfg = config_from(obj, p, prec, field)
    entries = _scalar_list(obj, "entries", cfg, field)
    return BoundedVector(cfg, entries) if bounded else C0Vector(cfg, entries)


def dump_vector(v: C0Vector, key: str = "entries") -> dict:
    return {"p": v.cfg.p, "prec": v.cfg.N, key: [scalar_str(x) for x in v]}


def parse_grid(obj: Any, p=None, prec=None, field="grid") -> GridFunction:
    obj = _require_dict(obj, field)
    cfg = config_from(obj, p, prec, field)
    values = _scalar_list(obj, "values", cfg, field)
    if not values:
        raise ParseError(f"{field}.values", "need at least one value")
    M = obj.get("M")
    if M is not None and M != len(values) - 1:
        raise ParseError(f"{field}.M", f"M={M} but {len(values)} values were given")
    return GridFunction(cfg, values)


def dump_grid(phi: GridFunction) -> dict:
    return {"p": phi.cfg.p, "prec": phi.cfg.N, "M": phi.M,
            "values": [scalar_str(x) for x in phi.values]}


def parse_series(obj: Any, p=None, prec=None, field="series") -> TateSeries:
    obj = _require_dict(obj, field)
    cfg = config_from(obj, p, prec, field)
    return TateSeries(C0Vector(cfg, _scalar_list(obj, "coeffs", cfg, field)))


def dump_series(f: TateSeries) -> dict:
    out = dump_vector(f.coeffs, "coeffs")
    out["tail_norm"] = norm_str(f.tail_norm)
    return out


def parse_poly(obj: Any, cfg: PrimeConfig, field="poly") -> MonicPoly:
    obj = _require_dict(obj, field)
    d = obj.get("monic_degree")
    coeffs = obj.get("coeffs")
    if not isinstance(d, int) or d < 1:
        raise ParseError(f"{field}.monic_degree", "expected an integer >= 1")
    if not isinstance(coeffs, list):
        raise ParseError(f"{field}.coeffs", "expected a list")
    # either the d lower coefficients, or all d+1 with a trailing 1
    if len(coeffs) == d + 1:
        lead = parse_scalar(coeffs[-1], cfg, f"{field}.coeffs[{d}]")
        if lead != 1:
            raise ParseError(f"{field}.coeffs[{d}]", "leading coefficient must be 1")
        coeffs = coeffs[:-1]
    if len(coeffs) != d:
        raise ParseError(f"{field}.coeffs", f"expected {d} coefficients for monic degree {d}")
    return MonicPoly(cfg, tuple(parse_scalar(c, cfg, f"{field}.coeffs[{i}]")
                                for i, c in enumerate(coeffs)))


def dump_poly(P: MonicPoly) -> dict:
    return {"monic_degree": P.degree, "coeffs": [scalar_str(c) for c in P.coeffs]}


def parse_matrix(obj: Any, cfg: PrimeConfig, field="matrix") -> ContractionMatrix:
    obj = _require_dict(obj, field)
    rows = obj.get("rows")
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError(f"{field}.rows", "expected a list of lists")
    d = obj.get("d", len(rows))
    if d != len(rows):
        raise ParseError(f"{field}.d", f"d={d} but {len(rows)} rows were given")
    return ContractionMatrix(cfg, tuple(
        tuple(parse_scalar(a, cfg, f"{field}.rows[{i}][{j}]") for j, a in enumerate(row))
        for i, row in enumerate(rows)))


def parse_factorial_series(obj: Any, p=None, prec=None, field="series") -> FactorialSeries:
    obj = _require_dict(obj, field)
    cfg = config_from(obj, p, prec, field)
    return FactorialSeries(C0Vector(cfg, _scalar_list(obj, "factorial_coeffs", cfg, field)))


def dump_factorial_series(g: FactorialSeries) -> dict:
    return dump_vector(g.coeffs, "factorial_coeffs")
