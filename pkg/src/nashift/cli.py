"""Command-line interface: ``nashift <group> <action> [flags]``.

Inputs are JSON files or inline JSON; output is JSON on stdout (or --out).
Exit codes: 1 input parse error, 2 precondition violation, 3 precision
exhaustion.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import formats as fmt
from . import mahler, models, sequences, tate
from .demos import DEMOS
from .formats import ParseError, dump_json
from .padic import ConfigError, PadicError, PrecisionError, exponent_of_norm

EXIT_PARSE = 1
EXIT_PRECONDITION = 2
EXIT_PRECISION = 3


def _read(value: str, field: str):
    if value is None:
        raise ParseError(field, "missing required input")
    text = value
    if not value.lstrip().startswith(("{", "[")):
        try:
            text = Path(value).read_text()
        except OSError as exc:
            raise ParseError(field, f"cannot read {value!r}: {exc.strerror}")
    return fmt.load_json(text, field)


def _cfg(args, field="flags"):
    return fmt.config_from({}, args.p, args.prec, field)


def _norm(r: Fraction, p: int) -> dict:
    return {"norm": fmt.norm_str(r), "exponent": fmt.exponent_json(exponent_of_norm(p, r))}


def _int_arg(value, field):
    if value is None:
        raise ParseError(field, "missing required integer")
    return value


# mahler ----------------------------------------------------------------

def cmd_mahler_coeffs(args):
    phi = fmt.parse_grid(_read(args.phi, "--phi"), args.p, args.prec, "--phi")
    b = mahler.mahler_coeffs(phi)
    return {"coeffs": fmt.dump_vector(b, "coeffs"), **_norm(b.norm(), b.cfg.p)}


def cmd_mahler_eval(args):
    if args.b is None:
        cfg = _cfg(args)
        n, x = _int_arg(args.n, "--n"), _int_arg(args.x, "--x")
        return {"n": n, "x": x, "value": fmt.scalar_str(mahler.mahler_P(n, x, cfg))}
    b = fmt.parse_vector(_read(args.b, "--b"), args.p, args.prec, "--b")
    M = args.M if args.M is not None else len(b) - 1
    phi = mahler.mahler_function(b, M)
    return {"grid": fmt.dump_grid(phi)}


def cmd_mahler_sum(args):
    phi = fmt.parse_grid(_read(args.phi, "--phi"), args.p, args.prec, "--phi")
    return {"grid": fmt.dump_grid(mahler.indefinite_sum(phi))}


def cmd_mahler_diff(args):
    phi = fmt.parse_grid(_read(args.phi, "--phi"), args.p, args.prec, "--phi")
    return {"grid": fmt.dump_grid(mahler.difference(phi))}


def cmd_mahler_conv(args):
    phi = fmt.parse_grid(_read(args.phi, "--phi"), args.p, args.prec, "--phi")
    if args.psi is None:
        psi = mahler.GridFunction.constant(1, phi.M, phi.cfg)
    else:
        psi = fmt.parse_grid(_read(args.psi, "--psi"), phi.cfg.p, phi.cfg.N, "--psi")
    return {"grid": fmt.dump_grid(mahler.shifted_convolution(phi, psi))}


def cmd_mahler_coherent(args):
    cfg = _cfg(args)
    lam = fmt.parse_scalar(args.lam if args.lam is not None else "0", cfg, "--lam")
    M = args.M if args.M is not None else (args.len or 16)
    phi = mahler.coherent_state(lam, M)
    return {"lambda": fmt.scalar_str(lam), "grid": fmt.dump_grid(phi),
            "coeffs": fmt.dump_vector(mahler.mahler_coeffs(phi), "coeffs")}


# seq -------------------------------------------------------------------

def _vector_or_series(args, field="--x"):
    doc = _read(args.x, field)
    if isinstance(doc, dict) and "coeffs" in doc:
        return "series", fmt.parse_series(doc, args.p, args.prec, field)
    return "vector", fmt.parse_vector(doc, args.p, args.prec, field)


def cmd_seq_shift_s(args):
    kind, x = _vector_or_series(args)
    if kind == "series":
        out = tate.S1_apply(x)
        return {"series": fmt.dump_series(out), **_norm(tate.gauss_norm(out), out.cfg.p)}
    out = sequences.shift_S(x)
    return {"vector": fmt.dump_vector(out), **_norm(sequences.sup_norm(out), out.cfg.p)}


def cmd_seq_shift_t(args):
    kind, x = _vector_or_series(args)
    if kind == "series":
        out = tate.T1_apply(x)
        return {"series": fmt.dump_series(out), **_norm(tate.gauss_norm(out), out.cfg.p)}
    out = sequences.shift_T(x)
    return {"vector": fmt.dump_vector(out), **_norm(sequences.sup_norm(out), out.cfg.p)}


def cmd_seq_pair(args):
    if args.geometric is not None:
        cfg = _cfg(args)
        a = fmt.parse_scalar(args.geometric, cfg, "--geometric")
        x = sequences.annihilator_geometric(a, args.len or 16)
    else:
        x = fmt.parse_vector(_read(args.x, "--x"), args.p, args.prec, "--x", bounded=True)
    y = fmt.parse_vector(_read(args.y, "--y"), x.cfg.p, x.cfg.N, "--y")
    value = sequences.pairing(x, y)
    return {"x": fmt.dump_vector(x), "pairing": fmt.dump_scalar(value),
            "pairing_value": fmt.scalar_str(value), "zero_at_precision": value.is_zero()}


def cmd_seq_cyclic(args):
    cfg = _cfg(args)
    kind = _cyclic_kind(args.kind)
    k = args.k if args.k is not None else 0
    length = max(args.len or 0, k + 2)
    x = sequences.cyclic_vector(kind, args.k0, length, cfg)
    err = sequences.cyclic_error(x, k)
    return {"kind": kind, "k": k, "k0": args.k0, "length": length,
            "valuations": [fmt.exponent_json(v) for v in x.valuations()],
            "error": fmt.norm_str(err),
            "error_exponent": fmt.exponent_json(exponent_of_norm(cfg.p, err)),
            "basis_errors": [fmt.norm_str(sequences.basis_error(x, n, k)) for n in range(k + 1)]}


def _cyclic_kind(name):
    aliases = {"quadratic": sequences.QUADRATIC, "quadratic-gap": sequences.QUADRATIC,
               "doubly-exponential": sequences.DOUBLY_EXPONENTIAL,
               "doubly": sequences.DOUBLY_EXPONENTIAL}
    if name not in aliases:
        raise ParseError("--kind", f"unknown kind {name!r}; use quadratic or doubly-exponential")
    return aliases[name]


def cmd_seq_densify(args):
    y = fmt.parse_vector(_read(args.y, "--y"), args.p, args.prec, "--y")
    if args.eps is None:
        raise ParseError("--eps", "missing epsilon")
    try:
        eps = Fraction(args.eps)
    except (ValueError, ZeroDivisionError):
        raise ParseError("--eps", f"not a rational: {args.eps!r}")
    kind = _cyclic_kind(args.kind)
    yt, k0 = sequences.densify_cyclic(y, eps, kind)
    return {"vector": fmt.dump_vector(yt), "k0": k0,
            "distance": fmt.norm_str((yt - y).norm()),
            "errors": [fmt.norm_str(sequences.cyclic_error(yt, k)) for k in range(k0, len(yt) - 1)]}


# tate ------------------------------------------------------------------

def _series(args, attr, field):
    return fmt.parse_series(_read(getattr(args, attr), field), args.p, args.prec, field)


def cmd_tate_norm(args):
    f = _series(args, "f", "--f")
    return _norm(tate.gauss_norm(f), f.cfg.p)


def cmd_tate_mul(args):
    f = _series(args, "f", "--f")
    g = fmt.parse_series(_read(args.g, "--g"), f.cfg.p, f.cfg.N, "--g")
    return {"series": fmt.dump_series(tate.multiply(f, g, args.len))}


def cmd_tate_eval(args):
    f = _series(args, "f", "--f")
    z = fmt.parse_scalar(args.z if args.z is not None else "0", f.cfg, "--z")
    value = tate.evaluate(f, z)
    return {"value": fmt.dump_scalar(value), "value_str": fmt.scalar_str(value)}


def cmd_tate_reduce(args):
    f = _series(args, "f", "--f")
    P = fmt.parse_poly(_read(args.poly, "--poly"), f.cfg, "--poly")
    q, r = tate.weierstrass_reduce(f, P)
    return {"quotient": fmt.dump_series(q), "remainder": fmt.dump_series(r)}


def cmd_tate_member(args):
    g = _series(args, "g", "--g")
    P = fmt.parse_poly(_read(args.poly, "--poly"), g.cfg, "--poly")
    member, r = tate.ideal_member(g, P)
    rn = tate.gauss_norm(r)
    return {"member": member, "remainder": fmt.dump_series(r),
            "remainder_norm": 0 if rn == 0 else fmt.norm_str(rn)}


def cmd_tate_divides(args):
    cfg = _cfg(args)
    P1 = fmt.parse_poly(_read(args.poly, "--poly"), cfg, "--poly")
    P2 = fmt.parse_poly(_read(args.divisor, "--divisor"), cfg, "--divisor")
    return {"divides": tate.divides(P2, P1)}


def cmd_tate_commutant(args):
    phi = _series(args, "phi", "--phi")
    cutoff = args.cutoff if args.cutoff is not None else len(phi) - 1
    coeffs, err = tate.commutant_poly_approx(phi, cutoff)
    return {"cutoff": cutoff, "operator_coeffs": [fmt.scalar_str(c) for c in coeffs],
            "error": fmt.norm_str(err),
            "error_exponent": fmt.exponent_json(exponent_of_norm(phi.cfg.p, err))}


# model -----------------------------------------------------------------

def cmd_model_t3(args):
    g = fmt.parse_factorial_series(_read(args.g, "--g"), args.p, args.prec, "--g")
    out = models.T3_apply(g)
    result = {"series": fmt.dump_factorial_series(out),
              "norm": fmt.norm_str(models.factorial_norm(g)),
              "image_norm": fmt.norm_str(models.factorial_norm(out))}
    if args.radius is not None:
        result["radius_check"] = models.radius_check(args.radius, g.cfg.p)
    return result


def _matrix_and_vector(args):
    cfg = _cfg(args)
    A = fmt.parse_matrix(_read(args.matrix, "--matrix"), cfg, "--matrix")
    udoc = _read(args.u, "--u")
    if not isinstance(udoc, list):
        raise ParseError("--u", "expected a JSON list of scalars")
    u = tuple(fmt.parse_scalar(v, cfg, f"--u[{i}]") for i, v in enumerate(udoc))
    return A, u


def _dump_blocks(x: models.EVectorSequence):
    return [[fmt.scalar_str(a) for a in block] for block in x.blocks]


def cmd_model_embed(args):
    A, u = _matrix_and_vector(args)
    Wu = models.embed_W(A, u, args.len or 12)
    TWu = models.TE_apply(Wu)
    return {"Wu": _dump_blocks(Wu), "TE_Wu": _dump_blocks(TWu),
            "norm_Wu": fmt.norm_str(Wu.norm()),
            "norm_u": fmt.norm_str(models.vector_norm(u, A.cfg.p)),
            "norm_TE_Wu": fmt.norm_str(TWu.norm())}


def cmd_model_universal(args):
    A, u = _matrix_and_vector(args)
    return models.verify_universality(A, u, args.len or 12).as_dict()


# demo ------------------------------------------------------------------

def _demo(name):
    def run(args):
        cfg = _cfg(args)
        kwargs = {"seed": args.seed if args.seed is not None else 0}
        if args.len is not None:
            kwargs["length"] = args.len
        if args.trials is not None:
            kwargs["trials"] = args.trials
        return DEMOS[name](cfg, **kwargs)
    return run


# Each library operation is exposed by exactly one subcommand.
COMMANDS = {
    ("mahler", "coeffs"): (cmd_mahler_coeffs, ("mahler_coeffs",)),
    ("mahler", "eval"): (cmd_mahler_eval, ("mahler_eval", "mahler_P")),
    ("mahler", "sum"): (cmd_mahler_sum, ("indefinite_sum",)),
    ("mahler", "diff"): (cmd_mahler_diff, ("difference",)),
    ("mahler", "conv"): (cmd_mahler_conv, ("shifted_convolution",)),
    ("mahler", "coherent"): (cmd_mahler_coherent, ("coherent_state",)),
    ("seq", "shift-s"): (cmd_seq_shift_s, ("shift_S", "S1_apply", "sup_norm")),
    ("seq", "shift-t"): (cmd_seq_shift_t, ("shift_T", "T1_apply")),
    ("seq", "pair"): (cmd_seq_pair, ("pairing", "annihilator_geometric")),
    ("seq", "cyclic"): (cmd_seq_cyclic, ("cyclic_vector", "cyclic_error", "basis_error")),
    ("seq", "densify"): (cmd_seq_densify, ("densify_cyclic",)),
    ("tate", "norm"): (cmd_tate_norm, ("gauss_norm",)),
    ("tate", "mul"): (cmd_tate_mul, ("multiply",)),
    ("tate", "eval"): (cmd_tate_eval, ("evaluate",)),
    ("tate", "reduce"): (cmd_tate_reduce, ("weierstrass_reduce",)),
    ("tate", "member"): (cmd_tate_member, ("ideal_member",)),
    ("tate", "divides"): (cmd_tate_divides, ("divides",)),
    ("tate", "commutant"): (cmd_tate_commutant, ("commutant_poly_approx",)),
    ("model", "t3"): (cmd_model_t3, ("T3_apply", "factorial_norm", "radius_check")),
    ("model", "embed"): (cmd_model_embed, ("embed_W", "TE_apply")),
    ("model", "universal"): (cmd_model_universal, ("verify_universality",)),
    **{("demo", name): (_demo(name), ()) for name in DEMOS},
}

_INPUTS = {
    ("mahler", "coeffs"): ["phi"],
    ("mahler", "eval"): ["b", "n", "x", "M"],
    ("mahler", "sum"): ["phi"],
    ("mahler", "diff"): ["phi"],
    ("mahler", "conv"): ["phi", "psi"],
    ("mahler", "coherent"): ["lam", "M"],
    ("seq", "shift-s"): ["x"],
    ("seq", "shift-t"): ["x"],
    ("seq", "pair"): ["x", "y", "geometric"],
    ("seq", "cyclic"): ["kind", "k", "k0"],
    ("seq", "densify"): ["y", "eps", "kind"],
    ("tate", "norm"): ["f"],
    ("tate", "mul"): ["f", "g"],
    ("tate", "eval"): ["f", "z"],
    ("tate", "reduce"): ["f", "poly"],
    ("tate", "member"): ["g", "poly"],
    ("tate", "divides"): ["poly", "divisor"],
    ("tate", "commutant"): ["phi", "cutoff"],
    ("model", "t3"): ["g", "radius"],
    ("model", "embed"): ["matrix", "u"],
    ("model", "universal"): ["matrix", "u"],
}

_INT_INPUTS = {"n", "M", "k", "k0", "cutoff", "radius"}

_HELP = {
    "phi": "grid or series JSON (file or inline)",
    "psi": "second grid JSON; defaults to the constant 1",
    "b": "Mahler coefficient vector JSON",
    "x": "vector or series JSON",
    "y": "vector JSON",
    "f": "series JSON",
    "g": "series JSON",
    "poly": "monic polynomial JSON",
    "divisor": "monic polynomial JSON tested as a divisor of --poly",
    "matrix": "contraction matrix JSON",
    "u": "JSON list of scalars",
    "lam": "eigenvalue, e.g. '5' or '10/3'",
    "z": "evaluation point",
    "geometric": "use the annihilator (a^n) of this a as x",
    "eps": "epsilon as a rational, e.g. 1/125",
    "kind": "quadratic or doubly-exponential",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nashift", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True)
    group_parsers = {}
    for group, action in COMMANDS:
        if group not in group_parsers:
            gp = groups.add_parser(group)
            group_parsers[group] = gp.add_subparsers(dest="action", required=True)
        sp = group_parsers[group].add_parser(action)
        sp.add_argument("--p", type=int, default=None, help="prime (default 5)")
        sp.add_argument("--prec", type=int, default=None, help="significant digits (default 24)")
        sp.add_argument("--len", type=int, default=None, help="truncation length")
        sp.add_argument("--seed", type=int, default=None)
        sp.add_argument("--trials", type=int, default=None)
        sp.add_argument("--out", default=None, help="write JSON here instead of stdout")
        for name in _INPUTS.get((group, action), []):
            if name == "x" and (group, action) == ("mahler", "eval"):
                sp.add_argument("--x", type=int, default=None, help="grid point for P_n(x)")
            elif name in _INT_INPUTS:
                default = 0 if name == "k0" else None
                sp.add_argument(f"--{name}", type=int, default=default)
            elif name == "kind":
                sp.add_argument("--kind", default="quadratic", help=_HELP[name])
            else:
                sp.add_argument(f"--{name}", default=None, help=_HELP.get(name))
        sp.set_defaults(handler=COMMANDS[(group, action)][0])
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else 0
    try:
        result = args.handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ConfigError as exc:
        print(f"error: flags: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PrecisionError as exc:
        print(f"precision exhausted: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except (PadicError, ValueError, ZeroDivisionError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    text = dump_json(result)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
