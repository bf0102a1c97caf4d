"""Command line front end: ``verify``, ``eval`` and ``braid``."""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys

import numpy as np

from . import braid, monodromy, surface
from .verify import SCHEMA, SUITES, SuiteConfig, run

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


def _real(text: str) -> float:
    """Real literal with optional ``pi`` factors (``2pi``, ``pi/2``, ``-0.5*pi``)."""
    t = text.replace(" ", "").replace("π", "pi")
    if not t:
        raise UsageError("empty number")
    sign = 1.0
    if t[0] in "+-":
        sign = -1.0 if t[0] == "-" else 1.0
        t = t[1:]
    num, _, den = t.partition("/")
    k = num.count("pi")
    rest = num.replace("pi", "").replace("*", "")
    try:
        value = float(rest) if rest else 1.0
        if den:
            value /= float(den.replace("pi", str(math.pi)))
    except ValueError:
        raise UsageError(f"malformed number {text!r}") from None
    return sign * value * math.pi ** k


_TERM = re.compile(r"[+-]?(?:[^+-]|(?<=[eE])[+-])+")


def parse_complex(text: str) -> complex:
    """Complex literal: ``a+bi``, ``a,b``, ``2i``, ``i*pi`` or ``ipi``."""
    t = text.strip().replace(" ", "").replace("π", "pi").replace("j", "i")
    if not t:
        raise UsageError("empty complex literal")
    if "," in t:
        parts = t.split(",")
        if len(parts) != 2:
            raise UsageError(f"malformed complex literal {text!r}")
        return complex(_real(parts[0]), _real(parts[1]))
    if not t.startswith(("+", "-")):
        t = "+" + t
    total = 0j
    terms = _TERM.findall(t)
    if "".join(terms) != t:
        raise UsageError(f"malformed complex literal {text!r}")
    for term in terms:
        body = term.replace("pi", "P")
        imag = body.count("i")
        if imag > 1:
            raise UsageError(f"malformed complex literal {text!r}")
        body = body.replace("i", "").replace("P", "pi")
        if body in ("+", "-"):
            body += "1"
        body = body.replace("+*", "+").replace("-*", "-").rstrip("*")
        try:
            value = _real(body)
        except UsageError:
            raise UsageError(f"malformed complex literal {text!r}") from None
        total += complex(0, value) if imag else value
    return total


def _triple(text: str, parse) -> tuple:
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"expected three comma-separated values, got {text!r}")
    return tuple(parse(p) for p in parts)


def _dump(obj, out) -> None:
    out.write(json.dumps(obj, indent=2) + "\n")


def _c(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


# -- verify ------------------------------------------------------------------

def cmd_verify(args) -> int:
    seed = args.seed
    if seed is None:
        env = os.environ.get("D4SHEAR_SEED", "0")
        try:
            seed = int(env)
        except ValueError:
            raise UsageError(f"D4SHEAR_SEED must be an integer, got {env!r}") from None
    try:
        cfg = SuiteConfig(args.suite, seed, args.samples, args.abs_tol, args.rel_tol)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = run(cfg, timings=args.timings)
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            _dump(report, fh)
    else:
        _dump(report, sys.stdout)
    return EXIT_OK if report["ok"] else EXIT_FAILED


# -- eval --------------------------------------------------------------------

def _y_values(args) -> tuple:
    singles = (args.y1, args.y2, args.y3)
    if args.y is not None and any(s is not None for s in singles):
        raise UsageError("use either --y or --y1/--y2/--y3")
    if args.y is not None:
        return _triple(args.y, parse_complex)
    if all(s is not None for s in singles):
        return tuple(parse_complex(s) for s in singles)
    raise UsageError("shear coordinates required: --y or --y1 --y2 --y3")


def _params(args) -> surface.HoleParams:
    if args.g is not None and args.orbifold is not None:
        raise UsageError("use either --g or --orbifold")
    if args.orbifold is not None:
        try:
            orders = [int(k) for k in args.orbifold.split(",")]
            if len(orders) != 3:
                raise ValueError
            return surface.HoleParams.orbifold(orders)
        except ValueError as exc:
            raise UsageError(f"bad orbifold orders {args.orbifold!r}: {exc}") from None
    if args.g is not None:
        return surface.HoleParams.values(_triple(args.g, parse_complex))
    return surface.HoleParams.values((0, 0, 0))


def cmd_eval(args) -> int:
    Y = _y_values(args)
    params = _params(args)
    point = surface.mu_eval(Y, params)
    out = {"schema": SCHEMA, "Y": [_c(y) for y in Y],
           "G": [_c(g) for g in params.numeric()], "point": point.to_dict()}
    leaf = surface.degenerate_leaf_report(Y, params)
    if leaf is not None:
        out["degenerate_leaf"] = leaf
    _dump(out, sys.stdout)
    return EXIT_OK


# -- braid -------------------------------------------------------------------

def _triple_dict(t) -> dict:
    names = ("G12", "G23", "G13", "w12", "w23", "w13")
    return {n: (_c(v) if isinstance(v, (complex, float, int, np.number)) else str(v))
            for n, v in zip(names, t)}


def _braid_abstract(word) -> dict:
    t = braid.AbstractTriple.symbolic()
    after = braid.act_classical(word, t)
    return {"before": _triple_dict(t), "after": _triple_dict(after),
            "identity": after == t, "casimir_invariant": not (after.casimir() - t.casimir())}


def _braid_quantum(word) -> dict:
    t = braid.quantum_abstract_triple()
    after = braid.act_quantum(word, t)
    return {"before": _triple_dict(t), "after": _triple_dict(after), "identity": after == t,
            "terms": [len(x) for x in after]}


def _braid_matrix(word, seed: int) -> dict:
    m = monodromy.sample_triple(seed)
    after = monodromy.braid_matrices_word(m, word)
    before_vals = braid.AbstractTriple(*m.trace_coordinates())
    predicted = braid.act_classical(word, before_vals)
    got = after.trace_coordinates()
    dev = max((abs(a - b) / max(1.0, abs(b)) for a, b in zip(got, predicted)), default=0.0)
    return {"before": {"matrices": m.to_json_obj(), "traces": _triple_dict(before_vals)},
            "after": {"matrices": after.to_json_obj(), "traces": _triple_dict(got)},
            "polynomial_prediction": _triple_dict(predicted),
            "max_rel_deviation": float(f"{dev:.3e}"),
            "trace_M1M2M3": {"before": _c(np.trace(m.m1 @ m.m2 @ m.m3)),
                             "after": _c(np.trace(after.m1 @ after.m2 @ after.m3))}}


def _braid_shear(word, args) -> dict:
    if args.y is not None:
        Y = _triple(args.y, parse_complex)
        G = _triple(args.g, parse_complex) if args.g is not None else (0, 0, 0)
        s = braid.ShearState(Y, G)
    else:
        s = braid.random_shear_states(np.random.default_rng([args.seed, 0]), 1)[0]
    step = braid.braid_shear_realized if args.realized else braid.braid_shear
    cur = s
    for g in word:
        cur = step(cur, g)
    return {"before": s.to_dict(), "after": cur.to_dict(),
            "realized": bool(args.realized),
            "values": {"before": _triple_dict(s.values()), "after": _triple_dict(cur.values())},
            "G_inf": {"before": _c(s.g_infinity()), "after": _c(cur.g_infinity())},
            "casimir": {"before": _c(s.casimir()), "after": _c(cur.casimir())}}


def cmd_braid(args) -> int:
    try:
        word = braid.BraidWord.parse(args.word)
    except braid.BraidWordError as exc:
        raise UsageError(str(exc)) from None
    if args.mode == "shear" and any(g not in ("12", "12i") for g in word):
        raise UsageError("shear mode supports only 12 and 12i")
    if args.mode == "abstract":
        body = _braid_abstract(word)
    elif args.mode == "quantum":
        body = _braid_quantum(word)
    elif args.mode == "matrix":
        body = _braid_matrix(word, args.seed)
    else:
        body = _braid_shear(word, args)
    _dump({"schema": SCHEMA, "word": str(word), "mode": args.mode} | body, sys.stdout)
    return EXIT_OK


# -- entry point -------------------------------------------------------------

def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _seed(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("seed must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="d4shear", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run identity suites and print a JSON report")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--seed", type=_seed, default=None, help="defaults to $D4SHEAR_SEED or 0")
    v.add_argument("--samples", type=_positive_int, default=200)
    v.add_argument("--abs-tol", type=_positive_float, default=1e-12)
    v.add_argument("--rel-tol", type=_positive_float, default=1e-9)
    v.add_argument("--output", default=None, help="file path; stdout when omitted or '-'")
    v.add_argument("--timings", action="store_true", help="include elapsed_ms (not reproducible)")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("eval", help="evaluate the map to the cubic surface")
    e.add_argument("--y", help="three complex literals, e.g. 0,0,ipi")
    e.add_argument("--y1")
    e.add_argument("--y2")
    e.add_argument("--y3")
    e.add_argument("--g", help="three boundary values G_i")
    e.add_argument("--orbifold", help="three orbifold orders (>= 3)")
    e.set_defaults(func=cmd_eval)

    b = sub.add_parser("braid", help="apply a braid word")
    b.add_argument("--word", required=True, help="e.g. 12,23,12i (may be empty)")
    b.add_argument("--mode", choices=("abstract", "quantum", "matrix", "shear"), default="abstract")
    b.add_argument("--seed", type=_seed, default=0)
    b.add_argument("--y", help="shear mode: three complex literals")
    b.add_argument("--g", help="shear mode: three boundary values")
    b.add_argument("--realized", action="store_true",
                   help="shear mode: use the relabelled flip that realises beta12 exactly")
    b.set_defaults(func=cmd_braid)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, braid.BranchError) as exc:
        print(f"d4shear: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
