"""Command-line interface: ``g2roll <command> ...``.

Vectors are JSON arrays whose entries are integers or ``"p/q"`` strings
(``{"re": ..., "im": ...}`` for complex entries).  A payload argument may
also be ``@path`` to read a file or ``-`` to read stdin.  Results go to
stdout as JSON.  Exit codes: 0 success, 1 domain error (JSON
``{"code", "message"}`` on stdout) or failed verification, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from . import kinematics as kin
from .algebra import SplitOctonion, cross, dot, embed, oct_mul
from .errors import G2RollError
from .incidence import (annihilator, classify_pair, line_through, midpoint,
                        point_from_vector, roll_distance)
from .quantization import apply_adjoint, delta, delta_adjoint, double_cross_matrix, trace_dot
from .serialize import (PayloadError, decode_matrix, decode_vector, decode_vectors,
                        dumps, encode, parse_json)
from .triples import (G2Element, NullTriple, apartment_basis, complete_pair,
                      extend_config, g2_from_triples, hexagon_check,
                      pair_transporter, validate_triple)
from .verify import SUITES, verify_suite

SEED_ENV = "G2ROLL_SEED"


class UsageError(Exception):
    pass


def _payload(text: str):
    if text == "-":
        text = sys.stdin.read()
    elif text.startswith("@"):
        try:
            with open(text[1:], encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {text[1:]}: {exc.strerror}") from exc
    return parse_json(text)


def _vec(text: str, length: int = 7) -> tuple:
    return decode_vector(_payload(text), length)


def _octonion(text: str) -> SplitOctonion:
    obj = _payload(text)
    if isinstance(obj, list) and len(obj) == 8:
        return SplitOctonion.from_coefficients(decode_vector(obj, 8))
    return embed(decode_vector(obj, 7))


def _triple(args_or_text) -> NullTriple:
    if isinstance(args_or_text, str):
        vs = decode_vectors(_payload(args_or_text), 3)
    else:
        vs = [_vec(t) for t in args_or_text]
    return validate_triple(*vs)


def _float_list(text: Optional[str], length: int, default):
    if text is None:
        return default
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON: {exc.msg}") from exc
    if not isinstance(obj, list) or len(obj) != length:
        raise UsageError(f"expected a JSON array of {length} numbers")
    if not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in obj):
        raise UsageError(f"expected a JSON array of {length} numbers")
    return [float(c) for c in obj]


# --- handlers -------------------------------------------------------------------

def cmd_mul(a):
    return {"product": encode(oct_mul(_octonion(a.x), _octonion(a.y)).coefficients())}


def cmd_dot(a):
    return {"dot": encode(dot(_vec(a.x), _vec(a.y)))}


def cmd_cross(a):
    return {"cross": encode(cross(_vec(a.x), _vec(a.y)))}


def cmd_distance(a):
    return {"distance": roll_distance(point_from_vector(_vec(a.a)), point_from_vector(_vec(a.b)))}


def cmd_classify(a):
    return {"class": classify_pair(point_from_vector(_vec(a.a)), point_from_vector(_vec(a.b))).value}


def cmd_annihilator(a):
    x = point_from_vector(_vec(a.x))
    return {"basis": encode(annihilator(x))}


def cmd_line(a):
    line = line_through(point_from_vector(_vec(a.a)), point_from_vector(_vec(a.b)))
    return {"basis": encode(line.basis)}


def cmd_midpoint(a):
    m = midpoint(point_from_vector(_vec(a.a)), point_from_vector(_vec(a.c)))
    return {"midpoint": encode(m.rep)}


def cmd_triple_validate(a):
    _triple([a.x, a.y, a.z])
    return {"valid": True}


def cmd_triple_complete(a):
    t = complete_pair(_vec(a.x), _vec(a.y))
    return {"triple": encode(tuple(t)), "z": encode(t.z)}


def cmd_triple_extend(a):
    first = _vec(a.first)
    second = _vec(a.second) if a.second is not None else None
    res = extend_config(a.case, first, second)
    return {"case": a.case, "triple": encode(tuple(res.triple)), "scale": encode(res.scale)}


def cmd_apartment(a):
    t = _triple([a.x, a.y, a.z])
    b = apartment_basis(t)
    return {"basis": encode(b.as_dict()), "determinant": encode(b.determinant()),
            "hexagon": hexagon_check(t)}


def cmd_g2_from_triples(a):
    g = g2_from_triples(_triple(a.t1), _triple(a.t2))
    return {"matrix": encode(g.matrix)}


def cmd_g2_apply(a):
    g = G2Element(decode_matrix(_payload(a.matrix)))
    return {"image": encode(g(_vec(a.v)))}


def cmd_g2_transport(a):
    pa = decode_vectors(_payload(a.pair_a), 2)
    pb = decode_vectors(_payload(a.pair_b), 2)
    g = pair_transporter(pa, pb)
    return {"class": classify_pair(*pa).value, "matrix": encode(g.matrix)}


def cmd_roll_simulate(a):
    if a.steps < 1:
        raise UsageError("--steps must be positive")
    if not a.ratio > 0:
        raise UsageError("--ratio must be positive")
    p = kin.RollingLineParams(_float_list(a.u, 3, [1.0, 0.0, 0.0]),
                              _float_list(a.w, 3, [0.0, 0.0, 1.0]),
                              _float_list(a.q, 4, [1.0, 0.0, 0.0, 0.0]), a.ratio)
    rows = kin.simulate(p, a.steps)
    worst = max(abs(float(kin.NullRay(r[8:]).q_value())) for r in rows)
    if a.out is None:
        kin.write_csv(rows, sys.stdout)
        return None
    with open(a.out, "w", encoding="utf-8", newline="") as fh:
        kin.write_csv(rows, fh)
    return {"out": a.out, "rows": len(rows), "ratio": a.ratio,
            "max_abs_quadratic_form": worst}


def cmd_quantize_delta(a):
    return {"matrix": encode(delta(_vec(a.w)).matrix)}


def cmd_quantize_adjoint(a):
    tensor = delta_adjoint()
    if a.u is None:
        return {"tensor": encode(tensor)}
    if a.v is None:
        raise UsageError("adjoint needs both U and V, or neither")
    return {"image": encode(apply_adjoint(tensor, _vec(a.u), _vec(a.v)))}


def cmd_quantize_trace_dot(a):
    x, y = _vec(a.a), _vec(a.b)
    m = double_cross_matrix(x, y)
    trace = sum((m[i][i] for i in range(7)), 0)
    return {"trace": encode(trace), "value": encode(trace_dot(x, y)), "dot": encode(dot(x, y))}


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError as exc:
        raise UsageError(f"{SEED_ENV} must be an integer, got {raw!r}") from exc


def cmd_verify(a):
    seed = a.seed if a.seed is not None else _default_seed()
    if a.samples is not None and a.samples < 1:
        raise UsageError("--samples must be positive")
    return verify_suite(a.suite, seed, a.samples)


# --- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="g2roll", description="Split octonions, null triples and rolling balls.")
    parser.add_argument("--format", choices=["json", "pretty"], default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, *positional, helptext=None, into=sub):
        p = into.add_parser(name, help=helptext)
        for arg in positional:
            p.add_argument(arg)
        p.set_defaults(func=func)
        return p

    add("mul", cmd_mul, "x", "y", helptext="product of split octonions (7 or 8 coefficients)")
    add("dot", cmd_dot, "x", "y")
    add("cross", cmd_cross, "x", "y")
    add("distance", cmd_distance, "a", "b", helptext="roll distance between two points")
    add("classify", cmd_classify, "a", "b", helptext="orbit class X0..X3 of a pair")
    add("annihilator", cmd_annihilator, "x")
    add("line", cmd_line, "a", "b")
    add("midpoint", cmd_midpoint, "a", "c")

    triple = sub.add_parser("triple").add_subparsers(dest="action", required=True)
    add("validate", cmd_triple_validate, "x", "y", "z", into=triple)
    add("complete", cmd_triple_complete, "x", "y", into=triple)
    ext = add("extend", cmd_triple_extend, "first", into=triple)
    ext.add_argument("second", nargs="?")
    ext.add_argument("--case", type=int, choices=[0, 1, 2, 3], required=True)

    add("apartment", cmd_apartment, "x", "y", "z")

    g2 = sub.add_parser("g2").add_subparsers(dest="action", required=True)
    add("from-triples", cmd_g2_from_triples, "t1", "t2", into=g2)
    add("apply", cmd_g2_apply, "matrix", "v", into=g2)
    add("transport", cmd_g2_transport, "pair_a", "pair_b", into=g2)

    roll = sub.add_parser("roll").add_subparsers(dest="action", required=True)
    sim = add("simulate", cmd_roll_simulate, into=roll)
    sim.add_argument("--ratio", type=float, required=True)
    sim.add_argument("--steps", type=int, default=1000)
    sim.add_argument("--out")
    sim.add_argument("--u", help="unit 3-vector, JSON")
    sim.add_argument("--w", help="unit 3-vector orthogonal to u, JSON")
    sim.add_argument("--q", help="unit quaternion (w, x, y, z), JSON")

    quant = sub.add_parser("quantize").add_subparsers(dest="action", required=True)
    add("delta", cmd_quantize_delta, "w", into=quant)
    adj = add("adjoint", cmd_quantize_adjoint, into=quant)
    adj.add_argument("u", nargs="?")
    adj.add_argument("v", nargs="?")
    add("trace-dot", cmd_quantize_trace_dot, "a", "b", into=quant)

    ver = add("verify", cmd_verify, into=sub)
    ver.add_argument("suite", choices=("all",) + SUITES)
    ver.add_argument("--seed", type=int)
    ver.add_argument("--samples", type=int)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    pretty = args.format == "pretty"
    try:
        out = args.func(args)
    except (UsageError, PayloadError) as exc:
        print(dumps({"code": "UsageError", "message": str(exc)}), file=sys.stderr)
        return 2
    except G2RollError as exc:
        print(dumps(exc.to_json(), pretty))
        return 1
    except (ValueError, ZeroDivisionError) as exc:
        print(dumps({"code": "InvalidArgument", "message": str(exc)}, pretty))
        return 1
    if out is None:
        return 0
    print(dumps(out, pretty))
    if args.command == "verify" and out["status"] != "pass":
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
