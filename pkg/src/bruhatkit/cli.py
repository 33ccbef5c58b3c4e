"""Command-line front end: ``bruhatkit <verb> ...`` with JSON on stdout.

Exit codes: 0 success, 1 oracle mismatch, 2 unreadable input, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from .colmat import ColMatrix
from .decomp import bruhat_decompose
from .errors import BruhatkitError
from .flags import Flag, intersection_gradation, is_independent, relative_position
from .moves import chain_toward
from .oracle import SUITES, run_suite
from .permutation import Permutation, compare
from .schubert import closure_cover_check
from .scalar import QQ, ring_from_spec

log = logging.getLogger("bruhatkit")


class InputError(Exception):
    """Raised for arguments that cannot be decoded (exit code 2)."""


def _load(text: str):
    path = Path(text)
    try:
        if path.is_file():
            return json.loads(path.read_text())
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {text!r}: {exc}") from None


def _decode(fn, text, what):
    try:
        return fn(_load(text))
    except InputError:
        raise
    except (BruhatkitError, ValueError, TypeError, KeyError) as exc:
        raise InputError(f"bad {what}: {exc}") from None


def _perm(data):
    if data == "paper-rho":
        return Permutation.paper_rho()
    return Permutation.from_json(data)


def _matrix_reader(field):
    def read(data):
        if isinstance(data, list):
            ring = ring_from_spec(field) if field else QQ
            return ColMatrix([[ring.parse(x) if isinstance(x, str) else ring.coerce(x) for x in row]
                              for row in data], ring)
        if field and "field" not in data:
            data = dict(data, field=field)
        return ColMatrix.from_json(data)
    return read


def _flag_reader(field):
    def read(data):
        if isinstance(data, list):
            data = {"columns": data}
        if field and "field" not in data:
            data = dict(data, field=field)
        return Flag.from_json(data)
    return read


# -- verbs ------------------------------------------------------------------

def cmd_compare(args):
    sigma = _decode(_perm, args.sigma, "permutation")
    tau = _decode(_perm, args.tau, "permutation")
    v = compare(sigma, tau, args.bound)
    return {"leq": v.leq, "exact": v.exact, "bound": v.bound}, f"sigma <= tau: {v.leq}"


def cmd_chain(args):
    sigma = _decode(_perm, args.sigma, "permutation")
    tau = _decode(_perm, args.tau, "permutation")
    c = chain_toward(sigma, tau, args.max_steps)
    out = {"steps": c.to_json(), "terminated": c.terminated, "final": c.current.to_json()}
    if c.bound_limited is not None:
        out["verified_bound"] = c.bound_limited
    return out, f"{len(c.steps)} steps, terminated: {c.terminated}"


def cmd_decompose(args):
    g = _decode(_matrix_reader(args.field), args.matrix, "matrix")
    fac = bruhat_decompose(g)
    out = fac.to_json()
    out["verified"] = fac.product() == g
    return out, f"coset label {fac.sigma.one_line()}, verified: {out['verified']}"


def cmd_closure(args):
    sigma = _decode(_perm, args.sigma, "permutation")
    g = _decode(_matrix_reader(args.field), args.matrix, "matrix")
    inside, tau = closure_cover_check(sigma, g)
    return {"in_closure": inside, "coset": tau.to_json()}, f"in closure: {inside}"


def _ref_flag(args, F):
    if args.ref is None:
        return Flag.standard(F.dim, F.ring)
    return _decode(_flag_reader(args.field), args.ref, "flag")


def cmd_relpos(args):
    F = _decode(_flag_reader(args.field), args.flag, "flag")
    E = _ref_flag(args, F)
    w = relative_position(F, E)
    return {"w": w.to_json(), "inverse": w.inverse().to_json()}, f"w = {w.one_line()}"


def cmd_grade(args):
    F = _decode(_flag_reader(args.field), args.flag, "flag")
    E = _ref_flag(args, F)
    table = intersection_gradation(F, E)
    cells = [{"i": i, "j": j, "basis": s.to_json()}
             for (i, j), s in sorted(table.items()) if s.dim]
    return {"cells": cells, "independent": is_independent(table)}, f"{len(cells)} nonzero cells"


def cmd_oracle(args):
    res = run_suite(args.suite, args.n, args.p)
    return res.to_json(), f"{args.suite}: {res.checked} checks, ok: {res.ok}"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="Q, Z or Fp:<p> (default: taken from the input, else Q)")
    common.add_argument("--pretty", action="store_true", help="indent JSON and print a summary to stderr")

    parser = argparse.ArgumentParser(prog="bruhatkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("compare", parents=[common], help="Bruhat comparison sigma <= tau")
    p.add_argument("--sigma", required=True)
    p.add_argument("--tau", required=True)
    p.add_argument("--bound", type=int, help="verification bound for non-identity tails")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("chain", parents=[common], help="descending chain from tau toward sigma")
    p.add_argument("--sigma", required=True)
    p.add_argument("--tau", required=True)
    p.add_argument("--max-steps", type=int, default=1000)
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("decompose", parents=[common], help="factor g = b sigma c")
    p.add_argument("--matrix", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("closure-test", parents=[common], help="membership of g in Y_sigma")
    p.add_argument("--sigma", required=True)
    p.add_argument("--matrix", required=True)
    p.set_defaults(func=cmd_closure)

    for verb, func, text in (("relpos", cmd_relpos, "relative position of two flags"),
                             ("grade", cmd_grade, "intersection gradation of two flags")):
        p = sub.add_parser(verb, parents=[common], help=text)
        p.add_argument("--flag", required=True)
        p.add_argument("--ref", help="reference flag (default: the standard flag)")
        p.set_defaults(func=func)

    p = sub.add_parser("oracle-check", parents=[common], help="cross-check against brute force")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--p", type=int, default=2)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    level = os.environ.get("BRUHATKIT_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    log.debug("running %s", args.verb)
    try:
        out, summary = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BruhatkitError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}))
        return 3
    print(json.dumps(out, indent=2 if args.pretty else None))
    if args.pretty:
        print(summary, file=sys.stderr)
    if args.verb == "oracle-check" and not out["ok"]:
        print(f"first counterexample: {json.dumps(out['mismatch'])}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
