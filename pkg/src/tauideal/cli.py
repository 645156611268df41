"""Command-line front end: tau, newton, check, crosscheck, veronese.

Rings and ideals are read from JSON files; rationals are serialized as
"num/den" strings so no float ever enters or leaves.  Exit codes: 0 all
pass, 1 counterexample, 2 inconclusive, 3 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import ideals as idl
from .campaigns import CAMPAIGNS, run_campaign, run_crosscheck
from .errors import NotStabilizedError, TauIdealError
from .frobenius import frobenius_root_tau_oracle, tau_socle_oracle
from .ideals import MonomialIdeal
from .lattice import ToricRing, toric_ring
from .polyhedra import newton_polyhedron, scale
from .tau import tau, tau_veronese, veronese_maximal_ideal, veronese_ring

EXIT_PASS = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_INCONCLUSIVE = 2
EXIT_INPUT_ERROR = 3


class CliInputError(Exception):
    pass


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliInputError(f"cannot parse rational {text!r}: {exc}") from exc


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliInputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CliInputError(f"{path} is not valid JSON: {exc}") from exc


def load_ring(path: str) -> ToricRing:
    data = _load_json(path)
    try:
        gens = [tuple(int(x) for x in g) for g in data["cone_generators"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise CliInputError(f"bad ring file {path}: {exc}") from exc
    ring = toric_ring(gens)
    if "d" in data and int(data["d"]) != ring.d:
        raise CliInputError(
            f"{path}: declared rank {data['d']} but generators have rank {ring.d}"
        )
    return ring


def load_ideal(path: str, ring: ToricRing) -> MonomialIdeal:
    data = _load_json(path)
    try:
        gens = [tuple(int(x) for x in g) for g in data["generators"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise CliInputError(f"bad ideal file {path}: {exc}") from exc
    if not gens:
        return idl.zero_ideal(ring)
    return idl.minimalize(ring, gens)


def jsonable(obj):
    """Recursive conversion to JSON-safe values; rationals become 'num/den'."""
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else str(obj.numerator)
    if isinstance(obj, MonomialIdeal):
        return [list(g) for g in obj.gens]
    if isinstance(obj, dict):
        return {k: jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    return obj


def emit(payload: dict, out: str) -> None:
    if out == "json":
        print(json.dumps(jsonable(payload), sort_keys=True))
        return
    for key, value in payload.items():
        print(f"{key}: {json.dumps(jsonable(value), sort_keys=True)}")


def cmd_tau(args) -> int:
    ring = load_ring(args.ring)
    a = load_ideal(args.ideal, ring)
    t = parse_fraction(args.t)
    methods = (
        ["polyhedral", "socle", "root"] if args.method == "all" else [args.method]
    )
    results: dict[str, MonomialIdeal] = {}
    inconclusive = []
    for method in methods:
        if method == "polyhedral":
            results[method] = tau(ring, a, t)
        elif method == "socle":
            results[method] = tau_socle_oracle(ring, a, t, args.qmax, args.prime).ideal
        elif method == "root":
            if not ring.is_orthant() and args.method == "all":
                continue  # root oracle has no general-toric mode
            try:
                results[method] = frobenius_root_tau_oracle(
                    ring, a, t, args.qmax, args.prime
                )
            except NotStabilizedError as exc:
                inconclusive.append({"method": method, "reason": str(exc)})
    values = list(results.values())
    agreement = all(v == values[0] for v in values)
    payload = {
        "command": "tau",
        "t": t,
        "generators": {m: v for m, v in results.items()},
        "agreement": agreement,
        "inconclusive": inconclusive,
    }
    emit(payload, args.out)
    if not agreement:
        return EXIT_COUNTEREXAMPLE
    if inconclusive:
        return EXIT_INCONCLUSIVE
    return EXIT_PASS


def cmd_newton(args) -> int:
    ring = load_ring(args.ring)
    a = load_ideal(args.ideal, ring)
    t = parse_fraction(args.t)
    P = scale(newton_polyhedron(ring, a.gens), t)
    payload = {
        "command": "newton",
        "t": t,
        "vertices": [list(v) for v in P.vertices],
        "rays": [list(r) for r in P.rays],
        "inequalities": [[list(av), b] for av, b in P.inequalities],
    }
    emit(payload, args.out)
    return EXIT_PASS


def cmd_check(args) -> int:
    rep = run_campaign(args.campaign, seed=args.seed, count=args.count)
    emit(rep.to_dict(), args.out)
    return EXIT_PASS if rep.ok else EXIT_COUNTEREXAMPLE


def cmd_crosscheck(args) -> int:
    ring = load_ring(args.ring)
    corpus = Path(args.corpus)
    if not corpus.is_dir():
        raise CliInputError(f"{args.corpus} is not a directory")
    named = []
    for path in sorted(corpus.glob("*.json")):
        a = load_ideal(str(path), ring)
        if a.is_zero():
            raise CliInputError(f"{path}: tau of the zero ideal is undefined")
        named.append((path.name, a))
    if not named:
        raise CliInputError(f"no ideal files (*.json) in {args.corpus}")
    ts = [parse_fraction(s) for s in args.t.split(",")]
    rep = run_crosscheck(ring, named, ts, qmax=args.qmax, primes=(args.prime,))
    emit(rep.to_dict(), args.out)
    if rep.failures:
        return EXIT_COUNTEREXAMPLE
    if rep.inconclusive:
        return EXIT_INCONCLUSIVE
    return EXIT_PASS


def cmd_veronese(args) -> int:
    d, r, l = args.d, args.r, args.l
    e = tau_veronese(d, r, l)
    ring = veronese_ring(d, r)
    m = veronese_maximal_ideal(ring, d, r)
    computed = tau(ring, idl.power(m, l), 1)
    want = idl.power(m, e) if e > 0 else idl.unit_ideal(ring)
    agreement = computed == want
    payload = {
        "command": "veronese",
        "d": d,
        "r": r,
        "l": l,
        "closed_form_exponent": e,
        "generators": computed,
        "agreement": agreement,
    }
    emit(payload, args.out)
    return EXIT_PASS if agreement else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tauideal",
        description="Exact test ideals of monomial ideals in toric rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, ring=True, ideal=True, t=True):
        if ring:
            p.add_argument("--ring", required=True, help="ring JSON file")
        if ideal:
            p.add_argument("--ideal", required=True, help="ideal JSON file")
        if t:
            p.add_argument("--t", default="1", help="rational exponent, e.g. 5/6")
        p.add_argument("--out", choices=["text", "json"], default="text")

    p = sub.add_parser("tau", help="compute tau(a^t)")
    common(p)
    p.add_argument(
        "--method",
        choices=["polyhedral", "socle", "root", "all"],
        default="polyhedral",
    )
    p.add_argument("--qmax", type=int, default=128)
    p.add_argument("--prime", type=int, default=2)
    p.set_defaults(fn=cmd_tau)

    p = sub.add_parser("newton", help="print t*P(a)")
    common(p)
    p.set_defaults(fn=cmd_newton)

    p = sub.add_parser("check", help="run a theorem test campaign")
    p.add_argument("campaign", choices=sorted(CAMPAIGNS))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=None, help="instance count")
    p.add_argument("--out", choices=["text", "json"], default="text")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("crosscheck", help="compare oracles over an ideal corpus")
    p.add_argument("--ring", required=True)
    p.add_argument("--corpus", required=True, help="directory of ideal JSON files")
    p.add_argument("--t", default="1", help="comma-separated rationals")
    p.add_argument("--qmax", type=int, default=128)
    p.add_argument("--prime", type=int, default=2)
    p.add_argument("--out", choices=["text", "json"], default="text")
    p.set_defaults(fn=cmd_crosscheck)

    p = sub.add_parser("veronese", help="closed-form vs computed Veronese tau")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--out", choices=["text", "json"], default="text")
    p.set_defaults(fn=cmd_veronese)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (CliInputError, TauIdealError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
