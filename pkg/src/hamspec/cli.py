"""Command line front end.

Every command prints one JSON report on stdout::

    {"command": ..., "n": ..., "m": ..., ["seed": ...,] "result": {...}}

Domain errors print ``{"error": code, "detail": text}`` and exit 1; usage
errors exit 2 with argparse's message on stderr.
"""

from __future__ import annotations

import argparse
import dataclasses
import enum
import json
import math
import sys

from . import generators
from .constants import proof_constants
from .errors import HamspecError
from .graphfile import read_graph, write_graph
from .hamilton import held_karp, posa_find_hamiltonian
from .mixing import cor24_audit, degree_bounds_check, true_gap
from .spectral import (
    Operator,
    check_butler_chung,
    check_fan_yu,
    check_krivelevich_sudakov,
    degree_summary,
    sigma_adjacency,
    spectral_gap,
    spectrum,
)

CHECKERS = {
    "fan-yu": check_fan_yu,
    "butler-chung": check_butler_chung,
    "krivelevich-sudakov": check_krivelevich_sudakov,
}
GEN_FAMILIES = ("complete", "cycle", "path", "star", "petersen", "remark", "erdos-renyi", "random-regular")


def to_jsonable(obj):
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (frozenset, set)):
        return sorted(to_jsonable(v) for v in obj)
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if hasattr(obj, "item"):  # numpy scalar
        return to_jsonable(obj.item())
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else None
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hamspec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a generated graph file")
    gen.add_argument("--family", required=True, choices=GEN_FAMILIES)
    gen.add_argument("--n", type=int)
    gen.add_argument("--p", type=float, help="edge probability (erdos-renyi)")
    gen.add_argument("--d", type=int, help="degree (random-regular)")
    gen.add_argument("--beta", type=int, help="neighbors of the extra vertex (remark)")
    gen.add_argument("--alpha", type=float, help="remark: beta = ceil(alpha (n-1))")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("-o", "--output", required=True)

    spectral = sub.add_parser("spectrum", help="eigenvalues of an operator")
    spectral.add_argument("--operator", required=True, choices=[o.value for o in Operator])
    spectral.add_argument("-i", "--input", required=True)

    check = sub.add_parser("check", help="evaluate a spectral Hamiltonicity condition")
    check.add_argument("--condition", required=True, choices=sorted(CHECKERS))
    check.add_argument("--c", type=float, required=True)
    check.add_argument("-i", "--input", required=True)

    mix = sub.add_parser("mixing", help="degree bounds and small-gap audit")
    mix.add_argument("--samples", type=int, default=10_000)
    mix.add_argument("--seed", type=int, default=0)
    mix.add_argument("-i", "--input", required=True)

    ham = sub.add_parser("hamilton", help="search for a Hamiltonian cycle")
    ham.add_argument("--method", required=True, choices=["posa", "held-karp"])
    ham.add_argument("--seed", type=int, default=0)
    ham.add_argument("--budget", type=int, default=1_000_000)
    ham.add_argument("-i", "--input", required=True)

    const = sub.add_parser("constants", help="numeric proof constants at n")
    const.add_argument("--n", type=int, required=True)
    return parser


def _gen(args):
    fam, n = args.family, args.n
    params = {"family": fam}
    if fam == "petersen":
        g = generators.petersen()
    elif fam == "remark":
        if args.beta is None and args.alpha is None:
            raise HamspecError("remark needs --beta or --alpha")
        beta = args.beta if args.beta is not None else generators.remark_beta(n, args.alpha)
        g = generators.remark_family(n, beta)
        params["beta"] = beta
    elif fam == "erdos-renyi":
        g = generators.erdos_renyi(n, args.p, args.seed)
        params["p"] = args.p
    elif fam == "random-regular":
        g = generators.random_regular(n, args.d, args.seed)
        params["d"] = args.d
    else:
        g = generators.generate_named(fam, n)
    write_graph(g, args.output)
    params["output"] = args.output
    seeded = fam in ("erdos-renyi", "random-regular")
    return g, params, args.seed if seeded else None


def _spectrum(args):
    g = read_graph(args.input)
    s = spectrum(g, args.operator)
    result = {"operator": args.operator, "eigenvalues": list(s.eigenvalues)}
    if s.operator is Operator.NORMALIZED and g.n >= 2:
        result["gap"] = spectral_gap(s)
    if s.operator is Operator.ADJACENCY and g.n >= 2:
        result["sigma"] = sigma_adjacency(s)
    return g, result, None


def _check(args):
    g = read_graph(args.input)
    return g, CHECKERS[args.condition](g, args.c), None


def _mixing(args):
    g = read_graph(args.input)
    gap = true_gap(g)
    result = {
        "gap": gap,
        "degrees": degree_summary(g),
        "degree_bounds": degree_bounds_check(g, gap),
        "audit": cor24_audit(g, args.samples, args.seed, lam=gap),
    }
    return g, result, args.seed


def _hamilton(args):
    g = read_graph(args.input)
    if args.method == "held-karp":
        cert = held_karp(g)
        result = {"method": "held-karp", "hamiltonian": cert is not None}
    else:
        cert = posa_find_hamiltonian(g, seed=args.seed, budget=args.budget)
        # a failed search is inconclusive
        result = {"method": "posa", "found": cert is not None, "hamiltonian": True if cert else None}
    result["cycle"] = list(cert.order) if cert else None
    return g, result, args.seed if args.method == "posa" else None


def _constants(args):
    return None, proof_constants(args.n), None


COMMANDS = {
    "gen": _gen,
    "spectrum": _spectrum,
    "check": _check,
    "mixing": _mixing,
    "hamilton": _hamilton,
    "constants": _constants,
}


def run_command(argv, stdout=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        g, result, seed = COMMANDS[args.command](args)
    except HamspecError as exc:
        payload = {"error": exc.code, "detail": str(exc)}
        code = 1
    except OSError as exc:
        payload = {"error": "IOError", "detail": str(exc)}
        code = 1
    else:
        payload = {
            "command": args.command,
            "n": g.n if g is not None else args.n,
            "m": g.m if g is not None else None,
        }
        if seed is not None:
            payload["seed"] = seed
        payload["result"] = result
        code = 0
    json.dump(to_jsonable(payload), stdout)
    stdout.write("\n")
    return code


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
