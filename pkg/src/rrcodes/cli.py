"""Command-line interface: code info, bounds, oracle, decoding, simulation."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import spec_io
from .bounds import bound_I_search, bound_II_search, bound_III_search, standard_candidates
from .channel import rows_to_csv, run_experiment
from .decoder import decode_alg1, decode_alg2
from .oracle import DEFAULT_ENUM_CAP, min_distance_exhaustive
from .poly import Polynomial

EXIT_OK, EXIT_INVALID, EXIT_DECODE_FAILURE = 0, 1, 2


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_code_info(args) -> int:
    C = spec_io.load_code(args.spec)
    _emit(C.info())
    return EXIT_OK


def cmd_bound(args) -> int:
    C = spec_io.load_code(args.spec)
    family = args.family.lower()
    if family == "i":
        w = bound_I_search(C)
    elif family == "ii":
        w = bound_II_search(C, args.nu_max)
    else:
        if args.assoc:
            cands = [spec_io.assoc_from_dict(spec_io.load_json(args.assoc), Path(args.assoc).stem)]
        else:
            cands = standard_candidates(C)
        w = bound_III_search(C, cands)
    _emit(w.to_dict())
    return EXIT_OK


def cmd_oracle(args) -> int:
    C = spec_io.load_code(args.spec)
    _emit(min_distance_exhaustive(C, args.cap).to_dict())
    return EXIT_OK


def cmd_decode(args) -> int:
    C = spec_io.load_code(args.spec)
    r = spec_io.read_received(args.received, C)
    wdict = spec_io.load_json(args.witness)
    if args.alg == "1":
        w = spec_io.witness_from_dict(C, wdict)
        report = decode_alg1(C, r, w)
    else:
        if not args.assoc:
            raise spec_io.SpecError("--alg 2 needs --assoc")
        assoc = spec_io.assoc_from_dict(spec_io.load_json(args.assoc), Path(args.assoc).stem)
        w = spec_io.witness_from_dict(C, wdict, assoc)
        if args.b:
            b = Polynomial(C.field, [int(t, 16) for t in args.b.split(",")])
        else:
            b = min_distance_exhaustive(assoc.code).codeword
        report = decode_alg2(C, assoc.code, b, r, w, args.tau_max)
    out = report.to_dict()
    if report.success:
        out["decoded"] = [f"{x:x}" for x in report.decoded.padded(C.n)]
    _emit(out)
    return EXIT_OK if report.success else EXIT_DECODE_FAILURE


def cmd_simulate(args) -> int:
    path = Path(args.config)
    cfg = spec_io.config_from_dict(spec_io.load_json(path), path.parent)
    sys.stdout.write(rows_to_csv(run_experiment(cfg)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rrcodes", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    code = sub.add_parser("code", help="code construction")
    code_sub = code.add_subparsers(dest="action", required=True)
    info = code_sub.add_parser("info", help="print n, k, deg g and the defining set")
    info.add_argument("--spec", required=True)
    info.set_defaults(func=cmd_code_info)

    bound = sub.add_parser("bound", help="minimum-distance lower bound with witness")
    bound.add_argument("--spec", required=True)
    bound.add_argument("--family", required=True, choices=["i", "ii", "iii", "I", "II", "III"])
    bound.add_argument("--assoc", help="associated simple-root code spec (family iii)")
    bound.add_argument("--nu-max", type=int, default=None)
    bound.set_defaults(func=cmd_bound)

    oracle = sub.add_parser("oracle", help="brute-force reference computations")
    oracle_sub = oracle.add_subparsers(dest="action", required=True)
    mind = oracle_sub.add_parser("mindist", help="exact minimum distance by enumeration")
    mind.add_argument("--spec", required=True)
    mind.add_argument("--cap", type=int, default=DEFAULT_ENUM_CAP)
    mind.set_defaults(func=cmd_oracle)

    dec = sub.add_parser("decode", help="decode a received word")
    dec.add_argument("--spec", required=True)
    dec.add_argument("--alg", required=True, choices=["1", "2"])
    dec.add_argument("--witness", required=True)
    dec.add_argument("--received", required=True)
    dec.add_argument("--assoc", help="associated code spec (alg 2)")
    dec.add_argument("--b", help="comma-separated hex coefficients of b(X) (alg 2)")
    dec.add_argument("--tau-max", type=int, default=None)
    dec.set_defaults(func=cmd_decode)

    sim = sub.add_parser("simulate", help="Monte Carlo decoding experiment, CSV output")
    sim.add_argument("--config", required=True)
    sim.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
