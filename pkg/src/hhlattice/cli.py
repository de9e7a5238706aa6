"""Batch command-line front end.

Commands
--------
evolve   seed a lattice and evolve a rectangular region, writing a snapshot
verify   run a named property suite, writing a JSON report of assertions
seq      iterate a one-dimensional recurrence, writing CSV or JSON

Exit codes: 0 success, 1 usage or configuration error, 2 mathematical
singularity (zero divisor, vanishing cofactor or denominator), 3 a verify
suite had failing assertions.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import Optional

from . import reduction
from .errors import (DependencyError, FrameMismatchError, HHLatticeError,
                     PoleError, SingularDenominatorError, SingularStepError)
from .lattice import (EquationSpec, InitialFrame, default_frame, evolve,
                      grid_to_json_dict, grid_to_text, seed, seed_ones,
                      seed_random)
from .suites import SUITES, run_suite

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_SINGULAR = 2
EXIT_ASSERTION = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write("error: %s\n" % message)
        raise SystemExit(EXIT_USAGE)


def _parse_frame(text: Optional[str], spec: EquationSpec) -> InitialFrame:
    if text is None:
        if spec.law == "hh2d":
            return default_frame(spec, 8, 4)
        width = spec.border_width()
        size = max(10, 3 * width)
        return default_frame(spec, size, size)
    shape, _, extent = text.partition(":")
    try:
        n_str, t_str = extent.lower().split("x")
        n_max, t_max = int(n_str), int(t_str)
    except ValueError:
        raise FrameMismatchError("frame must look like L:6x3 or border:10x10")
    if shape == "L":
        return InitialFrame("L", n_max, t_max)
    if shape == "border":
        return InitialFrame("border", n_max, t_max, depth=spec.border_width())
    if shape == "strip":
        return InitialFrame("strip", n_max, t_max, depth=spec.border_width())
    raise FrameMismatchError("unknown frame shape %r" % shape)


def _parse_values(text: str):
    return [Fraction(part) for part in text.split(",")]


def _seed_grid(frame: InitialFrame, spec: EquationSpec, seed_text: str,
               meta: dict):
    if seed_text == "ones":
        return seed_ones(frame, spec)
    if seed_text == "symbolic":
        return seed(frame, spec, "symbolic")
    if seed_text.startswith("random"):
        _, _, seed_str = seed_text.partition(":")
        rng_seed = int(seed_str) if seed_str else random.randrange(2 ** 31)
        meta["rng_seed"] = rng_seed
        return seed_random(frame, spec, random.Random(rng_seed))
    if seed_text.startswith("values:"):
        values = _parse_values(seed_text[len("values:"):])
        sites = frame.sites(spec)
        if len(values) != len(sites):
            raise FrameMismatchError(
                "frame has %d sites, %d values given"
                % (len(sites), len(values)))
        return seed(frame, spec, "numeric", dict(zip(sites, values)))
    raise FrameMismatchError("unknown seed mode %r" % seed_text)


def _write(text: str, path: Optional[str]):
    if path:
        with open(path, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _error_payload(exc: Exception) -> str:
    payload = {"schema_version": SCHEMA_VERSION,
               "error": type(exc).__name__, "message": str(exc)}
    site = getattr(exc, "site", None)
    if site is not None:
        payload["site"] = list(site)
    index = getattr(exc, "index", None)
    if index is not None:
        payload["index"] = index
    return json.dumps(payload)


def cmd_evolve(args) -> int:
    spec = EquationSpec(args.law, k=args.k,
                        parity=0 if args.parity == "even" else 1)
    frame = _parse_frame(args.frame, spec)
    meta: dict = {}
    grid = _seed_grid(frame, spec, args.seed, meta)
    region = (args.n_max if args.n_max is not None else frame.n_max,
              args.t_max if args.t_max is not None else frame.t_max)
    try:
        evolve(grid, region)
    except (PoleError, SingularStepError) as exc:
        _write(_error_payload(exc), args.out)
        return EXIT_SINGULAR
    if args.format == "text":
        _write(grid_to_text(grid), args.out)
    else:
        data = grid_to_json_dict(grid)
        data.update(meta)
        _write(json.dumps(data, indent=2), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    config = {"symbolic": args.symbolic}
    if args.rng_seed is not None:
        config["rng_seed"] = args.rng_seed
    if args.K is not None:
        config["K"] = args.K
    if args.M is not None:
        config["M"] = args.M
    if args.length is not None:
        config["length"] = args.length
    if args.frame is not None:
        shape, _, extent = args.frame.partition(":")
        n_str, t_str = extent.lower().split("x")
        config["n_max"], config["t_max"] = int(n_str), int(t_str)
    try:
        report = run_suite(args.suite, config)
    except (PoleError, SingularStepError, SingularDenominatorError) as exc:
        _write(_error_payload(exc), args.out)
        return EXIT_SINGULAR
    _write(json.dumps(report.to_json_dict(), indent=2), args.out)
    return EXIT_OK if report.ok else EXIT_ASSERTION


def _seq_seeds(seed_text: str, count: int, meta: dict):
    if seed_text == "ones":
        return [Fraction(1)] * count
    if seed_text.startswith("random"):
        _, _, seed_str = seed_text.partition(":")
        rng_seed = int(seed_str) if seed_str else random.randrange(2 ** 31)
        meta["rng_seed"] = rng_seed
        rng = random.Random(rng_seed)
        return [Fraction(rng.randint(1, 9), rng.randint(1, 9))
                for _ in range(count)]
    values = _parse_values(seed_text)
    if len(values) != count:
        raise FrameMismatchError("recurrence needs %d seed values, got %d"
                                 % (count, len(values)))
    return values


def cmd_seq(args) -> int:
    meta: dict = {}
    if args.name == "hh":
        spec = reduction.ReductionSpec(args.k, 1)
        count = spec.order
        generate = lambda seeds, length: reduction.iterate_generalized_hh(
            spec, seeds, length)
    elif args.name == "gen-hh":
        spec = reduction.ReductionSpec(args.K or 1, args.M or 1)
        count = spec.order
        generate = lambda seeds, length: reduction.iterate_generalized_hh(
            spec, seeds, length)
    elif args.name == "dana-scott":
        count = 4
        generate = reduction.dana_scott
    elif args.name == "frieze24":
        count = 4
        generate = lambda seeds, length: reduction.reduced_frieze_iterate(
            seeds, length)
    else:
        raise FrameMismatchError("unknown sequence %r" % args.name)
    try:
        seeds = _seq_seeds(args.seed, count, meta)
    except (ValueError, ZeroDivisionError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_USAGE
    try:
        seq = generate(seeds, args.length)
    except (PoleError, SingularDenominatorError) as exc:
        last_good = None
        for length in range(args.length - 1, count - 1, -1):
            try:
                last_good = generate(seeds, length)
                break
            except (PoleError, SingularDenominatorError):
                continue
        payload = json.loads(_error_payload(exc))
        if last_good is not None:
            payload["last_good_index"] = max(last_good.indices())
            payload["terms"] = [str(v) for v in last_good.terms]
        else:
            payload["last_good_index"] = None
        _write(json.dumps(payload), args.out)
        return EXIT_SINGULAR
    if args.find_recurrence:
        found = reduction.constant_recurrence_finder(
            seq, args.max_order, inhomogeneous=args.affine)
        data = reduction.sequence_to_json_dict(seq)
        data.update(meta)
        data["recurrence"] = None if found is None else found.to_json_dict()
        _write(json.dumps(data, indent=2), args.out)
        return EXIT_OK
    if args.format == "json":
        data = reduction.sequence_to_json_dict(seq)
        data.update(meta)
        _write(json.dumps(data, indent=2), args.out)
    else:
        _write(reduction.sequence_to_csv(seq), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hhlattice",
                     description="exact lattice-equation toolbox")
    sub = parser.add_subparsers(dest="command", required=True)

    p_evolve = sub.add_parser("evolve", help="evolve a lattice region")
    p_evolve.add_argument("--law", choices=("hh2d", "frieze", "two_frieze",
                                            "det1", "det2"), default="hh2d")
    p_evolve.add_argument("--k", type=int, default=1,
                          help="parameter of the determinant laws")
    p_evolve.add_argument("--parity", choices=("even", "odd"), default="even",
                          help="active sublattice for the parity laws")
    p_evolve.add_argument("--frame", help="initial frame, e.g. L:6x3")
    p_evolve.add_argument("--seed", default="ones",
                          help="ones | symbolic | random[:SEED] | values:v1,v2,...")
    p_evolve.add_argument("--n-max", type=int, help="region width (default: frame)")
    p_evolve.add_argument("--t-max", type=int, help="region height (default: frame)")
    p_evolve.add_argument("--format", choices=("json", "text"), default="json")
    p_evolve.add_argument("--out", help="output path (default: stdout)")
    p_evolve.set_defaults(func=cmd_evolve)

    p_verify = sub.add_parser("verify", help="run a property suite")
    p_verify.add_argument("suite", choices=sorted(SUITES))
    p_verify.add_argument("--symbolic", action="store_true", default=True)
    p_verify.add_argument("--numeric-only", dest="symbolic",
                          action="store_false")
    p_verify.add_argument("--rng-seed", type=int)
    p_verify.add_argument("--K", type=int)
    p_verify.add_argument("--M", type=int)
    p_verify.add_argument("--len", dest="length", type=int)
    p_verify.add_argument("--frame", help="window, e.g. L:6x4")
    p_verify.add_argument("--out", help="output path (default: stdout)")
    p_verify.set_defaults(func=cmd_verify)

    p_seq = sub.add_parser("seq", help="iterate a 1D recurrence")
    p_seq.add_argument("name", choices=("hh", "gen-hh", "dana-scott",
                                        "frieze24"))
    p_seq.add_argument("--k", type=int, default=1,
                       help="order parameter for hh")
    p_seq.add_argument("--K", type=int, help="reduction period for gen-hh")
    p_seq.add_argument("--M", type=int, help="reduction stride for gen-hh")
    p_seq.add_argument("--seed", default="ones")
    p_seq.add_argument("--len", dest="length", type=int, default=20)
    p_seq.add_argument("--find-recurrence", action="store_true")
    p_seq.add_argument("--max-order", type=int, default=12)
    p_seq.add_argument("--affine", action="store_true",
                       help="allow a constant term in the found recurrence")
    p_seq.add_argument("--format", choices=("csv", "json"), default="csv")
    p_seq.add_argument("--out", help="output path (default: stdout)")
    p_seq.set_defaults(func=cmd_seq)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if getattr(args, "law", None) == "frieze":
        args.law = "two_frieze"
    try:
        return args.func(args)
    except (FrameMismatchError, DependencyError, KeyError, ValueError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_USAGE
    except HHLatticeError as exc:
        _write(_error_payload(exc), getattr(args, "out", None))
        return EXIT_SINGULAR


if __name__ == "__main__":
    sys.exit(main())
