"""Command-line front end.

Exit status is 0 on success, 1 on domain errors (bad walk, bad map JSON,
precondition failures) and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

import numpy as np

from .bijection import CorruptMapError, phi, psi
from .depth_search import enumerate_depth_trees
from .oracles import fiber_report
from .planar_map import MapError
from .sampler import TARGETS, sample_excursion, sample_map
from .serialize import dumps, map_from_dict, mdm_from_dict, to_dot
from .walks import CountKind, Walk, classify, count, enumerate_walks


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load_json(path: str) -> dict:
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise MapError(f"malformed JSON in {path}: {exc}") from None


def _item_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, index])))


def cmd_classify(args, out) -> None:
    print(json.dumps(classify(Walk(args.walk)).as_dict()), file=out)


def cmd_count(args, out) -> None:
    print(count(args.kind, args.n, args.i), file=out)


def cmd_to_map(args, out) -> None:
    print(dumps(phi(Walk(args.walk), args.i)), file=out)


def cmd_to_walk(args, out) -> None:
    print(psi(mdm_from_dict(_load_json(args.file))), file=out)


def cmd_enumerate(args, out) -> None:
    for w in enumerate_walks(args.kind, args.n, args.i):
        print(w, file=out)


def cmd_sample(args, out) -> None:
    if args.format == "dot" and args.count != 1:
        raise ValueError("--format dot writes a single map; use --count 1")
    for k in range(args.count):
        rng = _item_rng(args.seed, k)
        if args.format == "walk":
            print(sample_excursion(args.size, rng), file=out)
            continue
        obj = sample_map(args.size, args.target, rng)
        if args.format == "json":
            print(dumps(obj), file=out)
        elif args.target == "marked_depth":
            out.write(to_dot(obj.map, obj.tree, obj.marked))
        else:
            out.write(to_dot(obj))


def cmd_depth_trees(args, out) -> None:
    m, _, _ = map_from_dict(_load_json(args.file))
    for tree in sorted(sorted(t) for t in enumerate_depth_trees(m)):
        print(json.dumps(tree), file=out)


def cmd_verify(args, out) -> None:
    print(json.dumps(fiber_report(args.n).as_dict()), file=out)


def cmd_export(args, out) -> None:
    m, tree, marked = map_from_dict(_load_json(args.file))
    out.write(to_dot(m, tree, marked))


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kreweras",
        description="Kreweras walks, excursions and decorated near-cubic maps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    kinds = [k.value for k in CountKind]

    p = sub.add_parser("classify", help="classify a walk")
    p.add_argument("walk")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("count", help="evaluate a counting formula")
    p.add_argument("--kind", required=True, choices=kinds)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("to-map", help="map a walk to its marked depth-map (JSON)")
    p.add_argument("walk")
    p.add_argument("--i", type=int, default=0)
    p.set_defaults(func=cmd_to_map)

    p = sub.add_parser("to-walk", help="recover the walk of a marked depth-map JSON file")
    p.add_argument("file", help="path, or - for stdin")
    p.set_defaults(func=cmd_to_walk)

    p = sub.add_parser("enumerate", help="list all walks of a family")
    p.add_argument("--kind", required=True, choices=["kreweras_origin", "excursion", "kreweras_to"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("sample", help="uniform random generation")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--target", choices=TARGETS, default="marked_depth")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--format", choices=["json", "dot", "walk"], default="json")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("depth-trees", help="list the depth trees of a 2-near-cubic map")
    p.add_argument("file")
    p.set_defaults(func=cmd_depth_trees)

    p = sub.add_parser("verify", help="exhaustive fiber report at size n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="convert map JSON to another format")
    p.add_argument("file")
    p.add_argument("--format", choices=["dot"], default="dot")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except (ValueError, MapError, CorruptMapError, OSError, KeyError, TypeError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"kreweras {args.command}: error: {msg}", file=err)
        return 1
    return 0


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
