"""Command-line front end: counting, enumeration, file mutation, verification, export.

Exit codes: 0 on success or a verified property, 1 when a verification suite
finds a violation or counts disagree, 2 on usage or input errors.  The
enumeration ceilings can be raised or lowered with ``--max-n`` or the
``MUTANTA_MAX_N`` environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .enumeration import (
    commutation_report,
    enumerate_mutation_class,
    enumerate_triangulations,
    lemma_report,
    mutation_class_count,
    rotation_orbit_report,
    verify_rotation_bijection,
)
from .polygon import flip, triangulation_from_json, triangulation_to_json
from .quiver import mutate, quiver_from_json, quiver_to_dot, quiver_to_json


def _resolve_limit(args) -> int | None:
    if getattr(args, "max_n", None) is not None:
        return args.max_n
    env = os.environ.get("MUTANTA_MAX_N")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"MUTANTA_MAX_N must be an integer, got {env!r}") from None
    return None


def _cmd_count(args) -> int:
    limit = _resolve_limit(args)
    mode = args.mode or "formula"
    if mode == "formula":
        print(mutation_class_count(args.n))
        return 0
    if mode == "bfs":
        print(len(enumerate_mutation_class(args.n, limit=limit, jobs=args.jobs).members))
        return 0
    if mode == "orbits":
        print(len(enumerate_triangulations(args.n + 3, limit=limit).rotation_classes))
        return 0
    formula = mutation_class_count(args.n)
    bfs = len(enumerate_mutation_class(args.n, limit=limit, jobs=args.jobs).members)
    orbits = len(enumerate_triangulations(args.n + 3, limit=limit).rotation_classes)
    print(f"formula: {formula}")
    print(f"bfs: {bfs}")
    print(f"orbits: {orbits}")
    if not (formula == bfs == orbits):
        print("counts disagree", file=sys.stderr)
        return 1
    return 0


def _cmd_enumerate(args) -> int:
    limit = _resolve_limit(args)
    if args.triangulations:
        catalog = enumerate_triangulations(args.n + 3, limit=limit)
        for t in catalog.members:
            print(json.dumps(triangulation_to_json(t)))
        return 0
    catalog = enumerate_mutation_class(args.n, limit=limit, jobs=args.jobs)
    for member in catalog.members:
        print(json.dumps(quiver_to_json(member.to_quiver())))
    return 0


def _cmd_mutate(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        data = json.load(fh)
    q = quiver_from_json(data)
    for k in args.vertices:
        q = mutate(q, k)
    print(json.dumps(quiver_to_json(q)))
    return 0


def _parse_diagonal(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"diagonal must look like 'a,b', got {text!r}")
    try:
        a, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"diagonal endpoints must be integers, got {text!r}") from None
    return (a, b) if a < b else (b, a)


def _cmd_flip(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        data = json.load(fh)
    t = triangulation_from_json(data)
    for text in args.diagonals:
        t = flip(t, _parse_diagonal(text))
    print(json.dumps(triangulation_to_json(t)))
    return 0


_SUITES = {
    "bijection": lambda n, limit, jobs: verify_rotation_bijection(n, limit=limit, jobs=jobs),
    "orbits": lambda n, limit, jobs: rotation_orbit_report(n, limit=limit),
    "commutation": lambda n, limit, jobs: commutation_report(n, limit=limit),
    "lemmas": lambda n, limit, jobs: lemma_report(n, limit=limit),
}


def _cmd_verify(args) -> int:
    limit = _resolve_limit(args)
    report = _SUITES[args.suite](args.n, limit, args.jobs)
    if args.json:
        print(json.dumps(report.to_json()))
    else:
        print(report.to_text())
    return 0 if report.ok else 1


def _cmd_export(args) -> int:
    limit = _resolve_limit(args)
    catalog = enumerate_mutation_class(args.n, limit=limit, jobs=args.jobs)
    if args.format == "jsonl":
        text = "".join(
            json.dumps(quiver_to_json(member.to_quiver())) + "\n"
            for member in catalog.members
        )
    else:
        text = "".join(
            quiver_to_dot(member.to_quiver(), name=f"An_{idx}")
            for idx, member in enumerate(catalog.members)
        )
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text)
    return 0


def _cmd_serve(args) -> int:
    from .service import serve

    limit = _resolve_limit(args)
    serve(host=args.host, port=args.port, max_n=limit)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mutanta",
        description="Triangulation flips, quiver mutation, and mutation-class counting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, jobs=True):
        p.add_argument("--max-n", type=int, default=None,
                       help="override the enumeration ceiling (also: MUTANTA_MAX_N)")
        if jobs:
            p.add_argument("--jobs", type=int, default=1,
                           help="worker processes for the mutation-class search")

    p_count = sub.add_parser("count", help="count mutation classes of rank n")
    p_count.add_argument("n", type=int)
    mode = p_count.add_mutually_exclusive_group()
    mode.add_argument("--formula", dest="mode", action="store_const", const="formula")
    mode.add_argument("--bfs", dest="mode", action="store_const", const="bfs")
    mode.add_argument("--orbits", dest="mode", action="store_const", const="orbits")
    mode.add_argument("--all", dest="mode", action="store_const", const="all")
    add_common(p_count)
    p_count.set_defaults(func=_cmd_count, mode=None)

    p_enum = sub.add_parser("enumerate", help="print the catalog as JSON lines")
    p_enum.add_argument("n", type=int)
    p_enum.add_argument("--triangulations", action="store_true",
                        help="list triangulations of the (n+3)-gon instead of quivers")
    add_common(p_enum)
    p_enum.set_defaults(func=_cmd_enumerate)

    p_mut = sub.add_parser("mutate", help="mutate a quiver JSON file at a vertex sequence")
    p_mut.add_argument("file")
    p_mut.add_argument("vertices", type=int, nargs="*")
    p_mut.set_defaults(func=_cmd_mutate)

    p_flip = sub.add_parser("flip", help="flip a triangulation JSON file at diagonals")
    p_flip.add_argument("file")
    p_flip.add_argument("diagonals", nargs="*", metavar="A,B")
    p_flip.set_defaults(func=_cmd_flip)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("n", type=int)
    p_verify.add_argument("--suite", choices=sorted(_SUITES), required=True)
    p_verify.add_argument("--json", action="store_true", help="machine-readable report")
    add_common(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_export = sub.add_parser("export", help="write the rank-n catalog to a file")
    p_export.add_argument("n", type=int)
    p_export.add_argument("--format", choices=["jsonl", "dot"], required=True)
    p_export.add_argument("--out", required=True)
    add_common(p_export)
    p_export.set_defaults(func=_cmd_export)

    p_serve = sub.add_parser("serve", help="run the local explorer HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8765)
    add_common(p_serve, jobs=False)
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
