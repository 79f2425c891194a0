"""Command line entry point: ``genfrieze {frieze,verify,search,enum,mesh}``.

Exit codes: 0 success, 1 verification failures or no search match,
2 usage or parse errors, 3 internal invariant violations.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .ccmap import FriezeViolation, mesh_report, rho_table
from .cluster import MIN_VERTICES, all_ind_objects, ar_triangle
from .frieze import (FriezeFixture, MalformedFixture, builtin_fixture, fixture_alignments,
                     frieze_grid, load_fixture, validate_fixture)
from .polygon import Dissection, DissectionError, iter_dissections, random_dissection
from .verify import DEFAULT_PROPERTIES, PROPERTIES, verify_all

EXIT_OK, EXIT_FAILURES, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3
BUILTIN_FIXTURES = ("figure2", "figure3")


class UsageError(Exception):
    pass


def _dissection(args) -> Dissection:
    N = args.n + 3
    if N < MIN_VERTICES:
        raise UsageError(f"--n must be at least 3, got {args.n}")
    if args.dissection is not None:
        return Dissection.parse(args.dissection, N)
    if args.seed is not None:
        return random_dissection(N, args.seed)
    raise UsageError("give --dissection (or --seed for a random one)")


def cmd_frieze(args, out) -> int:
    D = _dissection(args)
    methods = ("bhj", "cc") if args.method == "both" else (args.method,)
    grids = {m: frieze_grid(D, m) for m in methods}
    if args.format == "json":
        payload = {"dissection": str(D), "grids": {m: g.to_dict() for m, g in grids.items()}}
        if len(grids) == 2:
            payload["verdict"] = "MATCH" if grids["bhj"] == grids["cc"] else "MISMATCH"
        print(json.dumps(payload), file=out)
    elif args.format == "csv":
        for k, (m, g) in enumerate(grids.items()):
            text = g.to_csv(m)
            out.write(text if k == 0 else text.split("\n", 1)[1])
    else:
        print(f"dissection: [{D}]  N={D.N}", file=out)
        for m, g in grids.items():
            print(f"\nmethod {m}:", file=out)
            print(g.render(), file=out)
        if len(grids) == 2:
            print("\n" + ("MATCH" if grids["bhj"] == grids["cc"] else "MISMATCH"), file=out)
    if len(grids) == 2 and grids["bhj"] != grids["cc"]:
        return EXIT_FAILURES
    return EXIT_OK


def cmd_verify(args, out) -> int:
    props = tuple(args.property) if args.property else DEFAULT_PROPERTIES
    if args.max_n < MIN_VERTICES:
        raise UsageError(f"--max-n counts polygon vertices and must be at least {MIN_VERTICES}")
    report = verify_all(args.max_n, props, min_n=args.min_n, jobs=args.jobs)
    if args.format == "json":
        print(report.to_json(), file=out)
    else:
        data = report.to_dict()
        print("status: " + ("PASS" if report.ok else "FAIL"), file=out)
        for N, k in data["dissections"].items():
            print(f"N={N}: {k} dissections checked", file=out)
        for prop, k in data["checks"].items():
            print(f"{prop}: {k} checks", file=out)
        print(f"zero-difference meshes: {data['zero_difference_meshes']}", file=out)
        for f in report.failures[:20]:
            print(f"FAIL {f}", file=out)
    return EXIT_OK if report.ok else EXIT_FAILURES


def _fixture(spec: str) -> FriezeFixture:
    if spec in BUILTIN_FIXTURES and not Path(spec).exists():
        return builtin_fixture(spec)
    return load_fixture(spec)


def _search_chunk(args):
    N, texts, fixture, triangulations_only = args
    hits = []
    for text in texts:
        D = Dissection.parse(text, N)
        placements = fixture_alignments(frieze_grid(D, "cc"), fixture)
        if placements:
            hits.append((text, placements))
    return hits


def search_fixture(fixture: FriezeFixture, triangulations_only: bool = False, jobs: int = 1,
                   chunk_size: int = 500):
    """Every dissection whose frieze contains the fixture, with its placements."""
    N = fixture.N
    texts = [str(D) for D in iter_dissections(N, triangulations_only)]
    tasks = [(N, texts[s:s + chunk_size], fixture, triangulations_only)
             for s in range(0, len(texts), chunk_size)]
    hits = []
    if jobs <= 1:
        for chunk in map(_search_chunk, tasks):
            hits.extend(chunk)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for chunk in pool.map(_search_chunk, tasks):
                hits.extend(chunk)
    return len(texts), hits


def cmd_search(args, out) -> int:
    fixture = _fixture(args.fixture)
    validate_fixture(fixture, unimodular=args.triangulations_only)
    searched, hits = search_fixture(fixture, args.triangulations_only, args.jobs)
    if args.format == "json":
        print(json.dumps({
            "searched": searched,
            "matches": [{"dissection": t, "placements": [{"shift": s, "reflected": r} for s, r in p]}
                        for t, p in hits],
        }), file=out)
    else:
        for text, placements in hits:
            where = ", ".join(f"shift {s}{' reflected' if r else ''}" for s, r in placements)
            print(f"{text}\t{where}", file=out)
        print(f"{len(hits)} of {searched} dissections match", file=out)
    return EXIT_OK if hits else EXIT_FAILURES


def cmd_enum(args, out) -> int:
    N = args.n + 3
    if N < 4:
        raise UsageError("--n must be at least 1 for enumeration")
    only_tri = args.what == "triangulations"
    if args.count_only:
        print(sum(1 for _ in iter_dissections(N, only_tri)), file=out)
    else:
        for D in iter_dissections(N, only_tri):
            print(str(D), file=out)
    return EXIT_OK


def cmd_mesh(args, out) -> int:
    D = _dissection(args)
    table = rho_table(D)
    rows = []
    for c in all_ind_objects(D.N):
        mesh = ar_triangle(c, D.N)
        rep = mesh_report(D, c, table)
        rows.append({
            "diagonal": str(c), "tau": str(mesh.start),
            "middle": [str(b) for b in mesh.middle],
            "rho_tau": table[mesh.start], "rho": table[c],
            "rho_middle": [table[b] for b in mesh.middle],
            "difference": rep.difference, "split": rep.split,
        })
    if args.format == "json":
        print(json.dumps({"dissection": str(D), "meshes": rows}), file=out)
    elif args.format == "csv":
        print("diagonal,tau,middle,rho_tau,rho,rho_middle,difference,split", file=out)
        for r in rows:
            print(",".join([r["diagonal"], r["tau"], "+".join(r["middle"]), str(r["rho_tau"]),
                            str(r["rho"]), "*".join(map(str, r["rho_middle"])),
                            str(r["difference"]), str(r["split"]).lower()]), file=out)
    else:
        print(f"dissection: [{D}]  N={D.N}", file=out)
        print(f"{'c':>6} {'tau c':>6} {'middle':>10} {'rho(tau c)':>10} {'rho(c)':>7} "
              f"{'rho(b)':>7} {'diff':>5} split", file=out)
        for r in rows:
            rb = 1
            for v in r["rho_middle"]:
                rb *= v
            print(f"{r['diagonal']:>6} {r['tau']:>6} {'+'.join(r['middle']) or '0':>10} "
                  f"{r['rho_tau']:>10} {r['rho']:>7} {rb:>7} {r['difference']:>5} "
                  f"{str(r['split']).lower()}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="genfrieze",
                                     description="Generalised friezes of polygon dissections.")
    sub = parser.add_subparsers(dest="command", required=True)

    def dissection_opts(p):
        p.add_argument("--n", type=int, required=True, help="type A_n; the polygon has n+3 vertices")
        p.add_argument("--dissection", help="comma-separated a-b pairs, e.g. 0-3,4-7")
        p.add_argument("--seed", type=int, help="use a random dissection with this seed")

    p = sub.add_parser("frieze", help="compute a frieze grid")
    dissection_opts(p)
    p.add_argument("--method", choices=("bhj", "cc", "both"), default="cc")
    p.add_argument("--format", choices=("ascii", "json", "csv"), default="ascii")
    p.set_defaults(func=cmd_frieze)

    p = sub.add_parser("verify", help="exhaustive verification sweep")
    p.add_argument("--max-n", type=int, required=True, help="largest polygon size (vertices)")
    p.add_argument("--min-n", type=int, default=MIN_VERTICES, help="smallest polygon size")
    p.add_argument("--property", action="append", choices=PROPERTIES)
    p.add_argument("--format", choices=("ascii", "json"), default="ascii")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="find dissections reproducing a frieze fixture")
    p.add_argument("fixture", help="fixture JSON path, or figure2 / figure3")
    p.add_argument("--triangulations-only", action="store_true")
    p.add_argument("--format", choices=("ascii", "json"), default="ascii")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("enum", help="enumerate dissections or triangulations")
    p.add_argument("--n", type=int, required=True, help="type A_n; the polygon has n+3 vertices")
    p.add_argument("--what", choices=("dissections", "triangulations"), default="dissections")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("mesh", help="mesh differences and splitness per diagonal")
    dissection_opts(p)
    p.add_argument("--format", choices=("ascii", "json", "csv"), default="ascii")
    p.set_defaults(func=cmd_mesh)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args, out)
    except (DissectionError, MalformedFixture, UsageError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FriezeViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
