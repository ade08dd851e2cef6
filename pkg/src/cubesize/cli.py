"""``cubesize`` command line front end.

Exit codes: 0 ok, 2 parse error, 3 ``--verify`` mismatch, 4 unsupported
dimension, 5 oracle budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from . import intmat
from .generic import (
    BudgetExhausted,
    lattice_size_bruteforce,
    successive_size_bruteforce,
    width_bruteforce,
)
from .hull import vertices
from .io import PolytopeParseError, parse_polytope
from .lattice import AffineUnimodularMap, LatticePolytope, apply_map, e_box
from .reduce2d import lattice_size_2d, minimal_rectangle_2d, width_2d
from .reduce3d import lattice_size_3d, minimal_box_3d, reduce_3d
from .sampling import random_polytope

EXIT_OK, EXIT_PARSE, EXIT_VERIFY, EXIT_UNSUPPORTED, EXIT_BUDGET = 0, 2, 3, 4, 5

# the oracle runs by default in ``bench`` only up to this coordinate bound
ORACLE_MAX_COORD = 8


class CommandError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _check_supported(P: LatticePolytope):
    if P.dim not in (2, 3):
        raise CommandError(EXIT_UNSUPPORTED, f"unsupported dimension {P.dim}: only 2 and 3 are handled")


def _invariants(P: LatticePolytope, naive: bool = False):
    """(ls certificate, w, w2 or None, box values, box map)."""
    if P.dim == 2:
        cert = lattice_size_2d(P)
        w, ls, box_map = minimal_rectangle_2d(P)
        return cert, w, None, (w, ls), box_map
    cert = lattice_size_3d(P, naive=naive)
    box = minimal_box_3d(P)
    return cert, box.w, box.w2, (box.w, box.w2, box.ls), box.map


def _map_fields(P: LatticePolytope, T: AffineUnimodularMap) -> dict:
    if abs(intmat.det(T.matrix)) != 1:
        raise AssertionError("refusing to report a non-unimodular matrix")
    image = apply_map(P, T)
    return {
        "matrix": [list(r) for r in T.matrix],
        "translation": list(T.translation),
        "image": [list(v) for v in vertices(image)],
    }


def _oracle_values(P: LatticePolytope, budget=None) -> dict:
    vals = {"ls": lattice_size_bruteforce(P, budget).value,
            "w": width_bruteforce(P)}
    if P.dim == 3:
        vals["w2"] = successive_size_bruteforce(P, 2, budget)[0]
    return vals


def build_report(command: str, P: LatticePolytope, naive: bool = False,
                 verify: bool = False, timing: bool = True) -> dict:
    _check_supported(P)
    t0 = time.perf_counter()
    cert, w, w2, box, box_map = _invariants(P, naive)
    ms = (time.perf_counter() - t0) * 1000
    report = {"command": command, "dim": P.dim, "ls": cert.value, "w": w}
    if w2 is not None:
        report["w2"] = w2
    T = cert.map if command == "size" else box_map
    report.update(_map_fields(P, T))
    if command == "box":
        report["box"] = list(box)
    report["iterations"] = cert.iterations
    if verify:
        oracle = _oracle_values(P)
        report["oracle"] = oracle
        report["oracle_agrees"] = all(report[k] == v for k, v in oracle.items())
    report["ms"] = round(ms, 3) if timing else None
    return report


def oracle_report(P: LatticePolytope, budget=None, timing: bool = True) -> dict:
    _check_supported(P)
    t0 = time.perf_counter()
    report = {"command": "oracle", "dim": P.dim}
    try:
        cert = lattice_size_bruteforce(P, budget)
    except BudgetExhausted as exc:
        report.update({"inconclusive": True, "ls_upper_bound": exc.best,
                       "examined": exc.examined})
        report["ms"] = round((time.perf_counter() - t0) * 1000, 3) if timing else None
        raise CommandError(EXIT_BUDGET, json.dumps(report)) from None
    report["ls"] = cert.value
    report.update(_map_fields(P, cert.map))
    report["inconclusive"] = False
    report["ms"] = round((time.perf_counter() - t0) * 1000, 3) if timing else None
    return report


def format_human(report: dict) -> str:
    lines = []
    if report.get("inconclusive"):
        lines.append(f"oracle inconclusive: ls <= {report['ls_upper_bound']}")
    keys = [k for k in ("ls", "w", "w2", "box") if k in report]
    if keys:
        lines.append("  ".join(f"{k}={report[k]}" for k in keys) + f"  (dim {report['dim']})")
    if "matrix" in report:
        lines.append("map: x -> A x + v")
        for row in report["matrix"]:
            lines.append("  " + " ".join(f"{x:>4}" for x in row))
        lines.append("  v = " + " ".join(map(str, report["translation"])))
        lines.append("image vertices: " + " ".join("(" + ",".join(map(str, p)) + ")"
                                                   for p in report["image"]))
    if "iterations" in report:
        lines.append(f"iterations: {report['iterations']}")
    if "oracle_agrees" in report:
        lines.append(f"oracle: {report['oracle']}  agrees={report['oracle_agrees']}")
    if report.get("ms") is not None:
        lines.append(f"time: {report['ms']} ms")
    return "\n".join(lines)


BENCH_COLUMNS = ("idx", "npts", "e_box", "ls", "w", "iters", "s_max", "s_total", "ms",
                 "oracle_ls", "agree")


def bench_rows(dim: int, count: int, coord_max: int, seed: int, oracle: bool | None = None,
               naive: bool = False, n_points: int | None = None):
    """Yield one row dict per random instance; instances depend only on the seed."""
    if dim not in (2, 3):
        raise CommandError(EXIT_UNSUPPORTED, f"unsupported dimension {dim}")
    if oracle is None:
        oracle = coord_max <= ORACLE_MAX_COORD
    rng = random.Random(seed)
    for idx in range(count):
        P = random_polytope(rng, dim, coord_max, n_points)
        t0 = time.perf_counter()
        if dim == 2:
            cert = lattice_size_2d(P)
            w = width_2d(P)
            ls, iters, s_sizes = cert.value, cert.iterations, []
        else:
            res = reduce_3d(P, naive=naive)
            ls, iters, s_sizes = res.value, res.iterations, res.s_sizes
            w = minimal_box_3d(P).w
        ms = (time.perf_counter() - t0) * 1000
        row = {"idx": idx, "npts": len(P), "e_box": e_box(P), "ls": ls, "w": w,
               "iters": iters, "s_max": max(s_sizes, default=0), "s_total": sum(s_sizes),
               "ms": round(ms, 3), "oracle_ls": None, "agree": None}
        if oracle:
            row["oracle_ls"] = lattice_size_bruteforce(P).value
            row["agree"] = row["oracle_ls"] == ls and width_bruteforce(P) == w
        yield row


def format_table(rows) -> str:
    out = ["\t".join(BENCH_COLUMNS)]
    for r in rows:
        out.append("\t".join("-" if r[c] is None else str(r[c]) for c in BENCH_COLUMNS))
    return "\n".join(out)


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cubesize",
                                description="Lattice size of lattice polygons and 3D polytopes "
                                            "with respect to the unit cube.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("path", help="polytope file: header 'd n' then n rows of d integers")
        sp.add_argument("--json", action="store_true", help="emit one JSON object")
        sp.add_argument("--no-timing", action="store_true",
                        help="report ms as null so output is byte-deterministic")

    for name, help_ in (("size", "lattice size with a certifying map"),
                        ("width", "lattice width (and w2 in 3D)"),
                        ("box", "minimal axis-parallel box in the product order")):
        sp = sub.add_parser(name, help=help_)
        common(sp)
        sp.add_argument("--verify", action="store_true",
                        help="cross-check against the brute-force oracle")
        sp.add_argument("--naive-3d", action="store_true",
                        help="3D: disable the early exit of the reduction loop")

    sp = sub.add_parser("oracle", help="brute-force lattice size")
    common(sp)
    sp.add_argument("--budget", type=int, default=None, help="cap on examined row subsets")

    sp = sub.add_parser("bench", help="random-instance benchmark table")
    sp.add_argument("--dim", type=int, choices=(2, 3), default=2)
    sp.add_argument("--count", type=int, default=10)
    sp.add_argument("--coord-max", type=int, default=6)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--points", type=int, default=None, help="points per instance")
    sp.add_argument("--naive-3d", action="store_true")
    sp.add_argument("--json", action="store_true", help="emit a JSON list of rows")
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--oracle", dest="oracle", action="store_true", default=None)
    group.add_argument("--no-oracle", dest="oracle", action="store_false")
    return p


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    args = make_parser().parse_args(argv)
    try:
        if args.command == "bench":
            rows = list(bench_rows(args.dim, args.count, args.coord_max, args.seed,
                                   args.oracle, args.naive_3d, args.points))
            if args.json:
                print(json.dumps(rows), file=stdout)
            else:
                print(format_table(rows), file=stdout)
            return EXIT_VERIFY if any(r["agree"] is False for r in rows) else EXIT_OK
        try:
            P = parse_polytope(args.path)
        except PolytopeParseError as exc:
            raise CommandError(EXIT_PARSE, f"{args.path}: {exc}") from None
        except OSError as exc:
            raise CommandError(EXIT_PARSE, str(exc)) from None
        timing = not args.no_timing
        if args.command == "oracle":
            report = oracle_report(P, args.budget, timing)
        else:
            report = build_report(args.command, P, args.naive_3d, args.verify, timing)
        print(json.dumps(report) if args.json else format_human(report), file=stdout)
        if report.get("oracle_agrees") is False:
            return EXIT_VERIFY
        return EXIT_OK
    except CommandError as exc:
        if exc.code == EXIT_BUDGET:
            print(exc.args[0] if args.json else format_human(json.loads(exc.args[0])), file=stdout)
        else:
            print(f"cubesize: error: {exc}", file=sys.stderr)
        return exc.code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
