"""Command line front end.

Subcommands:
  verify <target>   run one named verification and report pass/fail
  cells table       print the labelled partition table for a given n
  report            run every verification target, optionally in parallel

Exit codes: 0 all checks passed, 1 a check found a contradiction,
2 a computation hit its budget, 64 usage error.

Output is deterministic for a fixed seed and fixed bounds; wall-clock
timings are only included when --timings is passed so that repeated runs
stay byte-identical.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .cells import (
    a_value,
    bipartitions,
    check_family_class_correspondence,
    format_bipartition,
    format_partition,
    format_symbol,
    j_classes,
    table_rows,
    tau,
    two_core,
    two_quotient,
)
from .diagideals import (
    averaged_multiple_dim,
    compare,
    discriminant,
    full_ring_ideal,
    ideal_I,
    ideal_J,
    invariant_image_dim,
    symbolic_power,
)
from .dunkl import (
    DunklOperator,
    commutation_rhs,
    coordinate_operators,
    multiplication_commutator,
)
from .groebner import (
    Budget,
    BudgetExceeded,
    ideal_equal,
    ideal_power,
    minimal_generator_counts,
)
from .polyring import Polynomial, QQ, partial_derivative
from .weyl import WeylGroup, root_system

DEFAULT_BOUND = 10
DEFAULT_SEED = 0
DEFAULT_C = "0,1/2,1,3/7"


def _rng(seed: int, label: str) -> random.Random:
    return random.Random(f"{seed}:{label}")


def _random_poly(rng: random.Random, nvars: int, max_deg: int,
                 max_terms: int) -> Polynomial:
    terms: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = [0] * nvars
        for _ in range(rng.randint(0, max_deg)):
            mono[rng.randrange(nvars)] += 1
        terms[tuple(mono)] = QQ(rng.randint(-9, 9))
    return Polynomial(nvars, terms)


def _random_x_poly(rng: random.Random, ambient: int, max_deg: int,
                   max_terms: int) -> Polynomial:
    base = _random_poly(rng, ambient, max_deg, max_terms)
    return Polynomial(2 * ambient,
                      {m + (0,) * ambient: c for m, c in base.terms.items()})


def _build_both(name: str, bound: int, budget: Budget):
    rs = root_system(name)
    W = WeylGroup(rs)
    return W, ideal_I(rs, budget=budget), ideal_J(W, bound, budget=budget)


# ---------------------------------------------------------------------------
# verification targets
# ---------------------------------------------------------------------------


def _t_g2_ideal_equality(opts: dict) -> dict:
    bound = opts["bound"]
    W, I, J = _build_both("G2", bound, Budget.from_env())
    cmp = compare(J, I, bound)
    return {
        "ok": cmp.relation == "equal",
        "details": {
            "comparison": cmp.to_json(),
            "gbSizeIntersection": len(I.groebner_basis()),
            "gbSizeAlternant": len(J.groebner_basis()),
        },
    }


def _t_b3_strict_inclusion(opts: dict) -> dict:
    bound = opts["bound"]
    budget = Budget.from_env()
    W, I, J = _build_both("B3", bound, budget)
    cmp = compare(J, I, bound)
    counts_i = minimal_generator_counts(I, bound, budget)
    counts_j = minimal_generator_counts(J, bound, budget)
    extra = {d: counts_i.get(d, 0) - counts_j.get(d, 0)
             for d in sorted(set(counts_i) | set(counts_j))
             if counts_i.get(d, 0) != counts_j.get(d, 0)}
    ok = (cmp.relation == "left-strictly-contained"
          and cmp.certificate is not None
          and cmp.certificate["degree"] == 6
          and cmp.certificate["dimRight"] - cmp.certificate["dimLeft"] == 1
          and extra == {6: 1})
    return {
        "ok": ok,
        "details": {
            "comparison": cmp.to_json(),
            "minimalGeneratorsIntersection":
                {str(d): c for d, c in sorted(counts_i.items()) if c},
            "minimalGeneratorsAlternant":
                {str(d): c for d, c in sorted(counts_j.items()) if c},
            "extraGenerators": {str(d): c for d, c in extra.items()},
        },
    }


def _t_b3_invariant_images(opts: dict) -> dict:
    bound = opts["bound"]
    W, I, J = _build_both("B3", bound, Budget.from_env())
    dims_i = [invariant_image_dim(W, I, d) for d in range(bound + 1)]
    dims_j = [invariant_image_dim(W, J, d) for d in range(bound + 1)]
    return {
        "ok": dims_i == dims_j,
        "details": {
            "symmetrizedDimsIntersection": dims_i,
            "symmetrizedDimsAlternant": dims_j,
        },
    }


def _t_type_a(opts: dict) -> dict:
    budget = Budget.from_env()
    details: dict = {}
    ok = True
    for name, bound, powers in (("A1", 6, (1, 2, 3)), ("A2", 8, (2,))):
        rs = root_system(name)
        W = WeylGroup(rs)
        I = ideal_I(rs, budget=budget)
        J = ideal_J(W, bound, budget=budget)
        cmp = compare(J, I, bound)
        entry = {"comparison": cmp.to_json(), "powerChecks": {}}
        ok &= cmp.relation == "equal"
        for k in powers:
            same = ideal_equal(ideal_power(I, k), symbolic_power(rs, k, budget=budget))
            entry["powerChecks"][str(k)] = same
            ok &= same
        details[name] = entry
    return {"ok": ok, "details": details}


def _t_symbolic_vs_ordinary(opts: dict) -> dict:
    budget = Budget.from_env()
    details: dict = {}
    for name in ("B2", "G2"):
        rs = root_system(name)
        I = ideal_I(rs, budget=budget)
        P = ideal_power(I, 2)
        S = symbolic_power(rs, 2, budget=budget)
        details[name] = {"ordinaryEqualsSymbolic": ideal_equal(P, S)}
    # the run itself is the check; the equalities are reported as findings
    return {"ok": True, "details": details}


def _t_dunkl(opts: dict) -> dict:
    seed, per = opts["seed"], opts["samples"]
    ok = True
    cells = []
    for name in ("A2", "B2", "G2"):
        W = WeylGroup(root_system(name))
        n = W.ambient
        for c in opts["c_values"]:
            rng = _rng(seed, f"dunkl:{name}:{c}")
            ops = coordinate_operators(W, c)
            cell_ok = True
            for _ in range(per):
                f = _random_x_poly(rng, n, 4, 4)
                for i in range(n):
                    for j in range(i + 1, n):
                        cell_ok &= ops[i](ops[j](f)) == ops[j](ops[i](f))
                v = [rng.randint(-2, 2) for _ in range(n)]
                if not any(v):
                    v[0] = 1
                xi = tuple(rng.randint(-2, 2) for _ in range(n))
                D = DunklOperator(W, c, tuple(v))
                cell_ok &= (multiplication_commutator(D, xi, f)
                            == commutation_rhs(W, c, tuple(v), xi, f))
                if not c:
                    direction = tuple(v) + (0,) * n
                    cell_ok &= D(f) == partial_derivative(f, direction)
            cells.append({"type": name, "c": str(c), "samples": per,
                          "ok": cell_ok})
            ok &= cell_ok
    return {
        "ok": ok,
        "details": {"cells": cells,
                    "totalSamples": per * len(cells)},
    }


def _t_cells(opts: dict) -> dict:
    n = opts["n"]
    rows = table_rows(n)
    class_sizes = sorted(len(cls.members) for cls in j_classes(n))
    tau_ok = True
    for m in range(1, 7):
        for bip in bipartitions(m):
            p = tau(*bip)
            tau_ok &= two_core(p) == () and two_quotient(p) == bip
    match_ok = all(check_family_class_correspondence(m)
                   for m in range(1, 7))
    a_ok = sorted(a_value(b) for b in bipartitions(2)) == [0, 1, 1, 1, 4]
    return {
        "ok": tau_ok and match_ok and a_ok and sum(class_sizes) == len(rows),
        "details": {
            "tableRows": len(rows),
            "classSizes": class_sizes,
            "quotientBijection": tau_ok,
            "classesMatchFamilies": match_ok,
            "rankTwoAValues": a_ok,
        },
    }


def _t_delta_identity(opts: dict) -> dict:
    bound, seed = opts["bound"], opts["seed"]
    budget = Budget.from_env()
    ok = True
    details: dict = {}
    for name in ("B2", "G2"):
        rs = root_system(name)
        W, I, J = _build_both(name, bound, budget)
        delta = discriminant(rs)
        deg = delta.total_degree()
        rng = _rng(seed, f"delta:{name}")
        identity_ok = True
        for _ in range(6):
            f = _random_poly(rng, 2 * rs.ambient, 3, 4)
            identity_ok &= (W.symmetrize(delta * f)
                            == delta * W.antisymmetrize(f))
        R = full_ring_ideal(2 * rs.ambient)
        three_way = []
        agree = True
        for k in range(bound - deg + 1):
            dims = [averaged_multiple_dim(W, delta, X, k) for X in (I, J, R)]
            three_way.append({"outputDegree": deg + k, "dims": dims})
            agree &= dims[0] == dims[1] == dims[2]
        ok &= identity_ok and agree
        details[name] = {
            "discriminantDegree": deg,
            "projectionIdentity": identity_ok,
            "threeWayDims": three_way,
        }
    return {"ok": ok, "details": details}


TARGETS = {
    "g2-ideal-equality": _t_g2_ideal_equality,
    "b3-strict-inclusion": _t_b3_strict_inclusion,
    "b3-invariant-images": _t_b3_invariant_images,
    "typeA-haiman": _t_type_a,
    "symbolic-vs-ordinary": _t_symbolic_vs_ordinary,
    "dunkl": _t_dunkl,
    "cells": _t_cells,
    "delta-identity": _t_delta_identity,
}


def run_target(name: str, opts: dict) -> dict:
    start = time.monotonic()
    try:
        result = TARGETS[name](opts)
    except BudgetExceeded as stop:
        result = {"ok": False, "aborted": "budget", "details": {
            "reason": stop.reason, "basisSize": stop.basis_size}}
    result["target"] = name
    if opts.get("timings"):
        result["seconds"] = round(time.monotonic() - start, 2)
    return result


# ---------------------------------------------------------------------------
# argument handling and output
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(64, f"{self.prog}: error: {message}\n")


def _parse_c_list(text: str) -> list:
    try:
        return [QQ(part.strip()) for part in text.split(",") if part.strip()]
    except (ValueError, ZeroDivisionError) as bad:
        raise argparse.ArgumentTypeError(f"bad rational list: {text}") from bad


def build_parser() -> _Parser:
    parser = _Parser(prog="diagonals", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--degree-bound", type=int, default=DEFAULT_BOUND,
                       help="graded degree cutoff (default %(default)s)")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--c", type=_parse_c_list, default=None,
                       metavar="LIST", help=f"parameter values, default {DEFAULT_C}")
        p.add_argument("--samples", type=int, default=9,
                       help="seeded samples per type/parameter cell")
        p.add_argument("--n", type=int, default=3,
                       help="rank for partition tables")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", help="write the report to this file")
        p.add_argument("--timings", action="store_true",
                       help="include wall-clock seconds (breaks reproducibility)")

    verify = sub.add_parser("verify", help="run one verification target")
    verify.add_argument("target", choices=sorted(TARGETS))
    common(verify)

    cells = sub.add_parser("cells", help="partition combinatorics")
    cells_sub = cells.add_subparsers(dest="cells_command", required=True)
    table = cells_sub.add_parser("table", help="print the labelled table")
    common(table)

    report = sub.add_parser("report", help="run every verification target")
    report.add_argument("--jobs", type=int, default=1,
                        help="worker processes (default 1)")
    common(report)
    return parser


def _opts_from_args(args) -> dict:
    return {
        "bound": args.degree_bound,
        "seed": args.seed,
        "samples": args.samples,
        "n": args.n,
        "c_values": args.c if args.c is not None else _parse_c_list(DEFAULT_C),
        "timings": args.timings,
    }


def _emit(text: str, args) -> None:
    if args.out:
        with open(args.out, "w") as sink:
            sink.write(text + "\n")
    else:
        print(text)


def _result_lines(result: dict) -> list:
    status = "PASS" if result["ok"] else (
        "ABORT" if result.get("aborted") else "FAIL")
    lines = [f"{status} {result['target']}"]
    for key, value in sorted(result.get("details", {}).items()):
        lines.append(f"  {key}: {json.dumps(value, sort_keys=True)}")
    return lines


def _exit_code(results: list) -> int:
    if any(r.get("aborted") == "budget" for r in results):
        return 2
    return 0 if all(r["ok"] for r in results) else 1


def _table_text(n: int) -> str:
    lines = ["# partition\tlabels\theart\tbipartition\tsymbol"]
    for r in table_rows(n):
        lines.append("\t".join([
            format_partition(r["partition"]), r["labels"],
            format_partition(r["heart"]),
            format_bipartition(r["bipartition"]),
            format_symbol(r["symbol"]),
        ]))
    return "\n".join(lines)


def _table_json(n: int) -> list:
    return [{
        "partition": list(r["partition"]),
        "labels": r["labels"],
        "heart": list(r["heart"]),
        "bipartition": [list(r["bipartition"][0]), list(r["bipartition"][1])],
        "symbol": [list(r["symbol"][0]), list(r["symbol"][1])],
    } for r in table_rows(n)]


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "cells":
        if args.format == "json":
            _emit(json.dumps(_table_json(args.n), indent=2, sort_keys=True),
                  args)
        else:
            _emit(_table_text(args.n), args)
        return 0

    opts = _opts_from_args(args)
    if args.command == "verify":
        result = run_target(args.target, opts)
        if args.format == "json":
            _emit(json.dumps(result, indent=2, sort_keys=True), args)
        else:
            _emit("\n".join(_result_lines(result)), args)
        return _exit_code([result])

    # report: every target, fixed order
    names = sorted(TARGETS)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(run_target, names, [opts] * len(names)))
    else:
        results = [run_target(name, opts) for name in names]
    if args.format == "json":
        payload = {"ok": all(r["ok"] for r in results), "results": results}
        _emit(json.dumps(payload, indent=2, sort_keys=True), args)
    else:
        lines = []
        for r in results:
            lines.extend(_result_lines(r))
        lines.append("OK" if all(r["ok"] for r in results) else "NOT OK")
        _emit("\n".join(lines), args)
    return _exit_code(results)


if __name__ == "__main__":
    raise SystemExit(main())
