"""Command line interface: ``coxex <command> [flags]``.

Results go to standard output as JSON; diagnostics and timings go to
standard error.  Exit codes: 0 success, 1 a checked property is false,
2 usage error, 3 internal invariant or verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks, equations, realization, verify
from .combinatorics import SetSystem, elements, size
from .errors import CoxexError
from .polytopes import (
    adjacency_profile,
    antipodes_321,
    build,
    cross_facets,
    inner_product_classes,
)
from .tropical import assignment, satisfies_all

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

_POLY_FAMILY = {"E6": ("2_21",), "E7": ("3_21",), "D-cross": ("cross_D",), "C-cross": ("cross_C",)}


class UsageError(Exception):
    pass


def _emit(obj, out=None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=False)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _load(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required here")


# ---------------------------------------------------------------------------

def cmd_gen_equations(args) -> int:
    fam = equations.generate(args.family, args.n, args.k)
    _emit(fam.to_json(), args.out)
    print(f"{len(fam)} equations", file=sys.stderr)
    return EXIT_OK


def _family_polytope(args):
    name = _POLY_FAMILY[args.family][0]
    if name in ("cross_D", "cross_C"):
        _need(args, "n")
        return build(name, args.n)
    return build(name)


def _check_set_system(args, M: SetSystem) -> tuple[dict, bool]:
    fam = args.family
    if args.n is not None and args.n != M.n:
        raise UsageError(f"--n {args.n} disagrees with input n = {M.n}")
    if fam == "A":
        k = args.k
        if k is None:
            ks = {size(m) for m in M.members}
            if len(ks) != 1:
                raise UsageError("--k is required (members have mixed sizes)")
            k = ks.pop()
        trop, idx = satisfies_all(assignment(M), equations.gen_type_A(M.n, k).quadrics())
        v = checks.matroid_violation(M, k)
        out = {
            "matroid": v is None,
            "strong": checks.is_strong_matroid_A(M, k),
            "tropical": trop,
            "failing_equation": idx,
            "witness": None if v is None else [list(elements(v[0])), list(elements(v[1])), v[2]],
        }
        return out, out["matroid"]
    if fam == "B":
        out = checks.subset_verdict(M)
        f = equations.gen_type_B(M.n)
        ok, idx = satisfies_all(assignment(M), f.quadrics())
        out["tropical"] = ok
        out["failing_equation"] = None if idx is None else f.to_json()[idx]
        return out, bool(out["strong"]) if M.members else True
    if fam == "D":
        even = M.is_even()
        parity = size(min(M.members)) % 2 if M.members else 0
        delta = checks.is_delta_matroid(M) if M.members else True
        trop = True
        if M.n >= 4:
            trop = satisfies_all(assignment(M), equations.gen_type_D(M.n, parity).quadrics())[0]
        out = {"even": even, "delta": delta, "even_delta": even and delta, "tropical": trop if even else None}
        return out, even and delta
    raise UsageError(f"family {fam} takes vertex subsets, not set systems")


def _check_vertex_subset(args, V: checks.VertexSubset) -> tuple[dict, bool]:
    fam = {"2_21": "E6", "3_21": "E7", "cross_D": "D-cross", "cross_C": "C-cross"}.get(V.polytope.name)
    p = V.polytope
    strong = checks.coxeter_violation(V)
    out = {"polytope": p.name, "size": len(V), "strong": strong is None}
    out["witness_pair"] = None if strong is None else [p.label_json(x) for x in strong]
    if fam is not None:
        f = equations.generate(fam, p.params[0] if p.params else None)
        vars_ = frozenset(p.var(lab) for lab in V.chosen)
        ok, idx = satisfies_all(vars_, f.quadrics())
        out["tropical"] = ok
        out["failing_equation"] = idx
    if args.edges:
        out["coxeter_matroid"] = checks.is_coxeter_matroid(V)
    return out, out["strong"]


def cmd_check(args) -> int:
    _need(args, "input")
    data = _load(args.input)
    items = data if isinstance(data, list) else [data]
    verdicts, all_ok = [], True
    for item in items:
        if args.family in _POLY_FAMILY or "vertices" in item:
            if "vertices" not in item:
                raise UsageError("vertex subset input needs a 'vertices' list")
            if "polytope" not in item:
                p = _family_polytope(args)
                item = {"polytope": p.name, "params": list(p.params), **item}
            V = checks.VertexSubset.from_json(item)
            out, ok = _check_vertex_subset(args, V)
        else:
            out, ok = _check_set_system(args, SetSystem.from_json(item))
        verdicts.append(out)
        all_ok &= ok
    _emit(verdicts if isinstance(data, list) else verdicts[0], args.out)
    return EXIT_OK if all_ok else EXIT_FALSE


def cmd_polytope(args) -> int:
    kw = {}
    if args.n is not None:
        kw["n"] = args.n
    if args.k is not None:
        kw["k"] = args.k
    if args.sign is not None:
        kw["sign"] = args.sign
    p = build(args.name, **kw)
    rs = p.root_system
    out = {
        "name": p.name,
        "params": list(p.params),
        "vertices": len(p),
        "root_system": rs.type_tag,
        "roots": len(rs),
        "simple_roots": [list(a) for a in rs.simple_roots],
        "scale": 2,
    }
    if p.name in ("2_21", "3_21"):
        prof = adjacency_profile(p)
        first = p.labels[0]
        row = [d for (a, b), d in prof.items() if first in (a, b)]
        out["distance_profile"] = [row.count(d) for d in sorted(set(row))]
        out["inner_products"] = {str(d): v for d, v in inner_product_classes(p).items()}
        facets = cross_facets(p)
        out["cross_facets"] = len(facets)
        out["facet_size"] = sorted({len(v) for v, _ in facets})
        out["facet_antipodes"] = sorted({len(pr) for _, pr in facets})
        if args.report:
            out["facets"] = [{"vertices": list(v), "antipodes": [list(x) for x in pr]} for v, pr in facets]
        if p.name == "3_21":
            out["antipodes"] = [list(x) for x in antipodes_321(p)]
    if args.report:
        out["labels"] = [p.label_json(lab) for lab in p.labels]
        out["coordinates"] = [list(x) for _, x in p.vertices]
    _emit(out, args.out)
    return EXIT_OK


def _frac(x) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def cmd_realize(args) -> int:
    import random

    kind = args.type
    _need(args, "n")
    rng = random.Random(args.seed)
    if kind == "A":
        _need(args, "k")
        A = realization.random_matrix(args.k, args.n, rng)
        coords = realization.plucker_vector(A)
        matrix = A
    elif kind == "D":
        A = realization.random_skew(args.n, rng)
        coords = realization.spinor_vector(A)
        matrix = A
    elif kind == "D-cross":
        x = realization.cross_vector_D(args.n, args.seed)
        out = {
            "type": kind,
            "n": args.n,
            "seed": args.seed,
            "coordinates": [{"var": v.key, "value": _frac(x[v])} for v in sorted(x, key=lambda v: (abs(v.key), v.key < 0))],
        }
        _emit(out, args.out)
        return EXIT_OK
    else:
        raise UsageError(f"no realization recipe for type {kind}")
    out = {
        "type": kind,
        "n": args.n,
        "seed": args.seed,
        "matrix": [[_frac(v) for v in row] for row in matrix],
        "coordinates": [
            {"set": list(elements(m)), "value": _frac(v)}
            for m, v in sorted(coords.items(), key=lambda kv: (size(kv[0]), kv[0]))
        ],
        "support": SetSystem(args.n, realization.support(coords)).to_json()["sets"],
    }
    if kind == "A":
        out["k"] = args.k
    _emit(out, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(verify.SUITES) if args.suite == "all" else args.suite.split(",")
    for name in names:
        if name not in verify.SUITES:
            raise UsageError(f"unknown suite {name!r}; choose from {', '.join(verify.SUITES)}")
    kw = {"seed": args.seed, "trials": args.trials}
    if args.max_n is not None:
        kw["max_n"] = args.max_n
    results = []
    print(f"{'suite':<16} {'instances':>10} {'seconds':>9}  result", file=sys.stderr)
    for name in names:
        r = verify.run_suite(name, **kw)
        results.append(r)
        print(f"{r.id:<16} {r.instances:>10} {r.elapsed:>9.2f}  {'PASS' if r.passed else 'FAIL'}", file=sys.stderr)
    _emit({"seed": args.seed, "trials": args.trials, "max_n": args.max_n, "suites": [r.to_json() for r in results]}, args.out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_INTERNAL


def cmd_sample(args) -> int:
    import numpy as np

    from . import sweep

    fam = args.family
    if fam in _POLY_FAMILY:
        p = _family_polytope(args)
        U = sweep.Universe.of(p.labels)
    else:
        _need(args, "n")
        if fam == "A":
            _need(args, "k")
            U = sweep.subsets_universe(args.n, rank=args.k)
        elif fam == "D":
            U = sweep.subsets_universe(args.n, parity=0)
        else:
            U = sweep.subsets_universe(args.n)
    words = sweep.sample_words(len(U), args.count, args.seed)
    out = []
    for w in words:
        chosen = U.decode(int(w))
        if fam in _POLY_FAMILY:
            out.append(checks.VertexSubset(p, frozenset(chosen)).to_json())
        else:
            out.append(SetSystem(args.n, frozenset(chosen)).to_json())
    _emit(out if args.count != 1 else out[0], args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="coxex", description="Strong exchange equations for minuscule Coxeter matroids.")
    sub = ap.add_subparsers(dest="command", required=True)
    fams = list(equations.FAMILIES)

    def common(p, family=True):
        if family:
            p.add_argument("--family", choices=fams, required=True)
        p.add_argument("--n", type=int)
        p.add_argument("--k", type=int)
        p.add_argument("--format", choices=["json"], default="json")
        p.add_argument("--out", help="write JSON here instead of standard output")

    p = sub.add_parser("gen-equations", help="emit a tropical equation family")
    common(p)
    p.set_defaults(func=cmd_gen_equations)

    p = sub.add_parser("check", help="check a set system or vertex subset")
    common(p)
    p.add_argument("--input", help="JSON file ('-' for standard input)")
    p.add_argument("--edges", action="store_true", help="also run the exact edge test (vertex subsets)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("polytope", help="describe an ambient polytope")
    p.add_argument("--name", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--sign", type=int, choices=[1, -1])
    p.add_argument("--report", action="store_true", help="include facets, labels and coordinates")
    p.add_argument("--format", choices=["json"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_polytope)

    p = sub.add_parser("realize", help="random exact point of the Grassmannian or spinor variety")
    p.add_argument("--type", choices=["A", "D", "D-cross"], required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["json"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default="all", help="'all' or a comma-separated list of suite ids")
    p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("--trials", type=int, default=100000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["json"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sample", help="random set systems or vertex subsets as JSON")
    common(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.set_defaults(func=cmd_sample)
    return ap


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, CoxexError, FileNotFoundError, json.JSONDecodeError, KeyError) as e:
        print(f"coxex: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as e:
        print(f"coxex: internal invariant failed: {e}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
