"""zeonperm command line.

JSON output is compact with keys in a fixed order, so loading and
re-dumping with ``separators=(",", ":")`` reproduces it byte for byte.
"""
from __future__ import annotations

import argparse
import json
import sys

from .algebra import UniPoly, charpoly_exact
from .derangements import count_triangle
from .groups import (
    GroupTooLarge, burnside_counts, cycle_index, group_closure, molien_check,
    orbit_partition_counts, parse_generators,
)
from .johnson import (
    expand_sItJ, js_eigenvalue, js_matrix, assemble_sItJ, spectrum_sItJ, subset_label, subsets,
)
from .matrix import load_matrix
from .moments import P_triangle, h
from .permanents import permanent, zeon_power_perm
from .subgraphs import enumerate_elementary, perm_via_subgraphs
from .verify import DEFAULT_SEED, SUITES, run_suite

FORMATS = ("text", "json", "csv")


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def _csv_rows(rows) -> str:
    return "".join(",".join(str(v) for v in r) + "\n" for r in rows)


def _aligned(rows) -> str:
    cells = [[str(v) for v in r] for r in rows]
    width = max((len(c) for r in cells for c in r), default=0)
    return "".join("  ".join(c.rjust(width) for c in r) + "\n" for r in cells)


def _matrix_out(M, labels, fmt, extra=None) -> str:
    if fmt == "json":
        obj = dict(extra or {})
        obj.update(M.to_json())
        if labels is not None:
            obj["subsets"] = labels
        return dumps(obj) + "\n"
    if fmt == "csv":
        return _csv_rows([[str(a) for a in r] for r in M])
    return str(M) + "\n"


def _specialize(M, args):
    if args.s is not None or args.t is not None:
        if args.s is None or args.t is None:
            raise ValueError("--s and --t must be given together")
        return M.specialize(args.s, args.t)
    return M


# commands -------------------------------------------------------------------


def cmd_per(args) -> tuple:
    X = load_matrix(args.matrix)
    if args.shift:
        X = X.shifted()
    X = _specialize(X, args)
    p = permanent(X)
    if args.format == "json":
        return 0, dumps({"n": X.dim, "permanent": str(p)}) + "\n"
    return 0, str(p) + "\n"


def cmd_zeon_power(args) -> tuple:
    X = load_matrix(args.matrix)
    if args.shift:
        X = X.shifted()
    X = _specialize(X, args)
    Y = zeon_power_perm(X, args.ell)
    labels = [subset_label(S_) for S_ in subsets(X.dim, args.ell)]
    return 0, _matrix_out(Y, labels, args.format, {"ell": args.ell})


def cmd_johnson(args) -> tuple:
    n, ell = args.n, args.ell
    kmax = min(ell, n - ell)
    if args.k is not None and args.alpha is not None:
        v = js_eigenvalue(n, ell, args.k, args.alpha)
        if args.format == "json":
            return 0, dumps({"n": n, "ell": ell, "k": args.k, "alpha": args.alpha,
                             "eigenvalue": v}) + "\n"
        return 0, f"{v}\n"
    if args.k is not None:
        labels = [subset_label(S_) for S_ in subsets(n, ell)]
        return 0, _matrix_out(js_matrix(n, ell, args.k), labels, args.format,
                              {"ell": ell, "k": args.k})
    # eigenvalue table: row k, column alpha
    table = [[js_eigenvalue(n, ell, k, a) for a in range(kmax + 1)] for k in range(kmax + 1)]
    if args.format == "json":
        return 0, dumps({"n": n, "ell": ell, "eigenvalues": table}) + "\n"
    if args.format == "csv":
        return 0, _csv_rows(table)
    return 0, _aligned(table)


def _coeff_records(n, ell):
    return [{"k": k, "poly": str(p)} for k, p in expand_sItJ(n, ell)]


def cmd_expand(args) -> tuple:
    recs = _coeff_records(args.n, args.ell)
    if args.format == "json":
        return 0, dumps({"n": args.n, "ell": args.ell, "coeffs": recs}) + "\n"
    if args.format == "csv":
        return 0, "k,poly\n" + "".join(f"{r['k']},{r['poly']}\n" for r in recs)
    return 0, "".join(f"JS_{r['k']}: {r['poly']}\n" for r in recs)


def cmd_spectrum(args) -> tuple:
    n, ell = args.n, args.ell
    if (args.s is None) != (args.t is None):
        raise ValueError("--s and --t must be given together")
    spec = spectrum_sItJ(n, ell, args.s, args.t)
    cp = None
    if args.charpoly:
        if args.s is None:
            raise ValueError("--charpoly needs integer --s and --t")
        cp = charpoly_exact(assemble_sItJ(n, ell).specialize(args.s, args.t))
        expect = UniPoly.const(1)
        for e in spec:
            expect = expect * UniPoly([-e.eigenvalue, 1]) ** e.multiplicity
        if cp != expect:
            raise AssertionError("characteristic polynomial disagrees with the spectrum")
    if args.format == "json":
        obj = {"n": n, "ell": ell, "coeffs": _coeff_records(n, ell),
               "spectrum": [{"alpha": e.alpha, "eigenvalue": str(e.eigenvalue),
                             "multiplicity": e.multiplicity} for e in spec]}
        if cp is not None:
            obj["charpoly"] = cp.factor_str("x")
        return 0, dumps(obj) + "\n"
    if args.format == "csv":
        body = "alpha,eigenvalue,multiplicity\n" + "".join(
            f"{e.alpha},{e.eigenvalue},{e.multiplicity}\n" for e in spec)
        return 0, body
    lines = [f"alpha={e.alpha}  eigenvalue={e.eigenvalue}  multiplicity={e.multiplicity}"
             for e in spec]
    if cp is not None:
        lines.append(f"charpoly: {cp.factor_str('λ')}")
    return 0, "\n".join(lines) + "\n"


def cmd_triangle(args) -> tuple:
    if args.kind == "poly":
        tri = P_triangle(args.n)
    else:
        tri = count_triangle(args.kind, args.n)
    if args.format == "json":
        return 0, dumps({"kind": args.kind, "rows": tri.to_json_rows()}) + "\n"
    if args.format == "csv":
        return 0, tri.to_csv()
    if args.kind == "poly":
        return 0, "".join(f"P[{n},{l}] = {p}\n" for n, r in enumerate(tri.rows)
                          for l, p in enumerate(r))
    return 0, _aligned(tri.padded())


def cmd_hpoly(args) -> tuple:
    p = h(args.n, args.m)
    text = p.to_str(star=not args.paper_style)
    if args.format == "json":
        return 0, dumps({"n": args.n, "m": args.m, "poly": text}) + "\n"
    return 0, text + "\n"


def cmd_subgraphs(args) -> tuple:
    n, ell = args.n, args.ell
    subs = enumerate_elementary(n, ell)
    total = perm_via_subgraphs(n, ell)
    if args.format == "json":
        obj = {"n": n, "ell": ell, "count": len(subs), "permanent": str(total)}
        if args.list:
            obj["subgraphs"] = [{"components": E.describe(), "d": E.isolated_distinguished,
                                 "c": E.num_cycles, "weight": E.weight_factored()} for E in subs]
        return 0, dumps(obj) + "\n"
    lines = []
    if args.list:
        for E in subs:
            lines.append(f"{E.describe():<16} d(E)={E.isolated_distinguished} "
                         f"c(E)={E.num_cycles} weight={E.weight_factored()}")
    lines.append(f"{len(subs)} subgraphs, P[{n},{ell}] = {total}")
    return 0, "\n".join(lines) + "\n"


def _group(args):
    gens = parse_generators(args.gens, args.n)
    return group_closure(gens, cap=args.cap)


def cmd_cycle_index(args) -> tuple:
    G = _group(args)
    Z = cycle_index(G)
    if args.format == "json":
        terms = [{"type": list(ct), "coeff": str(Z.terms[ct])}
                 for ct in sorted(Z.terms, reverse=True)]
        return 0, dumps({"n": G.n, "order": G.order, "terms": terms}) + "\n"
    return 0, f"|G| = {G.order}\nZ_G = {Z}\n"


def cmd_orbits(args) -> tuple:
    G = _group(args)
    counts = burnside_counts(G)
    if counts != orbit_partition_counts(G):
        raise AssertionError("Burnside count disagrees with the orbit partition")
    if args.ell is not None:
        if not 0 <= args.ell <= G.n:
            raise ValueError(f"ell={args.ell} outside 0..{G.n}")
        counts = [counts[args.ell]]
        ells = [args.ell]
    else:
        ells = list(range(G.n + 1))
    if args.format == "json":
        return 0, dumps({"n": G.n, "order": G.order,
                         "orbits": [{"ell": l, "count": c} for l, c in zip(ells, counts)]}) + "\n"
    if args.format == "csv":
        return 0, "ell,count\n" + "".join(f"{l},{c}\n" for l, c in zip(ells, counts))
    return 0, "".join(f"l={l}: {c}\n" for l, c in zip(ells, counts))


def cmd_molien(args) -> tuple:
    G = _group(args)
    a, b, c = molien_check(G)
    ok = a == b == c
    if args.format == "json":
        out = dumps({"n": G.n, "order": G.order, "average_per": a.to_str("t"),
                     "cycle_index": b.to_str("t"), "orbits": c.to_str("t"), "equal": ok})
    else:
        out = (f"average per(I+tX): {a.to_str('t')}\n"
               f"Z_G(1+t,...,1+t^n): {b.to_str('t')}\n"
               f"orbit series:       {c.to_str('t')}\n"
               f"{'equal' if ok else 'MISMATCH'}")
    return (0 if ok else 1), out + "\n"


def cmd_verify(args) -> tuple:
    results = run_suite(args.suite, args.seed)
    failed = [name for name, ok in results if not ok]
    if args.format == "json":
        out = dumps({"suite": args.suite, "seed": args.seed,
                     "results": [{"check": n, "ok": bool(ok)} for n, ok in results]}) + "\n"
    else:
        out = "".join(f"{'PASS' if ok else 'FAIL'} {n}\n" for n, ok in results)
    return (1 if failed else 0), out


# parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zeonperm",
                                description="Zeon powers, permanents and Johnson-scheme spectra.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=fn)
        return sp

    def st(sp):
        sp.add_argument("--s", type=int)
        sp.add_argument("--t", type=int)

    sp = add("per", cmd_per, "permanent of a matrix file")
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--shift", action="store_true", help="use sI + tX instead of X")
    st(sp)

    sp = add("zeon-power", cmd_zeon_power, "zeon power X^(l) of a matrix file")
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--shift", action="store_true", help="use sI + tX instead of X")
    st(sp)

    sp = add("johnson", cmd_johnson, "Johnson matrices and their eigenvalues")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--k", type=int)
    sp.add_argument("--alpha", type=int)

    sp = add("expand", cmd_expand, "Johnson-basis coefficients of (sI+tJ)^(l)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--ell", type=int, required=True)

    sp = add("spectrum", cmd_spectrum, "spectrum of (sI+tJ)^(l)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--charpoly", action="store_true")
    st(sp)

    sp = add("triangle", cmd_triangle, "P, D or A triangle")
    sp.add_argument("--kind", choices=("poly", "derangement", "arrangement"), default="poly")
    sp.add_argument("--n", type=int, required=True)

    sp = add("hpoly", cmd_hpoly, "exponential moment polynomial h_{n,m}")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--paper-style", action="store_true", help="omit '*' between factors")

    sp = add("subgraphs", cmd_subgraphs, "elementary subgraphs of K_n with n-l distinguished")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--list", action="store_true")

    for name, fn, help_ in (("cycle-index", cmd_cycle_index, "cycle index of a group"),
                            ("orbits", cmd_orbits, "orbits on l-subsets"),
                            ("molien", cmd_molien, "Molien-type triple check")):
        sp = add(name, fn, help_)
        sp.add_argument("--gens", required=True, help='cycle notation, e.g. "(1 2 3 4),(1 3)"')
        sp.add_argument("--n", type=int, help="number of points (default: largest point)")
        sp.add_argument("--cap", type=int, default=50000)
        if name == "orbits":
            sp.add_argument("--ell", type=int)

    sp = add("verify", cmd_verify, "run an invariant suite")
    sp.add_argument("--suite", choices=SUITES + ("all",), default="all")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, out = args.func(args)
    except (ValueError, KeyError, GroupTooLarge, OSError) as exc:
        print(f"zeonperm: error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"zeonperm: check failed: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
