"""Command-line front end.

Exit status is 0 on success, 1 when a verification suite fails and 2 for
usage or domain errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import counting, oracle, rewrite, verify
from .catalan_objects import (
    dyck_to_partition,
    dyck_to_plane,
    dyck_to_syt,
    partition_to_dyck,
    plane_to_dyck,
    syt_to_dyck,
    tr,
    tr_inverse,
)
from .exceptions import ModcatError
from .formats import (
    format_ints,
    format_perm,
    format_syt,
    format_tree,
    parse_dyck,
    parse_ints,
    parse_perm,
    parse_syt,
    parse_tree,
)
from .trees import (
    binary_to_plane,
    enumerate_plane_trees,
    from_left_depth,
    left_depth,
    plane_to_binary,
)

SCHEMA = "modcat/1"
FORMATS = ("tree", "multi-degree", "left-depth", "dyck", "partition", "syt", "perm")


class UsageError(Exception):
    pass


def _emit_json(payload):
    print(json.dumps({"schema": SCHEMA, **payload}, indent=2))


# --- table ----------------------------------------------------------------


def _table_value(which, k, n):
    if which == "C":
        return counting.c_modular(k, n)
    if which == "M":
        return counting.m_general(k, n)
    if which == "D":
        return counting.d_intersections(k, n)
    return counting.largest_class_size_formula(n, k)


def _table_rows(which, kmax, nmax):
    rows = []
    for k in range(1, kmax + 1):
        label = {"C": f"C({k},n)", "M": f"M({k},n)", "D": f"D({k},n)", "largest": f"L({k},n)"}[which]
        rows.append((label, k, [_table_value(which, k, n) for n in range(nmax + 1)]))
    if which == "C":
        rows.append(("C_n", None, [counting.catalan(n) for n in range(nmax + 1)]))
    return rows


def cmd_table(args):
    if args.kmax < 0 or args.nmax < 0:
        raise UsageError("--kmax and --nmax must be nonnegative")
    rows = _table_rows(args.which, args.kmax, args.nmax)
    columns = list(range(args.nmax + 1))
    if args.format == "json":
        _emit_json({
            "table": args.which,
            "n": columns,
            "rows": [{"label": label, "k": k, "values": values} for label, k, values in rows],
        })
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["row"] + columns)
        for label, _, values in rows:
            writer.writerow([label] + values)
        sys.stdout.write(buf.getvalue())
    else:
        cells = [["n"] + [str(c) for c in columns]]
        cells += [[label] + [str(v) for v in values] for label, _, values in rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(cells[0]))]
        for row in cells:
            print("  ".join(cell.rjust(w) if i else cell.ljust(w) for i, (cell, w) in enumerate(zip(row, widths))))
    return 0


# --- count ----------------------------------------------------------------


def _oracle_count(which, k, n):
    if which == "C":
        return len(oracle.classes_by_omega(n, k))
    if which == "M":
        return oracle.count_family("tree-avoids-comb", k + 1, n)
    return oracle.total_root_contacts(k, n)


def cmd_count(args):
    k, n, which, method = args.k, args.n, args.which, args.method
    if n < 0 or k < (0 if which == "M" else 1):
        raise UsageError("n must be >= 0 and k >= 1 (k >= 0 for M)")
    if method == "oracle":
        value = _oracle_count(which, k, n)
    elif which == "C":
        value = counting.c_modular(k, n, method)
    elif which == "M":
        value = counting.m_general(k, n, method)
    elif method == "alt":
        value = counting.d_intersections(k, n)
    elif method == "series":
        value = counting.series_d(k, n + 1)[n + 1]
    else:
        raise UsageError(f"method {method} is not available for D")
    print(value)
    return 0


# --- canon / convert -------------------------------------------------------


def _read_tree(args):
    given = [(name, getattr(args, name.replace("-", "_"))) for name in ("tree", "multi-degree", "left-depth")]
    given = [(name, value) for name, value in given if value is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --tree, --multi-degree, --left-depth")
    return _parse_as(*given[0])


def _parse_as(fmt, text):
    """Parse ``text`` in format ``fmt`` and return a binary tree."""
    if fmt == "tree":
        return parse_tree(text)
    if fmt == "multi-degree":
        return plane_to_binary(parse_ints(text))
    if fmt == "left-depth":
        return from_left_depth(parse_ints(text))
    if fmt == "dyck":
        return plane_to_binary(dyck_to_plane(parse_dyck(text)))
    if fmt == "partition":
        parts = parse_ints(text)
        return plane_to_binary(dyck_to_plane(partition_to_dyck(parts, len(parts))))
    if fmt == "syt":
        return plane_to_binary(dyck_to_plane(syt_to_dyck(parse_syt(text))))
    if fmt == "perm":
        return tr(parse_perm(text))
    raise UsageError(f"unknown format {fmt!r}")


def _render_as(fmt, t):
    if fmt == "tree":
        return format_tree(t)
    if fmt == "multi-degree":
        return format_ints(binary_to_plane(t))
    if fmt == "left-depth":
        return format_ints(left_depth(t))
    path = plane_to_dyck(binary_to_plane(t))
    if fmt == "dyck":
        return path
    if fmt == "partition":
        return format_ints(dyck_to_partition(path))
    if fmt == "syt":
        return format_syt(dyck_to_syt(path))
    if fmt == "perm":
        return format_perm(tr_inverse(t))
    raise UsageError(f"unknown format {fmt!r}")


def cmd_canon(args):
    t = _read_tree(args)
    d = binary_to_plane(t)
    canon = rewrite.canonicalize(d, args.k)
    size = rewrite.class_size(canon, args.k)
    rep = plane_to_binary(canon)
    if args.format == "json":
        _emit_json({"k": args.k, "input": format_ints(d), "canonical": format_ints(canon),
                    "tree": format_tree(rep), "class_size": size})
    else:
        print(f"canonical  {format_ints(canon)}")
        print(f"tree       {format_tree(rep)}")
        print(f"class size {size}")
    return 0


def cmd_convert(args):
    if args.source == args.target:
        # still validate the input
        _parse_as(args.source, args.value)
        print(args.value.strip())
        return 0
    print(_render_as(args.target, _parse_as(args.source, args.value)))
    return 0


# --- enumerate / components -----------------------------------------------


def cmd_enumerate(args):
    if args.n < 0:
        raise UsageError("n must be nonnegative")
    if args.filter and args.k is None:
        raise UsageError("--filter needs -k")
    keep = {
        None: lambda d: True,
        "k-minimal": lambda d: rewrite.is_k_minimal(d, args.k),
        "k-maximal": lambda d: rewrite.is_k_maximal(d, args.k),
        "k-admissible": lambda d: rewrite.is_k_admissible(d, args.k),
    }[args.filter]
    for d in enumerate_plane_trees(args.n):
        if keep(d):
            print(_render_as(args.output, plane_to_binary(d)))
    return 0


def cmd_components(args):
    if args.n < 0 or args.k < 1:
        raise UsageError("need n >= 0 and k >= 1")
    comps = rewrite.k_components(args.n, args.k, members=args.members)
    if args.format == "json":
        _emit_json({"n": args.n, "k": args.k, "count": len(comps), "components": [c.to_json() for c in comps]})
        return 0
    for c in comps:
        line = f"{format_ints(c.canonical)}  size {c.size}"
        if c.members is not None:
            line += "  members " + " ".join(format_ints(m) for m in c.members)
        print(line)
    print(f"{len(comps)} components")
    return 0


# --- verify ---------------------------------------------------------------


def cmd_verify(args):
    results = verify.run_suite(args.suite)
    ok = True
    for res in results:
        for check in res.checks:
            status = "PASS" if check.passed else "FAIL"
            print(f"{status} {res.name}: {check.name} ({check.detail})")
        for line in res.info:
            print(f"INFO {res.name}: {line}")
        ok &= res.passed
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="modcat", description="Modular Catalan numbers and k-associativity.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="print a k-by-n table of counts")
    p.add_argument("--which", choices=("C", "M", "D", "largest"), default="C")
    p.add_argument("--kmax", type=int, default=8)
    p.add_argument("--nmax", type=int, default=14)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("count", help="a single count")
    p.add_argument("--which", choices=("C", "M", "D"), default="C")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--method", choices=("msf", "alt", "series", "oracle"), default="alt")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("canon", help="k-minimal representative and class size")
    p.add_argument("--tree")
    p.add_argument("--multi-degree")
    p.add_argument("--left-depth")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("convert", help="convert between Catalan families")
    p.add_argument("--from", dest="source", choices=FORMATS, required=True)
    p.add_argument("--to", dest="target", choices=FORMATS, required=True)
    p.add_argument("value")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("enumerate", help="list all trees of a size")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int)
    p.add_argument("--filter", choices=("k-minimal", "k-maximal", "k-admissible"))
    p.add_argument("--output", choices=FORMATS, default="multi-degree")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("components", help="k-equivalence classes")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--members", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=tuple(verify.SUITES) + ("all",))
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ModcatError, ValueError, ArithmeticError) as exc:
        print(f"modcat: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
