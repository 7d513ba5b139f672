"""Command-line front end: ``ncg invariants | verify | export``.

Exit codes: 0 success, 1 verification failure, 2 input error (argparse uses
2 as well), 3 the detour solver's size limit was exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from .builder import noncommuting_graph
from .closed_forms import closed_forms_for
from .detour import detour_matrix
from .errors import NCGError, TooLarge
from .graph import degree, eccentricity, edge_count, graph_transmission, mean_distance, vertex_transmission
from .group import FiniteGroup, dihedral_group, read_cayley_table
from .invariants import (
    eccentric_connectivity_index,
    eccentric_connectivity_polynomial,
    total_eccentricity,
    total_eccentricity_polynomial,
)
from .polynomial import SparsePolynomial
from .harness import render_table, verify_range

FORMAT_ENV = "NCG_FORMAT"
FORMATS = ("table", "json", "csv")

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


class InputError(Exception):
    pass


def _default_format() -> str:
    fmt = os.environ.get(FORMAT_ENV, "table").lower()
    return fmt if fmt in FORMATS else "table"


def _add_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--dihedral", type=int, metavar="N", help="use the dihedral group of order 2N")
    src.add_argument("--cayley", type=Path, metavar="FILE", help="read a group from a Cayley-table file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ncg", description="Non-commuting graphs of finite groups and their invariants.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="compute graph invariants of one group")
    _add_source(p)
    p.add_argument("--format", choices=FORMATS, default=None)
    p.add_argument("--detour", action="store_true", help="also compute the detour polynomial and index")
    p.add_argument("--limit", type=int, default=None, help="override the exact detour vertex limit")

    p = sub.add_parser("verify", help="check the closed forms against computed values")
    p.add_argument("--from", dest="n_min", type=int, required=True)
    p.add_argument("--to", dest="n_max", type=int, required=True)
    p.add_argument("--detour", action="store_true")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--format", choices=FORMATS, default=None)

    p = sub.add_parser("export", help="write the graph or the closed-form report")
    _add_source(p)
    p.add_argument("--what", choices=("graph", "closed-forms"), default="graph")
    p.add_argument("--format", choices=FORMATS, default=None)
    p.add_argument("-o", "--output", type=Path, default=None)
    return parser


def _load_group(args) -> FiniteGroup:
    if args.dihedral is not None:
        return dihedral_group(args.dihedral)
    try:
        return read_cayley_table(args.cayley)
    except OSError as exc:
        raise InputError(f"cannot read {args.cayley}: {exc.strerror or exc}") from None


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _kv_table(pairs) -> str:
    width = max(len(k) for k, _ in pairs)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in pairs)


# invariants ------------------------------------------------------------------


def invariants_report(group: FiniteGroup, with_detour: bool = False, limit: int | None = None) -> dict:
    """All invariants of the group's non-commuting graph, JSON-ready."""
    g = noncommuting_graph(group)
    doc: dict = {
        "group_order": group.order,
        "vertex_count": g.order,
        "edge_count": edge_count(g),
        "vertices": [
            {
                "label": g.labels[v],
                "degree": degree(g, v),
                "eccentricity": eccentricity(g, v),
                "transmission": vertex_transmission(g, v),
            }
            for v in range(g.order)
        ],
        "ecc_conn_polynomial": str(eccentric_connectivity_polynomial(g)),
        "ecc_conn_index": eccentric_connectivity_index(g),
        "total_ecc_polynomial": str(total_eccentricity_polynomial(g)),
        "total_eccentricity": total_eccentricity(g),
        "graph_transmission": graph_transmission(g),
        "mean_distance": str(mean_distance(g)),
    }
    if with_detour:
        dm = detour_matrix(g, limit)
        poly = SparsePolynomial((d, 1) for _, _, d in dm.pairs())
        doc["detour_polynomial"] = str(poly)
        doc["detour_index"] = poly.derivative_at_one()
    return doc


def _render_invariants(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    scalars = [(k, str(v)) for k, v in doc.items() if k != "vertices"]
    if fmt == "csv":
        rows = [("key", "value")] + scalars
        rows += [(f"{field}[{row['label']}]", row[field]) for row in doc["vertices"] for field in ("degree", "eccentricity", "transmission")]
        return _csv(rows)
    out = _kv_table(scalars)
    header = ("vertex", "degree", "ecc", "transmission")
    rows = [header] + [(r["label"], str(r["degree"]), str(r["eccentricity"]), str(r["transmission"])) for r in doc["vertices"]]
    widths = [max(len(r[i]) for r in rows) for i in range(4)]
    out += "\n" + "".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in rows)
    return out


def cmd_invariants(args) -> int:
    group = _load_group(args)
    doc = invariants_report(group, args.detour, args.limit)
    sys.stdout.write(_render_invariants(doc, args.format or _default_format()))
    return EXIT_OK


# verify ----------------------------------------------------------------------


def cmd_verify(args) -> int:
    if args.n_min < 3 or args.n_max < args.n_min:
        raise InputError(f"need 3 <= --from <= --to, got {args.n_min}..{args.n_max}")
    reports = verify_range(args.n_min, args.n_max, args.detour, limit=args.limit)
    fmt = args.format or _default_format()
    if fmt == "json":
        doc = {"reports": [r.to_json() for r in reports], "overall": all(r.overall for r in reports)}
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    elif fmt == "csv":
        rows = [("n", "check", "closed_form_value", "computed_value", "pass")]
        rows += [(r.n, c.name, c.closed_form_value, c.computed_value, str(c.passed).lower()) for r in reports for c in r.checks]
        sys.stdout.write(_csv(rows))
    else:
        sys.stdout.write(render_table(reports))
        summary = ", ".join(f"n={r.n}:{'pass' if r.overall else 'FAIL'}" for r in reports)
        sys.stdout.write(f"\n{summary}\n")
    failures = [(r.n, c) for r in reports for c in r.failed()]
    for n, c in failures:
        print(
            f"n={n}: check {c.name} failed (closed form {c.closed_form_value}, computed {c.computed_value})",
            file=sys.stderr,
        )
    return EXIT_FAIL if failures else EXIT_OK


# export ----------------------------------------------------------------------


def cmd_export(args) -> int:
    if args.what == "closed-forms":
        if args.dihedral is None:
            raise InputError("closed forms exist only for dihedral groups; use --dihedral")
        doc = closed_forms_for(args.dihedral).to_json()
        fmt = args.format or os.environ.get(FORMAT_ENV, "json").lower()
        if fmt == "csv":
            text = _csv([("key", "value")] + list(doc.items()))
        elif fmt == "table":
            text = _kv_table([(k, str(v)) for k, v in doc.items()])
        else:
            text = json.dumps(doc, indent=2) + "\n"
    else:
        g = noncommuting_graph(_load_group(args))
        fmt = args.format or _default_format()
        if fmt == "json":
            text = json.dumps(g.to_json(), indent=2) + "\n"
        elif fmt == "csv":
            text = _csv([("u", "v")] + [(g.labels[u], g.labels[v]) for u, v in g.edges()])
        else:
            text = g.to_edge_list()
    if args.output is not None:
        args.output.write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


COMMANDS = {"invariants": cmd_invariants, "verify": cmd_verify, "export": cmd_export}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except TooLarge as exc:
        print(f"ncg: error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (NCGError, InputError) as exc:
        print(f"ncg: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
