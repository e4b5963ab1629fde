"""Command-line interface.

Exit codes: 0 ok, 1 verification violation, 2 input error, 3 guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import certificates as cert
from .chordality import ProofObligationError, is_weakly_chordal
from .graph import GraphError, GuardExceeded, MAX_VERTICES, as_mask, big_height, builtin, iter_bits, BUILTINS
from .graphio import format_edge_list, parse_graph6, read_edge_list
from .hochster import TABLE_GUARD, BettiTable, betti_entry, betti_table
from .homology import FieldSpec, HomologyError

log = logging.getLogger("wcbetti")

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load_graph(args):
    max_n = max(MAX_VERTICES, args.max_n or 0)
    if args.edges:
        try:
            return read_edge_list(args.edges, max_n=max_n)
        except OSError as exc:
            raise InputError(str(exc)) from exc
    if args.g6:
        return parse_graph6(args.g6, max_n=max_n)
    return builtin(args.builtin)


def _fields(args) -> list[FieldSpec]:
    specs = args.field or ["q"]
    out = []
    for s in specs:
        f = FieldSpec.parse(s)
        if f not in out:
            out.append(f)
    return out


def _guard(args) -> int:
    if args.max_n is not None:
        log.info("guard override: max-n = %d (default %d)", args.max_n, TABLE_GUARD)
        return args.max_n
    return TABLE_GUARD


def table_record(t: BettiTable) -> dict:
    return {
        "n": t.n,
        "field": str(t.field),
        "betti": [{"i": i, "sigma": s, "dim": d} for i, s, d in t.records()],
        "graded": [{"i": i, "j": j, "dim": d} for (i, j), d in t.graded.items()],
        "pdim": t.pdim,
        "reg": t.reg,
    }


def _betti_diagram(t: BettiTable) -> list[str]:
    # rows j - i, columns i, as in the usual graded Betti diagram
    g = t.graded
    cols = range(0, t.pdim + 1)
    rows = range(0, t.reg + 1)
    width = max([len(str(d)) for d in g.values()] + [2]) + 1
    lines = ["      " + "".join(f"{i:>{width}}" for i in cols)]
    for k in rows:
        cells = []
        for i in cols:
            d = 1 if (i, k) == (0, 0) else g.get((i, i + k), 0)
            cells.append(f"{d if d else '.':>{width}}")
        lines.append(f"{k:>4}: " + "".join(cells))
    return lines


def cmd_betti(args, out) -> int:
    G = _load_graph(args)
    guard = _guard(args)
    for f in _fields(args):
        t = betti_table(G, f, max_n=guard)
        if args.format == "json":
            print(json.dumps(table_record(t)), file=out)
            continue
        print(f"field {f}  n={t.n}", file=out)
        for i, s, d in t.records():
            print(f"  beta_{i},{{{','.join(map(str, s))}}} = {d}", file=out)
        print("graded Betti diagram (row j-i, column i):", file=out)
        for line in _betti_diagram(t):
            print(line, file=out)
        print(f"pdim {t.pdim}  reg {t.reg}", file=out)
    return EXIT_OK


def invariants_record(G, fields, guard) -> dict:
    wc = is_weakly_chordal(G, max_n=max(guard, 16))
    has_edges = G.edge_count > 0
    rec = {
        "n": G.n,
        "edges": G.edge_count,
        "weakly_chordal": wc,
        "imn": cert.induced_matching_number(G) if has_edges else None,
        "d": cert.d_invariant(G, max_n=guard)[0] if has_edges else None,
        "big_height": big_height(G) if has_edges else None,
        "fields": {},
    }
    for f in fields:
        t = betti_table(G, f, max_n=guard)
        rec["fields"][str(f)] = {"pdim": t.pdim, "reg": t.reg}
    if wc and has_edges:
        rec["identities_hold"] = all(v["reg"] == rec["imn"] and v["pdim"] == rec["d"]
                                     for v in rec["fields"].values())
    else:
        rec["identities_hold"] = None
    return rec


def cmd_invariants(args, out) -> int:
    G = _load_graph(args)
    guard = _guard(args)
    rec = invariants_record(G, _fields(args), guard)
    if args.format == "json":
        print(json.dumps(rec), file=out)
    else:
        for key in ("n", "edges", "weakly_chordal", "imn", "d", "big_height"):
            print(f"{key:15} {rec[key]}", file=out)
        for f, v in rec["fields"].items():
            print(f"{'pdim/reg ' + f:15} {v['pdim']} {v['reg']}", file=out)
        if rec["identities_hold"] is None:
            print("reg = imn, pdim = d: not asserted (graph not weakly chordal or edgeless)", file=out)
        else:
            print(f"reg = imn, pdim = d: {'hold' if rec['identities_hold'] else 'FAIL'}", file=out)
    if rec["identities_hold"] is False:
        return EXIT_VIOLATION
    return EXIT_OK


def _parse_sigma(G, text):
    if text is None:
        return G.full_mask
    try:
        vs = [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise InputError(f"cannot parse sigma {text!r}; expected e.g. 1,2,3") from None
    mask = as_mask(G, vs)
    if not mask:
        raise InputError("sigma must be nonempty")
    return mask


def cmd_certificate(args, out) -> int:
    G = _load_graph(args)
    guard = _guard(args)
    if args.r is None or args.r < 1:
        raise InputError("--r must be given and at least 1")
    mask = _parse_sigma(G, args.sigma)
    r, size = args.r, mask.bit_count()
    wc = is_weakly_chordal(G, max_n=max(guard, 16))
    fam = cert.family_exists(G, mask, r, max_size=guard)
    rec = {
        "sigma": list(iter_bits(mask)),
        "r": r,
        "weakly_chordal": wc,
        "family": fam.to_dict() if fam else None,
        "fields": {},
    }
    status = EXIT_OK
    notes = []
    for f in _fields(args):
        beta = betti_entry(G, mask, size - r, f) if size >= r else 0
        entry = {"i": size - r, "beta": beta, "extracted": None}
        if fam is not None and not beta:
            notes.append(f"sufficiency violated over {f}: family exists but beta = 0")
            status = EXIT_VIOLATION
        if beta and wc:
            entry["extracted"] = cert.extract_certificate(G, mask, r, f).to_dict()
            if fam is None:
                notes.append(f"equivalence violated over {f}: beta != 0 on a weakly chordal graph but no family")
                status = EXIT_VIOLATION
        elif beta and fam is None:
            notes.append("hypothesis not met: graph not weakly chordal")
        rec["fields"][str(f)] = entry
    rec["notes"] = sorted(set(notes), key=notes.index)
    if args.format == "json":
        print(json.dumps(rec), file=out)
    else:
        print(f"sigma {rec['sigma']}  r {r}  weakly chordal {wc}", file=out)
        print(f"family: {_family_text(fam)}", file=out)
        for f, e in rec["fields"].items():
            print(f"{f}: beta_{e['i']},sigma = {e['beta']}", file=out)
            if e["extracted"]:
                print(f"  extracted: {_family_text(e['extracted'])}", file=out)
        for note in rec["notes"]:
            print(note, file=out)
    return status


def _family_text(fam) -> str:
    if fam is None:
        return "none"
    d = fam if isinstance(fam, dict) else fam.to_dict()
    return "; ".join(f"{b['X']}|{b['Y']} rep {tuple(b['rep'])}" for b in d["blocks"])


def cmd_verify(args, out) -> int:
    G = _load_graph(args)
    guard = _guard(args)
    fields = _fields(args)
    reports = [cert.verify_equivalence(G, f, max_n=guard) for f in fields]
    tables = [betti_table(G, f, max_n=guard) for f in fields]
    identical = len({tuple(t.entries.items()) for t in tables}) <= 1
    rec = {
        "weakly_chordal": reports[0].weakly_chordal,
        "tables_identical": identical,
        "fields": {
            str(rp.field): {
                "cells": rp.cells,
                "sufficiency_violations": [{"sigma": list(s), "r": r} for s, r in rp.sufficiency_violations],
                "necessity_violations": [{"sigma": list(s), "r": r} for s, r in rp.necessity_violations],
                "ok": rp.ok,
            }
            for rp in reports
        },
    }
    ok = all(rp.ok for rp in reports)
    if args.format == "json":
        print(json.dumps(rec), file=out)
    else:
        print(f"weakly chordal {rec['weakly_chordal']}  tables identical across fields {identical}", file=out)
        for f, v in rec["fields"].items():
            print(f"{f}: {v['cells']} cells, {len(v['sufficiency_violations'])} sufficiency violations, "
                  f"{len(v['necessity_violations'])} necessity violations", file=out)
            for kind in ("sufficiency_violations", "necessity_violations"):
                for x in v[kind]:
                    print(f"  {kind.split('_')[0]}: sigma={x['sigma']} r={x['r']}", file=out)
        if rec["fields"] and not rec["weakly_chordal"]:
            print("necessity is only asserted for weakly chordal graphs", file=out)
        print("OK" if ok else "VIOLATIONS", file=out)
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_show(args, out) -> int:
    out.write(format_edge_list(_load_graph(args)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--edges", metavar="PATH", help="edge-list file ('n <count>' then 'u v' lines)")
    src.add_argument("--g6", metavar="STR", help="graph6 string")
    src.add_argument("--builtin", metavar="NAME", help=f"one of {', '.join(BUILTINS)}")
    common.add_argument("--field", action="append", metavar="{q|fp:P}",
                        help="coefficient field, repeatable (default q)")
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--max-n", type=int, metavar="N", help=f"override the size guard (default {TABLE_GUARD})")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="wcbetti", description="Betti numbers of edge ideals and their certificates")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("betti", parents=[common], help="multigraded Betti table, pdim and reg")
    sub.add_parser("invariants", parents=[common], help="weak chordality, imn, d, big-height, pdim, reg")
    c = sub.add_parser("certificate", parents=[common], help="strongly disjoint family for (sigma, r)")
    c.add_argument("--sigma", metavar="LIST", help="comma-separated vertices (default: all)")
    c.add_argument("--r", type=int, metavar="K")
    sub.add_parser("verify", parents=[common], help="Betti nonvanishing vs family existence sweep")
    sub.add_parser("show", parents=[common], help="print the graph as canonical edge-list text")
    return p


COMMANDS = {
    "betti": cmd_betti,
    "invariants": cmd_invariants,
    "certificate": cmd_certificate,
    "verify": cmd_verify,
    "show": cmd_show,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args, out)
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except ProofObligationError as exc:
        print(f"proof obligation failed (this is a bug or a counterexample): {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (InputError, GraphError, HomologyError, cert.CertificateError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
