"""Command-line front end.

Every command reads graphs from files (graph6, one per line, or edge-list
blocks) and writes one JSON document (default) or CSV/TSV rows. Numbers are
exact: integers, or rationals rendered as "p/q".
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from fractions import Fraction

from . import coords as coords_mod
from . import engine as dot_mod
from . import iso
from .errors import GraphDotError, GraphParseError, GuardExceeded, OrderMismatch
from .formats import dump_graph6, read_graphs, write_edgelist, write_graph6
from .graph import Graph, complement, sign_matrix

SCHEMA_VERSION = 1

# library operation -> the one subcommand exposing it
OPERATIONS = {
    "sign_matrix": "sign",
    "complement": "complement",
    "parse_graph6": "convert",
    "write_graph6": "convert",
    "canonical_form": "canon",
    "is_isomorphic": "iso",
    "automorphism_count": "aut",
    "enumerate_iso_classes": "enumerate",
    "dot_exhaustive": "dot",
    "dot_bnb": "dot",
    "dot_cross_order": "dot",
    "dot_star": "dot",
    "dot_clique_split": "dot",
    "dot_bounded_order": "dot",
    "phase": "phase",
    "norm": "norm",
    "norm_dot": "norm-dot",
    "metric": "metric",
    "is_orthogonal": "ortho",
    "quasi_orthogonality_scan": "quasi-ortho",
    "contains_induced": "induced",
    "count_induced": "induced",
    "coordinates": "coords",
    "verify_basis": "basis-verify",
    "greedy_basis": "basis-verify",
    "cluster": "cluster",
    "subgraph_census_coords": "census",
    "similarity_rank": "rank",
}

EPILOG = """\
output:
  JSON documents carry "schema_version". CSV/TSV output has one row per
  record; columns are the record's keys in sorted order and list-valued
  cells hold compact JSON. Record layouts:
    dot/phase/metric/norm-dot: value, phase, witness, solver (+ d / norm_dot)
    coords: graph6, basis_ids, entries
    cluster: members, size, graph6
    rank: index, graph6, norm_dot
    census: graph6, counts
exit codes: 0 ok, 2 parse error, 3 guard refusal, 4 order mismatch, 1 other.
"""


def _exact(x):
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x


def _load(args) -> list[Graph]:
    graphs = []
    for path in args.inputs:
        try:
            graphs += read_graphs(path, args.format)
        except OSError as exc:
            raise GraphParseError(f"cannot read {path}: {exc.strerror}") from None
    return graphs


def _need(graphs: list[Graph], count: int, command: str) -> list[Graph]:
    if len(graphs) != count:
        raise GraphParseError(f"{command} needs exactly {count} graphs, got {len(graphs)}")
    return graphs


def _pair(args):
    return _need(_load(args), 2, args.command)


def _dot_record(res: dot_mod.DotResult) -> dict:
    return {"value": res.value, "phase": res.phase, "witness": list(res.witness), "solver": res.solver}


def _run_dot(g: Graph, h: Graph, args) -> dot_mod.DotResult:
    if g.n == h.n and args.solver == "bnb":
        return dot_mod.dot_bnb(g, h, args.guard)
    if g.n != h.n and args.solver == "bnb":
        big, small = (g, h) if g.n > h.n else (h, g)
        return dot_mod.dot_cross_order(big, small, args.guard)
    return dot_mod.dot(g, h, args.solver)


def _basis(args) -> coords_mod.Basis:
    if args.basis:
        return coords_mod.Basis(read_graphs(args.basis, args.format))
    if args.catalog_basis:
        return coords_mod.Basis(iso.enumerate_iso_classes(args.catalog_basis))
    raise GraphParseError("a basis is required: --basis FILE or --catalog-basis K")


def cmd_dot(args):
    g, h = _pair(args)
    return _dot_record(_run_dot(g, h, args))


def cmd_phase(args):
    g, h = _pair(args)
    return {"phase": _run_dot(g, h, args).phase}


def cmd_norm(args):
    return [{"graph6": write_graph6(g), "squared_norm": dot_mod.squared_norm(g)} for g in _load(args)]


def cmd_norm_dot(args):
    g, h = _pair(args)
    if g.n != h.n:
        raise OrderMismatch(f"norm-dot needs equal orders, got {g.n} and {h.n}")
    if g.n < 2:
        raise GuardExceeded("norm-dot order", g.n, 2, "the norm is zero below two vertices")
    res = _run_dot(g, h, args)
    return {"value": res.value, "norm_dot": _exact(Fraction(res.value, dot_mod.squared_norm(g)))}


def cmd_metric(args):
    g, h = _pair(args)
    if g.n != h.n:
        raise OrderMismatch(f"metric needs equal orders, got {g.n} and {h.n}")
    res = _run_dot(g, h, args)
    return {"d": 2 * dot_mod.squared_norm(g) - 2 * res.value}


def cmd_ortho(args):
    g, h = _pair(args)
    if g.n != h.n:
        raise OrderMismatch(f"ortho needs equal orders, got {g.n} and {h.n}")
    res = _run_dot(g, h, args)
    res_c = _run_dot(g, complement(h), args)
    return {
        "orthogonal": res.value == 0 and res_c.value == 0,
        "phase": res.phase,
        "dot": res.value,
        "dot_complement": res_c.value,
    }


def cmd_quasi_ortho(args):
    rep = dot_mod.quasi_orthogonality_scan(args.order, allow_n7=args.allow_n7)
    reps = iso.enumerate_iso_classes(args.order)
    pairs = lambda ps: [[write_graph6(reps[i]), write_graph6(reps[j])] for i, j in ps]
    return {
        "order": rep.n,
        "minimum": rep.minimum,
        "minimizers": pairs(rep.minimizers),
        "orthogonal": pairs(rep.orthogonal),
    }


def cmd_induced(args):
    g, h = _pair(args)
    if h.n > g.n:
        g, h = h, g
    res = _run_dot(g, h, args) if h.n < g.n else dot_mod.dot(g, h, args.solver)
    contained = res.value == dot_mod.squared_norm(h)
    count = res.phase // iso.automorphism_count(h) if contained else 0
    return {"contains": contained, "count": count, "value": res.value, "phase": res.phase}


def cmd_coords(args):
    basis = _basis(args)
    out = []
    for g in _load(args):
        c = coords_mod.coordinates(g, basis, args.solver)
        out.append({"graph6": write_graph6(g), **c.to_json()})
    return out


def cmd_basis_verify(args):
    universe = iso.enumerate_iso_classes(args.order)
    use_phase = not args.values_only
    if args.greedy:
        candidates = []
        for k in args.candidate_orders or [args.order]:
            candidates += list(iso.enumerate_iso_classes(k))
        _, report = coords_mod.greedy_basis(universe, candidates, use_phase)
    else:
        report = coords_mod.verify_basis(universe, _basis(args), use_phase, allow_n7=args.allow_n7)
    return report.to_json()


def cmd_cluster(args):
    graphs = _load(args)
    part = coords_mod.cluster(graphs, _basis(args), not args.values_only)
    return {"groups": part.to_json(graphs)}


def cmd_census(args):
    if args.universe:
        return coords_mod.census_report(iso.enumerate_iso_classes(args.universe), args.k)
    return [
        {"graph6": write_graph6(g), "counts": coords_mod.subgraph_census_coords(g, args.k)} for g in _load(args)
    ]


def cmd_rank(args):
    graphs = _load(args)
    if not graphs:
        raise GraphParseError("rank needs a query graph")
    query, corpus = graphs[0], graphs[1:]
    return [
        {"index": i, "graph6": write_graph6(corpus[i]), "norm_dot": _exact(score)}
        for i, score in coords_mod.similarity_rank(query, corpus)
    ]


def cmd_enumerate(args):
    reps = iso.enumerate_iso_classes(args.order)
    return {"order": args.order, "count": len(reps), "graphs": [write_graph6(g) for g in reps]}


def cmd_sign(args):
    out = []
    for g in _load(args):
        m = sign_matrix(g, Fraction(args.r))
        out.append({"graph6": write_graph6(g), "r": _exact(m.r), "entries": [[_exact(x) for x in row] for row in m.entries]})
    return out


def cmd_complement(args):
    return [{"graph6": write_graph6(g), "complement": write_graph6(complement(g))} for g in _load(args)]


def cmd_canon(args):
    out = []
    for g in _load(args):
        out.append({"graph6": write_graph6(g), "canonical": write_graph6(iso.canonical_form(g)), "labeling": iso.canonical_labeling(g)})
    return out


def cmd_iso(args):
    g, h = _pair(args)
    return {"isomorphic": iso.is_isomorphic(g, h)}


def cmd_aut(args):
    return [{"graph6": write_graph6(g), "automorphisms": iso.automorphism_count(g)} for g in _load(args)]


def cmd_convert(args):
    graphs = _load(args)
    if args.to == "graph6":
        return dump_graph6(graphs)
    return "\n".join(write_edgelist(g) for g in graphs)


def cmd_corpus(args):
    rng = random.Random(args.seed)
    out = []
    for g in _load(args):
        for _ in range(args.copies):
            mapping = list(range(g.n))
            rng.shuffle(mapping)
            out.append(g.relabel(mapping))
    rng.shuffle(out)
    return dump_graph6(out)


COMMANDS = {
    "dot": (cmd_dot, "dot product G.H (cross-order when orders differ)"),
    "phase": (cmd_phase, "number of optimal permutations / maps"),
    "norm": (cmd_norm, "squared norm G.G of each input"),
    "norm-dot": (cmd_norm_dot, "exact normalized dot product"),
    "metric": (cmd_metric, "distance d(G, H)"),
    "ortho": (cmd_ortho, "orthogonality test"),
    "quasi-ortho": (cmd_quasi_ortho, "scan all class pairs for the smallest |G.H|"),
    "induced": (cmd_induced, "induced containment and copy count of the smaller graph"),
    "coords": (cmd_coords, "coordinates against a basis"),
    "basis-verify": (cmd_basis_verify, "check a basis over all classes of an order"),
    "cluster": (cmd_cluster, "group inputs by identical coordinates"),
    "census": (cmd_census, "induced k-vertex subgraph census"),
    "rank": (cmd_rank, "rank inputs 2.. by normalized dot with input 1"),
    "enumerate": (cmd_enumerate, "one representative per isomorphism class"),
    "sign": (cmd_sign, "signed matrix r*A_G"),
    "complement": (cmd_complement, "complement graph"),
    "canon": (cmd_canon, "canonical form"),
    "iso": (cmd_iso, "isomorphism test"),
    "aut": (cmd_aut, "automorphism group order"),
    "convert": (cmd_convert, "convert between graph6 and edge lists"),
    "corpus": (cmd_corpus, "random relabelings of the inputs (seeded)"),
}

# commands whose result is plain text rather than a JSON document
_TEXT_COMMANDS = {"convert", "corpus"}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["auto", "graph6", "edgelist"], default="auto", help="input format")
    common.add_argument("--output", choices=["json", "csv", "tsv"], default="json")
    common.add_argument("--solver", choices=["auto", "exhaustive", "bnb", "special"], default="auto")
    common.add_argument("--guard", type=int, default=dot_mod.BNB_GUARD, help="branch-and-bound order bound")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(
        prog="graphdot", description=__doc__, epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text, epilog=EPILOG,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
        if name not in ("enumerate", "quasi-ortho"):
            p.add_argument("inputs", nargs="*" if name in ("cluster", "census", "basis-verify") else "+")
        if name in ("coords", "cluster", "basis-verify"):
            p.add_argument("--basis", help="file of basis graphs")
            p.add_argument("--catalog-basis", type=int, metavar="K", help="use every K-vertex class as the basis")
        if name in ("cluster", "basis-verify"):
            p.add_argument("--values-only", action="store_true", help="ignore phases when comparing coordinates")
        if name in ("enumerate", "quasi-ortho", "basis-verify"):
            p.add_argument("--order", type=int, required=True)
        if name in ("quasi-ortho", "basis-verify"):
            p.add_argument("--allow-n7", action="store_true")
        if name == "basis-verify":
            p.add_argument("--greedy", action="store_true", help="search a small basis by forward selection")
            p.add_argument("--candidate-orders", type=int, nargs="+", metavar="K")
        if name == "census":
            p.add_argument("-k", type=int, required=True)
            p.add_argument("--universe", type=int, metavar="N", help="census every N-vertex class instead of inputs")
        if name == "sign":
            p.add_argument("-r", default="1", help="weight (integer, decimal or p/q)")
        if name == "convert":
            p.add_argument("--to", choices=["graph6", "edgelist"], default="graph6")
        if name == "corpus":
            p.add_argument("--copies", type=int, default=10)
    return parser


def emit_report(result, output: str = "json") -> str:
    """Serialize a command result deterministically."""
    if isinstance(result, str):
        return result
    if output == "json":
        doc = {"schema_version": SCHEMA_VERSION}
        if isinstance(result, dict):
            doc.update(result)
        else:
            doc["results"] = result
        return json.dumps(doc, sort_keys=True) + "\n"
    records = result if isinstance(result, list) else [result]
    if isinstance(result, dict) and len(result) == 1 and isinstance(next(iter(result.values())), list):
        records = next(iter(result.values()))
    buf = io.StringIO()
    columns = sorted({key for rec in records for key in rec})
    writer = csv.writer(buf, delimiter="," if output == "csv" else "\t", lineterminator="\n")
    writer.writerow(columns)
    for rec in records:
        writer.writerow([_cell(rec.get(c, "")) for c in columns])
    return buf.getvalue()


def _cell(value):
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    if isinstance(value, bool):
        return "true" if value else "false"
    return value


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if args.guard > dot_mod.BNB_HARD_LIMIT:
        args.guard = dot_mod.BNB_HARD_LIMIT
    handler = COMMANDS[args.command][0]
    try:
        result = handler(args)
    except GraphDotError as exc:
        out.write(json.dumps({"schema_version": SCHEMA_VERSION, "error": {"kind": exc.kind, "message": str(exc)}}, sort_keys=True) + "\n")
        return exc.exit_code
    except ValueError as exc:
        out.write(json.dumps({"schema_version": SCHEMA_VERSION, "error": {"kind": "value", "message": str(exc)}}, sort_keys=True) + "\n")
        return 1
    out.write(emit_report(result, args.output))
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
