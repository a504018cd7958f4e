"""Command-line interface.

Exit codes: 0 success, 2 parse/usage error, 3 oracle guard exceeded,
4 property failure (not a chain graph, isolated vertex, failed check).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import gadgets
from .chain import NotChainGraph, analyze_chain, chain_from_sizes
from .classcheck import is_chordal_bipartite_small, is_comb, is_star, is_tree_convex, verify_dpeo
from .domsets import CosecureCertificate, certify_cosecure, is_dominating
from .generators import random_chain, random_set_cover
from .graph import Bipartition, Graph, GraphError, NotBipartite, bipartition_of, complete_bipartite, components, from_edge_list, to_edge_list
from .oracle import DEFAULT_GUARD, GuardExceeded, IsolatedVertexError, format_set_cover, min_cosecure, min_dominating, parse_set_cover
from .xcheck import xcheck

EXIT_OK, EXIT_PARSE, EXIT_GUARD, EXIT_PROPERTY = 0, 2, 3, 4


class PropertyFailure(Exception):
    """A well-formed input that fails the requested property."""

    def __init__(self, message: str, payload: dict | None = None):
        super().__init__(message)
        self.payload = payload or {}


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _graph(path: str) -> Graph:
    return from_edge_list(_read(path))


def _guard(args) -> int | None:
    if args.force:
        print("warning: --force removes the exhaustive size guard", file=sys.stderr)
        return None
    return args.guard


def _ints(text: str | None) -> list[int]:
    if not text:
        return []
    return [int(t) for t in text.replace(",", " ").split()]


def _pairs(text: str) -> list[tuple[int, int]]:
    out = []
    for tok in text.replace(",", " ").split():
        u, v = tok.split("-")
        out.append((int(u), int(v)))
    return out


def _emit(args, data: dict, text: str) -> None:
    print(json.dumps(data, sort_keys=True) if args.json else text)


# -- subcommands ------------------------------------------------------------

def cmd_solve(args) -> int:
    g = _graph(args.input)
    guard = _guard(args)
    dom = min_dominating(g, guard)
    data: dict = {"n": g.n, "m": g.m, "gamma": dom.value}
    if args.witness:
        data["dominating"] = dom.to_dict()
    iso = g.isolated()
    if iso:
        data["error"] = f"isolated vertex {iso[0]}: no cosecure dominating set"
        _emit(args, data, f"gamma={dom.value}\nerror: {data['error']}")
        return EXIT_PROPERTY
    cs = min_cosecure(g, guard)
    data["gamma_cs"] = cs.value
    lines = [f"gamma={dom.value} gamma_cs={cs.value}"]
    if args.per_component:
        parts = []
        for comp in components(g):
            sub, _ = g.induced(comp)
            parts.append({"vertices": comp, "gamma": min_dominating(sub, guard).value,
                          "gamma_cs": min_cosecure(sub, guard).value})
            lines.append(f"component {comp}: gamma={parts[-1]['gamma']} gamma_cs={parts[-1]['gamma_cs']}")
        data["components"] = parts
    if args.witness:
        data["cosecure"] = cs.to_dict()
        lines.append(f"dominating witness: {list(dom.witness)}")
        lines.append(f"cosecure witness: {list(cs.witness)}")
        lines.append("replacements: " + " ".join(f"{v}->{u}" for v, u in sorted(cs.certificate.replacement.items())))
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _graph(args.input)
    S = _ints(args.set)
    dom, missing = is_dominating(g, S)
    res = certify_cosecure(g, S)
    data = {"dominating": dom, "undominated": missing, "cosecure": res.to_dict()}
    if isinstance(res, CosecureCertificate):
        text = "cosecure: yes\nreplacements: " + " ".join(f"{v}->{u}" for v, u in sorted(res.replacement.items()))
        _emit(args, data, text)
        return EXIT_OK
    text = f"dominating: {'yes' if dom else f'no (vertex {missing})'}\ncosecure: no ({res.kind}"
    text += f" at {res.vertex})" if res.vertex is not None else ")"
    _emit(args, data, text)
    return EXIT_PROPERTY


def cmd_chain(args) -> int:
    g = _graph(args.input)
    iso = g.isolated()
    if iso:
        raise PropertyFailure(f"isolated vertex {iso[0]}: no cosecure dominating set")
    reports = []
    for comp in components(g):
        sub, labels = g.induced(comp)
        try:
            rep = analyze_chain(sub).to_dict()
        except NotChainGraph as exc:
            pair = [labels[v] for v in exc.pair] if exc.pair else None
            raise PropertyFailure(f"not a chain graph: X-vertices {pair} have incomparable neighbourhoods",
                                  {"chain": False, "pair": pair}) from exc
        except NotBipartite as exc:
            cyc = [labels[v] for v in exc.cycle]
            raise PropertyFailure(f"not a chain graph: odd cycle {cyc}", {"chain": False, "odd_cycle": cyc}) from exc
        _relabel_report(rep, labels)
        reports.append(rep)
    total = sum(r["gamma_cs"] for r in reports)
    data = {"chain": True, "gamma_cs": total, "components": reports}
    lines = []
    for r in reports:
        lines.append(f"k={r['k']} gamma_cs={r['gamma_cs']}")
        lines.append(f"  X classes: {r['classes']['X']}")
        lines.append(f"  Y classes: {r['classes']['Y']}")
        lines.append(f"  witness: {r['witness']['set']}")
        lines.append(f"  trace: {' > '.join(r['trace'])}")
    if len(reports) > 1:
        lines.append(f"total gamma_cs={total}")
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def _relabel_report(rep: dict, labels: list[int]) -> None:
    for side in ("X", "Y"):
        rep["classes"][side] = [[labels[v] for v in c] for c in rep["classes"][side]]
    w = rep["witness"]
    w["set"] = [labels[v] for v in w["set"]]
    w["replacement"] = [[labels[v], labels[u]] for v, u in w["replacement"]]


def cmd_reduce(args) -> int:
    text = _read(args.input)
    if args.kind == gadgets.SET_COVER:
        base = parse_set_cover(text)
    else:
        base = from_edge_list(text)
    art = gadgets.build(args.kind, base)
    meta = art.metadata()
    edge_text = to_edge_list(art.gadget, comment=f"{args.kind} gadget, offset {art.offset}")
    if args.output:
        Path(args.output).write_text(edge_text)
    if args.meta:
        Path(args.meta).write_text(json.dumps(meta, sort_keys=True, indent=1) + "\n")
    if args.json:
        print(json.dumps({"metadata": meta, "edge_list": edge_text}, sort_keys=True))
    elif not args.output:
        sys.stdout.write(edge_text)
    else:
        print(f"{args.kind}: {art.gadget.n} vertices, {art.gadget.m} edges, offset {art.offset}")
    return EXIT_OK


def cmd_xcheck(args) -> int:
    bounds = {k: getattr(args, k) for k in ("max_n", "max_n1", "max_n2", "max_p", "max_q")}
    report = xcheck(args.kind, args.trials, args.seed, _guard(args), **bounds)
    lines = [f"{r.index}: base={r.base_opt} gadget={r.gadget_opt} offset={r.offset} "
             f"{'ok' if r.ok and r.structure_ok else 'VIOLATION'}" for r in report.rows]
    lines.append(f"{args.kind}: {len(report.rows)} instances, {len(report.violations)} violations")
    _emit(args, report.to_dict(), "\n".join(lines))
    return EXIT_OK if report.ok else EXIT_PROPERTY


def cmd_gen(args) -> int:
    rng = np.random.default_rng(args.seed)
    if args.family == "complete-bipartite":
        out = to_edge_list(complete_bipartite(args.p, args.q), comment=f"K_{{{args.p},{args.q}}}")
    elif args.family == "chain":
        if args.sizes:
            xs_t, _, ys_t = args.sizes.partition(";")
            g, _ = chain_from_sizes(_ints(xs_t), _ints(ys_t))
        else:
            g, _ = random_chain(rng, args.max_n, shuffle=args.shuffle)
        out = to_edge_list(g, comment="chain graph")
    elif args.family == "random":
        hits = np.triu(rng.random((args.n, args.n)) < args.density, k=1)
        g = Graph.from_edges(args.n, [(int(u), int(v)) for u, v in zip(*np.nonzero(hits))])
        out = to_edge_list(g, comment=f"G({args.n}, {args.density}) seed {args.seed}")
    else:
        out = format_set_cover(random_set_cover(rng, args.max_p, args.max_q))
    if args.output:
        Path(args.output).write_text(out)
    else:
        sys.stdout.write(out)
    return EXIT_OK


def cmd_check_class(args) -> int:
    g = _graph(args.input)
    meta = json.loads(Path(args.meta).read_text()) if args.meta else {}
    wit = meta.get("witness", {})
    data: dict = {}
    if args.check in ("tree-convex", "star", "comb"):
        tree = _pairs(args.tree) if args.tree else [tuple(e) for e in wit.get("tree", [])]
        if args.x_side or "x_side" in meta:
            bp = Bipartition.from_sides(g.n, _ints(args.x_side) if args.x_side else meta["x_side"])
        else:
            bp = bipartition_of(g)
        ok, bad = is_tree_convex(g, bp, tree)
        data["tree_convex"] = ok
        data["failing_y"] = bad
        if args.check == "star":
            is_s, center = is_star(tree)
            data.update(star=is_s, center=center)
            ok = ok and is_s
        elif args.check == "comb":
            backbone = _ints(args.backbone) if args.backbone else wit.get("backbone", [])
            teeth = _ints(args.teeth) if args.teeth else wit.get("teeth", [])
            data["comb"] = is_comb(tree, backbone, teeth)
            ok = ok and data["comb"]
    elif args.check == "dpeo":
        order = _ints(args.order) if args.order else wit.get("dpeo", [])
        ok, pos = verify_dpeo(g, order)
        data.update(dpeo=ok, failing_position=pos)
    else:
        ok = is_chordal_bipartite_small(g)
        data["chordal_bipartite"] = ok
    data["ok"] = ok
    _emit(args, data, " ".join(f"{k}={json.dumps(v)}" for k, v in data.items()))
    return EXIT_OK if ok else EXIT_PROPERTY


# -- wiring -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cosecure", description="Cosecure domination toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, guard=False):
        p.add_argument("--json", action="store_true", help="pure JSON output")
        if guard:
            p.add_argument("--guard", type=int, default=DEFAULT_GUARD, help="max vertices for exhaustive search")
            p.add_argument("--force", action="store_true", help="ignore the size guard")
        return p

    p = common(sub.add_parser("solve", help="exact gamma and gamma_cs"), guard=True)
    p.add_argument("input")
    p.add_argument("--witness", action="store_true")
    p.add_argument("--per-component", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = common(sub.add_parser("verify", help="certify a candidate set"))
    p.add_argument("input")
    p.add_argument("--set", required=True, help="comma-separated vertex ids")
    p.set_defaults(func=cmd_verify)

    p = common(sub.add_parser("chain", help="chain-graph analysis"))
    p.add_argument("input")
    p.set_defaults(func=cmd_chain)

    p = common(sub.add_parser("reduce", help="build a reduction gadget"))
    p.add_argument("kind", choices=gadgets.KINDS)
    p.add_argument("input", help="edge list, or set-cover file for kind set-cover")
    p.add_argument("-o", "--output", help="gadget edge-list path (default stdout)")
    p.add_argument("--meta", help="metadata JSON path")
    p.set_defaults(func=cmd_reduce)

    p = common(sub.add_parser("xcheck", help="offset equivalence over many instances"), guard=True)
    p.add_argument("kind", choices=gadgets.KINDS)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--max-n1", type=int, default=3)
    p.add_argument("--max-n2", type=int, default=3)
    p.add_argument("--max-p", type=int, default=4)
    p.add_argument("--max-q", type=int, default=4)
    p.set_defaults(func=cmd_xcheck)

    p = sub.add_parser("gen", help="generate an instance file")
    p.add_argument("family", choices=("chain", "complete-bipartite", "random", "set-cover"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--q", type=int, default=3)
    p.add_argument("--sizes", help="chain class sizes 'x1,x2,...;y1,y2,...'")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--shuffle", action="store_true")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--density", type=float, default=0.4)
    p.add_argument("--max-p", type=int, default=4)
    p.add_argument("--max-q", type=int, default=4)
    p.set_defaults(func=cmd_gen)

    p = common(sub.add_parser("check-class", help="structural class checks"))
    p.add_argument("check", choices=("tree-convex", "star", "comb", "dpeo", "chordal-bipartite"))
    p.add_argument("input")
    p.add_argument("--meta", help="reduce metadata supplying the witness")
    p.add_argument("--tree", help="tree edges 'u-v,u-v,...'")
    p.add_argument("--x-side", help="X-side vertex ids")
    p.add_argument("--backbone")
    p.add_argument("--teeth")
    p.add_argument("--order", help="elimination order")
    p.set_defaults(func=cmd_check_class)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, ValueError, OSError) as exc:
        if isinstance(exc, IsolatedVertexError):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PROPERTY
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GuardExceeded as exc:
        print(f"error: {exc} (use --force to override)", file=sys.stderr)
        return EXIT_GUARD
    except PropertyFailure as exc:
        if getattr(args, "json", False):
            print(json.dumps({"error": str(exc), **exc.payload}, sort_keys=True))
        else:
            print(str(exc))
        return EXIT_PROPERTY


if __name__ == "__main__":
    sys.exit(main())
