"""Command line interface.

Three subcommands: `analyze` runs the full pipeline on one graph file,
`family` builds a parametric family member (optionally analyzing it),
and `sweep` replays a classification over a parameter range, reporting
expected-versus-computed rows. Reports are deterministic byte for byte.

Graph files are JSON objects with exactly two fields::

    {"vertices": ["x1", "x2"], "edges": [["x1", "x2"]]}

Exit codes: 0 success, 1 expectation mismatch, 2 bad input, 3 capacity.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import comb
from typing import Any

from . import graph as graphs
from .catalog import catalog_upto
from .fiber import fiber_report, power_count_check, toric_profile, unique_set_vertices
from .grading import circulant_quasi_check, is_equigenerated, quasi_witness
from .graph import Graph
from .ideal import CapacityError, cover_ideal
from .kernels import BACKEND


class InputError(ValueError):
    """Bad file, flag, or graph description."""


# ── graph files ──────────────────────────────────────────────────────────────


def load_graph(path: str) -> Graph:
    try:
        with open(path, encoding="utf-8") as fh:
            raw = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None
    return graph_from_document(doc, where=path)


def graph_from_document(doc: Any, where: str = "input") -> Graph:
    if not isinstance(doc, dict):
        raise InputError(f"{where}: top level must be an object")
    unknown = sorted(set(doc) - {"vertices", "edges"})
    if unknown:
        raise InputError(f"{where}: unknown field {unknown[0]!r}")
    if "vertices" not in doc or "edges" not in doc:
        raise InputError(f"{where}: fields 'vertices' and 'edges' are required")
    vertices = doc["vertices"]
    edges = doc["edges"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise InputError(f"{where}: 'vertices' must be a list of strings")
    if not isinstance(edges, list):
        raise InputError(f"{where}: 'edges' must be a list")
    pairs = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, str) for x in e)):
            raise InputError(f"{where}: each edge must be a pair of vertex labels")
        pairs.append((e[0], e[1]))
    try:
        return graphs.from_edge_list(vertices, pairs)
    except ValueError as exc:
        raise InputError(f"{where}: {exc}") from None


def graph_document(g: Graph) -> dict[str, Any]:
    return {
        "vertices": list(g.labels),
        "edges": [[g.labels[i], g.labels[j]] for i, j in g.edges()],
    }


# ── analyze ──────────────────────────────────────────────────────────────────


def analysis_report(g: Graph, max_toric_degree: int, powers: int) -> dict[str, Any]:
    ideal = cover_ideal(g)
    witness = quasi_witness(ideal)
    reduced = graphs.reduce(g)
    report: dict[str, Any] = {
        "graph": {
            "vertices": g.n,
            "edges": g.edge_count(),
            "independence_number": graphs.independence_number(g),
            "equivalent_pairs": [list(p) for p in graphs.equivalent_pairs(g)],
            "reduced_vertices": reduced.n,
        },
        "cover_ideal": {
            "generator_count": ideal.mu,
            "generators": ideal.generator_strings(),
        },
        "grading": {
            "equigenerated": is_equigenerated(ideal),
            "quasi_equigenerated": witness is not None,
            "weights": list(witness.weights) if witness else None,
            "common_degree": witness.degree if witness else None,
        },
    }
    checks: list[dict[str, Any]] = []
    if witness is None:
        report["fiber"] = {"status": "not quasi-equigenerated"}
    elif ideal.is_unit():
        report["fiber"] = {"status": "unit ideal"}
    else:
        fr = fiber_report(ideal)
        profile = toric_profile(ideal, max_toric_degree)
        power_rows = power_count_check(ideal, powers) if powers >= 1 else []
        report["fiber"] = {
            "generator_count": fr.generator_count,
            "analytic_spread": fr.spread,
            "excess": fr.excess,
            "square_generator_count": fr.square_generator_count,
            "quadratic_relation_count": fr.quadratic_relation_count,
            "freiman": fr.freiman,
            "linear_type": fr.linear_type,
        }
        report["toric"] = {
            "max_degree": profile.max_degree,
            "counts": {str(d): c for d, c in profile.counts},
            "representatives": [
                {"degree": rel.degree, "left": list(rel.left), "right": list(rel.right)}
                for rel in profile.representatives
            ],
        }
        report["powers"] = [
            {
                "j": row.j,
                "generator_count": row.computed,
                "freiman_closed_form": row.predicted,
                "matches_closed_form": row.matches,
            }
            for row in power_rows
        ]
        t, l = fr.generator_count, fr.spread
        checks.append(
            {
                "name": "square-count-lower-bound",
                "rule": "mu(I^2) >= l*mu - binom(l,2)",
                "expected": True,
                "computed": fr.square_generator_count >= l * t - comb(l, 2),
            }
        )
        if fr.freiman:
            checks.append(
                {
                    "name": "freiman-square-count",
                    "rule": "mu(I^2) = l*mu - binom(l,2)",
                    "expected": True,
                    "computed": fr.square_generator_count == l * t - comb(l, 2),
                }
            )
    report["unique_set_vertices"] = [
        {"vertex": v, "set": list(s)} for v, s in unique_set_vertices(g)
    ]
    if graphs.independence_number(g) == 2:
        checks.append(
            {
                "name": "independence-two-grading",
                "rule": "independence number 2 forces a weight witness",
                "expected": True,
                "computed": witness is not None,
            }
        )
    if graphs.is_tree(g):
        checks.append(
            {
                "name": "tree-grading-criterion",
                "rule": "witness exists iff every internal vertex has a leaf neighbor",
                "expected": graphs.every_internal_vertex_has_leaf(g),
                "computed": witness is not None,
            }
        )
    for chk in checks:
        chk["ok"] = chk["expected"] == chk["computed"]
    report["checks"] = checks
    return report


def render_text(report: dict[str, Any]) -> str:
    out = io.StringIO()
    g = report["graph"]
    out.write(
        f"graph: {g['vertices']} vertices, {g['edges']} edges, "
        f"independence number {g['independence_number']}, "
        f"reduced to {g['reduced_vertices']}\n"
    )
    if g["equivalent_pairs"]:
        pairs = " ".join("{" + a + "," + b + "}" for a, b in g["equivalent_pairs"])
        out.write(f"equivalent pairs: {pairs}\n")
    ci = report["cover_ideal"]
    out.write(f"cover ideal: {ci['generator_count']} generators\n")
    for mon in ci["generators"]:
        out.write(f"  {mon}\n")
    gr = report["grading"]
    out.write(
        f"grading: equigenerated={_yn(gr['equigenerated'])} "
        f"quasi-equigenerated={_yn(gr['quasi_equigenerated'])}\n"
    )
    if gr["weights"] is not None:
        out.write(
            f"  weights: ({', '.join(map(str, gr['weights']))}) "
            f"common degree {gr['common_degree']}\n"
        )
    fb = report["fiber"]
    if "status" in fb:
        out.write(f"fiber: {fb['status']}\n")
    else:
        out.write(
            f"fiber: t={fb['generator_count']} l={fb['analytic_spread']} "
            f"a={fb['excess']} mu2={fb['square_generator_count']} "
            f"b={fb['quadratic_relation_count']} "
            f"freiman={_yn(fb['freiman'])} linear-type={_yn(fb['linear_type'])}\n"
        )
        tor = report["toric"]
        counts = " ".join(f"{d}:{c}" for d, c in tor["counts"].items())
        out.write(f"toric relations up to degree {tor['max_degree']}: {counts}\n")
        for rel in tor["representatives"]:
            left = "*".join(f"T{i + 1}" for i in rel["left"])
            right = "*".join(f"T{i + 1}" for i in rel["right"])
            out.write(f"  degree {rel['degree']}: {left} - {right}\n")
        for row in report["powers"]:
            out.write(
                f"power {row['j']}: {row['generator_count']} generators "
                f"(freiman closed form {row['freiman_closed_form']})\n"
            )
    usv = report["unique_set_vertices"]
    if usv:
        shown = " ".join(
            f"{item['vertex']}->{{{','.join(item['set'])}}}" for item in usv
        )
        out.write(f"vertices in a unique maximal independent set: {shown}\n")
    if report["checks"]:
        out.write("checks:\n")
        for chk in report["checks"]:
            out.write(
                f"  {chk['name']}: expected={chk['expected']} "
                f"computed={chk['computed']} {'ok' if chk['ok'] else 'MISMATCH'}\n"
            )
    return out.getvalue()


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


# ── sweeps ───────────────────────────────────────────────────────────────────


def sweep_circulant_quasi(n_max: int) -> tuple[list[str], list[list[str]], int]:
    header = [
        "n",
        "s",
        "computed",
        "expected",
        "expected_printed_variant",
        "match",
        "bound_variants_disagree",
        "rule",
    ]
    rule = "s>=(n-2)/3 or s=(n-3)/4 (printed variant: s>=(n-1)/3 or s=(n-3)/4)"
    rows = []
    bad = 0
    for n in range(3, n_max + 1):
        for s in range(1, n // 2 + 1):
            chk = circulant_quasi_check(n, s)
            if not chk.matches_derived:
                bad += 1
            rows.append(
                [
                    str(n),
                    str(s),
                    _tf(chk.computed),
                    _tf(chk.derived_bound),
                    _tf(chk.printed_bound),
                    _tf(chk.matches_derived),
                    _tf(chk.bounds_disagree),
                    rule,
                ]
            )
    return header, rows, bad


def sweep_circulant_freiman(n_max: int) -> tuple[list[str], list[list[str]], int]:
    header = ["n", "s", "quasi", "freiman", "expected", "match", "rule"]
    rule = "s>(n-4)/2 or (n,s) in {(5,1),(7,1)}"
    rows = []
    bad = 0
    for n in range(3, n_max + 1):
        for s in range(1, n // 2 + 1):
            ideal = cover_ideal(graphs.circulant(n, s))
            witness = quasi_witness(ideal)
            if witness is None:
                rows.append([str(n), str(s), "false", "", "", "na", rule])
                continue
            fr = fiber_report(ideal)
            expected = 2 * s > n - 4 or (n, s) in ((5, 1), (7, 1))
            ok = fr.freiman == expected
            if not ok:
                bad += 1
            rows.append(
                [str(n), str(s), "true", _tf(fr.freiman), _tf(expected), _tf(ok), rule]
            )
    return header, rows, bad


def sweep_banded_path(n_max: int, s_max: int) -> tuple[list[str], list[list[str]], int]:
    header = ["n", "s", "computed", "expected", "match", "rule"]
    rule = "n<=s+1 or n=2s+2"
    rows = []
    bad = 0
    for n in range(2, n_max + 1):
        for s in range(1, s_max + 1):
            computed = is_equigenerated(cover_ideal(graphs.banded_path(n, s)))
            expected = n <= s + 1 or n == 2 * s + 2
            ok = computed == expected
            if not ok:
                bad += 1
            rows.append([str(n), str(s), _tf(computed), _tf(expected), _tf(ok), rule])
    return header, rows, bad


def sweep_two_cliques(n_max: int, m_max: int) -> tuple[list[str], list[list[str]], int]:
    header = [
        "n",
        "m",
        "t",
        "spread",
        "spread_expected",
        "b",
        "b_expected",
        "freiman",
        "freiman_expected",
        "match",
        "rule",
    ]
    rule = "l=n+m-2, b=binom(n-1,2)binom(m-1,2), freiman iff n<=3"
    rows = []
    bad = 0
    for n in range(2, n_max + 1):
        for m in range(n, m_max + 1):
            fr = fiber_report(cover_ideal(graphs.two_cliques(n, m)))
            exp_spread = n + m - 2
            exp_b = comb(n - 1, 2) * comb(m - 1, 2)
            exp_freiman = n <= 3
            ok = (
                fr.spread == exp_spread
                and fr.quadratic_relation_count == exp_b
                and fr.freiman == exp_freiman
            )
            if not ok:
                bad += 1
            rows.append(
                [
                    str(n),
                    str(m),
                    str(fr.generator_count),
                    str(fr.spread),
                    str(exp_spread),
                    str(fr.quadratic_relation_count),
                    str(exp_b),
                    _tf(fr.freiman),
                    _tf(exp_freiman),
                    _tf(ok),
                    rule,
                ]
            )
    return header, rows, bad


def _whisker_bases(max_base_vertices: int) -> list[tuple[str, Graph]]:
    return [
        (name, g)
        for name, g in catalog_upto(max_base_vertices)
        if not name.startswith("whisker-")
    ]


def sweep_whisker_spread(max_base_vertices: int) -> tuple[list[str], list[list[str]], int]:
    header = [
        "base",
        "base_vertices",
        "mu",
        "mu_expected",
        "equigenerated_in_base_degree",
        "spread",
        "spread_expected",
        "match",
        "rule",
    ]
    rule = "mu=n+1+d, equigenerated of degree n, l=n+1"
    rows = []
    bad = 0
    for name, base in _whisker_bases(max_base_vertices):
        g = graphs.whisker(base)
        ideal = cover_ideal(g)
        d = graphs.count_independent_sets(base, min_size=2)
        exp_mu = base.n + 1 + d
        degree_ok = is_equigenerated(ideal) and sum(ideal.gens[0]) == base.n
        fr = fiber_report(ideal)
        ok = ideal.mu == exp_mu and degree_ok and fr.spread == base.n + 1
        if not ok:
            bad += 1
        rows.append(
            [
                name,
                str(base.n),
                str(ideal.mu),
                str(exp_mu),
                _tf(degree_ok),
                str(fr.spread),
                str(base.n + 1),
                _tf(ok),
                rule,
            ]
        )
    return header, rows, bad


def sweep_whisker_freiman(max_base_vertices: int) -> tuple[list[str], list[list[str]], int]:
    header = ["base", "base_vertices", "freiman", "base_almost_complete", "match", "rule"]
    rule = "whiskering is freiman iff the base is almost complete"
    rows = []
    bad = 0
    for name, base in _whisker_bases(max_base_vertices):
        fr = fiber_report(cover_ideal(graphs.whisker(base)))
        expected = graphs.is_almost_complete(base)
        ok = fr.freiman == expected
        if not ok:
            bad += 1
        rows.append([name, str(base.n), _tf(fr.freiman), _tf(expected), _tf(ok), rule])
    return header, rows, bad


def sweep_trees(max_vertices: int) -> tuple[list[str], list[list[str]], int]:
    header = [
        "vertices",
        "edges",
        "quasi",
        "quasi_expected",
        "freiman",
        "freiman_expected",
        "match",
        "rule",
    ]
    rule = (
        "quasi iff every internal vertex has a leaf neighbor; "
        "freiman exactly for the 2-path, the 4-path, and the whiskered 3-path"
    )
    freiman_models = [graphs.path(2), graphs.path(4), graphs.whisker(graphs.path(3))]
    rows = []
    bad = 0
    for n in range(1, max_vertices + 1):
        for tree in graphs.free_trees(n):
            if graphs.equivalent_pairs(tree):
                continue  # only reduced trees
            edges_txt = " ".join(f"{i + 1}-{j + 1}" for i, j in tree.edges())
            ideal = cover_ideal(tree)
            witness = quasi_witness(ideal)
            quasi = witness is not None
            quasi_exp = graphs.every_internal_vertex_has_leaf(tree)
            ok = quasi == quasi_exp
            if ideal.is_unit():
                freiman_txt, freiman_exp_txt = "na", "na"
            elif not quasi:
                freiman_txt, freiman_exp_txt = "na", "na"
            else:
                fr = fiber_report(ideal)
                expected = any(graphs.is_isomorphic(tree, m) for m in freiman_models)
                freiman_txt, freiman_exp_txt = _tf(fr.freiman), _tf(expected)
                ok = ok and fr.freiman == expected
            if not ok:
                bad += 1
            rows.append(
                [
                    str(n),
                    edges_txt,
                    _tf(quasi),
                    _tf(quasi_exp),
                    freiman_txt,
                    freiman_exp_txt,
                    _tf(ok),
                    rule,
                ]
            )
    return header, rows, bad


def _tf(flag: bool) -> str:
    return "true" if flag else "false"


SWEEPS = {
    "circulant-quasi": (sweep_circulant_quasi, ("n_max",)),
    "circulant-freiman": (sweep_circulant_freiman, ("n_max",)),
    "banded-path-equigenerated": (sweep_banded_path, ("n_max", "s_max")),
    "two-cliques": (sweep_two_cliques, ("n_max", "m_max")),
    "whisker-spread": (sweep_whisker_spread, ("max_base_vertices",)),
    "whisker-freiman": (sweep_whisker_freiman, ("max_base_vertices",)),
    "trees": (sweep_trees, ("max_vertices",)),
}


# ── command plumbing ─────────────────────────────────────────────────────────


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _render_report(report: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    return render_text(report)


def _family_graph(args: argparse.Namespace) -> Graph:
    kind = args.kind
    need = {
        "circulant": ("n", "s"),
        "banded-path": ("n", "s"),
        "two-cliques": ("n", "m"),
        "h-family": ("k",),
        "whisker": ("base",),
        "join": ("g1", "g2"),
    }[kind]
    for field in need:
        if getattr(args, field.replace("-", "_"), None) is None:
            raise InputError(f"family {kind} requires --{field.replace('_', '-')}")
    try:
        if kind == "circulant":
            return graphs.circulant(args.n, args.s)
        if kind == "banded-path":
            return graphs.banded_path(args.n, args.s)
        if kind == "two-cliques":
            return graphs.two_cliques(args.n, args.m)
        if kind == "h-family":
            return graphs.h_family(args.k)
        if kind == "whisker":
            return graphs.whisker(load_graph(args.base))
        return graphs.join(load_graph(args.g1), load_graph(args.g2))
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(str(exc)) from None


def _sweep_table(args: argparse.Namespace) -> tuple[list[str], list[list[str]], int]:
    func, fields = SWEEPS[args.check]
    values = [getattr(args, f) for f in fields]
    return func(*values)


def _format_table(header: list[str], rows: list[list[str]], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue()
    widths = [
        max(len(header[c]), *(len(r[c]) for r in rows)) if rows else len(header[c])
        for c in range(len(header))
    ]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    for r in rows:
        lines.append("  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coverlab",
        description="cover ideals of graphs: grading witnesses and fiber invariants",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s 0.1.0 (kernels: {BACKEND})"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="analyze one graph file")
    p_an.add_argument("file")
    p_an.add_argument("--max-toric-degree", type=int, default=4)
    p_an.add_argument("--powers", type=int, default=2)
    p_an.add_argument("--format", choices=("text", "json"), default="text")
    p_an.add_argument("--out")

    p_fam = sub.add_parser("family", help="build a parametric family member")
    p_fam.add_argument("kind", choices=(
        "circulant", "banded-path", "two-cliques", "h-family", "whisker", "join"
    ))
    p_fam.add_argument("--n", type=int)
    p_fam.add_argument("--s", type=int)
    p_fam.add_argument("--m", type=int)
    p_fam.add_argument("--k", type=int)
    p_fam.add_argument("--base")
    p_fam.add_argument("--g1")
    p_fam.add_argument("--g2")
    p_fam.add_argument("--analyze", action="store_true")
    p_fam.add_argument("--max-toric-degree", type=int, default=4)
    p_fam.add_argument("--powers", type=int, default=2)
    p_fam.add_argument("--format", choices=("text", "json"), default="text")
    p_fam.add_argument("--out")

    p_sw = sub.add_parser("sweep", help="replay a classification over a range")
    p_sw.add_argument("check", choices=sorted(SWEEPS))
    p_sw.add_argument("--n-max", type=int, default=12)
    p_sw.add_argument("--s-max", type=int, default=6)
    p_sw.add_argument("--m-max", type=int, default=6)
    p_sw.add_argument("--max-base-vertices", type=int, default=6)
    p_sw.add_argument("--max-vertices", type=int, default=9)
    p_sw.add_argument("--format", choices=("csv", "text"), default="csv")
    p_sw.add_argument("--out")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "analyze":
            g = load_graph(args.file)
            report = analysis_report(g, args.max_toric_degree, args.powers)
            _write_output(_render_report(report, args.format), args.out)
            return 0 if all(c["ok"] for c in report["checks"]) else 1
        if args.command == "family":
            g = _family_graph(args)
            if args.analyze:
                report = analysis_report(g, args.max_toric_degree, args.powers)
                _write_output(_render_report(report, args.format), args.out)
                return 0 if all(c["ok"] for c in report["checks"]) else 1
            doc = json.dumps(graph_document(g), indent=2) + "\n"
            _write_output(doc, args.out)
            return 0
        header, rows, bad = _sweep_table(args)
        _write_output(_format_table(header, rows, args.format), args.out)
        return 0 if bad == 0 else 1
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
