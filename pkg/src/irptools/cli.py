"""Command-line front end.

Reads a graph or clutter from JSON (canonical) or a plain edge list, runs
one operation, and emits a machine-readable JSON report.  Exit codes:
0 = property holds / computation succeeded, 1 = property fails (with a
certificate in the report), 2 = input or budget error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
import time
from fractions import Fraction

from . import __version__
from .canonical import (
    a_invariant_direct,
    a_invariant_formula,
    antiblocker_check,
    canonical_generators,
    canonical_presentation,
    is_gorenstein,
    perfect_presentation,
)
from .clutters import Clutter, Graph, graph_predicates, incidence_matrix
from .errors import BudgetExceededError, InputError
from .graph_algebra import (
    edge_cone_generators,
    equivalence_suite,
    extended_rees_generators,
    tdi_check,
)
from .polyhedra import cone_gens, hilbert_basis, polytope_vertices
from .rounding import (
    GEQ,
    LEQ,
    WitnessCertificate,
    closure_cone,
    ehrhart_equality,
    irp_geq,
    irp_leq,
    irp_witness_search,
    rees_cone,
)

BUDGET_ENV = "IRPTOOLS_BUDGET"


class _Document:
    """Parsed input: kind, labels, and label edges, plus the built object."""

    def __init__(self, kind: str, labels: list[str], edges: list[list[str]]):
        self.kind = kind
        self.labels = labels
        self.edges = edges
        index = {lab: i for i, lab in enumerate(labels)}
        if len(index) != len(labels):
            raise InputError("bad-labels", "vertex labels must be unique")
        idx_edges = []
        for e in edges:
            if not isinstance(e, (list, tuple)) or not e:
                raise InputError("bad-edge", f"edge {e!r} is not a non-empty list")
            for lab in e:
                if lab not in index:
                    raise InputError("bad-edge", f"edge references unknown vertex {lab!r}")
            idx_edges.append(tuple(index[lab] for lab in e))
        if kind == "graph":
            for e in idx_edges:
                if len(e) != 2:
                    raise InputError("bad-edge", "graph edges must have two endpoints")
            self.graph: Graph | None = Graph.from_edges(
                len(labels), idx_edges, tuple(labels)
            )
            self.clutter = None
        elif kind == "clutter":
            self.graph = None
            self.clutter = Clutter.from_edge_lists(
                len(labels), idx_edges, tuple(labels)
            )
        else:
            raise InputError("bad-kind", f"kind must be graph or clutter, got {kind!r}")

    def digest(self) -> str:
        canonical = json.dumps(
            {"kind": self.kind, "vertices": self.labels, "edges": self.edges},
            sort_keys=True,
            separators=(",", ":"),
        )
        return hashlib.sha256(canonical.encode()).hexdigest()

    def require_graph(self) -> Graph:
        if self.graph is None:
            raise InputError("needs-graph", "this command needs a graph input")
        return self.graph

    def as_clutter(self) -> Clutter:
        """The clutter itself, or a graph's edge clutter."""
        if self.clutter is not None:
            return self.clutter
        return self.require_graph().edge_clutter()


def _parse_document(text: str) -> _Document:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError("bad-json", f"malformed JSON: {exc}") from exc
        for key in ("kind", "vertices", "edges"):
            if key not in data:
                raise InputError("bad-json", f"missing field {key!r}")
        return _Document(
            str(data["kind"]),
            [str(v) for v in data["vertices"]],
            [[str(v) for v in e] for e in data["edges"]],
        )
    # plain edge list: one "u v" pair per line, '#' comments
    labels: list[str] = []
    edges: list[list[str]] = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError("bad-edge-list", f"expected 'u v', got {line!r}")
        for p in parts:
            if p not in labels:
                labels.append(p)
        edges.append(parts)
    if not edges:
        raise InputError("bad-edge-list", "no edges found")
    return _Document("graph", labels, edges)


def load_document(path: str) -> _Document:
    if path == "-":
        return _parse_document(sys.stdin.read())
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return _parse_document(fh.read())
    except OSError as exc:
        raise InputError("bad-file", f"cannot read {path}: {exc}") from exc


def render(value):
    """JSON-ready form: exact rationals as 'p/q' strings, vectors as arrays."""
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (list, tuple)):
        return [render(v) for v in value]
    if isinstance(value, dict):
        return {k: render(v) for k, v in value.items()}
    return value


def _require_normal(clutter: Clutter):
    verdict = irp_leq(clutter)
    if not verdict.holds:
        raise InputError(
            "not-normal",
            "the rounding property fails for this system, so the canonical "
            "module description does not apply",
        )


def _witness_payload(w: WitnessCertificate) -> dict:
    return {
        "direction": w.direction,
        "alpha": list(w.alpha),
        "lp_value": render(w.lp_value),
        "rounded": w.rounded,
        "ilp_value": w.ilp_value,
    }


def _cone_for(doc: _Document, kind: str):
    if kind == "closure":
        return closure_cone(doc.as_clutter())
    if kind == "edge":
        clutter = doc.as_clutter()
        return cone_gens([v + (1,) for v in clutter.columns()], clutter.n + 1)
    if kind == "rees":
        return rees_cone(doc.as_clutter())
    if kind == "extrees":
        return extended_rees_generators(doc.require_graph())
    raise InputError("bad-parameter", f"unknown cone kind {kind!r}")


def _run_command(args, doc: _Document, budget: int | None):
    """Returns (verdicts, certificates, parameters, exit_code)."""
    if args.command == "irp-leq":
        verdict = irp_leq(doc.as_clutter())
        cert = {} if verdict.holds else {"normality_witness": list(verdict.certificate)}
        return {"holds": verdict.holds, "method": verdict.method}, cert, {}, 0 if verdict.holds else 1

    if args.command == "irp-geq":
        verdict = irp_geq(doc.as_clutter())
        cert = {} if verdict.holds else {"normality_witness": list(verdict.certificate)}
        return {"holds": verdict.holds, "method": verdict.method}, cert, {}, 0 if verdict.holds else 1

    if args.command == "irp-witness":
        direction = LEQ if args.direction == "leq" else GEQ
        a = incidence_matrix(doc.as_clutter())
        witness = irp_witness_search(a, direction, args.window, budget=budget)
        params = {"direction": args.direction, "window": args.window}
        if witness is None:
            return {"found": False}, {}, params, 0
        return {"found": True}, {"witness": _witness_payload(witness)}, params, 1

    if args.command == "ehrhart-eq":
        rep = ehrhart_equality(doc.as_clutter(), args.bmax, budget=budget)
        params = {"bmax": args.bmax}
        if rep.equal_up_to_b:
            return {"equal_up_to_b": True}, {}, params, 0
        cert = {"failing_b": rep.failing_b, "failing_point": list(rep.failing_point)}
        return {"equal_up_to_b": False}, cert, params, 1

    if args.command == "vertices":
        vs = polytope_vertices(incidence_matrix(doc.as_clutter()), budget=budget)
        verdicts = {
            "count": len(vs.vertices),
            "contains_origin": vs.contains_origin,
        }
        return verdicts, {"vertices": render(vs.vertices)}, {}, 0

    if args.command == "hilbert-basis":
        cone = _cone_for(doc, args.cone)
        basis = hilbert_basis(cone)
        verdicts = {"count": len(basis.elements)}
        cert = {
            "elements": [list(e) for e in basis.elements],
            "generators": [list(g) for g in cone.generators],
        }
        return verdicts, cert, {"cone": args.cone}, 0

    if args.command == "canonical":
        clutter = doc.as_clutter()
        _require_normal(clutter)
        vs = polytope_vertices(incidence_matrix(clutter), budget=budget)
        pres = canonical_presentation(vs)
        gens = canonical_generators(pres, closure_cone(clutter), b_max=args.bmax)
        verdicts = {
            "num_generators": len(gens.generators),
            "complete": gens.complete,
            "complete_up_to": gens.complete_up_to,
        }
        cert = {
            "generators": [
                {"a": list(a), "b": b} for a, b in gens.generators
            ]
        }
        return verdicts, cert, {"bmax": args.bmax}, 0

    if args.command == "a-invariant":
        params = {"method": args.method}
        if args.method == "perfect":
            rep = perfect_presentation(doc.require_graph())
            return {"a_invariant": rep.a_invariant}, {}, params, 0
        clutter = doc.as_clutter()
        _require_normal(clutter)
        vs = polytope_vertices(incidence_matrix(clutter), budget=budget)
        if args.method == "formula":
            value = a_invariant_formula(vs)
        else:
            pres = canonical_presentation(vs)
            value = a_invariant_direct(pres, closure_cone(clutter))
        return {"a_invariant": value}, {}, params, 0

    if args.command == "gorenstein":
        clutter = doc.as_clutter()
        _require_normal(clutter)
        vs = polytope_vertices(incidence_matrix(clutter), budget=budget)
        pres = canonical_presentation(vs)
        gens = canonical_generators(pres, closure_cone(clutter))
        verdict = is_gorenstein(gens)
        verdicts = {
            "gorenstein": verdict.gorenstein,
            "qualified": verdict.qualified,
            "num_generators": verdict.num_generators,
        }
        return verdicts, {}, {}, 0 if verdict.gorenstein else 1

    if args.command == "antiblocker":
        clutter = doc.as_clutter()
        _require_normal(clutter)
        vs = polytope_vertices(incidence_matrix(clutter), budget=budget)
        ok = antiblocker_check(clutter, vs, budget=budget)
        return {"holds": ok}, {}, {}, 0 if ok else 1

    if args.command == "equivalence":
        rep = equivalence_suite(doc.require_graph(), budget=budget)
        verdicts = {
            "irp_leq": rep.irp_leq.holds,
            "irp_geq": rep.irp_geq.holds,
            "rees_normal": rep.rees_normal,
            "edge_normal": rep.edge_normal,
            "extended_rees_normal": rep.extended_rees_normal,
            "odd_cycle_condition": rep.odd_cycle_condition.holds,
            "consistent": rep.consistent,
        }
        cert = {}
        if rep.odd_cycle_condition.witness is not None:
            c1, c2 = rep.odd_cycle_condition.witness
            cert["odd_cycle_pair"] = [list(c1), list(c2)]
            cert["induced_connected"] = rep.odd_cycle_condition.witness_induced_connected
            cert["joined_by_edge"] = rep.odd_cycle_condition.witness_joined_by_edge
        if not rep.irp_leq.holds and rep.irp_leq.certificate is not None:
            cert["irp_leq_witness"] = list(rep.irp_leq.certificate)
        if not rep.irp_geq.holds and rep.irp_geq.certificate is not None:
            cert["irp_geq_witness"] = list(rep.irp_geq.certificate)
        code = 0 if rep.all_hold else 1
        return verdicts, cert, {}, code

    if args.command == "tdi":
        g = doc.require_graph()
        alpha = tuple(int(x) for x in args.alpha.split(","))
        ok = tdi_check(g, alpha)
        return {"holds": ok}, {}, {"alpha": list(alpha)}, 0 if ok else 1

    if args.command == "predicates":
        rep = graph_predicates(doc.require_graph())
        verdicts = {
            "connected": rep.connected,
            "bipartite": rep.bipartite,
            "unmixed": rep.unmixed,
        }
        return verdicts, {}, {}, 0

    raise InputError("bad-command", f"unknown command {args.command!r}")


def _emit(report: dict, output: str | None):
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if output is None or output == "-":
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(output))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".irptools-report-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, output)
    except BaseException:
        os.unlink(tmp)
        raise


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="irptools",
        description="Exact integer rounding property certificates for clutters and graphs",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, **extra):
        p = sub.add_parser(name)
        p.add_argument("input", help="input file (JSON or edge list), '-' for stdin")
        p.add_argument("--output", default=None, help="report file (default stdout)")
        p.add_argument(
            "--budget",
            type=int,
            default=None,
            help=f"enumeration cap (default: ${BUDGET_ENV} or unlimited)",
        )
        return p

    add("irp-leq")
    add("irp-geq")
    p = add("irp-witness")
    p.add_argument("--direction", choices=["leq", "geq"], required=True)
    p.add_argument("--window", type=int, default=2)
    p = add("ehrhart-eq")
    p.add_argument("--bmax", type=int, required=True)
    add("vertices")
    p = add("hilbert-basis")
    p.add_argument(
        "--cone", choices=["closure", "edge", "rees", "extrees"], required=True
    )
    p = add("canonical")
    p.add_argument("--bmax", type=int, default=None)
    p = add("a-invariant")
    p.add_argument("--method", choices=["formula", "direct", "perfect"], required=True)
    add("gorenstein")
    add("antiblocker")
    add("equivalence")
    p = add("tdi")
    p.add_argument("--alpha", required=True, help="comma-separated integers")
    add("predicates")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    budget = args.budget
    if budget is None:
        env = os.environ.get(BUDGET_ENV)
        if env:
            try:
                budget = int(env)
            except ValueError:
                budget = None
    started = time.monotonic()
    try:
        doc = load_document(args.input)
        verdicts, certificates, parameters, code = _run_command(args, doc, budget)
        report = {
            "command": args.command,
            "tool_version": __version__,
            "input": {
                "digest_sha256": doc.digest(),
                "kind": doc.kind,
                "vertices": doc.labels,
                "edges": doc.edges,
            },
            "parameters": parameters,
            "verdicts": verdicts,
            "certificates": certificates,
            "exit_code": code,
            "timings": {"seconds": round(time.monotonic() - started, 6)},
        }
        _emit(report, args.output)
        return code
    except (InputError, BudgetExceededError) as exc:
        code = getattr(exc, "code", "input-error")
        report = {
            "command": args.command,
            "tool_version": __version__,
            "error": {"code": code, "message": str(exc)},
            "exit_code": 2,
            "timings": {"seconds": round(time.monotonic() - started, 6)},
        }
        _emit(report, args.output)
        return 2


if __name__ == "__main__":
    sys.exit(main())
