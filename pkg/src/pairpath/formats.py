"""Wire formats: graph JSON / DOT / edge-list, pairing JSON, route-plan JSON.

All three graph formats are import/export symmetric and byte-stable: edges are
written sorted with u < v, so identical graphs serialize identically.
"""
from __future__ import annotations

import json
import re
from typing import Any

from .graph import Graph, GraphError, make_graph
from .routing import Pairing, Route, RoutePlan, edge_key, make_pairing


class FormatError(ValueError):
    """Unparseable or schema-violating input text."""


GRAPH_FORMATS = ("json", "dot", "edgelist")


def _json_loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None


def _as_edge(item: Any) -> tuple[int, int]:
    if (not isinstance(item, (list, tuple)) or len(item) != 2
            or not all(isinstance(v, int) for v in item)):
        raise FormatError(f"expected [u, v] integer pair, got {item!r}")
    return item[0], item[1]


def dumps_graph(g: Graph, fmt: str = "json",
                annotations: dict[str, Any] | None = None) -> str:
    if fmt == "json":
        doc: dict[str, Any] = {
            "n": g.n,
            "edges": [list(e) for e in g.sorted_edges()],
        }
        if annotations:
            doc.update(annotations)
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "dot":
        lines = ["graph G {"]
        for v in range(g.n):
            label = (g.labels or {}).get(v)
            if label is None:
                lines.append(f"  {v};")
            else:
                esc = label.replace("\\", "\\\\").replace('"', '\\"')
                lines.append(f'  {v} [label="{esc}"];')
        for u, v in g.sorted_edges():
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "edgelist":
        lines = [f"# n {g.n}"]
        lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
        return "\n".join(lines) + "\n"
    raise FormatError(f"unknown graph format {fmt!r}; expected {GRAPH_FORMATS}")


_DOT_NODE = re.compile(r'^(\d+)\s*(?:\[label="((?:[^"\\]|\\.)*)"\]\s*)?;$')
_DOT_EDGE = re.compile(r"^(\d+)\s*--\s*(\d+)\s*;$")


def loads_graph(text: str, fmt: str = "json") -> tuple[Graph, dict[str, Any]]:
    """Parse a graph; returns (graph, annotations).  Only the JSON format
    carries annotations (e.g. the blown-cycle class structure block)."""
    try:
        return _loads_graph(text, fmt)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def _loads_graph(text: str, fmt: str) -> tuple[Graph, dict[str, Any]]:
    if fmt == "json":
        doc = _json_loads(text)
        if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
            raise FormatError('graph JSON needs keys "n" and "edges"')
        n = doc["n"]
        if not isinstance(n, int):
            raise FormatError(f'"n" must be an integer, got {n!r}')
        edges = [_as_edge(e) for e in doc["edges"]]
        annotations = {k: v for k, v in doc.items() if k not in ("n", "edges")}
        return make_graph(n, edges), annotations
    if fmt == "dot":
        body = text.strip()
        if not body.startswith("graph") or not body.endswith("}"):
            raise FormatError("not a DOT graph")
        nodes: dict[int, str | None] = {}
        edges = []
        for raw in body.split("\n")[1:-1]:
            line = raw.strip()
            if not line:
                continue
            mn = _DOT_NODE.match(line)
            if mn:
                label = mn.group(2)
                if label is not None:
                    label = label.replace('\\"', '"').replace("\\\\", "\\")
                nodes[int(mn.group(1))] = label
                continue
            me = _DOT_EDGE.match(line)
            if me:
                edges.append((int(me.group(1)), int(me.group(2))))
                continue
            raise FormatError(f"unparseable DOT line: {line!r}")
        n = len(nodes)
        if sorted(nodes) != list(range(n)):
            raise FormatError("DOT vertices must be exactly 0..n-1")
        labels = {v: lab for v, lab in nodes.items() if lab is not None}
        return make_graph(n, edges, labels=labels or None), {}
    if fmt == "edgelist":
        n = None
        edges = []
        for raw in text.split("\n"):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                head = line[1:].split()
                if len(head) == 2 and head[0] == "n":
                    n = int(head[1])
                continue
            parts = line.split()
            if len(parts) != 2:
                raise FormatError(f"expected 'u v' per line, got {line!r}")
            try:
                edges.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise FormatError(f"non-integer edge endpoints: {line!r}") from None
        if n is None:
            n = 1 + max((max(e) for e in edges), default=-1)
        return make_graph(n, edges), {}
    raise FormatError(f"unknown graph format {fmt!r}; expected {GRAPH_FORMATS}")


def dumps_pairing(p: Pairing) -> str:
    return json.dumps({"pairs": [list(pair) for pair in p.pairs]}, indent=2) + "\n"


def loads_pairing(text: str) -> Pairing:
    doc = _json_loads(text)
    if not isinstance(doc, dict) or "pairs" not in doc:
        raise FormatError('pairing JSON needs key "pairs"')
    try:
        return make_pairing(_as_edge(pair) for pair in doc["pairs"])
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def dumps_plan(plan: RoutePlan, extras: dict[str, Any] | None = None) -> str:
    doc: dict[str, Any] = {
        "routes": [{"x": r.x, "y": r.y, "path": list(r.path)}
                   for r in plan.routes],
        "edges_used": plan.edges_used,
    }
    if extras:
        doc.update(extras)
    return json.dumps(doc, indent=2) + "\n"


def loads_plan(text: str) -> tuple[RoutePlan, dict[str, Any]]:
    """Parse a plan; the owner map is rebuilt from the paths (first claim
    wins), so verification never trusts the stored edge count."""
    doc = _json_loads(text)
    if not isinstance(doc, dict) or "routes" not in doc:
        raise FormatError('plan JSON needs key "routes"')
    routes = []
    used: dict[tuple[int, int], int] = {}
    for idx, item in enumerate(doc["routes"]):
        if not isinstance(item, dict) or not {"x", "y", "path"} <= set(item):
            raise FormatError(f'route #{idx} needs keys "x", "y", "path"')
        path = item["path"]
        if not isinstance(path, list) or not all(isinstance(v, int) for v in path):
            raise FormatError(f"route #{idx} path must be a list of ids")
        routes.append(Route(x=item["x"], y=item["y"], path=tuple(path)))
        for u, v in zip(path, path[1:]):
            used.setdefault(edge_key(u, v), idx)
    extras = {k: v for k, v in doc.items() if k not in ("routes", "edges_used")}
    return RoutePlan(routes=tuple(routes), used_edges=used), extras
