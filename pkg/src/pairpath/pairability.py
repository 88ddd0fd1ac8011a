"""Exact path-pairability decision by exhaustive search, plus a fast screener
of necessary conditions.

The decision side enumerates every perfect pairing (there are (n-1)!! of them,
hence the hard n <= 12 guard) and runs a pruned backtracking search for
edge-disjoint joining paths on each.  The screener side checks conditions any
path-pairable graph must satisfy, derived from counting how many edge-disjoint
paths must cross thin BFS layers; a single violation certifies a negative.
"""
from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .graph import Graph, GraphError, distance_matrix
from .routing import Pairing, Route, RoutePlan, edge_key, make_pairing

DEFAULT_NODE_BUDGET = 100_000_000
ENUMERATION_GUARD = 12

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
CAP_HIT = "cap-hit"

PATH_PAIRABLE = "path-pairable"
NOT_PATH_PAIRABLE = "not-path-pairable"
INCONCLUSIVE = "inconclusive"
CANNOT_RULE_OUT = "cannot-rule-out"

_INF = float("inf")


@dataclass(frozen=True)
class SearchStats:
    pairings_examined: int
    nodes_expanded: int


@dataclass(frozen=True)
class SearchResult:
    status: str  # feasible | infeasible | cap-hit
    plan: RoutePlan | None
    nodes_expanded: int


@dataclass(frozen=True)
class Verdict:
    status: str  # path-pairable | not-path-pairable | inconclusive
    witness: Pairing | None
    stats: SearchStats

    def to_json(self) -> str:
        doc = {
            "status": self.status,
            "witness": ([list(p) for p in self.witness.pairs]
                        if self.witness else None),
            "pairings_examined": self.stats.pairings_examined,
            "nodes_expanded": self.stats.nodes_expanded,
        }
        return json.dumps(doc, indent=2) + "\n"


class _CapHit(Exception):
    pass


def _residual_dist(adj, src: int, dst: int, used: set) -> float:
    """Hop distance from src to dst avoiding used edges; inf if cut off."""
    if src == dst:
        return 0
    dist = {src: 0}
    frontier = [src]
    while frontier:
        nxt = []
        for v in frontier:
            for w in adj[v]:
                if w in dist or edge_key(v, w) in used:
                    continue
                if w == dst:
                    return dist[v] + 1
                dist[w] = dist[v] + 1
                nxt.append(w)
        frontier = nxt
    return _INF


def _residual_dist_all(adj, src: int, used: set, n: int) -> list[float]:
    dist = [_INF] * n
    dist[src] = 0
    frontier = [src]
    while frontier:
        nxt = []
        for v in frontier:
            for w in adj[v]:
                if dist[w] == _INF and edge_key(v, w) not in used:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


class _Search:
    """Backtracking search for pairwise edge-disjoint joining paths.

    Prunes a branch when some unrouted pair gets disconnected in the residual
    graph, or when the used-edge count plus the sum of residual shortest-path
    distances of unrouted pairs exceeds the edge supply.
    """

    def __init__(self, g: Graph, pairs: Sequence[tuple[int, int]], budget: int):
        self.adj = g.adj
        self.n = g.n
        self.e_total = g.edge_count
        self.pairs = list(pairs)
        self.budget = budget
        self.used: set = set()
        self.routed: list[list[int] | None] = [None] * len(pairs)
        self.nodes = 0

    def solve(self) -> bool:
        open_pairs = [i for i, r in enumerate(self.routed) if r is None]
        if not open_pairs:
            return True
        dists = {}
        for i in open_pairs:
            x, y = self.pairs[i]
            d = _residual_dist(self.adj, x, y, self.used)
            if d == _INF:
                return False
            dists[i] = d
        if len(self.used) + sum(dists.values()) > self.e_total:
            return False
        # route the most constrained pair first: largest residual distance
        pick = max(open_pairs, key=lambda i: (dists[i], -i))
        x, y = self.pairs[pick]
        to_target = _residual_dist_all(self.adj, y, self.used, self.n)
        slack = self.e_total - len(self.used) - (sum(dists.values()) - dists[pick])
        return self._extend(pick, x, y, [x], {x}, 0, to_target, slack)

    def _extend(self, pick, cur, target, path, visited, length,
                to_target, slack) -> bool:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _CapHit
        if cur == target:
            self.routed[pick] = list(path)
            if self.solve():
                return True
            self.routed[pick] = None
            return False
        steps = []
        for w in self.adj[cur]:
            if w in visited or edge_key(cur, w) in self.used:
                continue
            if length + 1 + to_target[w] > slack:
                continue
            steps.append((to_target[w], w))
        steps.sort()
        for _, w in steps:
            e = edge_key(cur, w)
            self.used.add(e)
            path.append(w)
            visited.add(w)
            if self._extend(pick, w, target, path, visited, length + 1,
                            to_target, slack):
                return True
            visited.discard(w)
            path.pop()
            self.used.discard(e)
        return False


def find_disjoint_paths(g: Graph, p: Pairing,
                        budget: int = DEFAULT_NODE_BUDGET) -> SearchResult:
    """Decide one pairing instance by complete backtracking.

    Returns a verified-feasible plan, a proof of infeasibility (the search
    space is exhausted), or cap-hit once `budget` nodes were expanded.
    """
    for x, y in p.pairs:
        for v in (x, y):
            if not (0 <= v < g.n):
                raise GraphError(f"pairing vertex {v} out of range 0..{g.n - 1}")
    search = _Search(g, p.pairs, budget)
    try:
        ok = search.solve()
    except _CapHit:
        return SearchResult(status=CAP_HIT, plan=None,
                            nodes_expanded=search.nodes)
    if not ok:
        return SearchResult(status=INFEASIBLE, plan=None,
                            nodes_expanded=search.nodes)
    used: dict[tuple[int, int], int] = {}
    routes = []
    for idx, ((x, y), path) in enumerate(zip(p.pairs, search.routed)):
        routes.append(Route(x=x, y=y, path=tuple(path)))
        for u, v in zip(path, path[1:]):
            used[edge_key(u, v)] = idx
    plan = RoutePlan(routes=tuple(routes), used_edges=used)
    return SearchResult(status=FEASIBLE, plan=plan, nodes_expanded=search.nodes)


def enumerate_pairings(items: Sequence[int]) -> Iterator[tuple[tuple[int, int], ...]]:
    """All perfect pairings of items in canonical order: the smallest unpaired
    element is matched to each remaining candidate, ascending, recursively."""
    items = sorted(items)
    if len(items) % 2:
        raise ValueError("cannot pair an odd number of items")

    def rec(rest: list[int]):
        if not rest:
            yield ()
            return
        head = rest[0]
        for k in range(1, len(rest)):
            partner = rest[k]
            remaining = rest[1:k] + rest[k + 1:]
            for tail in rec(remaining):
                yield ((head, partner),) + tail

    return rec(list(items))


def pairing_count(n: int) -> int:
    """(n-1)!! perfect pairings of n items, n even."""
    if n % 2:
        raise ValueError("no perfect pairing of an odd set")
    return math.prod(range(1, n, 2))


def _decide_partition(g: Graph, first_pair: tuple[int, int],
                      rest: tuple[int, ...], budget: int):
    """Scan all pairings extending first_pair; stop at the first infeasible
    pairing (witness) or the first cap-hit."""
    examined = 0
    nodes = 0
    for tail in enumerate_pairings(rest):
        pairs = (first_pair,) + tail
        result = find_disjoint_paths(g, Pairing(pairs=pairs), budget)
        examined += 1
        nodes += result.nodes_expanded
        if result.status == INFEASIBLE:
            return "witness", pairs, examined, nodes
        if result.status == CAP_HIT:
            return CAP_HIT, None, examined, nodes
    return "clean", None, examined, nodes


def is_path_pairable(g: Graph, budget: int = DEFAULT_NODE_BUDGET,
                     workers: int = 1) -> Verdict:
    """Decide path-pairability by full enumeration (n <= 12).

    The scan is split into partitions fixing the first pair (0, c); with
    workers > 1 partitions run in parallel, but the verdict and witness are
    those of the lowest canonical pairing index regardless of worker count.
    """
    if g.n % 2:
        raise ValueError(f"path-pairability needs an even vertex count, got {g.n}")
    if g.n > ENUMERATION_GUARD:
        raise ValueError(
            f"n={g.n} exceeds the enumeration guard {ENUMERATION_GUARD} "
            f"({pairing_count(g.n)} pairings)")
    if g.n == 0:
        return Verdict(status=PATH_PAIRABLE, witness=None,
                       stats=SearchStats(0, 0))
    rest_all = tuple(range(1, g.n))
    partitions = [((0, c), tuple(v for v in rest_all if v != c))
                  for c in rest_all]
    if workers <= 1:
        results = (_decide_partition(g, fp, rest, budget)
                   for fp, rest in partitions)
        return _combine(results)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_decide_partition, g, fp, rest, budget)
                   for fp, rest in partitions]
        return _combine(f.result() for f in futures)


def _combine(results) -> Verdict:
    examined = 0
    nodes = 0
    for status, pairs, part_examined, part_nodes in results:
        examined += part_examined
        nodes += part_nodes
        if status == "witness":
            return Verdict(status=NOT_PATH_PAIRABLE,
                           witness=make_pairing(pairs),
                           stats=SearchStats(examined, nodes))
        if status == CAP_HIT:
            return Verdict(status=INCONCLUSIVE, witness=None,
                           stats=SearchStats(examined, nodes))
    return Verdict(status=PATH_PAIRABLE, witness=None,
                   stats=SearchStats(examined, nodes))


# --- necessary-condition screener ---

LAYER_GROWTH = "layer-growth"
LAYERED_CUT = "layered-cut"
DIAMETER_BOUND = "diameter-bound"

_DIAMETER_COEFF = 6.0 * math.sqrt(2.0)
_DIAMETER_CHECK_MIN = 20


def diameter_upper_bound(n: int) -> float:
    """Largest diameter any path-pairable graph on n vertices can have."""
    return _DIAMETER_COEFF * math.sqrt(n)


@dataclass(frozen=True)
class ScreenViolation:
    """One failed necessary condition at one root.

    layer-growth: layers 2k and 2k+1 hold `value` < `required`=k vertices
    while the ball (`ball` = vertices within distance 2k+1) is at most n/2.
    layered-cut: only `value` edges cross between layers `index` and index+1,
    fewer than the `required` = min(u_t, n-u_t) edge-disjoint paths that some
    pairing forces across.
    diameter-bound: diameter `value` exceeds `required` = 6*sqrt(2)*sqrt(n).
    """

    condition: str
    root: int
    index: int
    value: int
    required: float
    ball: int | None = None


@dataclass(frozen=True)
class ScreenReport:
    verdict: str  # not-path-pairable | cannot-rule-out
    diameter: int
    roots_checked: tuple[int, ...]
    violations: tuple[ScreenViolation, ...]

    def to_json(self) -> str:
        doc = {
            "verdict": self.verdict,
            "diameter": self.diameter,
            "roots_checked": list(self.roots_checked),
            "violations": [
                {"condition": v.condition, "root": v.root, "index": v.index,
                 "value": v.value, "required": v.required, "ball": v.ball}
                for v in self.violations
            ],
        }
        return json.dumps(doc, indent=2) + "\n"


def screen(g: Graph) -> ScreenReport:
    """Check necessary conditions from every root attaining the diameter.

    Violating any condition proves some pairing cannot be linked, so the graph
    is certified not-path-pairable; passing all of them rules nothing in.
    Roots are scanned ascending and the scan stops at the first root with a
    violation, reporting every condition that root breaks.
    """
    if g.n % 2:
        raise GraphError(f"screening needs an even vertex count, got {g.n}")
    dist = distance_matrix(g)  # raises on disconnected input
    ecc = dist.max(axis=1)
    d = int(ecc.max())
    roots = [int(r) for r in np.flatnonzero(ecc == d)]
    edges = g.sorted_edges()
    eu = np.fromiter((e[0] for e in edges), dtype=np.int64, count=len(edges))
    ev = np.fromiter((e[1] for e in edges), dtype=np.int64, count=len(edges))

    checked: list[int] = []
    for root in roots:
        checked.append(root)
        found = _screen_root(g.n, d, dist[root], eu, ev, root)
        if found:
            return ScreenReport(verdict=NOT_PATH_PAIRABLE, diameter=d,
                                roots_checked=tuple(checked),
                                violations=tuple(found))
    return ScreenReport(verdict=CANNOT_RULE_OUT, diameter=d,
                        roots_checked=tuple(checked), violations=())


def _screen_root(n, d, dist_row, eu, ev, root) -> list[ScreenViolation]:
    sizes = np.bincount(dist_row, minlength=d + 1)
    prefix = np.cumsum(sizes)
    found = []
    for k in range((d - 1) // 2 + 1):
        ball = int(prefix[2 * k + 1])
        if 2 * ball <= n and int(sizes[2 * k] + sizes[2 * k + 1]) < k:
            found.append(ScreenViolation(
                condition=LAYER_GROWTH, root=root, index=k,
                value=int(sizes[2 * k] + sizes[2 * k + 1]), required=k,
                ball=ball))
    du, dv = dist_row[eu], dist_row[ev]
    crossing = du != dv
    cuts = np.bincount(np.minimum(du, dv)[crossing], minlength=d)
    for t in range(d):
        required = min(int(prefix[t]), n - int(prefix[t]))
        if int(cuts[t]) < required:
            found.append(ScreenViolation(
                condition=LAYERED_CUT, root=root, index=t,
                value=int(cuts[t]), required=required))
    if d >= _DIAMETER_CHECK_MIN and d > diameter_upper_bound(n):
        found.append(ScreenViolation(
            condition=DIAMETER_BOUND, root=root, index=d,
            value=d, required=diameter_upper_bound(n)))
    return found
