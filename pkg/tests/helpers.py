"""Shared builders and oracles for the test suite."""
from __future__ import annotations

import networkx as nx

from pairpath.blowup import BlownCycle
from pairpath.graph import Graph, make_graph
from pairpath.routing import Pairing, make_pairing


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def dumbbell(internals: int) -> Graph:
    """Two K5 blocks joined by a chain of `internals` extra vertices."""
    k5a = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    second = list(range(5 + internals, 10 + internals))
    k5b = [(u, v) for idx, u in enumerate(second) for v in second[idx + 1:]]
    chain = []
    prev = 4
    for v in range(5, 5 + internals):
        chain.append((prev, v))
        prev = v
    chain.append((prev, second[0]))
    return make_graph(10 + internals, k5a + k5b + chain)


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def adversarial_pairings(b: BlownCycle) -> list[Pairing]:
    """Structured worst-case pairings: all-antipodal by class, all-same-class
    (maximal partial; a perfect one cannot exist with odd class size), and
    class-shift-by-1."""
    m, q = b.m, b.q
    antipodal = [(b.vertex(i, a), b.vertex(i + m, a))
                 for i in range(m) for a in range(q)]
    same_class = [(b.vertex(i, 2 * t), b.vertex(i, 2 * t + 1))
                  for i in range(2 * m) for t in range((q - 1) // 2)]
    shift_one = [(b.vertex(2 * t, a), b.vertex(2 * t + 1, a))
                 for t in range(m) for a in range(q)]
    return [make_pairing(pairs) for pairs in (antipodal, same_class, shift_one)]
