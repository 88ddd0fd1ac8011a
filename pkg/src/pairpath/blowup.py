"""Blown-cycle construction: 2m independent classes of size q = 4m+3 arranged
in a cycle, consecutive classes completely joined.

Vertex (i, a) gets id i*q + a for class i in 0..2m-1 and within-class index a
in 0..q-1.  Between consecutive classes the complete bipartite boundary splits
into q perfect "shift" matchings: shift j pairs (i, a) with (i+1, (a+j) mod q).
Shifts 1..m are reserved for the transport phase of the router; the remaining
3m+3 shifts (0 and m+1..4m+2) stay free for the completion phase.

Class size 4m+3 is the smallest for which m reserved perfect matchings, a free
degree of 3m+3 per vertex, and at least 2m+3 common free neighbors for every
same-class vertex pair coexist; see README for the arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .graph import Graph, GraphError, make_graph


class BlowupError(ValueError):
    """Invalid blown-cycle parameter or operation argument."""


@dataclass(frozen=True)
class ShiftSystem:
    """Partition of the q shift matchings at every boundary."""

    m: int
    q: int

    @cached_property
    def reserved(self) -> frozenset[int]:
        return frozenset(range(1, self.m + 1))

    @cached_property
    def free(self) -> frozenset[int]:
        return frozenset({0} | set(range(self.m + 1, self.q)))

    def is_free(self, shift: int) -> bool:
        return shift % self.q not in self.reserved


@dataclass(frozen=True)
class BlownCycle:
    """The constructed graph plus its class structure."""

    m: int
    q: int
    graph: Graph
    shifts: ShiftSystem

    @property
    def num_classes(self) -> int:
        return 2 * self.m

    @property
    def n(self) -> int:
        return self.graph.n

    def class_of(self, v: int) -> int:
        return v // self.q

    def index_of(self, v: int) -> int:
        return v % self.q

    def vertex(self, cls: int, idx: int) -> int:
        return (cls % self.num_classes) * self.q + idx % self.q

    def class_members(self, cls: int) -> range:
        base = (cls % self.num_classes) * self.q
        return range(base, base + self.q)


def build(m: int) -> BlownCycle:
    """Construct the blown cycle for half cycle length m.

    m must be at least 2: with only two classes the cycle's two boundaries
    coincide, which would demand parallel edges.
    """
    if m < 2:
        raise BlowupError(f"half cycle length must be >= 2, got {m}")
    q = 4 * m + 3
    two_m = 2 * m
    edges = []
    for i in range(two_m):
        j = (i + 1) % two_m
        for a in range(q):
            for b in range(q):
                edges.append((i * q + a, j * q + b))
    g = make_graph(two_m * q, edges)
    return BlownCycle(m=m, q=q, graph=g, shifts=ShiftSystem(m=m, q=q))


def matching_step(b: BlownCycle, boundary: int, shift: int, frm: int) -> int:
    """Follow the reserved shift matching at a boundary.

    Returns the partner of `frm` in class boundary+1 under the shift-j
    matching; only reserved shifts 1..m are steppable.
    """
    if not (1 <= shift <= b.m):
        raise BlowupError(
            f"shift {shift} outside reserved range 1..{b.m}")
    if not (0 <= frm < b.n):
        raise BlowupError(f"vertex {frm} out of range")
    i = b.class_of(frm)
    if i != boundary % b.num_classes:
        raise BlowupError(
            f"vertex {frm} is in class {i}, not boundary class {boundary}")
    return b.vertex(i + 1, b.index_of(frm) + shift)


def free_common_neighbors(b: BlownCycle, u: int, v: int) -> list[int]:
    """All z in the next class adjacent to both u and v through free shifts.

    u and v must be distinct vertices of one class; the list is sorted by
    within-class index and always holds at least 2m+3 vertices.
    """
    if u == v:
        raise BlowupError("u and v must be distinct")
    for w in (u, v):
        if not (0 <= w < b.n):
            raise BlowupError(f"vertex {w} out of range")
    i = b.class_of(u)
    if b.class_of(v) != i:
        raise BlowupError(
            f"vertices {u} and {v} lie in different classes "
            f"({i} and {b.class_of(v)})")
    au, av = b.index_of(u), b.index_of(v)
    free = b.shifts.free
    return [b.vertex(i + 1, t) for t in range(b.q)
            if (t - au) % b.q in free and (t - av) % b.q in free]
