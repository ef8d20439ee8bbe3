"""Graphs, trigraphs and the contraction operation.

A trigraph carries two disjoint edge sets on the same vertices: black
(ordinary) edges and red (error) edges.  Contracting two vertices u, v
into a fresh vertex z recolours the boundary: common neighbours keep a
black edge only if both u and v saw them black, every other neighbour of
u or v becomes a red neighbour of z.  Vertices are positive integers and
ids are never reused, so a contracted vertex can be traced back to the
set of original vertices it represents (its bag).
"""

from __future__ import annotations

from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Set, Tuple


class Graph:
    """Undirected simple graph with integer vertices.

    Instances are treated as immutable: every operation that changes the
    vertex or edge set returns a new Graph.
    """

    __slots__ = ("vertices", "adj")

    def __init__(self, vertices: Iterable[int], edges: Iterable[Tuple[int, int]] = ()):
        self.vertices: Set[int] = set(vertices)
        self.adj: Dict[int, Set[int]] = {v: set() for v in self.vertices}
        for u, v in edges:
            self._add_edge(u, v)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(range(1, n + 1), [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(range(1, n + 1), [(i, i + 1) for i in range(1, n)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("cycle needs at least 3 vertices")
        return cls(range(1, n + 1), [(i, i % n + 1) for i in range(1, n + 1)])

    def _add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError("loop edge %d-%d" % (u, v))
        if u not in self.adj or v not in self.adj:
            raise ValueError("edge %d-%d uses unknown vertex" % (u, v))
        self.adj[u].add(v)
        self.adj[v].add(u)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def neighbors(self, v: int) -> Set[int]:
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> Set[int]:
        return self.adj[v] | {v}

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj.get(u, ())

    def edges(self) -> Iterator[Tuple[int, int]]:
        for u in sorted(self.adj):
            for v in sorted(self.adj[u]):
                if u < v:
                    yield (u, v)

    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj.values()) // 2

    def induced(self, keep: Iterable[int]) -> "Graph":
        keep = set(keep)
        if not keep <= self.vertices:
            raise ValueError("induced set is not a subset of the vertices")
        return Graph(keep, [(u, v) for u, v in self.edges() if u in keep and v in keep])

    def without(self, drop: Iterable[int]) -> "Graph":
        return self.induced(self.vertices - set(drop))

    def complement(self) -> "Graph":
        vs = sorted(self.vertices)
        edges = [(u, v) for i, u in enumerate(vs) for v in vs[i + 1:] if v not in self.adj[u]]
        return Graph(vs, edges)

    def components(self) -> List[Set[int]]:
        seen: Set[int] = set()
        comps = []
        for start in sorted(self.vertices):
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def relabel_compact(self) -> Tuple["Graph", Dict[int, int]]:
        """Relabel vertices to 1..n in sorted order; returns (graph, old->new map)."""
        mapping = {v: i + 1 for i, v in enumerate(sorted(self.vertices))}
        g = Graph(mapping.values(), [(mapping[u], mapping[v]) for u, v in self.edges()])
        return g, mapping

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.adj == other.adj

    def __repr__(self) -> str:
        return "Graph(n=%d, m=%d)" % (self.n, self.edge_count())


class Trigraph:
    """Graph with black and red edge sets plus bag bookkeeping.

    bags[v] is the frozenset of original vertices that were contracted
    into v; an uncontracted vertex has the singleton bag {v}.
    """

    __slots__ = ("vertices", "black", "red", "bags", "retired")

    def __init__(
        self,
        vertices: Iterable[int],
        black_edges: Iterable[Tuple[int, int]] = (),
        red_edges: Iterable[Tuple[int, int]] = (),
        bags: Optional[Dict[int, FrozenSet[int]]] = None,
    ):
        self.vertices: Set[int] = set(vertices)
        self.black: Dict[int, Set[int]] = {v: set() for v in self.vertices}
        self.red: Dict[int, Set[int]] = {v: set() for v in self.vertices}
        for u, v in black_edges:
            self._add(self.black, u, v)
        for u, v in red_edges:
            self._add(self.red, u, v)
        for v in self.vertices:
            if self.black[v] & self.red[v]:
                raise ValueError("vertex %d has an edge that is both black and red" % v)
        if bags is None:
            self.bags: Dict[int, FrozenSet[int]] = {v: frozenset([v]) for v in self.vertices}
        else:
            if set(bags) != self.vertices:
                raise ValueError("bags must be keyed exactly by the vertices")
            self.bags = dict(bags)
        # ids that were ever used and must not come back
        self.retired: Set[int] = set()

    def _add(self, table: Dict[int, Set[int]], u: int, v: int) -> None:
        if u == v:
            raise ValueError("loop edge %d-%d" % (u, v))
        if u not in table or v not in table:
            raise ValueError("edge %d-%d uses unknown vertex" % (u, v))
        table[u].add(v)
        table[v].add(u)

    @classmethod
    def from_graph(cls, g: Graph) -> "Trigraph":
        return cls(g.vertices, g.edges())

    @property
    def n(self) -> int:
        return len(self.vertices)

    def neighbors(self, v: int) -> Set[int]:
        return self.black[v] | self.red[v]

    def red_degree(self, v: int) -> int:
        return len(self.red[v])

    def max_red_degree(self) -> int:
        if not self.vertices:
            return 0
        return max(len(self.red[v]) for v in self.vertices)

    def red_edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in sorted(self.red) for v in sorted(self.red[u]) if u < v]

    def black_edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in sorted(self.black) for v in sorted(self.black[u]) if u < v]

    def total_graph(self) -> Graph:
        """The underlying graph ignoring colours."""
        return Graph(self.vertices, list(self.black_edges()) + list(self.red_edges()))

    def copy(self) -> "Trigraph":
        t = Trigraph.__new__(Trigraph)
        t.vertices = set(self.vertices)
        t.black = {v: set(s) for v, s in self.black.items()}
        t.red = {v: set(s) for v, s in self.red.items()}
        t.bags = dict(self.bags)
        t.retired = set(self.retired)
        return t

    def bag_partition(self) -> List[FrozenSet[int]]:
        return sorted((self.bags[v] for v in self.vertices), key=lambda b: min(b))

    def induced(self, keep: Iterable[int]) -> "Trigraph":
        keep = set(keep)
        if not keep <= self.vertices:
            raise ValueError("induced set is not a subset of the vertices")
        t = Trigraph(
            keep,
            [(u, v) for u, v in self.black_edges() if u in keep and v in keep],
            [(u, v) for u, v in self.red_edges() if u in keep and v in keep],
            bags={v: self.bags[v] for v in keep},
        )
        return t

    def same_structure(self, other: "Trigraph") -> bool:
        """Equality of vertices and coloured edge sets (bags ignored)."""
        return (
            self.vertices == other.vertices
            and self.black == other.black
            and self.red == other.red
        )

    def __repr__(self) -> str:
        nb = sum(len(s) for s in self.black.values()) // 2
        nr = sum(len(s) for s in self.red.values()) // 2
        return "Trigraph(n=%d, black=%d, red=%d)" % (self.n, nb, nr)


def contract(t: Trigraph, u: int, v: int, z: Optional[int] = None) -> Trigraph:
    """Contract vertices u and v of t into the fresh vertex z.

    Neighbours seen by exactly one of u, v become red neighbours of z;
    common neighbours stay black only when both edges were black.  Edges
    not incident to u or v are untouched.  Returns a new trigraph.
    """
    if u not in t.vertices or v not in t.vertices:
        raise ValueError("contract on dead or unknown vertex (%s, %s)" % (u, v))
    if u == v:
        raise ValueError("cannot contract a vertex with itself")
    if z is None:
        z = max(max(t.vertices), max(t.retired, default=0)) + 1
    if z in t.vertices or z in t.retired:
        raise ValueError("contraction target id %d is not fresh" % z)

    out = t.copy()
    nu = (t.black[u] | t.red[u]) - {u, v}
    nv = (t.black[v] | t.red[v]) - {u, v}
    black_z = {x for x in nu & nv if x in t.black[u] and x in t.black[v]}
    red_z = (nu | nv) - black_z

    for table in (out.black, out.red):
        for w in (u, v):
            for x in table[w]:
                table[x].discard(w)
            del table[w]
    out.vertices -= {u, v}
    out.retired |= {u, v, z}

    out.vertices.add(z)
    out.black[z] = set(black_z)
    out.red[z] = set(red_z)
    for x in black_z:
        out.black[x].add(z)
    for x in red_z:
        out.red[x].add(z)
    out.bags[z] = t.bags[u] | t.bags[v]
    del out.bags[u]
    del out.bags[v]
    return out


def is_module(g: Graph, s: Iterable[int], relative_to: Optional[Iterable[int]] = None) -> bool:
    """True when every outside vertex sees all of s or none of s.

    relative_to restricts which outside vertices are examined.
    """
    s = set(s)
    if not s <= g.vertices:
        raise ValueError("module candidate is not a subset of the vertices")
    if relative_to is not None:
        outside = set(relative_to)
        if outside & s:
            raise ValueError("relative_to overlaps the candidate module")
    else:
        outside = g.vertices - s
    for w in outside:
        inter = g.adj[w] & s
        if inter and inter != s:
            return False
    return True


def validate_partition(ground: Set[int], parts: List[Set[int]]) -> None:
    """Raise ValueError unless parts is a partition of ground into nonempty sets."""
    seen: Set[int] = set()
    for p in parts:
        if not p:
            raise ValueError("empty partition class")
        if seen & p:
            raise ValueError("partition classes overlap")
        seen |= set(p)
    if seen != ground:
        raise ValueError("partition does not cover the ground set")


def quotient(g: Graph, parts: List[Set[int]]) -> Trigraph:
    """Trigraph obtained by contracting each class of parts to a point.

    Between two classes the edge is black when the bipartite link is
    complete, absent when it is empty, red otherwise.  The result does
    not depend on any contraction order.  Class i becomes vertex i+1.
    """
    validate_partition(g.vertices, [set(p) for p in parts])
    k = len(parts)
    sets = [set(p) for p in parts]
    black = []
    red = []
    for i in range(k):
        for j in range(i + 1, k):
            cnt = sum(len(g.adj[x] & sets[j]) for x in sets[i])
            if cnt == 0:
                continue
            if cnt == len(sets[i]) * len(sets[j]):
                black.append((i + 1, j + 1))
            else:
                red.append((i + 1, j + 1))
    bags = {i + 1: frozenset(sets[i]) for i in range(k)}
    return Trigraph(range(1, k + 1), black, red, bags=bags)
