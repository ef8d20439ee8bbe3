"""Structured generators: snaking grids, half-graph cycles, grid
collapses, and the 3-SAT to Dominating Set reduction.

The snaking grid on coarse dimensions s x t lives on the fine
(3(s-1)+1) x (3(t-1)+1) grid, row 1 at the bottom.  Its edge pattern
is a single snake (a subdivided wall) threading every third column,
leaving the remaining fine points isolated:

  * row 1 carries every horizontal edge,
  * columns congruent to 1 mod 3 carry every vertical edge,
  * rows congruent to 1 mod 3 (from row 4 up) pair columns (c, c+1)
    for odd c, rows congruent to 0 mod 3 for even c,
  * rows r and r+1 with r congruent to 0 mod 3 are joined vertically
    in the remaining columns.

The 3-SAT reduction places one gadget per fine point of such a grid:
variable wires snake along clause rows, every unoccupied point gets an
isolated dummy vertex, and the whole graph contracts part by part to
the grid quotient with red degree at most 4.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .trigraph import Graph, Trigraph, contract, quotient, validate_partition
from .sequence import ContractionSequence, final_trigraph, verify

Point = Tuple[int, int]


# ---------------------------------------------------------------------------
# snaking grid

@dataclass(frozen=True)
class SnakingGrid:
    s: int
    t: int
    fine_rows: int
    fine_cols: int
    graph: Graph
    vertex_at: Dict[Point, int]


def fine_dims(s: int, t: int) -> Tuple[int, int]:
    return 3 * (s - 1) + 1, 3 * (t - 1) + 1


def snaking_grid(s: int, t: int) -> SnakingGrid:
    """The snaking grid; s = 1 degenerates to a single full row."""
    if s < 1 or t < 2:
        raise ValueError("snaking grid needs s >= 1 and t >= 2")
    rows, cols = fine_dims(s, t)
    vertex_at = {(r, c): (r - 1) * cols + c
                 for r in range(1, rows + 1) for c in range(1, cols + 1)}
    edges = []
    for c in range(1, cols):
        edges.append((vertex_at[1, c], vertex_at[1, c + 1]))
    for c in range(1, cols + 1, 3):
        for r in range(1, rows):
            edges.append((vertex_at[r, c], vertex_at[r + 1, c]))
    for r in range(4, rows + 1, 3):
        for c in range(1, cols, 2):
            edges.append((vertex_at[r, c], vertex_at[r, c + 1]))
    for r in range(3, rows + 1, 3):
        for c in range(2, cols, 2):
            edges.append((vertex_at[r, c], vertex_at[r, c + 1]))
        if r < rows:
            for c in range(1, cols + 1):
                if c % 3 != 1:
                    edges.append((vertex_at[r, c], vertex_at[r + 1, c]))
    g = Graph(range(1, rows * cols + 1), set(edges))
    return SnakingGrid(s, t, rows, cols, g, vertex_at)


def hamiltonian_cycle(p: int, q: int) -> List[Point]:
    """Fine-grid points in the order of the comb-shaped hamiltonian cycle.

    The cycle follows the full bottom row, climbs the outer columns,
    and zig-zags through the teeth; it exists only for even q (the
    fine column count is then even).  Together with the snaking grid
    it forms the augmented grid with maximum degree 3.
    """
    if p < 2 or q < 2:
        raise ValueError("hamiltonian cycle needs p, q >= 2")
    if q % 2:
        raise ValueError("hamiltonian cycle needs q even")
    rows, cols = fine_dims(p, q)
    adj: Dict[Point, Set[Point]] = {(r, c): set()
                                    for r in range(1, rows + 1)
                                    for c in range(1, cols + 1)}

    def link(a: Point, b: Point) -> None:
        adj[a].add(b)
        adj[b].add(a)

    for c in range(1, cols):
        link((1, c), (1, c + 1))
    for c in (1, cols):
        link((1, c), (2, c))
    for r in range(2, rows):
        for c in range(1, cols + 1):
            link((r, c), (r + 1, c))
    for c in range(1, cols, 2):
        link((rows, c), (rows, c + 1))
    for c in range(2, cols - 1, 2):
        link((2, c), (2, c + 1))

    assert all(len(nb) == 2 for nb in adj.values())
    order = [(1, 1), (1, 2)]
    while len(order) < rows * cols:
        nxt = sorted(adj[order[-1]] - {order[-2]})
        assert len(nxt) == 1, "cycle is not hamiltonian"
        order.append(nxt[0])
    assert order[0] in adj[order[-1]]
    return order


def augmented_snaking_grid(p: int, q: int) -> Graph:
    """Union of the snaking grid and the hamiltonian cycle edges."""
    sg = snaking_grid(p, q)
    cyc = hamiltonian_cycle(p, q)
    extra = []
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        extra.append((sg.vertex_at[a], sg.vertex_at[b]))
    merged = set(map(tuple, (sorted(e) for e in sg.graph.edges())))
    merged |= set(map(tuple, (sorted(e) for e in extra)))
    return Graph(sg.graph.vertices, merged)


# ---------------------------------------------------------------------------
# cycles of strict half-graphs

def halfgraph_cycle(layers: int, height: int) -> Tuple[Graph, ContractionSequence]:
    """Cyclically stacked strict half-graphs and their 3-sequence.

    Layer p (0-based) holds vertices at heights 1..height; a vertex at
    height i is adjacent to the next layer's vertices at heights j > i.
    The witness repeatedly contracts the two lowest vertices of every
    layer, shrinking the height by one per sweep, and finally folds the
    remaining all-red cycle.
    """
    if layers < 3 or height < 1:
        raise ValueError("need at least 3 layers and height 1")
    n = layers * height

    def vid(p, i):
        return p * height + i

    edges = []
    for p in range(layers):
        np_ = (p + 1) % layers
        for i in range(1, height + 1):
            for j in range(i + 1, height + 1):
                edges.append((vid(p, i), vid(np_, j)))
    g = Graph(range(1, n + 1), edges)

    steps = []
    z = n + 1
    # stacks of remaining ids per layer, lowest first
    stacks = [[vid(p, i) for i in range(1, height + 1)] for p in range(layers)]
    for _ in range(height - 1):
        for p in range(layers):
            a = stacks[p].pop(0)
            b = stacks[p].pop(0)
            steps.append((z, a, b))
            stacks[p].insert(0, z)
            z += 1
    ring = [stacks[p][0] for p in range(layers)]
    acc = ring[0]
    for other in ring[1:]:
        steps.append((z, acc, other))
        acc = z
        z += 1
    return g, ContractionSequence(n, steps)


# ---------------------------------------------------------------------------
# collapsing grid subdivisions

def grid_subdivision_collapse(
    t: Trigraph,
    embedding: Dict[int, Point],
    n: Optional[int] = None,
    prior: int = 0,
) -> ContractionSequence:
    """A width-4 sequence for a trigraph drawn inside a grid.

    embedding sends each vertex to a distinct fine-grid cell such that
    every (black or red) edge joins neighboring cells.  The sequence
    mimics the full red grid's collapse, merging columns left to right
    (top to bottom within a column) and finishing down the last
    column; steps touching empty cells are simply skipped, and a
    sub-trigraph of the red grid can only do better.

    n/prior allow emitting a suffix that continues an ongoing sequence
    over a larger graph; by default the trigraph is taken as fresh.
    """
    if set(embedding) != t.vertices:
        raise ValueError("embedding must cover exactly the vertices")
    occupied: Dict[Point, int] = {}
    for v, cell in embedding.items():
        if cell in occupied:
            raise ValueError("embedding maps two vertices to one cell")
        if cell[0] < 1 or cell[1] < 1:
            raise ValueError("cells are 1-based")
        occupied[cell] = v
    cells = embedding
    for x in t.vertices:
        for y in t.black[x] | t.red[x]:
            (r1, c1), (r2, c2) = cells[x], cells[y]
            if abs(r1 - r2) + abs(c1 - c2) != 1:
                raise ValueError("edge (%d, %d) is not grid-adjacent" % (x, y))

    if n is None:
        n = len(t.vertices)
        if t.vertices and max(t.vertices) > n:
            raise ValueError("fresh collapse needs vertices 1..n; pass n and prior")
    rows = max((r for r, _ in occupied), default=1)
    cols = max((c for _, c in occupied), default=1)

    steps = []
    z = n + prior + 1

    def merge(src: Point, dst: Point) -> None:
        nonlocal z
        a = occupied.pop(src, None)
        if a is None:
            return
        b = occupied.get(dst)
        if b is None:
            occupied[dst] = a
            return
        steps.append((z, a, b))
        occupied[dst] = z
        z += 1

    for c in range(1, cols):
        for r in range(rows, 0, -1):
            merge((r, c), (r, c + 1))
    for r in range(rows, 1, -1):
        merge((r, cols), (r - 1, cols))
    return ContractionSequence(n, steps, prior)


# ---------------------------------------------------------------------------
# annotated instances (reduction output, composition input)

@dataclass(frozen=True)
class AnnotatedInstance:
    """A graph with a partition that contracts cleanly onto a snaking grid.

    eta maps each part index (0-based) to the fine-grid point its
    contraction occupies; the witness is the partial 4-sequence ending
    exactly in the part partition.
    """

    graph: Graph
    parts: Tuple[FrozenSet[int], ...]
    p: int
    q: int
    eta: Dict[int, Point]
    witness: ContractionSequence

    @property
    def part_count(self) -> int:
        return len(self.parts)


def validate_instance(inst: AnnotatedInstance) -> None:
    """Raise unless the instance satisfies all composition preconditions."""
    validate_partition(inst.graph.vertices, [set(p) for p in inst.parts])
    if inst.q % 2:
        raise ValueError("instance dimensions must have q even")
    sg = snaking_grid(inst.p, inst.q)
    points = set(inst.eta.values())
    if set(inst.eta) != set(range(len(inst.parts))) or len(points) != len(inst.eta) \
            or points != set(sg.vertex_at):
        raise ValueError("eta must map the parts onto the fine grid points bijectively")
    quot = quotient(inst.graph, [set(p) for p in inst.parts])
    for a, b in quot.total_graph().edges():
        u = sg.vertex_at[inst.eta[a - 1]]
        v = sg.vertex_at[inst.eta[b - 1]]
        if not sg.graph.has_edge(u, v):
            raise ValueError("quotient is not a subgraph of the snaking grid")
    rep = verify(inst.graph, inst.witness, bound=4)
    if not rep.ok:
        raise ValueError("witness exceeds red degree 4 at step %d" % rep.violation[0])
    final = final_trigraph(inst.graph, inst.witness)
    if sorted(final.bag_partition()) != sorted(inst.parts):
        raise ValueError("witness does not end at the declared partition")
    for part in inst.parts:
        if not any(inst.graph.closed_neighborhood(v) <= part for v in part):
            raise ValueError("a part lacks a vertex confined to it")


# ---------------------------------------------------------------------------
# formulas with a planar wire layout

@dataclass(frozen=True)
class LayoutClause:
    sign: str  # "+" or "-"
    rank: int
    literals: Tuple[int, int, int]  # negative value = negated variable

    @property
    def variables(self) -> Tuple[int, int, int]:
        return tuple(abs(l) for l in self.literals)

    @property
    def middle(self) -> int:
        return abs(self.literals[1])


@dataclass(frozen=True)
class LayoutFormula:
    """3-SAT instance with variables in a fixed cyclic order.

    Clauses come split into an upper (+) and lower (-) family, each
    with removal ranks: processing a family by rank must only ever
    remove a clause whose outer variables enclose no live variable
    besides its middle, retiring the middle with it.
    """

    n: int
    clauses: Tuple[LayoutClause, ...]

    def __init__(self, n: int, clauses: Iterable[LayoutClause]):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "clauses", tuple(clauses))
        self._validate()

    def _validate(self) -> None:
        if self.n < 1:
            raise ValueError("formula needs at least one variable")
        for cl in self.clauses:
            if cl.sign not in "+-":
                raise ValueError("clause sign must be + or -")
            vs = cl.variables
            if sorted(set(vs)) != list(vs):
                raise ValueError("clause literals must be over distinct increasing variables")
            if vs[0] < 1 or vs[-1] > self.n:
                raise ValueError("clause variable out of range")
        for sign in "+-":
            family = [cl for cl in self.clauses if cl.sign == sign]
            ranks = sorted(cl.rank for cl in family)
            if ranks != list(range(1, len(family) + 1)):
                raise ValueError("ranks of the %s family must be 1..%d" % (sign, len(family)))
            self._check_removal(family)

    def _check_removal(self, family: List[LayoutClause]) -> None:
        family = sorted(family, key=lambda cl: cl.rank)
        for idx, cl in enumerate(family):
            lo, mid, hi = cl.variables
            later = family[idx + 1:]
            for w in range(lo + 1, hi):
                if w == mid:
                    continue
                if any(w in other.variables for other in [cl] + later):
                    raise ValueError(
                        "variable %d blocks removal of the rank-%d %s clause"
                        % (w, cl.rank, cl.sign))
            if any(mid in other.variables for other in later):
                raise ValueError(
                    "middle variable %d reused after rank %d" % (mid, cl.rank))

    def signed(self, sign: str) -> List[LayoutClause]:
        return sorted((cl for cl in self.clauses if cl.sign == sign),
                      key=lambda cl: cl.rank)


def removal_ordering(triples: Sequence[Tuple[int, int, int]]) -> Optional[List[int]]:
    """Greedy removal order (indices into triples) for one clause family.

    Each step removes a clause whose variable span contains no variable
    still carried by another remaining clause, retiring its middle; a
    dead end returns None.
    """
    remaining = list(range(len(triples)))
    gone: Set[int] = set()
    order = []
    while remaining:
        found = None
        for idx in remaining:
            lo, mid, hi = sorted(triples[idx])
            insiders = set(range(lo + 1, hi)) - {mid} - gone
            used = set()
            for other in remaining:
                used |= set(triples[other]) if other != idx else set()
            if insiders & used:
                continue
            if mid in used:
                continue
            found = idx
            break
        if found is None:
            return None
        remaining.remove(found)
        gone.add(sorted(triples[found])[1])
        order.append(found)
    return order


# ---------------------------------------------------------------------------
# the reduction

_MEMBERS = {"initial": ("top", "bot", "d"),
            "regular": ("top", "bot", "d", "t", "f"),
            "clause": ("c", "z"),
            "dummy": ("z",)}


@dataclass
class PlacedGadget:
    kind: str
    variable: Optional[int] = None
    parent: Optional[Point] = None
    children: int = 0
    members: Dict[str, int] = field(default_factory=dict)


@dataclass(frozen=True)
class ReducedFormula:
    instance: AnnotatedInstance
    gadgets: Dict[Point, PlacedGadget]
    formula: LayoutFormula
    variable_row: int


def column_of(variable: int) -> int:
    return 3 * (variable - 1) + 1


def reduce_3sat(f: LayoutFormula) -> ReducedFormula:
    """Build the Dominating Set instance with its grid annotation.

    One gadget per fine point of the (m+1) x n' snaking grid (n' the
    variable count padded to even): initial triangles on the variable
    row, bull-shaped wire gadgets snaking out to the clause positions,
    a two-vertex gadget per clause, isolated dummies elsewhere.  The
    witness contracts parts to single vertices with red degree at
    most 4.
    """
    n_pad = f.n if f.n % 2 == 0 else f.n + 1
    minus = f.signed("-")
    plus = f.signed("+")
    m = len(plus) + len(minus)
    rows = 3 * m + 1
    cols = 3 * n_pad - 2
    vrow = 3 * len(minus) + 1

    occ: Dict[Point, PlacedGadget] = {}

    def place(pt: Point, kind: str, variable=None, parent=None) -> PlacedGadget:
        r, c = pt
        if not (1 <= r <= rows and 1 <= c <= cols):
            raise ValueError("gadget placed outside the grid at %r" % (pt,))
        if pt in occ:
            raise ValueError("wire collision at %r" % (pt,))
        gadget = PlacedGadget(kind, variable, parent)
        occ[pt] = gadget
        if parent is not None:
            occ[parent].children += 1
        return gadget

    for v in range(1, n_pad + 1):
        place((vrow, column_of(v)), "initial", v)

    # trunk tips per variable and side: +1 grows upward, -1 downward
    tips = {(v, d): vrow for v in range(1, n_pad + 1) for d in (1, -1)}

    def extend_trunk(v: int, d: int, row: int) -> None:
        c = column_of(v)
        while (d > 0 and tips[v, d] < row) or (d < 0 and tips[v, d] > row):
            nxt = tips[v, d] + d
            # a branch may already have dipped onto this point; adopt it
            if (nxt, c) in occ:
                if occ[nxt, c].variable != v:
                    raise ValueError("wire collision at %r" % ((nxt, c),))
            else:
                place((nxt, c), "regular", v, parent=(tips[v, d], c))
            tips[v, d] = nxt

    def walk(v: int, row: int, target: Point, rightward: bool) -> None:
        """Snake v's wire along rows (row, row-1) until target is placed."""
        cur = (row, column_of(v))
        assert cur in occ and occ[cur].variable == v
        while True:
            r, c = cur
            if rightward:
                if r == row:
                    nxt = (row, c + 1) if (row == 1 or c % 2 == 1) else (row - 1, c)
                else:
                    nxt = (row - 1, c + 1) if c % 2 == 0 else (row, c)
            else:
                if r == row:
                    nxt = (row, c - 1) if (row == 1 or c % 2 == 0) else (row - 1, c)
                else:
                    nxt = (row - 1, c - 1) if c % 2 == 1 else (row, c)
            if nxt in occ:
                here = occ[nxt]
                if here.variable != v or here.kind not in ("initial", "regular"):
                    raise ValueError("wire collision at %r" % (nxt,))
                cur = nxt
                continue
            place(nxt, "regular", v, parent=cur)
            if nxt == target:
                return
            cur = nxt

    links: List[Tuple[Point, Point, int]] = []  # clause point, gadget point, literal

    for sign, family in (("+", plus), ("-", minus)):
        up = 1 if sign == "+" else -1
        for cl in family:
            nominal = vrow + 3 * cl.rank * up
            lo, mid, hi = cl.variables
            cm = column_of(mid)
            pc = (nominal - 1, cm) if sign == "+" else (nominal, cm)
            extend_trunk(mid, up, pc[0] - 1 if sign == "+" else pc[0] + 1)
            mid_link = (pc[0] - 1, cm) if sign == "+" else (pc[0] + 1, cm)
            if sign == "+":
                if cm % 2 == 0:
                    lo_link, hi_link = (nominal, cm), (nominal - 1, cm + 1)
                else:
                    lo_link, hi_link = (nominal - 1, cm - 1), (nominal, cm)
            elif nominal == 1:
                # bottom row: no row below, all horizontals available
                lo_link, hi_link = (1, cm - 1), (1, cm + 1)
            else:
                if cm % 2 == 0:
                    lo_link, hi_link = (nominal, cm - 1), (nominal - 1, cm)
                else:
                    lo_link, hi_link = (nominal - 1, cm), (nominal, cm + 1)
            place(pc, "clause")
            for var, link in ((lo, lo_link), (hi, hi_link)):
                extend_trunk(var, up, nominal)
                walk(var, nominal, link, rightward=var < mid)
            for var, link, lit in ((lo, lo_link, cl.literals[0]),
                                   (mid, mid_link, cl.literals[1]),
                                   (hi, hi_link, cl.literals[2])):
                assert occ[link].variable == var
                links.append((pc, link, lit))

    for r in range(1, rows + 1):
        for c in range(1, cols + 1):
            if (r, c) not in occ:
                place((r, c), "dummy")

    # vertex ids, parts, and eta in row-major point order
    edges: List[Tuple[int, int]] = []
    parts: List[FrozenSet[int]] = []
    eta: Dict[int, Point] = {}
    nxt_id = 1
    order = [(r, c) for r in range(1, rows + 1) for c in range(1, cols + 1)]
    for pt in order:
        gadget = occ[pt]
        for name in _MEMBERS[gadget.kind]:
            gadget.members[name] = nxt_id
            nxt_id += 1
        mem = gadget.members
        if gadget.kind in ("initial", "regular"):
            edges += [(mem["top"], mem["bot"]), (mem["top"], mem["d"]),
                      (mem["bot"], mem["d"])]
        if gadget.kind == "regular":
            edges += [(mem["top"], mem["t"]), (mem["bot"], mem["f"])]
        eta[len(parts)] = pt
        parts.append(frozenset(mem.values()))
    for pt in order:
        gadget = occ[pt]
        if gadget.parent is not None:
            par = occ[gadget.parent].members
            edges += [(par["top"], gadget.members["f"]),
                      (par["bot"], gadget.members["t"])]
    for pc, link, lit in links:
        end = occ[link].members["top" if lit > 0 else "bot"]
        edges.append((occ[pc].members["c"], end))

    g = Graph(range(1, nxt_id), edges)
    witness = _quotient_witness(g, occ, order)
    inst = AnnotatedInstance(g, tuple(parts), m + 1, n_pad, eta, witness)
    return ReducedFormula(inst, occ, f, vrow)


def _quotient_witness(g: Graph, occ: Dict[Point, PlacedGadget],
                      order: List[Point]) -> ContractionSequence:
    """Contract every part to one vertex, red degree at most 4.

    Wire gadgets linked to at most two other wire gadgets go first
    (top, d, t, bot, f in that order, one red edge internally); then
    initial triangles and clause pairs; junction gadgets last, when
    their three wire neighbors are single vertices already.
    """
    steps: List[Tuple[int, int, int]] = []
    z = g.n + 1
    live: Dict[Point, int] = {}

    def fold(pt: Point, names: Sequence[str]) -> None:
        nonlocal z
        mem = occ[pt].members
        acc = mem[names[0]]
        for name in names[1:]:
            steps.append((z, acc, mem[name]))
            acc = z
            z += 1
        live[pt] = acc

    def wire_neighbors(pt: Point) -> int:
        gadget = occ[pt]
        return gadget.children + (0 if gadget.parent is None else 1)

    for pt in order:
        if occ[pt].kind == "regular" and wire_neighbors(pt) <= 2:
            fold(pt, ("top", "d", "t", "bot", "f"))
    for pt in order:
        if occ[pt].kind == "initial":
            fold(pt, ("top", "d", "bot"))
        elif occ[pt].kind == "clause":
            fold(pt, ("c", "z"))
    for pt in order:
        if occ[pt].kind == "regular" and wire_neighbors(pt) > 2:
            assert wire_neighbors(pt) == 3, "wire gadget with too many neighbors"
            fold(pt, ("top", "d", "t", "bot", "f"))
    return ContractionSequence(g.n, steps)


def lift_assignment(red: ReducedFormula, assignment: Dict[int, bool]) -> Set[int]:
    """The dominating set induced by a truth assignment.

    Picks top of every gadget of a true variable's wire, bot for false
    ones (the padding variable defaults to true), and every isolated
    vertex.
    """
    picked = set()
    for gadget in red.gadgets.values():
        if gadget.kind in ("initial", "regular"):
            value = assignment.get(gadget.variable, True)
            picked.add(gadget.members["top" if value else "bot"])
        else:
            picked.add(gadget.members["z"])
    return picked


# ---------------------------------------------------------------------------
# bare wires

@dataclass(frozen=True)
class Wire:
    graph: Graph
    parts: Tuple[FrozenSet[int], ...]
    gadgets: Tuple[Dict[str, int], ...]


def variable_wire(parents: Sequence[Optional[int]]) -> Wire:
    """A single variable wire shaped by the parent list.

    parents[0] must be None (the root triangle); every later entry
    points at an earlier gadget, which propagates its truth value down
    the tree.
    """
    if not parents or parents[0] is not None:
        raise ValueError("first gadget is the root and has no parent")
    for i, par in enumerate(parents[1:], start=1):
        if par is None or not 0 <= par < i:
            raise ValueError("parent of gadget %d must come earlier" % i)
    gadgets: List[Dict[str, int]] = []
    edges = []
    nxt = 1
    for i, par in enumerate(parents):
        names = ("top", "bot", "d") if i == 0 else ("top", "bot", "d", "t", "f")
        mem = {name: nxt + k for k, name in enumerate(names)}
        nxt += len(names)
        edges += [(mem["top"], mem["bot"]), (mem["top"], mem["d"]),
                  (mem["bot"], mem["d"])]
        if i > 0:
            edges += [(mem["top"], mem["t"]), (mem["bot"], mem["f"]),
                      (gadgets[par]["top"], mem["f"]),
                      (gadgets[par]["bot"], mem["t"])]
        gadgets.append(mem)
    g = Graph(range(1, nxt), edges)
    parts = tuple(frozenset(mem.values()) for mem in gadgets)
    return Wire(g, parts, tuple(gadgets))