"""Exhaustive ground-truth solvers at desk scale.

Everything here is deliberately small and exact: an iterative-deepening
search for exact twin-width, branch-and-bound for Minimum Dominating
Set (with an optional part-transversal mode), subset enumeration for
Minimum Connected Vertex Cover, and an augmenting-path feasibility
check for capacitated covers.  Sizes are capped; exceeding a cap is an
error rather than silent slowness.  TWW_SIZE_CAP in the environment
overrides every cap at once.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .trigraph import Graph, validate_partition
from .sequence import ContractionSequence

TWW_CAP = 12
SEARCH_CAP = 24


def _cap(default: int, override: Optional[int]) -> int:
    if override is not None:
        return override
    env = os.environ.get("TWW_SIZE_CAP")
    return int(env) if env else default


@dataclass(frozen=True)
class CapacitatedGraph:
    graph: Graph
    cap: Dict[int, int]

    def __post_init__(self):
        # negative capacities are allowed (reduction rules decrement
        # freely); feasibility treats them as zero
        if set(self.cap) != self.graph.vertices:
            raise ValueError("capacity function must cover exactly the vertices")


# ---------------------------------------------------------------------------
# exact twin-width

def _part_tables(order: List[int], g: Graph) -> Dict[int, int]:
    idx = {v: i for i, v in enumerate(order)}
    return {v: sum(1 << idx[u] for u in g.adj[v]) for v in order}


def twinwidth_at_most(g: Graph, d: int, cap: Optional[int] = None) -> Optional[ContractionSequence]:
    """A witness d-sequence for g, or None when tww(g) > d.

    Search over vertex-partition states (tuples of bitmasks over the
    original vertices) with a failed-state memo.  Candidate merges are
    tried in order of smallest contained vertex, so the returned
    witness is deterministic.
    """
    n = g.n
    limit = _cap(TWW_CAP, cap)
    if n > limit:
        raise ValueError("graph has %d vertices, twin-width cap is %d" % (n, limit))
    if g.vertices != set(range(1, n + 1)):
        raise ValueError("twinwidth_at_most needs vertices 1..n; relabel first")
    if n == 1:
        return ContractionSequence(1, [])

    order = list(range(1, n + 1))
    adjbit = _part_tables(order, g)
    # a part is (mask, union of member adjacencies, intersection of them)
    parts0 = tuple(sorted((1 << i, adjbit[i + 1], adjbit[i + 1]) for i in range(n)))

    def homogeneous(a, b) -> bool:
        return (b[0] & a[1]) == 0 or (b[0] & ~a[2]) == 0

    def red_degree_ok(parts) -> bool:
        k = len(parts)
        deg = [0] * k
        for i in range(k):
            for j in range(i + 1, k):
                if not homogeneous(parts[i], parts[j]):
                    deg[i] += 1
                    deg[j] += 1
                    if deg[i] > d or deg[j] > d:
                        return False
        return True

    failed: Set[Tuple[int, ...]] = set()

    def search(parts) -> Optional[List[Tuple[int, int]]]:
        if len(parts) == 1:
            return []
        key = tuple(p[0] for p in parts)
        if key in failed:
            return None
        for i in range(len(parts)):
            for j in range(i + 1, len(parts)):
                a, b = parts[i], parts[j]
                merged = (a[0] | b[0], a[1] | b[1], a[2] & b[2])
                rest = tuple(p for t, p in enumerate(parts) if t != i and t != j)
                nxt = tuple(sorted(rest + (merged,)))
                if red_degree_ok(nxt):
                    tail = search(nxt)
                    if tail is not None:
                        return [(a[0], b[0])] + tail
        failed.add(key)
        return None

    merges = search(parts0)
    if merges is None:
        return None
    # translate part-mask merges into (z, u, v) steps
    ids = {1 << i: i + 1 for i in range(n)}
    steps = []
    nxt = n + 1
    for ma, mb in merges:
        steps.append((nxt, ids.pop(ma), ids.pop(mb)))
        ids[ma | mb] = nxt
        nxt += 1
    return ContractionSequence(n, steps)


def exact_twinwidth(g: Graph, cap: Optional[int] = None) -> Tuple[int, ContractionSequence]:
    """Exact twin-width with one optimal witness sequence."""
    for d in range(0, max(g.n, 1)):
        seq = twinwidth_at_most(g, d, cap=cap)
        if seq is not None:
            return d, seq
    raise AssertionError("unreachable: every graph has an (n-1)-sequence")


# ---------------------------------------------------------------------------
# dominating set

def is_dominating_set(g: Graph, s) -> bool:
    s = set(s)
    covered = set(s)
    for v in s:
        covered |= g.adj[v]
    return covered == g.vertices


def min_dominating_set(
    g: Graph,
    forced_hit_parts: Optional[Sequence[Set[int]]] = None,
    cap: Optional[int] = None,
    max_size: Optional[int] = None,
) -> Tuple[Optional[int], Optional[FrozenSet[int]]]:
    """Optimum dominating set size and one witness.

    With forced_hit_parts the search is restricted to sets meeting
    every part (exact on instances where every dominating set does so
    anyway); parts whose budget is a single vertex get unit propagation
    from vertices confined to one part.  max_size turns the search into
    a bounded one: (None, None) means nothing within the budget.
    """
    if forced_hit_parts is not None:
        return _forced_min_ds(g, forced_hit_parts, max_size)
    limit = _cap(SEARCH_CAP, cap)
    if g.n > limit:
        raise ValueError("graph has %d vertices, search cap is %d" % (g.n, limit))
    if g.n == 0:
        return 0, frozenset()

    order = sorted(g.vertices)
    idx = {v: i for i, v in enumerate(order)}
    closed = [0] * g.n
    for v in order:
        closed[idx[v]] = (1 << idx[v]) | sum(1 << idx[u] for u in g.adj[v])
    full = (1 << g.n) - 1

    best_set: List[int] = list(range(g.n))  # V always dominates
    best = [g.n]

    def packing_bound(undominated: int) -> int:
        # vertices with pairwise disjoint closed neighborhoods need
        # pairwise distinct dominators
        taken = 0
        count = 0
        m = undominated
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            if closed[i] & taken == 0:
                taken |= closed[i]
                count += 1
        return count

    def bb(dominated: int, chosen: List[int]) -> None:
        if dominated == full:
            if len(chosen) < best[0]:
                best[0] = len(chosen)
                best_set[:] = chosen
            return
        if len(chosen) + packing_bound(full & ~dominated) >= best[0]:
            return
        # branch on the undominated vertex with the fewest dominators
        pick = -1
        pick_opts = None
        m = full & ~dominated
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            opts = bin(closed[i]).count("1")
            if pick < 0 or opts < pick_opts:
                pick, pick_opts = i, opts
        cands = closed[pick]
        while cands:
            i = (cands & -cands).bit_length() - 1
            cands &= cands - 1
            chosen.append(i)
            bb(dominated | closed[i], chosen)
            chosen.pop()

    bb(0, [])
    if max_size is not None and best[0] > max_size:
        return None, None
    return best[0], frozenset(order[i] for i in best_set)


def all_min_dominating_sets(g: Graph, cap: Optional[int] = None) -> List[FrozenSet[int]]:
    """Every minimum dominating set, enumerated exhaustively."""
    size, _ = min_dominating_set(g, cap=cap)
    out = []
    for combo in itertools.combinations(sorted(g.vertices), size):
        if is_dominating_set(g, combo):
            out.append(frozenset(combo))
    return out


def _forced_min_ds(g, parts, max_size):
    sets = [set(p) for p in parts]
    validate_partition(g.vertices, sets)
    n_parts = len(sets)
    hi = g.n if max_size is None else min(max_size, g.n)
    for total in range(n_parts, hi + 1):
        extra = total - n_parts
        if extra == 0:
            sol = _transversal_ds(g, sets, [1] * n_parts)
            if sol is not None:
                return total, frozenset(sol)
            continue
        # distribute the extra picks over parts (small extras only)
        for spread in itertools.combinations_with_replacement(range(n_parts), extra):
            sizes = [1] * n_parts
            ok = True
            for j in spread:
                sizes[j] += 1
                if sizes[j] > len(sets[j]):
                    ok = False
            if not ok:
                continue
            sol = _transversal_ds(g, sets, sizes)
            if sol is not None:
                return total, frozenset(sol)
    return None, None


def _transversal_ds(g: Graph, sets: List[Set[int]], sizes: List[int]) -> Optional[Set[int]]:
    """A dominating set using exactly sizes[j] vertices of part j, or None.

    Backtracking over parts with unit propagation: a vertex whose
    closed neighborhood lies within a single undecided unit part pins
    that part's candidates.
    """
    order = sorted(g.vertices)
    idx = {v: i for i, v in enumerate(order)}
    closed = {v: (1 << idx[v]) | sum(1 << idx[u] for u in g.adj[v]) for v in order}
    full = (1 << len(order)) - 1
    part_of = {}
    for j, p in enumerate(sets):
        for v in p:
            part_of[v] = j
    part_mask = [sum(1 << idx[v] for v in p) for p in sets]

    cand = list(part_mask)
    # static propagation from confined vertices into unit parts
    for v in order:
        j = part_of[v]
        if sizes[j] == 1 and closed[v] & ~part_mask[j] == 0:
            cand[j] &= closed[v]
            if cand[j] == 0:
                return None

    def bits(m):
        while m:
            b = m & -m
            yield b.bit_length() - 1
            m &= m - 1

    def solve(cand, dominated, undecided, picked):
        if not undecided:
            return list(picked) if dominated == full else None
        # propagate to fixpoint
        cand = list(cand)
        changed = True
        while changed:
            changed = False
            avail = 0
            for j in undecided:
                avail |= cand[j]
            need = full & ~dominated
            for i in bits(need):
                reach = closed[order[i]] & avail
                if reach == 0:
                    return None
                homes = {part_of[order[b]] for b in bits(reach)}
                if len(homes) == 1:
                    j = homes.pop()
                    if j in undecided and sizes[j] == 1 and cand[j] & ~closed[order[i]]:
                        cand[j] &= closed[order[i]]
                        if cand[j] == 0:
                            return None
                        changed = True
        # MRV part selection
        j = min(undecided, key=lambda j: (bin(cand[j]).count("1"), j))
        rest = [x for x in undecided if x != j]
        members = sorted(order[b] for b in bits(cand[j]))
        for combo in itertools.combinations(members, sizes[j]):
            got = dominated
            for v in combo:
                got |= closed[v]
            res = solve(cand, got, rest, picked + list(combo))
            if res is not None:
                return res
        return None

    res = solve(cand, 0, list(range(len(sets))), [])
    return set(res) if res is not None else None


# ---------------------------------------------------------------------------
# connected vertex cover

def is_vertex_cover(g: Graph, s) -> bool:
    s = set(s)
    return all(u in s or v in s for u, v in g.edges())


def min_connected_vertex_cover(
    g: Graph, cap: Optional[int] = None
) -> Optional[Tuple[int, FrozenSet[int]]]:
    """Optimum connected vertex cover, or None when none exists.

    Infeasible exactly when at least two components contain edges: a
    connected cover cannot straddle components.  Isolated vertices are
    ignored.  Size-ordered subset enumeration; fine at desk scale.
    """
    limit = _cap(SEARCH_CAP, cap)
    if g.n > limit:
        raise ValueError("graph has %d vertices, search cap is %d" % (g.n, limit))
    edgeful = [c for c in g.components() if any(g.adj[v] & c for v in c)]
    if len(edgeful) > 1:
        return None
    if not edgeful:
        return 0, frozenset()
    comp = sorted(edgeful[0])
    sub = g.induced(comp)

    def connected(s: Set[int]) -> bool:
        start = next(iter(s))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in sub.adj[x] & s:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen == s

    for k in range(1, len(comp) + 1):
        for combo in itertools.combinations(comp, k):
            s = set(combo)
            if is_vertex_cover(sub, s) and connected(s):
                return k, frozenset(s)
    raise AssertionError("unreachable: the whole component is a connected cover")


# ---------------------------------------------------------------------------
# capacitated vertex cover

def capacitated_vc_feasible(cg: CapacitatedGraph, x) -> bool:
    """Can every edge be assigned to a covering endpoint within capacity?

    Kuhn-style augmenting assignment; negative capacities (legal
    bookkeeping in the kernel rules) count as zero.
    """
    x = set(x)
    g = cg.graph
    edges = list(g.edges())
    for u, v in edges:
        if u not in x and v not in x:
            return False
    cap = {v: max(0, cg.cap[v]) for v in x}
    load: Dict[int, List[Tuple[int, int]]] = {v: [] for v in x}

    def augment(e: Tuple[int, int], visited: Set[int]) -> bool:
        for w in sorted(set(e) & x):
            if w in visited:
                continue
            visited.add(w)
            if len(load[w]) < cap[w]:
                load[w].append(e)
                return True
            for i, e2 in enumerate(load[w]):
                if augment(e2, visited):
                    load[w][i] = e
                    return True
        return False

    for e in edges:
        if not augment(e, set()):
            return False
    return True


def min_capacitated_vc(
    cg: CapacitatedGraph, k: Optional[int] = None, cap: Optional[int] = None
) -> Optional[FrozenSet[int]]:
    """Smallest capacitated vertex cover of size at most k, or None.

    k = None searches all sizes, so the result (if any) is a true
    minimum.
    """
    g = cg.graph
    limit = _cap(SEARCH_CAP, cap)
    if g.n > limit:
        raise ValueError("graph has %d vertices, search cap is %d" % (g.n, limit))
    hi = g.n if k is None else min(k, g.n)
    order = sorted(g.vertices)
    for size in range(0, hi + 1):
        for combo in itertools.combinations(order, size):
            if capacitated_vc_feasible(cg, combo):
                return frozenset(combo)
    return None
