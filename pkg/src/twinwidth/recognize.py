"""Recognition of twin-width 0 and twin-width at most 1.

Width 0 is the cograph case: recurse along the maximal modular
partition and fail as soon as a level has both the graph and its
complement connected.  Width 1 recurses the same way (width composes
over modules with the quotient) and handles the prime quotients with a
deterministic driver: guess the first contraction among pairs creating
exactly one red edge, then repeatedly either perform a safe
contraction (one that results in the trigraph minus a vertex) or
contract the unique red edge.  A prime graph of width 1 keeps exactly
one red edge in every intermediate trigraph, so the driver never needs
to branch after the initial guess.

Plans are built as (label, label) merge pairs, where a bag is labelled
by its smallest original vertex, and materialized into a single
contraction sequence at the end.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .trigraph import Graph, Trigraph, contract
from .sequence import ContractionSequence, replay
from .modular import maximal_modular_partition


@dataclass(frozen=True)
class RecognitionResult:
    verdict: str  # "tww0" | "above0" | "tww1" | "above1"
    witness: Optional[ContractionSequence] = None


class _TooWide(Exception):
    pass


def _materialize(n: int, pairs: List[Tuple[int, int]]) -> ContractionSequence:
    """Turn merge pairs over bag labels into numbered steps."""
    cur = {v: v for v in range(1, n + 1)}
    steps = []
    z = n + 1
    for a, b in pairs:
        steps.append((z, cur[a], cur[b]))
        keep, drop = min(a, b), max(a, b)
        cur[keep] = z
        del cur[drop]
        z += 1
    return ContractionSequence(n, steps)


def _twin_chain(reps: List[int]) -> List[Tuple[int, int]]:
    # reps come sorted; the accumulating bag keeps the smallest label
    return [(reps[0], r) for r in reps[1:]]


def _plan_tww0(g: Graph) -> List[Tuple[int, int]]:
    if g.n == 1:
        return []
    mp = maximal_modular_partition(g)
    if mp.kind == "maximal":
        raise _TooWide
    pairs = []
    for part in mp.parts:
        pairs += _plan_tww0(g.induced(part))
    pairs += _twin_chain([min(p) for p in mp.parts])
    return pairs


def recognize_tww0(g: Graph) -> RecognitionResult:
    """Cograph test with a 0-sequence witness."""
    try:
        pairs = _plan_tww0(g)
    except _TooWide:
        return RecognitionResult("above0")
    return RecognitionResult("tww0", _materialize(g.n, pairs))


def safe_contractions(t: Trigraph) -> List[Tuple[int, int]]:
    """Pairs (w, red endpoint) whose contraction just deletes w.

    t must have exactly one red edge.  A contraction is safe when the
    result coincides with the induced subtrigraph on V minus w, the
    merged vertex playing the endpoint's role.
    """
    reds = t.red_edges()
    if len(reds) != 1:
        raise ValueError("safe contractions are defined for exactly one red edge")
    a, b = reds[0]
    out = []
    for w in sorted(t.vertices - {a, b}):
        for partner in (a, b):
            if _contraction_is_deletion(t, w, partner):
                out.append((w, partner))
    return out


def _contraction_is_deletion(t: Trigraph, w: int, partner: int) -> bool:
    after = contract(t, w, partner)
    z = max(after.vertices)
    expect = t.induced(t.vertices - {w})

    def m(x):
        return z if x == partner else x

    for x in expect.vertices:
        if {m(y) for y in expect.black[x]} != after.black[m(x)]:
            return False
        if {m(y) for y in expect.red[x]} != after.red[m(x)]:
            return False
    return True


def _drive(t0: Trigraph, labels: Dict[int, int], u: int, v: int) -> Optional[List[Tuple[int, int]]]:
    """Extend the guessed first contraction of a prime graph to the end."""
    label = dict(labels)
    pairs = [(label[u], label[v])]
    t = contract(t0, u, v)
    label[max(t.vertices)] = min(label[u], label[v])
    while len(t.vertices) > 1:
        reds = t.red_edges()
        if len(reds) != 1:
            return None
        safe = safe_contractions(t)
        if safe:
            w, partner = safe[0]
        else:
            w, partner = reds[0]
        nxt = contract(t, w, partner)
        label[max(nxt.vertices)] = min(label[w], label[partner])
        pairs.append((label[w], label[partner]))
        t = nxt
    return pairs


def _plan_prime(h: Graph) -> List[Tuple[int, int]]:
    """1-sequence plan for a prime graph, or _TooWide.

    The n <= 3 branches are defensive; callers only reach this with a
    prime quotient, which has at least four vertices.
    """
    verts = sorted(h.vertices)
    if h.n == 1:
        return []
    if h.n <= 3:
        for a, b in itertools.combinations(verts, 2):
            if h.adj[a] - {b} == h.adj[b] - {a}:
                return [(a, b)] + _plan_prime(h.without({b}))
        raise _TooWide
    t0 = Trigraph.from_graph(h)
    labels = {x: x for x in h.vertices}
    for u, v in itertools.combinations(verts, 2):
        if len((h.adj[u] ^ h.adj[v]) - {u, v}) != 1:
            continue
        pairs = _drive(t0, labels, u, v)
        if pairs is not None:
            return pairs
    raise _TooWide


def _plan_tww1(g: Graph) -> List[Tuple[int, int]]:
    if g.n == 1:
        return []
    mp = maximal_modular_partition(g)
    if mp.kind == "maximal" and mp.is_trivial:
        return _plan_prime(g)
    pairs = []
    for part in mp.parts:
        pairs += _plan_tww1(g.induced(part))
    reps = [min(p) for p in mp.parts]
    if mp.kind == "maximal":
        # prime quotient over the collapsed parts; adjacency between
        # modules is uniform, so any representatives carry it
        edges = [(a, b) for a, b in itertools.combinations(reps, 2) if g.has_edge(a, b)]
        pairs += _plan_prime(Graph(reps, edges))
    else:
        pairs += _twin_chain(reps)
    return pairs


def recognize_tww1(g: Graph) -> RecognitionResult:
    """Width-at-most-1 test; reports tww0 when the graph is a cograph."""
    zero = recognize_tww0(g)
    if zero.verdict == "tww0":
        return zero
    try:
        pairs = _plan_tww1(g)
    except _TooWide:
        return RecognitionResult("above1")
    seq = _materialize(g.n, pairs)
    for t in replay(g, seq):
        assert len(t.red_edges()) <= 1, "recognition produced a bad witness"
    return RecognitionResult("tww1", seq)