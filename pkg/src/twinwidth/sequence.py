"""Contraction sequences and their verification.

A sequence for an n-vertex graph lists steps (z, u, v): contract the
live vertices u and v into the fresh vertex z.  Fresh ids continue the
numbering, so step i (0-based) of a sequence on 1..n must create
z = n + i + 1.  A full sequence has n - 1 steps and ends in a single
vertex; shorter sequences are partial and are the currency of the
composition machinery.

verify() replays a sequence and reports the maximum red degree seen in
any intermediate trigraph (the width of the sequence), together with
the first step attaining it and, when a bound is given, the first
violating (step, vertex, degree).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

from .trigraph import Graph, Trigraph, contract


@dataclass(frozen=True)
class ContractionSequence:
    """Steps (z, u, v) over a graph whose original vertices are 1..n.

    prior > 0 marks a suffix: the sequence resumes after that many
    earlier contractions, so its fresh ids start at n + prior + 1 and
    it replays from the matching intermediate trigraph.  Liveness of
    the inherited ids can only be checked fully once the pieces are
    concatenated back to prior = 0.
    """

    n: int
    steps: Tuple[Tuple[int, int, int], ...]
    prior: int = 0

    def __init__(self, n: int, steps, prior: int = 0):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "steps", tuple((z, u, v) for z, u, v in steps))
        object.__setattr__(self, "prior", prior)
        self._validate()

    def _validate(self) -> None:
        if self.n < 1:
            raise ValueError("sequence needs at least one vertex")
        if not 0 <= self.prior <= self.n - 1:
            raise ValueError("prior contraction count out of range")
        if self.prior + len(self.steps) > self.n - 1:
            raise ValueError("more steps than a full sequence allows")
        if self.prior == 0:
            live = set(range(1, self.n + 1))
            for i, (z, u, v) in enumerate(self.steps):
                expect = self.n + i + 1
                if z != expect:
                    raise ValueError("step %d creates %d, expected fresh id %d" % (i, z, expect))
                if u == v or u not in live or v not in live:
                    raise ValueError("step %d contracts (%d, %d) which are not two live vertices" % (i, u, v))
                live -= {u, v}
                live.add(z)
        else:
            retired = set()
            for i, (z, u, v) in enumerate(self.steps):
                expect = self.n + self.prior + i + 1
                if z != expect:
                    raise ValueError("step %d creates %d, expected fresh id %d" % (i, z, expect))
                if u == v or u in retired or v in retired or not 1 <= u < z or not 1 <= v < z:
                    raise ValueError("step %d contracts (%d, %d) which are not two live vertices" % (i, u, v))
                retired |= {u, v}

    @property
    def is_full(self) -> bool:
        return self.prior + len(self.steps) == self.n - 1

    def prefix(self, k: int) -> "ContractionSequence":
        return ContractionSequence(self.n, self.steps[:k], self.prior)

    def __len__(self) -> int:
        return len(self.steps)


def concat(first: ContractionSequence, second: ContractionSequence) -> ContractionSequence:
    """Join two sequences over the same original vertex set.

    second must be the suffix picking up where first stopped: same n,
    prior equal to the number of steps already taken, fresh numbering
    continuing seamlessly.  The combined sequence is revalidated, so a
    suffix touching vertices first retired is rejected here.
    """
    if first.n != second.n:
        raise ValueError("sequences disagree on n")
    if second.prior != first.prior + len(first.steps):
        raise ValueError("second sequence does not continue where the first stopped")
    return ContractionSequence(first.n, first.steps + second.steps, first.prior)


@dataclass(frozen=True)
class WidthReport:
    """Outcome of verifying a sequence.

    width is the maximum red degree over all intermediate trigraphs,
    argmax_step the first step index after which it is attained.  Step
    indices are absolute (a suffix starting after k prior steps counts
    from k); the starting trigraph itself is step prior - 1, so -1 for
    a from-scratch sequence.  When a bound was requested and exceeded,
    violation holds the first offending (step, vertex, degree).
    """

    width: int
    argmax_step: int
    violation: Optional[Tuple[int, int, int]] = None

    @property
    def ok(self) -> bool:
        return self.violation is None


def _start_trigraph(g: Union[Graph, Trigraph], seq: ContractionSequence) -> Trigraph:
    if isinstance(g, Trigraph):
        t = g.copy()
    else:
        t = Trigraph.from_graph(g)
    if seq.prior == 0:
        if t.vertices != set(range(1, seq.n + 1)):
            raise ValueError("graph vertices must be exactly 1..%d" % seq.n)
    else:
        # a suffix replays from an intermediate trigraph: right vertex
        # count, ids within the range the prior steps could have made
        if len(t.vertices) != seq.n - seq.prior:
            raise ValueError("starting trigraph has %d vertices, suffix expects %d"
                             % (len(t.vertices), seq.n - seq.prior))
        if t.vertices and max(t.vertices) > seq.n + seq.prior:
            raise ValueError("starting trigraph uses ids beyond the prior contractions")
    return t


def replay(g: Union[Graph, Trigraph], seq: ContractionSequence) -> List[Trigraph]:
    """All intermediate trigraphs, initial state included (len(steps)+1 entries)."""
    t = _start_trigraph(g, seq)
    out = [t]
    for z, u, v in seq.steps:
        t = contract(t, u, v, z)
        out.append(t)
    return out


def verify(
    g: Union[Graph, Trigraph],
    seq: ContractionSequence,
    bound: Optional[int] = None,
    full_recompute: bool = False,
) -> WidthReport:
    """Replay seq on g and measure its width.

    Red degrees are tracked incrementally: after contracting u, v into
    z, only z and its neighbourhood can change degree.  full_recompute
    cross-checks every step against a from-scratch maximum and exists
    for the test suite.
    """
    t = _start_trigraph(g, seq)
    width = t.max_red_degree()
    argmax = seq.prior - 1
    violation: Optional[Tuple[int, int, int]] = None

    def scan(step: int, candidates) -> None:
        nonlocal width, argmax, violation
        for x in sorted(candidates):
            d = len(t.red[x])
            if d > width:
                width = d
                argmax = step
            if bound is not None and d > bound and violation is None:
                violation = (step, x, d)

    if bound is not None and width > bound:
        for x in sorted(t.vertices):
            if len(t.red[x]) > bound:
                violation = (seq.prior - 1, x, len(t.red[x]))
                break
    for i, (z, u, v) in enumerate(seq.steps):
        touched_before = (t.black[u] | t.red[u] | t.black[v] | t.red[v]) - {u, v}
        t = contract(t, u, v, z)
        scan(seq.prior + i, touched_before | {z})
        if full_recompute:
            assert t.max_red_degree() <= width, "incremental width tracking missed a vertex"
    return WidthReport(width, argmax, violation)


def final_trigraph(g: Union[Graph, Trigraph], seq: ContractionSequence) -> Trigraph:
    t = _start_trigraph(g, seq)
    for z, u, v in seq.steps:
        t = contract(t, u, v, z)
    return t


def remap(seq: ContractionSequence, mapping) -> ContractionSequence:
    """Apply a vertex renaming to every step; mapping must cover all ids used."""
    steps = [(mapping[z], mapping[u], mapping[v]) for z, u, v in seq.steps]
    n = seq.n
    originals = sorted(mapping[x] for x in range(1, n + 1))
    if originals != list(range(1, n + 1)):
        raise ValueError("remap must send originals onto 1..n")
    return ContractionSequence(n, steps)
