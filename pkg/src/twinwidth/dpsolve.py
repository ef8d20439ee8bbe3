"""Exact Min Vertex Cover and Min Dominating Set along a contraction
sequence whose red components stay small.

A partial solution is traced per red component: every component vertex
records whether its bag lies fully inside the solution, meets it
partially, or misses it entirely (for domination also whether all of
the bag is dominated yet).  Black edges are homogeneous, so any
obligation they carry is decidable from those statuses alone; each one
is discharged at the contraction that internalizes it, while red edges
keep their obligations inside the component tables.  Tables have at
most 3^c (or 6^c) entries, so the run time is linear in the sequence
for fixed component bound c.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .trigraph import Graph, Trigraph, contract
from .sequence import ContractionSequence, replay

FULL, PARTIAL, NONE = "full", "partial", "none"


@dataclass(frozen=True)
class ComponentTrace:
    """Selection statuses of one red component, aligned to its sorted
    vertex ids; dominated flags ride along for Dominating Set."""

    status: Tuple[str, ...]
    dominated: Optional[Tuple[bool, ...]] = None


def check_component_bound(g: Graph, s: ContractionSequence) -> int:
    """Largest red component over all snapshots of the replay."""
    best = 0
    for t in replay(g, s):
        seen = set()
        for v in t.vertices:
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            while stack:
                for y in t.red[stack.pop()]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            best = max(best, len(comp))
    return best


def min_vc_dp(g: Graph, s: ContractionSequence, c: int) -> int:
    """Minimum vertex cover size, exact whenever the bound holds."""
    return _solve(g, s, c, dominating=False)


def min_ds_dp(g: Graph, s: ContractionSequence, c: int) -> int:
    """Minimum dominating set size, exact whenever the bound holds."""
    return _solve(g, s, c, dominating=True)


def _merge_status(sa: str, sb: str) -> str:
    if sa == FULL and sb == FULL:
        return FULL
    if sa == NONE and sb == NONE:
        return NONE
    return PARTIAL


def _solve(g: Graph, s: ContractionSequence, c: int, dominating: bool) -> int:
    if c < 1:
        raise ValueError("component bound must be at least 1")
    if s.prior != 0 or s.n != g.n:
        raise ValueError("sequence must start from the original graph")
    if not s.is_full:
        raise ValueError("dynamic programming needs a full sequence")
    if g.n == 0:
        return 0

    t = Trigraph.from_graph(g)
    comp: Dict[int, int] = {v: v for v in t.vertices}
    members: Dict[int, Tuple[int, ...]] = {v: (v,) for v in t.vertices}
    tables: Dict[int, Dict[ComponentTrace, int]] = {}
    for v in t.vertices:
        if dominating:
            # a picked singleton dominates itself; partial never applies
            tables[v] = {ComponentTrace((FULL,), (True,)): 1,
                         ComponentTrace((NONE,), (False,)): 0}
        else:
            tables[v] = {ComponentTrace((FULL,)): 1, ComponentTrace((NONE,)): 0}

    for z, a, b in s.steps:
        old = t
        t = contract(t, a, b, z)
        new_red = t.red[z]
        cids = sorted({comp[a], comp[b]} | {comp[w] for w in new_red})
        olds: List[int] = []
        for cid in cids:
            olds.extend(members[cid])
        merged = tuple(sorted(({z} | set(olds)) - {a, b}))
        if len(merged) > c:
            raise ValueError(
                "red component of %d vertices at step %d exceeds the bound %d"
                % (len(merged), z, c))

        joint: Dict[ComponentTrace, int] = {}
        for combo in itertools.product(*(tables[cid].items() for cid in cids)):
            status: Dict[int, str] = {}
            dom: Dict[int, bool] = {}
            size = 0
            for (trace, val), cid in zip(combo, cids):
                size += val
                for vert, st in zip(members[cid], trace.status):
                    status[vert] = st
                if dominating:
                    for vert, d in zip(members[cid], trace.dominated):
                        dom[vert] = d

            if not dominating:
                # a black edge becoming internal (contracted away or
                # turned red) needs one side fully picked, now
                if b in old.black[a] and FULL not in (status[a], status[b]):
                    continue
                ok = True
                for x in (a, b):
                    for w in old.black[x]:
                        if w in new_red and FULL not in (status[x], status[w]):
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    continue
            else:
                # any picked black neighbor dominates the whole bag
                for u in olds:
                    if not dom[u]:
                        dom[u] = any(status.get(w) not in (None, NONE)
                                     for w in old.black[u])

            z_status = _merge_status(status[a], status[b])
            if dominating:
                z_dom = dom[a] and dom[b]
                key = ComponentTrace(
                    tuple(z_status if v == z else status[v] for v in merged),
                    tuple(z_dom if v == z else dom[v] for v in merged))
            else:
                key = ComponentTrace(
                    tuple(z_status if v == z else status[v] for v in merged))
            if size < joint.get(key, g.n + 1):
                joint[key] = size

        for cid in cids:
            del tables[cid], members[cid]
        tables[z] = joint
        members[z] = merged
        for v in merged:
            comp[v] = z

    (table,) = tables.values()
    if dominating:
        return min(v for k, v in table.items() if all(k.dominated))
    return min(table.values())
