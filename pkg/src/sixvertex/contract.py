"""Exact tensor-network contraction of signature grids.

Each vertex becomes a sparse tensor over its open edges (self-loops folded
at build time, the neq_2 on every edge folded into the second end as a bit
flip). Contraction follows a plan of pairwise merges; the default plan is a
greedy minimum-resulting-open-indices heuristic with deterministic
tie-breaking, so results and plans are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .evaluate import EvalResult, TooLargeError
from .grid import SignatureGrid, validate
from .scalar import ONE, ZERO, Scalar

__all__ = [
    "ContractionPlan",
    "ContractionCapError",
    "plan_contraction",
    "sequential_plan",
    "contract_eval",
    "DEFAULT_RANK_CAP",
]

DEFAULT_RANK_CAP = 26


class ContractionCapError(TooLargeError):
    pass


@dataclass(frozen=True)
class ContractionPlan:
    """Pairwise merge steps, each naming two live tensors by the vertex sets
    they cover; peak_rank is the largest open-index count reached."""

    steps: tuple[tuple[frozenset, frozenset], ...]
    peak_rank: int


class _Tensor:
    __slots__ = ("edges", "data", "vertices")

    def __init__(self, edges, data, vertices):
        self.edges = tuple(edges)
        self.data = data
        self.vertices = vertices


def _vertex_tensor(grid: SignatureGrid, v: int) -> _Tensor:
    sig = grid.vertices[v]
    ends: dict[int, list[tuple[int, int]]] = {}
    for e, (p, q) in enumerate(grid.edges):
        if p.vertex == v:
            ends.setdefault(e, []).append((p.slot, 0))
        if q.vertex == v:
            ends.setdefault(e, []).append((q.slot, 1))
    open_edges = sorted(e for e, lst in ends.items() if len(lst) == 1)
    loops = [(e, lst) for e, lst in ends.items() if len(lst) == 2]
    pos = {e: i for i, e in enumerate(open_edges)}
    data: dict[int, Scalar] = {}
    for idx in range(16):
        val = sig[idx]
        if not val:
            continue
        bits = [(idx >> (3 - s)) & 1 for s in range(4)]
        ok = True
        for _e, lst in loops:
            (s1, f1), (s2, f2) = lst
            if bits[s1] ^ f1 != bits[s2] ^ f2:
                ok = False
                break
        if not ok:
            continue
        key = 0
        for e in open_edges:
            (slot, flip), = ends[e]
            key |= (bits[slot] ^ flip) << pos[e]
        cur = data.get(key)
        data[key] = val if cur is None else cur + val
    return _Tensor(open_edges, {k: v for k, v in data.items() if v}, frozenset((v,)))


def _merge(a: _Tensor, b: _Tensor, rank_cap: int) -> _Tensor:
    ea, eb = set(a.edges), set(b.edges)
    shared = sorted(ea & eb)
    out_edges = sorted(ea ^ eb)
    if len(out_edges) > rank_cap:
        raise ContractionCapError(
            f"merging {sorted(a.vertices)} with {sorted(b.vertices)} needs "
            f"rank {len(out_edges)} > cap {rank_cap}"
        )
    apos = {e: i for i, e in enumerate(a.edges)}
    bpos = {e: i for i, e in enumerate(b.edges)}
    opos = {e: i for i, e in enumerate(out_edges)}
    a_sh = [(apos[e], i) for i, e in enumerate(shared)]
    b_sh = [(bpos[e], i) for i, e in enumerate(shared)]
    a_out = [(apos[e], opos[e]) for e in a.edges if e not in eb]
    b_out = [(bpos[e], opos[e]) for e in b.edges if e not in ea]

    def extract(key, pairs):
        out = 0
        for src, dst in pairs:
            out |= ((key >> src) & 1) << dst
        return out

    groups: dict[int, list[tuple[int, Scalar]]] = {}
    for key, val in b.data.items():
        groups.setdefault(extract(key, b_sh), []).append(
            (extract(key, b_out), val)
        )
    data: dict[int, Scalar] = {}
    for key, val in a.data.items():
        grp = groups.get(extract(key, a_sh))
        if not grp:
            continue
        oa = extract(key, a_out)
        for ob, bval in grp:
            k = oa | ob
            prod = val * bval
            cur = data.get(k)
            data[k] = prod if cur is None else cur + prod
    data = {k: v for k, v in data.items() if v}
    return _Tensor(out_edges, data, a.vertices | b.vertices)


def plan_contraction(grid: SignatureGrid) -> ContractionPlan:
    """Greedy: always merge the pair minimizing the resulting open-index
    count, ties broken by lowest involved vertex ids."""
    live: dict[frozenset, set] = {}
    for v in grid.vertices:
        incident = [
            e
            for e, (p, q) in enumerate(grid.edges)
            if (p.vertex == v) != (q.vertex == v)
        ]
        live[frozenset((v,))] = set(incident)
    peak = max((len(s) for s in live.values()), default=0)
    steps = []
    while len(live) > 1:
        best = None
        for (ka, ea), (kb, eb) in combinations(live.items(), 2):
            rank = len(ea ^ eb)
            lo, hi = sorted((min(ka), min(kb)))
            key = (rank, lo, hi)
            if best is None or key < best[0]:
                best = (key, ka, kb)
        _, ka, kb = best
        ea, eb = live.pop(ka), live.pop(kb)
        merged = ea ^ eb
        live[ka | kb] = merged
        peak = max(peak, len(merged))
        steps.append((ka, kb))
    return ContractionPlan(tuple(steps), peak)


def sequential_plan(grid: SignatureGrid, order=None) -> ContractionPlan:
    """Absorb vertices one at a time into a growing cluster, in id order by
    default; the right shape for row-major lattices."""
    order = sorted(grid.vertices) if order is None else list(order)
    incident = {v: set() for v in grid.vertices}
    for e, (p, q) in enumerate(grid.edges):
        if p.vertex != q.vertex:
            incident[p.vertex].add(e)
            incident[q.vertex].add(e)
    steps = []
    peak = max((len(s) for s in incident.values()), default=0)
    cluster = frozenset((order[0],)) if order else frozenset()
    open_edges = set(incident[order[0]]) if order else set()
    for v in order[1:]:
        steps.append((cluster, frozenset((v,))))
        open_edges ^= incident[v]
        cluster = cluster | {v}
        peak = max(peak, len(open_edges))
    return ContractionPlan(tuple(steps), peak)


def contract_eval(
    grid: SignatureGrid,
    plan: ContractionPlan | None = None,
    rank_cap: int = DEFAULT_RANK_CAP,
) -> EvalResult:
    errors = validate(grid)
    if errors:
        raise ValueError("invalid grid: " + "; ".join(errors))
    if not grid.vertices:
        return EvalResult(ONE, "contract", {"peak_rank": 0})
    if plan is None:
        plan = plan_contraction(grid)
    live = {frozenset((v,)): _vertex_tensor(grid, v) for v in grid.vertices}
    peak = max(len(t.edges) for t in live.values())
    for ka, kb in plan.steps:
        if ka not in live or kb not in live:
            raise ValueError(f"plan step ({sorted(ka)}, {sorted(kb)}) does not match grid")
        t = _merge(live.pop(ka), live.pop(kb), rank_cap)
        live[ka | kb] = t
        peak = max(peak, len(t.edges))
    if len(live) != 1:
        raise ValueError("plan does not contract the grid to one tensor")
    final = next(iter(live.values()))
    if final.edges:
        raise AssertionError("open edges left after full contraction")
    return EvalResult(final.data.get(0, ZERO), "contract", {"peak_rank": peak})
