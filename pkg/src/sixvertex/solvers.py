"""Polynomial-time exact solvers for the three tractable classes, plus the
dispatching solve() front end.

solve_P propagates pattern choices across tensor-factor blocks; solve_A
assembles one global GF(2)-constrained Z4 quadratic phase and evaluates it as
a Gauss sum; solve_M pins the shared-value slots, propagates, and counts the
two token orientations of each residual cycle. Every solver's correctness
gate is exact agreement with brute force.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import in_A, in_P, one_zero_each_pair
from .evaluate import DEFAULT_EDGE_CAP, TooLargeError, brute_force_eval
from .contract import DEFAULT_RANK_CAP, contract_eval
from .gf2 import LinearSystemGF2, QuadraticPhase, gauss_sum
from .grid import Port, SignatureGrid, validate
from .scalar import ONE, ZERO, Scalar
from .signature import bit_of, six_vertex_params

__all__ = [
    "SolverError",
    "MixedChiralityError",
    "SolveResult",
    "solve_P",
    "solve_A",
    "solve_M",
    "solve",
]


class SolverError(ValueError):
    pass


class MixedChiralityError(SolverError):
    """Adjacent one-zero-per-pair vertices pin opposite shared values; the
    residual counting is matching-hard, so no polynomial path exists."""


def _partner_map(grid: SignatureGrid):
    partner = {}
    for p, q in grid.edges:
        partner[p] = q
        partner[q] = p
    return partner


# ---------------------------------------------------------------- P solver


def solve_P(grid: SignatureGrid) -> Scalar:
    blocks = []  # (ports, strings, values)
    port_block: dict[Port, tuple[int, int]] = {}  # port -> (block, local pos)
    for v in sorted(grid.vertices):
        report = in_P(grid.vertices[v])
        if not report.member:
            raise SolverError(f"vertex {v} is not in the product class")
        if report.is_zero:
            return ZERO
        for factor in report.factors:
            bid = len(blocks)
            for i, pos in enumerate(factor.var_positions):
                port_block[Port(v, pos)] = (bid, i)
            blocks.append(factor)

    # XOR constraints between block states: state 1 means the complemented
    # string; single-string blocks admit state 0 only.
    nblocks = len(blocks)
    adj: dict[int, list[tuple[int, int]]] = {b: [] for b in range(nblocks)}
    for p, q in grid.edges:
        pb, pi = port_block[p]
        qb, qi = port_block[q]
        k = len(blocks[pb].var_positions)
        up = (blocks[pb].strings[0] >> (k - 1 - pi)) & 1
        k = len(blocks[qb].var_positions)
        uq = (blocks[qb].strings[0] >> (k - 1 - qi)) & 1
        d = 1 ^ up ^ uq  # s_p xor s_q must equal d
        adj[pb].append((qb, d))
        adj[qb].append((pb, d))

    seen = [False] * nblocks
    total = ONE
    for root in range(nblocks):
        if seen[root]:
            continue
        comp = []
        parity = {root: 0}
        stack = [root]
        seen[root] = True
        consistent = True
        while stack:
            b = stack.pop()
            comp.append(b)
            for nb, d in adj[b]:
                want = parity[b] ^ d
                if nb in parity:
                    if parity[nb] != want:
                        consistent = False
                else:
                    parity[nb] = want
                    seen[nb] = True
                    stack.append(nb)
        if not consistent:
            return ZERO
        comp_value = ZERO
        for s_root in (0, 1):
            weight = ONE
            ok = True
            for b in comp:
                s = parity[b] ^ s_root
                if s >= len(blocks[b].strings):
                    ok = False
                    break
                weight = weight * blocks[b].values[s]
            if ok:
                comp_value = comp_value + weight
        if not comp_value:
            return ZERO
        total = total * comp_value
    return total


# ---------------------------------------------------------------- A solver


def solve_A(grid: SignatureGrid) -> Scalar:
    order = sorted(grid.vertices)
    port_index = {}
    for v in order:
        for slot in range(4):
            port_index[Port(v, slot)] = len(port_index)
    nports = len(port_index)

    system = LinearSystemGF2(nports)
    phase = QuadraticPhase()
    prefactor = ONE

    for p, q in grid.edges:
        system.add((1 << port_index[p]) | (1 << port_index[q]), 1)

    for v in order:
        f = grid.vertices[v]
        report = in_A(f)
        if not report.member:
            raise SolverError(f"vertex {v} is not in the affine class")
        if report.is_zero:
            return ZERO
        cert = report.certificate
        support = f.support()
        # affine support as parity checks over the 4 ports
        for mask4 in range(1, 16):
            dots = {bin(mask4 & s).count("1") & 1 for s in support}
            if len(dots) == 1:
                gmask = 0
                for pos in range(4):
                    if (mask4 >> (3 - pos)) & 1:
                        gmask |= 1 << port_index[Port(v, pos)]
                system.add(gmask, dots.pop())
        prefactor = prefactor * cert.lam
        tbits = [bit_of(cert.base, pos, 4) for pos in range(4)]
        pvars = [port_index[Port(v, pos)] for pos in cert.pivots]
        tvals = [tbits[pos] for pos in cert.pivots]
        for j, a in enumerate(cert.linear):
            phase.add_const(a * tvals[j])
            phase.add_linear(pvars[j], a * (1 - 2 * tvals[j]))
        for j, k, b in cert.cross:
            phase.add_const(2 * b * tvals[j] * tvals[k])
            phase.add_linear(pvars[k], 2 * b * tvals[j])
            phase.add_linear(pvars[j], 2 * b * tvals[k])
            phase.add_cross(pvars[j], pvars[k], b)

    if not system.consistent:
        return ZERO
    system.reduce()
    if not system.consistent:
        return ZERO
    free = set(system.free_vars())
    for var, (mask, rhs) in sorted(system.pivots.items()):
        others = []
        m = mask & ~(1 << var)
        while m:
            low = m & -m
            others.append(low.bit_length() - 1)
            m ^= low
        phase.substitute(var, rhs, others)
    return prefactor * gauss_sum(phase, free)


# ---------------------------------------------------------------- M solver


def _m_vertex_shape(v, f):
    """(pinned slot, pinned value, token weights per slot) or SolverError."""
    params = six_vertex_params(f)
    if params is None or not one_zero_each_pair(params):
        raise SolverError(f"vertex {v} does not have a zero in each pair")
    support = f.support()
    types = []
    for pos in range(4):
        bits = {bit_of(s, pos, 4) for s in support}
        if len(bits) == 1:
            types.append((pos, bits.pop()))
    return types


def _m_token_weights(f, pin_slot, pin_val):
    weights = {}
    for k in range(4):
        if k == pin_slot:
            continue
        s = (1 << (3 - pin_slot)) | (1 << (3 - k))
        if pin_val == 0:
            s ^= 0b1111
        weights[k] = f[s]
    return weights


def solve_M(grid: SignatureGrid) -> Scalar:
    if not grid.vertices:
        return ONE
    for v, f in grid.vertices.items():
        if f.is_zero():
            return ZERO
    shapes = {v: _m_vertex_shape(v, f) for v, f in grid.vertices.items()}
    for val in (0, 1):
        if all(any(t[1] == val for t in ts) for ts in shapes.values()):
            chosen = {
                v: next(t for t in ts if t[1] == val)
                for v, ts in shapes.items()
            }
            break
    else:
        chosen = {
            v: (ts[0] if not any(t[1] == 0 for t in ts)
                else next(t for t in ts if t[1] == 0))
            for v, ts in shapes.items()
        }
    pin_slot = {v: t[0] for v, t in chosen.items()}
    pin_val = {v: t[1] for v, t in chosen.items()}
    weights = {
        v: _m_token_weights(grid.vertices[v], pin_slot[v], pin_val[v])
        for v in grid.vertices
    }

    partner = _partner_map(grid)
    values: dict[Port, int] = {}
    token: dict[int, int | None] = dict.fromkeys(grid.vertices, None)
    candidates = {
        v: {k for k in range(4) if k != pin_slot[v]} for v in grid.vertices
    }
    queue = [(Port(v, pin_slot[v]), pin_val[v]) for v in sorted(grid.vertices)]
    while queue:
        port, b = queue.pop()
        if port in values:
            if values[port] != b:
                return ZERO
            continue
        values[port] = b
        queue.append((partner[port], 1 - b))
        v, slot = port
        if slot == pin_slot[v]:
            continue
        candidates[v].discard(slot)
        if b == pin_val[v]:
            if token[v] is not None:
                return ZERO  # second token
            token[v] = slot
            for k in list(candidates[v]):
                queue.append((Port(v, k), 1 - pin_val[v]))
        else:
            if token[v] is None:
                if not candidates[v]:
                    return ZERO
                if len(candidates[v]) == 1:
                    (k,) = candidates[v]
                    queue.append((Port(v, k), pin_val[v]))

    total = ONE
    for v, slot in token.items():
        if slot is not None:
            total = total * weights[v][slot]
            if not total:
                return ZERO

    residual = [v for v in grid.vertices if token[v] is None]
    open_ports = {v: sorted(candidates[v]) for v in residual}
    for v in residual:
        for k in open_ports[v]:
            q = partner[Port(v, k)]
            if 1 ^ pin_val[v] ^ pin_val[q.vertex] == 0:
                raise MixedChiralityError(
                    f"vertices {v} and {q.vertex} pin opposite values across "
                    "a free edge; falling back is required"
                )
    done = set()
    for v0 in sorted(residual):
        if v0 in done:
            continue
        if len(open_ports[v0]) != 2:
            return ZERO  # residual degree != 2: no token assignment exists
        comp_value = ZERO
        for start in open_ports[v0]:
            weight = ONE
            fired = {}
            cur_v, fire = v0, start
            good = True
            while True:
                if len(open_ports[cur_v]) != 2:
                    good = False
                    break
                fired[cur_v] = fire
                weight = weight * weights[cur_v][fire]
                nxt = partner[Port(cur_v, fire)]
                if nxt.vertex in fired:
                    a, b = open_ports[v0]
                    other0 = a if start == b else b
                    good = nxt.vertex == v0 and nxt.slot == other0
                    break
                if nxt.vertex not in open_ports or len(open_ports[nxt.vertex]) != 2:
                    good = False
                    break
                pa, pb = open_ports[nxt.vertex]
                fire = pa if nxt.slot == pb else pb
                cur_v = nxt.vertex
            if good:
                comp_value = comp_value + weight
            done.update(fired)
            done.add(v0)
        if not comp_value:
            return ZERO
        total = total * comp_value
    return total


# --------------------------------------------------------------- dispatch


@dataclass(frozen=True)
class SolveResult:
    value: Scalar
    class_used: str  # "P" | "A" | "M" | "brute" | "contract"


def solve(
    grid: SignatureGrid,
    method: str = "auto",
    edge_cap: int = DEFAULT_EDGE_CAP,
    rank_cap: int = DEFAULT_RANK_CAP,
) -> SolveResult:
    errors = validate(grid)
    if errors:
        raise ValueError("invalid grid: " + "; ".join(errors))
    if method == "brute":
        return SolveResult(brute_force_eval(grid, edge_cap).value, "brute")
    if method == "contract":
        return SolveResult(contract_eval(grid, rank_cap=rank_cap).value, "contract")
    if method == "p":
        return SolveResult(solve_P(grid), "P")
    if method == "a":
        return SolveResult(solve_A(grid), "A")
    if method == "m":
        return SolveResult(solve_M(grid), "M")
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")

    distinct = {}
    for f in grid.vertices.values():
        distinct[f] = None
    sigs = list(distinct)
    if all(in_P(f).member for f in sigs):
        return SolveResult(solve_P(grid), "P")
    if all(in_A(f).member for f in sigs):
        return SolveResult(solve_A(grid), "A")
    m_ok = all(
        (p := six_vertex_params(f)) is not None and one_zero_each_pair(p)
        for f in sigs
    )
    if m_ok:
        try:
            return SolveResult(solve_M(grid), "M")
        except MixedChiralityError:
            pass
    if len(grid.edges) <= edge_cap:
        return SolveResult(brute_force_eval(grid, edge_cap).value, "brute")
    raise TooLargeError(
        "no tractable algorithm applies and the instance exceeds the "
        f"brute-force cap ({len(grid.edges)} > {edge_cap} edges)"
    )
