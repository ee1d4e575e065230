"""Signature grids: 4-regular multigraphs with ordered ports and neq_2 edges.

An edge joins two ports (vertex, slot); the two edge ends carry complementary
bits, which is exactly the orientation semantics of the six-vertex model
(port bit 1 = edge points into that vertex at that end). Self-loops and
parallel edges are first-class.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple

from .scalar import format_scalar, parse_scalar
from .signature import (
    Signature,
    SixVertexParams,
    from_six_vertex,
    six_vertex_params,
)

__all__ = [
    "Port",
    "SignatureGrid",
    "GridError",
    "validate",
    "build_torus",
    "grid_to_json",
    "grid_from_json",
    "signature_to_json",
    "signature_from_json",
]


class Port(NamedTuple):
    vertex: int
    slot: int


class GridError(ValueError):
    pass


@dataclass(frozen=True)
class SignatureGrid:
    """vertices: id -> arity-4 signature; edges: unordered port pairs."""

    vertices: dict[int, Signature]
    edges: tuple[tuple[Port, Port], ...]

    @classmethod
    def build(cls, vertices, edges) -> SignatureGrid:
        edges = tuple(
            (Port(*e[0]), Port(*e[1])) for e in edges
        )
        return cls(dict(vertices), edges)

    def assert_valid(self):
        errors = validate(self)
        if errors:
            raise GridError("; ".join(errors))
        return self


def validate(grid: SignatureGrid) -> list[str]:
    """Empty list when every port of every vertex sits on exactly one edge."""
    errors = []
    seen: dict[Port, int] = {}
    for i, (p, q) in enumerate(grid.edges):
        for port in (p, q):
            if port.vertex not in grid.vertices:
                errors.append(f"edge {i}: unknown vertex {port.vertex}")
                continue
            arity = grid.vertices[port.vertex].arity
            if not 0 <= port.slot < arity:
                errors.append(
                    f"edge {i}: slot {port.slot} out of range for vertex "
                    f"{port.vertex} (arity {arity})"
                )
                continue
            if port in seen:
                errors.append(
                    f"port (v{port.vertex}, slot {port.slot}) used by edges "
                    f"{seen[port]} and {i}"
                )
            else:
                seen[port] = i
    for v, sig in grid.vertices.items():
        if sig.arity != 4:
            errors.append(f"vertex {v}: arity {sig.arity}, grids need 4")
            continue
        for slot in range(4):
            if Port(v, slot) not in seen:
                errors.append(f"port (v{v}, slot {slot}) not on any edge")
    return errors


def build_torus(n: int, p: SixVertexParams) -> SignatureGrid:
    """n x n torus; slots 0..3 are the N, E, S, W ports of each site."""
    if n < 2:
        raise GridError("torus needs n >= 2")
    sig = from_six_vertex(p)
    vertices = {r * n + c: sig for r in range(n) for c in range(n)}
    edges = []
    for r in range(n):
        for c in range(n):
            v = r * n + c
            east = r * n + (c + 1) % n
            south = ((r + 1) % n) * n + c
            edges.append((Port(v, 1), Port(east, 3)))
            edges.append((Port(v, 2), Port(south, 0)))
    return SignatureGrid(vertices, tuple(edges)).assert_valid()


def signature_to_json(f: Signature):
    p = six_vertex_params(f)
    if p is not None:
        return {"six_vertex": [format_scalar(v) for v in p]}
    return {
        "arity": f.arity,
        "values": [format_scalar(v) for v in f.values],
    }


def signature_from_json(obj) -> Signature:
    if "six_vertex" in obj:
        vals = obj["six_vertex"]
        if len(vals) != 6:
            raise GridError("six_vertex needs exactly 6 scalars")
        return from_six_vertex(
            SixVertexParams(*(parse_scalar(v) for v in vals))
        )
    return Signature(obj["arity"], [parse_scalar(v) for v in obj["values"]])


def grid_to_json(grid: SignatureGrid):
    return {
        "vertices": [
            {"id": v, "signature": signature_to_json(sig)}
            for v, sig in sorted(grid.vertices.items())
        ],
        "edges": [
            [[p.vertex, p.slot], [q.vertex, q.slot]] for p, q in grid.edges
        ],
    }


def grid_from_json(obj) -> SignatureGrid:
    try:
        vertices = {
            int(item["id"]): signature_from_json(item["signature"])
            for item in obj["vertices"]
        }
        edges = tuple(
            (Port(int(e[0][0]), int(e[0][1])), Port(int(e[1][0]), int(e[1][1])))
            for e in obj["edges"]
        )
    except (KeyError, TypeError, IndexError) as exc:
        raise GridError(f"malformed grid json: {exc}") from exc
    return SignatureGrid(vertices, edges)


def load_grid(path: str) -> SignatureGrid:
    with open(path) as fh:
        return grid_from_json(json.load(fh))


def save_grid(grid: SignatureGrid, path: str):
    with open(path, "w") as fh:
        json.dump(grid_to_json(grid), fh, indent=1)
        fh.write("\n")
