"""Cayley graph construction, neighborhood and layer queries, DOT/JSON export.

Adjacency convention: the neighbors of x are x*S, i.e. x ~ y iff x^{-1}y in S.
This is the convention under which all closed-form code formulas hold verbatim;
the opposite convention (yx^{-1} in S) gives an isomorphic graph via inversion.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .abelian import AbelianSpec, AElem, cached_closure, min_power_in
from .gendihedral import (
    ConnectionSet,
    GElem,
    format_gelem,
    g_mul,
    parse_connection_set,
    vertex_element,
    vertex_index,
)


@dataclass(frozen=True)
class CayleyGraph:
    """Immutable 4-regular connected Cayley graph on Dih(A)."""

    conn: ConnectionSet
    neighbors: tuple[tuple[int, ...], ...]
    closed_masks: tuple[int, ...]

    @property
    def spec(self) -> AbelianSpec:
        return self.conn.spec

    @property
    def n_vertices(self) -> int:
        return len(self.neighbors)

    def vertex_elem(self, v: int) -> GElem:
        return vertex_element(self.spec, v)

    def elem_vertex(self, x: GElem) -> int:
        return vertex_index(x)

    def vertex_label(self, v: int) -> str:
        return format_gelem(self.vertex_elem(v))

    def edges(self) -> list[tuple[int, int]]:
        out = set()
        for u, nbrs in enumerate(self.neighbors):
            for w in nbrs:
                out.add((u, w) if u < w else (w, u))
        return sorted(out)


def build_graph(conn: ConnectionSet) -> CayleyGraph:
    """Neighbors of x are exactly x*s for s in S; 4-regular by validation."""
    spec = conn.spec
    n_a = spec.order
    elems = [spec.element(i) for i in range(n_a)]
    steps = [(s.apart, spec.neg(s.apart), s.flip) for s in conn.elements]
    neighbors = []
    for ai in range(n_a):
        a = elems[ai]
        for eps in (0, 1):
            row = []
            for b, nb, phi in steps:
                part = spec.add(a, nb if eps else b)
                row.append(2 * spec.index(part) + (eps ^ phi))
            neighbors.append(tuple(sorted(row)))
    masks = tuple(
        (1 << v) | sum(1 << w for w in nbrs) for v, nbrs in enumerate(neighbors)
    )
    return CayleyGraph(conn, tuple(neighbors), masks)


def closed_neighborhood(g: CayleyGraph, v: int) -> frozenset[int]:
    """N[v] = {v} union N(v); size exactly 5 on these quartic graphs."""
    return frozenset((v, *g.neighbors[v]))


@dataclass(frozen=True)
class Layer:
    """The 2n vertices s0^i s1^j s2^k t^eps for fixed (j, k), in cycle order."""

    j: int
    k: int
    vertices: tuple[int, ...]

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)


def layers(
    g: CayleyGraph, t_ref: GElem, s0: AElem, s1: AElem, s2: AElem
) -> list[Layer]:
    """Partition the vertex set into (j,k)-layers for an all-reflection S.

    Roles must reproduce S as {t_ref, t_ref*s0, t_ref*s1, t_ref*s2}.
    """
    spec = g.spec
    want = {t_ref} | {g_mul(t_ref, GElem(spec, s, 0)) for s in (s0, s1, s2)}
    if want != set(g.conn.elements):
        raise ValueError("role elements do not reproduce the connection set")
    n = spec.order_of(s0)
    m, _ = min_power_in(spec, s1, cached_closure(spec, (s0,)))
    l, _ = min_power_in(spec, s2, cached_closure(spec, (s0, s1)))
    out = []
    seen: set[int] = set()
    for j in range(m):
        for k in range(l):
            base = spec.add(spec.pow(s1, j), spec.pow(s2, k))
            verts = []
            for i in range(n):
                a = spec.add(spec.pow(s0, i), base)
                rot = GElem(spec, a, 0)
                verts.append(vertex_index(rot))
                verts.append(vertex_index(g_mul(rot, t_ref)))
            out.append(Layer(j, k, tuple(verts)))
            seen.update(verts)
    if len(seen) != g.n_vertices or any(len(set(l_.vertices)) != len(l_.vertices) for l_ in out):
        raise ValueError("layers do not partition the vertex set")
    return out


def export(g: CayleyGraph, format: str) -> str:
    """Deterministic DOT or JSON text; vertices labeled by element literals."""
    if format == "dot":
        lines = ["graph cayley {"]
        for v in range(g.n_vertices):
            lines.append(f'  v{v} [label="{g.vertex_label(v)}"];')
        for u, w in g.edges():
            lines.append(f"  v{u} -- v{w};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    if format == "json":
        payload = {
            "spec": str(g.spec),
            "connection_set": list(g.conn.literals),
            "vertices": [g.vertex_label(v) for v in range(g.n_vertices)],
            "edges": [[u, w] for u, w in g.edges()],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    raise ValueError(f"unknown export format {format!r}")


def graph_from_json(text: str) -> CayleyGraph:
    """Rebuild a graph from its JSON export and check the payload against it."""
    payload = json.loads(text)
    spec = AbelianSpec.from_text(payload["spec"])
    conn = parse_connection_set(spec, ",".join(payload["connection_set"]))
    g = build_graph(conn)
    if payload["vertices"] != [g.vertex_label(v) for v in range(g.n_vertices)]:
        raise ValueError("vertex labels do not match the rebuilt graph")
    if [list(e) for e in g.edges()] != payload["edges"]:
        raise ValueError("edge list does not match the rebuilt graph")
    return g
