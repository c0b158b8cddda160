"""Closed-form perfect-code generation, translation closure, and the case-1
reduction to an abelian grid-cycle graph.

Codes are handled as sorted tuples of vertex indices.  Exponent arithmetic is
done modulo n = o(s0) throughout, so negative exponents in the formulas reduce
into [0, n).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .abelian import AElem, DENSE_TABLE_LIMIT, cached_min_power, index_tables
from .cayley import CayleyGraph
from .classifier import (
    CASE1,
    CASE2,
    Case1Witness,
    Case2Witness,
    ClassificationResult,
    _dlog,
)
from .gendihedral import GElem, g_mul, vertex_element, vertex_index

Code = tuple[int, ...]


@dataclass(frozen=True)
class CodeCheck:
    """Verdict of the closed-neighborhood partition test."""

    ok: bool
    failure: str | None = None  # "undominated" or "doubly-dominated"
    witness: int | None = None  # offending vertex


def is_perfect_code(g: CayleyGraph, vertices: Iterable[int]) -> CodeCheck:
    """True iff the closed neighborhoods of the given vertices partition V."""
    seen = 0
    for d in sorted(set(vertices)):
        mask = g.closed_masks[d]
        overlap = seen & mask
        if overlap:
            return CodeCheck(False, "doubly-dominated", (overlap & -overlap).bit_length() - 1)
        seen |= mask
    full = (1 << g.n_vertices) - 1
    if seen != full:
        missing = full & ~seen
        return CodeCheck(False, "undominated", (missing & -missing).bit_length() - 1)
    return CodeCheck(True)


def reference_reflection(g: CayleyGraph) -> GElem:
    """The reflection in S with smallest vertex index; codes are reported
    relative to it (it equals t whenever t itself lies in S)."""
    return min(g.conn.reflected, key=vertex_index)


def _formula_vertex(g: CayleyGraph, apart: AElem, t_ref: GElem | None) -> int:
    elem = GElem(g.spec, apart, 0)
    if t_ref is not None:
        elem = g_mul(elem, t_ref)
    return vertex_index(elem)


def codes_containing_t_case1(
    g: CayleyGraph, witnesses: Sequence[Case1Witness]
) -> list[Code]:
    """Candidate codes containing t' from the two-parameter closed form.

    Both epsilon branches and both labelings of the rotation pair are
    generated, then deduplicated and filtered by the partition test.
    """
    spec = g.spec
    out = []
    seen_norms = set()
    for w in witnesses:
        for s1 in sorted({w.s1, spec.neg(w.s1)}, key=spec.index):
            key = (vertex_index(w.t_choice), spec.index(w.s0), spec.index(s1))
            if key in seen_norms:
                continue
            seen_norms.add(key)
            n = w.n
            m, power = cached_min_power(spec, s1, (w.s0,))
            for eps in (1, -1):
                code = set()
                for k in range(m):
                    s1k = spec.pow(s1, k)
                    for w5 in range(0, n, 5):
                        top = spec.add(spec.pow(w.s0, (w5 + eps * k) % n), s1k)
                        bot = spec.add(spec.pow(w.s0, (3 + w5 + eps * k) % n), s1k)
                        code.add(_formula_vertex(g, top, w.t_choice))
                        code.add(_formula_vertex(g, bot, None))
                out.append(tuple(sorted(code)))
    return _dedupe_codes(g, out)


def codes_containing_t_case2(
    g: CayleyGraph, witnesses: Sequence[Case2Witness]
) -> list[Code]:
    """Candidate codes containing t' from the triple-union closed form."""
    spec = g.spec
    out = []
    seen = set()
    for w in witnesses:
        key = (
            vertex_index(w.t_choice),
            spec.index(w.s0),
            spec.index(w.s1),
            spec.index(w.s2),
            w.v,
            w.a,
            w.b,
        )
        if key in seen:
            continue
        seen.add(key)
        code = set()
        for alpha in range(w.n // 5):
            for j in range(w.m):
                for k in range(w.l):
                    r = (5 * alpha + w.a * j + w.b * k) % w.n
                    tail = spec.add(spec.pow(w.s1, j), spec.pow(w.s2, k))
                    refl = spec.add(spec.pow(w.s0, r), tail)
                    rot = spec.add(spec.pow(w.s0, (r + w.v) % w.n), tail)
                    code.add(_formula_vertex(g, refl, w.t_choice))
                    code.add(_formula_vertex(g, rot, None))
        out.append(tuple(sorted(code)))
    return _dedupe_codes(g, out)


def _dedupe_codes(g: CayleyGraph, codes: Iterable[Code]) -> list[Code]:
    return sorted({c for c in codes if is_perfect_code(g, c).ok})


def codes_containing_t(g: CayleyGraph, result: ClassificationResult) -> list[Code]:
    """All perfect codes containing the reference reflection of S."""
    if not result.admits:
        return []
    ref = reference_reflection(g)
    wits = [w for w in result.witnesses if w.t_choice == ref]
    if not wits:
        raise RuntimeError("admitting instance has no witness for the reference t")
    if result.case == CASE1:
        return codes_containing_t_case1(g, wits)
    if result.case == CASE2:
        return codes_containing_t_case2(g, wits)
    raise ValueError(f"unexpected case {result.case!r}")


def all_perfect_codes(g: CayleyGraph, seeds: Sequence[Code]) -> list[Code]:
    """Translation closure: left translates of the seed codes, deduplicated.

    Left translations x -> z*x are automorphisms under the x*S convention, and
    every code is a translate of one containing the reference reflection.
    """
    spec = g.spec
    out = set()
    if spec.order <= DENSE_TABLE_LIMIT:
        add, neg = index_tables(spec)
        for ci in range(spec.order):
            for flip in (0, 1):
                row = add[ci]
                for seed in seeds:
                    if flip:
                        out.add(
                            tuple(sorted(2 * row[neg[v >> 1]] + (1 ^ (v & 1))
                                         for v in seed))
                        )
                    else:
                        out.add(
                            tuple(sorted(2 * row[v >> 1] + (v & 1) for v in seed))
                        )
        return sorted(out)
    for zv in range(g.n_vertices):
        z = vertex_element(spec, zv)
        perm = [
            vertex_index(g_mul(z, vertex_element(spec, v)))
            for v in range(g.n_vertices)
        ]
        for seed in seeds:
            out.add(tuple(sorted(perm[v] for v in seed)))
    return sorted(out)


def spacing_invariant(g: CayleyGraph, code: Iterable[int], s0: AElem) -> bool:
    """No two code members differ by s0^w for w in {+-1, +-2, +-3, +-4}.

    Code members on a common <s0>-line sit at least five s0-steps apart.
    """
    spec = g.spec
    members = set(code)
    shifts = [spec.pow(s0, w) for w in (1, 2, 3, 4, -1, -2, -3, -4)]
    for v in members:
        x = g.vertex_elem(v)
        for shift in shifts:
            y = GElem(spec, spec.add(shift, x.apart), x.flip)
            if vertex_index(y) in members:
                return False
    return True


def reflection_gap_invariant(
    g: CayleyGraph, code: Iterable[int], t_ref: GElem, s0: AElem
) -> bool:
    """For each reflection x in the code, exactly one of x*t'*s0^2, x*t'*s0^3,
    x*t'*s0^4 is also in the code."""
    spec = g.spec
    members = set(code)
    offsets = [GElem(spec, spec.pow(s0, w), 0) for w in (2, 3, 4)]
    for v in members:
        x = g.vertex_elem(v)
        if not x.flip:
            continue
        base = g_mul(x, t_ref)
        hits = sum(vertex_index(g_mul(base, off)) in members for off in offsets)
        if hits != 1:
            return False
    return True


def layer_invariant(
    g: CayleyGraph,
    code: Iterable[int],
    t_ref: GElem,
    s0: AElem,
    s1: AElem,
    s2: AElem,
) -> bool:
    """Each (j,k)-layer meets the code in n/5 reflections s0^{5a}*x and n/5
    rotations x*t'*s0^{v+5a} for a single offset v in {2, 3, 4}."""
    from .cayley import layers

    spec = g.spec
    members = set(code)
    n = spec.order_of(s0)
    if n % 5:
        return False
    for layer in layers(g, t_ref, s0, s1, s2):
        in_layer = members & layer.vertex_set
        refl = [v for v in in_layer if g.vertex_elem(v).flip]
        if len(refl) != n // 5 or len(in_layer) != 2 * (n // 5):
            return False
        x = g.vertex_elem(refl[0])
        expected_refl = {
            vertex_index(GElem(spec, spec.add(spec.pow(s0, 5 * a), x.apart), 1))
            for a in range(n // 5)
        }
        if set(refl) != expected_refl:
            return False
        base = g_mul(x, t_ref)
        rots = in_layer - expected_refl
        matched = False
        for v_off in (2, 3, 4):
            expected_rots = {
                vertex_index(g_mul(base, GElem(spec, spec.pow(s0, v_off + 5 * a), 0)))
                for a in range(n // 5)
            }
            if rots == expected_rots:
                matched = True
                break
        if not matched:
            return False
    return True


def window_invariant(
    g: CayleyGraph,
    code: Iterable[int],
    t_ref: GElem,
    s0: AElem,
    s1: AElem,
    s2: AElem,
) -> bool:
    """Both seven-element windows around every s0^i s1^j s2^k meet the code.

    Window one: {s0^{i+i'} s1^j s2^k t' | 0 <= i' <= 3} together with
    {s0^{i+j'} s1^j s2^k | 1 <= j' <= 3}; window two swaps the ranges.
    """
    spec = g.spec
    members = set(code)
    n = spec.order_of(s0)
    m, _ = cached_min_power(spec, s1, (s0,))
    l, _ = cached_min_power(spec, s2, (s0, s1))
    for j in range(m):
        for k in range(l):
            tail = spec.add(spec.pow(s1, j), spec.pow(s2, k))
            for i in range(n):
                line = [spec.add(spec.pow(s0, i + d), tail) for d in range(4)]
                refl = [vertex_index(g_mul(GElem(spec, a, 0), t_ref)) for a in line]
                rot = [vertex_index(GElem(spec, a, 0)) for a in line]
                if members.isdisjoint(refl[:4] + rot[1:4]):
                    return False
                if members.isdisjoint(rot[:4] + refl[:3]):
                    return False
    return True


@dataclass(frozen=True)
class Case1Reduction:
    """Isomorphism certificate between a case-1 graph and the grid-cycle graph
    on Z_{2n} x [0, m) with a 2h-twisted wrap column."""

    n: int
    m: int
    h: int
    sigma: dict[int, tuple[int, int]]  # graph vertex -> grid vertex
    grid_edges: frozenset[tuple[tuple[int, int], tuple[int, int]]]
    edge_preserving: bool

    @property
    def alpha(self) -> tuple[int, int]:
        return (1, 0)

    @property
    def beta(self) -> tuple[int, int]:
        return (0, 1)

    def grid_add(self, p: tuple[int, int], q: tuple[int, int]) -> tuple[int, int]:
        """Addition in the abelian model group: the column coordinate carries
        into a 2h shift of the row coordinate."""
        b = p[1] + q[1]
        carry, b = divmod(b, self.m)
        return ((p[0] + q[0] + 2 * self.h * carry) % (2 * self.n), b)

    def grid_order(self, p: tuple[int, int]) -> int:
        cur = p
        k = 1
        while cur != (0, 0):
            cur = self.grid_add(cur, p)
            k += 1
        return k


def reduce_case1(g: CayleyGraph) -> Case1Reduction:
    """Build the grid-cycle model of a case-1 shaped graph and verify the
    vertex bijection sigma(s0^a s1^b t^eps) = (2a + eps, b) exhaustively."""
    spec = g.spec
    conn = g.conn
    rot = [x.apart for x in conn.rotations]
    if len(rot) != 2 or any(spec.order_of(x) == 2 for x in rot):
        raise ValueError("case-1 reduction needs S = {s1, s1^-1, t, t*s0}")
    t_ref = reference_reflection(g)
    other = next(r for r in conn.reflected if r != t_ref)
    s0 = g_mul(t_ref, other).apart
    s1 = min(rot, key=spec.index)
    n = spec.order_of(s0)
    m, power = cached_min_power(spec, s1, (s0,))
    h = _dlog(spec, s0, power, n)

    # Coset decomposition a = s0^i * s1^b, unique for i in [0,n), b in [0,m).
    decomp: dict[int, tuple[int, int]] = {}
    for b in range(m):
        s1b = spec.pow(s1, b)
        for i in range(n):
            decomp[spec.index(spec.add(spec.pow(s0, i), s1b))] = (i, b)
    if len(decomp) != spec.order:
        raise ValueError("rotation roles do not span the abelian part")

    sigma: dict[int, tuple[int, int]] = {}
    for v in range(g.n_vertices):
        elem = g.vertex_elem(v)
        # Express relative to t_ref: a*t^1 = (a*c^{-1})*t_ref for t_ref = c*t.
        apart = elem.apart
        if elem.flip:
            apart = spec.add(apart, spec.neg(t_ref.apart))
        i, b = decomp[spec.index(apart)]
        sigma[v] = (2 * i + elem.flip, b)

    two_n = 2 * n
    grid_edges = set()
    for a in range(two_n):
        for b in range(m):
            grid_edges.add(_pair((a, b), ((a + 1) % two_n, b)))
        for c in range(m - 1):
            grid_edges.add(_pair((a, c), (a, c + 1)))
        grid_edges.add(_pair((a, m - 1), ((a + 2 * h) % two_n, 0)))

    mapped = {_pair(sigma[u], sigma[w]) for u, w in g.edges()}
    bijective = len(set(sigma.values())) == g.n_vertices
    preserved = (
        bijective
        and mapped == grid_edges
        and len(mapped) == len(g.edges())
    )
    return Case1Reduction(n, m, h, sigma, frozenset(grid_edges), preserved)


def _pair(p: tuple[int, int], q: tuple[int, int]):
    return (p, q) if p <= q else (q, p)
