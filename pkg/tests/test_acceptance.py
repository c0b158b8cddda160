"""Acceptance suite: desk examples, full classifier/oracle equivalence over ten
groups, empirical no-code families, reduction certificates, and structural
invariants on brute-force codes.  One test per criterion."""

import time

import pytest

from dihcode.abelian import AbelianSpec
from dihcode.cayley import build_graph
from dihcode.classifier import CASE1, CASE2, classify
from dihcode.enumerator import (
    all_perfect_codes,
    codes_containing_t,
    layer_invariant,
    reduce_case1,
    reference_reflection,
    reflection_gap_invariant,
    spacing_invariant,
    window_invariant,
)
from dihcode.gendihedral import parse_connection_set, vertex_index
from dihcode.survey import enumerate_connection_sets
from dihcode import oracle

SWEEP_GROUPS = [
    "Z5", "Z10", "Z15", "Z20", "Z25",
    "Z5xZ2", "Z5xZ4", "Z10xZ2", "Z5xZ2xZ2", "Z5xZ5",
]


def _build(group, set_text):
    spec = AbelianSpec.from_text(group)
    conn = parse_connection_set(spec, set_text)
    return conn, build_graph(conn)


@pytest.fixture(scope="module")
def sweep():
    """One full pass over every valid connection set of the ten sweep groups.

    Returns mismatch descriptions, the case-2 admitting instances with their
    brute-force code lists, sanity flags, and the elapsed wall time.
    """
    mismatches = []
    case2_records = []
    sanity_ok = True
    total = 0
    start = time.time()
    for group in SWEEP_GROUPS:
        spec = AbelianSpec.from_text(group)
        for conn in enumerate_connection_sets(spec):
            total += 1
            g = build_graph(conn)
            if any(m.bit_count() != 5 for m in g.closed_masks):
                sanity_ok = False
            result = classify(conn)
            found = oracle.find_all_codes(oracle.masks_from_graph(g))
            if result.admits != bool(found):
                mismatches.append((group, conn.literals, "admits"))
                continue
            if not result.admits:
                continue
            ref = vertex_index(reference_reflection(g))
            seeds = codes_containing_t(g, result)
            if set(seeds) != {c for c in found if ref in c}:
                mismatches.append((group, conn.literals, "codes-containing-t"))
            size = 2 * spec.order // 5
            if any(len(c) != size for c in found + seeds):
                sanity_ok = False
            if result.case == CASE2:
                case2_records.append((group, ",".join(conn.literals), found))
    elapsed = time.time() - start
    return {
        "mismatches": mismatches,
        "case2": case2_records,
        "sanity": sanity_ok,
        "total": total,
        "elapsed": elapsed,
    }


def test_criterion_1_desk_example_with_rotation_pair():
    start = time.time()
    conn, g = _build("Z5", "(1),(4),t,(4)t")  # rotations s0, s0^4; t and t*s0
    result = classify(conn)
    assert result.admits and result.case == CASE1
    w = result.witnesses[0]
    assert (w.n, w.m, w.h) == (5, 1, 1)
    seeds = codes_containing_t(g, result)
    assert [{g.vertex_label(v) for v in c} for c in seeds] == [{"t", "(3)"}]
    found = oracle.find_all_codes(oracle.masks_from_graph(g))
    assert all_perfect_codes(g, seeds) == found
    assert time.time() - start < 1.0


def test_criterion_2_desk_example_all_reflections():
    start = time.time()
    conn, g = _build("Z5", "t,(4)t,(2)t,(1)t")  # t, t*s0, t*s0^3, t*s0^4
    result = classify(conn)
    assert result.admits and result.case == CASE2
    assert any(w.v == 2 for w in result.witnesses)
    seeds = codes_containing_t(g, result)
    assert {"t", "(2)"} in [{g.vertex_label(v) for v in c} for c in seeds]
    found = oracle.find_all_codes(oracle.masks_from_graph(g))
    assert len(found) == len(all_perfect_codes(g, seeds))
    assert time.time() - start < 1.0


def test_criterion_3_master_equivalence(sweep):
    assert sweep["mismatches"] == []
    assert sweep["total"] > 60000
    assert sweep["elapsed"] <= 600


def test_criterion_4_no_code_shapes():
    shape_samples = {"one-reflection": 0, "three-reflections": 0, "two-involutions": 0}
    for group in ("Z10", "Z20", "Z10xZ2", "Z5xZ2xZ2"):
        spec = AbelianSpec.from_text(group)
        assert spec.order % 5 == 0 and 2 * spec.order <= 200
        for conn in enumerate_connection_sets(spec):
            k = len(conn.reflected)
            if k == 1:
                shape = "one-reflection"
            elif k == 3:
                shape = "three-reflections"
            elif k == 2 and all(
                spec.order_of(x.apart) == 2 for x in conn.rotations
            ):
                shape = "two-involutions"
            else:
                continue
            if shape_samples[shape] >= 50:
                continue
            g = build_graph(conn)
            assert not oracle.exists_code(oracle.masks_from_graph(g)), (
                group, conn.literals,
            )
            shape_samples[shape] += 1
        if all(v >= 50 for v in shape_samples.values()):
            break
    assert all(v >= 50 for v in shape_samples.values()), shape_samples


def test_criterion_5_reduction_certificates():
    checked = 0
    for group in ("Z5", "Z10", "Z15", "Z5xZ2"):
        spec = AbelianSpec.from_text(group)
        for conn in enumerate_connection_sets(spec):
            if len(conn.reflected) != 2:
                continue
            if any(spec.order_of(x.apart) == 2 for x in conn.rotations):
                continue
            red = reduce_case1(build_graph(conn))
            assert red.edge_preserving, (group, conn.literals)
            assert len(red.sigma) == 2 * spec.order
            assert len(set(red.sigma.values())) == 2 * spec.order
            checked += 1
        if checked >= 20:
            break
    assert checked >= 20


def test_criterion_6_structural_invariants_on_oracle_codes(sweep):
    assert sweep["case2"], "no case-2 admitting instances collected"
    for group, set_text, found in sweep["case2"]:
        conn, g = _build(group, set_text)
        w = classify(conn).witnesses[0]
        for code in found:
            assert spacing_invariant(g, code, w.s0), (group, set_text, code)
            assert reflection_gap_invariant(g, code, w.t_choice, w.s0), (
                group, set_text, code,
            )
            assert layer_invariant(g, code, w.t_choice, w.s0, w.s1, w.s2), (
                group, set_text, code,
            )
            assert window_invariant(g, code, w.t_choice, w.s0, w.s1, w.s2), (
                group, set_text, code,
            )


def test_criterion_7_sanity(sweep):
    assert sweep["sanity"]
