"""Unit tests for generalized dihedral group arithmetic and connection sets."""

import pytest
from hypothesis import given, strategies as st

from dihcode.abelian import AbelianSpec
from dihcode.gendihedral import (
    ConnectionSetError,
    GElem,
    canonical_t,
    format_gelem,
    g_inv,
    g_mul,
    g_pow,
    identity,
    parse_connection_set,
    parse_gelem,
    split_toplevel,
    validate_connection_set,
    vertex_element,
    vertex_index,
)

specs = st.builds(
    AbelianSpec,
    st.lists(st.integers(min_value=2, max_value=10), min_size=1, max_size=2).map(tuple),
)


def gelem_of(spec):
    apart = st.tuples(*(st.integers(min_value=0, max_value=n - 1) for n in spec.moduli))
    return st.builds(GElem, st.just(spec), apart, st.integers(min_value=0, max_value=1))


triples = specs.flatmap(
    lambda s: st.tuples(gelem_of(s), gelem_of(s), gelem_of(s))
)


@given(triples)
def test_group_axioms(xyz):
    x, y, z = xyz
    e = identity(x.spec)
    assert g_mul(g_mul(x, y), z) == g_mul(x, g_mul(y, z))
    assert g_mul(x, e) == x and g_mul(e, x) == x
    assert g_mul(x, g_inv(x)) == e


@given(triples)
def test_inverse_antihomomorphism(xyz):
    x, y, _ = xyz
    assert g_inv(g_mul(x, y)) == g_mul(g_inv(y), g_inv(x))


@given(specs.flatmap(gelem_of))
def test_reflections_are_involutions(x):
    if x.flip:
        assert g_mul(x, x) == identity(x.spec)
        assert g_inv(x) == x


@given(specs.flatmap(gelem_of))
def test_conjugation_by_t_inverts(x):
    t = canonical_t(x.spec)
    if not x.flip:
        assert g_mul(g_mul(t, x), t) == g_inv(x)


def test_g_pow():
    spec = AbelianSpec((10,))
    g = GElem(spec, (3,), 0)
    assert g_pow(g, 4) == GElem(spec, (2,), 0)
    assert g_pow(g, 0) == identity(spec)
    assert g_pow(g, -1) == g_inv(g)


def test_vertex_index_bijection():
    spec = AbelianSpec((5, 2))
    seen = {vertex_index(vertex_element(spec, v)) for v in range(2 * spec.order)}
    assert seen == set(range(2 * spec.order))
    assert vertex_index(identity(spec)) == 0
    assert vertex_index(canonical_t(spec)) == 1


def test_parse_and_format_gelem():
    spec = AbelianSpec((5,))
    for text, expect in (
        ("e", GElem(spec, (0,), 0)),
        ("t", GElem(spec, (0,), 1)),
        ("(3)", GElem(spec, (3,), 0)),
        ("(3)t", GElem(spec, (3,), 1)),
        ("3", GElem(spec, (3,), 0)),
        ("3t", GElem(spec, (3,), 1)),
    ):
        assert parse_gelem(spec, text) == expect
    rank2 = AbelianSpec((5, 2))
    g = parse_gelem(rank2, "(3,1)t")
    assert g == GElem(rank2, (3, 1), 1)
    assert parse_gelem(rank2, format_gelem(g)) == g


def test_split_toplevel():
    assert split_toplevel("t,(1,0)t,(3,1)") == ["t", "(1,0)t", "(3,1)"]
    assert split_toplevel(" t , (1)t ") == ["t", "(1)t"]


def test_validate_rejects_wrong_size():
    spec = AbelianSpec((5,))
    with pytest.raises(ConnectionSetError) as exc:
        parse_connection_set(spec, "t,(1)t,(2)t")
    assert exc.value.reason == "NotQuartic"


def test_validate_rejects_identity():
    spec = AbelianSpec((5,))
    with pytest.raises(ConnectionSetError) as exc:
        parse_connection_set(spec, "e,t,(1),(4)")
    assert exc.value.reason == "ContainsIdentity"


def test_validate_rejects_not_inverse_closed():
    spec = AbelianSpec((5,))
    with pytest.raises(ConnectionSetError) as exc:
        parse_connection_set(spec, "t,(1)t,(1),(2)")
    assert exc.value.reason == "NotInverseClosed"


def test_validate_rejects_non_generating():
    spec = AbelianSpec((5, 2))
    with pytest.raises(ConnectionSetError) as exc:
        parse_connection_set(spec, "t,(1,0)t,(1,0),(4,0)")
    assert exc.value.reason == "NotGenerating"


def test_validate_rejects_no_reflection():
    spec = AbelianSpec((5, 2))
    with pytest.raises(ConnectionSetError) as exc:
        validate_connection_set(
            spec,
            [GElem(spec, (1, 0), 0), GElem(spec, (4, 0), 0),
             GElem(spec, (1, 1), 0), GElem(spec, (4, 1), 0)],
        )
    assert exc.value.reason == "NoReflection"


def test_validate_rejects_duplicates():
    spec = AbelianSpec((5,))
    with pytest.raises(ConnectionSetError):
        parse_connection_set(spec, "t,t,(1),(4)")


def test_connection_set_accessors():
    spec = AbelianSpec((5,))
    conn = parse_connection_set(spec, "(1),(4),t,(4)t")
    # Elements are sorted by vertex index, interleaving rotations and reflections.
    assert conn.literals == ("t", "(1)", "(4)", "(4)t")
    assert len(conn.reflected) == 2 and len(conn.rotations) == 2
