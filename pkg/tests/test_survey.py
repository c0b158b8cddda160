"""Unit tests for connection-set sweeps and deduplication."""

from dihcode.abelian import AbelianSpec
from dihcode.gendihedral import ConnectionSetError, validate_connection_set
from dihcode.survey import (
    CSV_COLUMNS,
    canonical_key,
    enumerate_connection_sets,
    run_survey,
    survey_instance,
)


def test_enumerate_connection_sets_complete_z5():
    spec = AbelianSpec.from_text("Z5")
    conns = enumerate_connection_sets(spec)
    assert len(conns) == 25
    assert len({tuple(c.literals) for c in conns}) == 25
    # Spot-check: the all-reflection count is C(5,4) = 5.
    assert sum(1 for c in conns if len(c.reflected) == 4) == 5


def test_enumerate_connection_sets_matches_brute_force():
    spec = AbelianSpec.from_text("Z5xZ2")
    from itertools import combinations

    from dihcode.gendihedral import vertex_element

    brute = set()
    all_elems = [vertex_element(spec, v) for v in range(2 * spec.order)]
    for cand in combinations(all_elems, 4):
        try:
            brute.add(tuple(validate_connection_set(spec, cand).literals))
        except (ConnectionSetError, ValueError):
            continue
    assert {tuple(c.literals) for c in enumerate_connection_sets(spec)} == brute


def test_canonical_key_identifies_shifted_reflections():
    spec = AbelianSpec.from_text("Z10")
    base = enumerate_connection_sets(spec)
    keyed = {}
    for conn in base:
        keyed.setdefault(canonical_key(conn), []).append(conn)
    group_cls = [v for v in keyed.values() if len(v) > 1]
    assert group_cls  # shifts do occur
    # Members of one class must agree on classification verdict and code count.
    for cls in group_cls[:5]:
        rows = [
            survey_instance("Z10", ",".join(c.literals), oracle_check=True)
            for c in cls
        ]
        assert len({r["admits"] for r in rows}) == 1
        assert len({r["num_codes_total"] for r in rows}) == 1
        assert all(r["oracle_agree"] == "ok" for r in rows)


def test_survey_instance_row_shape():
    row = survey_instance("Z5", "(1),(4),t,(4)t", oracle_check=True)
    assert set(row) == set(CSV_COLUMNS)
    assert row["admits"] == "true" and row["case"] == "Case1"
    assert (row["n"], row["m"], row["l"]) == ("5", "1", "1")
    assert row["num_codes_containing_t"] == "1"
    assert row["num_codes_total"] == "5"
    assert row["oracle_agree"] == "ok"


def test_survey_instance_records_errors():
    row = survey_instance("Z5", "t,(1),(2),(3)")
    assert row["case"].startswith("Error(")


def test_run_survey_stable_order():
    a = run_survey(["Z5"], raw=True)
    b = run_survey(["Z5"], raw=True)
    assert a == b
