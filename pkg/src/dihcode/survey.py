"""Family sweeps: enumerate every valid quartic connection set of a group,
classify each, and optionally cross-check against the exact-cover oracle.

Row computation is a pure function of (group literal, set literals), so rows
may be computed in a process pool; emission is buffered and sorted, making the
CSV byte-identical across runs and worker counts.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from itertools import combinations

from .abelian import AbelianSpec
from .cayley import build_graph
from .classifier import CASE1, classify
from .enumerator import (
    all_perfect_codes,
    codes_containing_t,
    reference_reflection,
)
from .gendihedral import (
    ConnectionSet,
    ConnectionSetError,
    GElem,
    g_mul,
    parse_connection_set,
    validate_connection_set,
    vertex_index,
)
from . import oracle

CSV_COLUMNS = [
    "group",
    "set",
    "reflections",
    "admits",
    "case",
    "n",
    "m",
    "l",
    "v",
    "a",
    "b",
    "num_codes_containing_t",
    "num_codes_total",
    "oracle_agree",
]


def enumerate_connection_sets(spec: AbelianSpec) -> list[ConnectionSet]:
    """Every valid quartic connection set of Dih(A), in deterministic order.

    Candidates are assembled from inverse-closed building blocks (reflections,
    A-involutions, inverse pairs) and filtered through full validation.
    """
    elems = spec.elements()
    reflections = [GElem(spec, a, 1) for a in elems]
    involutions = [GElem(spec, a, 0) for a in elems if spec.order_of(a) == 2]
    pairs = []
    seen = set()
    for a in elems:
        order = spec.order_of(a)
        if order <= 2:
            continue
        key = frozenset((spec.index(a), spec.index(spec.neg(a))))
        if key not in seen:
            seen.add(key)
            pairs.append((GElem(spec, a, 0), GElem(spec, spec.neg(a), 0)))

    candidates: list[tuple[GElem, ...]] = []
    candidates += [c for c in combinations(reflections, 4)]
    candidates += [(*r, i) for r in combinations(reflections, 3) for i in involutions]
    candidates += [(*r, *p) for r in combinations(reflections, 2) for p in pairs]
    candidates += [(*r, *i) for r in combinations(reflections, 2)
                   for i in combinations(involutions, 2)]
    candidates += [(r, *p, i) for r in reflections for p in pairs for i in involutions]
    candidates += [(r, *i) for r in reflections for i in combinations(involutions, 3)]

    out = []
    for cand in candidates:
        try:
            out.append(validate_connection_set(spec, cand))
        except ConnectionSetError:
            continue
    out.sort(key=lambda c: tuple(vertex_index(x) for x in c.elements))
    return out


def canonical_key(conn: ConnectionSet) -> tuple:
    """Normalization canonical form: rotations plus, minimized over the choice
    of t' in S, the re-expressed reflection parts t'*r.

    Sets with equal keys have reflections differing by a common shift and the
    same rotations, which yields isomorphic graphs with identical code counts.
    """
    spec = conn.spec
    rot = tuple(sorted(spec.index(x.apart) for x in conn.rotations))
    best = None
    for t_choice in conn.reflected:
        parts = tuple(
            sorted(spec.index(g_mul(t_choice, r).apart) for r in conn.reflected)
        )
        if best is None or parts < best:
            best = parts
    return (rot, best)


def survey_instance(
    group_text: str,
    set_text: str,
    oracle_check: bool = False,
    budget: int = oracle.DEFAULT_BUDGET,
) -> dict[str, str]:
    """One CSV row; never raises, errors are recorded in the row."""
    row = {col: "" for col in CSV_COLUMNS}
    row["group"] = group_text
    row["set"] = set_text
    try:
        spec = AbelianSpec.from_text(group_text)
        conn = parse_connection_set(spec, set_text)
        row["set"] = ";".join(conn.literals)
        result = classify(conn)
        row["reflections"] = str(result.reflections)
        row["admits"] = "true" if result.admits else "false"
        row["case"] = result.case if result.admits else f"NoCode({result.rejection})"
        if result.witnesses:
            w = result.witnesses[0]
            row["n"], row["m"] = str(w.n), str(w.m)
            if result.case == CASE1:
                row["l"] = "1"
            else:
                row["l"], row["v"] = str(w.l), str(w.v)
                row["a"], row["b"] = str(w.a), str(w.b)
        g = build_graph(conn)
        seeds = codes_containing_t(g, result)
        total = all_perfect_codes(g, seeds) if seeds else []
        row["num_codes_containing_t"] = str(len(seeds))
        row["num_codes_total"] = str(len(total))
        if oracle_check:
            masks = oracle.masks_from_graph(g)
            found = oracle.find_all_codes(masks, budget=budget)
            ref = vertex_index(reference_reflection(g))
            found_ref = [c for c in found if ref in c]
            agree = (bool(found) == result.admits) and (found_ref == seeds) and (
                found == total
            )
            row["oracle_agree"] = "ok" if agree else "mismatch"
    except Exception as exc:  # noqa: BLE001 - per-row errors must not abort sweeps
        row["case"] = f"Error({type(exc).__name__}:{exc})"
    return row


def _row_task(args: tuple[str, str, bool, int]) -> dict[str, str]:
    return survey_instance(*args)


def run_survey(
    groups: list[str],
    oracle_check: bool = False,
    raw: bool = False,
    jobs: int = 1,
    budget: int = oracle.DEFAULT_BUDGET,
    max_order: int | None = None,
) -> list[dict[str, str]]:
    """Rows for every (deduplicated) instance of every group, in stable order."""
    tasks: list[tuple[str, str, bool, int]] = []
    for group_text in groups:
        spec = AbelianSpec.from_text(group_text)
        if max_order is not None and 2 * spec.order > max_order:
            continue
        conns = enumerate_connection_sets(spec)
        if not raw:
            picked = {}
            for conn in conns:
                picked.setdefault(canonical_key(conn), conn)
            conns = sorted(
                picked.values(),
                key=lambda c: tuple(vertex_index(x) for x in c.elements),
            )
        tasks += [(group_text, ",".join(c.literals), oracle_check, budget) for c in conns]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_row_task, tasks, chunksize=16))
    else:
        rows = [_row_task(t) for t in tasks]
    return rows
