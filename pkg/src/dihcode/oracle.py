"""Independent ground truth: enumerate all perfect codes of a graph by exact
cover over closed neighborhoods.

Knows nothing about groups or the closed-form generators.  A perfect code is a
row selection covering every vertex exactly once; the search is bitset
backtracking with a fewest-candidates branching rule, deterministic regardless
of discovery order because results are sorted before return.
"""

from __future__ import annotations

import json
from typing import Sequence

DEFAULT_BUDGET = 1 << 20


class BudgetExceededError(RuntimeError):
    """The search visited more nodes than the configured work budget."""


def masks_from_edges(n_vertices: int, edges: Sequence[Sequence[int]]) -> list[int]:
    """Closed-neighborhood bitmasks from an explicit edge list."""
    masks = [1 << v for v in range(n_vertices)]
    for u, w in edges:
        masks[u] |= 1 << w
        masks[w] |= 1 << u
    return masks


def masks_from_json(text: str) -> list[int]:
    """Accepts the cayley module's JSON export, but any graph payload with
    ``vertices`` and ``edges`` works."""
    payload = json.loads(text)
    return masks_from_edges(len(payload["vertices"]), payload["edges"])


def masks_from_graph(g) -> list[int]:
    return list(g.closed_masks)


def _solve(
    masks: Sequence[int], budget: int, first_only: bool
) -> list[tuple[int, ...]]:
    n = len(masks)
    if n == 0:
        return [()]
    full = (1 << n) - 1
    # Regular graphs: a partition into k-sets needs k | n.
    counts = {m.bit_count() for m in masks}
    if len(counts) == 1 and n % counts.pop():
        return []
    covering = [[u for u in range(n) if masks[u] >> v & 1] for v in range(n)]
    solutions: list[tuple[int, ...]] = []
    nodes = 0

    def rec(covered: int, chosen: list[int]) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(f"exact-cover budget {budget} exceeded")
        if covered == full:
            solutions.append(tuple(sorted(chosen)))
            return first_only
        best: list[int] | None = None
        for v in range(n):
            if covered >> v & 1:
                continue
            cands = [u for u in covering[v] if not masks[u] & covered]
            if best is None or len(cands) < len(best):
                best = cands
                if not cands:
                    return False
        assert best is not None
        for u in best:
            chosen.append(u)
            done = rec(covered | masks[u], chosen)
            chosen.pop()
            if done:
                return True
        return False

    rec(0, [])
    return sorted(set(solutions))


def find_all_codes(
    masks: Sequence[int], budget: int = DEFAULT_BUDGET
) -> list[tuple[int, ...]]:
    """The complete duplicate-free list of perfect codes, in canonical order."""
    return _solve(masks, budget, first_only=False)


def exists_code(masks: Sequence[int], budget: int = DEFAULT_BUDGET) -> bool:
    """First-solution early exit variant of find_all_codes."""
    return bool(_solve(masks, budget, first_only=True))
