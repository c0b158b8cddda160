"""Arithmetic in finite abelian groups given as direct products of cyclic factors.

Elements are exponent vectors (tuples of residues, one per factor).  Every
question is answered by enumeration at desk scale; the group order is capped so
closures and membership tables can stay dense.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm, prod

#: Largest group order the dense enumeration routines accept.
MAX_GROUP_ORDER = 10**6

AElem = tuple[int, ...]


class GroupOrderError(ValueError):
    """Requested group order exceeds the enumeration cap."""


class SpecMismatchError(ValueError):
    """Operands belong to groups with different factor lists."""


_FACTOR_RE = re.compile(r"^z(\d+)$", re.IGNORECASE)


@dataclass(frozen=True)
class AbelianSpec:
    """A finite abelian group as an ordered list of cyclic factor orders.

    Two specs are equal only if their factor lists are equal; no normalization
    to invariant factors is done.
    """

    moduli: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.moduli:
            raise ValueError("at least one cyclic factor is required")
        if any(not isinstance(n, int) or n < 2 for n in self.moduli):
            raise ValueError("every cyclic factor must have integer order >= 2")
        if prod(self.moduli) > MAX_GROUP_ORDER:
            raise GroupOrderError(
                f"group order {prod(self.moduli)} exceeds cap {MAX_GROUP_ORDER}"
            )

    @classmethod
    def from_text(cls, text: str) -> "AbelianSpec":
        """Parse a spec literal such as ``Z5`` or ``Z10xZ2`` (case-insensitive)."""
        parts = text.strip().lower().split("x")
        moduli = []
        for part in parts:
            match = _FACTOR_RE.match(part.strip())
            if match is None:
                raise ValueError(f"bad group literal {text!r}")
            moduli.append(int(match.group(1)))
        return cls(tuple(moduli))

    def __str__(self) -> str:
        return "x".join(f"Z{n}" for n in self.moduli)

    @property
    def order(self) -> int:
        return prod(self.moduli)

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def identity(self) -> AElem:
        return (0,) * len(self.moduli)

    def check(self, x: AElem) -> None:
        if len(x) != len(self.moduli):
            raise SpecMismatchError(
                f"element of length {len(x)} in group {self} of rank {self.rank}"
            )

    def reduce(self, x: AElem) -> AElem:
        self.check(x)
        return tuple(e % n for e, n in zip(x, self.moduli))

    def add(self, x: AElem, y: AElem) -> AElem:
        self.check(x)
        self.check(y)
        return tuple((e + f) % n for e, f, n in zip(x, y, self.moduli))

    def neg(self, x: AElem) -> AElem:
        self.check(x)
        return tuple((-e) % n for e, n in zip(x, self.moduli))

    def pow(self, x: AElem, k: int) -> AElem:
        self.check(x)
        return tuple((e * k) % n for e, n in zip(x, self.moduli))

    def order_of(self, x: AElem) -> int:
        self.check(x)
        return lcm(*(n // gcd(n, e) for e, n in zip(x, self.moduli)))

    def index(self, x: AElem) -> int:
        """Mixed-radix encoding; O(1) membership key for dense member sets."""
        self.check(x)
        idx = 0
        for e, n in zip(x, self.moduli):
            idx = idx * n + e % n
        return idx

    def element(self, idx: int) -> AElem:
        if not 0 <= idx < self.order:
            raise ValueError(f"index {idx} out of range for group {self}")
        out = []
        for n in reversed(self.moduli):
            out.append(idx % n)
            idx //= n
        return tuple(reversed(out))

    def elements(self) -> list[AElem]:
        return [self.element(i) for i in range(self.order)]

    def parse_element(self, text: str) -> AElem:
        """Parse ``(3,1)``, or a bare integer when there is a single factor."""
        text = text.strip()
        if text.startswith("(") and text.endswith(")"):
            body = text[1:-1].strip()
            parts = [p.strip() for p in body.split(",")] if body else []
            if len(parts) != self.rank:
                raise ValueError(f"element {text!r} has wrong arity for {self}")
            return self.reduce(tuple(int(p) for p in parts))
        if self.rank == 1:
            return self.reduce((int(text),))
        raise ValueError(f"bad element literal {text!r} for group {self}")

    def format_element(self, x: AElem) -> str:
        x = self.reduce(x)
        return "(" + ",".join(str(e) for e in x) + ")"


@dataclass(frozen=True)
class SubgroupTable:
    """A subgroup given by generators, with its full member set materialized."""

    spec: AbelianSpec
    generators: tuple[AElem, ...]
    members: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, x: AElem) -> bool:
        return self.spec.index(x) in self.members

    def elements(self) -> list[AElem]:
        return [self.spec.element(i) for i in sorted(self.members)]


def subgroup_closure(spec: AbelianSpec, gens: list[AElem]) -> SubgroupTable:
    """Breadth-first closure of the generated subgroup; exact member set."""
    gens = tuple(spec.reduce(g) for g in gens)
    seen = {spec.index(spec.identity)}
    frontier = [spec.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                for step in (g, spec.neg(g)):
                    y = spec.add(x, step)
                    idx = spec.index(y)
                    if idx not in seen:
                        seen.add(idx)
                        nxt.append(y)
        frontier = nxt
    return SubgroupTable(spec, gens, frozenset(seen))


@lru_cache(maxsize=None)
def cached_closure(spec: AbelianSpec, gens: tuple[AElem, ...]) -> SubgroupTable:
    return subgroup_closure(spec, list(gens))


#: Largest order for which dense index tables are materialized.
DENSE_TABLE_LIMIT = 4096


@lru_cache(maxsize=None)
def index_tables(spec: AbelianSpec) -> tuple[list[list[int]], list[int]]:
    """Dense addition and negation tables on mixed-radix indices.

    Built once per spec; hot loops (graph builds, translation orbits) work on
    plain ints instead of exponent tuples.
    """
    if spec.order > DENSE_TABLE_LIMIT:
        raise GroupOrderError(f"dense tables limited to order {DENSE_TABLE_LIMIT}")
    elems = spec.elements()
    neg = [spec.index(spec.neg(a)) for a in elems]
    add = [[spec.index(spec.add(a, b)) for b in elems] for a in elems]
    return add, neg


def min_power_in(spec: AbelianSpec, x: AElem, table: SubgroupTable) -> tuple[int, AElem]:
    """Smallest m >= 1 with x^m in the subgroup, plus that power as witness.

    Always defined: x^o(x) is the identity, which every subgroup contains.
    """
    x = spec.reduce(x)
    p = x
    m = 1
    while p not in table:
        p = spec.add(p, x)
        m += 1
    return m, p


@lru_cache(maxsize=None)
def cached_min_power(
    spec: AbelianSpec, x: AElem, gens: tuple[AElem, ...]
) -> tuple[int, AElem]:
    return min_power_in(spec, x, cached_closure(spec, gens))


@lru_cache(maxsize=None)
def power_index(spec: AbelianSpec, base: AElem) -> dict[int, int]:
    """Discrete-log table: index of base^e -> e, for e in [0, o(base))."""
    n = spec.order_of(base)
    out: dict[int, int] = {}
    p = spec.identity
    for e in range(n):
        out[spec.index(p)] = e
        p = spec.add(p, base)
    return out


def all_log_pairs(
    spec: AbelianSpec, y: AElem, s0: AElem, s1: AElem, jmax: int
) -> list[tuple[int, int]]:
    """All representations y = s0^e * s1^j with 0 <= e < o(s0), 0 <= j < jmax.

    May return several pairs when the cyclic subgroups overlap; empty iff no
    representation with j < jmax exists.
    """
    y = spec.reduce(y)
    powers = power_index(spec, spec.reduce(s0))
    out = []
    for j in range(jmax):
        target = spec.add(y, spec.neg(spec.pow(s1, j)))
        e = powers.get(spec.index(target))
        if e is not None:
            out.append((e, j))
    return sorted(out)
