"""Elements of the generalized dihedral group Dih(A) and quartic connection sets.

An element is written a*t^eps with a in the abelian group A and eps in {0,1};
the distinguished involution t inverts A, so (a*t^eps)(b*t^delta) =
(a + (-1)^eps b)*t^(eps xor delta).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .abelian import AbelianSpec, AElem, SpecMismatchError

NOT_QUARTIC = "NotQuartic"
CONTAINS_IDENTITY = "ContainsIdentity"
NOT_INVERSE_CLOSED = "NotInverseClosed"
NOT_GENERATING = "NotGenerating"
NO_REFLECTION = "NoReflection"


class ConnectionSetError(ValueError):
    """A candidate connection set violates one of the validity rules."""

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True)
class GElem:
    """Group element a*t^flip; immutable and hashable."""

    spec: AbelianSpec
    apart: AElem
    flip: int

    def __post_init__(self) -> None:
        if self.flip not in (0, 1):
            raise ValueError("flip must be 0 or 1")
        object.__setattr__(self, "apart", self.spec.reduce(self.apart))

    @property
    def is_reflection(self) -> bool:
        return self.flip == 1

    def __str__(self) -> str:
        return format_gelem(self)


def identity(spec: AbelianSpec) -> GElem:
    return GElem(spec, spec.identity, 0)


def canonical_t(spec: AbelianSpec) -> GElem:
    """The distinguished involution t itself (identity A-part, flipped)."""
    return GElem(spec, spec.identity, 1)


def g_mul(x: GElem, y: GElem) -> GElem:
    if x.spec != y.spec:
        raise SpecMismatchError("elements from different groups")
    spec = x.spec
    b = spec.neg(y.apart) if x.flip else y.apart
    return GElem(spec, spec.add(x.apart, b), x.flip ^ y.flip)


def g_inv(x: GElem) -> GElem:
    if x.flip:
        return x
    return GElem(x.spec, x.spec.neg(x.apart), 0)


def g_pow(x: GElem, k: int) -> GElem:
    out = identity(x.spec)
    base = x if k >= 0 else g_inv(x)
    for _ in range(abs(k)):
        out = g_mul(out, base)
    return out


def vertex_index(x: GElem) -> int:
    """Canonical vertex id 2*(mixed-radix index of a) + flip.

    Interleaves rotations and reflections so layer cycles are contiguous.
    """
    return 2 * x.spec.index(x.apart) + x.flip


def vertex_element(spec: AbelianSpec, v: int) -> GElem:
    return GElem(spec, spec.element(v >> 1), v & 1)


def format_gelem(x: GElem) -> str:
    if x.apart == x.spec.identity:
        return "t" if x.flip else "e"
    body = x.spec.format_element(x.apart)
    return body + "t" if x.flip else body


def parse_gelem(spec: AbelianSpec, text: str) -> GElem:
    """Parse ``e``, ``t``, ``(3,1)``, ``(3,1)t``, or bare-integer forms."""
    text = text.strip()
    if text == "e":
        return identity(spec)
    if text == "t":
        return canonical_t(spec)
    flip = 0
    if text.endswith("t"):
        flip = 1
        text = text[:-1].strip()
    return GElem(spec, spec.parse_element(text), flip)


@dataclass(frozen=True)
class ConnectionSet:
    """A validated inverse-closed quartic generating set with a reflection."""

    spec: AbelianSpec
    elements: tuple[GElem, ...]

    @property
    def reflected(self) -> tuple[GElem, ...]:
        return tuple(x for x in self.elements if x.flip)

    @property
    def rotations(self) -> tuple[GElem, ...]:
        return tuple(x for x in self.elements if not x.flip)

    @property
    def literals(self) -> tuple[str, ...]:
        return tuple(format_gelem(x) for x in self.elements)

    def __str__(self) -> str:
        return "{" + ",".join(self.literals) + "}"


def _generates(spec: AbelianSpec, elems: Iterable[GElem]) -> bool:
    """Breadth-first closure over the whole group; true iff it reaches 2|A|."""
    steps = [(x.apart, x.flip) for x in elems]
    seen = {vertex_index(identity(spec))}
    frontier = [(spec.identity, 0)]
    while frontier:
        nxt = []
        for a, eps in frontier:
            for b, phi in steps:
                part = spec.add(a, spec.neg(b) if eps else b)
                flip = eps ^ phi
                v = 2 * spec.index(part) + flip
                if v not in seen:
                    seen.add(v)
                    nxt.append((part, flip))
        frontier = nxt
    return len(seen) == 2 * spec.order


def validate_connection_set(spec: AbelianSpec, raw: Iterable[GElem]) -> ConnectionSet:
    """Check the four structural rules and return the validated set.

    Raises ConnectionSetError with a reason naming the first violated rule.
    """
    elems = list(raw)
    for x in elems:
        if x.spec != spec:
            raise SpecMismatchError("connection-set element from a different group")
    distinct = sorted(set(elems), key=vertex_index)
    if len(elems) != 4 or len(distinct) != 4:
        raise ConnectionSetError(
            NOT_QUARTIC, f"expected 4 distinct elements, got {len(distinct)}"
        )
    if identity(spec) in distinct:
        raise ConnectionSetError(CONTAINS_IDENTITY, "identity element not allowed in S")
    members = set(distinct)
    for x in distinct:
        if g_inv(x) not in members:
            raise ConnectionSetError(
                NOT_INVERSE_CLOSED, f"inverse of {format_gelem(x)} missing from S"
            )
    if not any(x.flip for x in distinct):
        raise ConnectionSetError(NO_REFLECTION, "S must meet the reflection coset tA")
    if not _generates(spec, distinct):
        raise ConnectionSetError(NOT_GENERATING, "S does not generate the whole group")
    return ConnectionSet(spec, tuple(distinct))


def parse_connection_set(spec: AbelianSpec, text: str) -> ConnectionSet:
    """Parse a comma-separated element list, splitting at paren depth zero."""
    return validate_connection_set(
        spec, [parse_gelem(spec, tok) for tok in split_toplevel(text)]
    )


def split_toplevel(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if cur:
        parts.append("".join(cur).strip())
    return [p for p in parts if p]
