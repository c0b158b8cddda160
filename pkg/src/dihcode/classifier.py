"""Decide whether a quartic Cayley graph on Dih(A) admits a perfect code.

The decision is by exhaustive normalization: any reflection in S can serve as
the defining involution t' (t'at' = a^{-1} for all a in A), and in the
all-reflection case any assignment of the remaining elements to the roles
(s0, s1, s2) is scanned.  Every witness parameterization is returned in a
deterministic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .abelian import (
    AbelianSpec,
    AElem,
    all_log_pairs,
    cached_min_power,
    power_index,
)
from .gendihedral import ConnectionSet, GElem, format_gelem, g_mul, vertex_index

CASE1 = "Case1"
CASE2 = "Case2"
NO_CODE = "NoCode"

NOT_DIVISIBLE_BY_5 = "NotDivisibleBy5"
ONE_REFLECTION_SHAPE = "OneReflectionShape"
THREE_REFLECTION_SHAPE = "ThreeReflectionShape"
TWO_INVOLUTION_SHAPE = "TwoInvolutionShape"
CONGRUENCE_FAIL = "CongruenceFail"


def sigma(k: int) -> int:
    """Parity indicator (1 - (-1)^k) / 2."""
    return (1 - (-1) ** k) // 2


@dataclass(frozen=True)
class Case1Witness:
    """One admitting parameterization for S = {s1, s1^-1, t', t'*s0}."""

    t_choice: GElem
    s0: AElem
    s1: AElem
    n: int
    m: int
    h: int
    u: int
    sign: str  # "+" or "-"

    def to_json(self) -> dict:
        return {
            "t_choice": format_gelem(self.t_choice),
            "s0": self.t_choice.spec.format_element(self.s0),
            "s1": self.t_choice.spec.format_element(self.s1),
            "n": self.n,
            "m": self.m,
            "h": self.h,
            "u": self.u,
            "sign": self.sign,
        }


@dataclass(frozen=True)
class Case2Witness:
    """One admitting parameterization for S = {t', t'*s0, t'*s1, t'*s2}."""

    t_choice: GElem
    s0: AElem
    s1: AElem
    s2: AElem
    n: int
    m: int
    l: int
    v: int
    a: int
    b: int
    alpha1: int
    alpha2: int
    j: int

    def to_json(self) -> dict:
        spec = self.t_choice.spec
        return {
            "t_choice": format_gelem(self.t_choice),
            "roles": [spec.format_element(s) for s in (self.s0, self.s1, self.s2)],
            "n": self.n,
            "m": self.m,
            "l": self.l,
            "v": self.v,
            "a": self.a,
            "b": self.b,
            "alpha1": self.alpha1,
            "alpha2": self.alpha2,
            "j": self.j,
        }


@dataclass(frozen=True)
class ClassificationResult:
    reflections: int
    admits: bool
    case: str
    witnesses: tuple
    rejection: str | None = None

    def to_json(self) -> dict:
        return {
            "admits": self.admits,
            "case": self.case,
            "reflections": self.reflections,
            "witnesses": [w.to_json() for w in self.witnesses],
            "rejection": self.rejection,
        }


def case1_congruence(h: int, m: int, n: int) -> list[tuple[int, str]]:
    """All even u in [0, 2(n/5-1)] and signs with h = 5u/2 +- m (mod n)."""
    if n % 5:
        raise ValueError("case-1 congruence requires 5 | n")
    hits = []
    for u in range(0, 2 * (n // 5 - 1) + 1, 2):
        for s, label in ((1, "+"), (-1, "-")):
            if (h - (5 * u // 2 + s * m)) % n == 0:
                hits.append((u, label))
    return hits


def _dlog(spec: AbelianSpec, base: AElem, target: AElem, n: int) -> int:
    e = power_index(spec, base).get(spec.index(target))
    if e is None:
        raise ValueError("target not a power of base")
    return e


@lru_cache(maxsize=None)
def _cached_log_pairs(spec, y, s0, s1, jmax):
    return all_log_pairs(spec, y, s0, s1, jmax)


def _classify_two_reflections(conn: ConnectionSet) -> ClassificationResult:
    spec = conn.spec
    x, y = (g.apart for g in conn.rotations)
    if spec.order_of(x) == 2 and spec.order_of(y) == 2:
        return ClassificationResult(2, False, NO_CODE, (), TWO_INVOLUTION_SHAPE)
    # Inverse-closure forces {x, y} = {s1, s1^-1}; pick the canonical label.
    s1 = min(x, y, key=spec.index)
    refl = sorted(conn.reflected, key=vertex_index)
    wits = []
    for t_choice in refl:
        other = refl[1] if t_choice is refl[0] else refl[0]
        s0 = g_mul(t_choice, other).apart
        n = spec.order_of(s0)
        if n % 5:
            continue
        m, power = cached_min_power(spec, s1, (s0,))
        h = _dlog(spec, s0, power, n)
        for u, sign in case1_congruence(h, m, n):
            wits.append(Case1Witness(t_choice, s0, s1, n, m, h, u, sign))
    wits.sort(key=lambda w: (vertex_index(w.t_choice), w.u, w.sign))
    if wits:
        return ClassificationResult(2, True, CASE1, tuple(wits))
    return ClassificationResult(2, False, NO_CODE, (), CONGRUENCE_FAIL)


def _classify_four_reflections(conn: ConnectionSet) -> ClassificationResult:
    spec = conn.spec
    refl = sorted(conn.elements, key=vertex_index)
    wits = []
    for t_choice in refl:
        parts = sorted(
            (g_mul(t_choice, r).apart for r in refl if r != t_choice), key=spec.index
        )
        for s0, s1, s2 in permutations(parts):
            n = spec.order_of(s0)
            if n % 5:
                continue
            m, p1 = cached_min_power(spec, s1, (s0,))
            l, p2 = cached_min_power(spec, s2, (s0, s1))
            e1 = _dlog(spec, s0, p1, n)
            reps = _cached_log_pairs(spec, p2, s0, s1, m)
            for v in (2, 3, 4):
                pair = (2 + sigma(v), v - sigma(v) - 1)
                for a, b in (pair, pair[::-1]):
                    # 5*alpha1 = e1 + a*m (mod n) with alpha1 in [0, n/5);
                    # solvable iff the residue is a multiple of 5.
                    r1 = (e1 + a * m) % n
                    if r1 % 5:
                        continue
                    alpha1 = r1 // 5
                    for e, j in reps:
                        r2 = (e + b * l - a * j) % n
                        if r2 % 5:
                            continue
                        wits.append(
                            Case2Witness(
                                t_choice, s0, s1, s2, n, m, l,
                                v, a, b, alpha1, r2 // 5, j,
                            )
                        )
    spec_idx = conn.spec.index
    wits.sort(
        key=lambda w: (
            vertex_index(w.t_choice),
            spec_idx(w.s0),
            spec_idx(w.s1),
            spec_idx(w.s2),
            w.v,
            w.a,
            w.alpha1,
            w.alpha2,
            w.j,
        )
    )
    if wits:
        return ClassificationResult(4, True, CASE2, tuple(wits))
    return ClassificationResult(4, False, NO_CODE, (), CONGRUENCE_FAIL)


def classify(conn: ConnectionSet) -> ClassificationResult:
    """Full decision with all witnesses, per the exhaustive normalization."""
    k = len(conn.reflected)
    if conn.spec.order % 5:
        # |G| = 2|A| and a quartic perfect code forces 5|D| = |G|.
        return ClassificationResult(k, False, NO_CODE, (), NOT_DIVISIBLE_BY_5)
    if k == 1:
        return ClassificationResult(1, False, NO_CODE, (), ONE_REFLECTION_SHAPE)
    if k == 3:
        return ClassificationResult(3, False, NO_CODE, (), THREE_REFLECTION_SHAPE)
    if k == 2:
        return _classify_two_reflections(conn)
    return _classify_four_reflections(conn)
