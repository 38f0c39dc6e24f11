"""s-torsion pairs: checking, enumeration, intervals, hearts and the interval/heart maps."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .extcat import (
    ZERO,
    FiniteExtCat,
    Obj,
    hom_vanishes,
    is_extension_closed,
    left_perp,
    negext_vanishes,
    obj_in_star,
    restrict_to,
    right_perp,
    star_subcat,
)

__all__ = [
    "TorsionError",
    "STorsPair",
    "StorsPoset",
    "Interval",
    "Report",
    "ShiftReport",
    "is_storsion",
    "enumerate_stors",
    "hasse",
    "canonical_decomposition",
    "heart_of",
    "phi",
    "psi",
    "verify_main_theorem",
    "verify_heart_lemma",
    "shift_closed_check",
    "verify_all",
    "member_key",
]


class TorsionError(ValueError):
    pass


def member_key(sub: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(sub))


@dataclass(frozen=True)
class STorsPair:
    T: frozenset[str]
    F: frozenset[str]
    stp1: bool = True
    stp2: bool = True
    stp3: bool = True

    @property
    def valid(self) -> bool:
        return self.stp1 and self.stp2 and self.stp3

    @property
    def flags(self) -> dict[str, bool]:
        return {"stp1": self.stp1, "stp2": self.stp2, "stp3": self.stp3}

    def __le__(self, other: "STorsPair") -> bool:
        return self.T <= other.T

    def __lt__(self, other: "STorsPair") -> bool:
        return self.T < other.T

    def key(self) -> tuple:
        return (len(self.T), member_key(self.T))

    def same(self, other: "STorsPair") -> bool:
        return self.T == other.T and self.F == other.F

    def to_dict(self) -> dict:
        return {"T": list(member_key(self.T)), "F": list(member_key(self.F)), **self.flags}

    def __str__(self) -> str:
        return "({" + ", ".join(member_key(self.T)) + "}, {" + ", ".join(member_key(self.F)) + "})"


def is_storsion(cat: FiniteExtCat, T: Iterable[str], F: Iterable[str]) -> STorsPair:
    """Evaluate the three s-torsion conditions for a pair of subcategories."""
    T, F = cat.subcat(T), cat.subcat(F)
    stp1 = all(obj_in_star(cat, m, T, F) for m in cat.indecs)
    return STorsPair(T, F, stp1, hom_vanishes(cat, T, F), negext_vanishes(cat, T, F))


@dataclass
class StorsPoset:
    """s-torsion pairs ordered by inclusion of torsion classes."""

    pairs: list[STorsPair]
    hasse_edges: list[tuple[int, int]] = field(default_factory=list)

    def leq(self, i: int, j: int) -> bool:
        return self.pairs[i] <= self.pairs[j]

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def find(self, T: Iterable[str]) -> STorsPair:
        T = frozenset(T)
        for p in self.pairs:
            if p.T == T:
                return p
        raise TorsionError("no s-torsion pair with T = {" + ", ".join(sorted(T)) + "}")

    def index(self, pair: STorsPair) -> int:
        for i, p in enumerate(self.pairs):
            if p.T == pair.T:
                return i
        raise TorsionError(f"{pair} is not in the poset")

    @property
    def bottom(self) -> STorsPair:
        return self.pairs[0]

    @property
    def top(self) -> STorsPair:
        return self.pairs[-1]

    def interval(self, t1: STorsPair, t2: STorsPair) -> list[STorsPair]:
        return [p for p in self.pairs if t1 <= p <= t2]

    def comparable_pairs(self) -> list[tuple[STorsPair, STorsPair]]:
        return [(a, b) for a in self.pairs for b in self.pairs if a <= b]

    def to_dot(self, name: str = "stors") -> str:
        from .dot import hasse_dot

        return hasse_dot(
            [", ".join(member_key(p.T)) for p in self.pairs], self.hasse_edges, name=name
        )

    def to_dict(self) -> dict:
        return {
            "pairs": [p.to_dict() for p in self.pairs],
            "hasse_edges": [[lo, hi] for lo, hi in self.hasse_edges],
        }


class _MaskTables:
    """Bitmask encodings of the data the candidate scan needs."""

    def __init__(self, cat: FiniteExtCat):
        idx = cat.index
        n = len(cat.indecs)
        self.n = n
        # hom_out[i]: indecs j with Hom(i, j) != 0; same for negext
        self.hom_out = [sum(1 << j for j in range(n) if cat.hom_dim[i, j]) for i in range(n)]
        self.neg_out = [sum(1 << j for j in range(n) if cat.negext_dim[i, j]) for i in range(n)]
        self.rows = [
            [(self._mask(idx, a), self._mask(idx, c)) for a, c in cat.conf[m]] for m in cat.indecs
        ]

    @staticmethod
    def _mask(idx, obj: Obj) -> int:
        out = 0
        for x in obj.summands:
            out |= 1 << idx[x]
        return out

    def in_star(self, m: int, xs: int, ys: int) -> bool:
        return any(a & ~xs == 0 and c & ~ys == 0 for a, c in self.rows[m])

    def extension_closed(self, s: int) -> bool:
        return all(s >> m & 1 or not self.in_star(m, s, s) for m in range(self.n))

    def outgoing(self, t: int) -> tuple[int, int]:
        """Targets of nonzero Hom and of nonzero E^-1 out of the members of t."""
        hom = neg = 0
        i = 0
        while t:
            if t & 1:
                hom |= self.hom_out[i]
                neg |= self.neg_out[i]
            t >>= 1
            i += 1
        return hom, neg

    def check(self, t: int, prune: bool) -> int | None:
        """F = T-perp as a mask when t is a torsion class, else None."""
        # cheapest tests first; the accepted set does not depend on the order
        hom, neg = self.outgoing(t)
        f = ((1 << self.n) - 1) & ~hom
        if neg & f:
            return None
        if not all(self.in_star(m, t, f) for m in range(self.n)):
            return None
        if prune and not self.extension_closed(t):
            return None
        return f


def _scan_chunk(args) -> list[STorsPair]:
    cat, masks, prune = args
    tables = _MaskTables(cat)
    out = []
    for mask in masks:
        fmask = tables.check(mask, prune)
        if fmask is None:
            continue
        T = frozenset(x for i, x in enumerate(cat.indecs) if mask >> i & 1)
        F = frozenset(x for i, x in enumerate(cat.indecs) if fmask >> i & 1)
        # every hit is re-confirmed through the subcategory-level check
        pair = is_storsion(cat, T, F)
        if not pair.valid:
            raise AssertionError(f"bitmask scan disagrees with is_storsion at {pair}")
        out.append(pair)
    return out


def enumerate_stors(cat: FiniteExtCat, prune: bool = True, jobs: int = 1) -> StorsPoset:
    """All s-torsion pairs, each torsion class T paired with F = T-perp.

    ``prune`` skips candidate classes that are not extension-closed.  With
    ``jobs > 1`` candidates are split across processes; the result does not
    depend on the split.
    """
    n = len(cat.indecs)
    masks = range(1 << n)
    if jobs > 1 and n > 8:
        chunks = [list(masks[k::jobs]) for k in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            found = [p for part in ex.map(_scan_chunk, [(cat, c, prune) for c in chunks]) for p in part]
    else:
        found = _scan_chunk((cat, masks, prune))
    found.sort(key=STorsPair.key)
    poset = StorsPoset(found)
    poset.hasse_edges = hasse(poset)
    return poset


def hasse(poset: StorsPoset) -> list[tuple[int, int]]:
    """Covering relations as (lower, upper) index pairs, in a fixed order."""
    pairs = poset.pairs
    n = len(pairs)
    below = [[pairs[i] < pairs[j] for j in range(n)] for i in range(n)]
    edges = []
    for i in range(n):
        for j in range(n):
            if below[i][j] and not any(below[i][k] and below[k][j] for k in range(n)):
                edges.append((i, j))
    edges.sort(key=lambda e: (pairs[e[1]].key(), pairs[e[0]].key()))
    return edges


def canonical_decomposition(cat: FiniteExtCat, t: STorsPair, M: Obj | str) -> tuple[Obj, Obj]:
    """(T_M, F^M) such that T_M -> M -> F^M is the conflation of M with ends in (T, F)."""
    if not t.valid:
        raise TorsionError(f"{t} is not an s-torsion pair")
    summands = (M,) if isinstance(M, str) else M.summands
    tpart, fpart = ZERO, ZERO
    for m in summands:
        rows = {(a, c) for a, c in cat.conf[m] if a.support() <= t.T and c.support() <= t.F}
        if not rows:
            raise TorsionError(f"no canonical conflation for {m!r}")
        if len(rows) > 1:
            raise TorsionError(f"ambiguous canonical conflation for {m!r}: {len(rows)} rows")
        a, c = rows.pop()
        tpart, fpart = tpart + a, fpart + c
    return tpart, fpart


@dataclass
class Interval:
    t1: STorsPair
    t2: STorsPair
    heart: frozenset[str]
    category: FiniteExtCat


def heart_of(cat: FiniteExtCat, t1: STorsPair, t2: STorsPair) -> Interval:
    if not t1 <= t2:
        raise TorsionError(f"not comparable: {t1} is not below {t2}")
    heart = t2.T & t1.F
    return Interval(t1, t2, heart, restrict_to(cat, heart, label=f"heart of {cat.label}"))


def phi(
    cat: FiniteExtCat,
    t1: STorsPair,
    t2: STorsPair,
    t: STorsPair,
    interval: Interval | None = None,
) -> STorsPair:
    """Send t in [t1, t2] to (T & F1, T2 & F), re-checked in the heart."""
    if not (t1 <= t <= t2):
        raise TorsionError(f"outside interval: {t}")
    iv = interval or heart_of(cat, t1, t2)
    return is_storsion(iv.category, t.T & t1.F, t2.T & t.F)


def psi(
    cat: FiniteExtCat,
    t1: STorsPair,
    t2: STorsPair,
    x: STorsPair,
    interval: Interval | None = None,
) -> STorsPair:
    """Send a heart pair (X, Y) to (T1 * X, Y * F2).

    The result is computed twice, once through the conflation table and once
    through perpendicular categories; a mismatch means the table is missing
    conflations.
    """
    iv = interval or heart_of(cat, t1, t2)
    if not x.T | x.F <= iv.heart or not is_storsion(iv.category, x.T, x.F).valid:
        raise TorsionError(f"invalid heart pair: {x}")
    T = star_subcat(cat, t1.T, x.T)
    F = star_subcat(cat, x.F, t2.F)
    if left_perp(cat, F) != T or right_perp(cat, T) != F:
        raise TorsionError(f"conflation data incomplete: star and perp disagree at {x}")
    return is_storsion(cat, T, F)


@dataclass
class Report:
    checks: list[dict] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c["passed"] for c in self.checks) and not self.counterexamples

    def check(self, name: str, ok: bool, **detail) -> bool:
        self.checks.append({"name": name, "passed": bool(ok), **detail})
        return ok

    def fail(self, check: str, **detail) -> None:
        self.counterexamples.append({"check": check, **detail})

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append({**c, "name": prefix + c["name"]})
        for c in other.counterexamples:
            self.counterexamples.append({**c, "check": prefix + c["check"]})

    def to_dict(self) -> dict:
        return {"checks": self.checks, "passed": self.passed, "counterexamples": self.counterexamples}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def verify_main_theorem(
    cat: FiniteExtCat,
    t1: STorsPair,
    t2: STorsPair,
    poset: StorsPoset | None = None,
) -> Report:
    """Exhaustively check that Phi and Psi are inverse poset isomorphisms preserving hearts."""
    rep = Report()
    if poset is None:
        poset = enumerate_stors(cat)
    iv = heart_of(cat, t1, t2)
    tag = f"[{', '.join(member_key(t1.T))}] <= [{', '.join(member_key(t2.T))}]"
    rep.check(f"heart extension-closed {tag}", is_extension_closed(cat, iv.heart))
    ambient = poset.interval(t1, t2)
    local = enumerate_stors(iv.category)

    def in_local(p: STorsPair) -> bool:
        return any(q.same(p) for q in local.pairs)

    def in_ambient(p: STorsPair) -> bool:
        return any(q.same(p) for q in ambient)

    phis = {}
    ok_a = True
    for t in ambient:
        x = phi(cat, t1, t2, t, iv)
        phis[member_key(t.T)] = x
        if not (x.valid and in_local(x)):
            ok_a = False
            rep.fail("phi lands in heart", pair=t.to_dict(), image=x.to_dict())
    rep.check(f"phi well-defined {tag}", ok_a, size=len(ambient))

    psis = {}
    ok_b = True
    for x in local:
        try:
            t = psi(cat, t1, t2, x, iv)
        except TorsionError as exc:
            ok_b = False
            rep.fail("psi well-defined", pair=x.to_dict(), error=str(exc))
            continue
        psis[member_key(x.T)] = t
        if not (t.valid and in_ambient(t)):
            ok_b = False
            rep.fail("psi lands in interval", pair=x.to_dict(), image=t.to_dict())
    rep.check(f"psi well-defined {tag}", ok_b, size=len(local))

    ok_c = len(ambient) == len(local)
    for t in ambient:
        back = psis.get(member_key(phis[member_key(t.T)].T))
        if back is None or not back.same(t):
            ok_c = False
            rep.fail("psi after phi", pair=t.to_dict())
    for x in local:
        there = psis.get(member_key(x.T))
        if there is None:
            ok_c = False
            continue
        back = phis.get(member_key(there.T))
        if back is None or not back.same(x):
            ok_c = False
            rep.fail("phi after psi", pair=x.to_dict())
    rep.check(f"mutually inverse {tag}", ok_c)

    ok_d = True
    for s in ambient:
        for t in ambient:
            if (s <= t) != (phis[member_key(s.T)] <= phis[member_key(t.T)]):
                ok_d = False
                rep.fail("phi order", pairs=[s.to_dict(), t.to_dict()])
    for x in local:
        for y in local:
            px, py = psis.get(member_key(x.T)), psis.get(member_key(y.T))
            if px is None or py is None:
                continue
            if (x <= y) != (px <= py):
                ok_d = False
                rep.fail("psi order", pairs=[x.to_dict(), y.to_dict()])
    rep.check(f"order isomorphism {tag}", ok_d)

    ok_e = True
    for s in ambient:
        for t in ambient:
            if not s <= t:
                continue
            ps, pt = phis[member_key(s.T)], phis[member_key(t.T)]
            if (t.T & s.F) != (pt.T & ps.F):
                ok_e = False
                rep.fail("phi preserves hearts", pairs=[s.to_dict(), t.to_dict()])
    for x in local:
        for y in local:
            if not x <= y:
                continue
            px, py = psis.get(member_key(x.T)), psis.get(member_key(y.T))
            if px is None or py is None:
                continue
            if (y.T & x.F) != (py.T & px.F):
                ok_e = False
                rep.fail("psi preserves hearts", pairs=[x.to_dict(), y.to_dict()])
    rep.check(f"hearts preserved {tag}", ok_e)
    return rep


def verify_heart_lemma(cat: FiniteExtCat, t: STorsPair, t_prime: STorsPair) -> bool:
    """For t' <= t: T = T' * (T & F') and F' = (T & F') * F."""
    if not t_prime <= t:
        raise TorsionError(f"not comparable: {t_prime} is not below {t}")
    middle = t.T & t_prime.F
    return star_subcat(cat, t_prime.T, middle) == t.T and star_subcat(cat, middle, t.F) == t_prime.F


@dataclass(frozen=True)
class ShiftReport:
    stp3: bool
    shift_closed_T: bool
    shift_closed_F: bool

    @property
    def lemma_consistent(self) -> bool:
        return self.stp3 == self.shift_closed_T == self.shift_closed_F

    def to_dict(self) -> dict:
        return {
            "stp3": self.stp3,
            "shift_closed_T": self.shift_closed_T,
            "shift_closed_F": self.shift_closed_F,
            "lemma_consistent": self.lemma_consistent,
        }


def shift_closed_check(cat: FiniteExtCat, t: STorsPair) -> ShiftReport:
    """Compare the third condition with closure of T under the shift and of F under its inverse."""
    if cat.shift is None:
        raise TorsionError(f"no shift data on {cat.label!r}")
    if not (t.stp1 and t.stp2):
        raise TorsionError(f"{t} does not satisfy the first two conditions")
    sigma = cat.shift
    shifted_T = {sigma[x] for x in t.T}
    shifted_F = {sigma[x] for x in t.F}
    return ShiftReport(
        stp3=negext_vanishes(cat, t.T, t.F),
        shift_closed_T=shifted_T <= t.T,
        shift_closed_F=t.F <= shifted_F,
    )


def verify_all(cat: FiniteExtCat, poset: StorsPoset | None = None) -> Report:
    """Main theorem and heart lemma over every interval of the poset."""
    if poset is None:
        poset = enumerate_stors(cat)
    rep = Report()
    theorem_ok = True
    lemma_ok = True
    for t1, t2 in poset.comparable_pairs():
        sub = verify_main_theorem(cat, t1, t2, poset)
        if not sub.passed:
            theorem_ok = False
            rep.counterexamples.extend(sub.counterexamples)
        if not verify_heart_lemma(cat, t2, t1):
            lemma_ok = False
            rep.fail("heart lemma", pairs=[t1.to_dict(), t2.to_dict()])
    n = len(poset.comparable_pairs())
    rep.check("main theorem on every interval", theorem_ok, intervals=n, category=cat.label)
    rep.check("heart lemma on every comparable pair", lemma_ok, comparable_pairs=n, category=cat.label)
    return rep
