"""Module categories of type-A path algebras as finite extriangulated categories.

Indecomposables are the interval modules [a, b] (k at vertices a..b, identity
maps between them).  Hom dimensions come from the commutation linear system of
the explicit representations, Ext^1 from the Euler form, and conflations with
an interval middle term from its successor-closed vertex subsets.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Literal

from . import reps
from .extcat import FiniteExtCat, Obj, is_extension_closed
from .quivers import Quiver, enumerate_succ, is_successor_closed, restricted_quiver
from .torsion import Report, STorsPair, enumerate_stors, is_storsion, member_key

__all__ = [
    "Orientation",
    "IntervalModule",
    "NegExtMode",
    "parse_orientation",
    "gen_typea",
    "pair_from_succ",
    "succ_from_pair",
    "verify_succ_bijection",
    "serre_equivalence_check",
    "all_orientations",
]

NegExtMode = Literal["zero", "ext1"]
MODES: tuple[str, ...] = ("zero", "ext1")


@dataclass(frozen=True)
class Orientation:
    """``directions[i]`` is 'R' for the arrow i+1 -> i+2 and 'L' for i+1 <- i+2."""

    directions: tuple[str, ...] = ()

    def __post_init__(self):
        dirs = tuple(self.directions)
        for d in dirs:
            if d not in ("R", "L"):
                raise ValueError(f"orientation symbol {d!r} must be R or L")
        object.__setattr__(self, "directions", dirs)

    @property
    def n(self) -> int:
        return len(self.directions) + 1

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(str(i) for i in range(1, self.n + 1))

    def arrows(self) -> list[tuple[int, int]]:
        """Arrows as (source, target) pairs of 1-based vertex numbers."""
        out = []
        for i, d in enumerate(self.directions, start=1):
            out.append((i, i + 1) if d == "R" else (i + 1, i))
        return out

    def quiver(self) -> Quiver:
        return Quiver(self.vertices, tuple((str(s), str(t)) for s, t in self.arrows()))

    def compact(self) -> str:
        out = "1"
        for i, d in enumerate(self.directions, start=2):
            out += (">" if d == "R" else "<") + str(i)
        return out

    def __str__(self) -> str:
        return self.compact()


_COMPACT = re.compile(r"^\s*1(\s*[<>]\s*\d+)*\s*$")


def parse_orientation(text: str) -> Orientation:
    """Accepts "R L L", "RLL", ">< <" style symbol strings and "1>2<3<4"."""
    s = text.strip()
    if not s:
        return Orientation(())
    if s[0].isdigit():
        if not _COMPACT.match(s):
            raise ValueError(f"bad orientation string {text!r}")
        nums = [int(x) for x in re.findall(r"\d+", s)]
        if nums != list(range(1, len(nums) + 1)):
            raise ValueError(f"vertices in {text!r} must be numbered 1, 2, 3, ... in order")
        return Orientation(tuple("R" if c == ">" else "L" for c in re.findall(r"[<>]", s)))
    dirs = []
    for c in s:
        if c.isspace() or c == ",":
            continue
        if c in "Rr>":
            dirs.append("R")
        elif c in "Ll<":
            dirs.append("L")
        else:
            raise ValueError(f"bad orientation symbol {c!r} in {text!r}")
    return Orientation(tuple(dirs))


def all_orientations(n: int) -> list[Orientation]:
    out = []
    for mask in range(1 << max(n - 1, 0)):
        out.append(Orientation(tuple("R" if mask >> i & 1 else "L" for i in range(n - 1))))
    return out


@dataclass(frozen=True, order=True)
class IntervalModule:
    a: int
    b: int

    def __post_init__(self):
        if not 1 <= self.a <= self.b:
            raise ValueError(f"bad interval [{self.a},{self.b}]")

    @property
    def name(self) -> str:
        return f"[{self.a},{self.b}]"

    @property
    def support(self) -> frozenset[int]:
        return frozenset(range(self.a, self.b + 1))

    def dim_vector(self, n: int) -> tuple[int, ...]:
        return tuple(int(self.a <= i <= self.b) for i in range(1, n + 1))

    @classmethod
    def parse(cls, name: str) -> "IntervalModule":
        m = re.fullmatch(r"\[(\d+),(\d+)\]", name)
        if not m:
            raise ValueError(f"not an interval module name: {name!r}")
        return cls(int(m.group(1)), int(m.group(2)))


def intervals(n: int) -> list[IntervalModule]:
    """All intervals, ordered by length and then by left end point."""
    return [IntervalModule(a, a + length) for length in range(n) for a in range(1, n - length + 1)]


def components(vs: Iterable[int]) -> list[IntervalModule]:
    """Maximal runs of consecutive integers."""
    out = []
    run: list[int] = []
    for v in sorted(vs):
        if run and v != run[-1] + 1:
            out.append(IntervalModule(run[0], run[-1]))
            run = []
        run.append(v)
    if run:
        out.append(IntervalModule(run[0], run[-1]))
    return out


def euler_form(orient: Orientation, d: Iterable[int], e: Iterable[int]) -> int:
    d, e = list(d), list(e)
    value = sum(x * y for x, y in zip(d, e))
    for s, t in orient.arrows():
        value -= d[s - 1] * e[t - 1]
    return value


def _rep_arrows(orient: Orientation) -> list[tuple[int, int]]:
    return [(s - 1, t - 1) for s, t in orient.arrows()]


def interval_rep(orient: Orientation, M: IntervalModule) -> reps.Rep:
    return reps.thin_rep(_rep_arrows(orient), orient.n, {i - 1 for i in M.support})


def hom_matrix(orient: Orientation) -> list[list[int]]:
    mods = intervals(orient.n)
    arrows = _rep_arrows(orient)
    rs = [interval_rep(orient, M) for M in mods]
    return [[reps.hom_dim(arrows, X, Y) for Y in rs] for X in rs]


def ext_matrix(orient: Orientation, hom: list[list[int]]) -> list[list[int]]:
    mods = intervals(orient.n)
    n = orient.n
    return [
        [hom[i][j] - euler_form(orient, C.dim_vector(n), A.dim_vector(n)) for j, A in enumerate(mods)]
        for i, C in enumerate(mods)
    ]


def conflation_rows(orient: Orientation, M: IntervalModule) -> set[tuple[Obj, Obj]]:
    """(submodule, quotient) for every successor-closed subset of the support."""
    Q = orient.quiver()
    R = restricted_quiver(Q, [str(i) for i in M.support])
    rows = set()
    for S in enumerate_succ(R).sets:
        sub = {int(v) for v in S}
        quo = set(M.support) - sub
        rows.add(
            (
                Obj(tuple(c.name for c in components(sub))),
                Obj(tuple(c.name for c in components(quo))),
            )
        )
    return rows


def _label(orient: Orientation, mode: str) -> str:
    word = "linear" if all(d == "R" for d in orient.directions) else orient.compact()
    return f"typeA_{orient.n}_{word}_{mode}"


@lru_cache(maxsize=None)
def gen_typea(orient: Orientation | str, mode: NegExtMode = "ext1") -> FiniteExtCat:
    """The category mod kQ for a type-A quiver Q, with E^-1 = 0 or E^-1 = Ext^1."""
    if isinstance(orient, str):
        orient = parse_orientation(orient)
    if mode not in MODES:
        raise ValueError(f"unknown negative extension mode {mode!r}")
    mods = intervals(orient.n)
    hom = hom_matrix(orient)
    ext = ext_matrix(orient, hom)
    size = len(mods)
    negext = ext if mode == "ext1" else [[0] * size for _ in range(size)]
    conf = {M.name: frozenset(conflation_rows(orient, M)) for M in mods}
    return FiniteExtCat(
        indecs=tuple(M.name for M in mods),
        hom_dim=hom,
        negext_dim=negext,
        ext_dim=ext,
        conf=conf,
        label=_label(orient, mode),
    )


def _as_orientation(orient: Orientation | str) -> Orientation:
    return parse_orientation(orient) if isinstance(orient, str) else orient


def pair_from_succ(orient: Orientation | str, I: Iterable[str | int]) -> STorsPair:
    """(T_I, F_I): modules supported in I and in its complement."""
    orient = _as_orientation(orient)
    Q = orient.quiver()
    I = Q.check_vertices(str(v) for v in I)
    if not is_successor_closed(Q, I):
        raise ValueError(f"not successor-closed: {Q.ordered(I)}")
    inside = {int(v) for v in I}
    T = {M.name for M in intervals(orient.n) if M.support <= inside}
    F = {M.name for M in intervals(orient.n) if not M.support & inside}
    return is_storsion(gen_typea(orient, "ext1"), T, F)


def succ_from_pair(orient: Orientation | str, t: STorsPair) -> frozenset[str]:
    """Vertices whose simple module lies in the torsion class."""
    orient = _as_orientation(orient)
    return frozenset(v for v in orient.vertices if f"[{v},{v}]" in t.T)


def verify_succ_bijection(orient: Orientation | str) -> Report:
    orient = _as_orientation(orient)
    Q = orient.quiver()
    cat = gen_typea(orient, "ext1")
    poset = enumerate_stors(cat)
    lattice = enumerate_succ(Q)
    rep = Report()
    rep.check("same cardinality", len(poset) == len(lattice), stors=len(poset), succ=len(lattice))

    images = {}
    ok = True
    for t in poset:
        I = succ_from_pair(orient, t)
        images[member_key(t.T)] = I
        if I not in lattice:
            ok = False
            rep.fail("I_t successor-closed", pair=t.to_dict(), image=Q.ordered(I))
        elif not pair_from_succ(orient, I).same(t):
            ok = False
            rep.fail("t_(I_t) = t", pair=t.to_dict())
    rep.check("I_(-) lands in succ and t_(I_t) = t", ok)

    ok = True
    for I in lattice.sets:
        t = pair_from_succ(orient, I)
        if not (t.valid and any(t.same(p) for p in poset)):
            ok = False
            rep.fail("t_I is an s-torsion pair", set=Q.ordered(I), pair=t.to_dict())
        elif succ_from_pair(orient, t) != I:
            ok = False
            rep.fail("I_(t_I) = I", set=Q.ordered(I))
    rep.check("t_(-) lands in stors and I_(t_I) = I", ok)

    ok = all(
        (s <= t) == (images[member_key(s.T)] <= images[member_key(t.T)]) for s in poset for t in poset
    )
    if not ok:
        rep.fail("order isomorphism", orientation=orient.compact())
    rep.check("order isomorphism", ok)
    return rep


def serre_equivalence_check(orient: Orientation | str) -> Report:
    """For every torsion pair: Ext^1(T, F) = 0 iff T and F are Serre subcategories."""
    orient = _as_orientation(orient)
    cat = gen_typea(orient, "zero")
    poset = enumerate_stors(cat)
    rep = Report()
    ok = True
    for t in poset:
        ext_zero = cat.ext(Obj(tuple(t.T)), Obj(tuple(t.F))) == 0 if t.T and t.F else True
        sub_closed = all(a.support() <= t.T for m in t.T for a, _ in cat.conf[m])
        quo_closed = all(c.support() <= t.F for m in t.F for _, c in cat.conf[m])
        serre = sub_closed and quo_closed and is_extension_closed(cat, t.T) and is_extension_closed(cat, t.F)
        if ext_zero != serre:
            ok = False
            rep.fail("Ext vanishing vs Serre", pair=t.to_dict(), ext_zero=ext_zero, serre=serre)
    rep.check("Ext^1(T,F)=0 iff Serre", ok, torsion_pairs=len(poset), orientation=orient.compact())
    return rep


