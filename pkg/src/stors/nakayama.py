"""Brute-force derivation of the bundled Nakayama datasets.

The algebra is the self-injective Nakayama algebra with three simples and
Loewy length three: the cyclic quiver 2 -> 1, 3 -> 2, 1 -> 3 with all paths of
length three set to zero.  Its indecomposable modules are the nine uniserial
modules, written top-down ("2/1" has top 2 and socle 1).  Everything below is
computed from explicit representations:

* stable Hom = module maps modulo the span of maps factoring through an
  indecomposable projective;
* the suspension is the cokernel of an injective envelope, its inverse the
  kernel of a projective cover;
* a module is decomposed by solving for multiplicities against the Hom
  dimensions from every indecomposable (Auslander's criterion);
* the triangle A -> B -> C -> with middle B and given g: B -> C has
  A = ker(B + P(C) -> C) up to projective summands.

Triangles with an indecomposable middle B are enumerated from g: B -> C with
C multiplicity-free and every component of g stably nonzero; this covers every
triangle up to direct sums with triangles X[-1] -> 0 -> X, which are redundant
for summand-closed subcategories.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations

from . import linalg as la
from . import reps
from .extcat import FiniteExtCat, Obj, restrict_to

# vertex k is the simple module k + 1
ARROWS = [(1, 0), (2, 1), (0, 2)]
NVERTS = 3
STABLE_ORDER = ("1", "2", "3", "2/1", "3/2", "1/3")
HEART_A = ("1", "2/1", "2")


def _next(v: int) -> int:
    for s, t in ARROWS:
        if s == v:
            return t
    raise ValueError(v)


@dataclass(frozen=True)
class Uniserial:
    top: int
    length: int

    @property
    def chain(self) -> list[int]:
        out = [self.top]
        while len(out) < self.length:
            out.append(_next(out[-1]))
        return out

    @property
    def name(self) -> str:
        return "/".join(str(v + 1) for v in self.chain)

    @property
    def projective(self) -> bool:
        return self.length == 3

    def rep(self) -> reps.Rep:
        chain = self.chain
        dims = tuple(int(v in chain) for v in range(NVERTS))
        steps = set(zip(chain, chain[1:]))
        maps = tuple(
            [[Fraction(1)]] if (s, t) in steps else la.zeros(dims[t], dims[s]) for s, t in ARROWS
        )
        return reps.Rep(dims, maps)


class StableCategory:
    """Stable module category computations for the Nakayama algebra."""

    def __init__(self):
        self.modules = [Uniserial(t, l) for l in (1, 2, 3) for t in range(NVERTS)]
        self.by_name = {U.name: U for U in self.modules}
        self.projectives = [U for U in self.modules if U.projective]
        self.reps = {U.name: U.rep() for U in self.modules}
        for R in self.reps.values():
            reps.check_rep(ARROWS, R)

    @cached_property
    def _hom_table(self) -> list[list[int]]:
        R = [self.reps[U.name] for U in self.modules]
        return [[reps.hom_dim(ARROWS, X, Y) for Y in R] for X in R]

    def decompose(self, N: reps.Rep) -> dict[str, int]:
        """Multiplicities of indecomposable summands of N."""
        H = self._hom_table
        v = [reps.hom_dim(ARROWS, self.reps[X.name], N) for X in self.modules]
        n = len(self.modules)
        if la.rank(H, n) != n:
            raise RuntimeError("Hom table is singular")
        m = la.solve(la.as_matrix(H), v, n)
        out = {}
        for U, k in zip(self.modules, m):
            if k.denominator != 1 or k < 0:
                raise RuntimeError(f"non-integral multiplicity {k} for {U.name}")
            if k:
                out[U.name] = int(k)
        dims = [sum(self.reps[x].dims[v] * k for x, k in out.items()) for v in range(NVERTS)]
        if tuple(dims) != N.dims:
            raise RuntimeError("decomposition does not match the dimension vector")
        return out

    def stable_part(self, N: reps.Rep) -> Obj:
        parts = self.decompose(N)
        return Obj(tuple(x for x, k in parts.items() for _ in range(k) if not self.by_name[x].projective))

    def projective_maps(self, X: str, Y: str) -> list[list[Fraction]]:
        """Flattened maps X -> Y that factor through an indecomposable projective."""
        MX, MY = self.reps[X], self.reps[Y]
        out = []
        for P in self.projectives:
            RP = self.reps[P.name]
            for h in reps.hom_basis(ARROWS, MX, RP):
                for g in reps.hom_basis(ARROWS, RP, MY):
                    out.append(reps.flatten(reps.compose(g, h, MX, RP, MY)))
        return out

    def stable_hom_dim(self, X: str, Y: str) -> int:
        full = reps.hom_dim(ARROWS, self.reps[X], self.reps[Y])
        proj = self.projective_maps(X, Y)
        width = sum(self.reps[X].dims[v] * self.reps[Y].dims[v] for v in range(NVERTS))
        return full - (la.rank(proj, width) if proj else 0)

    def stably_nonzero_map(self, X: str, Y: str) -> reps.Morphism:
        """A module map X -> Y that does not factor through a projective."""
        proj = self.projective_maps(X, Y)
        width = sum(self.reps[X].dims[v] * self.reps[Y].dims[v] for v in range(NVERTS))
        base = la.rank(proj, width) if proj else 0
        for f in reps.hom_basis(ARROWS, self.reps[X], self.reps[Y]):
            if la.rank(proj + [reps.flatten(f)], width) > base:
                return f
        raise ValueError(f"every map {X} -> {Y} factors through a projective")

    def _one(self, obj: Obj, what: str) -> str:
        if len(obj) != 1:
            raise RuntimeError(f"{what} is not indecomposable: {obj}")
        return obj.summands[0]

    def shift(self, X: str) -> str:
        """Cokernel of the injective envelope, projective summands removed."""
        MX = self.reps[X]
        for P in self.projectives:
            RP = self.reps[P.name]
            for f in reps.hom_basis(ARROWS, MX, RP):
                if reps.is_injective(f, MX):
                    C, _ = reps.cokernel(ARROWS, f, MX, RP)
                    return self._one(self.stable_part(C), f"shift of {X}")
        raise RuntimeError(f"no injective envelope found for {X}")

    def unshift(self, X: str) -> str:
        """Kernel of the projective cover, projective summands removed."""
        MX = self.reps[X]
        for P in self.projectives:
            RP = self.reps[P.name]
            for f in reps.hom_basis(ARROWS, RP, MX):
                if reps.is_surjective(f, MX, RP):
                    K, _ = reps.kernel(ARROWS, f, RP, MX)
                    return self._one(self.stable_part(K), f"unshift of {X}")
        raise RuntimeError(f"no projective cover found for {X}")

    def projective_cover(self, X: str) -> tuple[str, reps.Morphism]:
        MX = self.reps[X]
        for P in self.projectives:
            RP = self.reps[P.name]
            for f in reps.hom_basis(ARROWS, RP, MX):
                if reps.is_surjective(f, MX, RP):
                    return P.name, f
        raise RuntimeError(f"no projective cover found for {X}")

    def cocone(self, B: str, targets: tuple[str, ...]) -> Obj:
        """A with a triangle A -> B -> C -> for g: B -> C whose components are stably nonzero."""
        MB = self.reps[B]
        covers = [self.projective_cover(X) for X in targets]
        C = reps.direct_sum([self.reps[X] for X in targets], NVERTS, ARROWS)
        P = reps.direct_sum([self.reps[p] for p, _ in covers], NVERTS, ARROWS)
        g = reps.vstack_morphisms(
            [self.stably_nonzero_map(B, X) for X in targets], MB, [self.reps[X] for X in targets]
        )
        pi = _block_diagonal([f for _, f in covers], [self.reps[p] for p, _ in covers], [self.reps[X] for X in targets])
        source = reps.direct_sum([MB, P], NVERTS, ARROWS)
        epi = reps.hstack_morphisms([g, pi], [MB, P], C)
        if not reps.is_morphism(ARROWS, epi, source, C) or not reps.is_surjective(epi, C, source):
            raise RuntimeError("failed to build an epimorphism onto C")
        K, _ = reps.kernel(ARROWS, epi, source, C)
        return self.stable_part(K)

    def triangles(self, B: str, objects: tuple[str, ...]) -> set[tuple[Obj, Obj]]:
        reachable = [X for X in objects if self.stable_hom_dim(B, X)]
        for X in reachable:
            if self.stable_hom_dim(B, X) > 1:
                raise NotImplementedError(f"stable Hom({B}, {X}) has dimension > 1")
        rows = set()
        for k in range(len(reachable) + 1):
            for targets in combinations(reachable, k):
                rows.add((self.cocone(B, targets), Obj(targets)))
        return rows


def _block_diagonal(fs, sources, targets) -> reps.Morphism:
    out = []
    for v in range(NVERTS):
        rows_total = sum(T.dims[v] for T in targets)
        cols_total = sum(S.dims[v] for S in sources)
        m = la.zeros(rows_total, cols_total)
        ro = co = 0
        for f, S, T in zip(fs, sources, targets):
            for i in range(T.dims[v]):
                for j in range(S.dims[v]):
                    m[ro + i][co + j] = f[v][i][j]
            ro += T.dims[v]
            co += S.dims[v]
        out.append(m)
    return tuple(out)


def derive_stable_category() -> FiniteExtCat:
    st = StableCategory()
    objs = STABLE_ORDER
    hom = [[st.stable_hom_dim(X, Y) for Y in objs] for X in objs]
    shift = {X: st.shift(X) for X in objs}
    unshift = {X: st.unshift(X) for X in objs}
    for X in objs:
        if shift[unshift[X]] != X:
            raise RuntimeError(f"shift and its inverse disagree at {X}")
    idx = {X: i for i, X in enumerate(objs)}
    negext = [[hom[idx[C]][idx[unshift[A]]] for A in objs] for C in objs]
    ext = [[hom[idx[C]][idx[shift[A]]] for A in objs] for C in objs]
    conf = {B: frozenset(st.triangles(B, objs)) for B in objs}
    return FiniteExtCat(
        indecs=objs,
        hom_dim=hom,
        negext_dim=negext,
        ext_dim=ext,
        conf=conf,
        shift=shift,
        label="nakayama_D",
    )


def derive_all() -> dict[str, FiniteExtCat]:
    D = derive_stable_category()
    A2 = restrict_to(D, HEART_A, label="nakayama_A_e2")
    A1 = FiniteExtCat(
        indecs=A2.indecs,
        hom_dim=A2.hom_dim,
        negext_dim=[[0] * len(A2.indecs) for _ in A2.indecs],
        ext_dim=A2.ext_dim,
        conf=A2.conf,
        label="nakayama_A_e1",
    )
    return {"nakayama_D": D, "nakayama_A_e1": A1, "nakayama_A_e2": A2}
