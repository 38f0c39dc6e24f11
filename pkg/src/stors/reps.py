"""Finite-dimensional quiver representations over the rationals.

A representation is a dimension per vertex and a matrix per arrow; arrows are
(source, target) pairs of vertex indices and the matrix of an arrow s -> t has
shape dims[t] x dims[s].  Morphisms are tuples of matrices, one per vertex,
of shape N.dims[v] x M.dims[v].  Relations of a bound quiver play no role
here: they only restrict which representations are fed in.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg as la
from .linalg import Matrix

Arrows = Sequence[tuple[int, int]]
Morphism = tuple[Matrix, ...]


@dataclass(frozen=True)
class Rep:
    dims: tuple[int, ...]
    maps: tuple[Matrix, ...]

    def total_dim(self) -> int:
        return sum(self.dims)


def check_rep(arrows: Arrows, M: Rep) -> None:
    for k, (s, t) in enumerate(arrows):
        m = M.maps[k]
        if len(m) != M.dims[t] or any(len(r) != M.dims[s] for r in m):
            raise ValueError(f"arrow {k} ({s}->{t}) has a matrix of the wrong shape")


def thin_rep(arrows: Arrows, nverts: int, support: set[int] | frozenset[int]) -> Rep:
    """The representation with k at each vertex of ``support`` and identity maps inside it."""
    dims = tuple(int(v in support) for v in range(nverts))
    maps = tuple(
        [[Fraction(1)]] if s in support and t in support else la.zeros(dims[t], dims[s])
        for s, t in arrows
    )
    return Rep(dims, maps)


def _var_offsets(M: Rep, N: Rep) -> list[int]:
    offs, k = [], 0
    for v in range(len(M.dims)):
        offs.append(k)
        k += N.dims[v] * M.dims[v]
    offs.append(k)
    return offs


def hom_system(arrows: Arrows, M: Rep, N: Rep) -> tuple[list[list[Fraction]], int]:
    """Linear system whose solutions are the morphisms M -> N.

    Unknowns are the entries of f_v (row-major, vertex by vertex); each arrow
    a: s -> t contributes the equations N_a f_s - f_t M_a = 0.
    """
    offs = _var_offsets(M, N)
    nvars = offs[-1]
    rows = []
    for k, (s, t) in enumerate(arrows):
        Na, Ma = N.maps[k], M.maps[k]
        for i in range(N.dims[t]):
            for j in range(M.dims[s]):
                row = [Fraction(0)] * nvars
                # (N_a f_s)[i][j] = sum_l N_a[i][l] f_s[l][j]
                for l in range(N.dims[s]):
                    if Na[i][l] != 0:
                        row[offs[s] + l * M.dims[s] + j] += Na[i][l]
                # (f_t M_a)[i][j] = sum_l f_t[i][l] M_a[l][j]
                for l in range(M.dims[t]):
                    if Ma[l][j] != 0:
                        row[offs[t] + i * M.dims[t] + l] -= Ma[l][j]
                if any(row):
                    rows.append(row)
    return rows, nvars


def hom_dim(arrows: Arrows, M: Rep, N: Rep) -> int:
    rows, nvars = hom_system(arrows, M, N)
    return nvars - la.rank(rows, nvars)


def _unflatten(vec: Sequence[Fraction], M: Rep, N: Rep) -> Morphism:
    offs = _var_offsets(M, N)
    out = []
    for v in range(len(M.dims)):
        r, c = N.dims[v], M.dims[v]
        out.append([[vec[offs[v] + i * c + j] for j in range(c)] for i in range(r)])
    return tuple(out)


def flatten(f: Morphism) -> list[Fraction]:
    return [x for mat in f for row in mat for x in row]


def hom_basis(arrows: Arrows, M: Rep, N: Rep) -> list[Morphism]:
    rows, nvars = hom_system(arrows, M, N)
    return [_unflatten(v, M, N) for v in la.nullspace(rows, nvars)]


def compose(g: Morphism, f: Morphism, M: Rep, X: Rep, N: Rep) -> Morphism:
    """g after f, for f: M -> X and g: X -> N."""
    return tuple(
        la.matmul(g[v], f[v], inner=X.dims[v], ncols=M.dims[v]) for v in range(len(M.dims))
    )


def is_morphism(arrows: Arrows, f: Morphism, M: Rep, N: Rep) -> bool:
    for k, (s, t) in enumerate(arrows):
        lhs = la.matmul(N.maps[k], f[s], inner=N.dims[s], ncols=M.dims[s])
        rhs = la.matmul(f[t], M.maps[k], inner=M.dims[t], ncols=M.dims[s])
        if lhs != rhs:
            return False
    return True


def is_injective(f: Morphism, M: Rep) -> bool:
    return all(la.rank(f[v], M.dims[v]) == M.dims[v] for v in range(len(M.dims)))


def is_surjective(f: Morphism, N: Rep, M: Rep) -> bool:
    return all(la.rank(f[v], M.dims[v]) == N.dims[v] for v in range(len(N.dims)))


def direct_sum(reps: Sequence[Rep], nverts: int, arrows: Arrows) -> Rep:
    dims = tuple(sum(R.dims[v] for R in reps) for v in range(nverts))
    maps = []
    for k, (s, t) in enumerate(arrows):
        m = la.zeros(dims[t], dims[s])
        ro = co = 0
        for R in reps:
            block = R.maps[k]
            for i in range(R.dims[t]):
                for j in range(R.dims[s]):
                    m[ro + i][co + j] = block[i][j]
            ro += R.dims[t]
            co += R.dims[s]
        maps.append(m)
    return Rep(dims, tuple(maps))


def hstack_morphisms(fs: Sequence[Morphism], sources: Sequence[Rep], N: Rep) -> Morphism:
    """The map from a direct sum of sources to N whose components are fs."""
    nverts = len(N.dims)
    out = []
    for v in range(nverts):
        width = sum(S.dims[v] for S in sources)
        m = la.zeros(N.dims[v], width)
        co = 0
        for f, S in zip(fs, sources):
            for i in range(N.dims[v]):
                for j in range(S.dims[v]):
                    m[i][co + j] = f[v][i][j]
            co += S.dims[v]
        out.append(m)
    return tuple(out)


def vstack_morphisms(fs: Sequence[Morphism], M: Rep, targets: Sequence[Rep]) -> Morphism:
    """The map from M to a direct sum of targets whose components are fs."""
    out = []
    for v in range(len(M.dims)):
        m = []
        for f, T in zip(fs, targets):
            m.extend([list(r) for r in f[v][: T.dims[v]]])
        out.append(m)
    return tuple(out)


def kernel(arrows: Arrows, f: Morphism, M: Rep, N: Rep) -> tuple[Rep, Morphism]:
    """Kernel K of f: M -> N with its inclusion K -> M."""
    nverts = len(M.dims)
    incl = []
    for v in range(nverts):
        basis = la.nullspace(f[v], M.dims[v])
        incl.append(la.transpose(basis) if basis else la.zeros(M.dims[v], 0))
    dims = tuple(len(incl[v][0]) if M.dims[v] else 0 for v in range(nverts))
    maps = []
    for k, (s, t) in enumerate(arrows):
        # K_a solves incl_t K_a = M_a incl_s
        target = la.matmul(M.maps[k], incl[s], inner=M.dims[s], ncols=dims[s])
        maps.append(_solve_left(incl[t], target, dims[t], dims[s], M.dims[t]))
    return Rep(dims, tuple(maps)), tuple(incl)


def cokernel(arrows: Arrows, f: Morphism, M: Rep, N: Rep) -> tuple[Rep, Morphism]:
    """Cokernel C of f: M -> N with its projection N -> C."""
    nverts = len(N.dims)
    proj = []
    for v in range(nverts):
        if M.dims[v] == 0:
            proj.append(la.identity(N.dims[v]))
        else:
            proj.append(la.left_nullspace(f[v], N.dims[v]))
    dims = tuple(len(p) for p in proj)
    maps = []
    for k, (s, t) in enumerate(arrows):
        sec = la.right_inverse(proj[s], N.dims[s]) if dims[s] else la.zeros(N.dims[s], 0)
        m = la.matmul(proj[t], N.maps[k], inner=N.dims[t], ncols=N.dims[s])
        maps.append(la.matmul(m, sec, inner=N.dims[s], ncols=dims[s]))
    return Rep(dims, tuple(maps)), tuple(proj)


def _solve_left(a: Matrix, b: Matrix, rows_x: int, cols_x: int, rows_a: int) -> Matrix:
    """X with a @ X = b, where a (rows_a x rows_x) has full column rank."""
    cols = []
    for j in range(cols_x):
        x = la.solve(a, [b[i][j] for i in range(rows_a)], rows_x)
        if x is None:
            raise ValueError("inconsistent system: map does not restrict")
        cols.append(x)
    return la.transpose(cols) if cols else la.zeros(rows_x, 0)
