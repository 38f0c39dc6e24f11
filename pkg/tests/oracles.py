"""Brute-force reference computations used by the test-suite.

Nothing here imports the library's linear algebra or enumeration code: the
type-A oracle counts morphisms over the two-element field by trying every
assignment, and the torsion oracle scans all pairs of subsets directly.
"""

from __future__ import annotations

from itertools import combinations, product
from math import log2

# ---------------------------------------------------------------- type A over F2


def arrows_of(directions: str) -> list[tuple[int, int]]:
    """1-based (source, target) arrows of a type-A quiver given as e.g. "RLL"."""
    return [(i, i + 1) if d == "R" else (i + 1, i) for i, d in enumerate(directions, start=1)]


def interval_list(n: int) -> list[tuple[int, int]]:
    return [(a, a + k) for k in range(n) for a in range(1, n - k + 1)]


def _thin(n: int, iv: tuple[int, int]) -> dict[int, int]:
    a, b = iv
    return {v: int(a <= v <= b) for v in range(1, n + 1)}


def _arrow_map(arrows, dims, s, t) -> int:
    # thin interval modules carry the identity wherever both ends are present
    return 1 if dims[s] and dims[t] else 0


def f2_hom_count(n: int, arrows, M, N) -> int:
    """Number of morphisms M -> N of thin representations over F2."""
    dm, dn = _thin(n, M), _thin(n, N)
    slots = [v for v in range(1, n + 1) if dm[v] and dn[v]]
    count = 0
    for values in product((0, 1), repeat=len(slots)):
        f = {v: 0 for v in range(1, n + 1)}
        f.update(zip(slots, values))
        ok = True
        for s, t in arrows:
            # N_a f_s == f_t M_a, all entries 0/1 scalars
            lhs = _arrow_map(arrows, dn, s, t) * f[s] * dm[s] % 2
            rhs = f[t] * _arrow_map(arrows, dm, s, t) % 2
            if dm[s] and dn[t] and lhs != rhs:
                ok = False
                break
        count += ok
    return count


def f2_ext_dim(n: int, arrows, C, A) -> int:
    """dim Ext^1(C, A) from the standard two-term complex, by counting over F2.

    Ext^1 is the cokernel of  d: (+)_v Hom(C_v, A_v) -> (+)_{a: s->t} Hom(C_s, A_t),
    d(f)_a = A_a f_s - f_t C_a.  The image size is counted by brute force.
    """
    dc, da = _thin(n, C), _thin(n, A)
    src = [v for v in range(1, n + 1) if dc[v] and da[v]]
    tgt = [k for k, (s, t) in enumerate(arrows) if dc[s] and da[t]]
    image = set()
    for values in product((0, 1), repeat=len(src)):
        f = {v: 0 for v in range(1, n + 1)}
        f.update(zip(src, values))
        vec = []
        for k in tgt:
            s, t = arrows[k]
            vec.append((_arrow_map(arrows, da, s, t) * f[s] - f[t] * _arrow_map(arrows, dc, s, t)) % 2)
        image.add(tuple(vec))
    return len(tgt) - int(log2(len(image)))


def f2_tables(directions: str) -> tuple[list[str], list[list[int]], list[list[int]]]:
    n = len(directions) + 1
    arrows = arrows_of(directions)
    ivs = interval_list(n)
    names = [f"[{a},{b}]" for a, b in ivs]
    hom = [[int(log2(f2_hom_count(n, arrows, X, Y))) for Y in ivs] for X in ivs]
    ext = [[f2_ext_dim(n, arrows, C, A) for A in ivs] for C in ivs]
    return names, hom, ext


def f2_submodules(directions: str, iv: tuple[int, int]) -> set[tuple[tuple[str, ...], tuple[str, ...]]]:
    """(sub, quotient) decompositions of an interval module, by trying every vertex subset.

    A subset S of the support spans a subrepresentation iff every arrow map
    sends the span into the span; components are found by union-find on arrows
    with nonzero maps.
    """
    n = len(directions) + 1
    arrows = arrows_of(directions)
    a, b = iv
    support = list(range(a, b + 1))
    out = set()
    for k in range(len(support) + 1):
        for S in combinations(support, k):
            S = set(S)
            if any(s in S and a <= t <= b and t not in S for s, t in arrows):
                continue
            quo = set(support) - S
            out.add((_components(S, arrows), _components(quo, arrows)))
    return out


def _components(vs: set[int], arrows) -> tuple[str, ...]:
    parent = {v: v for v in vs}

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v

    for s, t in arrows:
        if s in vs and t in vs:
            parent[find(s)] = find(t)
    groups: dict[int, list[int]] = {}
    for v in vs:
        groups.setdefault(find(v), []).append(v)
    return tuple(sorted(f"[{min(g)},{max(g)}]" for g in groups.values()))


# ---------------------------------------------------------------- torsion pairs


def brute_stors(indecs, hom, negext, conf) -> list[tuple[frozenset, frozenset, tuple[bool, bool, bool]]]:
    """Every pair of subsets (T, F) with the three conditions checked literally.

    conf maps a middle name to a list of (A, C) with A and C tuples of names;
    trivial rows are implied.
    """
    n = len(indecs)
    idx = {x: i for i, x in enumerate(indecs)}
    subsets = [frozenset(c) for k in range(n + 1) for c in combinations(indecs, k)]
    found = []
    for T in subsets:
        for F in subsets:
            flags = _flags(indecs, idx, hom, negext, conf, T, F)
            if all(flags):
                found.append((T, F, flags))
    return found


def flags_of(indecs, hom, negext, conf, T, F) -> tuple[bool, bool, bool]:
    idx = {x: i for i, x in enumerate(indecs)}
    return _flags(indecs, idx, hom, negext, conf, frozenset(T), frozenset(F))


def _flags(indecs, idx, hom, negext, conf, T, F):
    stp2 = all(hom[idx[t]][idx[f]] == 0 for t in T for f in F)
    stp3 = all(negext[idx[t]][idx[f]] == 0 for t in T for f in F)
    stp1 = True
    for m in indecs:
        rows = [((m,), ()), ((), (m,))] + [(tuple(a), tuple(c)) for a, c in conf.get(m, [])]
        if not any(set(a) <= T and set(c) <= F for a, c in rows):
            stp1 = False
            break
    return stp1, stp2, stp3


# ---------------------------------------------------------------- quivers


def brute_succ(vertices, arrows) -> set[frozenset]:
    out = set()
    for k in range(len(vertices) + 1):
        for c in combinations(vertices, k):
            I = set(c)
            if all(t in I for s, t in arrows if s in I):
                out.add(frozenset(I))
    return out


# ---------------------------------------------------------------- Nakayama, three simples, Loewy length 3
#
# Uniserial modules are chains of composition factors read from the top;
# "2/1" has top 2 and socle 1.  The quiver is 2 -> 1, 3 -> 2, 1 -> 3.

NAK_NEXT = {"2": "1", "3": "2", "1": "3"}


def nak_chain(name: str) -> list[str]:
    return name.split("/")


def nak_uniserials() -> list[str]:
    out = []
    for top in "123":
        chain = [top]
        for _ in range(3):
            out.append("/".join(chain))
            chain.append(NAK_NEXT[chain[-1]])
    return out


def _nak_steps(name):
    c = nak_chain(name)
    return set(zip(c, c[1:]))


def nak_f2_maps(M: str, N: str) -> set[tuple[int, int, int]]:
    """All module maps M -> N over F2, as scalars at vertices 1, 2, 3.

    Each vertex space of a uniserial of length <= 3 is 0 or 1 dimensional.
    """
    cm, cn = set(nak_chain(M)), set(nak_chain(N))
    sm, sn = _nak_steps(M), _nak_steps(N)
    out = set()
    for f in product((0, 1), repeat=3):
        fv = dict(zip("123", f))
        if any(fv[v] and not (v in cm and v in cn) for v in "123"):
            continue
        ok = True
        for s, t in NAK_NEXT.items():
            # arrow s -> t: N_a f_s == f_t M_a
            lhs = fv[s] if (s, t) in sn else 0
            rhs = fv[t] if (s, t) in sm else 0
            if lhs != rhs:
                ok = False
                break
        if ok:
            out.add(f)
    return out


def nak_stable_hom(M: str, N: str) -> int:
    maps = nak_f2_maps(M, N)
    through = {(0, 0, 0)}
    for P in (u for u in nak_uniserials() if len(nak_chain(u)) == 3):
        for h in nak_f2_maps(M, P):
            for g in nak_f2_maps(P, N):
                through.add(tuple(a * b for a, b in zip(g, h)))
    span = {(0, 0, 0)}
    for v in through:
        span |= {tuple((a + b) % 2 for a, b in zip(v, w)) for w in span}
    return int(log2(len(maps))) - int(log2(len(span)))


def nak_shift(M: str) -> str:
    """Cokernel of the injective envelope: the projective with the same socle, modulo M."""
    c = nak_chain(M)
    P = next(u for u in nak_uniserials() if len(nak_chain(u)) == 3 and nak_chain(u)[-1] == c[-1])
    return "/".join(nak_chain(P)[: 3 - len(c)])
