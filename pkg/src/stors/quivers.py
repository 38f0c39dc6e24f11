"""Finite acyclic quivers and their lattices of successor-closed vertex sets."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from graphlib import CycleError, TopologicalSorter
from typing import Iterable

from .dot import hasse_dot

__all__ = [
    "QuiverError",
    "Quiver",
    "SuccLattice",
    "SuccIntervalIso",
    "is_successor_closed",
    "enumerate_succ",
    "restricted_quiver",
    "succ_interval_iso",
]


class QuiverError(ValueError):
    pass


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        vertices = tuple(str(v) for v in self.vertices)
        if len(set(vertices)) != len(vertices):
            dup = next(v for v in vertices if vertices.count(v) > 1)
            raise QuiverError(f"duplicate vertex {dup!r}")
        arrows = tuple((str(s), str(t)) for s, t in self.arrows)
        known = set(vertices)
        for s, t in arrows:
            for v in (s, t):
                if v not in known:
                    raise QuiverError(f"unknown vertex {v!r} in arrow {s}->{t}")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "arrows", arrows)
        graph = {v: set() for v in vertices}
        for s, t in arrows:
            if s == t:
                raise QuiverError(f"loop at vertex {s!r}: quiver must be acyclic")
            graph[t].add(s)
        try:
            tuple(TopologicalSorter(graph).static_order())
        except CycleError as exc:
            raise QuiverError(f"directed cycle through {exc.args[1][0]!r}") from exc

    @classmethod
    def from_json(cls, text: str) -> "Quiver":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise QuiverError(f"parse error: {exc}") from exc
        if not isinstance(data, dict) or "vertices" not in data:
            raise QuiverError("quiver file needs a 'vertices' array")
        arrows = data.get("arrows", [])
        for a in arrows:
            if not isinstance(a, list) or len(a) != 2:
                raise QuiverError(f"arrow {a!r} must be a [source, target] pair")
        return cls(tuple(data["vertices"]), tuple(tuple(a) for a in arrows))

    def to_json(self) -> str:
        return json.dumps({"vertices": list(self.vertices), "arrows": [list(a) for a in self.arrows]}) + "\n"

    @property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def check_vertices(self, vs: Iterable[str]) -> frozenset[str]:
        vs = frozenset(str(v) for v in vs)
        known = set(self.vertices)
        for v in sorted(vs):
            if v not in known:
                raise QuiverError(f"unknown vertex {v!r}")
        return vs

    def successor_masks(self) -> list[int]:
        idx = self.index
        masks = [0] * len(self.vertices)
        for s, t in self.arrows:
            masks[idx[s]] |= 1 << idx[t]
        return masks

    def to_mask(self, vs: Iterable[str]) -> int:
        idx = self.index
        return sum(1 << idx[v] for v in self.check_vertices(vs))

    def from_mask(self, mask: int) -> frozenset[str]:
        return frozenset(v for i, v in enumerate(self.vertices) if mask >> i & 1)

    def sort_key(self, vs: Iterable[str]) -> tuple:
        idx = self.index
        ordered = tuple(sorted(idx[v] for v in vs))
        return (len(ordered), ordered)

    def ordered(self, vs: Iterable[str]) -> list[str]:
        idx = self.index
        return sorted(vs, key=idx.__getitem__)


def is_successor_closed(Q: Quiver, I: Iterable[str]) -> bool:
    I = Q.check_vertices(I)
    return all(t in I for s, t in Q.arrows if s in I)


@dataclass
class SuccLattice:
    quiver: Quiver
    sets: list[frozenset[str]]
    hasse_edges: list[tuple[int, int]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.sets)

    def __contains__(self, I) -> bool:
        return frozenset(I) in self._members

    @cached_property
    def _members(self) -> set[frozenset[str]]:
        return set(self.sets)

    def meet(self, a: frozenset[str], b: frozenset[str]) -> frozenset[str]:
        m = a & b
        if m not in self._members:
            raise QuiverError("intersection is not successor-closed")
        return m

    def join(self, a: frozenset[str], b: frozenset[str]) -> frozenset[str]:
        j = a | b
        if j not in self._members:
            raise QuiverError("union is not successor-closed")
        return j

    def to_dot(self, name: str = "succ") -> str:
        labels = [", ".join(self.quiver.ordered(s)) for s in self.sets]
        return hasse_dot(labels, self.hasse_edges, name=name)

    def to_dict(self) -> dict:
        return {
            "sets": [self.quiver.ordered(s) for s in self.sets],
            "hasse_edges": [[lo, hi] for lo, hi in self.hasse_edges],
        }


def _covers(sets: list[frozenset[str]]) -> list[tuple[int, int]]:
    n = len(sets)
    edges = []
    for i in range(n):
        for j in range(n):
            if sets[i] < sets[j] and not any(sets[i] < sets[k] < sets[j] for k in range(n)):
                edges.append((i, j))
    return edges


def enumerate_succ(Q: Quiver) -> SuccLattice:
    """All successor-closed subsets, sorted by size and then by vertex order."""
    succ = Q.successor_masks()
    n = len(Q.vertices)
    found = []
    for mask in range(1 << n):
        if all(succ[i] & ~mask == 0 for i in range(n) if mask >> i & 1):
            found.append(Q.from_mask(mask))
    found.sort(key=Q.sort_key)
    lattice = SuccLattice(Q, found)
    for a in found:
        for b in found:
            lattice.meet(a, b)
            lattice.join(a, b)
    edges = _covers(found)
    edges.sort(key=lambda e: (Q.sort_key(found[e[1]]), Q.sort_key(found[e[0]])))
    lattice.hasse_edges = edges
    return lattice


def restricted_quiver(Q: Quiver, V: Iterable[str]) -> Quiver:
    """Full subquiver on V."""
    V = Q.check_vertices(V)
    return Quiver(
        tuple(v for v in Q.vertices if v in V),
        tuple((s, t) for s, t in Q.arrows if s in V and t in V),
    )


@dataclass
class SuccIntervalIso:
    quiver: Quiver
    interval: list[frozenset[str]]
    restricted: SuccLattice
    phi: dict[frozenset[str], frozenset[str]]
    psi: dict[frozenset[str], frozenset[str]]
    verified: bool

    def to_dict(self) -> dict:
        order = self.quiver.ordered
        return {
            "interval": [order(s) for s in self.interval],
            "restricted_quiver": json.loads(self.restricted.quiver.to_json()),
            "restricted_lattice": [order(s) for s in self.restricted.sets],
            "phi": [[order(k), order(v)] for k, v in self.phi.items()],
            "psi": [[order(k), order(v)] for k, v in self.psi.items()],
            "verified": self.verified,
        }


def succ_interval_iso(Q: Quiver, I1: Iterable[str], I2: Iterable[str]) -> SuccIntervalIso:
    """The order isomorphism between succ[I1, I2] and succ of the subquiver on I2 minus I1."""
    I1, I2 = Q.check_vertices(I1), Q.check_vertices(I2)
    for name, I in (("I1", I1), ("I2", I2)):
        if not is_successor_closed(Q, I):
            raise QuiverError(f"not successor-closed: {name} = {Q.ordered(I)}")
    if not I1 <= I2:
        raise QuiverError("not nested: I1 is not contained in I2")
    lattice = enumerate_succ(Q)
    interval = [I for I in lattice.sets if I1 <= I <= I2]
    R = restricted_quiver(Q, I2 - I1)
    local = enumerate_succ(R)

    phi = {I: I - I1 for I in interval}
    psi = {J: I1 | J for J in local.sets}
    targets = set(local.sets)
    sources = set(interval)
    verified = (
        all(v in targets for v in phi.values())
        and all(v in sources for v in psi.values())
        and all(psi[phi[I]] == I for I in interval)
        and all(phi[psi[J]] == J for J in local.sets)
        and all((a <= b) == (phi[a] <= phi[b]) for a in interval for b in interval)
        and all((a <= b) == (psi[a] <= psi[b]) for a in local.sets for b in local.sets)
    )
    return SuccIntervalIso(Q, interval, local, phi, psi, verified)
