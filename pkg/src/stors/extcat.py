"""Finite Krull-Schmidt extriangulated categories with a negative first extension.

A category is stored at the level of dimensions: for indecomposables X, Y we
keep dim Hom(X, Y), dim E^{-1}(X, Y) and optionally dim E(X, Y).  Conflations
are stored in a table indexed by their (indecomposable) middle term.  Objects
are multisets of indecomposables, subcategories are sets of indecomposables
and stand for their additive closure.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

__all__ = [
    "CategoryError",
    "Obj",
    "ZERO",
    "Row",
    "FiniteExtCat",
    "Violation",
    "load_category",
    "dump_category",
    "validate_lints",
    "hom_vanishes",
    "negext_vanishes",
    "obj_in_star",
    "star_subcat",
    "right_perp",
    "left_perp",
    "is_extension_closed",
    "restrict_to",
]


class CategoryError(ValueError):
    """Raised for malformed category data."""


@dataclass(frozen=True, order=True)
class Obj:
    """An object up to isomorphism: a sorted multiset of indecomposable names."""

    summands: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(sorted(self.summands)))

    @classmethod
    def of(cls, *names: str) -> "Obj":
        return cls(tuple(names))

    def __add__(self, other: "Obj") -> "Obj":
        return Obj(self.summands + other.summands)

    def __bool__(self) -> bool:
        return bool(self.summands)

    def __iter__(self):
        return iter(self.summands)

    def __len__(self) -> int:
        return len(self.summands)

    def support(self) -> frozenset[str]:
        return frozenset(self.summands)

    def counts(self) -> Counter:
        return Counter(self.summands)

    def __str__(self) -> str:
        return "(" + " + ".join(self.summands) + ")" if self.summands else "0"


ZERO = Obj()

# a stored conflation A -> M -> C, as the pair (A, C)
Row = tuple[Obj, Obj]


def _in(obj: Obj, sub: frozenset[str]) -> bool:
    return all(s in sub for s in obj.summands)


def _frozen_matrix(rows, n: int, what: str) -> np.ndarray:
    try:
        arr = np.array(rows, dtype=np.int64).reshape(n, n) if n else np.zeros((0, 0), dtype=np.int64)
    except (ValueError, TypeError) as exc:
        raise CategoryError(f"{what}: expected a {n}x{n} integer matrix") from exc
    if n and (len(rows) != n or any(len(r) != n for r in rows)):
        raise CategoryError(f"{what}: expected a {n}x{n} integer matrix")
    for r in rows:
        for x in r:
            if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
                raise CategoryError(f"{what}: dimension {x!r} is not an exact integer")
    if (arr < 0).any():
        i, j = map(int, np.argwhere(arr < 0)[0])
        raise CategoryError(f"{what}: negative dimension at ({i}, {j})")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class FiniteExtCat:
    """Dimension data of a finite extriangulated category with negative first extension.

    ``conf`` maps each indecomposable M to the set of pairs (A, C) for which an
    s-conflation A -> M -> C is asserted.  The trivial rows (M, 0) and (0, M) are
    added on construction.  ``shift``, when given, is the action of a suspension
    on indecomposables (triangulated instances only).
    """

    indecs: tuple[str, ...]
    hom_dim: np.ndarray
    negext_dim: np.ndarray
    conf: Mapping[str, frozenset[Row]]
    ext_dim: np.ndarray | None = None
    shift: Mapping[str, str] | None = None
    label: str = ""
    index: Mapping[str, int] = field(init=False, repr=False)

    def __post_init__(self):
        indecs = tuple(self.indecs)
        object.__setattr__(self, "indecs", indecs)
        seen = set()
        for name in indecs:
            if not isinstance(name, str) or not name:
                raise CategoryError(f"indecomposable name {name!r} must be a nonempty string")
            if name in seen:
                raise CategoryError(f"duplicate IndecId {name!r}")
            seen.add(name)
        object.__setattr__(self, "index", {x: i for i, x in enumerate(indecs)})
        n = len(indecs)
        object.__setattr__(self, "hom_dim", _frozen_matrix(_listify(self.hom_dim), n, "hom_dim"))
        object.__setattr__(self, "negext_dim", _frozen_matrix(_listify(self.negext_dim), n, "negext_dim"))
        if self.ext_dim is not None:
            object.__setattr__(self, "ext_dim", _frozen_matrix(_listify(self.ext_dim), n, "ext_dim"))
        for x in indecs:
            if self.hom_dim[self.index[x], self.index[x]] < 1:
                raise CategoryError(f"hom_dim({x}, {x}) must be at least 1")

        conf: dict[str, frozenset[Row]] = {}
        for m, rows in self.conf.items():
            if m not in self.index:
                raise CategoryError(f"unknown IndecId {m!r} (conflation middle)")
            for a, c in rows:
                for s in a.summands + c.summands:
                    if s not in self.index:
                        raise CategoryError(f"unknown IndecId {s!r} in conflation row of {m!r}")
        for m in indecs:
            rows = set(self.conf.get(m, ()))
            rows.add((Obj.of(m), ZERO))
            rows.add((ZERO, Obj.of(m)))
            conf[m] = frozenset(rows)
        object.__setattr__(self, "conf", conf)

        if self.shift is not None:
            shift = dict(self.shift)
            if set(shift) != set(indecs):
                missing = sorted(set(indecs) - set(shift)) or sorted(set(shift) - set(indecs))
                raise CategoryError(f"shift is not a permutation of indecs (offending: {missing[0]!r})")
            if set(shift.values()) != set(indecs):
                bad = sorted(set(shift.values()) - set(indecs)) or sorted(set(indecs) - set(shift.values()))
                raise CategoryError(f"shift is not a permutation of indecs (offending: {bad[0]!r})")
            object.__setattr__(self, "shift", shift)

    # dimension lookups, extended biadditively to objects

    def _dim(self, mat: np.ndarray, x: Obj | str, y: Obj | str) -> int:
        xs = (x,) if isinstance(x, str) else x.summands
        ys = (y,) if isinstance(y, str) else y.summands
        idx = self.index
        return int(sum(mat[idx[a], idx[b]] for a in xs for b in ys))

    def hom(self, x: Obj | str, y: Obj | str) -> int:
        return self._dim(self.hom_dim, x, y)

    def negext(self, x: Obj | str, y: Obj | str) -> int:
        return self._dim(self.negext_dim, x, y)

    def ext(self, x: Obj | str, y: Obj | str) -> int:
        if self.ext_dim is None:
            raise CategoryError(f"category {self.label!r} carries no ext_dim")
        return self._dim(self.ext_dim, x, y)

    @property
    def all(self) -> frozenset[str]:
        return frozenset(self.indecs)

    def subcat(self, members: Iterable[str]) -> frozenset[str]:
        sub = frozenset(members)
        for m in sub:
            if m not in self.index:
                raise CategoryError(f"unknown IndecId {m!r}")
        return sub

    def obj(self, *names: str) -> Obj:
        for m in names:
            if m not in self.index:
                raise CategoryError(f"unknown IndecId {m!r}")
        return Obj(names)

    def sorted_members(self, sub: Iterable[str]) -> list[str]:
        """Members in the category's declared order."""
        return sorted(sub, key=self.index.__getitem__)

    def sorted_members_list(self, obj: Obj) -> list[str]:
        return sorted(obj.summands, key=self.index.__getitem__)

    def rows(self, m: str) -> list[Row]:
        return sorted(self.conf[m])

    def __eq__(self, other):
        if not isinstance(other, FiniteExtCat):
            return NotImplemented
        return (
            self.indecs == other.indecs
            and np.array_equal(self.hom_dim, other.hom_dim)
            and np.array_equal(self.negext_dim, other.negext_dim)
            and ((self.ext_dim is None) == (other.ext_dim is None))
            and (self.ext_dim is None or np.array_equal(self.ext_dim, other.ext_dim))
            and dict(self.conf) == dict(other.conf)
            and (self.shift == other.shift)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"FiniteExtCat({self.label!r}, {len(self.indecs)} indecs)"


def _listify(m):
    if isinstance(m, np.ndarray):
        return m.tolist()
    return [list(r) for r in m]


# ---------------------------------------------------------------------------
# spec file format


def _parse_obj(value, where: str) -> Obj:
    if not isinstance(value, list) or not all(isinstance(s, str) for s in value):
        raise CategoryError(f"{where}: object must be an array of indecomposable names")
    return Obj(tuple(value))


def category_from_dict(data: Mapping) -> FiniteExtCat:
    if not isinstance(data, Mapping):
        raise CategoryError("top level must be an object")
    for key in ("indecs", "hom_dim", "negext_dim"):
        if key not in data:
            raise CategoryError(f"missing field {key!r}")
    indecs = data["indecs"]
    if not isinstance(indecs, list):
        raise CategoryError("'indecs' must be an array of strings")
    conf_in = data.get("conf", {})
    if not isinstance(conf_in, Mapping):
        raise CategoryError("'conf' must be an object")
    conf = {}
    for m, rows in conf_in.items():
        if not isinstance(rows, list):
            raise CategoryError(f"conf[{m!r}] must be an array of [A, C] pairs")
        parsed = set()
        for k, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != 2:
                raise CategoryError(f"conf[{m!r}][{k}] must be a pair [A, C]")
            parsed.add((_parse_obj(row[0], f"conf[{m!r}][{k}]"), _parse_obj(row[1], f"conf[{m!r}][{k}]")))
        conf[m] = frozenset(parsed)
    shift = data.get("shift")
    if shift is not None and not isinstance(shift, Mapping):
        raise CategoryError("'shift' must be an object mapping names to names")
    label = data.get("label", "")
    if not isinstance(label, str):
        raise CategoryError("'label' must be a string")
    return FiniteExtCat(
        indecs=tuple(indecs),
        hom_dim=data["hom_dim"],
        negext_dim=data["negext_dim"],
        ext_dim=data.get("ext_dim"),
        conf=conf,
        shift=shift,
        label=label,
    )


def load_category(spec_text: str) -> FiniteExtCat:
    """Parse a category spec file (JSON text)."""
    try:
        data = json.loads(spec_text)
    except json.JSONDecodeError as exc:
        raise CategoryError(f"parse error: {exc}") from exc
    return category_from_dict(data)


def category_to_dict(cat: FiniteExtCat, trivial_rows: bool = False) -> dict:
    conf = {}
    for m in cat.indecs:
        rows = []
        for a, c in sorted(cat.conf[m], key=lambda r: _row_key(cat, r)):
            if not trivial_rows and (a == ZERO or c == ZERO):
                continue
            rows.append([cat.sorted_members_list(a), cat.sorted_members_list(c)])
        conf[m] = rows
    data = {
        "label": cat.label,
        "indecs": list(cat.indecs),
        "hom_dim": cat.hom_dim.tolist(),
        "negext_dim": cat.negext_dim.tolist(),
    }
    if cat.ext_dim is not None:
        data["ext_dim"] = cat.ext_dim.tolist()
    data["conf"] = conf
    if cat.shift is not None:
        data["shift"] = {x: cat.shift[x] for x in cat.indecs}
    return data


def _obj_key(cat: FiniteExtCat, obj: Obj) -> tuple:
    return (len(obj), tuple(sorted(cat.index[s] for s in obj.summands)))


def _row_key(cat: FiniteExtCat, row: Row) -> tuple:
    return (_obj_key(cat, row[0]), _obj_key(cat, row[1]))


def dump_category(cat: FiniteExtCat) -> str:
    """Serialize to the spec file format; identical categories give identical text.

    Small matrices are written one row per line.
    """
    return "".join(_compact(category_to_dict(cat)))


def _compact(data: dict):
    yield "{\n"
    items = list(data.items())
    for k, (key, value) in enumerate(items):
        sep = "," if k < len(items) - 1 else ""
        yield f"  {json.dumps(key)}: "
        if key in ("hom_dim", "negext_dim", "ext_dim"):
            if value:
                yield "[\n" + ",\n".join("    " + json.dumps(r) for r in value) + "\n  ]"
            else:
                yield "[]"
        elif key == "conf":
            if not value:
                yield "{}"
            else:
                lines = []
                for m, rows in value.items():
                    if rows:
                        inner = ",\n".join("      " + json.dumps(r, ensure_ascii=False) for r in rows)
                        lines.append(f"    {json.dumps(m, ensure_ascii=False)}: [\n{inner}\n    ]")
                    else:
                        lines.append(f"    {json.dumps(m, ensure_ascii=False)}: []")
                yield "{\n" + ",\n".join(lines) + "\n  }"
        else:
            yield json.dumps(value, ensure_ascii=False)
        yield sep + "\n"
    yield "}\n"


# ---------------------------------------------------------------------------
# lints


@dataclass(frozen=True)
class Violation:
    """A failed dimension inequality ``lhs <= rhs`` for one stored conflation."""

    family: str
    middle: str
    row: Row
    witness: str
    lhs: int
    rhs: int

    def __str__(self) -> str:
        a, c = self.row
        return (
            f"{self.family}: conflation {a} -> {self.middle} -> {c}, W = {self.witness}: "
            f"{self.lhs} > {self.rhs}"
        )


# Each family reads off one spot of the long exact sequences attached to a
# conflation A -> B -> C; exactness bounds the middle term by its neighbours.
LINT_FAMILIES = (
    "hom_covariant",  # C(W,A) -> C(W,B) -> C(W,C)
    "hom_contravariant",  # C(C,W) -> C(B,W) -> C(A,W)
    "negext_covariant",  # E^-1(W,C) -> C(W,A) -> C(W,B)
    "negext_contravariant",  # E^-1(A,W) -> C(C,W) -> C(B,W)
    "ext_covariant",  # C(W,B) -> C(W,C) -> E(W,A)
    "ext_contravariant",  # C(B,W) -> C(A,W) -> E(C,W)
)


def validate_lints(cat: FiniteExtCat) -> list[Violation]:
    out: list[Violation] = []
    has_ext = cat.ext_dim is not None
    for b in cat.indecs:
        for a, c in cat.rows(b):
            for w in cat.indecs:
                checks = [
                    ("hom_covariant", cat.hom(w, b), cat.hom(w, a) + cat.hom(w, c)),
                    ("hom_contravariant", cat.hom(b, w), cat.hom(a, w) + cat.hom(c, w)),
                    ("negext_covariant", cat.hom(w, a), cat.negext(w, c) + cat.hom(w, b)),
                    ("negext_contravariant", cat.hom(c, w), cat.negext(a, w) + cat.hom(b, w)),
                ]
                if has_ext:
                    checks += [
                        ("ext_covariant", cat.hom(w, c), cat.hom(w, b) + cat.ext(w, a)),
                        ("ext_contravariant", cat.hom(a, w), cat.hom(b, w) + cat.ext(c, w)),
                    ]
                for family, lhs, rhs in checks:
                    if lhs > rhs:
                        out.append(Violation(family, b, (a, c), w, lhs, rhs))
    return out


# ---------------------------------------------------------------------------
# subcategory operations


def hom_vanishes(cat: FiniteExtCat, xs: Iterable[str], ys: Iterable[str]) -> bool:
    return _block_zero(cat, cat.hom_dim, xs, ys)


def negext_vanishes(cat: FiniteExtCat, xs: Iterable[str], ys: Iterable[str]) -> bool:
    return _block_zero(cat, cat.negext_dim, xs, ys)


def _block_zero(cat: FiniteExtCat, mat: np.ndarray, xs, ys) -> bool:
    ix = [cat.index[x] for x in xs]
    iy = [cat.index[y] for y in ys]
    if not ix or not iy:
        return True
    return not mat[np.ix_(ix, iy)].any()


def obj_in_star(cat: FiniteExtCat, obj: Obj | str, xs: frozenset[str], ys: frozenset[str]) -> bool:
    """Whether ``obj`` lies in X * Y, checked one indecomposable summand at a time."""
    summands = (obj,) if isinstance(obj, str) else obj.summands
    return all(_indec_in_star(cat, m, xs, ys) for m in set(summands))


def _indec_in_star(cat: FiniteExtCat, m: str, xs, ys) -> bool:
    return any(_in(a, xs) and _in(c, ys) for a, c in cat.conf[m])


def star_subcat(cat: FiniteExtCat, xs: Iterable[str], ys: Iterable[str]) -> frozenset[str]:
    xs, ys = frozenset(xs), frozenset(ys)
    return frozenset(m for m in cat.indecs if _indec_in_star(cat, m, xs, ys))


def right_perp(cat: FiniteExtCat, xs: Iterable[str]) -> frozenset[str]:
    """Indecomposables m with Hom(x, m) = 0 for all x in X."""
    ix = [cat.index[x] for x in xs]
    if not ix:
        return cat.all
    col_hit = cat.hom_dim[ix, :].any(axis=0)
    return frozenset(m for j, m in enumerate(cat.indecs) if not col_hit[j])


def left_perp(cat: FiniteExtCat, xs: Iterable[str]) -> frozenset[str]:
    """Indecomposables m with Hom(m, x) = 0 for all x in X."""
    ix = [cat.index[x] for x in xs]
    if not ix:
        return cat.all
    row_hit = cat.hom_dim[:, ix].any(axis=1)
    return frozenset(m for i, m in enumerate(cat.indecs) if not row_hit[i])


def is_extension_closed(cat: FiniteExtCat, sub: Iterable[str]) -> bool:
    sub = frozenset(sub)
    for m in cat.indecs:
        if m in sub:
            continue
        if _indec_in_star(cat, m, sub, sub):
            return False
    return True


def restrict_to(cat: FiniteExtCat, sub: Iterable[str], label: str | None = None) -> FiniteExtCat:
    """The induced category on an extension-closed subcategory."""
    sub = cat.subcat(sub)
    if not is_extension_closed(cat, sub):
        bad = next(
            m for m in cat.indecs if m not in sub and _indec_in_star(cat, m, sub, sub)
        )
        raise CategoryError(f"not extension-closed: {bad!r} is an extension of members")
    names = tuple(cat.sorted_members(sub))
    idx = [cat.index[x] for x in names]
    grid = np.ix_(idx, idx)
    conf = {
        m: frozenset((a, c) for a, c in cat.conf[m] if _in(a, sub) and _in(c, sub)) for m in names
    }
    shift = None
    if cat.shift is not None and {cat.shift[x] for x in names} == set(names):
        shift = {x: cat.shift[x] for x in names}
    return FiniteExtCat(
        indecs=names,
        hom_dim=cat.hom_dim[grid],
        negext_dim=cat.negext_dim[grid],
        ext_dim=None if cat.ext_dim is None else cat.ext_dim[grid],
        conf=conf,
        shift=shift,
        label=cat.label if label is None else label,
    )
