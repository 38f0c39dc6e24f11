import json
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stors.datasets import NAMES, load_dataset
from stors.extcat import (
    ZERO,
    CategoryError,
    FiniteExtCat,
    Obj,
    category_to_dict,
    dump_category,
    hom_vanishes,
    is_extension_closed,
    left_perp,
    load_category,
    negext_vanishes,
    obj_in_star,
    restrict_to,
    right_perp,
    star_subcat,
    validate_lints,
)
from stors.typea import all_orientations, gen_typea

DATA = Path(__file__).parent / "data"
GOLDEN = json.loads((DATA / "oracle_golden.json").read_text())


def minimal_spec(**overrides) -> str:
    data = {
        "label": "two",
        "indecs": ["X", "Y"],
        "hom_dim": [[1, 0], [0, 1]],
        "negext_dim": [[0, 0], [0, 0]],
        "conf": {},
    }
    data.update(overrides)
    return json.dumps(data)


@pytest.fixture(scope="module")
def a2():
    return load_dataset("typeA_2_linear_ext1")


# ------------------------------------------------------------------ loading


def test_minimal_category_has_only_trivial_rows():
    cat = load_category(minimal_spec())
    assert cat.indecs == ("X", "Y")
    for m in cat.indecs:
        assert cat.conf[m] == frozenset({(Obj.of(m), ZERO), (ZERO, Obj.of(m))})


def test_bundled_a2_indecs(a2):
    assert a2.indecs == ("[1,1]", "[2,2]", "[1,2]")


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("{not json", "parse error"),
        (minimal_spec(conf={"X": [[["X9"], []]]}), "unknown IndecId 'X9'"),
        (minimal_spec(conf={"X9": []}), "unknown IndecId 'X9'"),
        (minimal_spec(hom_dim=[[1, -1], [0, 1]]), "negative"),
        (minimal_spec(indecs=["X", "X"]), "duplicate"),
        (minimal_spec(shift={"X": "X", "Y": "X"}), "permutation"),
        (minimal_spec(hom_dim=[[0, 0], [0, 1]]), "hom_dim\\(X, X\\) must be at least 1"),
        (minimal_spec(hom_dim=[[1, 0]]), "expected a 2x2 integer matrix"),
        (minimal_spec(hom_dim=[[1, 0.5], [0, 1]]), "integer"),
        (json.dumps({"indecs": ["X"]}), "hom_dim"),
    ],
)
def test_load_errors(text, fragment):
    with pytest.raises(CategoryError, match=fragment):
        load_category(text)


def test_multiset_order_irrelevant():
    a = load_category(minimal_spec(conf={"X": [[["X", "Y"], ["Y"]]]}))
    b = load_category(minimal_spec(conf={"X": [[["Y", "X"], ["Y"]]]}))
    assert a == b


@pytest.mark.parametrize("name", NAMES)
def test_dump_round_trip(name):
    cat = load_dataset(name)
    again = load_category(dump_category(cat))
    assert again == cat
    assert dump_category(again) == dump_category(cat)


def test_dump_omits_trivial_rows(a2):
    data = category_to_dict(a2)
    assert data["conf"]["[1,1]"] == []
    assert data["conf"]["[1,2]"] == [[["[2,2]"], ["[1,1]"]]]


def test_category_is_immutable(a2):
    with pytest.raises(ValueError):
        a2.hom_dim[0, 0] = 5


# ------------------------------------------------------------------ lints


def test_lints_trivial_category():
    assert validate_lints(load_category(minimal_spec())) == []


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_lints_clean_on_generated(n):
    for o in all_orientations(n):
        for mode in ("zero", "ext1"):
            assert validate_lints(gen_typea(o, mode)) == [], (o, mode)


@pytest.mark.parametrize("name", NAMES)
def test_lints_clean_on_bundled(name):
    assert validate_lints(load_dataset(name)) == []


def test_broken_spec_triggers_lints():
    cat = load_category((DATA / "broken_spec.json").read_text())
    found = {(v.family, v.witness, v.lhs, v.rhs) for v in validate_lints(cat)}
    # Hom(S1, S1) = 1 cannot be covered by E^-1(S2, S1) + Hom(P, S1) = 0
    assert ("negext_contravariant", "S1", 1, 0) in found
    # zeroing Hom(P, S1) also breaks the covariant Hom sequence at W = P
    assert found == {("negext_contravariant", "S1", 1, 0), ("hom_covariant", "P", 1, 0)}


def test_ext_lints_need_ext_data(a2):
    data = category_to_dict(a2)
    data["ext_dim"] = [[0, 0, 0]] * 3
    cat = load_category(json.dumps(data))
    families = {v.family for v in validate_lints(cat)}
    assert families and families <= {"ext_covariant", "ext_contravariant"}
    del data["ext_dim"]
    assert validate_lints(load_category(json.dumps(data))) == []


# ------------------------------------------------------------------ vanishing and perps


def test_hom_vanishes(a2):
    assert hom_vanishes(a2, [], a2.all)
    assert hom_vanishes(a2, a2.all, [])
    assert not hom_vanishes(a2, ["[1,2]"], ["[1,2]"])
    assert hom_vanishes(a2, ["[2,2]"], ["[1,1]"])


def test_negext_vanishes():
    zero = load_dataset("nakayama_A_e1")
    assert negext_vanishes(zero, zero.all, zero.all)
    e2 = load_dataset("nakayama_A_e2")
    assert not negext_vanishes(e2, ["2/1", "2"], ["1"])
    assert not negext_vanishes(e2, ["2"], ["1"])
    assert e2.negext("2", "1") > 0


def test_perps(a2):
    assert right_perp(a2, []) == a2.all
    assert right_perp(a2, a2.all) == frozenset()
    assert sorted(right_perp(a2, ["[1,2]"])) == GOLDEN["a2_linear"]["right_perp_12"]
    assert left_perp(a2, []) == a2.all


# ------------------------------------------------------------------ star and extension closure


def test_obj_in_star(a2):
    assert obj_in_star(a2, ZERO, frozenset(), frozenset())
    assert obj_in_star(a2, "[1,2]", frozenset({"[1,2]"}), frozenset())
    assert obj_in_star(a2, "[1,2]", frozenset({"[2,2]"}), frozenset({"[1,1]"}))
    assert not obj_in_star(a2, "[1,2]", frozenset({"[1,1]"}), frozenset({"[2,2]"}))
    both = Obj.of("[1,2]", "[1,1]")
    assert obj_in_star(a2, both, frozenset({"[2,2]"}), frozenset({"[1,1]"}))
    assert not obj_in_star(a2, both, frozenset({"[2,2]"}), frozenset())


def test_star_subcat(a2):
    X, Y = {"[2,2]"}, {"[1,1]"}
    assert star_subcat(a2, X, []) == frozenset(X)
    assert star_subcat(a2, [], Y) == frozenset(Y)
    assert star_subcat(a2, X, Y) == a2.all
    assert star_subcat(a2, Y, X) == {"[1,1]", "[2,2]"}
    assert star_subcat(a2, a2.all, a2.all) == a2.all


def test_extension_closed(a2):
    assert is_extension_closed(a2, a2.all)
    assert is_extension_closed(a2, [])
    assert not is_extension_closed(a2, ["[1,1]", "[2,2]"])
    assert is_extension_closed(a2, ["[1,1]", "[1,2]"])


def test_restrict_to(a2):
    assert restrict_to(a2, a2.all) == a2
    empty = restrict_to(a2, [])
    assert empty.indecs == () and empty.hom_dim.shape == (0, 0)
    with pytest.raises(CategoryError, match="not extension-closed: '\\[1,2\\]'"):
        restrict_to(a2, ["[1,1]", "[2,2]"])


def test_restrict_nakayama_heart():
    D = load_dataset("nakayama_D")
    A = restrict_to(D, ["1", "2/1", "2"], label="nakayama_A_e2")
    assert A == load_dataset("nakayama_A_e2")
    assert A.shift is None


# ------------------------------------------------------------------ properties


def subsets_of(cat):
    return st.frozensets(st.sampled_from(cat.indecs)) if cat.indecs else st.just(frozenset())


CATS = [gen_typea("1>2<3<4", "ext1"), gen_typea("1<2>3", "zero"), load_dataset("nakayama_D")]


@pytest.mark.parametrize("cat", CATS, ids=lambda c: c.label)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_star_monotone(cat, data):
    X = data.draw(subsets_of(cat))
    Y = data.draw(subsets_of(cat))
    X2 = X | data.draw(subsets_of(cat))
    Y2 = Y | data.draw(subsets_of(cat))
    assert star_subcat(cat, X, Y) <= star_subcat(cat, X2, Y2)


@pytest.mark.parametrize("cat", CATS, ids=lambda c: c.label)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_perp_antitone(cat, data):
    X = data.draw(subsets_of(cat))
    X2 = X | data.draw(subsets_of(cat))
    assert right_perp(cat, X2) <= right_perp(cat, X)
    assert left_perp(cat, X2) <= left_perp(cat, X)


@pytest.mark.parametrize("cat", CATS, ids=lambda c: c.label)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_restrict_idempotent(cat, data):
    H = data.draw(subsets_of(cat))
    if not is_extension_closed(cat, H):
        return
    once = restrict_to(cat, H)
    assert restrict_to(once, H) == once


@pytest.mark.parametrize("cat", CATS, ids=lambda c: c.label)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_biadditive(cat, data):
    names = st.lists(st.sampled_from(cat.indecs), max_size=4)
    A = Obj(tuple(data.draw(names)))
    B = Obj(tuple(data.draw(names)))
    for dim, mat in ((cat.hom, cat.hom_dim), (cat.negext, cat.negext_dim), (cat.ext, cat.ext_dim)):
        expect = sum(int(mat[cat.index[a], cat.index[b]]) for a in A for b in B)
        assert dim(A, B) == expect
    C = Obj(tuple(data.draw(names)))
    assert cat.hom(A + C, B) == cat.hom(A, B) + cat.hom(C, B)


@pytest.mark.parametrize("name", NAMES)
def test_trivial_rows_present(name):
    cat = load_dataset(name)
    for m in cat.indecs:
        assert (Obj.of(m), ZERO) in cat.conf[m]
        assert (ZERO, Obj.of(m)) in cat.conf[m]


def test_direct_construction_validates():
    with pytest.raises(CategoryError):
        FiniteExtCat(indecs=("X",), hom_dim=np.array([[1]]), negext_dim=[[0]], conf={"X": {(Obj.of("Z"), ZERO)}})
