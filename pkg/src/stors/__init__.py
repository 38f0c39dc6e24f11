"""Torsion pairs in finite extriangulated-style categories.

A category is given by finite Hom / negative-Ext / Ext dimension tables and a
table of conflations; see :class:`FiniteExtCat`.
"""

from .datasets import load_dataset
from .extcat import CategoryError, FiniteExtCat, Obj, load_category, dump_category, validate_lints
from .quivers import Quiver, QuiverError, enumerate_succ, succ_interval_iso
from .torsion import (
    STorsPair,
    TorsionError,
    enumerate_stors,
    heart_of,
    is_storsion,
    phi,
    psi,
    verify_heart_lemma,
    verify_main_theorem,
)
from .typea import gen_typea, pair_from_succ, parse_orientation

__all__ = [
    "CategoryError",
    "FiniteExtCat",
    "Obj",
    "Quiver",
    "QuiverError",
    "STorsPair",
    "TorsionError",
    "dump_category",
    "enumerate_stors",
    "enumerate_succ",
    "gen_typea",
    "heart_of",
    "is_storsion",
    "load_category",
    "load_dataset",
    "pair_from_succ",
    "parse_orientation",
    "phi",
    "psi",
    "succ_interval_iso",
    "validate_lints",
    "verify_heart_lemma",
    "verify_main_theorem",
]
