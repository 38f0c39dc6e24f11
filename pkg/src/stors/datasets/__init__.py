"""Bundled category spec files.

The Nakayama files are frozen output of :mod:`stors.nakayama`; the type-A files
are frozen output of :func:`stors.typea.gen_typea`.  ``regenerate`` rewrites
them all.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from ..extcat import FiniteExtCat, dump_category, load_category

NAMES = (
    "nakayama_D",
    "nakayama_A_e1",
    "nakayama_A_e2",
    "typeA_2_linear_ext1",
    "typeA_2_linear_zero",
)


def dataset_text(name: str) -> str:
    if name not in NAMES:
        raise KeyError(f"unknown dataset {name!r}; available: {', '.join(NAMES)}")
    return resources.files(__name__).joinpath(f"{name}.json").read_text(encoding="utf-8")


def load_dataset(name: str) -> FiniteExtCat:
    return load_category(dataset_text(name))


def derive(name: str) -> FiniteExtCat:
    """Recompute a dataset from scratch."""
    from ..nakayama import derive_all
    from ..typea import gen_typea

    if name.startswith("nakayama"):
        return derive_all()[name]
    if name == "typeA_2_linear_ext1":
        return gen_typea("1>2", "ext1")
    if name == "typeA_2_linear_zero":
        return gen_typea("1>2", "zero")
    raise KeyError(f"unknown dataset {name!r}")


def regenerate(directory: str | Path | None = None) -> list[Path]:
    directory = Path(directory) if directory else Path(__file__).parent
    written = []
    for name in NAMES:
        path = directory / f"{name}.json"
        path.write_text(dump_category(derive(name)), encoding="utf-8")
        written.append(path)
    return written
