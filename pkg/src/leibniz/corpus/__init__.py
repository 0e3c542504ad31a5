"""Bundled corpus of algebras and bimodule fixtures."""
from __future__ import annotations

from importlib import resources

from ..fileformat import AlgebraFile, loads


def names() -> list:
    return sorted(p.name[:-5] for p in resources.files(__name__).iterdir()
                  if p.name.endswith(".json"))


def path(name: str):
    return resources.files(__name__) / f"{name}.json"


def load(name: str) -> AlgebraFile:
    return loads(path(name).read_text())


def algebra(name: str):
    return load(name).algebra


def algebras() -> dict:
    """Every corpus algebra that is not a bimodule fixture, keyed by name."""
    return {n: load(n).algebra for n in names() if not n.startswith("bimodule_")}


def bimodule_fixtures() -> dict:
    return {n: load(n) for n in names() if n.startswith("bimodule_")}
