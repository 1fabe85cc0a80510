"""Bundled sample biracks, cochains, and diagram codes.

Diagrams live under links/ as crossing-list files and under knots/ as
signed Gauss codes (virtual knots among them, stored through their
classical crossings only).  Names are case-insensitive file stems, e.g.
"l2a1", "k3_1", "v2_1".
"""

from __future__ import annotations

from importlib import resources

from ..algebra import AugmentedBirack, parse_birack
from ..diagram import LinkDiagram, parse_crossing_list, parse_gauss
from ..homology import Cochain2, parse_cochain

__all__ = [
    "available_biracks",
    "available_cochains",
    "available_diagrams",
    "load_birack",
    "load_cochain",
    "load_diagram",
]


def _root():
    return resources.files(__package__)


def _stems(subdir: str, suffix: str) -> list[str]:
    folder = _root() / subdir
    if not folder.is_dir():
        return []
    return sorted(
        entry.name[: -len(suffix)]
        for entry in folder.iterdir()
        if entry.name.endswith(suffix)
    )


def available_biracks() -> list[str]:
    return _stems("biracks", ".txt")


def available_cochains() -> list[str]:
    return _stems("cochains", ".txt")


def available_diagrams() -> list[str]:
    return _stems("links", ".txt") + _stems("knots", ".gauss")


def load_birack(name: str) -> AugmentedBirack:
    path = _root() / "biracks" / f"{name.lower()}.txt"
    if not path.is_file():
        raise KeyError(f"no bundled birack {name!r}; have {available_biracks()}")
    return parse_birack(path.read_text())


def load_cochain(name: str, size: int) -> Cochain2:
    path = _root() / "cochains" / f"{name.lower()}.txt"
    if not path.is_file():
        raise KeyError(f"no bundled cochain {name!r}; have {available_cochains()}")
    return parse_cochain(path.read_text(), size)


def load_diagram(name: str) -> LinkDiagram:
    stem = name.lower()
    link_path = _root() / "links" / f"{stem}.txt"
    if link_path.is_file():
        return parse_crossing_list(link_path.read_text())
    knot_path = _root() / "knots" / f"{stem}.gauss"
    if knot_path.is_file():
        return parse_gauss(knot_path.read_text())
    raise KeyError(f"no bundled diagram {name!r}; have {available_diagrams()}")
