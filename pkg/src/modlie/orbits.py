"""Embedded catalog of nilpotent-orbit data.

One record per orbit of G2/F4/E6/E7/E8: label, representative as a list of
positive-root coefficient strings (absent for orbits without a stored
representative), weighted diagram (absent when no associated cocharacter is
stored), and the expected centralizer dimension for every prime class in
the reference tables.  The data ships as a line-oriented text file under
modlie/data and is read-only after load.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from importlib import resources

import numpy as np

from . import chevalley
from .chevalley import CocharacterGrading, LieAlgebraSC, grading_from_diagram

GROUPS = ("G2", "F4", "E6", "E7", "E8")


@dataclass(frozen=True)
class OrbitRecord:
    group: str
    label: str
    nonstandard: bool
    representative: tuple[str, ...] | None
    diagram: tuple[int, ...] | None
    dim_ge: dict[str, int] = field(compare=False)
    aliases: tuple[str, ...] = ()

    def has_representative(self) -> bool:
        return self.representative is not None

    def prime_classes(self) -> list[str]:
        return list(self.dim_ge)


def _data_text() -> str:
    return resources.files("modlie").joinpath("data/orbits.txt").read_text()


def catalog_sha256() -> str:
    return hashlib.sha256(_data_text().encode()).hexdigest()


def _parse(text: str) -> dict[str, list[OrbitRecord]]:
    out: dict[str, list[OrbitRecord]] = {g: [] for g in GROUPS}
    cur: dict | None = None

    def flush():
        nonlocal cur
        if cur is None:
            return
        rec = OrbitRecord(cur["group"], cur["label"], cur["nonstandard"],
                          cur.get("rep"), cur.get("diagram"), cur["dims"],
                          tuple(cur.get("aliases", [])))
        out[rec.group].append(rec)
        cur = None

    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "orbit":
            flush()
            cur = {"group": parts[1], "label": parts[2],
                   "nonstandard": "nonstandard" in parts[3:], "dims": {}}
        elif parts[0] == "alias":
            cur.setdefault("aliases", []).append(parts[1])
        elif parts[0] == "rep":
            cur["rep"] = tuple(parts[1].split(","))
        elif parts[0] == "diagram":
            cur["diagram"] = tuple(int(x) for x in parts[1:])
        elif parts[0] == "dim":
            cls = parts[1].removeprefix("p=")
            cur["dims"][cls] = int(parts[2])
        else:
            raise ValueError(f"bad catalog line: {raw!r}")
    flush()
    return out


_CATALOG: dict[str, list[OrbitRecord]] | None = None


def _catalog() -> dict[str, list[OrbitRecord]]:
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _parse(_data_text())
    return _CATALOG


def enumerate_orbits(group: str) -> list[OrbitRecord]:
    if group not in GROUPS:
        raise KeyError(f"unknown group {group!r}")
    return list(_catalog()[group])


def lookup(group: str, label: str) -> OrbitRecord:
    for rec in enumerate_orbits(group):
        if rec.label == label or label in rec.aliases:
            return rec
    raise KeyError(f"unknown orbit {label!r} in {group}")


def expected_centralizer_dim(rec: OrbitRecord, p: int) -> int:
    """Table value for the prime p (exact row, else the matching geq row)."""
    if str(p) in rec.dim_ge:
        return rec.dim_ge[str(p)]
    for cls, val in rec.dim_ge.items():
        if cls.startswith("geq") and p >= int(cls.removeprefix("geq")):
            return val
    raise KeyError(f"prime {p} outside the table rows for {rec.group} {rec.label}")


def representative(g: LieAlgebraSC, rec: OrbitRecord) -> np.ndarray:
    """The stored representative as a sum of positive-root vectors of g."""
    if rec.representative is None:
        raise ValueError(f"orbit {rec.group} {rec.label} has no stored representative")
    e = g.zero()
    for s in rec.representative:
        e = (e + chevalley.root_vector(g, 1, s)) % g.p
    return e


def cocharacter_grading(g: LieAlgebraSC, rec: OrbitRecord) -> CocharacterGrading:
    if rec.diagram is None:
        raise ValueError(f"orbit {rec.group} {rec.label} has no stored diagram")
    return grading_from_diagram(g, rec.diagram)
