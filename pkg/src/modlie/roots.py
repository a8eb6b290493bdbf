"""Exact root systems for G2, F4, E6, E7 and E8.

Simple roots are realised in integer-scaled Euclidean coordinates (a global
factor of 2 absorbs the half-integer entries of the E-series and F4), so all
inner products and Cartan integers are exact integers.  Positive roots are
enumerated in height order and, within a height, by descending lexicographic
order of their simple-root coefficient vectors; this matches the basis order
used by the usual computer-algebra constructions for the E types and G2.
F4 is the one exception, and its conventional permutation is kept as a
stored secondary index.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

# Simple roots, scaled by 2.  E7/E6 are the obvious subsystems of E8.
_SIMPLE_COORDS: dict[str, list[tuple[int, ...]]] = {
    "E8": [
        (1, -1, -1, -1, -1, -1, -1, 1),
        (2, 2, 0, 0, 0, 0, 0, 0),
        (-2, 2, 0, 0, 0, 0, 0, 0),
        (0, -2, 2, 0, 0, 0, 0, 0),
        (0, 0, -2, 2, 0, 0, 0, 0),
        (0, 0, 0, -2, 2, 0, 0, 0),
        (0, 0, 0, 0, -2, 2, 0, 0),
        (0, 0, 0, 0, 0, -2, 2, 0),
    ],
    "F4": [
        (0, 2, -2, 0),
        (0, 0, 2, -2),
        (0, 0, 0, 2),
        (1, -1, -1, -1),
    ],
    "G2": [
        (2, -2, 0),
        (-4, 2, 2),
    ],
}

_RANKS = {"G2": 2, "F4": 4, "E6": 6, "E7": 7, "E8": 8}
_POSITIVE_COUNTS = {"G2": 6, "F4": 24, "E6": 36, "E7": 63, "E8": 120}

# Positive roots of F4 in the conventional computer-algebra order (read left
# to right, top to bottom), as coefficient strings over the simple roots.
F4_GAP_ORDER = [
    "0001", "1000", "0010", "0100", "0011", "1100", "0110", "0111",
    "1110", "0120", "1111", "0121", "1120", "1121", "0122", "1220",
    "1221", "1122", "1231", "1222", "1232", "1242", "1342", "2342",
]


@dataclass(frozen=True)
class Root:
    """A root: simple-root coefficients plus (scaled) Euclidean coordinates."""

    coeffs: tuple[int, ...]
    euclid: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coeffs), tuple(-x for x in self.euclid))

    def coeff_string(self) -> str:
        return "".join(str(c) for c in self.coeffs)


def _dot(a, b) -> int:
    return int(sum(x * y for x, y in zip(a, b)))


class RootSystem:
    """Positive roots of one exceptional type with exact arithmetic."""

    def __init__(self, name: str):
        if name not in _RANKS:
            raise ValueError(f"unknown root system {name!r}")
        self.name = name
        self.rank = _RANKS[name]
        family = "E8" if name.startswith("E") else name
        self.simple_euclid = [np.array(v, dtype=np.int64)
                              for v in _SIMPLE_COORDS[family][: self.rank]]
        self.positive = self._enumerate()
        self._index = {r.coeffs: i for i, r in enumerate(self.positive)}
        if len(self.positive) != _POSITIVE_COUNTS[name]:
            raise AssertionError(f"{name}: enumerated {len(self.positive)} positive roots")
        self.cartan = np.array(
            [[self._cartan_euclid(a, b) for b in self.simple_euclid]
             for a in self.simple_euclid], dtype=np.int64)
        if name == "F4":
            self.gap_order = [self._index[tuple(int(c) for c in s)] for s in F4_GAP_ORDER]
        else:
            self.gap_order = list(range(len(self.positive)))

    # -- construction ------------------------------------------------------

    @staticmethod
    def _cartan_euclid(beta, alpha) -> int:
        num = 2 * _dot(beta, alpha)
        den = _dot(alpha, alpha)
        q, r = divmod(num, den)
        if r:
            raise AssertionError("non-integral Cartan pairing")
        return q

    def _enumerate(self) -> list[Root]:
        rank = self.rank
        simple = self.simple_euclid
        roots: dict[tuple[int, ...], np.ndarray] = {}
        layer: list[tuple[int, ...]] = []
        for i in range(rank):
            coeffs = tuple(1 if j == i else 0 for j in range(rank))
            roots[coeffs] = simple[i].copy()
            layer.append(coeffs)
        while layer:
            nxt = []
            for coeffs in layer:
                vec = roots[coeffs]
                for i in range(rank):
                    # beta + alpha_i is a root iff q = r - <beta, alpha_i^v> > 0,
                    # where r counts how far the string descends from beta.
                    r = 0
                    down = list(coeffs)
                    while True:
                        down[i] -= 1
                        if tuple(down) in roots:
                            r += 1
                        else:
                            break
                    c = self._cartan_euclid(vec, simple[i])
                    if r - c <= 0:
                        continue
                    up = list(coeffs)
                    up[i] += 1
                    key = tuple(up)
                    if key not in roots:
                        roots[key] = vec + simple[i]
                        nxt.append(key)
            layer = nxt
        items = [Root(c, tuple(int(x) for x in v)) for c, v in roots.items()]
        items.sort(key=lambda r: (r.height, tuple(-c for c in r.coeffs)))
        return items

    # -- queries -----------------------------------------------------------

    @property
    def n_positive(self) -> int:
        return len(self.positive)

    @property
    def highest_root(self) -> Root:
        return self.positive[-1]

    def is_positive_root(self, coeffs) -> bool:
        return tuple(coeffs) in self._index

    def is_root(self, coeffs) -> bool:
        t = tuple(coeffs)
        return t in self._index or tuple(-c for c in t) in self._index

    def index_of(self, coeffs) -> int:
        return self._index[tuple(coeffs)]

    def root(self, coeffs) -> Root:
        return self.positive[self._index[tuple(coeffs)]]

    def root_from_string(self, s: str) -> Root:
        """Look up a positive root from a coefficient string like '1232'."""
        digits = tuple(int(ch) for ch in s)
        if len(digits) != self.rank:
            raise ValueError(f"bad coefficient string {s!r} for {self.name}")
        return self.root(digits)

    def root_from_gap_index(self, k: int) -> Root:
        """Positive root number k (1-based) in the stored secondary order."""
        return self.positive[self.gap_order[k - 1]]

    def length_sq(self, root: Root) -> int:
        return _dot(root.euclid, root.euclid)

    def cartan_integer(self, beta: Root, alpha: Root) -> int:
        """<beta, alpha^vee> = 2(beta|alpha)/(alpha|alpha), an exact integer."""
        return self._cartan_euclid(beta.euclid, alpha.euclid)

    def root_string(self, beta: Root, alpha: Root) -> tuple[int, int]:
        """Largest (r, q) with beta - r*alpha ... beta + q*alpha all roots."""
        if beta.coeffs == alpha.coeffs or beta.coeffs == tuple(-c for c in alpha.coeffs):
            raise ValueError("alpha = +-beta has no alpha-string")
        r = 0
        cur = np.array(beta.coeffs) - np.array(alpha.coeffs)
        while self.is_root(tuple(int(x) for x in cur)):
            r += 1
            cur -= np.array(alpha.coeffs)
        q = 0
        cur = np.array(beta.coeffs) + np.array(alpha.coeffs)
        while self.is_root(tuple(int(x) for x in cur)):
            q += 1
            cur += np.array(alpha.coeffs)
        return r, q

    def coroot_coefficients(self, root: Root) -> tuple[int, ...]:
        """Integers c_i with root^vee = sum c_i alpha_i^vee."""
        lsq = self.length_sq(root)
        out = []
        for n_i, alpha in zip(root.coeffs, self.simple_euclid):
            num = n_i * _dot(alpha, alpha)
            q, r = divmod(num, lsq)
            if r:
                raise AssertionError("coroot coefficients must be integers")
            out.append(q)
        return tuple(out)

    def dump_json(self) -> str:
        data = {
            "type": self.name,
            "rank": self.rank,
            "positive_roots": [list(r.coeffs) for r in self.positive],
            "highest_root": list(self.highest_root.coeffs),
        }
        return json.dumps(data, sort_keys=True)


_CACHE: dict[str, RootSystem] = {}


def build(type_: str, rank: int | None = None) -> RootSystem:
    """Construct (and cache) a root system, e.g. build('E', 8) or build('E8')."""
    name = type_ if rank is None else f"{type_}{rank}"
    if name not in _RANKS:
        raise ValueError(f"unknown root system {name!r}")
    rs = _CACHE.get(name)
    if rs is None:
        rs = RootSystem(name)
        _CACHE[name] = rs
    return rs


# -- Borel--de Siebenthal ---------------------------------------------------


@dataclass(frozen=True)
class DeletionResult:
    """Outcome of deleting one node from the extended Dynkin diagram."""

    subsystem: str              # e.g. "A4+A4"
    deleted_coefficient: int    # coefficient of the deleted node in the highest root
    maximal: bool               # coefficient is 1 or a prime
    centerful_prime: int | None # the subalgebra gains a centre at this prime


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _classify(nodes: list[int], euclid: list[np.ndarray]) -> str:
    """Classify one connected component of a Dynkin diagram by rank ~ 8."""
    n = len(nodes)
    if n == 1:
        return "A1"
    adj: dict[int, list[int]] = {i: [] for i in range(n)}
    bond = {}
    for i in range(n):
        for j in range(i + 1, n):
            cij = RootSystem._cartan_euclid(euclid[i], euclid[j])
            cji = RootSystem._cartan_euclid(euclid[j], euclid[i])
            m = cij * cji
            if m:
                adj[i].append(j)
                adj[j].append(i)
                bond[(i, j)] = bond[(j, i)] = m
    degrees = sorted(len(v) for v in adj.values())
    maxbond = max(bond.values()) if bond else 0
    if maxbond == 3:
        return "G2"
    if maxbond == 2:
        lengths = [_dot(e, e) for e in euclid]
        nlong = sum(1 for l in lengths if l == max(lengths))
        if n == 2:
            return "B2"
        if degrees[-1] == 2 and n == 4:
            # F4 has the double bond in the middle; B4/C4 have it at an end
            i, j = next(k for k in bond if bond[k] == 2)
            if len(adj[i]) == 2 and len(adj[j]) == 2:
                return "F4"
        return f"B{n}" if nlong == n - 1 else f"C{n}"
    # simply laced
    if degrees[-1] <= 2:
        return f"A{n}"
    # one branch node
    arms = sorted(_arm_lengths(adj))
    if arms == [1, 1, n - 3]:
        return f"D{n}"
    return f"E{n}"


def _arm_lengths(adj: dict[int, list[int]]) -> list[int]:
    branch = next(i for i, v in adj.items() if len(v) == 3)
    arms = []
    for start in adj[branch]:
        length = 1
        prev, cur = branch, start
        while True:
            nxts = [x for x in adj[cur] if x != prev]
            if not nxts:
                break
            prev, cur = cur, nxts[0]
            length += 1
        arms.append(length)
    return arms


def borel_de_siebenthal_delete(rs: RootSystem, node: int | str) -> DeletionResult:
    """Delete a node of the extended diagram (0 or 'affine' for the added node).

    Simple roots are numbered 1..rank.  The returned flag follows the
    prime-coefficient rule: the subsystem is maximal iff the deleted simple
    root's coefficient in the highest root is 1 or a prime; when that
    coefficient is a prime p the subalgebra acquires a centre over GF(p).
    """
    affine = -np.array(rs.highest_root.euclid, dtype=np.int64)
    if node in (0, "affine"):
        return DeletionResult(rs.name, 1, True, None)
    i = int(node)
    if not 1 <= i <= rs.rank:
        raise ValueError(f"node {node} out of range")
    keep = [affine] + [rs.simple_euclid[j] for j in range(rs.rank) if j != i - 1]
    # split into connected components
    n = len(keep)
    seen: set[int] = set()
    comps: list[list[int]] = []
    for s in range(n):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in range(n):
                if w not in seen and _dot(keep[v], keep[w]) != 0:
                    seen.add(w)
                    stack.append(w)
        comps.append(comp)
    names = sorted(_classify(c, [keep[k] for k in c]) for c in comps)
    coeff = rs.highest_root.coeffs[i - 1]
    maximal = coeff == 1 or _is_prime(coeff)
    centerful = coeff if (_is_prime(coeff) and coeff != 1) else None
    return DeletionResult("+".join(names), coeff, maximal, centerful)
