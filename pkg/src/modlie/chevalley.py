"""Lie algebras over GF(p) given by sparse structure constants.

`LieAlgebraSC` is the shared container for everything downstream: the
exceptional algebras built here from a Chevalley basis, the Cartan-type and
exotic algebras, and quotient/graded algebras produced by the analysis
layers.  Structure-constant signs for the Chevalley construction are fixed
by the extraspecial-pair algorithm over the ordered positive roots; all
integer constants are computed once per root system and reduced mod p on
demand.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy import sparse

from . import fp
from .fp import Subspace
from .roots import Root, RootSystem


class LieAlgebraSC:
    """A finite-dimensional Lie algebra over GF(p) with labelled basis.

    The bracket is stored sparsely as [b_i, b_j] = sum_k c_ijk b_k for i < j;
    antisymmetry supplies the rest.  Elements are dense residue vectors.
    """

    def __init__(self, p: int, labels: list[str], sc: dict[tuple[int, int], list[tuple[int, int]]],
                 grading: np.ndarray | None = None, meta: dict | None = None):
        self.p = p
        self.labels = list(labels)
        self.dim = len(labels)
        self.sc = sc
        self.grading = None if grading is None else np.asarray(grading, dtype=np.int64)
        self.meta = meta or {}
        self._build_tensors()
        self._center: Subspace | None = None
        self._pmap_cache: dict[bytes, np.ndarray] = {}

    def _build_tensors(self) -> None:
        p, dim = self.p, self.dim
        ii, jj, kk, cc = [], [], [], []
        for (i, j), terms in self.sc.items():
            for k, c in terms:
                c %= p
                if c:
                    ii.append(i); jj.append(j); kk.append(k); cc.append(c)
                    ii.append(j); jj.append(i); kk.append(k); cc.append(p - c)
        ii = np.array(ii, dtype=np.int64); jj = np.array(jj, dtype=np.int64)
        kk = np.array(kk, dtype=np.int64); cc = np.array(cc, dtype=np.int64)
        self.nnz = len(ii)
        # ad(v) = (v @ S).reshape(dim, dim).T  (row j, col k layout before transpose)
        self._S = sparse.csr_matrix((cc, (ii, jj * dim + kk)), shape=(dim, dim * dim))
        # (B @ V).reshape(dim, dim, m)[i, k, :] = coords k of [b_i, v] for batch V
        self._B = sparse.csr_matrix((cc, (ii * dim + kk, jj)), shape=(dim * dim, dim))

    # -- basic operations ----------------------------------------------------

    def zero(self) -> np.ndarray:
        return np.zeros(self.dim, dtype=np.int64)

    def basis_vector(self, i: int) -> np.ndarray:
        v = self.zero()
        v[i] = 1
        return v

    def element(self, coeffs: dict[int, int] | list[tuple[int, int]]) -> np.ndarray:
        v = self.zero()
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        for i, c in items:
            v[i] = (v[i] + c) % self.p
        return v

    def ad(self, x) -> np.ndarray:
        """Adjoint matrix of x acting on column vectors."""
        v = fp.asmod(x, self.p)
        M = (self._S.T.dot(v) % self.p).reshape(self.dim, self.dim)  # (j, k) layout
        return np.ascontiguousarray(M.T)

    def bracket(self, x, y) -> np.ndarray:
        return (self.ad(x) @ fp.asmod(y, self.p)) % self.p

    def bracket_rows(self, x, rows: np.ndarray) -> np.ndarray:
        """[x, r] for every row r of `rows`, returned as rows."""
        A = self.ad(x)
        return fp.mmul(fp.asmod(rows, self.p), A.T, self.p)

    def basis_brackets(self, rows: np.ndarray) -> np.ndarray:
        """Stack of [b_i, r] for all basis b_i and all rows r.

        Returns an array of shape (dim * nrows, dim): row (i * nrows + t) is
        [b_i, rows[t]].
        """
        V = np.ascontiguousarray(fp.asmod(rows, self.p).T)  # (dim, m)
        out = self._B.dot(V) % self.p  # (dim*dim, m)
        m = V.shape[1]
        out = out.reshape(self.dim, self.dim, m)  # [i, k, t]
        return np.ascontiguousarray(out.transpose(0, 2, 1).reshape(self.dim * m, self.dim))

    def adjoint_matrices(self, rows: np.ndarray | None = None) -> list[np.ndarray]:
        """Adjoint matrices for each row of `rows` (default: the whole basis)."""
        if rows is None:
            rows = np.eye(self.dim, dtype=np.int64)
        return [self.ad(r) for r in fp.asmod(rows, self.p)]

    # -- structure -----------------------------------------------------------

    def center(self) -> Subspace:
        if self._center is None:
            Z = Subspace.full(self.dim, self.p)
            for j in range(self.dim):
                if Z.dim == 0:
                    break
                A = self.ad(self.basis_vector(j))
                images = (Z.basis @ A.T) % self.p  # rows [b_j, z]; sign is irrelevant
                coeffs = fp.nullspace_matrix(images.T, self.p)
                Z = Subspace.from_vectors((coeffs @ Z.basis) % self.p, self.p, self.dim) \
                    if coeffs.shape[0] else Subspace.zero(self.dim, self.p)
            self._center = Z
        return self._center

    def ideal_generated(self, seeds: np.ndarray) -> Subspace:
        """Smallest ideal containing the seed row vectors (spinning under ad g)."""
        ech = fp.Echelon(self.dim, self.p)
        frontier = ech.add_rows(np.atleast_2d(fp.asmod(seeds, self.p)))
        while frontier:
            block = np.array(frontier)
            frontier = ech.add_rows(self.basis_brackets(block))
        return ech.to_subspace()

    def is_abelian_space(self, space: Subspace) -> bool:
        B = space.basis
        for i in range(space.dim):
            rows = self.bracket_rows(B[i], B[i:])
            if rows.any():
                return False
        return True

    # -- p-power map ----------------------------------------------------------

    def p_power(self, x) -> np.ndarray:
        """Solve ad(y) = (ad x)^p; the restricted p-th power of x.

        When the centre is nonzero the representative with zero coefficients
        on the centre's pivot coordinates is returned, which makes the map
        deterministic.  Raises ValueError when no solution exists.
        """
        v = fp.asmod(x, self.p)
        key = v.tobytes()
        hit = self._pmap_cache.get(key)
        if hit is not None:
            return hit.copy()
        target = fp.mat_pow(self.ad(v), self.p, self.p)
        y = self._solve_ad(target)
        if y is None:
            raise ValueError("(ad x)^p is not inner: algebra not restrictable along x")
        y = self.center().reduce(y)
        self._pmap_cache[key] = y.copy()
        return y

    def _solve_ad(self, target: np.ndarray) -> np.ndarray | None:
        """Find y with ad(y) == target, if possible."""
        p, dim = self.p, self.dim
        need = dim - self.center().dim
        rows: list[np.ndarray] = []
        rhs: list[int] = []
        got = 0
        ech = fp.Echelon(dim, p)
        for j in range(dim):
            # column j of ad(y): ad(y)[:, j] = -[b_j, y] = -ad(b_j) @ y
            Mj = (-self.ad(self.basis_vector(j))) % p
            added = ech.add_rows(Mj)
            if added:
                rows.append(Mj)
                rhs.append(j)
                got = ech.dim
                if got >= need:
                    break
        A = np.vstack(rows)
        b = np.concatenate([target[:, j] for j in rhs])
        sol = fp.solve(A, b, p)
        if sol is None:
            return None
        y = sol[0]
        if not np.array_equal(self.ad(y), target % p):
            return None
        return y

    def is_restrictable(self) -> bool:
        try:
            for i in range(self.dim):
                self.p_power(self.basis_vector(i))
        except ValueError:
            return False
        return True

    def p_closure(self, space: Subspace) -> Subspace:
        """Smallest subspace containing `space` closed under bracket and [p]."""
        from .subalgebra import generate  # local import to avoid a cycle
        cur = generate(self, space.basis).space
        while True:
            powers = [self.p_power(row) for row in cur.basis]
            nxt = generate(self, np.vstack([cur.basis] + [p_[None, :] for p_ in powers])).space
            if nxt.dim == cur.dim:
                return nxt
            cur = nxt

    # -- gradings -------------------------------------------------------------

    def graded_component(self, k: int) -> Subspace:
        if self.grading is None:
            raise ValueError("algebra carries no grading")
        idx = np.nonzero(self.grading == k)[0]
        rows = np.zeros((len(idx), self.dim), dtype=np.int64)
        rows[np.arange(len(idx)), idx] = 1
        return Subspace.from_vectors(rows, self.p, self.dim) if len(idx) \
            else Subspace.zero(self.dim, self.p)

    def graded_dims(self) -> dict[int, int]:
        if self.grading is None:
            raise ValueError("algebra carries no grading")
        out: dict[int, int] = {}
        for g in self.grading:
            out[int(g)] = out.get(int(g), 0) + 1
        return dict(sorted(out.items()))

    # -- serialisation ----------------------------------------------------------

    def dump(self) -> str:
        entries = sorted((i, j, k, int(c)) for (i, j), terms in self.sc.items()
                         for k, c in terms if c % self.p)
        data = {
            "p": self.p,
            "dim": self.dim,
            "labels": self.labels,
            "sc": [list(e) for e in entries],
            "center_basis": [list(map(int, row)) for row in self.center().basis],
        }
        if self.meta.get("family"):
            data["family"] = self.meta["family"]
            data["parameters"] = self.meta.get("parameters", {})
        return json.dumps(data, sort_keys=True)

    def spot_check_jacobi(self, trials: int, seed: int = 0) -> None:
        rng = np.random.default_rng(seed)
        for _ in range(trials):
            x, y, z = (rng.integers(0, self.p, size=self.dim) for _ in range(3))
            s = (self.bracket(x, self.bracket(y, z))
                 + self.bracket(y, self.bracket(z, x))
                 + self.bracket(z, self.bracket(x, y))) % self.p
            if s.any():
                raise AssertionError("Jacobi identity violated")


# -- Chevalley construction ----------------------------------------------------


def _special_constants(rs: RootSystem, flips: frozenset[tuple[int, int]]) -> dict[tuple[int, int], int]:
    """Integer constants N[a,b] for all ordered pairs of positive roots with
    a + b a root, via the extraspecial-pair recursion.

    `flips` is a set of extraspecial pairs (by positive-root index) whose
    arbitrary sign is flipped; used to test convention independence.
    """
    pos = rs.positive
    idx = rs._index
    lsq = [rs.length_sq(r) for r in pos]
    N: dict[tuple[int, int], int] = {}

    def set_pair(a: int, b: int, val: int) -> None:
        N[(a, b)] = val
        N[(b, a)] = -val

    coeffs = [np.array(r.coeffs) for r in pos]
    # group positive non-simple roots by height
    order = sorted(range(len(pos)), key=lambda i: pos[i].height)
    for g in order:
        gamma = pos[g]
        if gamma.height == 1:
            continue
        pairs = []
        for a in range(len(pos)):
            rest = tuple(int(x) for x in (coeffs[g] - coeffs[a]))
            if min(rest) < 0:
                continue
            b = idx.get(rest)
            if b is not None and a < b:
                pairs.append((a, b))
        pairs.sort()
        eps, eta = pairs[0]
        r, _ = rs.root_string(pos[eta], pos[eps])
        val = r + 1
        if (eps, eta) in flips:
            val = -val
        set_pair(eps, eta, val)
        for a, b in pairs[1:]:
            # Jacobi on (e_{-eps}, e_a, e_b), rewritten over positive pairs:
            # N(a,b) * (|eta|^2/|gamma|^2) N(eps,eta)
            #   = (|b-eps|^2/|b|^2) N(eps,b-eps) N(a,b-eps)
            #   - (|a-eps|^2/|a|^2) N(eps,a-eps) N(b,a-eps)
            rhs = Fraction(0)
            t = tuple(int(x) for x in (coeffs[b] - coeffs[eps]))
            if min(t) >= 0 and t in idx:
                d = idx[t]
                rhs += Fraction(lsq[d], lsq[b]) * N[(eps, d)] * N[(a, d)]
            t = tuple(int(x) for x in (coeffs[a] - coeffs[eps]))
            if min(t) >= 0 and t in idx:
                d = idx[t]
                rhs -= Fraction(lsq[d], lsq[a]) * N[(eps, d)] * N[(b, d)]
            val = rhs / Fraction(lsq[eta], lsq[g]) / N[(eps, eta)]
            if val.denominator != 1:
                raise AssertionError("non-integral structure constant")
            rr, _ = rs.root_string(pos[b], pos[a])
            if abs(int(val)) != rr + 1:
                raise AssertionError("structure constant fails |N| = r+1")
            set_pair(a, b, int(val))
    return N


_Z_TABLES: dict[tuple[str, frozenset], dict] = {}


def _integer_table(rs: RootSystem, flips: frozenset[tuple[int, int]] = frozenset()) -> dict:
    """Integer structure constants of the Chevalley basis, cached per system."""
    key = (rs.name, flips)
    hit = _Z_TABLES.get(key)
    if hit is not None:
        return hit
    n = rs.n_positive
    l = rs.rank
    pos = rs.positive
    idx = rs._index
    lsq = [rs.length_sq(r) for r in pos]
    N = _special_constants(rs, flips)

    def n_signed(a_sign: int, a: int, b_sign: int, b: int) -> tuple[int, int, int] | None:
        """[e_{a_sign*a}, e_{b_sign*b}] = c * e_{s*d}: returns (s, d, c) or None."""
        s = a_sign * np.array(pos[a].coeffs) + b_sign * np.array(pos[b].coeffs)
        t = tuple(int(x) for x in s)
        if not any(t):
            return None
        if min(t) >= 0 and t in idx:
            d, sign_d = idx[t], 1
        else:
            tn = tuple(-x for x in t)
            if min(tn) >= 0 and tn in idx:
                d, sign_d = idx[tn], -1
            else:
                return None
        if a_sign == 1 and b_sign == 1:
            c = N[(a, b)]
        elif a_sign == -1 and b_sign == -1:
            c = -N[(a, b)]
        elif a_sign == 1 and b_sign == -1:
            # [e_a, e_{-b}] with a - b = sign_d * d
            if sign_d == 1:
                # x=a, y=-b, z=-(a-b): N(a,-b) = -(|d|^2/|a|^2) N(b,d),  b + d = a
                val = Fraction(-lsq[d], lsq[a]) * N[(b, d)]
            else:
                # a - b = -d:  N(a,-b) = -(|d|^2/|b|^2) N(a,d),  a + d = b
                val = Fraction(-lsq[d], lsq[b]) * N[(a, d)]
            if val.denominator != 1:
                raise AssertionError("non-integral mixed constant")
            c = int(val)
        else:
            inner = n_signed(1, b, -1, a)
            if inner is None:
                return None
            _, _, c0 = inner
            c = -c0
        return (sign_d, d, c)

    # basis layout: e_1..e_n, f_1..f_n, h_1..h_l
    sc_z: dict[tuple[int, int], list[tuple[int, int]]] = {}

    def put(i: int, j: int, terms: list[tuple[int, int]]) -> None:
        if i == j or not terms:
            return
        if i > j:
            i, j = j, i
            terms = [(k, -c) for k, c in terms]
        sc_z[(i, j)] = sc_z.get((i, j), []) + terms

    for a in range(n):
        for b in range(a + 1, n):
            out = n_signed(1, a, 1, b)
            if out:
                s, d, c = out
                put(a, b, [(d if s == 1 else n + d, c)])
            out = n_signed(-1, a, -1, b)
            if out:
                s, d, c = out
                put(n + a, n + b, [(d if s == 1 else n + d, c)])
        for b in range(n):
            if a == b:
                continue
            out = n_signed(1, a, -1, b)
            if out:
                s, d, c = out
                put(a, n + b, [(d if s == 1 else n + d, c)])
    for a in range(n):
        # [e_a, f_a] = h_a, an integral combination of the simple coroots
        co = rs.coroot_coefficients(pos[a])
        put(a, n + a, [(2 * n + i, co[i]) for i in range(l) if co[i]])
    for i in range(l):
        alpha_i = pos[i]  # simple roots are the first l positive roots
        for b in range(n):
            c = rs.cartan_integer(pos[b], alpha_i)
            if c:
                put(2 * n + i, b, [(b, c)])
                put(2 * n + i, n + b, [(n + b, -c)])
    _Z_TABLES[key] = sc_z
    return sc_z


def chevalley_algebra(rs: RootSystem, p: int, flips: frozenset[tuple[int, int]] = frozenset()) -> LieAlgebraSC:
    """The Chevalley-basis Lie algebra of `rs` over GF(p)."""
    if p not in fp.SUPPORTED_PRIMES:
        raise ValueError(f"p = {p} is not a supported prime")
    n, l = rs.n_positive, rs.rank
    labels = ([f"e_{r.coeff_string()}" for r in rs.positive]
              + [f"f_{r.coeff_string()}" for r in rs.positive]
              + [f"h_{i + 1}" for i in range(l)])
    sc_z = _integer_table(rs, flips)
    sc = {ij: [(k, c % p) for k, c in terms if c % p] for ij, terms in sc_z.items()}
    sc = {ij: terms for ij, terms in sc.items() if terms}
    meta = {"family": "chevalley", "parameters": {"type": rs.name, "p": p},
            "root_system": rs}
    return LieAlgebraSC(p, labels, sc, meta=meta)


def root_vector(g: LieAlgebraSC, sign: int, coeff_string: str) -> np.ndarray:
    """Basis vector e_/f_ for a positive root given by its coefficient string."""
    rs: RootSystem = g.meta["root_system"]
    i = rs.index_of(rs.root_from_string(coeff_string).coeffs)
    return g.basis_vector(i if sign > 0 else rs.n_positive + i)


def element_from_roots(g: LieAlgebraSC, terms: list[tuple[int, int, str]]) -> np.ndarray:
    """Sum of c * e_{root} (sign > 0) or c * f_{root} (sign < 0) terms.

    Each term is (coefficient, sign, coefficient-string).
    """
    v = g.zero()
    for c, sign, s in terms:
        v = (v + c * root_vector(g, sign, s)) % g.p
    return v


@dataclass
class CocharacterGrading:
    """Integer grading of a Chevalley algebra induced by a weighted diagram."""

    algebra: LieAlgebraSC
    diagram: tuple[int, ...]
    weights: np.ndarray  # per basis index

    def weight_of(self, i: int) -> int:
        return int(self.weights[i])

    def component(self, k: int) -> Subspace:
        idx = np.nonzero(self.weights == k)[0]
        rows = np.zeros((len(idx), self.algebra.dim), dtype=np.int64)
        rows[np.arange(len(idx)), idx] = 1
        return Subspace.from_vectors(rows, self.algebra.p, self.algebra.dim) if len(idx) \
            else Subspace.zero(self.algebra.dim, self.algebra.p)

    def component_of_space(self, space: Subspace, k: int) -> Subspace:
        return space.intersect(self.component(k))

    def toral_element(self) -> np.ndarray:
        """h with [h, e_beta] = weight(beta) e_beta, when the Cartan matrix is
        invertible mod p (solve (C^T) c = diagram for the h_i coefficients)."""
        rs: RootSystem = self.algebra.meta["root_system"]
        sol = fp.solve(rs.cartan.T % self.algebra.p,
                       np.array(self.diagram) % self.algebra.p, self.algebra.p)
        if sol is None:
            raise ValueError("diagram not realisable as a toral element mod p")
        c = sol[0]
        n = rs.n_positive
        v = self.algebra.zero()
        for i, ci in enumerate(c):
            v[2 * n + i] = ci % self.algebra.p
        return v


def grading_from_diagram(g: LieAlgebraSC, weights: tuple[int, ...]) -> CocharacterGrading:
    """Grading with weight(e_beta) = sum n_i a_i for beta = sum n_i alpha_i."""
    rs: RootSystem = g.meta.get("root_system")
    if rs is None:
        raise ValueError("not a Chevalley algebra")
    if len(weights) != rs.rank:
        raise ValueError("one weight per simple root required")
    n = rs.n_positive
    w = np.zeros(g.dim, dtype=np.int64)
    for i, r in enumerate(rs.positive):
        wt = int(sum(c * a for c, a in zip(r.coeffs, weights)))
        w[i] = wt
        w[n + i] = -wt
    return CocharacterGrading(g, tuple(weights), w)


def is_d_balanced(g: LieAlgebraSC, h, d: int) -> bool:
    """True iff all nonzero ad-h eigenspaces share one dimension divisible by d.

    Requires h toral, i.e. (ad h)^p = ad h.
    """
    p = g.p
    A = g.ad(h)
    if not np.array_equal(fp.mat_pow(A, p, p), A):
        raise ValueError("element is not toral")
    dims = []
    for lam in range(1, p):
        M = (A - lam * np.eye(g.dim, dtype=np.int64)) % p
        dims.append(g.dim - fp.rank(M, p))
    nz = [dmn for dmn in dims if dmn > 0]
    if not nz:
        return True
    return len(set(dims)) == 1 and dims[0] % d == 0
