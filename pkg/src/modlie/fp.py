"""Exact dense linear algebra over prime fields GF(p), p <= 31.

Everything is built on numpy int64 arrays whose entries are residues in
[0, p).  Matrices act on column vectors; subspace bases are stored as row
vectors in reduced row-echelon form, which makes equality of subspaces a
bytewise comparison.
"""

from __future__ import annotations

import numpy as np

SUPPORTED_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31)

_INV_TABLES: dict[int, np.ndarray] = {}


def inverse_table(p: int) -> np.ndarray:
    """Table of multiplicative inverses mod p (index 0 unused)."""
    tab = _INV_TABLES.get(p)
    if tab is None:
        if p not in SUPPORTED_PRIMES:
            raise ValueError(f"unsupported modulus {p}")
        tab = np.array([0] + [pow(i, p - 2, p) for i in range(1, p)], dtype=np.int64)
        _INV_TABLES[p] = tab
    return tab


def asmod(a, p: int) -> np.ndarray:
    """Coerce to an int64 array reduced mod p."""
    return np.asarray(a, dtype=np.int64) % p


def mmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Matrix product mod p.

    Large products are routed through float64 BLAS; with p <= 31 and the
    dimensions in play every inner sum stays far below 2^53, so the rounded
    result is exact.
    """
    if a.ndim == 2 and b.ndim == 2 and a.shape[0] * b.shape[1] >= 4096:
        c = np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
        return c % p
    return (a.astype(np.int64) @ b.astype(np.int64)) % p


def mat_pow(a: np.ndarray, k: int, p: int) -> np.ndarray:
    """a**k mod p by binary powering."""
    n = a.shape[0]
    result = np.eye(n, dtype=np.int64)
    base = asmod(a, p)
    while k:
        if k & 1:
            result = mmul(result, base, p)
        base = mmul(base, base, p)
        k >>= 1
    return result


def rref(m, p: int) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row-echelon form.

    Returns (R, rank, pivot_columns).  R has the same shape as the input,
    with the zero rows collected at the bottom.
    """
    R = asmod(m, p).copy()
    if R.ndim != 2:
        raise ValueError("need a 2d array")
    nrows, ncols = R.shape
    inv = inverse_table(p)
    r = 0
    pivots: list[int] = []
    for c in range(ncols):
        if r == nrows:
            break
        col = R[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        R[r] = (R[r] * inv[R[r, c]]) % p
        rows = np.nonzero(R[:, c])[0]
        rows = rows[rows != r]
        if rows.size:
            R[rows] = (R[rows] - np.outer(R[rows, c], R[r])) % p
        pivots.append(c)
        r += 1
    return R, r, pivots


def rank(m, p: int) -> int:
    return rref(m, p)[1]


def nullspace_matrix(m, p: int) -> np.ndarray:
    """Canonical row basis of {v : m @ v = 0}."""
    M = asmod(m, p)
    ncols = M.shape[1]
    R, r, pivots = rref(M, p)
    free = [c for c in range(ncols) if c not in set(pivots)]
    if not free:
        return np.zeros((0, ncols), dtype=np.int64)
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for row, f in enumerate(free):
        basis[row, f] = 1
        for i, c in enumerate(pivots):
            basis[row, c] = (-R[i, f]) % p
    # Pivot columns of the naive basis need not be leading ones; normalise.
    return rref(basis, p)[0][: len(free)]


def solve(a, b, p: int) -> tuple[np.ndarray, np.ndarray] | None:
    """Solve a @ x = b over GF(p).

    Returns (particular_solution, homogeneous_basis_rows), or None when the
    system is inconsistent.  Every solution is particular + combination of
    the homogeneous rows.
    """
    A = asmod(a, p)
    v = asmod(b, p).reshape(-1)
    if A.shape[0] != v.shape[0]:
        raise ValueError("dimension mismatch between matrix and right-hand side")
    aug = np.concatenate([A, v[:, None]], axis=1)
    R, _, pivots = rref(aug, p)
    n = A.shape[1]
    if n in pivots:
        return None
    x = np.zeros(n, dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = R[i, n]
    return x, nullspace_matrix(A, p)


def inv_matrix(a, p: int) -> np.ndarray:
    """Inverse of a square matrix over GF(p) (raises if singular)."""
    A = asmod(a, p)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("matrix must be square")
    R, r, piv = rref(np.hstack([A, np.eye(n, dtype=np.int64)]), p)
    if piv[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return R[:, n:].copy()


class Echelon:
    """Mutable reduced-row-echelon accumulator used by spinning loops.

    The stored basis is kept fully reduced, so reducing an incoming block
    against it is a single matrix product: block - block[:, pivots] @ basis.
    """

    def __init__(self, ambient_dim: int, p: int):
        self.p = p
        self.n = ambient_dim
        self._basis = np.zeros((0, ambient_dim), dtype=np.int64)
        self.pivot_cols: list[int] = []

    @property
    def dim(self) -> int:
        return self._basis.shape[0]

    @property
    def rows(self) -> np.ndarray:
        return self._basis

    def reduce_rows(self, block: np.ndarray) -> np.ndarray:
        """Reduce a block of row vectors against the current basis (no insert)."""
        B = asmod(block, self.p)
        if not self.pivot_cols or B.shape[0] == 0:
            return B.copy()
        coeff = B[:, self.pivot_cols]
        return (B - mmul(coeff, self._basis, self.p)) % self.p

    def add_rows(self, block: np.ndarray) -> list[np.ndarray]:
        """Insert new vectors; returns the independent residuals actually added."""
        p = self.p
        inv = inverse_table(p)
        B = self.reduce_rows(np.atleast_2d(block))
        mask = B.any(axis=1)
        B = B[mask]
        added: list[np.ndarray] = []
        for i in range(B.shape[0]):
            v = B[i]
            if added:
                # reduce against the rows inserted during this call
                cols = self.pivot_cols[-len(added):]
                cf = v[cols]
                if cf.any():
                    v = (v - cf @ self._basis[-len(added):]) % p
            nz = np.nonzero(v)[0]
            if nz.size == 0:
                continue
            c = int(nz[0])
            v = (v * inv[v[c]]) % p
            if self.dim:
                hit = np.nonzero(self._basis[:, c])[0]
                if hit.size:
                    self._basis[hit] = (self._basis[hit]
                                        - np.outer(self._basis[hit, c], v)) % p
            self._basis = np.vstack([self._basis, v[None, :]])
            self.pivot_cols.append(c)
            added.append(v)
        return added

    def contains(self, vec: np.ndarray) -> bool:
        res = self.reduce_rows(vec.reshape(1, -1))
        return not res.any()

    def to_subspace(self) -> "Subspace":
        if self.dim == 0:
            return Subspace.zero(self.n, self.p)
        order = np.argsort(np.array(self.pivot_cols))
        basis = self._basis[order]
        return Subspace(basis.copy(), self.p, self.n,
                        [self.pivot_cols[i] for i in order])


class Subspace:
    """A subspace of GF(p)^n held as a canonical reduced-echelon row basis.

    Two subspaces are equal iff their canonical bases are identical, which
    lets them be hashed and de-duplicated.
    """

    __slots__ = ("p", "ambient_dim", "basis", "pivots")

    def __init__(self, basis: np.ndarray, p: int, ambient_dim: int, pivots: list[int]):
        self.p = p
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.basis.setflags(write=False)
        self.pivots = pivots

    @classmethod
    def from_vectors(cls, vectors, p: int, ambient_dim: int | None = None) -> "Subspace":
        V = np.atleast_2d(asmod(vectors, p))
        n = ambient_dim if ambient_dim is not None else V.shape[1]
        if V.size == 0:
            return cls.zero(n, p)
        R, r, pivots = rref(V, p)
        return cls(R[:r].copy(), p, n, pivots)

    @classmethod
    def zero(cls, ambient_dim: int, p: int) -> "Subspace":
        return cls(np.zeros((0, ambient_dim), dtype=np.int64), p, ambient_dim, [])

    @classmethod
    def full(cls, ambient_dim: int, p: int) -> "Subspace":
        return cls(np.eye(ambient_dim, dtype=np.int64), p, ambient_dim,
                   list(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace) and self.p == other.p
                and self.ambient_dim == other.ambient_dim
                and self.basis.shape == other.basis.shape
                and bool((self.basis == other.basis).all()))

    def __hash__(self) -> int:
        return hash((self.p, self.ambient_dim, self.basis.tobytes()))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, p={self.p})"

    def _check_compatible(self, other: "Subspace") -> None:
        if self.p != other.p or self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient mismatch")

    def reduce(self, vec) -> np.ndarray:
        """Residual of vec after projecting away this subspace."""
        v = asmod(vec, self.p).copy()
        for c, row in zip(self.pivots, self.basis):
            if v[c]:
                v = (v - v[c] * row) % self.p
        return v

    def contains(self, vec) -> bool:
        return not self.reduce(vec).any()

    def contains_space(self, other: "Subspace") -> bool:
        self._check_compatible(other)
        return all(self.contains(row) for row in other.basis)

    def coords_of(self, vec) -> np.ndarray:
        """Coefficients of vec over the canonical basis (raises if outside)."""
        v = asmod(vec, self.p)
        c = v[self.pivots] if self.dim else np.zeros(0, dtype=np.int64)
        if ((c @ self.basis) % self.p != v).any():
            raise ValueError("vector not in subspace")
        return c

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        if self.dim == 0:
            return other
        if other.dim == 0:
            return self
        return Subspace.from_vectors(
            np.vstack([self.basis, other.basis]), self.p, self.ambient_dim)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus intersection."""
        self._check_compatible(other)
        n = self.ambient_dim
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(n, self.p)
        top = np.hstack([self.basis, self.basis])
        bot = np.hstack([other.basis, np.zeros_like(other.basis)])
        R, r, _ = rref(np.vstack([top, bot]), self.p)
        rows = [R[i, n:] for i in range(r) if not R[i, :n].any()]
        if not rows:
            return Subspace.zero(n, self.p)
        return Subspace.from_vectors(np.array(rows), self.p, n)

    def complement_cols(self) -> list[int]:
        """Coordinate positions forming a complement section (non-pivot columns)."""
        pc = set(self.pivots)
        return [c for c in range(self.ambient_dim) if c not in pc]

    def transversal_map(self) -> np.ndarray:
        """Matrix sending ambient vectors to complement-section coordinates.

        The section for x is (x - projection onto this subspace) read off at
        the non-pivot columns, i.e. canonical coordinates on the quotient.
        """
        comp = self.complement_cols()
        n = self.ambient_dim
        T = np.zeros((len(comp), n), dtype=np.int64)
        for r, c in enumerate(comp):
            T[r, c] = 1
        # reducing v kills its pivot coordinates: on the complement columns the
        # result is v[comp] - sum_i v[piv_i] * basis_i[comp]
        for i, c in enumerate(self.pivots):
            T[:, c] = (-self.basis[i, comp]) % self.p
        return T


def spin(vectors, operators, p: int, ambient_dim: int) -> Subspace:
    """Smallest subspace containing the vectors and invariant under operators.

    Breadth-first: newly found independent vectors are hit by every operator
    until nothing new appears.  `operators` is a list of matrices or a single
    stacked (n_ops, dim, dim) array; the stacked form is applied in one BLAS
    product per round.
    """
    ech = Echelon(ambient_dim, p)
    V = np.asarray(vectors, dtype=np.int64).reshape(-1, ambient_dim) % p
    frontier = ech.add_rows(V) if V.shape[0] else []
    if isinstance(operators, np.ndarray) and operators.ndim == 3:
        stacked = stack_operators(operators, p)
    else:
        stacked = None
        ops = [asmod(op, p) for op in operators]
    while frontier and ech.dim < ambient_dim:
        block = np.array(frontier)
        if stacked is not None:
            frontier = ech.add_rows(apply_stack(stacked, block, p))
            continue
        new: list[np.ndarray] = []
        for op in ops:
            images = mmul(block, op.T, p)
            new.extend(ech.add_rows(images))
            if ech.dim == ambient_dim:
                break
        frontier = new
    if ech.dim == ambient_dim:
        return Subspace.full(ambient_dim, p)
    return ech.to_subspace()


def stack_operators(operators: np.ndarray, p: int) -> np.ndarray:
    """Pack a (n_ops, dim, dim) stack for fast batched row-vector application.

    float32 is exact while dim * (p-1)^2 stays below 2^24; otherwise float64.
    """
    n_ops, dim, _ = operators.shape
    dtype = np.float32 if dim * (p - 1) ** 2 < (1 << 24) else np.float64
    # stacked[:, j*dim + c] must be row c of operator j, so that
    # (v @ stacked)[j*dim + c] = (op_j @ v)[c]
    return np.ascontiguousarray(operators.astype(dtype).reshape(n_ops * dim, dim).T)


def apply_stack(stacked: np.ndarray, block: np.ndarray, p: int) -> np.ndarray:
    """Images of the block's row vectors under every packed operator."""
    dim = stacked.shape[0]
    prod = np.rint((block.astype(stacked.dtype) @ stacked).astype(np.float64)).astype(np.int64) % p
    images = prod.reshape(block.shape[0], -1, dim)
    return images.transpose(1, 0, 2).reshape(-1, dim)
