import itertools

import numpy as np
import pytest

from modlie import fp


def test_rref_identity():
    eye = np.eye(2, dtype=np.int64)
    R, rank, pivots = fp.rref(eye, 5)
    assert np.array_equal(R, eye) and rank == 2 and pivots == [0, 1]


def test_rref_hand_example():
    R, rank, _ = fp.rref([[1, 2], [2, 4]], 5)
    assert np.array_equal(R, [[1, 2], [0, 0]])
    assert rank == 1


def test_rref_zero():
    R, rank, _ = fp.rref(np.zeros((3, 3), dtype=np.int64), 7)
    assert not R.any() and rank == 0


def test_rref_idempotent():
    rng = np.random.default_rng(0)
    for p in fp.SUPPORTED_PRIMES:
        m = rng.integers(0, p, size=(7, 5))
        R1 = fp.rref(m, p)[0]
        R2 = fp.rref(R1, p)[0]
        assert np.array_equal(R1, R2)


def test_rank_nullity():
    rng = np.random.default_rng(1)
    for p in (2, 3, 5, 31):
        for _ in range(5):
            m = rng.integers(0, p, size=(6, 9))
            assert fp.rank(m, p) + fp.nullspace_matrix(m, p).shape[0] == 9


def test_nullspace_edges():
    assert fp.nullspace_matrix(np.eye(3, dtype=np.int64), 5).shape == (0, 3)
    ns = fp.nullspace_matrix(np.zeros((4, 4), dtype=np.int64), 5)
    assert np.array_equal(ns, np.eye(4, dtype=np.int64))


def test_solve_identity_and_inconsistent():
    x, hom = fp.solve(np.eye(3, dtype=np.int64), [1, 2, 3], 5)
    assert np.array_equal(x, [1, 2, 3]) and hom.shape[0] == 0
    assert fp.solve(np.array([[1, 0], [1, 0]]), [1, 2], 5) is None
    with pytest.raises(ValueError):
        fp.solve(np.eye(2, dtype=np.int64), [1, 2, 3], 5)


def test_solve_affine_structure():
    rng = np.random.default_rng(2)
    a = rng.integers(0, 5, size=(4, 6))
    x0 = rng.integers(0, 5, size=6)
    b = (a @ x0) % 5
    x, hom = fp.solve(a, b, 5)
    assert np.array_equal((a @ x) % 5, b)
    for row in hom:
        assert not ((a @ row) % 5).any()
        assert np.array_equal((a @ ((x + row) % 5)) % 5, b)


def test_subspace_canonical_equality():
    # different spanning sets of the same plane compare equal bit-for-bit
    u = fp.Subspace.from_vectors([[1, 2, 3], [0, 1, 4]], 5)
    w = fp.Subspace.from_vectors([[1, 3, 2], [2, 4, 1], [1, 2, 3]], 5)
    assert u == w and hash(u) == hash(w)


def test_subspace_sum_intersect_dims():
    # modular law dims checked exhaustively over all pairs of 2-dim subspaces
    # of GF(2)^4 spanned by standard vectors
    vecs = [np.array(v, dtype=np.int64) for v in itertools.product((0, 1), repeat=4)]
    planes = []
    for a, b in itertools.combinations(vecs, 2):
        s = fp.Subspace.from_vectors(np.vstack([a, b]), 2)
        if s.dim == 2:
            planes.append(s)
    seen = set(planes)
    for u in list(seen)[:12]:
        for w in list(seen)[:12]:
            assert u.sum(w).dim + u.intersect(w).dim == u.dim + w.dim


def test_subspace_trivial_ops():
    u = fp.Subspace.from_vectors([[1, 0, 0], [0, 1, 0]], 3)
    zero = fp.Subspace.zero(3, 3)
    full = fp.Subspace.full(3, 3)
    assert u.sum(zero) == u
    assert u.intersect(full) == u
    assert full.contains_space(u)
    assert u.contains([1, 2, 0]) and not u.contains([0, 0, 1])


def test_subspace_coords_and_transversal():
    u = fp.Subspace.from_vectors([[1, 2, 0], [0, 0, 1]], 5)
    v = (3 * u.basis[0] + 4 * u.basis[1]) % 5
    assert np.array_equal(u.coords_of(v), [3, 4])
    T = u.transversal_map()
    assert not (T @ u.basis.T % 5).any()
    assert T.shape == (1, 3)


def test_random_sum_intersect():
    rng = np.random.default_rng(3)
    for _ in range(10):
        u = fp.Subspace.from_vectors(rng.integers(0, 5, size=(3, 6)), 5)
        w = fp.Subspace.from_vectors(rng.integers(0, 5, size=(3, 6)), 5)
        assert u.sum(w).dim + u.intersect(w).dim == u.dim + w.dim
        assert u.sum(w).contains_space(u)
        for row in u.intersect(w).basis:
            assert u.contains(row) and w.contains(row)


def test_spin_trivialities():
    v = np.array([1, 2, 0, 0], dtype=np.int64)
    s = fp.spin(v[None, :], [np.eye(4, dtype=np.int64)], 5, 4)
    assert s.dim == 1 and s.contains(v)
    s0 = fp.spin(np.zeros((0, 4), dtype=np.int64), [np.eye(4, dtype=np.int64)], 5, 4)
    assert s0.dim == 0


def test_spin_monotone_and_invariant():
    rng = np.random.default_rng(4)
    ops = [rng.integers(0, 3, size=(5, 5)) for _ in range(2)]
    v = rng.integers(0, 3, size=(1, 5))
    w = rng.integers(0, 3, size=(1, 5))
    s_v = fp.spin(v, ops, 3, 5)
    s_vw = fp.spin(np.vstack([v, w]), ops, 3, 5)
    assert s_vw.contains_space(s_v)
    for op in ops:
        for row in s_vw.basis:
            assert s_vw.contains((op @ row) % 3)


def test_mat_pow_and_inv():
    rng = np.random.default_rng(5)
    a = rng.integers(0, 7, size=(4, 4))
    assert np.array_equal(fp.mat_pow(a, 3, 7), fp.mmul(fp.mmul(a, a, 7), a, 7))
    m = np.array([[1, 2], [3, 4]], dtype=np.int64)
    inv = fp.inv_matrix(m, 5)
    assert np.array_equal(fp.mmul(m, inv, 5), np.eye(2, dtype=np.int64))
    with pytest.raises(ValueError):
        fp.inv_matrix(np.array([[1, 2], [2, 4]]), 5)


def test_echelon_matches_rref():
    rng = np.random.default_rng(6)
    m = rng.integers(0, 5, size=(8, 6))
    ech = fp.Echelon(6, 5)
    ech.add_rows(m)
    R, r, piv = fp.rref(m, 5)
    assert ech.to_subspace() == fp.Subspace.from_vectors(m, 5)
