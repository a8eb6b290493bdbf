import numpy as np
import pytest

from modlie import analysis, fp, meataxe, orbits, roots, subalgebra
from modlie.chevalley import chevalley_algebra


@pytest.fixture(scope="module")
def f4_case():
    """The F4/GF(3) tower: returns (g, w, radical, step space)."""
    g = chevalley_algebra(roots.build("F4"), 3)
    rec = orbits.lookup("F4", "A1+~A2")
    tw = analysis.normalizer_tower(g, orbits.representative(g, rec))
    L1 = subalgebra.step_space(g, tw.radical, tw.radical_normalizer)
    return g, tw.radical_normalizer, tw.radical, L1


def test_one_dimensional_module_irreducible():
    m = meataxe.GModule(5, 1, [np.array([[2]])])
    assert meataxe.is_irreducible(m)
    assert meataxe.is_indecomposable(m)


def test_adjoint_module_of_sl2():
    g2 = chevalley_algebra(roots.build("G2"), 5)
    from modlie.chevalley import root_vector
    e, f = root_vector(g2, 1, "01"), root_vector(g2, -1, "01")
    s = subalgebra.generate(g2, np.vstack([e[None, :], f[None, :]]))
    sl2, _ = subalgebra.restrict_to_subspace(g2, s.space)
    mod = meataxe.GModule(5, 3, sl2.adjoint_matrices())
    assert meataxe.is_irreducible(mod, seed=0)
    assert meataxe.is_absolutely_irreducible(mod, seed=0)


def test_e7_char2_adjoint():
    g = chevalley_algebra(roots.build("E7"), 2)
    mod = meataxe.GModule(2, 133, g.adjoint_matrices())
    assert not meataxe.is_irreducible(mod, seed=1)
    quot = mod.quotient(g.center())
    assert meataxe.is_irreducible(quot, seed=1)
    assert meataxe.composition_factor_dims(mod, seed=1) == [1, 132]


def test_direct_sum_decomposable():
    # two non-isomorphic irreducibles glued block-diagonally
    a = np.array([[1, 0, 0], [0, 0, 1], [0, 2, 0]], dtype=np.int64)
    m = meataxe.GModule(3, 3, [a])
    assert not meataxe.is_indecomposable(m, seed=0)
    assert not meataxe.is_irreducible(m, seed=0)


def test_submodule_lattice_f4(f4_case):
    g, w, rad, L1 = f4_case
    mod = meataxe.action_module(w, ("subspace", L1))
    lat = meataxe.submodule_bases(mod, seed=0)
    assert sorted(s.dim for s in lat) == [0, 8, 26, 44]
    # lattice closure under sum and intersection
    for a in lat:
        for b in lat:
            assert a.sum(b) in lat
            assert a.intersect(b) in lat
    # every member is action-invariant
    for s in lat:
        for i in range(mod.n_actions):
            img = (s.basis @ mod.action(i).T) % 3
            assert all(s.contains(r) for r in img)


def test_seed_stability(f4_case):
    g, w, rad, L1 = f4_case
    mod = meataxe.action_module(w, ("quotient-space", L1, w.space))
    verdicts = {meataxe.is_irreducible(mod, seed=s) for s in range(5)}
    assert verdicts == {True}


def test_composition_dims_sum(f4_case):
    g, w, rad, L1 = f4_case
    mod = meataxe.action_module(w, ("subspace", L1))
    dims = meataxe.composition_factor_dims(mod, seed=0)
    assert sum(dims) == 44
    assert dims == [8, 18, 18]


def test_absolutely_irreducible_quotient():
    g = chevalley_algebra(roots.build("E8"), 5)
    rec = orbits.lookup("E8", "A4+A3")
    tw = analysis.normalizer_tower(g, orbits.representative(g, rec))
    q, _ = subalgebra.quotient(tw.radical_normalizer, tw.radical)
    mod = meataxe.GModule(5, q.dim, q.adjoint_matrices())
    assert meataxe.is_absolutely_irreducible(mod, seed=0)


def test_hom_space_identity_and_socle():
    g2 = chevalley_algebra(roots.build("G2"), 5)
    mod = meataxe.GModule(5, 14, g2.adjoint_matrices())
    E = meataxe.endomorphism_ring(mod, seed=0)
    assert len(E) == 1
    soc = meataxe.socle(mod)
    assert soc.dim == 14  # simple algebra: the adjoint module is irreducible


def test_polynomial_factorization():
    rng = np.random.default_rng(0)
    for p in (2, 3, 5):
        # x^p - x factors into all p linear polynomials
        f = np.zeros(p + 1, dtype=np.int64)
        f[1] = p - 1
        f[p] = 1
        facs = meataxe.irreducible_factors(f, p, rng)
        assert len(facs) == p
        assert all(fc.size == 2 for fc in facs)
    # irreducible quadratic over GF(3): x^2 + 1
    f = np.array([1, 0, 1], dtype=np.int64)
    facs = meataxe.irreducible_factors(f, 3, rng)
    assert len(facs) == 1 and facs[0].size == 3


def test_minpoly_on_vector():
    w = np.array([[0, 1], [0, 0]], dtype=np.int64)
    m = meataxe.minpoly_on_vector(w, np.array([0, 1]), 5)
    assert list(m) == [0, 0, 1]  # x^2
