import numpy as np
import pytest

from modlie import cartan, fp, meataxe, roots, subalgebra
from modlie.chevalley import chevalley_algebra, root_vector


def test_divided_powers_product():
    O = cartan.dpa(2, (1, 1), 3)
    a, b = (1, 0), (1, 1)
    s, c = O.product_coeff(a, b)
    assert s == (2, 1) and c == 2  # binom(2,1) = 2
    assert O.product_coeff((2, 0), (1, 0)) is None  # truncation overflow
    assert O.dim == 9


def test_witt_dim_and_grading():
    w = cartan.witt_algebra(1, (2,), 5)
    assert w.dim == 25
    gd = w.graded_dims()
    assert min(gd) == -1 and max(gd) == 23 and gd[-1] == 1
    w2 = cartan.witt_algebra(2, 1, 3)
    assert w2.dim == 18
    assert w2.graded_dims()[-1] == 2
    assert w2.graded_dims()[0] == 4  # gl(2)
    w2.spot_check_jacobi(100, seed=0)
    with pytest.raises(ValueError):
        cartan.witt_algebra(1, 1, 2)


def test_special_dims():
    s = cartan.special_algebra(3, 1, 3)
    assert s.dim == 2 * (27 - 1) == 52
    assert s.graded_dims()[-1] == 3
    assert s.graded_dims()[0] == 8  # sl(3)
    with pytest.raises(ValueError):
        cartan.special_algebra(2, 1, 5)


def test_hamiltonian_dims():
    h = cartan.hamiltonian_algebra(4, 1, 3)
    assert h.dim == 81 - 2
    assert min(h.graded_dims()) == -1 and h.graded_dims()[-1] == 4
    full = cartan.hamiltonian_algebra(4, 1, 3, derived=0)
    assert full.dim == 84
    h2 = cartan.hamiltonian_algebra(2, 1, 3, derived=2)
    assert h2.dim == 7
    assert cartan.hamiltonian_algebra(2, 1, 3, derived=0).dim == 10
    with pytest.raises(ValueError):
        cartan.hamiltonian_algebra(3, 1, 3)


def test_contact_dims_and_depth():
    k = cartan.contact_algebra(3, 1, 5)
    assert k.dim == 125
    gd = k.graded_dims()
    assert min(gd) == -2 and gd[-2] == 1 and gd[-1] == 2
    k3 = cartan.contact_algebra(3, 1, 3)  # 2m+4 = 6 = 0 mod 3: drop one
    assert k3.dim == 26
    k3.spot_check_jacobi(60, seed=1)


def test_cs_ch():
    # m = 2 keeps the degree derivation outside S (its divergence is m mod p)
    cs = cartan.cartan_algebra("CS", 2, 1, 3)
    s_full = cartan.special_algebra(2, 1, 3, derived=0)
    assert cs.dim == s_full.dim + 1
    ch = cartan.cartan_algebra("CH", 2, 1, 3)
    assert ch.dim == 11  # H(2;1) full is 10-dimensional
    ch.spot_check_jacobi(60, seed=2)


def test_divergence_and_dh():
    w = cartan._witt(2, (1, 1), 3)
    for i in range(2):
        d = w.vector([(1, (0, 0), i)])
        assert not w.divergence(d).any()
    rng = np.random.default_rng(3)
    for _ in range(10):
        mono = tuple(rng.integers(0, 3, size=2))
        v = w.d_ij(mono, 0, 1)
        assert not w.divergence(v).any()
    wh = cartan._witt(2, (1, 1), 5)
    for i in range(2):
        unit = tuple(1 if t == wh.conj(i) else 0 for t in range(2))
        img = wh.d_h(unit)
        expect = wh.vector([(wh.sigma(wh.conj(i)), (0, 0), i)])
        assert np.array_equal(img, expect) or np.array_equal(img, (-expect) % 5)


def test_ermolaev():
    er = cartan.exotic_algebra("Er", (1, 1), 3)
    assert er.dim == 26
    gd = er.graded_dims()
    assert gd[-1] == 3 and gd[0] == 6
    with pytest.raises(ValueError):
        cartan.exotic_algebra("Er", (1, 1), 5)
    full = cartan.ermolaev_algebra((1, 1), 3, derived=0)
    assert full.dim == 27


def test_melikyan():
    m = cartan.exotic_algebra("M", (1, 1), 5)
    assert m.dim == 125
    assert m.is_restrictable()
    assert min(m.graded_dims()) == -3
    with pytest.raises(ValueError):
        cartan.exotic_algebra("M", (1, 1), 7)


def test_skryabin_2():
    s2 = cartan.exotic_algebra("Skr2", (1, 1, 1), 3)
    assert s2.dim == 2 * 3 ** 4 == 162
    gd = s2.graded_dims()
    assert gd[-2] == 3 and gd[-1] == 3 and min(gd) == -2


def test_skryabin_3():
    s3 = cartan.exotic_algebra("Skr3", (1, 1, 1), 3)
    assert s3.dim == 3 ** 4 - 4 == 77


def test_tensor_envelope():
    g2 = chevalley_algebra(roots.build("G2"), 3)
    e = root_vector(g2, 1, "01")
    f = root_vector(g2, -1, "01")
    sl2_space = subalgebra.generate(g2, np.vstack([e[None, :], f[None, :]])).space
    sl2, _ = subalgebra.restrict_to_subspace(g2, sl2_space)
    assert sl2.dim == 3
    tp, env = cartan.tensor_envelope(sl2, 2, (1, 1))
    assert tp.dim == 3 * 9 and env == 3 * 9 + 18
    tp.spot_check_jacobi(60, seed=4)
    # psl(3) from the short-root ideal of G2 at p=3
    seeds = np.array([root_vector(g2, 1, s) for s in ("10", "11", "21")])
    psl3, _ = subalgebra.restrict_to_subspace(g2, g2.ideal_generated(seeds))
    assert psl3.dim == 7
    # in characteristic three the derivations of psl(3) form a G2
    assert cartan.derivation_algebra_dim(psl3) == 14
    tp2, env2 = cartan.tensor_envelope(psl3, 2, (1, 1))
    assert tp2.dim == 63 and env2 == 14 * 9 + 18
    same, env0 = cartan.tensor_envelope(sl2, 0, ())
    assert same.dim == 3 and env0 == 3


def test_script_h6():
    h6 = cartan.hamiltonian_special_subalgebra(6)
    assert h6.dim == 26
    assert h6.graded_dims() == {-1: 6, 0: 14, 1: 6}
    mid = subalgebra.Subalgebra(h6, h6.graded_component(0), closed=True)
    sub, _ = subalgebra.restrict_to_subspace(h6, mid.space)
    assert meataxe.is_irreducible(meataxe.GModule(2, 14, sub.adjoint_matrices()), seed=1)


def test_witt_p_envelope():
    amb, wsub = cartan.witt_p_envelope_ambient(2, 5)
    assert amb.dim == 50 and wsub.dim == 25
    amb.spot_check_jacobi(60, seed=5)
    assert amb.is_restrictable()
    assert amb.p_closure(wsub).dim == 26
    assert not cartan.witt_algebra(1, 2, 5).is_restrictable()
    assert cartan.witt_algebra(1, 1, 5).is_restrictable()


def test_dimension_formula_instances():
    # every family formula at one modest instance per family
    assert cartan.witt_algebra(2, (2, 1), 3).dim == 2 * 27
    assert cartan.special_algebra(3, (2, 1, 1), 3).dim == 2 * (3 ** 4 - 1)
    assert cartan.hamiltonian_algebra(2, (2, 1), 5, derived=2).dim == 5 ** 3 - 2
    assert cartan.contact_algebra(5, 1, 3, derived=1).dim == 3 ** 5
