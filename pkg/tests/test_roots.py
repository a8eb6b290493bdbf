import json

import numpy as np
import pytest

from modlie import roots

CLASSICAL = {"G2": (6, 14), "F4": (24, 52), "E6": (36, 78), "E7": (63, 133),
             "E8": (120, 248)}


@pytest.mark.parametrize("name", list(CLASSICAL))
def test_positive_counts(name):
    rs = roots.build(name)
    n_pos, dim = CLASSICAL[name]
    assert rs.n_positive == n_pos
    assert 2 * n_pos + rs.rank == dim


def test_highest_roots():
    assert roots.build("G2").highest_root.coeffs == (3, 2)
    assert roots.build("F4").highest_root.coeffs == (2, 3, 4, 2)
    assert roots.build("E8").highest_root.coeffs == (2, 3, 4, 6, 5, 4, 3, 2)


def test_unknown_type():
    with pytest.raises(ValueError):
        roots.build("H3")


def test_cartan_integers():
    g2 = roots.build("G2")
    a1, a2 = g2.positive[0], g2.positive[1]
    assert g2.cartan_integer(a1, a1) == 2
    assert g2.cartan_integer(a1, a2) == -1
    assert g2.cartan_integer(a2, a1) == -3
    f4 = roots.build("F4")
    b2, b3 = f4.positive[1], f4.positive[2]
    assert f4.cartan_integer(b2, b3) * f4.cartan_integer(b3, b2) == 2


def test_root_strings():
    g2 = roots.build("G2")
    assert g2.root_string(g2.positive[1], g2.positive[0]) == (0, 3)
    f4 = roots.build("F4")
    assert f4.root_string(f4.positive[2], f4.positive[1]) == (0, 1)
    e8 = roots.build("E8")
    # simply laced: r + q <= 1 for any pair of independent roots
    rng = np.random.default_rng(0)
    for _ in range(40):
        b, a = rng.integers(0, 120, size=2)
        if b == a:
            continue
        r, q = e8.root_string(e8.positive[int(b)], e8.positive[int(a)])
        assert r + q <= 1
    with pytest.raises(ValueError):
        g2.root_string(g2.positive[0], g2.positive[0])


def test_string_bound_when_sum_is_root():
    for name in CLASSICAL:
        rs = roots.build(name)
        rng = np.random.default_rng(1)
        count = 0
        while count < 30:
            i, j = rng.integers(0, rs.n_positive, size=2)
            a, b = rs.positive[int(i)], rs.positive[int(j)]
            s = tuple(x + y for x, y in zip(a.coeffs, b.coeffs))
            if i == j or not rs.is_root(s):
                continue
            r, _ = rs.root_string(b, a)
            assert r in (0, 1, 2)
            count += 1


def test_closure_matches_membership():
    rs = roots.build("F4")
    for a in rs.positive[:8]:
        for b in rs.positive[:8]:
            if a.coeffs == b.coeffs:
                continue
            s = tuple(x + y for x, y in zip(a.coeffs, b.coeffs))
            q = rs.root_string(b, a)[1]
            assert (q > 0) == rs.is_root(s)


def test_f4_gap_order():
    rs = roots.build("F4")
    assert rs.root_from_gap_index(1).coeff_string() == "0001"
    assert rs.root_from_gap_index(21).coeff_string() == "1232"
    assert rs.root_from_gap_index(24).coeff_string() == "2342"
    assert sorted(rs.gap_order) == list(range(24))


def test_e_series_secondary_order_is_identity():
    for name in ("E6", "E7", "E8"):
        rs = roots.build(name)
        assert rs.gap_order == list(range(rs.n_positive))


def test_e8_order_anchors():
    # height-2 block and two known later entries of the conventional order
    rs = roots.build("E8")
    strings = [r.coeff_string() for r in rs.positive]
    assert strings[8:15] == ["10100000", "01010000", "00110000", "00011000",
                             "00001100", "00000110", "00000011"]
    assert strings[15] == "10110000"
    assert strings[28] == "00001111"


def test_coroot_coefficients():
    f4 = roots.build("F4")
    for r in f4.positive:
        co = f4.coroot_coefficients(r)
        assert all(isinstance(c, int) for c in co)
    # the highest (long) root rescales its short-root coordinates
    assert f4.coroot_coefficients(f4.highest_root) == (2, 3, 2, 1)
    e8 = roots.build("E8")
    assert e8.coroot_coefficients(e8.highest_root) == (2, 3, 4, 6, 5, 4, 3, 2)


def test_borel_de_siebenthal_g2():
    g2 = roots.build("G2")
    res1 = roots.borel_de_siebenthal_delete(g2, 1)
    assert res1.subsystem == "A2" and res1.maximal and res1.deleted_coefficient == 3
    res2 = roots.borel_de_siebenthal_delete(g2, 2)
    assert res2.subsystem == "A1+A1" and res2.maximal and res2.deleted_coefficient == 2


def test_borel_de_siebenthal_f4_e8():
    f4 = roots.build("F4")
    res = roots.borel_de_siebenthal_delete(f4, 3)
    assert res.subsystem == "A1+A3" and not res.maximal and res.deleted_coefficient == 4
    e8 = roots.build("E8")
    res = roots.borel_de_siebenthal_delete(e8, 5)
    assert res.subsystem == "A4+A4" and res.maximal and res.centerful_prime == 5
    # deleting alpha_1 (coefficient 2) gives D8
    res = roots.borel_de_siebenthal_delete(e8, 1)
    assert res.subsystem == "D8" and res.maximal


def test_dump_json():
    data = json.loads(roots.build("G2").dump_json())
    assert data["type"] == "G2" and data["rank"] == 2
    assert len(data["positive_roots"]) == 6
    assert data["highest_root"] == [3, 2]
