import numpy as np
import pytest

from modlie import analysis, meataxe, orbits, roots, subalgebra, weisfeiler as wf
from modlie.chevalley import chevalley_algebra


@pytest.fixture(scope="module")
def f4_filtration():
    g = chevalley_algebra(roots.build("F4"), 3)
    rec = orbits.lookup("F4", "A1+~A2")
    tw = analysis.normalizer_tower(g, orbits.representative(g, rec))
    L1 = subalgebra.step_space(g, tw.radical, tw.radical_normalizer)
    f = wf.build_filtration(g, tw.radical_normalizer, L1, seed=0)
    return g, tw, L1, f


def test_filtration_dims(f4_filtration):
    g, tw, L1, f = f4_filtration
    assert f.dims() == {-2: 52, -1: 44, 0: 26, 1: 8}
    assert f.depth == 2 and f.height == 1


def test_filtration_bracket_containment(f4_filtration):
    g, tw, L1, f = f4_filtration
    terms = f.terms
    lo, hi = min(terms), max(terms)
    for i in terms:
        for j in terms:
            k = max(i + j, lo)
            if k > hi:
                continue
            target = terms.get(k)
            for a in terms[i].basis:
                for r in g.bracket_rows(a, terms[j].basis):
                    assert target.contains(r)


def test_positive_term_is_radical(f4_filtration):
    g, tw, L1, f = f4_filtration
    assert f.terms[1] == tw.radical.space


def test_graded_algebra(f4_filtration):
    g, tw, L1, f = f4_filtration
    ga = wf.graded_algebra(f)
    assert ga.component_dims == {-2: 8, -1: 18, 0: 18, 1: 8}
    assert sum(ga.component_dims.values()) == 52
    assert wf.weisfeiler_radical(ga).dim == 0
    report = wf.shape_report(ga, seed=0)
    assert report["simple"] is True
    assert report["radical_dim"] == 0
    # the graded radical avoids the degree -1 component in every computed case
    rad = wf.weisfeiler_radical(ga)
    gm1 = ga.algebra.graded_component(-1)
    assert rad.intersect(gm1).dim == 0


def test_rejects_reducible_step_module():
    g = chevalley_algebra(roots.build("F4"), 3)
    rec = orbits.lookup("F4", "A1+~A2")
    tw = analysis.normalizer_tower(g, orbits.representative(g, rec))
    from modlie.fp import Subspace
    with pytest.raises(ValueError):
        wf.build_filtration(g, tw.radical_normalizer, Subspace.full(g.dim, 3), seed=0)


def test_central_quotient_route():
    g = chevalley_algebra(roots.build("E6"), 3)
    rec = orbits.lookup("E6", "A2^2+A1")
    tw = analysis.normalizer_tower(g, orbits.representative(g, rec))
    L1 = subalgebra.step_space(g, tw.radical, tw.radical_normalizer)
    f = wf.build_filtration(g, tw.radical_normalizer, L1, seed=0)
    assert f.projection is not None
    assert f.dims()[-4] == 77  # the centre is gone
    ga = wf.graded_algebra(f)
    assert sum(ga.component_dims.values()) == 77
    assert ga.component_dims == {-4: 8, -3: 8, -2: 18, -1: 9, 0: 18, 1: 8, 2: 8}
    assert wf.weisfeiler_radical(ga).dim == 0
