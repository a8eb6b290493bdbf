import hashlib

import numpy as np
import pytest

from modlie import fp, orbits, roots, tasks
from modlie.chevalley import chevalley_algebra

# the catalog is reference data; changes must be deliberate
CATALOG_SHA256 = "eaf2375f47f93a28aeaa8727a55b01feef5ad437364365e32c6f797ef628441d"


def test_catalog_pin():
    assert orbits.catalog_sha256() == CATALOG_SHA256


def test_lookup_and_aliases():
    rec = orbits.lookup("F4", "~A2+A1")
    assert rec.label == "A1+~A2"
    rec2 = orbits.lookup("E8", "A3^2")
    assert rec2.label == "2A3"
    with pytest.raises(KeyError):
        orbits.lookup("E8", "Z9")
    with pytest.raises(KeyError):
        orbits.lookup("B2", "A1")


def test_expected_dims_examples():
    assert orbits.expected_centralizer_dim(orbits.lookup("G2", "G2"), 2) == 4
    assert orbits.expected_centralizer_dim(orbits.lookup("E8", "A4+A3"), 5) == 50
    assert orbits.expected_centralizer_dim(orbits.lookup("E8", "A1^4"), 2) == 128
    assert orbits.expected_centralizer_dim(orbits.lookup("E6", "A2^2+A1"), 3) == 27
    assert orbits.expected_centralizer_dim(orbits.lookup("E7", "A1^4"), 2) == 70
    rec = orbits.lookup("F4", "(C3)^(2)")
    assert rec.nonstandard
    assert orbits.expected_centralizer_dim(rec, 2) == 12
    with pytest.raises(KeyError):
        orbits.expected_centralizer_dim(rec, 3)


def test_geq_rows():
    rec = orbits.lookup("E8", "A4+A3")
    assert orbits.expected_centralizer_dim(rec, 7) == 48
    assert orbits.expected_centralizer_dim(rec, 31) == 48


def test_enumerate_includes_nonstandard():
    labels = [r.label for r in orbits.enumerate_orbits("G2")]
    assert "(~A1)^(3)" in labels
    assert len(labels) == 5


def test_missing_representative_fails_loudly():
    rec = orbits.lookup("F4", "F4(a2)")
    g = chevalley_algebra(roots.build("F4"), 3)
    with pytest.raises(ValueError):
        orbits.representative(g, rec)
    with pytest.raises(ValueError):
        orbits.cocharacter_grading(g, rec)


@pytest.mark.parametrize("group", ["G2", "F4"])
def test_small_group_sweep(group):
    """Every stored representative matches the table at every listed prime."""
    for rec in orbits.enumerate_orbits(group):
        if not rec.has_representative():
            continue
        for cls in rec.prime_classes():
            p = {"geq7": 7, "geq5": 5}.get(cls, None) or int(cls)
            g = tasks.algebra(group, p)
            e = orbits.representative(g, rec)
            assert g.dim - fp.rank(g.ad(e), p) == orbits.expected_centralizer_dim(rec, p), \
                (rec.label, p)


def test_representative_in_weight_two(  ):
    g = tasks.algebra("F4", 3)
    for rec in orbits.enumerate_orbits("F4"):
        if rec.diagram is None or not rec.has_representative():
            continue
        grad = orbits.cocharacter_grading(g, rec)
        assert grad.component(2).contains(orbits.representative(g, rec))


def test_coverage_counts():
    reps = 0
    pairs = 0
    for grp in orbits.GROUPS:
        for rec in orbits.enumerate_orbits(grp):
            if rec.has_representative():
                reps += 1
                pairs += len(rec.prime_classes())
    assert reps >= 60
    assert pairs >= 40  # the live cross-check sweep is the broadest acceptance gate
