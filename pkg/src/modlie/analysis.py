"""Shared orbit-analysis pipelines built on the subalgebra machinery.

These are the reusable steps behind the verification tasks and the CLI's
`orbit --analyze` view: the normalizer tower of a nilpotent representative,
the bracket-generated minimal ideal of the tower's top, the Witt-factor and
perfect-core ideals, and submodule lifting through quotient coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import fp, meataxe, orbits, subalgebra
from .chevalley import CocharacterGrading, LieAlgebraSC
from .fp import Subspace
from .orbits import OrbitRecord
from .subalgebra import Subalgebra


@dataclass
class Tower:
    """Centralizer/normalizer/radical tower of a nilpotent element."""

    e: np.ndarray
    centralizer: Subalgebra
    normalizer: Subalgebra
    radical: Subalgebra
    radical_normalizer: Subalgebra

    def dims(self) -> dict[str, int]:
        return {"g_e": self.centralizer.dim, "n_e": self.normalizer.dim,
                "radical": self.radical.dim, "w": self.radical_normalizer.dim}


def normalizer_tower(g: LieAlgebraSC, e: np.ndarray) -> Tower:
    espan = subalgebra.from_vectors(g, e[None, :])
    ge = subalgebra.centralizer(g, espan)
    ne = subalgebra.normalizer(g, espan)
    A = subalgebra.solvable_radical(ne)
    w = subalgebra.normalizer(g, A)
    return Tower(e, ge, ne, A, w)


def orbit_tower(g: LieAlgebraSC, rec: OrbitRecord) -> Tower:
    return normalizer_tower(g, orbits.representative(g, rec))


def bracket_ideal(g: LieAlgebraSC, m: Subalgebra, tower: Tower,
                  grad: CocharacterGrading, k0: int) -> Subspace:
    """Smallest m-invariant subspace containing the brackets of the weight
    -1 part of the centralizer with its weight-k0 part."""
    X = tower.centralizer.space.intersect(grad.component(-1))
    Y = tower.centralizer.space.intersect(grad.component(k0))
    if X.dim == 0 or Y.dim == 0:
        raise ValueError("empty seed components for the ideal construction")
    seeds = np.vstack([g.bracket_rows(x, Y.basis) for x in X.basis])
    return fp.spin(seeds, [g.ad(r) for r in m.space.basis], g.p, g.dim)


def lift_through_quotient(proj: np.ndarray, section: np.ndarray,
                          rows: np.ndarray, p: int) -> np.ndarray:
    """Preimages (one per row) of quotient-coordinate vectors."""
    lift_mat = fp.mmul(proj, section.T, p)
    out = []
    for z in rows:
        sol = fp.solve(lift_mat, z, p)
        if sol is None:
            raise ValueError("vector is not in the image of the projection")
        out.append((sol[0] @ section) % p)
    return np.array(out) % p


def witt_factor_ideal(g: LieAlgebraSC, m: Subalgebra, I: Subspace, seed: int = 0) -> Subspace:
    """The maximal ideal J >= I whose quotient is the Witt factor W(2;1).

    Among the minimal ideals of m/I, the one complementary to a quotient of
    dimension 2 p^2 is lifted and added to I.
    """
    p = g.p
    q, proj = subalgebra.quotient(m, Subalgebra(g, I, closed=True))
    mod = meataxe.GModule(p, q.dim, q.adjoint_matrices())
    mins = meataxe.minimal_submodules(mod, seed=seed)
    target = [mm for mm in mins if q.dim - mm.dim == 2 * p * p]
    if not target:
        raise ValueError("no minimal ideal complements a Witt factor")
    sec = subalgebra._section_rows(m.space, I, p)
    lifted = lift_through_quotient(proj, sec, target[0].basis, p)
    return I.sum(Subspace.from_vectors(lifted, p, g.dim))


def perfect_core_ideal(g: LieAlgebraSC, m: Subalgebra, I: Subspace) -> Subspace:
    """I plus the lift of the perfect core (stable derived term) of m/I."""
    p = g.p
    q, proj = subalgebra.quotient(m, Subalgebra(g, I, closed=True))
    full = Subalgebra(q, Subspace.full(q.dim, p), closed=True)
    core = subalgebra.derived_series(q, full)[-1]
    sec = subalgebra._section_rows(m.space, I, p)
    lifted = lift_through_quotient(proj, sec, core.space.basis, p)
    return I.sum(Subspace.from_vectors(lifted, p, g.dim))


def quotient_module(l0: Subalgebra, big: Subspace, small: Subspace) -> meataxe.GModule:
    return meataxe.action_module(l0, ("quotient-space", big, small))


def unique_submodule_of_dim(mod: meataxe.GModule, dim: int, seed: int = 0) -> Subspace:
    """The unique minimal submodule of the given dimension (raises otherwise)."""
    mins = meataxe.minimal_submodules(mod, seed=seed)
    hits = [m for m in mins if m.dim == dim]
    if len(hits) != 1:
        raise ValueError(f"expected one minimal submodule of dim {dim}, found {len(hits)}")
    return hits[0]


def lift_submodule_of_quotient(l0: Subalgebra, big: Subspace, sub_in_quotient: Subspace) -> Subspace:
    """Preimage in `big` of a submodule of big/l0, given in section coordinates."""
    g = l0.algebra
    p = g.p
    small_in = Subspace.from_vectors(
        np.array([big.coords_of(r) for r in l0.space.basis]), p, big.dim) \
        if l0.dim else Subspace.zero(big.dim, p)
    comp = small_in.complement_cols()
    E = np.zeros((big.dim, len(comp)), dtype=np.int64)
    for r, c in enumerate(comp):
        E[c, r] = 1
    lifted_in_big = fp.mmul(sub_in_quotient.basis, E.T, p)
    rows = np.vstack([l0.space.basis, fp.mmul(lifted_in_big, big.basis, p)])
    return Subspace.from_vectors(rows, p, g.dim)


def graded_centralizer_dims(tower: Tower, grad: CocharacterGrading,
                            lo: int = -6, hi: int = 14) -> dict[int, int]:
    out = {}
    for k in range(lo, hi + 1):
        d = tower.centralizer.space.intersect(grad.component(k)).dim
        if d:
            out[k] = d
    return out
