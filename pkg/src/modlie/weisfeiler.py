"""Weisfeiler filtrations, associated graded algebras and the graded radical.

A filtration is built from a maximal-candidate subalgebra M_0 and an
M_0-invariant subspace M_{-1} whose quotient is irreducible: negative terms
by bracketing with M_{-1} until the whole algebra is reached, positive
terms by the usual stabiliser recursion.  The associated graded algebra is
realised as a concrete LieAlgebraSC on per-level complement sections, so the
module and dimension machinery applies to it unchanged.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import fp, meataxe, subalgebra
from .chevalley import LieAlgebraSC
from .fp import Subspace
from .subalgebra import Subalgebra


@dataclass
class Filtration:
    """Chain g = M_(-q) > ... > M_(-1) > M_(0) > ... > M_(r) != 0.

    When the input algebra had a centre, the filtration lives in the central
    quotient (`algebra` is that quotient and `projection` maps into it).
    """

    algebra: LieAlgebraSC
    terms: dict[int, Subspace]  # index -> subspace
    projection: np.ndarray | None = None

    def dims(self) -> dict[int, int]:
        return {i: s.dim for i, s in sorted(self.terms.items())}

    @property
    def depth(self) -> int:
        return -min(self.terms)

    @property
    def height(self) -> int:
        return max(self.terms)


def build_filtration(g: LieAlgebraSC, m0: Subalgebra, m_minus1: Subspace,
                     check_irreducible: bool = True, seed: int = 0) -> Filtration:
    """The Weisfeiler filtration of the pair (m0, m_minus1).

    m_minus1 must contain m0 and be m0-invariant with irreducible quotient
    (verified unless check_irreducible is False).  A nonzero centre is
    quotiented out first, since the positive recursion terminates only for
    simple algebras.
    """
    if not m_minus1.contains_space(m0.space):
        raise ValueError("M_(-1) must contain M_(0)")
    if check_irreducible:
        mod = meataxe.action_module(m0, ("quotient-space", m_minus1, m0.space))
        if not meataxe.is_irreducible(mod, seed=seed):
            raise ValueError("M_(-1)/M_(0) is not irreducible")
    proj = None
    z = g.center()
    if z.dim:
        if not m0.space.contains_space(z):
            raise ValueError("the centre must lie inside M_(0)")
        full = subalgebra.Subalgebra(g, Subspace.full(g.dim, g.p), closed=True)
        q, proj = subalgebra.quotient(full, z)
        m_minus1 = _push_through(m_minus1, proj, q.dim, g.p)
        m0 = subalgebra.Subalgebra(q, _push_through(m0.space, proj, q.dim, g.p),
                                   closed=True)
        g = q
    terms = {0: m0.space, -1: m_minus1}
    k = 1
    while terms[-k].dim < g.dim:
        nxt = subalgebra.bracket_span(g, terms[-k], terms[-1]).sum(terms[-k])
        k += 1
        terms[-k] = nxt
    # positive terms: M_(i+1) = {x in M_(i) : [x, M_(-1)] <= M_(i)}
    i = 0
    while terms[i].dim:
        cur = terms[i]
        T = cur.transversal_map()
        blocks = [fp.mmul(T, (-g.ad(row)) % g.p, g.p) for row in terms[-1].basis]
        sol = Subspace.from_vectors(fp.nullspace_matrix(np.vstack(blocks), g.p), g.p, g.dim)
        nxt = sol.intersect(cur)
        if nxt.dim == cur.dim:
            raise ValueError("positive terms fail to terminate: not a filtration "
                             "of a simple algebra")
        terms[i + 1] = nxt
        i += 1
        if nxt.dim == 0:
            break
    if terms[max(terms)].dim == 0:
        del terms[max(terms)]
    return Filtration(g, terms, proj)


@dataclass
class GradedAlgebra:
    """The associated graded algebra of a filtration, as a LieAlgebraSC."""

    algebra: LieAlgebraSC          # the graded algebra itself (grading attached)
    component_dims: dict[int, int]
    projection: np.ndarray         # ambient (possibly central quotient) -> graded coords
    base: LieAlgebraSC             # the algebra the filtration lives in (after quotient)

    def component(self, k: int) -> Subspace:
        return self.algebra.graded_component(k)


def graded_algebra(f: Filtration, seed: int = 0) -> GradedAlgebra:
    """Concrete associated graded algebra; quotients out the centre first
    when the underlying algebra is not simple."""
    g = f.algebra
    z = g.center()
    terms = dict(f.terms)
    if z.dim:
        full = subalgebra.Subalgebra(g, Subspace.full(g.dim, g.p), closed=True)
        q, proj = subalgebra.quotient(full, z)
        terms = {i: _push_through(s, proj, q.dim, g.p) for i, s in terms.items()}
        g = q
    levels = sorted(terms)
    # per-level sections: basis vectors of M_(i) independent modulo M_(i+1)
    section_rows = []
    grading = []
    for i in levels:
        cur = terms[i]
        nxt = terms.get(i + 1)
        ech = fp.Echelon(g.dim, g.p)
        if nxt is not None:
            ech.add_rows(nxt.basis)
        for row in cur.basis:
            if ech.add_rows(row[None, :]):
                section_rows.append(row)
                grading.append(i)
    S = np.array(section_rows, dtype=np.int64)
    d = S.shape[0]
    if d != g.dim:
        raise AssertionError("graded sections do not fill the algebra")
    # coordinates: solve x = c @ S
    Sinv = fp.inv_matrix(S.T, g.p)

    def coords(rows):
        return fp.mmul(rows, Sinv.T, g.p)

    grading = np.array(grading, dtype=np.int64)
    sc: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for a in range(d):
        brs = g.bracket_rows(S[a], S[a + 1:])
        cf = coords(brs)
        for t in range(brs.shape[0]):
            b = a + 1 + t
            target = int(grading[a] + grading[b])
            # graded bracket: project [x, y] to the degree-(i+j) component
            terms_ab = []
            for k in np.nonzero(cf[t])[0]:
                if grading[k] == target:
                    terms_ab.append((int(k), int(cf[t][k])))
                elif grading[k] < target:
                    raise AssertionError("filtration violates bracket containment")
            if terms_ab:
                sc[(a, b)] = terms_ab
    ga = LieAlgebraSC(g.p, [f"g{i}" for i in range(d)], sc, grading=grading,
                      meta={"family": "weisfeiler-graded"})
    dims: dict[int, int] = {}
    for i in grading:
        dims[int(i)] = dims.get(int(i), 0) + 1
    return GradedAlgebra(ga, dict(sorted(dims.items())), Sinv.T.copy(), g)


def _push_through(space: Subspace, proj: np.ndarray, qdim: int, p: int) -> Subspace:
    rows = fp.mmul(space.basis, proj.T, p)
    return Subspace.from_vectors(rows, p, qdim)


def weisfeiler_radical(ga: GradedAlgebra) -> Subspace:
    """The largest graded ideal of the graded algebra inside the negative part."""
    alg = ga.algebra
    neg_idx = np.nonzero(alg.grading < 0)[0]
    rows = np.zeros((len(neg_idx), alg.dim), dtype=np.int64)
    rows[np.arange(len(neg_idx)), neg_idx] = 1
    X = Subspace.from_vectors(rows, alg.p, alg.dim)
    while True:
        if X.dim == 0:
            return X
        T = X.transversal_map()
        blocks = [fp.mmul(T, (-alg.ad(alg.basis_vector(j))) % alg.p, alg.p)
                  for j in range(alg.dim)]
        Y = Subspace.from_vectors(fp.nullspace_matrix(np.vstack(blocks), alg.p),
                                  alg.p, alg.dim).intersect(X)
        if Y.dim == X.dim:
            return X
        X = Y


def shape_report(ga: GradedAlgebra, seed: int = 0, minimal_ideal_guard: int = 200000) -> dict:
    """Evidence for the degenerate/non-degenerate dichotomy.

    Reports the component dimensions, the graded radical, the booleans of
    the degenerate-case preconditions, and (when computable) the dimension
    of the unique minimal ideal of the semisimple quotient.
    """
    alg = ga.algebra
    rad = weisfeiler_radical(ga)
    dims = dict(ga.component_dims)
    height = max(dims)
    report: dict = {"component_dims": {str(k): v for k, v in dims.items()},
                    "radical_dim": rad.dim}
    gbar = alg
    proj = None
    if rad.dim:
        full = subalgebra.Subalgebra(alg, Subspace.full(alg.dim, alg.p), closed=True)
        gbar, proj = subalgebra.quotient(full, rad)
    # flag: components in degrees >= 2 vanish (in the quotient)
    if proj is None:
        ge2 = sum(v for k, v in dims.items() if k >= 2)
    else:
        ge2 = 0
        for k, v in dims.items():
            if k >= 2:
                comp = alg.graded_component(k)
                ge2 += Subspace.from_vectors(fp.mmul(comp.basis, proj.T, alg.p),
                                             alg.p, gbar.dim).dim
    report["flag_no_degree_ge2"] = ge2 == 0
    # flag: [[G_-1, G_1], G_1] = 0
    g1 = alg.graded_component(1)
    gm1 = alg.graded_component(-1)
    inner = subalgebra.bracket_span(alg, gm1, g1)
    outer = subalgebra.bracket_span(alg, inner, g1)
    if proj is not None:
        outer = Subspace.from_vectors(fp.mmul(outer.basis, proj.T, alg.p), alg.p, gbar.dim)
    report["flag_bracket_condition"] = outer.dim == 0
    # minimal ideal of the quotient, when the search is affordable
    try:
        mod = meataxe.GModule(gbar.p, gbar.dim, gbar.adjoint_matrices())
        mins = meataxe.minimal_submodules(mod, seed=seed, guard=minimal_ideal_guard)
        if mins:
            min_dim = min(m.dim for m in mins)
            report["minimal_ideal_dim"] = min_dim
            report["n_minimal_ideals"] = len(mins)
            if len(mins) == 1:
                A = mins[0]
                plus_idx = np.nonzero(alg.grading > 0)[0]
                if proj is None and len(plus_idx):
                    rows = np.zeros((len(plus_idx), alg.dim), dtype=np.int64)
                    rows[np.arange(len(plus_idx)), plus_idx] = 1
                    plus = Subspace.from_vectors(rows, alg.p, alg.dim)
                    report["flag_minimal_ideal_meets_plus"] = A.intersect(plus).dim > 0
    except RuntimeError:
        report["minimal_ideal_dim"] = None
    report["simple"] = bool(rad.dim == 0
                            and meataxe.is_irreducible(
                                meataxe.GModule(alg.p, alg.dim, alg.adjoint_matrices()),
                                seed=seed))
    return report


def report_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True)
