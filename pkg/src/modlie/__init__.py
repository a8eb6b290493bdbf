"""Workbench for finite-dimensional modular Lie algebras over GF(p).

Builds the exceptional Lie algebras from Chevalley bases, the Cartan-type
and exotic simple algebras, and reproduces the reference maximal-subalgebra
computations: centralizer towers, radicals, Weisfeiler filtrations, module
decompositions and maximality certificates.
"""

__version__ = "0.1.0"
