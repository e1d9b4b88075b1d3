"""Exact E3 pages for free loop spaces of complete flag manifolds."""

from .exactmat import (AbelianGroupStructure, IntMatrix, cokernel, determinant_divisors,
                       snf_mod_p, snf_naive, snf_pivot, vec_gcd)
from .combinatorics import (binomial, enumerate_multisets, enumerate_subsets, mahonian,
                            mahonian_explicit, multiset_coeff)
from .sympoly import IntPolynomial, Partition
from .symquot import quotient_basis, reduce
from .specseq import E2Element, GroupFamily, PageCoordinate, apply_d2, differential_matrix
from .torsion import e3_entry, e3_entry_mod_p, torsion_table

__version__ = "0.1.0"
