"""Exact regularity decisions and invariants for simply decomposable reflexive 4-polytopes."""

from .catalog import builtin_polygon, emit_tables, period_sequence, product_polytope
from .invariants import euler_characteristic, gamma, invariant_report
from .lattice import InvalidInputError
from .minkowski import StandardDecomposition, enumerate_decomposition_data, is_simply_decomposable
from .polytope import LatticePolytope, ReflexivePolytope, polar_dual, product
from .regularity import decide_regularity
from .symmetry import automorphism_group, orbits

__version__ = "0.1.0"
