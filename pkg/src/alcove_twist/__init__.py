"""Exact computations with alcove automorphisms, twisted fixed points on a
maximal torus, and Newton-stratum twists of reductive groups."""

from .alcove import alcove_automorphism, barycenter, psi, validate_alcove_automorphism
from .newton import gl_cycle_type, gl_newton_polygon, levi_of, mu_class, newton_twist
from .puiseux import PuiseuxSeries, build_witness_central, build_witness_gl
from .rootsys import CentralClass, build_root_system, coset_representatives, parse_group
from .springer import eigenvalue_check, find_regular_solution, regular_twist_set, solve_twisted
from .weyl import enumerate_group

__all__ = [
    "CentralClass", "PuiseuxSeries", "alcove_automorphism", "barycenter",
    "build_root_system", "build_witness_central", "build_witness_gl",
    "coset_representatives", "eigenvalue_check", "enumerate_group",
    "find_regular_solution", "gl_cycle_type", "gl_newton_polygon", "levi_of",
    "mu_class", "newton_twist", "parse_group", "psi", "regular_twist_set",
    "solve_twisted", "validate_alcove_automorphism",
]
