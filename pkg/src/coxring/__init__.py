"""Quotients of Coxeter path algebras: normal forms, reflection actions,
real representations and the matrix embedding over a free product."""
from __future__ import annotations

__version__ = "0.1.0"

from .coxsys import CoxeterMatrix, extend_with_apex, load_system, parse_system, preset, preset_from_string
from .minpoly import IntPoly, commutative_shadow, euler_phi, min_poly_4cos2
from .pathalg import Element, FreeAlgebra, PathAlgebra
from .quotient import QElement, QuotientRing, enumerate_basis, qmul
from .rewrite import normal_form, rules_for, verify_overlaps

__all__ = [
    "CoxeterMatrix", "Element", "FreeAlgebra", "IntPoly", "PathAlgebra", "QElement",
    "QuotientRing", "commutative_shadow", "enumerate_basis", "euler_phi", "extend_with_apex",
    "load_system", "min_poly_4cos2", "normal_form", "parse_system", "preset",
    "preset_from_string", "qmul", "rules_for", "verify_overlaps",
]
