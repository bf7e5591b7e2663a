"""Exact tools for nilpotent orbits and unipotent classes in characteristic p.

Modules: roots (root systems), chevalley (Chevalley bases and root groups),
modules (natural and minimal modules), linalg (GF(p) linear algebra and Lie
invariants), classical (orthogonal decompositions and eminence for classical
groups), exceptional (invariant profiles, recognition, eminence data) and
cli (the command line tool).
"""
from .chevalley import ChevalleyAlgebra, chevalley_algebra, structure_constants
from .classical import (
    Decomposition, decompose, eminent_representative, enumerate_decompositions,
    formed_space, is_eminent_classical, orthogonal_index,
    regular_representative, so_class_splitting, symplectic_index,
)
from .exceptional import (
    ElementData, InvariantProfile, centralizer, classify, eminent_list,
    invariant_profile, levi_classes, levi_regular_representative, overgroups,
    recognize,
)
from .roots import RootSystem, build_root_system

__version__ = "0.1.0"

__all__ = [
    "ChevalleyAlgebra", "Decomposition", "ElementData", "InvariantProfile",
    "RootSystem", "build_root_system", "centralizer", "chevalley_algebra",
    "classify",
    "decompose", "eminent_list", "eminent_representative",
    "enumerate_decompositions", "formed_space", "invariant_profile",
    "is_eminent_classical", "levi_classes", "levi_regular_representative",
    "orthogonal_index", "overgroups", "recognize", "regular_representative",
    "so_class_splitting", "structure_constants", "symplectic_index",
]
