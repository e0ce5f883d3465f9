"""Anticommutative algebras with (n-3)-dimensional annihilator, built as central extensions."""

from .algebra import Algebra, annihilator, change_of_basis, direct_sum_trivial, fingerprint
from .catalog import CATALOG, main_theorem, normalize_alpha, table1
from .classify import classify
from .cohomology import Cocycle, coboundary, h2, in_Ts, radical, theta
from .errors import (
    CatalogError,
    DimensionError,
    ExtclassError,
    FieldMismatchError,
    NoLiftError,
    NotAnAutomorphismError,
    NotInvertibleError,
    ParseError,
    SearchBudgetExceeded,
)
from .extensions import central_extension, check_ann_formula, decompose, has_annihilator_component, lift_iso
from .fields import GF, Q, QI, Field, GaussianRational, Residue
from .isomorphism import distinguish, iso_search, verify_iso
from .linalg import Matrix, Subspace
from .orbits import act_on_class, act_on_cocycle, automorphisms, orbit_reps

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "annihilator",
    "change_of_basis",
    "direct_sum_trivial",
    "fingerprint",
    "CATALOG",
    "main_theorem",
    "normalize_alpha",
    "table1",
    "classify",
    "Cocycle",
    "coboundary",
    "h2",
    "in_Ts",
    "radical",
    "theta",
    "CatalogError",
    "DimensionError",
    "ExtclassError",
    "FieldMismatchError",
    "NoLiftError",
    "NotAnAutomorphismError",
    "NotInvertibleError",
    "ParseError",
    "SearchBudgetExceeded",
    "central_extension",
    "check_ann_formula",
    "decompose",
    "has_annihilator_component",
    "lift_iso",
    "GF",
    "Q",
    "QI",
    "Field",
    "GaussianRational",
    "Residue",
    "distinguish",
    "iso_search",
    "verify_iso",
    "Matrix",
    "Subspace",
    "act_on_class",
    "act_on_cocycle",
    "automorphisms",
    "orbit_reps",
]
