"""Exact classification and verification of nilpotent adjoint orbits.

The package enumerates the nilpotent orbits of the classical real and
complex simple Lie algebras, constructs a standard triple and invariant
form for each, machine-verifies the classification data with exact
rational arithmetic, and reports every orbit's homotopy type as a compact
homogeneous space.
"""

from .catalog import (FAMILIES, SIGNED_FAMILIES, AlgebraSpec, OrbitRecord,
                      datum_membership_error, enumerate_orbits, fiber_count,
                      total_orbit_count)
from .centralizers import (CentralizerReport, centralizer_dim_nilpotent,
                           centralizer_dim_triple, centralizer_report,
                           expected_compact_dim, expected_reductive_dim,
                           orbit_dim)
from .diagrams import SignedDiagram, enumerate_signed_diagrams, sign_matrix
from .homotopy import (HomotopyType, KElement, chi, chi_pair, compact_pair,
                       embed_K, factor_layout, quotient_dim, sample_k_element,
                       verify_K_membership)
from .matrices import ExactMatrix
from .partitions import Partition, enumerate_partitions
from .scalars import Scalar
from .triples import (Triple, ZeroOrbitError, adapted_change_of_basis,
                      build_triple, gram_matrix, jordan_type)

__version__ = "0.1.0"

__all__ = [
    "AlgebraSpec",
    "CentralizerReport",
    "ExactMatrix",
    "FAMILIES",
    "HomotopyType",
    "KElement",
    "OrbitRecord",
    "Partition",
    "SIGNED_FAMILIES",
    "Scalar",
    "SignedDiagram",
    "Triple",
    "ZeroOrbitError",
    "adapted_change_of_basis",
    "build_triple",
    "centralizer_dim_nilpotent",
    "centralizer_dim_triple",
    "centralizer_report",
    "chi",
    "chi_pair",
    "compact_pair",
    "datum_membership_error",
    "embed_K",
    "enumerate_orbits",
    "enumerate_partitions",
    "enumerate_signed_diagrams",
    "expected_compact_dim",
    "expected_reductive_dim",
    "factor_layout",
    "fiber_count",
    "gram_matrix",
    "jordan_type",
    "orbit_dim",
    "quotient_dim",
    "sample_k_element",
    "sign_matrix",
    "total_orbit_count",
    "verify_K_membership",
    "__version__",
]
