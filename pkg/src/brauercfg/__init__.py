"""Exact computations for Brauer configuration algebras and subgroup occurrence."""

from ._kernels import BACKEND
from .config import Configuration, Polygon, ValidationReport
from .errors import (
    BoundExceededError,
    BrauerError,
    GroupAxiomError,
    InconsistencyError,
    InvalidConfigurationError,
    PreconditionError,
    UnknownIdError,
)
from .groups import FiniteGroup, SubgroupLattice, build_group, subgroup_lattice
from .quiver import Quiver, build_quiver
from .representation import (
    algebra_dim,
    cartan_matrix,
    center_dim,
    dim_hom,
    dimension_report,
    projective_length,
)

__version__ = "0.1.0"
