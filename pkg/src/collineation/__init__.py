"""Exact computation and classification of collineation varieties of order-3 tensors."""

from .catalog import get_entry, load_catalog, reproduce_tables
from .classify import classify_tensor
from .errors import CollineationError, NotConciseWarning
from .ideals import (
    Ideal,
    eliminate,
    groebner,
    hilbert_data,
    implicitize,
    intersect,
    normal_form,
    profile_scheme,
    saturate,
    saturate_irrelevant,
    zero_dim_radical,
)
from .labels import CollineationLabel
from .nets import classify_net, cuboid, cuboid_is_smooth, profile_base_scheme, quadric_system, sigma3_membership
from .pencils import build_pencil, check_saturation_property, classify_pencil, parse_blocks, pencil_base_degree, stratum_dimension
from .polyring import GREVLEX, LEX, Poly, PolyRing, block_elim
from .scalars import GF, QQ, parse_field
from .tensors import Tensor3, base_locus, flattening, linear_matrix, minors, strassen_flattening, unit_tensor

__version__ = "0.1.0"

__all__ = [
    "get_entry",
    "load_catalog",
    "reproduce_tables",
    "classify_tensor",
    "CollineationError",
    "NotConciseWarning",
    "Ideal",
    "eliminate",
    "groebner",
    "hilbert_data",
    "implicitize",
    "intersect",
    "normal_form",
    "profile_scheme",
    "saturate",
    "saturate_irrelevant",
    "zero_dim_radical",
    "CollineationLabel",
    "classify_net",
    "cuboid",
    "cuboid_is_smooth",
    "profile_base_scheme",
    "quadric_system",
    "sigma3_membership",
    "build_pencil",
    "check_saturation_property",
    "classify_pencil",
    "parse_blocks",
    "pencil_base_degree",
    "stratum_dimension",
    "GREVLEX",
    "LEX",
    "Poly",
    "PolyRing",
    "block_elim",
    "GF",
    "QQ",
    "parse_field",
    "Tensor3",
    "base_locus",
    "flattening",
    "linear_matrix",
    "minors",
    "strassen_flattening",
    "unit_tensor",
]
