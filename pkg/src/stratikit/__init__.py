"""stratikit — exact stratification and Gorenstein invariants.

Finite-dimensional algebras over exact fields (prime fields or the
rationals), given by bound quivers or structure constants.  The package
computes standard-module families, characteristic tilting and cotilting
modules, Ringel duals, Gorenstein / dominant / global dimensions, and runs
machine-checked verification transcripts for a battery of structural
properties of properly stratified Gorenstein algebras.

Everything is exact: no floating point enters any computation, and every
randomized search is seeded so that results are reproducible bit for bit.
"""

from .algebra import AssocAlgebra
from .config import get_seed, set_seed
from .errors import (
    InputError,
    InternalInconsistency,
    NotFiltered,
    PreconditionUnverified,
    RoutesDisagree,
    StratikitError,
)
from .families import (
    JordanType,
    brauer_block,
    catalogue,
    centraliser_algebra,
    centraliser_record,
    centraliser_selfdual_criterion,
    chain_module,
    example_ids,
    catalogue_example,
    schur_block,
    truncated_polynomial,
)
from .fields import GF, QQ, default_field, field_from_token
from .homology import (
    DEFAULT_CUTOFF,
    DimensionReport,
    dominant_dimension,
    ext_dim,
    global_dimension,
    gorenstein_dimensions,
    id_report,
    is_gorenstein,
    is_gorenstein_projective,
    pd_report,
)
from .io import (
    canonical_json,
    dump_algebra,
    dump_module,
    dump_record,
    load_algebra,
    load_module,
)
from .modules import (
    ModuleRep,
    decompose,
    direct_sum,
    dual_module,
    endomorphism_algebra,
    hom_basis,
    hom_dim,
    is_isomorphic,
    module_from_action,
    projective_module,
    regular_module,
    simple_module,
    submodule,
    quotient_module,
    syzygy,
)
from .quiver import Quiver, compile_bqa
from .strat import (
    StratifiedData,
    TiltingData,
    characteristic_tilting,
    classify,
    delta_multiplicities,
    find_stratifying_orders,
    in_filtration_category,
    ringel_dual,
    standard_family,
    stratification_check,
)
from .verify import (
    PROPERTIES,
    invariant_isomorphic,
    invariant_profile,
    verify_all,
    verify_property,
)

__version__ = "0.1.0"

__all__ = [
    "AssocAlgebra",
    "DEFAULT_CUTOFF",
    "DimensionReport",
    "GF",
    "InputError",
    "InternalInconsistency",
    "JordanType",
    "ModuleRep",
    "NotFiltered",
    "PROPERTIES",
    "PreconditionUnverified",
    "QQ",
    "Quiver",
    "RoutesDisagree",
    "StratifiedData",
    "StratikitError",
    "TiltingData",
    "brauer_block",
    "canonical_json",
    "catalogue",
    "centraliser_algebra",
    "centraliser_record",
    "centraliser_selfdual_criterion",
    "chain_module",
    "characteristic_tilting",
    "classify",
    "compile_bqa",
    "decompose",
    "default_field",
    "delta_multiplicities",
    "direct_sum",
    "dominant_dimension",
    "dual_module",
    "dump_algebra",
    "dump_module",
    "dump_record",
    "endomorphism_algebra",
    "example_ids",
    "ext_dim",
    "field_from_token",
    "find_stratifying_orders",
    "get_seed",
    "global_dimension",
    "gorenstein_dimensions",
    "hom_basis",
    "hom_dim",
    "id_report",
    "in_filtration_category",
    "invariant_isomorphic",
    "invariant_profile",
    "is_gorenstein",
    "is_gorenstein_projective",
    "is_isomorphic",
    "load_algebra",
    "load_module",
    "module_from_action",
    "catalogue_example",
    "pd_report",
    "projective_module",
    "quotient_module",
    "regular_module",
    "ringel_dual",
    "schur_block",
    "set_seed",
    "simple_module",
    "standard_family",
    "stratification_check",
    "submodule",
    "syzygy",
    "truncated_polynomial",
    "verify_all",
    "verify_property",
]
