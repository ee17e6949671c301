"""homres: exact homological algebra over prime fields.

Public API is re-exported here; see the individual modules for details.
"""

from .errors import (
    HomresError,
    InvalidInput,
    UnsupportedField,
    NotFiniteDimensional,
    NotAGenerator,
    NeedsFiniteInjdim,
    HypothesesNotSatisfied,
    SearchExhausted,
    InternalError,
)
from .algebra import (
    Algebra,
    QuiverPresentation,
    from_table,
    from_quiver,
    opposite,
    quotient_algebra,
    radical_basis,
    same_algebra,
    validate_algebra,
    validate_radical,
)
from .modules import (
    Module,
    ModuleMap,
    UNDECIDED,
    coords_in_basis,
    direct_sum,
    dual_module,
    hom_basis,
    identity_map,
    is_isomorphic,
    map_cokernel,
    map_kernel,
    module_image,
    regular_module,
    simple_modules,
    validate_module,
    zero_map,
    zero_module,
)
from .resolutions import (
    EXCEEDS_BOUND,
    Resolution,
    ext_dims,
    free_cover,
    gl_dim,
    inj_dim,
    is_projective,
    proj_dim,
    projective_resolution,
    validate_resolution,
)
from .approx import (
    AddCategory,
    Approximation,
    Membership,
    add_membership,
    addM_resolution,
    auslander_bridger_check,
    perp_membership,
    right_approximation,
)
from .endo import (
    EndoContext,
    Theorem2Report,
    endomorphism_algebra,
    hom_functor,
    hom_functor_map,
    verify_theorem2,
)
from .complexes import (
    ChainMap,
    Complex,
    CResolution,
    Homotopy,
    acyclic_truncation_split,
    c_resolution,
    homology_dims,
    homotopy_hom_dim,
    homotopy_retraction,
    identity_chain_map,
    is_acyclic,
    is_c_acyclic,
    mapping_cone,
    perfect_test,
    shift,
    stalk,
)
from .gorenstein import (
    CotiltingReport,
    GorensteinReport,
    RelativeAuslanderReport,
    cotilting_check,
    gp_membership,
    is_gorenstein,
    relative_auslander,
)
from .workspace import (
    WorkspaceDocument,
    WorkspaceError,
    bundled_workspace_path,
    load_workspace,
    parse_workspace,
    store_workspace,
)
from .harness import run_task, run_all, verification_suite

__all__ = [
    "HomresError", "InvalidInput", "UnsupportedField", "NotFiniteDimensional",
    "NotAGenerator", "NeedsFiniteInjdim", "HypothesesNotSatisfied",
    "SearchExhausted", "InternalError",
    "Algebra", "QuiverPresentation", "from_table", "from_quiver", "opposite",
    "quotient_algebra", "radical_basis", "same_algebra", "validate_algebra",
    "validate_radical",
    "Module", "ModuleMap", "UNDECIDED", "coords_in_basis", "direct_sum",
    "dual_module", "hom_basis", "identity_map", "is_isomorphic",
    "map_cokernel", "map_kernel", "module_image", "regular_module",
    "simple_modules", "validate_module", "zero_map", "zero_module",
    "EXCEEDS_BOUND", "Resolution", "ext_dims", "free_cover", "gl_dim",
    "inj_dim", "is_projective", "proj_dim", "projective_resolution",
    "validate_resolution",
    "AddCategory", "Approximation", "Membership", "add_membership",
    "addM_resolution", "auslander_bridger_check", "perp_membership",
    "right_approximation",
    "EndoContext", "Theorem2Report", "endomorphism_algebra", "hom_functor",
    "hom_functor_map", "verify_theorem2",
    "ChainMap", "Complex", "CResolution", "Homotopy",
    "acyclic_truncation_split", "c_resolution", "homology_dims",
    "homotopy_hom_dim", "homotopy_retraction", "identity_chain_map",
    "is_acyclic", "is_c_acyclic", "mapping_cone", "perfect_test", "shift",
    "stalk",
    "CotiltingReport", "GorensteinReport", "RelativeAuslanderReport",
    "cotilting_check", "gp_membership", "is_gorenstein", "relative_auslander",
    "WorkspaceDocument", "WorkspaceError", "bundled_workspace_path",
    "load_workspace", "parse_workspace", "store_workspace",
    "run_task", "run_all", "verification_suite",
]
