"""Three-dimensional Lie algebra families with almost paracontact almost
paracomplex Riemannian structure: constructors, closed-form matrix group
exponentials with branch handling, and classification through the
Levi-Civita connection of the left-invariant orthonormal metric."""

from .expengine import (
    BRANCH_EPS,
    ExpResult,
    closed_form,
    exp_result_to_json,
    para_sasakian_group,
    verify_closed_form,
)
from .levicivita import (
    ConnectionCoeffs,
    NotALieAlgebraError,
    classify_manifold,
    connection_coeffs,
    f_tensor,
    is_para_sasakian,
)
from .lie import (
    StructureConstants,
    adjoint_rep,
    bracket,
    class_algebra,
    constants_from_json,
    constants_to_json,
    jacobi_defect,
    para_sasakian_algebra,
    structure_constants,
)
from .mat3 import (
    Annihilator,
    Mat3,
    Vec3,
    annihilator,
    expm_oracle,
    identity,
    mat3,
    mat_mul,
    max_abs,
    trace,
    trace_sq,
    vec3,
)
from .structure import (
    CLASS_IDS,
    TWO_PARAMETER_CLASSES,
    ClassParams,
    ClassReport,
    FTensor,
    LeeForms,
    PhiBasisStructure,
    check_structure,
    class_params_from_json,
    class_params_to_json,
    class_pattern,
    ftensor,
    ftensor_from_json,
    ftensor_to_json,
    lee_forms,
    match_class,
    report_to_json,
    standard_structure,
    structure_passes,
)

__version__ = "0.1.0"
