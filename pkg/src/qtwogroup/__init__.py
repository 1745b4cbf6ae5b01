"""Exact verification of Hopf-algebra crossed modules and the strict quantum
2-groups built from them, over Q and prime fields."""

__version__ = "0.1.0"

from .fields import GF, QQ, Field, FieldError, field_from_name  # noqa: E402
from .groups import CayleyTable, cyclic, direct_product, klein_four, symmetric  # noqa: E402
from .linalg import (  # noqa: E402
    LinearMap,
    Matrix,
    SubspaceBasis,
    compose,
    identity,
    inverse,
    kernel_basis,
    kron,
    rank,
    rref,
    solve,
    subspace_equal,
)
from .report import CheckEntry, CheckReport, Witness  # noqa: E402
from .hopf import (  # noqa: E402
    Coaction,
    HopfAlgebraData,
    ModuleAction,
    YetterDrinfeldModule,
    braiding,
    check_braid_relation,
    check_hopf,
    check_hopf_map,
    check_yetter_drinfeld,
    dual_hopf,
    tensor_product_hopf,
)
from .constructions import (  # noqa: E402
    CrossedModuleData,
    GradedCrossedModuleInput,
    NotCocommutativeError,
    PreconditionError,
    adjoint_crossed_module,
    adjoint_transport,
    biproduct,
    function_algebra,
    graded_function_crossed_module,
    group_algebra,
    quantum_double_crossed_module,
    smash_product,
    sweedler_h4,
)
from .two_group import (  # noqa: E402
    QuantumGroupoidData,
    build_strict_2group,
    check_crossed_module,
    check_embedded_quantum_groupoid,
    check_interchange,
    cotensor,
    groupoid_antipode_diagnostics,
)
from .braided import (  # noqa: E402
    BraidedCrossedModuleData,
    BraidedHopfData,
    QuasitriangularStructure,
    biproduct_projections,
    check_braided_crossed_module,
    check_braided_hopf,
    check_quasitriangular,
    check_twisted_coproduct_obstruction,
    transmutation,
    yd_from_quasitriangular,
)
from .suites import run_suite  # noqa: E402
from .gallery import gallery  # noqa: E402

__all__ = [
    "# noqa: E402",
    "LinearMap",
    "Matrix",
    "SubspaceBasis",
    "compose",
    "identity",
    "inverse",
    "kernel_basis",
    "kron",
    "rank",
    "rref",
    "solve",
    "subspace_equal",
    "# noqa: E402",
    "Coaction",
    "HopfAlgebraData",
    "ModuleAction",
    "YetterDrinfeldModule",
    "braiding",
    "check_braid_relation",
    "check_hopf",
    "check_hopf_map",
    "check_yetter_drinfeld",
    "dual_hopf",
    "tensor_product_hopf",
    "# noqa: E402",
    "CrossedModuleData",
    "GradedCrossedModuleInput",
    "NotCocommutativeError",
    "PreconditionError",
    "adjoint_crossed_module",
    "adjoint_transport",
    "biproduct",
    "function_algebra",
    "graded_function_crossed_module",
    "group_algebra",
    "quantum_double_crossed_module",
    "smash_product",
    "sweedler_h4",
    "# noqa: E402",
    "QuantumGroupoidData",
    "build_strict_2group",
    "check_crossed_module",
    "check_embedded_quantum_groupoid",
    "check_interchange",
    "cotensor",
    "groupoid_antipode_diagnostics",
    "# noqa: E402",
    "BraidedCrossedModuleData",
    "BraidedHopfData",
    "QuasitriangularStructure",
    "biproduct_projections",
    "check_braided_crossed_module",
    "check_braided_hopf",
    "check_quasitriangular",
    "check_twisted_coproduct_obstruction",
    "transmutation",
    "yd_from_quasitriangular",
    "GF",
    "QQ",
    "Field",
    "FieldError",
    "field_from_name",
    "CayleyTable",
    "cyclic",
    "direct_product",
    "klein_four",
    "symmetric",
    "CheckEntry",
    "CheckReport",
    "Witness",
    "run_suite",
    "gallery",
]
