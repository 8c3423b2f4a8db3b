"""Entropy-principle verification and a desk-scale type III heat simulator.

The package checks whether declared constitutive models of rigid heat
conductors with state list {alpha, alpha_dot, grad alpha, grad
alpha_dot} satisfy the extended entropy inequality under arbitrary
local continuations, demonstrates that isotropic conduction forces the
entropy influx to be proportional to the energy influx while
transversely isotropic conduction leaves an axial discrepancy, verifies
the supporting representation results numerically, and integrates the
linear 1D equations with an entropy-production monitor.
"""

from .tolerances import TOL, Tolerances
from .tensor_core import (
    Rotation,
    outer,
    rotation_about_axis,
    sample_rotation_haar,
    sym_part,
    vec3,
    ten2,
)
from .autodiff import (
    DomainError,
    Jet,
    VecJacobian,
    fd_crosscheck,
    jacobian_wrt_vectors,
    partial_wrt_scalar,
)
from .expr import CoeffFn, ExprError, ExprSyntaxError, UnknownIdentifierError
from .constitutive import (
    ConstitutiveModel,
    DomainBox,
    Interval,
    InvariantSet,
    ThermalState,
    build_counterexample,
    eval_flux,
    eval_scalar,
    load_model,
    parse_coeff,
    save_model,
)
from .entropy_principle import (
    CheckReport,
    ConditionList,
    DiscrepancyReport,
    InterfaceReport,
    ResidualReport,
    check_model,
    condition_lists,
    discrepancy,
    expansion_crosscheck,
    interface_check,
    multiplier_independence,
    residuals,
    violation_search,
)
from .representation_lab import (
    extract_iso_coeffs,
    extract_transiso_coeffs,
    isotropy_defect,
    lemma_extract,
    lemma_tensor,
    run_lemma_suite,
)
from .gn3_sim import (
    CFLError,
    Material,
    SimState,
    SourceSpec,
    bundled_scenarios,
    entropy_production,
    run_scenario,
    step,
    two_material_contact,
)
from .library import bundled_model, bundled_models

__version__ = "0.1.0"
