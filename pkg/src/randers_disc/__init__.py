"""Numerical sufficiency checks for the isoperimetric problem on the
Randers Poincare disc: metric construction, length/area functionals under
four volume forms, extremality certificates, and perturbation trials."""

from .config import RandersConfig, VolumeForm
from .curves import Circle, CurveSample, PolarFourierCurve, check_admissible, require_admissible
from .errors import (
    AdmissibilityError,
    BracketingError,
    ChartSingularityError,
    DomainError,
    ExhaustionError,
    IntegrationError,
    NumericalError,
    ProjectionError,
    QuadratureError,
)
from .functionals import FunctionalValue, QuadratureGrid, area, circle_closed_forms, length
from .isoperimetry import (
    PerturbationSpec,
    TrialResult,
    deficit_value,
    generate_perturbations,
    isoperimetric_deficit,
    match_length,
    run_trials,
)
from .metric import (
    ChristoffelSymbols,
    FundamentalTensor,
    alpha_norm,
    beta_covector,
    beta_value,
    christoffel,
    disc_grid,
    finsler_norm,
    fundamental_tensor,
    potential,
    sigma_alpha,
    volume_density,
    yasuda_shimada_residual,
)
from .variational import (
    ConjugateScanReport,
    ExtremalityCertificate,
    JacobiCoefficients,
    LagrangeSystem,
    VariationProbe,
    build_certificate,
    conjugate_scan,
    constraint_functional,
    constraint_vector,
    el_residual,
    h1_along,
    hessian_blocks,
    hessian_velocity_closed,
    hessian_velocity_form,
    jacobi_coeffs,
    lambda_for_circle,
    normality,
    project_probe,
    second_variation,
    solve_lambda_numeric,
    weierstrass_E,
    weierstrass_closed,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityError",
    "BracketingError",
    "ChartSingularityError",
    "ChristoffelSymbols",
    "Circle",
    "ConjugateScanReport",
    "CurveSample",
    "DomainError",
    "ExhaustionError",
    "ExtremalityCertificate",
    "FunctionalValue",
    "FundamentalTensor",
    "IntegrationError",
    "JacobiCoefficients",
    "LagrangeSystem",
    "NumericalError",
    "PerturbationSpec",
    "PolarFourierCurve",
    "ProjectionError",
    "QuadratureError",
    "QuadratureGrid",
    "RandersConfig",
    "TrialResult",
    "VariationProbe",
    "VolumeForm",
    "alpha_norm",
    "area",
    "beta_covector",
    "beta_value",
    "build_certificate",
    "check_admissible",
    "christoffel",
    "circle_closed_forms",
    "conjugate_scan",
    "constraint_functional",
    "constraint_vector",
    "deficit_value",
    "disc_grid",
    "el_residual",
    "finsler_norm",
    "fundamental_tensor",
    "generate_perturbations",
    "h1_along",
    "hessian_blocks",
    "hessian_velocity_closed",
    "hessian_velocity_form",
    "isoperimetric_deficit",
    "jacobi_coeffs",
    "lambda_for_circle",
    "length",
    "match_length",
    "normality",
    "potential",
    "project_probe",
    "require_admissible",
    "run_trials",
    "second_variation",
    "sigma_alpha",
    "solve_lambda_numeric",
    "volume_density",
    "weierstrass_E",
    "weierstrass_closed",
    "yasuda_shimada_residual",
]
