"""Closed-form quantization of the Milson and Gendenshtein potential family,
with Romanovski-Routh polynomial machinery, Darboux partners, and an
independent Numerov verification oracle."""

from ._kernels import BACKEND as KERNEL_BACKEND
from .geometry import (
    PotentialSpec,
    TangentPolySpec,
    VariableMap,
    bose_invariant_eval,
    build_variable_map,
    choose_x_max,
    potential_eval,
    schwarzian_eval,
    stevenson_xi,
    tangent_eval,
)
from .oracle import EigenEstimate, Grid1D, adaptive_quadrature, count_sign_changes, numerov_spectrum
from .routh import (
    ComplexIndex,
    RealPolynomial,
    RouthPolynomial,
    WeightParams,
    discriminant_order2,
    inner_product,
    jacobi_complex_eval,
    ode_residual,
    real_roots,
    routh_hypergeometric_eval,
    routh_polynomial,
    routh_rodrigues,
    weight_eval,
)
from .spectral import (
    AehSolution,
    BoundState,
    LambdaBranch,
    Spectrum,
    aeh_solution,
    assemble_eigenfunction,
    enumerate_bound_spectrum,
    gendenshtein_params,
    lambda_of_energy,
    milson_sigma_rho,
    nodeless_scan,
    pinned_convention,
    quartic_lambda_roots,
    rcsle_residual,
    stevenson_identity_check,
)
from .darboux import (
    FactorizationFunction,
    PartnerPotentialGrid,
    partner_potential,
    symmetric_irregular_solution,
)

__version__ = "0.1.0"
