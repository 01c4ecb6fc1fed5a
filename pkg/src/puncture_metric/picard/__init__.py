from .bound import lambda_closed_form_radius, picard_radius_bound
from .coefficients import exp_reciprocal_coefficients, reciprocal_identity_residual
from .entities import ExpCoefficients, RadiusBound

__all__ = [
    "lambda_closed_form_radius",
    "picard_radius_bound",
    "exp_reciprocal_coefficients",
    "reciprocal_identity_residual",
    "ExpCoefficients",
    "RadiusBound",
]
