"""Exact-arithmetic Dunkl-Clifford analysis.

Reflection-group differential-difference operators acting on Clifford-valued
polynomials, kernel bases (monogenics and harmonics), two Clifford-Gegenbauer
families, and exact orthogonality via symbolic base constants.  Everything is
computed over the rationals; identity checks are exact zero tests.
"""
from .clifford import CliffordElement
from .polys import MVPoly, RadialScaledFunction
from .roots import RootSystem, MultiplicityReport, preset, reflection_matrix
from .operators import (
    OperatorContext,
    dunkl_derivative,
    dunkl_laplacian,
    dunkl_dirac,
    euler,
    angular_dirac,
)
from .monogenics import (
    MonogenicBasis,
    HarmonicBasis,
    monogenic_basis,
    harmonic_basis,
    fischer_project,
    kelvin_invert,
)
from .jacobi import UniPoly, jacobi_polynomial, pochhammer
from .gegenbauer import GegenbauerPoly, d_alpha, gegenbauer, closed_form
from .integrals import (
    ClassValue,
    GramMatrix,
    sphere_integral,
    ball_inner,
    bilinear_form,
    gram,
    verify_monogenic_orthogonality,
)

__all__ = [
    "CliffordElement",
    "MVPoly",
    "RadialScaledFunction",
    "RootSystem",
    "MultiplicityReport",
    "preset",
    "reflection_matrix",
    "OperatorContext",
    "dunkl_derivative",
    "dunkl_laplacian",
    "dunkl_dirac",
    "euler",
    "angular_dirac",
    "MonogenicBasis",
    "HarmonicBasis",
    "monogenic_basis",
    "harmonic_basis",
    "fischer_project",
    "kelvin_invert",
    "UniPoly",
    "jacobi_polynomial",
    "pochhammer",
    "GegenbauerPoly",
    "d_alpha",
    "gegenbauer",
    "closed_form",
    "ClassValue",
    "GramMatrix",
    "sphere_integral",
    "ball_inner",
    "bilinear_form",
    "gram",
    "verify_monogenic_orthogonality",
]

__version__ = "0.1.0"
