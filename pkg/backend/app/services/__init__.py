"""
Numerical engine: quaternion algebra, polynomials, harmonics, sup-norms and
the Bernstein verification harness
"""
from .bernstein import check_inequality, check_theorem, counterexample_report, equality_case
from .extremal import modulus_profile, slice_extrema, sphere_minimum, sup_norm
from .harmonics import almansi, biharmonic_restriction, gegenbauer_u, zonal
from .qpolynomial import derivative, evaluate, is_slice_polynomial, normal, root_spheres, star_mul

__all__ = [
    'almansi',
    'biharmonic_restriction',
    'check_inequality',
    'check_theorem',
    'counterexample_report',
    'derivative',
    'equality_case',
    'evaluate',
    'gegenbauer_u',
    'is_slice_polynomial',
    'modulus_profile',
    'normal',
    'root_spheres',
    'slice_extrema',
    'sphere_minimum',
    'star_mul',
    'sup_norm',
    'zonal',
]
