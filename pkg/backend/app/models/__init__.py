# Models package initialization

from .quaternion import (
    Quaternion,
    UnitImaginary,
    SlicePoint,
    QuaternionField,
    ONE,
    ZERO,
    QI,
    QJ,
    QK,
)

from .polynomial import (
    QPolynomial,
    ZonalPolynomial,
    AlmansiPair,
    RootSphere,
    PolynomialDocument,
)

from .reports import (
    SliceExtrema,
    ExtremumReport,
    SphereMinimum,
    ProfileRow,
    HypothesisCheck,
    ProbeResult,
    EqualityVerdict,
    CheckReport,
    CounterexampleReport,
    SweepSummary,
)

# Export all models for easy importing
__all__ = [
    # Quaternion values
    'Quaternion',
    'UnitImaginary',
    'SlicePoint',
    'QuaternionField',
    'ONE',
    'ZERO',
    'QI',
    'QJ',
    'QK',

    # Polynomials
    'QPolynomial',
    'ZonalPolynomial',
    'AlmansiPair',
    'RootSphere',
    'PolynomialDocument',

    # Reports
    'SliceExtrema',
    'ExtremumReport',
    'SphereMinimum',
    'ProfileRow',
    'HypothesisCheck',
    'ProbeResult',
    'EqualityVerdict',
    'CheckReport',
    'CounterexampleReport',
    'SweepSummary',
]
