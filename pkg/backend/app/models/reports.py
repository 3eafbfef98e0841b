"""Result models of the extremal engine and the verification harness.

All reports are pydantic models so the CLI can emit them as JSON and read
them back unchanged.
"""
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .polynomial import RootSphere
from .quaternion import QuaternionField


class SliceExtrema(BaseModel):
    """Extrema of |P| on the 2-sphere S_{alpha + I beta} of S^3"""
    model_config = ConfigDict(frozen=True)

    alpha: float
    beta: float
    max: float
    argmax_axis: Optional[QuaternionField] = None
    min: float
    argmin_axis: Optional[QuaternionField] = None
    constant: bool
    # A(y), B(y) and v = A(y) conj(B(y)) on the slice
    a: QuaternionField
    b: QuaternionField
    v: QuaternionField


class ExtremumReport(BaseModel):
    """Global maximum of |P| on S^3"""

    value: float = Field(ge=0.0)
    argmax: QuaternionField
    alpha_star: float = Field(ge=-1.0, le=1.0)
    constant_on_sphere: bool
    profile: Optional[List[Tuple[float, float]]] = None
    grid_value: float = 0.0
    grid_size: int = 0
    bracket_width: float = 0.0


class SphereMinimum(BaseModel):
    """Global minimum of |P| on S^3"""

    value: float = Field(ge=0.0)
    argmin: QuaternionField
    alpha_star: float = Field(ge=-1.0, le=1.0)


class ProfileRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    alpha: float
    slice_max: float
    slice_min: float


class HypothesisCheck(BaseModel):
    name: str
    satisfied: bool
    margin: float
    witness: Optional[QuaternionField] = None
    secondary_witness: Optional[QuaternionField] = None
    detail: Optional[str] = None


class ProbeResult(BaseModel):
    """|P'| versus |Q'| at an explicitly requested point"""

    point: QuaternionField
    lhs: float
    rhs: float
    margin: float
    satisfied: bool


class EqualityVerdict(BaseModel):
    """Equality-case diagnostics of Bernstein's inequality"""

    is_monomial: bool
    witness: Optional[QuaternionField] = None
    ratio: float
    contradiction: bool


class CheckReport(BaseModel):
    """Verdict of a Bernstein-theorem or inequality check"""

    kind: str
    hypotheses: List[HypothesisCheck] = Field(default_factory=list)
    conclusion_satisfied: bool
    conclusion_margin: float
    worst_point: Optional[QuaternionField] = None
    slice_axis: Optional[QuaternionField] = None
    probes: List[ProbeResult] = Field(default_factory=list)
    norms: Dict[str, float] = Field(default_factory=dict)
    samples: Dict[str, int] = Field(default_factory=dict)
    root_spheres: List[RootSphere] = Field(default_factory=list)
    near_equality: bool = False
    equality: Optional[EqualityVerdict] = None
    off_slice_margin: Optional[float] = None
    notes: List[str] = Field(default_factory=list)

    @property
    def hypotheses_satisfied(self) -> bool:
        return all(h.satisfied for h in self.hypotheses)

    def hypothesis(self, name: str) -> HypothesisCheck:
        for h in self.hypotheses:
            if h.name == name:
                return h
        raise KeyError(name)


class CounterexampleReport(BaseModel):
    """Reproduction of the counterexample pair P = (X-i)(X-j)(X-k), Q = 2X(X-i)(X-j)"""

    p_coefficients_match: bool
    q_coefficients_match: bool
    dp_coefficients_match: bool
    dq_coefficients_match: bool
    y: QuaternionField
    y_norm: float
    dp_squared: float
    dq_squared: float
    dp_squared_expected: float
    dq_squared_expected: float
    sampled_margin: float
    samples: int
    check: CheckReport
    passed: bool


class SweepSummary(BaseModel):
    """Aggregate of a seeded Bernstein-inequality sweep"""

    count: int
    seed: int
    max_degree: int
    min_margin: float
    min_relative_margin: float
    max_ratio: float
    failures: int
    worst_index: int
    margins: List[float] = Field(default_factory=list)


class EvaluationResult(BaseModel):
    """P(x) for one point"""

    point: QuaternionField
    value: QuaternionField


class AlmansiReport(BaseModel):
    """Coefficients of P = A - conj(x) B, optionally evaluated at a point"""

    degree: int
    A: List[QuaternionField]
    B: List[QuaternionField]
    point: Optional[QuaternionField] = None
    a_value: Optional[QuaternionField] = None
    b_value: Optional[QuaternionField] = None
    p_value: Optional[QuaternionField] = None


class ZonalRow(BaseModel):
    k: int
    point: QuaternionField
    value: float


class ZonalTable(BaseModel):
    k_max: int
    rows: List[ZonalRow] = Field(default_factory=list)


class ProfileTable(BaseModel):
    rows: List[ProfileRow] = Field(default_factory=list)


class NormReport(BaseModel):
    """Sup-norm, with the sphere minimum when requested"""

    maximum: ExtremumReport
    minimum: Optional[SphereMinimum] = None
