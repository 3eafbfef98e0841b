"""Quaternion value types.

``Quaternion`` is an immutable element of H with binary64 components. It
supports the ring operations directly; the named operations of the algebra
(inverse, slice projection, axis, ...) live in ``app.services.quaternion_core``.
"""
import math
from dataclasses import dataclass
from typing import Annotated, Any, Iterator, List, Sequence, Tuple, Union

import numpy as np
from pydantic import PlainSerializer, PlainValidator

from ..exceptions import DomainError, InvalidUnitImaginary, NonFiniteQuaternion

Real = Union[int, float]

UNIT_TOLERANCE = 1e-12


@dataclass(frozen=True)
class Quaternion:
    """q = w + x i + y j + z k"""

    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __post_init__(self) -> None:
        for name in ("w", "x", "y", "z"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise NonFiniteQuaternion(f"Quaternion component {name}={value} is not finite")
            object.__setattr__(self, name, value)

    # ------------------------------------------------------------------ construction

    @classmethod
    def real(cls, value: Real) -> "Quaternion":
        return cls(float(value), 0.0, 0.0, 0.0)

    @classmethod
    def from_sequence(cls, values: Sequence[Real]) -> "Quaternion":
        """Build from 1 to 4 components; missing trailing ones are zero"""
        if not 1 <= len(values) <= 4:
            raise ValueError(f"A quaternion has at most four components, got {len(values)}")
        padded = list(values) + [0.0] * (4 - len(values))
        return cls(*padded)

    @classmethod
    def from_array(cls, arr: Any) -> "Quaternion":
        a = np.asarray(arr, dtype=float).reshape(4)
        return cls(float(a[0]), float(a[1]), float(a[2]), float(a[3]))

    @classmethod
    def coerce(cls, value: Any) -> "Quaternion":
        """Accept a Quaternion, a real number or a [w, x, y, z] sequence"""
        if isinstance(value, Quaternion):
            return value
        if isinstance(value, (int, float)) and not isinstance(value, bool):
            return cls.real(value)
        if isinstance(value, np.ndarray):
            return cls.from_array(value)
        if isinstance(value, (list, tuple)):
            if len(value) != 4:
                raise ValueError(f"Quaternion JSON arrays need exactly four entries, got {len(value)}")
            return cls(*value)
        raise TypeError(f"Cannot interpret {value!r} as a quaternion")

    # ------------------------------------------------------------------ views

    def to_list(self) -> List[float]:
        return [self.w, self.x, self.y, self.z]

    def as_array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z], dtype=float)

    @property
    def re(self) -> float:
        return self.w

    @property
    def im(self) -> "Quaternion":
        return Quaternion(0.0, self.x, self.y, self.z)

    @property
    def im_vector(self) -> Tuple[float, float, float]:
        return (self.x, self.y, self.z)

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm2(self) -> float:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def norm(self) -> float:
        return math.sqrt(self.norm2())

    def im_norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def dot(self, other: "Quaternion") -> float:
        """Euclidean inner product on R^4"""
        return self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z

    def is_zero(self) -> bool:
        return self.w == 0.0 and self.x == 0.0 and self.y == 0.0 and self.z == 0.0

    def is_real(self, tol: float = 0.0) -> bool:
        return self.im_norm() <= tol

    def isclose(self, other: "Quaternion", tol: float = UNIT_TOLERANCE) -> bool:
        return (self - other).norm() <= tol

    # ------------------------------------------------------------------ arithmetic

    def __add__(self, other: Any) -> "Quaternion":
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return Quaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "Quaternion":
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return Quaternion(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)

    def __rsub__(self, other: Any) -> "Quaternion":
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other: Any) -> "Quaternion":
        if isinstance(other, Quaternion):
            a, b = self, other
            return Quaternion(
                a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
            )
        if isinstance(other, (int, float)) and not isinstance(other, bool):
            s = float(other)
            return Quaternion(self.w * s, self.x * s, self.y * s, self.z * s)
        return NotImplemented

    def __rmul__(self, other: Any) -> "Quaternion":
        # only real scalars reach here; they commute with everything
        if isinstance(other, (int, float)) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    def __truediv__(self, other: Any) -> "Quaternion":
        if isinstance(other, (int, float)) and not isinstance(other, bool):
            return self * (1.0 / float(other))
        return NotImplemented

    def __abs__(self) -> float:
        return self.norm()

    def __eq__(self, other: Any) -> bool:
        # compares values, so a UnitImaginary equals the plain Quaternion it wraps
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self.to_list() == other.to_list()

    def __hash__(self) -> int:
        return hash((self.w, self.x, self.y, self.z))

    def __iter__(self) -> Iterator[float]:
        return iter(self.to_list())

    def __str__(self) -> str:
        return f"{self.w:+.6g}{self.x:+.6g}i{self.y:+.6g}j{self.z:+.6g}k"


def _lift(value: Any) -> Any:
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return Quaternion.real(value)
    return NotImplemented


@dataclass(frozen=True, eq=False)
class UnitImaginary(Quaternion):
    """Purely imaginary quaternion of modulus one; I^2 = -1"""

    def __post_init__(self) -> None:
        Quaternion.__post_init__(self)
        if abs(self.w) > UNIT_TOLERANCE or abs(self.norm() - 1.0) > UNIT_TOLERANCE:
            raise InvalidUnitImaginary(
                f"{self} is not a unit imaginary (re={self.w:.3g}, |q|={self.norm():.17g})"
            )

    @classmethod
    def from_vector(cls, x: Real, y: Real, z: Real) -> "UnitImaginary":
        n = math.sqrt(float(x) ** 2 + float(y) ** 2 + float(z) ** 2)
        if n == 0.0:
            raise InvalidUnitImaginary("The zero vector has no direction")
        return cls(0.0, x / n, y / n, z / n)

    @classmethod
    def of(cls, q: Quaternion) -> "UnitImaginary":
        return cls(q.w, q.x, q.y, q.z)


@dataclass(frozen=True)
class SlicePoint:
    """alpha + I beta with beta >= 0"""

    alpha: float
    beta: float
    axis: UnitImaginary

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "beta", float(self.beta))
        if self.beta < 0.0:
            raise DomainError(f"SlicePoint needs beta >= 0, got {self.beta}")

    @property
    def is_real(self) -> bool:
        return self.beta == 0.0

    def realize(self) -> Quaternion:
        return Quaternion(self.alpha) + self.axis * self.beta


ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
ZERO = Quaternion(0.0, 0.0, 0.0, 0.0)
QI = UnitImaginary(0.0, 1.0, 0.0, 0.0)
QJ = UnitImaginary(0.0, 0.0, 1.0, 0.0)
QK = UnitImaginary(0.0, 0.0, 0.0, 1.0)


def _serialize(q: Quaternion) -> List[float]:
    return q.to_list()


# pydantic field type: JSON array [w, x, y, z]
QuaternionField = Annotated[
    Quaternion,
    PlainValidator(Quaternion.coerce),
    PlainSerializer(_serialize, return_type=List[float]),
]
