"""Polynomial value types over H.

``QPolynomial`` represents P(X) = sum_k X^k a_k with right coefficients;
``ZonalPolynomial`` represents sum_k Z_k(x) c_k with the real zonal harmonics
of pole 1. Both are immutable and keep a float array view of their
coefficients for the vectorized kernels.
"""
from dataclasses import dataclass, field
from typing import Any, Iterable, List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from .quaternion import ONE, ZERO, Quaternion, QuaternionField


def _canonical(coeffs: Iterable[Any]) -> Tuple[Quaternion, ...]:
    out = [Quaternion.coerce(c) for c in coeffs]
    # exact-zero trimming only; a tolerance trim would silently change the degree
    while len(out) > 1 and out[-1].is_zero():
        out.pop()
    if not out:
        out = [ZERO]
    return tuple(out)


@dataclass(frozen=True)
class QPolynomial:
    """P(X) = sum_{k=0}^{d} X^k a_k, index k holds a_k"""

    coeffs: Tuple[Quaternion, ...]
    _array: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        coeffs = _canonical(self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        arr = np.array([c.to_list() for c in coeffs], dtype=float)
        arr.setflags(write=False)
        object.__setattr__(self, "_array", arr)

    # ------------------------------------------------------------------ construction

    @classmethod
    def of(cls, *coeffs: Any) -> "QPolynomial":
        return cls(tuple(coeffs))

    @classmethod
    def from_array(cls, arr: Any) -> "QPolynomial":
        a = np.asarray(arr, dtype=float).reshape(-1, 4)
        return cls(tuple(Quaternion.from_array(row) for row in a))

    @classmethod
    def monomial(cls, degree: int, coefficient: Any = ONE) -> "QPolynomial":
        """X^d a"""
        if degree < 0:
            raise ValueError(f"Monomial degree must be >= 0, got {degree}")
        return cls(tuple([ZERO] * degree + [Quaternion.coerce(coefficient)]))

    @classmethod
    def constant(cls, value: Any) -> "QPolynomial":
        return cls((Quaternion.coerce(value),))

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls((ZERO,))

    # ------------------------------------------------------------------ views

    @property
    def array(self) -> np.ndarray:
        """(d+1, 4) read-only coefficient array"""
        return self._array

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0].is_zero()

    def is_constant(self) -> bool:
        return len(self.coeffs) == 1

    def leading(self) -> Quaternion:
        return self.coeffs[-1]

    def has_real_coefficients(self) -> bool:
        return bool(np.all(self._array[:, 1:] == 0.0))

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Quaternion:
        return self.coeffs[k]

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        n = max(len(self), len(other))
        a = np.zeros((n, 4))
        a[: len(self)] += self._array
        a[: len(other)] += other._array
        return QPolynomial.from_array(a)

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        n = max(len(self), len(other))
        a = np.zeros((n, 4))
        a[: len(self)] += self._array
        a[: len(other)] -= other._array
        return QPolynomial.from_array(a)

    def __neg__(self) -> "QPolynomial":
        return QPolynomial.from_array(-self._array)

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero() and len(self.coeffs) > 1:
                continue
            power = "" if k == 0 else ("X" if k == 1 else f"X^{k}")
            terms.append(f"{power}({c})" if power else f"({c})")
        return " + ".join(reversed(terms))


@dataclass(frozen=True)
class ZonalPolynomial:
    """sum_{k=0}^{m} Z_k(x) c_k with real-valued zonal harmonics Z_k of pole 1"""

    coeffs: Tuple[Quaternion, ...]
    _array: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        coeffs = tuple(Quaternion.coerce(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        arr = np.array([c.to_list() for c in coeffs], dtype=float).reshape(-1, 4)
        arr.setflags(write=False)
        object.__setattr__(self, "_array", arr)

    @property
    def array(self) -> np.ndarray:
        return self._array

    def degree(self) -> int:
        """Index of the last nonzero coefficient, -1 for the empty/zero expansion"""
        nonzero = [k for k, c in enumerate(self.coeffs) if not c.is_zero()]
        return nonzero[-1] if nonzero else -1

    def is_zero(self) -> bool:
        return self.degree() < 0


@dataclass(frozen=True)
class AlmansiPair:
    """P(x) = A(x) - conj(x) B(x)"""

    A: ZonalPolynomial
    B: ZonalPolynomial
    source: QPolynomial


class RootSphere(BaseModel):
    """Circular set {alpha + I beta : I in S} carrying zeros of the normal polynomial"""
    model_config = ConfigDict(frozen=True)

    alpha: float
    beta: float = Field(ge=0.0)
    multiplicity: int = Field(ge=1)

    @property
    def modulus(self) -> float:
        return float(np.hypot(self.alpha, self.beta))

    @property
    def is_real(self) -> bool:
        return self.beta == 0.0


class PolynomialDocument(BaseModel):
    """JSON form {"coeffs": [[w, x, y, z], ...]}, index = power"""

    coeffs: List[QuaternionField]

    @classmethod
    def from_polynomial(cls, p: "QPolynomial") -> "PolynomialDocument":
        return cls(coeffs=list(p.coeffs))

    def to_polynomial(self) -> QPolynomial:
        return QPolynomial(tuple(self.coeffs))
