"""
Real quaternions w + xi + yj + zk over a backend scalar
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from bqalg.algebra.backends import (
    Backend,
    Scalar,
    backend_of,
    coerce_scalar,
    common_denominator,
    format_scalar,
    require_finite,
)
from bqalg.errors import BackendMismatchError, ZeroDivisorError


@dataclass(frozen=True, slots=True)
class Quaternion:
    """Real quaternion; also the real or imaginary part of a biquaternion"""

    w: Scalar
    x: Scalar
    y: Scalar
    z: Scalar

    def __post_init__(self):
        for name in ("w", "x", "y", "z"):
            value = getattr(self, name)
            if isinstance(value, int):
                object.__setattr__(self, name, Fraction(value))

    @classmethod
    def of(cls, w=0, x=0, y=0, z=0, backend: Backend = Backend.EXACT) -> "Quaternion":
        return cls(*(coerce_scalar(c, backend) for c in (w, x, y, z)))

    @classmethod
    def zero(cls, backend: Backend = Backend.EXACT) -> "Quaternion":
        return cls.of(backend=backend)

    @classmethod
    def one(cls, backend: Backend = Backend.EXACT) -> "Quaternion":
        return cls.of(1, backend=backend)

    @property
    def backend(self) -> Backend:
        return backend_of(self.w)

    def components(self) -> Tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.w, self.x, self.y, self.z)

    def _check(self, other: "Quaternion") -> None:
        if isinstance(self.w, float) != isinstance(other.w, float):
            raise BackendMismatchError(
                "quaternions use different backends",
                details={"left": self.backend.value, "right": other.backend.value},
            )

    def __add__(self, other: "Quaternion") -> "Quaternion":
        self._check(other)
        return Quaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        self._check(other)
        return Quaternion(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        """Hamilton product: i^2 = j^2 = k^2 = ijk = -1"""
        self._check(other)
        if isinstance(self.w, float):
            return Quaternion(*hamilton(self.components(), other.components()))
        left, d1 = common_denominator(self.components())
        right, d2 = common_denominator(other.components())
        denominator = d1 * d2
        return Quaternion(*(Fraction(n, denominator) for n in hamilton(left, right)))

    def scale(self, factor: Scalar) -> "Quaternion":
        return Quaternion(self.w * factor, self.x * factor, self.y * factor, self.z * factor)

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> Scalar:
        """Sum of squares w^2 + x^2 + y^2 + z^2 (no square root)"""
        return quaternion_norm(self)

    def inverse(self) -> "Quaternion":
        n = self.norm()
        if n == 0:
            raise ZeroDivisorError("the zero quaternion has no inverse")
        return self.conjugate().scale(1 / n if isinstance(n, float) else Fraction(1) / n)

    def is_pure(self) -> bool:
        return self.w == 0

    def is_zero(self) -> bool:
        return self.w == 0 and self.x == 0 and self.y == 0 and self.z == 0

    def vector(self) -> "Quaternion":
        """The pure part xi + yj + zk"""
        return Quaternion(coerce_scalar(0, self.backend), self.x, self.y, self.z)

    def __str__(self) -> str:
        w, x, y, z = (format_scalar(c) for c in self.components())
        return f"{w} + {x}i + {y}j + {z}k"


def hamilton(a: Sequence, b: Sequence) -> Tuple:
    """Hamilton product on raw (w, x, y, z) coordinates of any numeric type"""
    w1, x1, y1, z1 = a
    w2, x2, y2, z2 = b
    return (
        w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
        w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
        w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
        w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
    )


def inner_product(a: Quaternion, b: Quaternion) -> Scalar:
    """4-space dot product of two quaternions"""
    a._check(b)
    return require_finite(a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z, "inner product")


def quaternion_norm(q: Quaternion) -> Scalar:
    return require_finite(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z, "quaternion norm")
