"""
Scalar arithmetics for the algebra: exact rationals and 64-bit floats, and complex numbers over either
"""
import math
import sys
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from bqalg.errors import (
    BackendMismatchError,
    NonFiniteValueError,
    UnsupportedBackendError,
    ZeroDivisorError,
)

# ExactScalar is a reduced Fraction (denominator > 0); ApproxScalar is a finite float
Scalar = Union[Fraction, float]

_DBL_MIN = sys.float_info.min
_SCALE_UP = 53
_SCALE_DOWN = -27


class Backend(str, Enum):
    """Scalar arithmetic backends"""
    EXACT = "exact"
    APPROX = "approx"


def backend_of(value: Scalar) -> Backend:
    return Backend.APPROX if isinstance(value, float) else Backend.EXACT


def coerce_scalar(value: Union[int, float, str, Fraction], backend: Backend) -> Scalar:
    """Convert a Python number or numeric text into a backend scalar"""
    if backend is Backend.EXACT:
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError, OverflowError) as e:
            raise UnsupportedBackendError(
                f"cannot represent {value!r} exactly", details={"value": str(value)}
            ) from e
    try:
        result = float(value)
    except (ValueError, ZeroDivisionError, OverflowError) as e:
        raise UnsupportedBackendError(
            f"cannot represent {value!r} as a float", details={"value": str(value)}
        ) from e
    if not math.isfinite(result):
        raise NonFiniteValueError("approx scalar is not finite", details={"value": str(value)})
    return result


def format_scalar(value: Scalar) -> str:
    """Rational text `p/q` | `p`, or the shortest round-tripping decimal"""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _is_negative(value: Scalar) -> bool:
    if isinstance(value, float):
        return math.copysign(1.0, value) < 0
    return value < 0


def require_finite(value: Scalar, operation: str) -> Scalar:
    """Pass exact values through; raise NonFiniteValue for an inf or nan float"""
    if isinstance(value, float) and not math.isfinite(value):
        raise NonFiniteValueError(
            f"approx {operation} produced a non-finite value", details={"operation": operation, "value": repr(value)}
        )
    return value


def common_denominator(values: Sequence[Fraction]) -> Tuple[List[int], int]:
    """Integer numerators over the least common denominator of the values"""
    denominator = math.lcm(*(v.denominator for v in values))
    return [v.numerator * (denominator // v.denominator) for v in values], denominator


@dataclass(frozen=True, slots=True)
class ComplexScalar:
    """A complex number re + I*im over one backend"""

    re: Scalar
    im: Scalar

    def __post_init__(self):
        re, im = self.re, self.im
        if isinstance(re, int):
            re = Fraction(re)
            object.__setattr__(self, "re", re)
        if isinstance(im, int):
            im = Fraction(im)
            object.__setattr__(self, "im", im)
        re_float = isinstance(re, float)
        if re_float != isinstance(im, float):
            raise BackendMismatchError(
                "complex components use different backends",
                details={"re": type(re).__name__, "im": type(im).__name__},
            )
        if re_float and not (math.isfinite(re) and math.isfinite(im)):
            raise NonFiniteValueError(
                "approx operation produced a non-finite value",
                details={"re": repr(re), "im": repr(im)},
            )

    # Constructors

    @classmethod
    def of(cls, re, im=0, backend: Backend = Backend.EXACT) -> "ComplexScalar":
        return cls(coerce_scalar(re, backend), coerce_scalar(im, backend))

    @classmethod
    def zero(cls, backend: Backend = Backend.EXACT) -> "ComplexScalar":
        return cls.of(0, 0, backend)

    @classmethod
    def one(cls, backend: Backend = Backend.EXACT) -> "ComplexScalar":
        return cls.of(1, 0, backend)

    @classmethod
    def unit_imaginary(cls, backend: Backend = Backend.EXACT) -> "ComplexScalar":
        """The commuting imaginary unit I"""
        return cls.of(0, 1, backend)

    @property
    def backend(self) -> Backend:
        return backend_of(self.re)

    # Arithmetic

    def _check(self, other: "ComplexScalar") -> None:
        if isinstance(self.re, float) != isinstance(other.re, float):
            raise BackendMismatchError(
                "operands use different backends",
                details={"left": self.backend.value, "right": other.backend.value},
            )

    def __add__(self, other: "ComplexScalar") -> "ComplexScalar":
        self._check(other)
        return ComplexScalar(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "ComplexScalar") -> "ComplexScalar":
        self._check(other)
        return ComplexScalar(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "ComplexScalar":
        return ComplexScalar(-self.re, -self.im)

    def __mul__(self, other: "ComplexScalar") -> "ComplexScalar":
        self._check(other)
        return ComplexScalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def scale(self, factor: Scalar) -> "ComplexScalar":
        """Multiply by a real backend scalar"""
        return ComplexScalar(self.re * factor, self.im * factor)

    def conjugate(self) -> "ComplexScalar":
        return ComplexScalar(self.re, -self.im)

    def abs_squared(self) -> Scalar:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "ComplexScalar":
        denominator = require_finite(self.abs_squared(), "complex inverse")
        if denominator == 0:
            raise ZeroDivisorError("complex scalar zero has no inverse")
        return ComplexScalar(self.re / denominator, -self.im / denominator)

    def __truediv__(self, other: "ComplexScalar") -> "ComplexScalar":
        return self * other.inverse()

    def square(self) -> "ComplexScalar":
        return self * self

    def is_exact_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def magnitude(self) -> Scalar:
        """|re| + |im|, the per-component scale measure"""
        return abs(self.re) + abs(self.im)

    def to_backend(self, backend: Backend) -> "ComplexScalar":
        if backend is self.backend:
            return self
        if backend is Backend.APPROX:
            return ComplexScalar(float(self.re), float(self.im))
        return ComplexScalar(Fraction(self.re), Fraction(self.im))

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        sign = "-" if _is_negative(self.im) else "+"
        return f"({format_scalar(self.re)}{sign}{format_scalar(abs(self.im))}I)"


@dataclass(frozen=True)
class Tolerance:
    """Zero-test tolerance: exactly 0 on the exact backend"""

    epsilon: float
    backend: Backend = Backend.EXACT

    def __post_init__(self):
        if self.epsilon < 0:
            raise ValueError("tolerance epsilon must be nonnegative")
        if self.backend is Backend.EXACT and self.epsilon != 0:
            raise UnsupportedBackendError(
                "exact backend requires epsilon = 0", details={"epsilon": self.epsilon}
            )

    @classmethod
    def for_backend(cls, backend: Backend, epsilon: Optional[float] = None) -> "Tolerance":
        if backend is Backend.EXACT:
            return cls(0.0, Backend.EXACT)
        if epsilon is None:
            from bqalg.config import settings
            epsilon = settings.approx_tolerance
        return cls(float(epsilon), Backend.APPROX)

    def is_zero(self, value: Scalar, scale: float = 1.0) -> bool:
        if self.backend is Backend.EXACT:
            return value == 0
        require_finite(value, "zero test")
        return abs(value) <= self.epsilon * require_finite(scale, "zero-test scale")


def complex_is_zero(z: ComplexScalar, tol: Tolerance, scale: float = 1.0) -> bool:
    """Exact: both parts are 0. Approx: both |parts| <= epsilon * scale."""
    if require_finite(scale, "zero-test scale") < 1:
        raise ValueError("scale must be at least 1")
    if tol.backend is not z.backend:
        raise BackendMismatchError(
            "tolerance and value use different backends",
            details={"tolerance": tol.backend.value, "value": z.backend.value},
        )
    return tol.is_zero(z.re, scale) and tol.is_zero(z.im, scale)


def complex_sqrt_principal(z: ComplexScalar) -> ComplexScalar:
    """Principal square root: Re(w) > 0, or Re(w) = 0 and Im(w) >= 0"""
    if z.backend is not Backend.APPROX:
        raise UnsupportedBackendError("complex_sqrt_principal runs on the approx backend only")
    x, y = z.re, z.im
    if x == 0.0 and y == 0.0:
        return ComplexScalar(0.0, 0.0)
    ax, ay = math.fabs(x), math.fabs(y)
    if ax < _DBL_MIN and ay < _DBL_MIN:
        # Subnormal inputs: rescale so hypot and the division keep full precision
        ax = math.ldexp(ax, _SCALE_UP)
        s = math.ldexp(math.sqrt(ax + math.hypot(ax, math.ldexp(ay, _SCALE_UP))), _SCALE_DOWN)
    else:
        # ax/8 and ay/8 keep hypot from overflowing near the float maximum
        ax /= 8.0
        s = 2.0 * math.sqrt(ax + math.hypot(ax, ay / 8.0))
    d = ay / (2.0 * s)
    # a signed zero imaginary part still selects the upper half plane
    sign = 1.0 if y >= 0.0 else -1.0
    if x >= 0.0:
        real, imag = s, sign * d
    else:
        real, imag = d, sign * s
    return ComplexScalar(real, imag)


def rational_sqrt(value: Fraction) -> Optional[Fraction]:
    """Nonnegative rational square root, or None when value is not a rational square"""
    if value < 0:
        return None
    numerator, denominator = value.numerator, value.denominator
    root_n, root_d = math.isqrt(numerator), math.isqrt(denominator)
    if root_n * root_n != numerator or root_d * root_d != denominator:
        return None
    return Fraction(root_n, root_d)


def rational_complex_sqrt(z: ComplexScalar) -> Optional[ComplexScalar]:
    """Principal square root over Q(I), or None when z is not a perfect square there.

    With w = p + qI and w^2 = a + bI: p^2 - q^2 = a, 2pq = b, and p^2 + q^2 = |z|.
    """
    if z.backend is not Backend.EXACT:
        raise UnsupportedBackendError("rational_complex_sqrt runs on the exact backend only")
    a, b = z.re, z.im
    modulus = rational_sqrt(a * a + b * b)
    if modulus is None:
        return None
    p = rational_sqrt((modulus + a) / 2)
    if p is None:
        return None
    if p != 0:
        q = b / (2 * p)
    else:
        q = rational_sqrt((modulus - a) / 2)
        if q is None:
            return None
    return ComplexScalar(p, q)
