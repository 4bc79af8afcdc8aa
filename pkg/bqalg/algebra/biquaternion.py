"""
Biquaternions (complexified quaternions) and their ring operations

Three representations are supported:
  - Cartesian:  q = W + Xi + Yj + Zk with W, X, Y, Z complex (canonical)
  - pair:       q = q_r + I q_i with q_r, q_i real quaternions
  - scalar/axis q = A + xi B with A, B complex and xi a root of -1
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

import structlog

from bqalg.algebra.backends import (
    Backend,
    ComplexScalar,
    Scalar,
    Tolerance,
    common_denominator,
    complex_is_zero,
    complex_sqrt_principal,
    rational_complex_sqrt,
    require_finite,
)
from bqalg.algebra.quaternion import Quaternion, hamilton, inner_product, quaternion_norm
from bqalg.errors import (
    AxisUndefinedError,
    BackendMismatchError,
    IrrationalAxisError,
    NotZeroDivisorError,
    ZeroDivisorError,
    ZeroInputError,
    ZeroVectorPartError,
)

logger = structlog.get_logger()

ComplexLike = Union[ComplexScalar, int, float, str, Tuple[object, object]]


def _complex(value: ComplexLike, backend: Backend) -> ComplexScalar:
    if isinstance(value, ComplexScalar):
        return value.to_backend(backend)
    if isinstance(value, tuple):
        return ComplexScalar.of(value[0], value[1], backend)
    return ComplexScalar.of(value, 0, backend)


@dataclass(frozen=True, slots=True)
class Biquaternion:
    """q = W + Xi + Yj + Zk with complex W, X, Y, Z; I commutes with i, j, k"""

    W: ComplexScalar
    X: ComplexScalar
    Y: ComplexScalar
    Z: ComplexScalar

    def __post_init__(self):
        approx = isinstance(self.W.re, float)
        for c in (self.X, self.Y, self.Z):
            if isinstance(c.re, float) != approx:
                raise BackendMismatchError("biquaternion components use different backends")

    @classmethod
    def of(cls, W: ComplexLike = 0, X: ComplexLike = 0, Y: ComplexLike = 0, Z: ComplexLike = 0,
           backend: Backend = Backend.EXACT) -> "Biquaternion":
        return cls(*(_complex(c, backend) for c in (W, X, Y, Z)))

    @classmethod
    def zero(cls, backend: Backend = Backend.EXACT) -> "Biquaternion":
        return cls.of(backend=backend)

    @classmethod
    def one(cls, backend: Backend = Backend.EXACT) -> "Biquaternion":
        return cls.of(1, backend=backend)

    @classmethod
    def imaginary_unit(cls, backend: Backend = Backend.EXACT) -> "Biquaternion":
        """The central unit I as a biquaternion"""
        return cls.of((0, 1), backend=backend)

    @classmethod
    def from_pair(cls, real_part: Quaternion, imag_part: Quaternion) -> "Biquaternion":
        """Assemble q_r + I q_i"""
        return cls(
            ComplexScalar(real_part.w, imag_part.w),
            ComplexScalar(real_part.x, imag_part.x),
            ComplexScalar(real_part.y, imag_part.y),
            ComplexScalar(real_part.z, imag_part.z),
        )

    @classmethod
    def from_quaternion(cls, q: Quaternion) -> "Biquaternion":
        return cls.from_pair(q, Quaternion.zero(q.backend))

    @property
    def backend(self) -> Backend:
        return self.W.backend

    def components(self) -> Tuple[ComplexScalar, ComplexScalar, ComplexScalar, ComplexScalar]:
        return (self.W, self.X, self.Y, self.Z)

    def real_part(self) -> Quaternion:
        return Quaternion(self.W.re, self.X.re, self.Y.re, self.Z.re)

    def imag_part(self) -> Quaternion:
        return Quaternion(self.W.im, self.X.im, self.Y.im, self.Z.im)

    def vector_part(self) -> "Biquaternion":
        return Biquaternion(ComplexScalar.zero(self.backend), self.X, self.Y, self.Z)

    def is_exact_zero(self) -> bool:
        return all(c.is_exact_zero() for c in self.components())

    def __add__(self, other: "Biquaternion") -> "Biquaternion":
        return add(self, other)

    def __sub__(self, other: "Biquaternion") -> "Biquaternion":
        return subtract(self, other)

    def __neg__(self) -> "Biquaternion":
        return negate(self)

    def __mul__(self, other: "Biquaternion") -> "Biquaternion":
        return multiply(self, other)

    def __str__(self) -> str:
        from bqalg.algebra.text import format_biquaternion
        return format_biquaternion(self)


@dataclass(frozen=True)
class QuaternionPairView:
    """q = q_r + I q_i"""
    real_part: Quaternion
    imag_part: Quaternion


@dataclass(frozen=True)
class ScalarAxisForm:
    """q = A + axis*B; axis is None only for the opted-in zero-vector case"""
    A: ComplexScalar
    B: ComplexScalar
    axis: Optional[Biquaternion]

    def recompose(self) -> Biquaternion:
        if self.axis is None:
            return Biquaternion.of(self.A, backend=self.A.backend)
        return add(Biquaternion.of(self.A, backend=self.A.backend), scalar_multiply(self.B, self.axis))


def _require_same_backend(a: Biquaternion, b: Biquaternion) -> None:
    if isinstance(a.W.re, float) != isinstance(b.W.re, float):
        raise BackendMismatchError(
            "operands use different backends",
            details={"left": a.backend.value, "right": b.backend.value},
        )


def add(a: Biquaternion, b: Biquaternion) -> Biquaternion:
    _require_same_backend(a, b)
    return Biquaternion(a.W + b.W, a.X + b.X, a.Y + b.Y, a.Z + b.Z)


def subtract(a: Biquaternion, b: Biquaternion) -> Biquaternion:
    _require_same_backend(a, b)
    return Biquaternion(a.W - b.W, a.X - b.X, a.Y - b.Y, a.Z - b.Z)


def negate(q: Biquaternion) -> Biquaternion:
    return Biquaternion(-q.W, -q.X, -q.Y, -q.Z)


def scalar_multiply(c: ComplexScalar, q: Biquaternion) -> Biquaternion:
    return Biquaternion(c * q.W, c * q.X, c * q.Y, c * q.Z)


def _pair_coordinates(q: Biquaternion) -> Tuple[Tuple[Scalar, ...], Tuple[Scalar, ...]]:
    return (q.W.re, q.X.re, q.Y.re, q.Z.re), (q.W.im, q.X.im, q.Y.im, q.Z.im)


def multiply(a: Biquaternion, b: Biquaternion) -> Biquaternion:
    """Hamilton product with complex coefficients; I is central.

    With a = a_r + I a_i and b = b_r + I b_i the product is
    (a_r b_r - a_i b_i) + I (a_r b_i + a_i b_r). Exact operands are brought to integer
    numerators over one denominator each, so the sixteen products run on ints.
    """
    _require_same_backend(a, b)
    a_r, a_i = _pair_coordinates(a)
    b_r, b_i = _pair_coordinates(b)
    denominator = None
    if not isinstance(a.W.re, float):
        a_n, d_a = common_denominator(a_r + a_i)
        b_n, d_b = common_denominator(b_r + b_i)
        a_r, a_i, b_r, b_i = a_n[:4], a_n[4:], b_n[:4], b_n[4:]
        denominator = d_a * d_b
    rr, ii = hamilton(a_r, b_r), hamilton(a_i, b_i)
    ri, ir = hamilton(a_r, b_i), hamilton(a_i, b_r)
    re = [p - q for p, q in zip(rr, ii)]
    im = [p + q for p, q in zip(ri, ir)]
    if denominator is not None:
        re = [Fraction(n, denominator) for n in re]
        im = [Fraction(n, denominator) for n in im]
    return Biquaternion(*(ComplexScalar(r, i) for r, i in zip(re, im)))


def square(q: Biquaternion) -> Biquaternion:
    return multiply(q, q)


def conjugate(q: Biquaternion) -> Biquaternion:
    """Quaternion conjugate W - Xi - Yj - Zk"""
    return Biquaternion(q.W, -q.X, -q.Y, -q.Z)


def complex_conjugate(q: Biquaternion) -> Biquaternion:
    """Conjugate every component in I"""
    return Biquaternion(q.W.conjugate(), q.X.conjugate(), q.Y.conjugate(), q.Z.conjugate())


def semi_norm(q: Biquaternion) -> ComplexScalar:
    """||q|| = W^2 + X^2 + Y^2 + Z^2, equal to q * conjugate(q)"""
    real, imag = _pair_coordinates(q)
    denominator = None
    if not isinstance(q.W.re, float):
        numerators, d = common_denominator(real + imag)
        real, imag = numerators[:4], numerators[4:]
        denominator = d * d
    re = sum(r * r - i * i for r, i in zip(real, imag))
    im = 2 * sum(r * i for r, i in zip(real, imag))
    if denominator is not None:
        return ComplexScalar(Fraction(re, denominator), Fraction(im, denominator))
    return ComplexScalar(re, im)


def vector_square_sum(q: Biquaternion) -> ComplexScalar:
    """X^2 + Y^2 + Z^2, the square of the complex modulus B of the vector part"""
    return q.X.square() + q.Y.square() + q.Z.square()


def semi_norm_parts(q: Biquaternion) -> Tuple[Scalar, Scalar]:
    """(norm(q_r) - norm(q_i), 2 <q_r, q_i>): the real and I parts of the semi-norm"""
    q_r, q_i = q.real_part(), q.imag_part()
    return quaternion_norm(q_r) - quaternion_norm(q_i), require_finite(2 * inner_product(q_r, q_i), "semi-norm")


def pair_view(q: Biquaternion) -> QuaternionPairView:
    return QuaternionPairView(real_part=q.real_part(), imag_part=q.imag_part())


def assemble_pair(view: QuaternionPairView) -> Biquaternion:
    return Biquaternion.from_pair(view.real_part, view.imag_part)


def magnitude(q: Biquaternion) -> Scalar:
    """Sum over the four complex components of |re| + |im|"""
    return sum((c.magnitude() for c in q.components()), start=q.W.re * 0)


def scale_of(q: Biquaternion) -> float:
    """max(1, magnitude(q)): the approx zero-test scale for every predicate on q"""
    return max(1.0, require_finite(float(magnitude(q)), "scale measure"))


def tolerance_scale(q: Biquaternion, tol: Tolerance) -> float:
    """scale_of(q) on the approx backend; exact zero tests ignore the scale"""
    return 1.0 if tol.backend is Backend.EXACT else scale_of(q)


def default_tolerance(q: Biquaternion, tol: Optional[Tolerance] = None) -> Tolerance:
    return tol if tol is not None else Tolerance.for_backend(q.backend)


def is_zero(q: Biquaternion, tol: Optional[Tolerance] = None, scale: Optional[float] = None) -> bool:
    tol = default_tolerance(q, tol)
    scale = scale if scale is not None else 1.0
    return all(complex_is_zero(c, tol, scale) for c in q.components())


def is_close(a: Biquaternion, b: Biquaternion, tol: Optional[Tolerance] = None,
             scale: Optional[float] = None) -> bool:
    """Componentwise equality: exact on the exact backend, scaled on approx"""
    tol = default_tolerance(a, tol)
    if scale is None:
        scale = max(tolerance_scale(a, tol), tolerance_scale(b, tol))
    return is_zero(subtract(a, b), tol, scale)


def to_backend(q: Biquaternion, backend: Backend) -> Biquaternion:
    if backend is q.backend:
        return q
    return Biquaternion(*(c.to_backend(backend) for c in q.components()))


def _complex_sqrt(z: ComplexScalar, source: Biquaternion) -> ComplexScalar:
    if z.backend is Backend.APPROX:
        return complex_sqrt_principal(z)
    root = rational_complex_sqrt(z)
    if root is None:
        raise IrrationalAxisError(
            "X^2 + Y^2 + Z^2 is not a perfect square of a rational complex number",
            details={"value": str(source), "vector_square_sum": str(z)},
        )
    return root


def scalar_axis_form(q: Biquaternion, tol: Optional[Tolerance] = None,
                     allow_zero_vector: bool = False) -> ScalarAxisForm:
    """A = W, B = principal sqrt(X^2 + Y^2 + Z^2), axis = (Xi + Yj + Zk) / B"""
    tol = default_tolerance(q, tol)
    scale = tolerance_scale(q, tol)
    vector = q.vector_part()
    if is_zero(vector, tol, scale):
        if allow_zero_vector:
            return ScalarAxisForm(A=q.W, B=ComplexScalar.zero(q.backend), axis=None)
        raise ZeroVectorPartError(
            "vector part is zero, the axis is meaningless", details={"value": str(q)}
        )
    b_squared = vector_square_sum(q)
    if complex_is_zero(b_squared, tol, scale):
        logger.debug("axis_undefined", value=str(q))
        raise AxisUndefinedError(
            "X^2 + Y^2 + Z^2 vanishes on a nonzero vector part: the axis cannot be computed",
            details={"value": str(q)},
        )
    b = _complex_sqrt(b_squared, q)
    axis = scalar_multiply(b.inverse(), vector)
    return ScalarAxisForm(A=q.W, B=b, axis=axis)


def inverse(q: Biquaternion, tol: Optional[Tolerance] = None) -> Biquaternion:
    """conjugate(q) / ||q||"""
    tol = default_tolerance(q, tol)
    n = semi_norm(q)
    scale = tolerance_scale(q, tol)
    if complex_is_zero(n, tol, scale):
        raise ZeroDivisorError(
            "semi-norm vanishes: no inverse exists", details={"value": str(q), "semi_norm": str(n)}
        )
    return scalar_multiply(n.inverse(), conjugate(q))


def annihilator(q: Biquaternion, tol: Optional[Tolerance] = None) -> Biquaternion:
    """A nonzero a with q*a = a*q = 0 for a divisor of zero q: its quaternion conjugate"""
    tol = default_tolerance(q, tol)
    scale = tolerance_scale(q, tol)
    if is_zero(q, tol, scale):
        raise ZeroInputError("zero is not a divisor of zero", details={"value": str(q)})
    if not complex_is_zero(semi_norm(q), tol, scale):
        raise NotZeroDivisorError(
            "semi-norm does not vanish: only zero annihilates q", details={"value": str(q)}
        )
    return conjugate(q)
