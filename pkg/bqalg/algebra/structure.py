"""
Divisors of zero, idempotents and nilpotents of the biquaternion algebra

Every nonzero divisor of zero is either alpha * q for a complex alpha != 0 and an
idempotent q = 1/2 +- 1/2 xi I (when W != 0), or a nilpotent (when W = 0).
"""
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple

import structlog

from bqalg.algebra.backends import (
    Backend,
    ComplexScalar,
    Scalar,
    Tolerance,
    complex_is_zero,
    rational_sqrt,
)
from bqalg.algebra.biquaternion import (
    Biquaternion,
    add,
    default_tolerance,
    is_close,
    is_zero,
    pair_view,
    scalar_multiply,
    tolerance_scale,
    semi_norm,
    square,
    subtract,
    vector_square_sum,
)
from bqalg.algebra.quaternion import Quaternion, inner_product, quaternion_norm
from bqalg.algebra.roots import RootOfMinusOne, satisfies_root_structure
from bqalg.errors import (
    BadFrameError,
    InvariantViolationError,
    IrrationalAxisError,
    NotNilpotentError,
    NotZeroDivisorError,
    PureInputError,
    TrivialRootError,
    UsageError,
    ZeroInputError,
    ZeroScaleError,
)

logger = structlog.get_logger()


class Classification(str, Enum):
    """Finest class of a biquaternion; most specific tag wins"""
    ZERO = "Zero"
    TRIVIAL_IDEMPOTENT = "TrivialIdempotent"
    IDEMPOTENT = "Idempotent"
    NILPOTENT = "Nilpotent"
    NON_PURE_ZERO_DIVISOR = "NonPureZeroDivisor"
    INVERTIBLE = "Invertible"


class DecompositionKind(str, Enum):
    NON_PURE = "NonPure"
    PURE = "Pure"


@dataclass(frozen=True)
class ZeroDivisorDecomposition:
    """NonPure: scale * idempotent. Pure: a nilpotent."""

    kind: DecompositionKind
    scale: Optional[ComplexScalar] = None
    idempotent: Optional[Biquaternion] = None
    nilpotent: Optional[Biquaternion] = None

    def recompose(self) -> Biquaternion:
        if self.kind is DecompositionKind.NON_PURE:
            return scalar_multiply(self.scale, self.idempotent)
        return self.nilpotent


@dataclass(frozen=True)
class NilpotentNormalForm:
    """p = scale * (mu + I nu) with scale = sqrt(common_norm)"""

    mu: Quaternion
    nu: Quaternion
    common_norm: Scalar
    scale: Scalar

    def recompose(self) -> Biquaternion:
        return Biquaternion.from_pair(self.mu.scale(self.scale), self.nu.scale(self.scale))


def _require_nonzero(q: Biquaternion, tol: Tolerance) -> None:
    if is_zero(q, tol, tolerance_scale(q, tol)):
        raise ZeroInputError("operation requires a non-zero biquaternion", details={"value": str(q)})


def _check_sign(sign: int) -> int:
    if sign not in (1, -1):
        raise UsageError("sign must be +1 or -1", details={"sign": sign})
    return sign


def _exact(tol: Tolerance) -> bool:
    return tol.backend is Backend.EXACT


# Predicates


def is_pure(q: Biquaternion, tol: Optional[Tolerance] = None) -> bool:
    """W = 0"""
    tol = default_tolerance(q, tol)
    return complex_is_zero(q.W, tol, tolerance_scale(q, tol))


def is_zero_divisor(q: Biquaternion, tol: Optional[Tolerance] = None) -> bool:
    """Semi-norm test: W^2 + X^2 + Y^2 + Z^2 = 0"""
    tol = default_tolerance(q, tol)
    _require_nonzero(q, tol)
    return complex_is_zero(semi_norm(q), tol, tolerance_scale(q, tol))


def is_zero_divisor_hamilton(q: Biquaternion, tol: Optional[Tolerance] = None) -> bool:
    """Real and imaginary parts have equal norms and a vanishing inner product"""
    tol = default_tolerance(q, tol)
    _require_nonzero(q, tol)
    view = pair_view(q)
    scale = tolerance_scale(q, tol)
    equal_norms = tol.is_zero(quaternion_norm(view.real_part) - quaternion_norm(view.imag_part), scale)
    return equal_norms and tol.is_zero(inner_product(view.real_part, view.imag_part), scale)


def is_idempotent(q: Biquaternion, tol: Optional[Tolerance] = None) -> bool:
    """q^2 = q; includes the trivial idempotents 0 and 1"""
    tol = default_tolerance(q, tol)
    return is_close(square(q), q, tol, tolerance_scale(q, tol))


def is_nilpotent(q: Biquaternion, tol: Optional[Tolerance] = None) -> bool:
    """W = 0 and X^2 + Y^2 + Z^2 = 0; cross-checked against q^2 = 0"""
    tol = default_tolerance(q, tol)
    scale = tolerance_scale(q, tol)
    structural = is_pure(q, tol) and complex_is_zero(vector_square_sum(q), tol, scale)
    direct = is_zero(square(q), tol, scale)
    if structural != direct:
        if _exact(tol):
            raise InvariantViolationError(
                "nilpotency criteria disagree",
                details={"value": str(q), "structural": structural, "direct": direct},
            )
        logger.warning("nilpotent_criteria_disagree", value=str(q), structural=structural, direct=direct)
    return structural


def is_root_of_minus_one(q: Biquaternion, tol: Optional[Tolerance] = None) -> bool:
    """q^2 = -1; cross-checked against the pure / perpendicular / norm-difference criterion"""
    tol = default_tolerance(q, tol)
    minus_one = Biquaternion.of(-1, backend=q.backend)
    by_square = is_close(square(q), minus_one, tol, tolerance_scale(q, tol))
    structural = satisfies_root_structure(q, tol)
    if by_square != structural:
        if _exact(tol):
            raise InvariantViolationError(
                "root-of-minus-one criteria disagree",
                details={"value": str(q), "by_square": by_square, "structural": structural},
            )
        logger.warning("root_criteria_disagree", value=str(q), by_square=by_square, structural=structural)
    return by_square


def classify(q: Biquaternion, tol: Optional[Tolerance] = None) -> Classification:
    tol = default_tolerance(q, tol)
    if is_zero(q, tol, tolerance_scale(q, tol)):
        return Classification.ZERO
    if is_close(q, Biquaternion.one(q.backend), tol):
        return Classification.TRIVIAL_IDEMPOTENT
    vanishing = complex_is_zero(semi_norm(q), tol, tolerance_scale(q, tol))
    if vanishing and is_pure(q, tol):
        return Classification.NILPOTENT
    if is_idempotent(q, tol):
        return Classification.IDEMPOTENT
    if vanishing:
        return Classification.NON_PURE_ZERO_DIVISOR
    return Classification.INVERTIBLE


# Constructors


def make_idempotent(xi: RootOfMinusOne, sign: int = 1, allow_trivial: bool = False) -> Biquaternion:
    """q = 1/2 + sign * 1/2 * xi * I"""
    _check_sign(sign)
    if xi.is_trivial and not allow_trivial:
        raise TrivialRootError(
            "xi = +-I only yields the trivial idempotents 0 and 1", details={"xi": str(xi.value)}
        )
    backend = xi.value.backend
    half = ComplexScalar.of(Fraction(1, 2), 0, backend)
    return add(
        Biquaternion.of(half, backend=backend),
        scalar_multiply(half.scale(sign), xi.times_imaginary_unit()),
    )


def idempotent_partner(q: Biquaternion, tol: Optional[Tolerance] = None) -> Biquaternion:
    """1 - q: the complementary idempotent, with q (1 - q) = 0"""
    tol = default_tolerance(q, tol)
    if not is_idempotent(q, tol):
        raise UsageError("idempotent_partner requires an idempotent", details={"value": str(q)})
    return subtract(Biquaternion.one(q.backend), q)


def idempotent_axis(q: Biquaternion, tol: Optional[Tolerance] = None) -> RootOfMinusOne:
    """xi with q = 1/2 + 1/2 * xi * I, recovered as xi = -2I (q - 1/2)"""
    tol = default_tolerance(q, tol)
    if not is_idempotent(q, tol):
        raise UsageError("idempotent_axis requires an idempotent", details={"value": str(q)})
    half = Biquaternion.of(Fraction(1, 2), backend=q.backend)
    minus_two_i = ComplexScalar.of(0, -2, q.backend)
    return RootOfMinusOne.from_biquaternion(scalar_multiply(minus_two_i, subtract(q, half)), tol)


def make_nilpotent(mu: Quaternion, nu: Quaternion, scale: ComplexScalar) -> Biquaternion:
    """scale * (mu + I nu) for pure, perpendicular, equal-norm mu and nu"""
    backend = mu.backend
    tol = Tolerance.for_backend(backend)
    magnitude = 1.0
    if backend is Backend.APPROX:
        magnitude = max(1.0, sum(abs(c) for c in mu.components() + nu.components()))
    norm_mu, norm_nu = quaternion_norm(mu), quaternion_norm(nu)
    if not (tol.is_zero(mu.w, magnitude) and tol.is_zero(nu.w, magnitude)):
        raise BadFrameError("mu and nu must be pure quaternions", details={"mu": str(mu), "nu": str(nu)})
    if tol.is_zero(norm_mu, magnitude) or not tol.is_zero(norm_mu - norm_nu, magnitude):
        raise BadFrameError("mu and nu must have equal nonzero norms", details={"mu": str(mu), "nu": str(nu)})
    if not tol.is_zero(inner_product(mu, nu), magnitude):
        raise BadFrameError("mu and nu must be perpendicular", details={"mu": str(mu), "nu": str(nu)})
    scale = scale.to_backend(backend)
    if scale.is_exact_zero():
        raise ZeroScaleError("nilpotent scale must be nonzero")
    return scalar_multiply(scale, Biquaternion.from_pair(mu, nu))


def make_zero_divisor(alpha: ComplexScalar, xi: RootOfMinusOne, sign: int = 1) -> Biquaternion:
    """alpha * (1/2 + sign * 1/2 * xi * I)"""
    if alpha.is_exact_zero():
        raise ZeroScaleError("alpha must be nonzero")
    q = make_idempotent(xi, sign)
    return scalar_multiply(alpha.to_backend(q.backend), q)


# Normalization and decomposition


def _require_non_pure_divisor(p: Biquaternion, tol: Tolerance) -> None:
    _require_nonzero(p, tol)
    if not complex_is_zero(semi_norm(p), tol, tolerance_scale(p, tol)):
        raise NotZeroDivisorError("semi-norm does not vanish", details={"value": str(p)})
    if is_pure(p, tol):
        raise PureInputError(
            "pure divisors of zero are nilpotent: use normalize_nilpotent", details={"value": str(p)}
        )


def normalize_to_idempotent(p: Biquaternion, tol: Optional[Tolerance] = None) -> Tuple[ComplexScalar, Biquaternion]:
    """Divide a non-pure divisor of zero by twice its scalar part: (alpha = 2W, q = p / alpha)"""
    tol = default_tolerance(p, tol)
    _require_non_pure_divisor(p, tol)
    alpha = p.W + p.W
    q = scalar_multiply(alpha.inverse(), p)
    if not is_idempotent(q, tol):
        raise InvariantViolationError(
            "p / 2W is not idempotent", details={"value": str(p), "q": str(q)}
        )
    return alpha, q


def square_scaling_check(p: Biquaternion, tol: Optional[Tolerance] = None) -> ComplexScalar:
    """alpha = 2W, after checking p^2 = alpha * p"""
    tol = default_tolerance(p, tol)
    _require_non_pure_divisor(p, tol)
    alpha = p.W + p.W
    expected = scalar_multiply(alpha, p)
    if not is_close(square(p), expected, tol, tolerance_scale(p, tol)):
        raise InvariantViolationError(
            "p^2 differs from 2W * p", details={"value": str(p), "alpha": str(alpha)}
        )
    return alpha


def normalize_nilpotent(p: Biquaternion, tol: Optional[Tolerance] = None) -> NilpotentNormalForm:
    """p = sqrt(||p_r||) * (mu + I nu) with mu, nu perpendicular unit pure quaternions"""
    tol = default_tolerance(p, tol)
    _require_nonzero(p, tol)
    if not is_nilpotent(p, tol):
        raise NotNilpotentError("value is not nilpotent", details={"value": str(p)})
    view = pair_view(p)
    common_norm = quaternion_norm(view.real_part)
    if p.backend is Backend.EXACT:
        root = rational_sqrt(common_norm)
        if root is None:
            raise IrrationalAxisError(
                "part norm is not a perfect rational square; use the approx backend",
                details={"value": str(p), "common_norm": str(common_norm)},
            )
        factor = 1 / root
    else:
        root = math.sqrt(common_norm)
        factor = 1.0 / root
    mu = view.real_part.vector().scale(factor)
    nu = view.imag_part.vector().scale(factor)
    return NilpotentNormalForm(mu=mu, nu=nu, common_norm=common_norm, scale=root)


def decompose_zero_divisor(p: Biquaternion, tol: Optional[Tolerance] = None) -> ZeroDivisorDecomposition:
    """NonPure (alpha, idempotent) when W != 0, Pure (nilpotent) when W = 0"""
    tol = default_tolerance(p, tol)
    _require_nonzero(p, tol)
    if not complex_is_zero(semi_norm(p), tol, tolerance_scale(p, tol)):
        raise NotZeroDivisorError("semi-norm does not vanish", details={"value": str(p)})
    if not is_pure(p, tol):
        alpha, q = normalize_to_idempotent(p, tol)
        return ZeroDivisorDecomposition(kind=DecompositionKind.NON_PURE, scale=alpha, idempotent=q)
    if not is_zero(square(p), tol, tolerance_scale(p, tol)):
        raise InvariantViolationError(
            "pure divisor of zero does not square to zero", details={"value": str(p)}
        )
    return ZeroDivisorDecomposition(kind=DecompositionKind.PURE, nilpotent=p)
