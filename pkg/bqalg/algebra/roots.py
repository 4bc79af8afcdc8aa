"""
Biquaternion roots of -1
"""
from dataclasses import dataclass, field
from typing import Optional

from bqalg.algebra.backends import ComplexScalar, Tolerance, complex_is_zero
from bqalg.algebra.biquaternion import (
    Biquaternion,
    default_tolerance,
    is_close,
    is_zero,
    negate,
    tolerance_scale,
)
from bqalg.algebra.quaternion import Quaternion, inner_product, quaternion_norm
from bqalg.errors import NotRootOfMinusOneError, TrivialRootError


def trivial_root_sign(q: Biquaternion, tol: Optional[Tolerance] = None) -> int:
    """+1 for q = I, -1 for q = -I, 0 otherwise"""
    tol = default_tolerance(q, tol)
    scale = tolerance_scale(q, tol)
    if not all(complex_is_zero(c, tol, scale) for c in (q.X, q.Y, q.Z)):
        return 0
    unit = Biquaternion.imaginary_unit(q.backend)
    if is_close(q, unit, tol):
        return 1
    if is_close(q, negate(unit), tol):
        return -1
    return 0


def _non_trivial_structure(q: Biquaternion, tol: Tolerance) -> bool:
    scale = tolerance_scale(q, tol)
    if not complex_is_zero(q.W, tol, scale):
        return False
    alpha, beta = q.real_part().vector(), q.imag_part().vector()
    return (
        tol.is_zero(inner_product(alpha, beta), scale)
        and tol.is_zero(quaternion_norm(alpha) - quaternion_norm(beta) - 1, scale)
    )


def satisfies_root_structure(q: Biquaternion, tol: Optional[Tolerance] = None) -> bool:
    """Pure, Re(q) perpendicular to Im(q), norm(Re) - norm(Im) = 1; or one of the trivial roots +-I"""
    tol = default_tolerance(q, tol)
    return bool(trivial_root_sign(q, tol)) or _non_trivial_structure(q, tol)


@dataclass(frozen=True)
class RootOfMinusOne:
    """xi with xi^2 = -1; alpha_vec = Re(xi), beta_vec = Im(xi)"""

    value: Biquaternion
    alpha_vec: Quaternion
    beta_vec: Quaternion
    trivial_sign: int = field(default=0, compare=False)

    @classmethod
    def from_biquaternion(cls, value: Biquaternion, tol: Optional[Tolerance] = None,
                          allow_trivial: bool = False) -> "RootOfMinusOne":
        """Validate the structural criterion; it is equivalent to value^2 = -1"""
        tol = default_tolerance(value, tol)
        sign = trivial_root_sign(value, tol)
        if sign:
            if not allow_trivial:
                raise TrivialRootError(
                    "xi = +-I is a trivial root of -1; pass allow_trivial to admit it",
                    details={"value": str(value)},
                )
        elif not _non_trivial_structure(value, tol):
            raise NotRootOfMinusOneError(
                "value is not a root of -1: it must be pure with Re perpendicular to Im "
                "and norm(Re) - norm(Im) = 1",
                details={"value": str(value)},
            )
        return cls(value=value, alpha_vec=value.real_part(), beta_vec=value.imag_part(), trivial_sign=sign)

    @property
    def is_trivial(self) -> bool:
        return self.trivial_sign != 0

    @property
    def is_real(self) -> bool:
        """xi is a real unit pure quaternion (beta = 0)"""
        return not self.is_trivial and is_zero(Biquaternion.from_quaternion(self.beta_vec))

    def times_imaginary_unit(self) -> Biquaternion:
        """xi * I"""
        i_unit = ComplexScalar.unit_imaginary(self.value.backend)
        v = self.value
        return Biquaternion(i_unit * v.W, i_unit * v.X, i_unit * v.Y, i_unit * v.Z)
