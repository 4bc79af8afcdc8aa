"""
Biquaternion algebra kernel: backends, arithmetic, text form, structure theory,
seeded generators and randomized verification
"""
from bqalg.algebra.backends import Backend, ComplexScalar, Tolerance
from bqalg.algebra.biquaternion import (
    Biquaternion,
    annihilator,
    conjugate,
    inverse,
    multiply,
    scalar_axis_form,
    semi_norm,
    square,
)
from bqalg.algebra.quaternion import Quaternion
from bqalg.algebra.roots import RootOfMinusOne
from bqalg.algebra.structure import (
    Classification,
    classify,
    decompose_zero_divisor,
    is_idempotent,
    is_nilpotent,
    is_zero_divisor,
    is_zero_divisor_hamilton,
    make_idempotent,
    make_nilpotent,
    normalize_nilpotent,
    normalize_to_idempotent,
)
from bqalg.algebra.text import format_biquaternion, parse_biquaternion

__all__ = [
    "Backend",
    "Biquaternion",
    "Classification",
    "ComplexScalar",
    "Quaternion",
    "RootOfMinusOne",
    "Tolerance",
    "annihilator",
    "classify",
    "conjugate",
    "decompose_zero_divisor",
    "format_biquaternion",
    "inverse",
    "is_idempotent",
    "is_nilpotent",
    "is_zero_divisor",
    "is_zero_divisor_hamilton",
    "make_idempotent",
    "make_nilpotent",
    "multiply",
    "normalize_nilpotent",
    "normalize_to_idempotent",
    "parse_biquaternion",
    "scalar_axis_form",
    "semi_norm",
    "square",
]
