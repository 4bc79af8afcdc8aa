"""
Seeded generators of structured biquaternions (exact backend)

All randomness flows through an explicit numpy Generator; the same seed and
keys always give the same stream, so trials can run in any process.
"""
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, List, Sequence

import numpy as np
from numpy.random import Generator, SeedSequence

from bqalg.algebra.backends import ComplexScalar
from bqalg.algebra.biquaternion import Biquaternion
from bqalg.algebra.quaternion import Quaternion
from bqalg.algebra.roots import RootOfMinusOne
from bqalg.algebra.structure import make_idempotent, make_nilpotent, make_zero_divisor
from bqalg.errors import UsageError

SEED_LIMIT = 2 ** 64
COEFFICIENT_BOUND = 9

UNIT_I = Quaternion.of(0, 1, 0, 0)
UNIT_J = Quaternion.of(0, 0, 1, 0)


class GenerationKind(str, Enum):
    IDEMPOTENT = "idempotent"
    NILPOTENT = "nilpotent"
    ZERO_DIVISOR = "zero-divisor"
    ROOT_OF_MINUS_ONE = "root-of-minus-one"
    REAL_IDEMPOTENT = "real-idempotent"


def make_rng(seed: int, keys: Sequence[int] = ()) -> Generator:
    """A Generator for (seed, *keys); keys derive independent streams, e.g. per trial"""
    if not 0 <= seed < SEED_LIMIT:
        raise UsageError("seed must be a 64-bit unsigned integer", details={"seed": seed})
    return np.random.default_rng(SeedSequence(entropy=seed, spawn_key=tuple(keys)))


# Scalars


def random_rational(rng: Generator, nonzero: bool = False, bound: int = COEFFICIENT_BOUND) -> Fraction:
    while True:
        numerator = int(rng.integers(-bound, bound + 1))
        if nonzero and numerator == 0:
            continue
        return Fraction(numerator, int(rng.integers(1, bound + 1)))


def random_rationals(rng: Generator, count: int, bound: int = COEFFICIENT_BOUND) -> List[Fraction]:
    """`count` independent rationals p/q with |p| <= bound and 1 <= q <= bound, drawn in one batch"""
    numerators = rng.integers(-bound, bound + 1, size=count).tolist()
    denominators = rng.integers(1, bound + 1, size=count).tolist()
    return [Fraction(p, q) for p, q in zip(numerators, denominators)]


def random_complex(rng: Generator, nonzero: bool = False) -> ComplexScalar:
    while True:
        z = ComplexScalar(*random_rationals(rng, 2))
        if not nonzero or not z.is_exact_zero():
            return z


def random_quaternion(rng: Generator, nonzero: bool = True) -> Quaternion:
    while True:
        q = Quaternion(*random_rationals(rng, 4))
        if not nonzero or not q.is_zero():
            return q


def random_sign(rng: Generator) -> int:
    return 1 if rng.integers(0, 2) else -1


# Biquaternions


def _complexes(values: List[Fraction]) -> List[ComplexScalar]:
    return [ComplexScalar(values[n], values[n + 1]) for n in range(0, len(values), 2)]


def random_biquaternion(rng: Generator) -> Biquaternion:
    """Generic sample; almost never a divisor of zero"""
    return Biquaternion(*_complexes(random_rationals(rng, 8)))


def random_pure_biquaternion(rng: Generator) -> Biquaternion:
    return Biquaternion(ComplexScalar.zero(), *_complexes(random_rationals(rng, 6)))


def root_of_minus_one_from(u: Fraction, r: Quaternion) -> RootOfMinusOne:
    """xi = r (s i + t I j) r^-1 with s = (u + 1/u)/2, t = (u - 1/u)/2, so s^2 - t^2 = 1"""
    u = Fraction(u)
    if u == 0:
        raise UsageError("hyperbola parameter u must be nonzero")
    s = (u + 1 / u) / 2
    t = (u - 1 / u) / 2
    r_inverse = r.inverse()
    alpha = r * UNIT_I.scale(s) * r_inverse
    beta = r * UNIT_J.scale(t) * r_inverse
    return RootOfMinusOne.from_biquaternion(Biquaternion.from_pair(alpha, beta))


def random_root_of_minus_one(rng: Generator) -> RootOfMinusOne:
    return root_of_minus_one_from(random_rational(rng, nonzero=True), random_quaternion(rng))


def random_real_root_of_minus_one(rng: Generator) -> RootOfMinusOne:
    """r i r^-1: a real unit pure quaternion"""
    return root_of_minus_one_from(Fraction(1), random_quaternion(rng))


def random_idempotent(rng: Generator) -> Biquaternion:
    return make_idempotent(random_root_of_minus_one(rng), random_sign(rng))


def random_real_idempotent(rng: Generator) -> Biquaternion:
    """1/2 +- 1/2 xi I over a real axis xi = r i r^-1"""
    return make_idempotent(random_real_root_of_minus_one(rng), random_sign(rng))


def random_nilpotent(rng: Generator) -> Biquaternion:
    """scale * r (i + I j) r^-1"""
    scale = random_complex(rng, nonzero=True)
    r = random_quaternion(rng)
    r_inverse = r.inverse()
    return make_nilpotent(r * UNIT_I * r_inverse, r * UNIT_J * r_inverse, scale)


def random_non_pure_zero_divisor(rng: Generator) -> Biquaternion:
    alpha = random_complex(rng, nonzero=True)
    return make_zero_divisor(alpha, random_root_of_minus_one(rng), random_sign(rng))


def random_zero_divisor(rng: Generator) -> Biquaternion:
    """Fair coin between alpha * idempotent and a nilpotent"""
    if rng.integers(0, 2):
        return random_non_pure_zero_divisor(rng)
    return random_nilpotent(rng)


GENERATORS: Dict[GenerationKind, Callable[[Generator], Biquaternion]] = {
    GenerationKind.IDEMPOTENT: random_idempotent,
    GenerationKind.NILPOTENT: random_nilpotent,
    GenerationKind.ZERO_DIVISOR: random_zero_divisor,
    GenerationKind.ROOT_OF_MINUS_ONE: lambda rng: random_root_of_minus_one(rng).value,
    GenerationKind.REAL_IDEMPOTENT: random_real_idempotent,
}
