"""
Randomized verification of the divisor-of-zero theory

Each trial is a pure function of (seed, trial index), so a suite can be split
into contiguous shards and run in worker processes; merging keeps the lowest
failing index, which makes reports independent of the worker count.
"""
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

import structlog
from numpy.random import Generator

from bqalg.algebra.backends import Backend, ComplexScalar, Tolerance, complex_is_zero
from bqalg.algebra.biquaternion import (
    Biquaternion,
    add,
    conjugate,
    is_close,
    is_zero,
    multiply,
    scalar_axis_form,
    scalar_multiply,
    semi_norm,
    semi_norm_parts,
    square,
    to_backend,
    tolerance_scale,
    vector_square_sum,
)
from bqalg.algebra.generators import (
    make_rng,
    random_biquaternion,
    random_complex,
    random_idempotent,
    random_nilpotent,
    random_non_pure_zero_divisor,
    random_pure_biquaternion,
    random_zero_divisor,
)
from bqalg.algebra.structure import (
    DecompositionKind,
    decompose_zero_divisor,
    is_idempotent,
    is_nilpotent,
    is_pure,
    is_zero_divisor,
    is_zero_divisor_hamilton,
    square_scaling_check,
)
from bqalg.algebra.text import format_biquaternion, parse_biquaternion
from bqalg.errors import AxisUndefinedError, BiquaternionError

logger = structlog.get_logger()

PURE_SEARCH_ATTEMPTS = 200


class TheoremId(str, Enum):
    CRITERION_EQUIVALENCE = "criterion-equivalence"
    IDEMPOTENTS_ARE_DIVISORS = "idempotents-are-divisors"
    NILPOTENTS_ARE_PURE = "nilpotents-are-pure"
    PURE_DIVISORS_SQUARE_ZERO = "pure-divisors-square-zero"
    DECOMPOSITION_ROUNDTRIP = "decomposition-roundtrip"
    SQUARE_SCALING = "square-scaling"
    NO_OTHER_IDEMPOTENTS = "no-other-idempotents"
    AXIS_UNDEFINED_FOR_NILPOTENTS = "axis-undefined-for-nilpotents"
    SCALING_CLOSURE = "scaling-closure"
    RING_LAWS = "ring-laws"
    SEMI_NORM_LEMMA = "semi-norm-lemma"


@dataclass
class TrialContext:
    """Per-trial state: the random stream, the backend and the value under test"""

    rng: Generator
    backend: Backend
    tol: Tolerance
    subject: Optional[Biquaternion] = None

    def use(self, q: Biquaternion) -> Biquaternion:
        """Convert a generated value to the suite's backend and remember it as the witness"""
        q = to_backend(q, self.backend)
        if self.subject is None:
            self.subject = q
        return q

    def complex(self, z: ComplexScalar) -> ComplexScalar:
        return z.to_backend(self.backend)


@dataclass(frozen=True)
class ShardResult:
    failures: int
    first_index: Optional[int]
    first_counterexample: Optional[str]


@dataclass(frozen=True)
class VerificationResult:
    theorem: TheoremId
    trials: int
    failures: int
    first_index: Optional[int]
    first_counterexample: Optional[Biquaternion]
    elapsed: float

    @property
    def passed(self) -> bool:
        return self.failures == 0


# Trials: each returns True when the property holds for the sampled value


def _criterion_equivalence(ctx: TrialContext) -> bool:
    pick = ctx.rng.integers(0, 3)
    if pick == 0:
        q = ctx.use(random_zero_divisor(ctx.rng))
    elif pick == 1:
        q = ctx.use(random_biquaternion(ctx.rng))
    else:
        q = ctx.use(random_pure_biquaternion(ctx.rng))
    if is_zero(q, ctx.tol, tolerance_scale(q, ctx.tol)):
        return True
    return is_zero_divisor(q, ctx.tol) == is_zero_divisor_hamilton(q, ctx.tol)


def _idempotents_are_divisors(ctx: TrialContext) -> bool:
    q = ctx.use(random_idempotent(ctx.rng))
    half = ComplexScalar.of(Fraction(1, 2), 0, ctx.backend)
    return (
        is_idempotent(q, ctx.tol)
        and is_zero_divisor(q, ctx.tol)
        and is_zero_divisor_hamilton(q, ctx.tol)
        and complex_is_zero(q.W - half, ctx.tol)
    )


def _nilpotents_are_pure(ctx: TrialContext) -> bool:
    n = ctx.use(random_nilpotent(ctx.rng))
    scale = tolerance_scale(n, ctx.tol)
    return (
        is_nilpotent(n, ctx.tol)
        and is_pure(n, ctx.tol)
        and complex_is_zero(vector_square_sum(n), ctx.tol, scale)
        and is_zero(square(n), ctx.tol, scale)
        and is_zero_divisor(n, ctx.tol)
        and is_zero_divisor_hamilton(n, ctx.tol)
    )


def _small_pure_divisor(rng: Generator) -> Optional[Biquaternion]:
    """Rejection-sample pure biquaternions with coefficients in {-1, 0, 1} and vanishing semi-norm"""
    for _ in range(PURE_SEARCH_ATTEMPTS):
        parts = [int(v) for v in rng.integers(-1, 2, size=6)]
        q = Biquaternion.of(
            0, (parts[0], parts[1]), (parts[2], parts[3]), (parts[4], parts[5])
        )
        if not q.is_exact_zero() and semi_norm(q).is_exact_zero():
            return q
    return None


def _pure_divisors_square_zero(ctx: TrialContext) -> bool:
    candidate = _small_pure_divisor(ctx.rng) if ctx.rng.integers(0, 2) else None
    p = ctx.use(candidate if candidate is not None else random_nilpotent(ctx.rng))
    return _pure_roundtrip(p, ctx) and is_zero(square(p), ctx.tol, tolerance_scale(p, ctx.tol))


def _non_pure_roundtrip(p: Biquaternion, ctx: TrialContext) -> bool:
    decomposition = decompose_zero_divisor(p, ctx.tol)
    # normalize_to_idempotent already rejects a non-idempotent quotient
    return decomposition.kind is DecompositionKind.NON_PURE and is_close(decomposition.recompose(), p, ctx.tol)


def _pure_roundtrip(p: Biquaternion, ctx: TrialContext) -> bool:
    decomposition = decompose_zero_divisor(p, ctx.tol)
    return decomposition.kind is DecompositionKind.PURE and is_close(decomposition.recompose(), p, ctx.tol)


def _decomposition_roundtrip(ctx: TrialContext) -> bool:
    if ctx.rng.integers(0, 2):
        p = ctx.use(random_non_pure_zero_divisor(ctx.rng))
        square_scaling_check(p, ctx.tol)
        return _non_pure_roundtrip(p, ctx)
    return _pure_roundtrip(ctx.use(random_nilpotent(ctx.rng)), ctx)


def _square_scaling(ctx: TrialContext) -> bool:
    """p^2 = 2W p on every non-pure divisor of zero, which also decomposes and recomposes"""
    p = ctx.use(random_non_pure_zero_divisor(ctx.rng))
    alpha = p.W + p.W
    return (
        is_close(square(p), scalar_multiply(alpha, p), ctx.tol, tolerance_scale(p, ctx.tol))
        and _non_pure_roundtrip(p, ctx)
    )


def _no_other_idempotents(ctx: TrialContext) -> bool:
    pick = ctx.rng.integers(0, 3)
    if pick == 0:
        # W outside {0, 1/2, 1} can never be idempotent
        q = ctx.use(random_biquaternion(ctx.rng))
        w = q.W
        if any(complex_is_zero(w - ComplexScalar.of(v, 0, ctx.backend), ctx.tol, tolerance_scale(q, ctx.tol))
               for v in (0, Fraction(1, 2), 1)):
            return True
        return not is_idempotent(q, ctx.tol)
    if pick == 1:
        # 1/2 plus a nilpotent squares to 1/4 plus the nilpotent
        n = random_nilpotent(ctx.rng)
        q = ctx.use(add(Biquaternion.of(Fraction(1, 2)), n))
        return not is_idempotent(q, ctx.tol)
    q = ctx.use(random_idempotent(ctx.rng))
    quarter = ComplexScalar.of(Fraction(-1, 4), 0, ctx.backend)
    half = ComplexScalar.of(Fraction(1, 2), 0, ctx.backend)
    return (
        is_idempotent(q, ctx.tol)
        and complex_is_zero(q.W - half, ctx.tol)
        and complex_is_zero(vector_square_sum(q) - quarter, ctx.tol, tolerance_scale(q, ctx.tol))
    )


def _axis_undefined_for_nilpotents(ctx: TrialContext) -> bool:
    n = ctx.use(random_nilpotent(ctx.rng))
    try:
        scalar_axis_form(n, ctx.tol)
    except AxisUndefinedError:
        return True
    return False


def _scaling_closure(ctx: TrialContext) -> bool:
    n = ctx.use(random_nilpotent(ctx.rng))
    c = ctx.complex(random_complex(ctx.rng))
    scaled = scalar_multiply(c, n)
    if not is_zero(square(scaled), ctx.tol, tolerance_scale(scaled, ctx.tol)):
        return False
    q = ctx.use(random_idempotent(ctx.rng))
    c = ctx.complex(random_complex(ctx.rng, nonzero=True))
    return is_zero_divisor(scalar_multiply(c, q), ctx.tol)


def _ring_laws(ctx: TrialContext) -> bool:
    a = ctx.use(random_biquaternion(ctx.rng))
    b = ctx.use(random_biquaternion(ctx.rng))
    c = ctx.use(random_biquaternion(ctx.rng))
    tol = ctx.tol
    # triple products: cubic scale
    scale = max(tolerance_scale(a, tol), tolerance_scale(b, tol), tolerance_scale(c, tol)) ** 3
    one = Biquaternion.one(ctx.backend)
    i_unit = ComplexScalar.unit_imaginary(ctx.backend)
    checks = [
        is_close(multiply(multiply(a, b), c), multiply(a, multiply(b, c)), tol, scale),
        is_close(add(add(a, b), c), add(a, add(b, c)), tol, scale),
        is_close(multiply(a, add(b, c)), add(multiply(a, b), multiply(a, c)), tol, scale),
        is_close(multiply(add(a, b), c), add(multiply(a, c), multiply(b, c)), tol, scale),
        is_close(multiply(one, a), a, tol) and is_close(multiply(a, one), a, tol),
        is_close(conjugate(multiply(a, b)), multiply(conjugate(b), conjugate(a)), tol, scale),
        is_close(
            multiply(scalar_multiply(i_unit, a), b), multiply(a, scalar_multiply(i_unit, b)), tol, scale
        ),
    ]
    n = semi_norm(a)
    norm_as_product = Biquaternion.of(n, backend=ctx.backend)
    checks.append(is_close(multiply(a, conjugate(a)), norm_as_product, tol, scale))
    checks.append(is_close(multiply(conjugate(a), a), norm_as_product, tol, scale))
    return all(checks)


def _semi_norm_lemma(ctx: TrialContext) -> bool:
    q = ctx.use(random_biquaternion(ctx.rng))
    real, imag = semi_norm_parts(q)
    n = semi_norm(q)
    scale = tolerance_scale(q, ctx.tol)
    return ctx.tol.is_zero(n.re - real, scale) and ctx.tol.is_zero(n.im - imag, scale)


TRIALS: Dict[TheoremId, Callable[[TrialContext], bool]] = {
    TheoremId.CRITERION_EQUIVALENCE: _criterion_equivalence,
    TheoremId.IDEMPOTENTS_ARE_DIVISORS: _idempotents_are_divisors,
    TheoremId.NILPOTENTS_ARE_PURE: _nilpotents_are_pure,
    TheoremId.PURE_DIVISORS_SQUARE_ZERO: _pure_divisors_square_zero,
    TheoremId.DECOMPOSITION_ROUNDTRIP: _decomposition_roundtrip,
    TheoremId.SQUARE_SCALING: _square_scaling,
    TheoremId.NO_OTHER_IDEMPOTENTS: _no_other_idempotents,
    TheoremId.AXIS_UNDEFINED_FOR_NILPOTENTS: _axis_undefined_for_nilpotents,
    TheoremId.SCALING_CLOSURE: _scaling_closure,
    TheoremId.RING_LAWS: _ring_laws,
    TheoremId.SEMI_NORM_LEMMA: _semi_norm_lemma,
}


def run_trial(theorem: TheoremId, seed: int, index: int, backend: Backend,
              epsilon: Optional[float] = None) -> Tuple[bool, Optional[Biquaternion]]:
    """Run one trial; returns (passed, witness)"""
    ctx = TrialContext(
        rng=make_rng(seed, (index,)),
        backend=backend,
        tol=Tolerance.for_backend(backend, epsilon),
    )
    try:
        passed = TRIALS[theorem](ctx)
    except BiquaternionError as e:
        logger.debug("verify_trial_error", theorem=theorem.value, index=index, error=e.error, message=e.message)
        passed = False
    return passed, ctx.subject


def run_shard(theorem: TheoremId, seed: int, start: int, stop: int, backend: Backend,
              epsilon: Optional[float] = None) -> ShardResult:
    failures = 0
    first_index: Optional[int] = None
    first_counterexample: Optional[str] = None
    for index in range(start, stop):
        passed, witness = run_trial(theorem, seed, index, backend, epsilon)
        if passed:
            continue
        failures += 1
        if first_index is None:
            first_index = index
            # a trial that fails before drawing its value has no counterexample
            first_counterexample = format_biquaternion(witness) if witness is not None else None
            logger.debug("verify_counterexample", theorem=theorem.value, index=index,
                         counterexample=first_counterexample)
    return ShardResult(failures, first_index, first_counterexample)


def _shard_bounds(trials: int, shards: int) -> List[Tuple[int, int]]:
    size, extra = divmod(trials, shards)
    bounds, start = [], 0
    for shard in range(shards):
        stop = start + size + (1 if shard < extra else 0)
        if stop > start:
            bounds.append((start, stop))
        start = stop
    return bounds


def merge_shards(results: List[ShardResult]) -> ShardResult:
    failures = sum(r.failures for r in results)
    failed = [r for r in results if r.first_index is not None]
    if not failed:
        return ShardResult(failures, None, None)
    first = min(failed, key=lambda r: r.first_index)
    return ShardResult(failures, first.first_index, first.first_counterexample)


def verify_theorem(theorem: TheoremId, trials: int, seed: int, backend: Backend = Backend.EXACT,
                   epsilon: Optional[float] = None, workers: int = 1) -> VerificationResult:
    """Run `trials` independent trials of a property, optionally across worker processes"""
    started = time.perf_counter()
    if workers <= 1 or trials < 2 * workers:
        merged = run_shard(theorem, seed, 0, trials, backend, epsilon)
    else:
        bounds = _shard_bounds(trials, workers * 4)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(run_shard, theorem, seed, start, stop, backend, epsilon)
                for start, stop in bounds
            ]
            merged = merge_shards([f.result() for f in futures])
    elapsed = time.perf_counter() - started
    counterexample = (
        parse_biquaternion(merged.first_counterexample, backend)
        if merged.first_counterexample is not None else None
    )
    logger.info(
        "verify_theorem_completed",
        theorem=theorem.value,
        trials=trials,
        failures=merged.failures,
        workers=workers,
        elapsed_ms=round(elapsed * 1000, 2),
    )
    return VerificationResult(
        theorem=theorem,
        trials=trials,
        failures=merged.failures,
        first_index=merged.first_index,
        first_counterexample=counterexample,
        elapsed=elapsed,
    )
