"""
Generation service - seeded structured biquaternions
"""
from typing import Callable, Dict, Iterator, Optional

import structlog

from bqalg.algebra.backends import Tolerance
from bqalg.algebra.biquaternion import Biquaternion, to_backend
from bqalg.algebra.generators import GENERATORS, GenerationKind, make_rng
from bqalg.algebra.structure import (
    idempotent_axis,
    is_idempotent,
    is_nilpotent,
    is_root_of_minus_one,
    is_zero_divisor,
)
from bqalg.algebra.text import format_biquaternion, format_compact
from bqalg.errors import BiquaternionError, InvariantViolationError
from bqalg.schemas.common import BiquaternionModel
from bqalg.schemas.tools_in import GenerateInput
from bqalg.schemas.tools_out import GeneratedValue, GenerateOutput

logger = structlog.get_logger()


def is_real_axis_idempotent(q: Biquaternion, tol: Tolerance) -> bool:
    """Idempotent whose axis xi is a real unit pure quaternion"""
    return is_idempotent(q, tol) and idempotent_axis(q, tol).is_real

DEFINING_PROPERTY: Dict[GenerationKind, Callable[[Biquaternion, Tolerance], bool]] = {
    GenerationKind.IDEMPOTENT: is_idempotent,
    GenerationKind.NILPOTENT: is_nilpotent,
    GenerationKind.ZERO_DIVISOR: is_zero_divisor,
    GenerationKind.ROOT_OF_MINUS_ONE: is_root_of_minus_one,
    GenerationKind.REAL_IDEMPOTENT: is_real_axis_idempotent,
}


class GenerationService:
    """Service for seeded generation"""

    @staticmethod
    def iter_values(input_data: GenerateInput, trace_id: Optional[str] = None) -> Iterator[GeneratedValue]:
        """Yield values one by one; value `index` depends only on (seed, index)"""
        generator = GENERATORS[input_data.kind]
        check = DEFINING_PROPERTY[input_data.kind]
        tol = Tolerance.for_backend(input_data.backend)
        for index in range(input_data.count):
            q = to_backend(generator(make_rng(input_data.seed, (index,))), input_data.backend)
            if not check(q, tol):
                raise InvariantViolationError(
                    f"generated value fails the {input_data.kind.value} property",
                    details={"index": index, "value": format_biquaternion(q)},
                )
            yield GeneratedValue(
                index=index,
                value=BiquaternionModel.from_biquaternion(q),
                text=format_biquaternion(q),
                compact=format_compact(q),
            )

    @staticmethod
    def generate(input_data: GenerateInput, trace_id: Optional[str] = None) -> GenerateOutput:
        """Generate `count` values of one kind"""

        logger.info(
            "generate_started",
            kind=input_data.kind.value,
            count=input_data.count,
            seed=input_data.seed,
            backend=input_data.backend.value,
            trace_id=trace_id,
        )

        try:
            values = list(GenerationService.iter_values(input_data, trace_id))

            logger.info("generate_completed", kind=input_data.kind.value, count=len(values), trace_id=trace_id)

            return GenerateOutput(
                kind=input_data.kind,
                seed=input_data.seed,
                backend=input_data.backend,
                values=values,
            )

        except BiquaternionError as e:
            logger.error("generate_error", error=e.error, message=e.message, trace_id=trace_id)
            raise
