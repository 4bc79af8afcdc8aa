"""
Classification service - classify a biquaternion and report the divisor-of-zero evidence
"""
from typing import Optional

import structlog

from bqalg.algebra.biquaternion import is_zero, pair_view, semi_norm, tolerance_scale
from bqalg.algebra.quaternion import inner_product, quaternion_norm
from bqalg.algebra.structure import classify, is_zero_divisor, is_zero_divisor_hamilton
from bqalg.algebra.text import format_biquaternion, format_compact
from bqalg.errors import BiquaternionError, InvariantViolationError
from bqalg.schemas.common import BiquaternionModel, complex_value, scalar_value
from bqalg.schemas.tools_in import ClassifyInput
from bqalg.schemas.tools_out import ClassifyOutput
from bqalg.services.values import describe, load_value, make_tolerance

logger = structlog.get_logger()


class ClassificationService:
    """Service for classification"""

    @staticmethod
    def classify(input_data: ClassifyInput, trace_id: Optional[str] = None) -> ClassifyOutput:
        """Classify one value; both divisor-of-zero criteria must agree"""

        logger.info("classify_started", value=describe(input_data.value), trace_id=trace_id)

        try:
            q = load_value(input_data.value, input_data.backend)
            tol = make_tolerance(q.backend, input_data.tolerance)
            view = pair_view(q)

            divisor: Optional[bool] = None
            if not is_zero(q, tol, tolerance_scale(q, tol)):
                divisor = is_zero_divisor(q, tol)
                if divisor != is_zero_divisor_hamilton(q, tol):
                    raise InvariantViolationError(
                        "divisor-of-zero criteria disagree", details={"value": format_biquaternion(q)}
                    )

            result = ClassifyOutput(
                value=BiquaternionModel.from_biquaternion(q),
                text=format_biquaternion(q),
                compact=format_compact(q),
                classification=classify(q, tol),
                semi_norm=complex_value(semi_norm(q)),
                norm_real_part=scalar_value(quaternion_norm(view.real_part)),
                norm_imag_part=scalar_value(quaternion_norm(view.imag_part)),
                inner_product=scalar_value(inner_product(view.real_part, view.imag_part)),
                is_zero_divisor=divisor,
            )

            logger.info(
                "classify_completed",
                classification=result.classification.value,
                backend=q.backend.value,
                trace_id=trace_id,
            )

            return result

        except BiquaternionError as e:
            logger.error("classify_error", error=e.error, message=e.message, trace_id=trace_id)
            raise
