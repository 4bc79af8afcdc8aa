"""
Verification service - randomized property suites over the structure theory
"""
from typing import Optional

import structlog

from bqalg.algebra.verification import verify_theorem
from bqalg.errors import BiquaternionError
from bqalg.schemas.common import BiquaternionModel
from bqalg.schemas.tools_in import VerifyInput
from bqalg.schemas.tools_out import VerifyReport
from bqalg.services.values import make_tolerance

logger = structlog.get_logger()


class VerificationService:
    """Service for property verification"""

    @staticmethod
    def verify(input_data: VerifyInput, trace_id: Optional[str] = None) -> VerifyReport:
        """Run one suite; every field except `elapsed` is a function of (theorem, trials, seed, backend)"""

        logger.info(
            "verify_started",
            theorem=input_data.theorem.value,
            trials=input_data.trials,
            seed=input_data.seed,
            backend=input_data.backend.value,
            workers=input_data.workers,
            trace_id=trace_id,
        )

        try:
            tol = make_tolerance(input_data.backend, input_data.tolerance)
            outcome = verify_theorem(
                input_data.theorem,
                trials=input_data.trials,
                seed=input_data.seed,
                backend=input_data.backend,
                epsilon=tol.epsilon if input_data.tolerance is not None else None,
                workers=input_data.workers,
            )

            report = VerifyReport(
                theorem_id=outcome.theorem,
                trials=outcome.trials,
                failures=outcome.failures,
                seed=input_data.seed,
                backend=input_data.backend,
                first_failure_index=outcome.first_index,
                first_counterexample=(
                    BiquaternionModel.from_biquaternion(outcome.first_counterexample)
                    if outcome.first_counterexample is not None else None
                ),
                elapsed=round(outcome.elapsed, 6) if input_data.timing else None,
            )

            if outcome.failures:
                logger.warning(
                    "verify_failed",
                    theorem=input_data.theorem.value,
                    failures=outcome.failures,
                    first_failure_index=outcome.first_index,
                    trace_id=trace_id,
                )
            else:
                logger.info("verify_completed", theorem=input_data.theorem.value, trace_id=trace_id)

            return report

        except BiquaternionError as e:
            logger.error("verify_error", error=e.error, message=e.message, trace_id=trace_id)
            raise
