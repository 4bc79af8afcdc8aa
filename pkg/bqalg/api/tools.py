"""
Tool API endpoints
classify, generate, compute, normalize and verify over HTTP
"""
from datetime import datetime, timezone
from typing import NoReturn

import structlog
from fastapi import APIRouter, HTTPException, Request, status

from bqalg.errors import BiquaternionError, DomainError, UsageError
from bqalg.schemas.tools_in import (
    ClassifyInput,
    ComputeInput,
    GenerateInput,
    NormalizeInput,
    VerifyInput,
)
from bqalg.schemas.tools_out import (
    ClassifyOutput,
    ComputeOutput,
    GenerateOutput,
    NormalizeOutput,
    ToolError,
    VerifyReport,
)
from bqalg.services.classification import ClassificationService
from bqalg.services.computation import ComputationService
from bqalg.services.generation import GenerationService
from bqalg.services.verification import VerificationService

logger = structlog.get_logger()
router = APIRouter()

TOOLS = ["classify", "generate", "compute", "normalize", "verify"]


def status_for(error: BiquaternionError) -> int:
    if isinstance(error, UsageError):
        return status.HTTP_400_BAD_REQUEST
    if isinstance(error, DomainError):
        return status.HTTP_422_UNPROCESSABLE_ENTITY
    return status.HTTP_500_INTERNAL_SERVER_ERROR


def raise_tool_error(tool: str, error: Exception, trace_id: str) -> NoReturn:
    """Map a service failure onto an HTTPException carrying a ToolError"""
    if isinstance(error, BiquaternionError):
        code = status_for(error)
        detail = ToolError(
            error=error.error,
            name=error.name,
            message=error.message,
            trace_id=trace_id,
            details=error.details or None,
        )
    else:
        logger.error(f"{tool}_error", error=str(error), trace_id=trace_id)
        code = status.HTTP_500_INTERNAL_SERVER_ERROR
        detail = ToolError(
            error="INTERNAL_ERROR",
            name="InternalError",
            message=f"Error running {tool}",
            trace_id=trace_id,
        )
    raise HTTPException(status_code=code, detail=detail.model_dump(exclude_none=True))


@router.post("/classify", response_model=ClassifyOutput, response_model_exclude_none=True)
def classify(request: Request, input_data: ClassifyInput):
    """Classify a biquaternion: Zero, TrivialIdempotent, Idempotent, Nilpotent, NonPureZeroDivisor or Invertible"""
    trace_id = getattr(request.state, "trace_id", "unknown")
    try:
        return ClassificationService.classify(input_data, trace_id)
    except Exception as e:
        raise_tool_error("classify", e, trace_id)


@router.post("/generate", response_model=GenerateOutput)
def generate(request: Request, input_data: GenerateInput):
    """Seeded idempotents, nilpotents, divisors of zero or roots of -1"""
    trace_id = getattr(request.state, "trace_id", "unknown")
    try:
        return GenerationService.generate(input_data, trace_id)
    except Exception as e:
        raise_tool_error("generate", e, trace_id)


@router.post("/compute", response_model=ComputeOutput, response_model_exclude_none=True)
def compute(request: Request, input_data: ComputeInput):
    """Arithmetic: product, square, seminorm, inverse, conjugates, pair, axis, annihilator"""
    trace_id = getattr(request.state, "trace_id", "unknown")
    try:
        return ComputationService.compute(input_data, trace_id)
    except Exception as e:
        raise_tool_error("compute", e, trace_id)


@router.post("/normalize", response_model=NormalizeOutput, response_model_exclude_none=True)
def normalize(request: Request, input_data: NormalizeInput):
    """Idempotent, nilpotent or scalar/axis normal form"""
    trace_id = getattr(request.state, "trace_id", "unknown")
    try:
        return ComputationService.normalize(input_data, trace_id)
    except Exception as e:
        raise_tool_error("normalize", e, trace_id)


@router.post("/verify", response_model=VerifyReport, response_model_exclude_none=True)
def verify(request: Request, input_data: VerifyInput):
    """Run a randomized property suite; failures are reported, not raised"""
    trace_id = getattr(request.state, "trace_id", "unknown")
    try:
        return VerificationService.verify(input_data, trace_id)
    except Exception as e:
        raise_tool_error("verify", e, trace_id)


@router.get("/health")
async def tools_health():
    """Tools health check"""
    return {
        "status": "healthy",
        "tools": TOOLS,
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }
