"""
Pydantic schemas for tool outputs
"""
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from bqalg.algebra.backends import Backend
from bqalg.algebra.generators import GenerationKind
from bqalg.algebra.structure import Classification, DecompositionKind
from bqalg.algebra.verification import TheoremId
from bqalg.schemas.common import BiquaternionModel, ComplexValue, ScalarValue
from bqalg.schemas.tools_in import ComputeOp, NormalizeForm


class ClassifyOutput(BaseModel):
    """Classification with the evidence behind both divisor-of-zero criteria"""

    value: BiquaternionModel
    text: str = Field(..., description="Canonical text form of the input")
    compact: str = Field(..., description="Text form without zero components")
    classification: Classification
    semi_norm: ComplexValue = Field(..., description="W^2 + X^2 + Y^2 + Z^2")
    norm_real_part: ScalarValue = Field(..., description="Sum-of-squares norm of q_r")
    norm_imag_part: ScalarValue = Field(..., description="Sum-of-squares norm of q_i")
    inner_product: ScalarValue = Field(..., description="4-space inner product <q_r, q_i>")
    is_zero_divisor: Optional[bool] = Field(None, description="Absent for zero")

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "classification": "NonPureZeroDivisor",
                "semi_norm": ["0", "0"],
                "norm_real_part": "4",
                "norm_imag_part": "4",
                "inner_product": "0",
                "is_zero_divisor": True,
            }
        }
    )


class GeneratedValue(BaseModel):
    index: int
    value: BiquaternionModel
    text: str
    compact: str = Field(..., description="Text form without zero components")


class GenerateOutput(BaseModel):
    """Output of the generate tool"""

    kind: GenerationKind
    seed: int
    backend: Backend
    values: List[GeneratedValue] = Field(..., description="Generated values, each verified before emission")


class ScalarAxisModel(BaseModel):
    """q = A + axis * B"""

    A: ComplexValue
    B: ComplexValue
    axis: Optional[BiquaternionModel] = Field(None, description="Absent when the vector part is zero")


class ComputeOutput(BaseModel):
    """Output of the compute tool; which fields are set depends on the op"""

    op: ComputeOp
    backend: Backend
    result: Optional[BiquaternionModel] = None
    text: Optional[str] = None
    compact: Optional[str] = None
    scalar: Optional[ComplexValue] = Field(None, description="Complex result (seminorm)")
    real_part: Optional[List[ScalarValue]] = Field(None, description="q_r as [w, x, y, z] (pair)")
    imag_part: Optional[List[ScalarValue]] = Field(None, description="q_i as [w, x, y, z] (pair)")
    scalar_axis: Optional[ScalarAxisModel] = None
    witnesses: Optional[List[BiquaternionModel]] = Field(
        None, description="Nonzero values annihilating the input (annihilator)"
    )
    is_root_of_minus_one: Optional[bool] = None


class NormalizeOutput(BaseModel):
    """Output of the normalize tool"""

    form: NormalizeForm
    value: BiquaternionModel
    decomposition: Optional[DecompositionKind] = None
    # idempotent form: value = alpha * idempotent
    alpha: Optional[ComplexValue] = None
    idempotent: Optional[BiquaternionModel] = None
    # nilpotent form: value = scale * (mu + I nu)
    mu: Optional[List[ScalarValue]] = None
    nu: Optional[List[ScalarValue]] = None
    common_norm: Optional[ScalarValue] = None
    scale: Optional[ScalarValue] = None
    # axis form
    scalar_axis: Optional[ScalarAxisModel] = None


class VerifyReport(BaseModel):
    """Outcome of a randomized property suite"""

    theorem_id: TheoremId
    trials: int
    failures: int
    seed: int
    backend: Backend
    first_failure_index: Optional[int] = None
    first_counterexample: Optional[BiquaternionModel] = None
    elapsed: Optional[float] = Field(None, description="Wall time in seconds; not deterministic")

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "theorem_id": "criterion-equivalence",
                "trials": 10000,
                "failures": 0,
                "seed": 1,
                "backend": "exact",
                "elapsed": 1.84,
            }
        }
    )


class ToolError(BaseModel):
    """Error response schema"""

    error: str = Field(..., description="Error code")
    name: str = Field(..., description="Error name, e.g. ZeroDivisor")
    message: str = Field(..., description="Error message")
    trace_id: Optional[str] = Field(None, description="Trace ID for debugging")
    details: Optional[Dict[str, Any]] = Field(None, description="Additional error details")

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "error": "ZERO_DIVISOR",
                "name": "ZeroDivisor",
                "message": "semi-norm vanishes: no inverse exists",
                "trace_id": "abc-123",
            }
        }
    )


class HealthCheckOutput(BaseModel):
    """Health check response"""

    status: str = "healthy"
    app: str
    version: str
    backends: List[Backend]
