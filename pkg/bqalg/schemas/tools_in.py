"""
Pydantic schemas for tool inputs
"""
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from bqalg.algebra.backends import Backend
from bqalg.algebra.generators import SEED_LIMIT, GenerationKind
from bqalg.algebra.verification import TheoremId
from bqalg.config import settings
from bqalg.schemas.common import ValueInput


class ComputeOp(str, Enum):
    PRODUCT = "product"
    SQUARE = "square"
    SEMINORM = "seminorm"
    INVERSE = "inverse"
    CONJUGATE = "conjugate"
    SUM = "sum"
    DIFFERENCE = "difference"
    COMPLEX_CONJUGATE = "complex-conjugate"
    PAIR = "pair"
    AXIS = "axis"
    ANNIHILATOR = "annihilator"
    CLASSIFY_ROOT = "classify-root"

    @property
    def arity(self) -> int:
        return 2 if self in (ComputeOp.PRODUCT, ComputeOp.SUM, ComputeOp.DIFFERENCE) else 1


class NormalizeForm(str, Enum):
    AUTO = "auto"
    IDEMPOTENT = "idempotent"
    NILPOTENT = "nilpotent"
    AXIS = "axis"


class ValueOptions(BaseModel):
    """Backend and tolerance shared by every tool taking biquaternion values"""

    backend: Optional[Backend] = Field(
        None, description="Scalar backend; detected from the literals when absent"
    )
    tolerance: Optional[float] = Field(
        None, ge=0, description="Zero-test epsilon on the approx backend"
    )


class ClassifyInput(ValueOptions):
    """Input schema for the classify tool"""

    value: ValueInput = Field(..., description="Biquaternion in text or JSON form")

    model_config = ConfigDict(
        json_schema_extra={"example": {"value": "(1+1I) + (1-1I)i + (-1-1I)j + (-1+1I)k"}}
    )


class ComputeInput(ValueOptions):
    """Input schema for the compute tool"""

    op: ComputeOp = Field(..., description="Operation to apply")
    operands: List[ValueInput] = Field(..., min_length=1, max_length=2, description="One or two operands")

    model_config = ConfigDict(
        json_schema_extra={"example": {"op": "square", "operands": ["i + Ij"]}}
    )


class NormalizeInput(ValueOptions):
    """Input schema for the normalize tool"""

    value: ValueInput = Field(..., description="Biquaternion in text or JSON form")
    form: NormalizeForm = Field(NormalizeForm.AUTO, description="Target normal form")


class GenerateInput(BaseModel):
    """Input schema for the generate tool"""

    kind: GenerationKind = Field(..., description="Structure of the generated values")
    count: int = Field(1, ge=1, description="Number of values")
    seed: int = Field(default_factory=lambda: settings.default_seed, ge=0, lt=SEED_LIMIT)
    backend: Backend = Field(default_factory=lambda: Backend(settings.default_backend))

    @field_validator("count")
    @classmethod
    def validate_count(cls, v):
        if v > settings.max_count:
            raise ValueError(f"count must not exceed {settings.max_count}")
        return v

    model_config = ConfigDict(
        json_schema_extra={"example": {"kind": "idempotent", "count": 1, "seed": 42}}
    )


class VerifyInput(BaseModel):
    """Input schema for the verify tool"""

    theorem: TheoremId = Field(..., description="Property suite to run")
    trials: int = Field(1000, ge=1, description="Number of independent trials")
    seed: int = Field(default_factory=lambda: settings.default_seed, ge=0, lt=SEED_LIMIT)
    backend: Backend = Field(default_factory=lambda: Backend(settings.default_backend))
    tolerance: Optional[float] = Field(None, ge=0, description="Zero-test epsilon on the approx backend")
    workers: int = Field(default_factory=lambda: settings.verify_workers, ge=1)
    timing: bool = Field(True, description="Report elapsed wall time")

    @field_validator("trials")
    @classmethod
    def validate_trials(cls, v):
        if v > settings.max_trials:
            raise ValueError(f"trials must not exceed {settings.max_trials}")
        return v

    model_config = ConfigDict(
        json_schema_extra={"example": {"theorem": "criterion-equivalence", "trials": 10000, "seed": 1}}
    )
