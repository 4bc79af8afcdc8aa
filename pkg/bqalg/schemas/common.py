"""
Wire form of algebra values shared by tool inputs and outputs
"""
from typing import List, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from bqalg.algebra.backends import Backend, ComplexScalar, Scalar, coerce_scalar
from bqalg.algebra.biquaternion import Biquaternion
from bqalg.algebra.quaternion import Quaternion

# Exact scalars travel as "p/q" strings, approx scalars as JSON numbers
ScalarValue = Union[str, float, int]
ComplexValue = Tuple[ScalarValue, ScalarValue]


def scalar_value(value: Scalar) -> ScalarValue:
    if isinstance(value, float):
        return value
    return str(value)


def complex_value(z: ComplexScalar) -> ComplexValue:
    return (scalar_value(z.re), scalar_value(z.im))


def quaternion_value(q: Quaternion) -> List[ScalarValue]:
    return [scalar_value(c) for c in q.components()]


class BiquaternionModel(BaseModel):
    """JSON form of a biquaternion: each component is [re, im]"""

    backend: Backend = Field(..., description="Scalar backend of the components")
    W: ComplexValue = Field(..., description="Scalar part")
    X: ComplexValue = Field(..., description="i component")
    Y: ComplexValue = Field(..., description="j component")
    Z: ComplexValue = Field(..., description="k component")

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "backend": "exact",
                "W": ["1/2", "0"],
                "X": ["0", "1/2"],
                "Y": ["0", "0"],
                "Z": ["0", "0"],
            }
        }
    )

    @classmethod
    def from_biquaternion(cls, q: Biquaternion) -> "BiquaternionModel":
        W, X, Y, Z = (complex_value(c) for c in q.components())
        return cls(backend=q.backend, W=W, X=X, Y=Y, Z=Z)

    def to_biquaternion(self) -> Biquaternion:
        def convert(pair: ComplexValue) -> ComplexScalar:
            re, im = pair
            return ComplexScalar(coerce_scalar(re, self.backend), coerce_scalar(im, self.backend))

        return Biquaternion(convert(self.W), convert(self.X), convert(self.Y), convert(self.Z))


# Text form or JSON form
ValueInput = Union[BiquaternionModel, str]
