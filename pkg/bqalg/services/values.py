"""
Reading biquaternion values and tolerances from tool inputs
"""
import json
from typing import Optional

from pydantic import ValidationError

from bqalg.algebra.backends import Backend, Tolerance
from bqalg.algebra.biquaternion import Biquaternion, to_backend
from bqalg.algebra.text import parse_biquaternion
from bqalg.errors import ParseError
from bqalg.schemas.common import BiquaternionModel, ValueInput


def parse_json_value(text: str) -> BiquaternionModel:
    """A JSON-form document, e.g. one stdin line starting with '{'"""
    try:
        return BiquaternionModel.model_validate_json(text)
    except ValidationError as e:
        first = e.errors()[0]
        raise ParseError(
            f"invalid JSON biquaternion: {first['msg']}",
            position=0,
            expected="{\"backend\", \"W\", \"X\", \"Y\", \"Z\"}",
            text=text,
        ) from e


def load_value(raw: ValueInput, backend: Optional[Backend] = None) -> Biquaternion:
    """Text is parsed with the given backend (or the detected one); JSON values are converted to it"""
    if isinstance(raw, BiquaternionModel):
        q = raw.to_biquaternion()
    elif raw.lstrip().startswith("{"):
        q = parse_json_value(raw).to_biquaternion()
    else:
        return parse_biquaternion(raw, backend)
    return to_backend(q, backend) if backend is not None else q


def make_tolerance(backend: Backend, epsilon: Optional[float] = None) -> Tolerance:
    """Exact backend only admits epsilon = 0; approx defaults to settings.approx_tolerance"""
    if epsilon is None:
        return Tolerance.for_backend(backend)
    return Tolerance(float(epsilon), backend)


def describe(raw: ValueInput) -> str:
    """Short log-friendly rendering of a raw input"""
    if isinstance(raw, BiquaternionModel):
        return json.dumps(raw.model_dump(mode="json"))
    return raw
