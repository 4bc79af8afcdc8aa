"""
Error hierarchy shared by the algebra kernel, the services, the CLI and the HTTP tools
"""
from typing import Any, Dict, Optional


class BiquaternionError(Exception):
    """Base error: carries a machine code, a reported name and a process exit code"""

    error = "INTERNAL_ERROR"
    name = "BiquaternionError"
    exit_code = 1

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}


class UsageError(BiquaternionError):
    """Bad input text, flags or backend combination"""
    error = "USAGE_ERROR"
    name = "UsageError"
    exit_code = 2


class DomainError(BiquaternionError):
    """A well-formed request outside an operation's mathematical domain"""
    error = "DOMAIN_ERROR"
    name = "DomainError"
    exit_code = 3


class ParseError(UsageError):
    error = "PARSE_ERROR"
    name = "ParseError"

    def __init__(self, message: str, position: int, expected: str, text: str = ""):
        super().__init__(
            f"{message} at position {position}: expected {expected}",
            details={"position": position, "expected": expected, "text": text},
        )
        self.position = position
        self.expected = expected


class BackendMismatchError(UsageError):
    error = "BACKEND_MISMATCH"
    name = "BackendMismatch"


class UnsupportedBackendError(UsageError):
    error = "UNSUPPORTED_BACKEND"
    name = "UnsupportedBackend"


class NonFiniteValueError(DomainError):
    error = "NON_FINITE"
    name = "NonFiniteValue"


class ZeroDivisorError(DomainError):
    error = "ZERO_DIVISOR"
    name = "ZeroDivisor"


class AxisUndefinedError(DomainError):
    error = "AXIS_UNDEFINED"
    name = "AxisUndefined"


class ZeroVectorPartError(DomainError):
    error = "ZERO_VECTOR_PART"
    name = "ZeroVectorPart"


class IrrationalAxisError(DomainError):
    error = "IRRATIONAL_AXIS"
    name = "IrrationalAxis"


class ZeroInputError(DomainError):
    error = "ZERO_INPUT"
    name = "ZeroInput"


class NotZeroDivisorError(DomainError):
    error = "NOT_ZERO_DIVISOR"
    name = "NotZeroDivisor"


class PureInputError(DomainError):
    error = "PURE_INPUT"
    name = "PureInput"


class NotNilpotentError(DomainError):
    error = "NOT_NILPOTENT"
    name = "NotNilpotent"


class BadFrameError(DomainError):
    error = "BAD_FRAME"
    name = "BadFrame"


class ZeroScaleError(DomainError):
    error = "ZERO_SCALE"
    name = "ZeroScale"


class TrivialRootError(DomainError):
    error = "TRIVIAL_ROOT"
    name = "TrivialRoot"


class NotRootOfMinusOneError(DomainError):
    error = "NOT_ROOT_OF_MINUS_ONE"
    name = "NotRootOfMinusOne"


class InvariantViolationError(BiquaternionError):
    """Two equivalent criteria disagreed, or a constructor postcondition failed"""
    error = "INVARIANT_VIOLATION"
    name = "InvariantViolation"
    exit_code = 1
