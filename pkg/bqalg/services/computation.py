"""
Computation service - arithmetic on biquaternions and normal forms of divisors of zero
"""
from typing import List, Optional

import structlog

from bqalg.algebra.backends import Backend, Tolerance, complex_is_zero
from bqalg.algebra.biquaternion import (
    Biquaternion,
    ScalarAxisForm,
    add,
    annihilator,
    complex_conjugate,
    conjugate,
    inverse,
    is_zero,
    multiply,
    pair_view,
    scalar_axis_form,
    semi_norm,
    square,
    subtract,
    to_backend,
    tolerance_scale,
)
from bqalg.algebra.structure import (
    Classification,
    DecompositionKind,
    classify,
    idempotent_partner,
    is_pure,
    is_root_of_minus_one,
    normalize_nilpotent,
    normalize_to_idempotent,
)
from bqalg.algebra.text import format_biquaternion, format_compact
from bqalg.errors import BiquaternionError, UsageError, ZeroInputError
from bqalg.schemas.common import (
    BiquaternionModel,
    ValueInput,
    complex_value,
    quaternion_value,
    scalar_value,
)
from bqalg.schemas.tools_in import ComputeInput, ComputeOp, NormalizeForm, NormalizeInput
from bqalg.schemas.tools_out import ComputeOutput, NormalizeOutput, ScalarAxisModel
from bqalg.services.values import describe, load_value, make_tolerance

logger = structlog.get_logger()


def load_operands(raw: List[ValueInput], backend: Optional[Backend]) -> List[Biquaternion]:
    """Without an explicit backend, one approx operand promotes all operands to approx"""
    values = [load_value(r, backend) for r in raw]
    if backend is None and any(v.backend is Backend.APPROX for v in values):
        values = [to_backend(v, Backend.APPROX) for v in values]
    return values


def _axis_model(form: ScalarAxisForm) -> ScalarAxisModel:
    return ScalarAxisModel(
        A=complex_value(form.A),
        B=complex_value(form.B),
        axis=BiquaternionModel.from_biquaternion(form.axis) if form.axis is not None else None,
    )


def _with_result(output: ComputeOutput, q: Biquaternion) -> ComputeOutput:
    output.result = BiquaternionModel.from_biquaternion(q)
    output.text = format_biquaternion(q)
    output.compact = format_compact(q)
    return output


class ComputationService:
    """Service for arithmetic and normalization"""

    @staticmethod
    def compute(input_data: ComputeInput, trace_id: Optional[str] = None) -> ComputeOutput:
        """Apply one operation to its operands"""

        op = input_data.op
        logger.info(
            "compute_started",
            op=op.value,
            operands=[describe(r) for r in input_data.operands],
            trace_id=trace_id,
        )

        try:
            if len(input_data.operands) != op.arity:
                raise UsageError(
                    f"{op.value} takes {op.arity} operand(s)",
                    details={"op": op.value, "given": len(input_data.operands)},
                )
            operands = load_operands(input_data.operands, input_data.backend)
            q = operands[0]
            tol = make_tolerance(q.backend, input_data.tolerance)
            output = ComputeOutput(op=op, backend=q.backend)

            if op is ComputeOp.PRODUCT:
                _with_result(output, multiply(q, operands[1]))
            elif op is ComputeOp.SUM:
                _with_result(output, add(q, operands[1]))
            elif op is ComputeOp.DIFFERENCE:
                _with_result(output, subtract(q, operands[1]))
            elif op is ComputeOp.SQUARE:
                _with_result(output, square(q))
            elif op is ComputeOp.SEMINORM:
                output.scalar = complex_value(semi_norm(q))
            elif op is ComputeOp.INVERSE:
                _with_result(output, inverse(q, tol))
            elif op is ComputeOp.CONJUGATE:
                _with_result(output, conjugate(q))
            elif op is ComputeOp.COMPLEX_CONJUGATE:
                _with_result(output, complex_conjugate(q))
            elif op is ComputeOp.PAIR:
                view = pair_view(q)
                output.real_part = quaternion_value(view.real_part)
                output.imag_part = quaternion_value(view.imag_part)
            elif op is ComputeOp.AXIS:
                output.scalar_axis = _axis_model(scalar_axis_form(q, tol))
            elif op is ComputeOp.ANNIHILATOR:
                witness = annihilator(q, tol)
                witnesses = [witness]
                if classify(q, tol) is Classification.IDEMPOTENT:
                    # q (1 - q) = 0 as well
                    witnesses.append(idempotent_partner(q, tol))
                _with_result(output, witness)
                output.witnesses = [BiquaternionModel.from_biquaternion(w) for w in witnesses]
            elif op is ComputeOp.CLASSIFY_ROOT:
                output.is_root_of_minus_one = is_root_of_minus_one(q, tol)

            logger.info("compute_completed", op=op.value, backend=q.backend.value, trace_id=trace_id)

            return output

        except BiquaternionError as e:
            logger.error("compute_error", op=op.value, error=e.error, message=e.message, trace_id=trace_id)
            raise

    @staticmethod
    def resolve_form(q: Biquaternion, tol: Tolerance) -> NormalizeForm:
        """auto: idempotent form for non-pure divisors of zero, nilpotent form for nilpotents, axis otherwise"""
        scale = tolerance_scale(q, tol)
        if is_zero(q, tol, scale):
            raise ZeroInputError("zero has no normal form", details={"value": format_biquaternion(q)})
        if complex_is_zero(semi_norm(q), tol, scale):
            return NormalizeForm.NILPOTENT if is_pure(q, tol) else NormalizeForm.IDEMPOTENT
        return NormalizeForm.AXIS

    @staticmethod
    def normalize(input_data: NormalizeInput, trace_id: Optional[str] = None) -> NormalizeOutput:
        """Bring a value to the requested normal form"""

        logger.info(
            "normalize_started",
            value=describe(input_data.value),
            form=input_data.form.value,
            trace_id=trace_id,
        )

        try:
            q = load_value(input_data.value, input_data.backend)
            tol = make_tolerance(q.backend, input_data.tolerance)
            form = input_data.form
            explicit = form is not NormalizeForm.AUTO
            if not explicit:
                form = ComputationService.resolve_form(q, tol)
            output = NormalizeOutput(form=form, value=BiquaternionModel.from_biquaternion(q))

            if form is NormalizeForm.IDEMPOTENT:
                alpha, idempotent = normalize_to_idempotent(q, tol)
                output.decomposition = DecompositionKind.NON_PURE
                output.alpha = complex_value(alpha)
                output.idempotent = BiquaternionModel.from_biquaternion(idempotent)
            elif form is NormalizeForm.NILPOTENT:
                normal = normalize_nilpotent(q, tol)
                output.decomposition = DecompositionKind.PURE
                output.mu = quaternion_value(normal.mu)
                output.nu = quaternion_value(normal.nu)
                output.common_norm = scalar_value(normal.common_norm)
                output.scale = scalar_value(normal.scale)
            else:
                # auto only lands here for values with a nonzero semi-norm, where a scalar is fine
                output.scalar_axis = _axis_model(scalar_axis_form(q, tol, allow_zero_vector=not explicit))

            logger.info("normalize_completed", form=form.value, backend=q.backend.value, trace_id=trace_id)

            return output

        except BiquaternionError as e:
            logger.error("normalize_error", error=e.error, message=e.message, trace_id=trace_id)
            raise
