"""
bqalg command line

    bqalg classify|generate|compute|normalize|verify [flags]

Results go to stdout as JSON lines, logs and error reports to stderr.
Exit codes: 0 success, 1 property failure, 2 usage or parse error, 3 domain error.
"""
import argparse
import sys
import uuid
from typing import Callable, Iterable, List, Optional, Sequence

import structlog
from pydantic import BaseModel, ValidationError

from bqalg.algebra.backends import Backend
from bqalg.algebra.generators import GenerationKind
from bqalg.algebra.verification import TheoremId
from bqalg.config import settings
from bqalg.errors import BiquaternionError, UsageError
from bqalg.logging import setup_logging
from bqalg.schemas.common import ValueInput
from bqalg.schemas.tools_in import (
    ClassifyInput,
    ComputeInput,
    ComputeOp,
    GenerateInput,
    NormalizeForm,
    NormalizeInput,
    VerifyInput,
)
from bqalg.schemas.tools_out import ToolError
from bqalg.services.classification import ClassificationService
from bqalg.services.computation import ComputationService
from bqalg.services.generation import GenerationService
from bqalg.services.values import parse_json_value
from bqalg.services.verification import VerificationService

logger = structlog.get_logger()

EXIT_OK = 0
EXIT_PROPERTY_FAILURE = 1
EXIT_USAGE = 2


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def seed_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("seed must be nonnegative")
    return value


def emit(model: BaseModel) -> None:
    sys.stdout.write(model.model_dump_json(exclude_none=True) + "\n")


def report(error: ToolError) -> None:
    sys.stderr.write(error.model_dump_json(exclude_none=True) + "\n")


def read_values(args: argparse.Namespace) -> List[ValueInput]:
    """Positional values, or one value per non-blank stdin line"""
    raw: Iterable[str] = args.values if args.values else sys.stdin
    values: List[ValueInput] = []
    for line in raw:
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        values.append(parse_json_value(text) if args.json else text)
    if not values:
        raise UsageError("no input: pass an expression or write one per line to stdin")
    return values


def value_options(args: argparse.Namespace) -> dict:
    options = {}
    if args.backend is not None:
        options["backend"] = Backend(args.backend)
    if args.tolerance is not None:
        options["tolerance"] = args.tolerance
    return options


# Commands


def cmd_classify(args: argparse.Namespace, trace_id: str) -> int:
    for raw in read_values(args):
        emit(ClassificationService.classify(ClassifyInput(value=raw, **value_options(args)), trace_id))
    return EXIT_OK


def cmd_generate(args: argparse.Namespace, trace_id: str) -> int:
    fields = {"kind": GenerationKind(args.kind), "count": args.count}
    if args.seed is not None:
        fields["seed"] = args.seed
    if args.backend is not None:
        fields["backend"] = Backend(args.backend)
    input_data = GenerateInput(**fields)
    logger.info("generate_command", kind=input_data.kind.value, count=input_data.count, seed=input_data.seed)
    for value in GenerationService.iter_values(input_data, trace_id):
        emit(value)
    return EXIT_OK


def cmd_compute(args: argparse.Namespace, trace_id: str) -> int:
    op = ComputeOp(args.op)
    values = read_values(args)
    if op.arity == 2:
        if len(values) != 2:
            raise UsageError(f"{op.value} takes exactly 2 operands", details={"given": len(values)})
        groups = [values]
    else:
        groups = [[v] for v in values]
    for operands in groups:
        emit(ComputationService.compute(ComputeInput(op=op, operands=operands, **value_options(args)), trace_id))
    return EXIT_OK


def cmd_normalize(args: argparse.Namespace, trace_id: str) -> int:
    form = NormalizeForm(args.form)
    for raw in read_values(args):
        emit(ComputationService.normalize(NormalizeInput(value=raw, form=form, **value_options(args)), trace_id))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, trace_id: str) -> int:
    fields = {"theorem": TheoremId(args.theorem), "trials": args.trials, "timing": not args.no_timing}
    for name in ("seed", "tolerance", "workers"):
        if getattr(args, name) is not None:
            fields[name] = getattr(args, name)
    if args.backend is not None:
        fields["backend"] = Backend(args.backend)
    result = VerificationService.verify(VerifyInput(**fields), trace_id)
    emit(result)
    return EXIT_PROPERTY_FAILURE if result.failures else EXIT_OK


# Parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--backend", choices=[b.value for b in Backend], default=None,
                        help="scalar backend (default: detected from literals, or settings for generate/verify)")
    common.add_argument("--tolerance", type=float, default=None, metavar="EPS",
                        help=f"zero-test epsilon on the approx backend (default {settings.approx_tolerance})")
    common.add_argument("--json", action="store_true",
                        help="read inputs as JSON-form documents only")
    common.add_argument("--log-level", default=None, help=f"log level (default {settings.log_level})")

    parser = argparse.ArgumentParser(
        prog="bqalg",
        description="Divisors of zero, idempotents and nilpotents of the biquaternion algebra",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.app_version}")
    commands = parser.add_subparsers(dest="command", required=True)

    classify = commands.add_parser("classify", parents=[common], help="classify biquaternions")
    classify.add_argument("values", nargs="*", help="expressions; stdin lines when absent")
    classify.set_defaults(handler=cmd_classify)

    generate = commands.add_parser("generate", parents=[common], help="seeded structured values")
    generate.add_argument("kind", choices=[k.value for k in GenerationKind])
    generate.add_argument("--count", type=positive_int, default=1)
    generate.add_argument("--seed", type=seed_int, default=None)
    generate.set_defaults(handler=cmd_generate, values=None)

    compute = commands.add_parser("compute", parents=[common], help="arithmetic")
    compute.add_argument("op", choices=[o.value for o in ComputeOp])
    compute.add_argument("values", nargs="*", help="operands; stdin lines when absent")
    compute.set_defaults(handler=cmd_compute)

    normalize = commands.add_parser("normalize", parents=[common], help="normal forms")
    normalize.add_argument("values", nargs="*", help="expressions; stdin lines when absent")
    normalize.add_argument("--form", choices=[f.value for f in NormalizeForm], default=NormalizeForm.AUTO.value)
    normalize.set_defaults(handler=cmd_normalize)

    verify = commands.add_parser("verify", parents=[common], help="randomized property suites")
    verify.add_argument("theorem", choices=[t.value for t in TheoremId])
    verify.add_argument("--trials", type=positive_int, default=1000)
    verify.add_argument("--seed", type=seed_int, default=None)
    verify.add_argument("--workers", type=positive_int, default=None,
                        help=f"worker processes (default {settings.verify_workers})")
    verify.add_argument("--no-timing", action="store_true", help="omit elapsed from the report")
    verify.set_defaults(handler=cmd_verify, values=None)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    setup_logging(level=args.log_level)
    trace_id = str(uuid.uuid4())
    structlog.contextvars.bind_contextvars(trace_id=trace_id)
    handler: Callable[[argparse.Namespace, str], int] = args.handler

    try:
        return handler(args, trace_id)
    except BiquaternionError as e:
        report(ToolError(error=e.error, name=e.name, message=e.message, trace_id=trace_id,
                         details=e.details or None))
        return e.exit_code
    except ValidationError as e:
        first = e.errors()[0]
        report(ToolError(
            error="VALIDATION_ERROR",
            name="UsageError",
            message=f"{'.'.join(str(p) for p in first['loc'])}: {first['msg']}",
            trace_id=trace_id,
        ))
        return EXIT_USAGE
    finally:
        structlog.contextvars.unbind_contextvars("trace_id")


if __name__ == "__main__":
    sys.exit(main())
