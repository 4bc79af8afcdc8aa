"""
bqalg HTTP application
FastAPI server exposing the biquaternion tools
"""
import time
import uuid

import structlog
from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from bqalg.algebra.backends import Backend
from bqalg.api.tools import router as tools_router
from bqalg.api.tools import status_for
from bqalg.config import settings
from bqalg.errors import BiquaternionError
from bqalg.logging import setup_logging
from bqalg.schemas.tools_out import HealthCheckOutput, ToolError

# Setup structured logging
setup_logging()
logger = structlog.get_logger()

# Create FastAPI application
app = FastAPI(
    title=settings.app_name,
    version=settings.app_version,
    description="Divisors of zero, idempotents and nilpotents of the biquaternion algebra",
    debug=settings.debug,
)

# Add CORS middleware
app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.allowed_origins,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


@app.middleware("http")
async def logging_middleware(request: Request, call_next):
    """Add request logging and tracing"""
    trace_id = str(uuid.uuid4())
    request.state.trace_id = trace_id

    start_time = time.time()

    logger.info(
        "request_started",
        method=request.method,
        path=request.url.path,
        trace_id=trace_id,
        user_agent=request.headers.get("user-agent"),
        client_ip=request.client.host if request.client else None,
    )

    response = await call_next(request)

    duration = time.time() - start_time

    logger.info(
        "request_completed",
        method=request.method,
        path=request.url.path,
        status_code=response.status_code,
        duration_ms=round(duration * 1000, 2),
        trace_id=trace_id,
    )

    response.headers["X-Trace-ID"] = trace_id

    return response


@app.exception_handler(BiquaternionError)
async def algebra_exception_handler(request: Request, exc: BiquaternionError):
    """Errors raised outside the tool routes"""
    trace_id = getattr(request.state, "trace_id", str(uuid.uuid4()))

    logger.warning("algebra_error", error=exc.error, message=exc.message, trace_id=trace_id)

    body = ToolError(
        error=exc.error,
        name=exc.name,
        message=exc.message,
        trace_id=trace_id,
        details=exc.details or None,
    )
    return JSONResponse(
        status_code=status_for(exc),
        content=body.model_dump(exclude_none=True),
        headers={"X-Trace-ID": trace_id},
    )


@app.exception_handler(Exception)
async def global_exception_handler(request: Request, exc: Exception):
    """Global exception handler"""
    trace_id = getattr(request.state, "trace_id", str(uuid.uuid4()))

    logger.error(
        "unhandled_exception",
        exception=str(exc),
        exception_type=exc.__class__.__name__,
        trace_id=trace_id,
        path=request.url.path,
    )

    return JSONResponse(
        status_code=500,
        content={
            "error": "INTERNAL_ERROR",
            "message": "An internal error occurred",
            "trace_id": trace_id,
        },
        headers={"X-Trace-ID": trace_id},
    )


@app.get("/health", response_model=HealthCheckOutput)
async def health_check():
    """Health check endpoint"""
    return HealthCheckOutput(
        app=settings.app_name,
        version=settings.app_version,
        backends=list(Backend),
    )


# Tools router
app.include_router(tools_router, prefix="/tools", tags=["Tools"])


@app.get("/")
async def root():
    """Root endpoint"""
    return {
        "message": f"Welcome to {settings.app_name}",
        "version": settings.app_version,
        "tools_endpoint": "/tools",
        "health_endpoint": "/health",
    }
