import logging

from functools import wraps
from typing import Any, Callable, TypeVar, cast

from .exceptions import PunctureMetricError

logger = logging.getLogger(__name__)
T = TypeVar("T", bound=Callable[..., Any])


def handle_command_error(
    command: str, error: Exception | str, detail: str | None = None
) -> dict[str, Any]:
    if isinstance(error, Exception):
        error_name = type(error).__name__
        error_detail = getattr(error, "message", None) or str(error)
    else:
        error_name = error
        error_detail = detail or "Unknown error"

    logger.error(f"Error in {command} command: {error_name} - {error_detail}")

    return {
        "status": "error",
        "command": command,
        "error_name": error_name,
        "error_message": error_detail,
    }


def wrap_command_with_error_handling(command: str):
    """
    Decorator that catches library errors raised by a command body and returns the
    structured error object instead of letting the traceback reach the terminal.

    Usage:
    ------
    @wrap_command_with_error_handling("coeffs")
    def build_coefficients(...): ...
    """

    def decorator(func: T) -> T:
        @wraps(func)
        def wrapper(*args, **kwargs) -> Any:
            try:
                return func(*args, **kwargs)
            except (PunctureMetricError, ValueError, ZeroDivisionError) as e:
                return handle_command_error(command, e)

        return cast(T, wrapper)

    return decorator


def is_error_response(payload: Any) -> bool:
    return isinstance(payload, dict) and payload.get("status") == "error"
