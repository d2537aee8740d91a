"""Base exception class for inexact-euler."""

import json
from typing import Any, Dict, Optional

from inexact_euler.error_codes.base import ErrorCode


class InexactEulerError(Exception):
    """Base of every error raised by the library; carries a catalogued error code."""

    def __init__(
        self,
        error_code: ErrorCode,
        message_params: Optional[Dict[str, Any]] = None,
        data: Optional[Any] = None,
        stack_trace: Optional[str] = None
    ):
        self.error_code = error_code
        self.message_params = message_params or {}
        self.data = data
        self.stack_trace = stack_trace

        self.message = error_code.get_message(**self.message_params)
        super().__init__(self.message)

    @property
    def exit_code(self) -> int:
        """Process exit status the CLI uses for this error."""
        return self.error_code.exit_code

    def to_dict(self, include_trace: bool = False) -> Dict[str, Any]:
        """
        Structured representation printed by the CLI.

        Args:
            include_trace: Attach the captured stack trace, if any

        Returns:
            Dict with code, severity, message and optional data
        """
        result: Dict[str, Any] = {
            "errorCode": self.error_code.code,
            "severity": self.error_code.severity.value,
            "message": self.message,
        }
        if self.data is not None:
            result["data"] = self.data
        if include_trace and self.stack_trace:
            result["stackTrace"] = self.stack_trace
        return result

    def to_json(self, include_trace: bool = False) -> str:
        """Convert to a JSON string."""
        return json.dumps(self.to_dict(include_trace), sort_keys=True, default=str)
