"""
Catalogued error codes.

A code reads EUL<GG><NNNN>: GG is the failure group, NNNN a running number.
The group fixes the process exit status unless an entry overrides it.
"""

import re
from dataclasses import dataclass
from typing import ClassVar, Dict, Optional

from inexact_euler.enums import ErrorSeverity

EXIT_INTERNAL = 1
EXIT_CONFIG = 2
EXIT_PRECONDITION = 3
EXIT_BOUND_VIOLATION = 4

CODE_PATTERN = re.compile(r"^EUL(\d{2})(\d{4})$")

GROUP_INPUT_DOMAIN = 10
GROUP_CONFIGURATION = 20
GROUP_NUMERICAL = 30
GROUP_BOUND_VIOLATION = 40
GROUP_INTERNAL = 90

GROUP_EXIT_CODES: Dict[int, int] = {
    GROUP_INPUT_DOMAIN: EXIT_CONFIG,
    GROUP_CONFIGURATION: EXIT_CONFIG,
    GROUP_NUMERICAL: EXIT_PRECONDITION,
    GROUP_BOUND_VIOLATION: EXIT_BOUND_VIOLATION,
    GROUP_INTERNAL: EXIT_INTERNAL,
}


@dataclass(frozen=True)
class ErrorCode:
    """
    A catalogued failure.

    Attributes:
        code: EUL followed by a two-digit group and a four-digit number
        severity: Severity reported with the error
        message_template: str.format template filled from the exception's message parameters
        exit_code: CLI exit status; derived from the group when None
    """
    code: str
    severity: ErrorSeverity
    message_template: str
    exit_code: Optional[int] = None

    _registry: ClassVar[Dict[str, "ErrorCode"]] = {}

    def __post_init__(self):
        match = CODE_PATTERN.match(self.code)
        if match is None:
            raise ValueError(f"Invalid error code format: {self.code}. Must be in EULggnnnn format.")
        if self.exit_code is None:
            object.__setattr__(self, "exit_code", GROUP_EXIT_CODES.get(int(match.group(1)), EXIT_INTERNAL))

        known = ErrorCode._registry.get(self.code)
        if known is not None and known != self:
            raise ValueError(f"error code {self.code} is already registered as '{known.message_template}'")
        ErrorCode._registry[self.code] = self

    @staticmethod
    def _validate_code_format(code: str) -> bool:
        return CODE_PATTERN.match(code) is not None

    @property
    def group(self) -> int:
        """The GG part of the code."""
        return int(self.code[3:5])

    def get_message(self, **kwargs) -> str:
        """
        Fill the message template.

        A missing parameter does not raise; the raw template is returned with
        a note naming the parameter.
        """
        try:
            return self.message_template.format(**kwargs)
        except KeyError as e:
            return f"{self.message_template} (missing message parameter: {e})"
        except (IndexError, TypeError, ValueError):
            return self.message_template

    @classmethod
    def get_by_code(cls, code: str) -> Optional["ErrorCode"]:
        """Registered entry for a code string, None if unknown."""
        return cls._registry.get(code)
