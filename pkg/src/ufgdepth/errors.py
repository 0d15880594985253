"""
Exception hierarchy for ufgdepth.

Every error carries a machine-readable ``code`` so the CLI can serialise it
into the versioned error JSON object.
"""

from typing import Any, Dict, Optional


class UfgError(Exception):
    """Base class for all errors raised by ufgdepth."""

    code = "ufg_error"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        return {"code": self.code, "message": self.message, "details": self.details}


class InputError(UfgError):
    """Raised for unknown ids, elements outside a ground space or bad shapes."""

    code = "input_error"


class IngestError(InputError):
    """Raised when an input file fails validation."""

    code = "ingest_error"

    def __init__(self, message: str, errors: Optional[list] = None, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, details)
        self.errors = errors or []

    def to_dict(self) -> Dict[str, Any]:
        payload = super().to_dict()
        payload["details"] = dict(payload["details"])
        payload["details"]["errors"] = [
            {
                "error_type": err.error_type,
                "message": err.message,
                "column": err.column_name,
                "lines": err.line_numbers,
            }
            for err in self.errors
        ]
        return payload


class ResourceLimitError(UfgError):
    """Raised when an input exceeds a configured size limit."""

    code = "resource_limit"


class ConfigurationError(UfgError):
    """Raised for invalid run configuration (weights, j_max, missing raster...)."""

    code = "configuration_error"


class UnsupportedOperationError(UfgError):
    """Raised when an operation is not defined for a closure descriptor."""

    code = "unsupported_operation"
