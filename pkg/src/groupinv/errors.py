"""Shared exception types.

Arithmetic failures (division by zero) raise the builtin ZeroDivisionError;
everything else that callers may want to distinguish gets a class here.
"""

from __future__ import annotations


class InputError(ValueError):
    """A caller-supplied object violates a documented precondition."""


class ResourceLimitError(RuntimeError):
    """A configured budget (element count, prime search range, ...) ran out."""


class InternalCheckError(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
