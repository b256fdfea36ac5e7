"""Shared exception types, mapped to CLI exit codes by the front end."""


class CapacityError(RuntimeError):
    """An operation would exceed a configured size cap (vertices, bits, ...)."""


class Graph6Error(ValueError):
    """Malformed graph6 input; carries the byte offset of the fault."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset
