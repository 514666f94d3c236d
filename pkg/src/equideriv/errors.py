class EquiderivError(Exception):
    """Base class for all library errors."""


class ValidationError(EquiderivError):
    """Input violates a documented precondition or structural invariant."""


class LimitError(ValidationError):
    """A size bound (group order, number of variables) was exceeded."""


class ParseError(ValidationError):
    def __init__(self, message: str, text: str = "", column: int | None = None, where: str = ""):
        self.text = text
        self.column = column
        self.where = where
        loc = f" at column {column}" if column is not None else ""
        ctx = f" in {where}" if where else ""
        super().__init__(f"{message}{loc}{ctx}: {text!r}" if text else f"{message}{loc}{ctx}")


class InternalConsistencyError(EquiderivError):
    """A guaranteed mathematical identity failed: this is a bug, not bad input."""
