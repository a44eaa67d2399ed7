"""Exception hierarchy.  The CLI maps each family to an exit code."""


class Gf2MatError(Exception):
    exit_code = 1


class InputError(Gf2MatError, ValueError):
    """Malformed input or a violated precondition."""

    exit_code = 2


class PreconditionError(InputError):
    pass


class MatroidFormatError(InputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BudgetExceeded(Gf2MatError):
    """A search hit its node/codimension budget before reaching a verdict."""

    exit_code = 3

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class InternalConsistencyError(Gf2MatError, AssertionError):
    """A result contradicts a proven lemma; indicates a bug."""

    exit_code = 4
