"""Exception types shared across the package."""


class SetFormatError(ValueError):
    """A set file could not be parsed. Carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BudgetExceededError(RuntimeError):
    """An enumeration guard (tuple count, mask range, ...) was exceeded."""


class CertificateError(RuntimeError):
    """A constructed map failed its exhaustive isomorphism verification."""


class ApproximationError(RuntimeError):
    """Float-side preprocessing cannot proceed (degenerate gap or exhausted
    denominator search). The message carries the diagnostic."""
