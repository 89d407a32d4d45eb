"""Exception types shared across the package."""


class ContractError(ValueError):
    """An operation was called with arguments violating its contract."""


class ConfigurationError(ValueError):
    """A config object is internally inconsistent (bad sizes, unknown keys)."""


class DatasetError(RuntimeError):
    """Dataset I/O failed; carries the offending path."""

    def __init__(self, message: str, path=None):
        super().__init__(message if path is None else f"{message}: {path}")
        self.path = path


class NumericError(RuntimeError):
    """A computation produced non-finite values; carries a diagnostic snapshot."""

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}
