"""Exception types shared across the package."""


class LfwpError(Exception):
    """Base class for all package errors."""


class SpecMismatchError(LfwpError):
    """Operands belong to different field specs, windows, or label domains."""


class WindowError(LfwpError):
    """A result would leave the configured exponent window, or a dilation
    leaves the valid range of model windows."""


class GridExactnessError(LfwpError):
    """An element is not exactly representable on the target grid."""


class DegenerateInputError(LfwpError):
    """Structurally invalid input such as a zero generator."""


class PreconditionError(LfwpError):
    """A numerical precondition failed (e.g. a system is not a frame for
    its span where a theorem checker requires one)."""


class ParseError(LfwpError):
    """Malformed textual input. ``offset`` is a byte offset when known."""

    def __init__(self, message, offset=None):
        super().__init__(message)
        self.offset = offset


class ConfigError(LfwpError):
    """Invalid experiment configuration.

    ``code`` is a stable machine-readable identifier, ``path`` the config
    path of the offending field.
    """

    def __init__(self, code, path, message):
        super().__init__(f"{path}: {message} [{code}]")
        self.code = code
        self.path = path
