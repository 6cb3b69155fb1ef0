"""Exception types raised by montdiv."""


class MontDivError(ValueError):
    """Base class for all library errors."""


class InvalidModulusError(MontDivError):
    """Modulus is even, too small, or otherwise unusable for Montgomery arithmetic."""


class UnsupportedWidthError(MontDivError):
    """Value does not fit the supported 64/128-bit word widths."""


class PreconditionError(MontDivError):
    pass


class UnsupportedFoldError(MontDivError):
    pass


class InconsistentRemainderError(MontDivError):
    """Quotient loop ended with a nonzero carry: the supplied remainder is not x mod q."""
