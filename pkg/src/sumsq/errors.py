"""Exception hierarchy shared across the library."""


class SumsqError(Exception):
    """Base class for all library errors."""


class ZeroElement(SumsqError):
    """An operation that requires a nonzero element received zero."""


class DivisionByZero(SumsqError):
    """Field division by zero."""


class ReduciblePolynomial(SumsqError):
    """A defining polynomial that must be irreducible is not."""


class CharacteristicTwo(SumsqError):
    """Residue characteristic 2 where an odd characteristic is required."""


class NotPMaximal(SumsqError):
    """The equation order Z[theta] is not maximal at the named prime.

    Fields whose defining order fails p-maximality at a needed prime are
    outside the supported scope; the offending prime is carried along.
    """

    def __init__(self, p):
        self.p = p
        super().__init__(f"Z[theta] is not maximal at p = {p}; field unsupported at this prime")


class UnsupportedField(SumsqError):
    """Field construction outside the supported scope."""


class SearchBoundExceeded(SumsqError):
    """A bounded deterministic search ran out of budget; carries diagnostics."""

    def __init__(self, message, diagnostics=None):
        self.diagnostics = diagnostics or {}
        super().__init__(message)


class MultipleDyadicPrimes(SumsqError):
    """The reciprocity oracle needs a field with a single dyadic prime."""


class InstanceTooLarge(SumsqError):
    """A brute-force oracle refused an instance above its size guard."""


class PrecisionExhausted(SumsqError):
    """Internal: a 2-adic computation hit its working-precision guard band.

    Never escapes the public API; callers escalate precision and retry.
    """
