"""Structured errors shared by all merotop modules.

Every error carries a stable ``code`` string.  The CLI maps any
:class:`MerotopError` to exit status 2 and reports the code verbatim, so
the codes are part of the public interface and must not be renamed.
"""


class MerotopError(Exception):
    """Base class for all recoverable, input-related errors."""

    code = "MerotopError"

    def __init__(self, message: str = ""):
        super().__init__(message or self.code)


# -- coefficient arithmetic ------------------------------------------------

class ZeroInput(MerotopError):
    code = "ZeroInput"


class PoleAtValue(MerotopError):
    """A rational-function specialization hit a root of the denominator."""

    code = "PoleAtValue"


# -- multivariate polynomials ----------------------------------------------

class IndexOutOfRange(MerotopError):
    code = "IndexOutOfRange"


class ArityMismatch(MerotopError):
    code = "ArityMismatch"


class WrongArity(MerotopError):
    code = "WrongArity"


# -- local standard bases ---------------------------------------------------

class NonIsolated(MerotopError):
    """The critical point is not isolated: the local quotient is infinite."""

    code = "NonIsolated"


class NotVanishingAtOrigin(MerotopError):
    code = "NotVanishingAtOrigin"


# -- Newton diagrams ---------------------------------------------------------

class EmptySupport(MerotopError):
    code = "EmptySupport"


class NotConvenient(MerotopError):
    code = "NotConvenient"


class TooManyVariables(MerotopError):
    code = "TooManyVariables"


# -- meromorphic germs --------------------------------------------------------

class NonIsolatedNumerator(MerotopError):
    code = "NonIsolatedNumerator"


class CommonComponent(MerotopError):
    code = "CommonComponent"


class IndeterminacyMissingAtOrigin(MerotopError):
    code = "IndeterminacyMissingAtOrigin"


class ConstantGerm(MerotopError):
    code = "ConstantGerm"


class ValueIsConstantGerm(MerotopError):
    code = "ValueIsConstantGerm"


class GenericallyNonIsolated(MerotopError):
    code = "GenericallyNonIsolated"


# -- Euler-characteristic integration -----------------------------------------

class DomainMismatch(MerotopError):
    code = "DomainMismatch"


# -- plane curves ---------------------------------------------------------------

class PointNotOnCurve(MerotopError):
    code = "PointNotOnCurve"


class NonReducedLevel(MerotopError):
    code = "NonReducedLevel"


class IrrationalSingularityDetected(MerotopError):
    code = "IrrationalSingularityDetected"


class NonReduced(MerotopError):
    code = "NonReduced"


class NonSmoothReference(MerotopError):
    code = "NonSmoothReference"


class IrrationalIntersection(MerotopError):
    code = "IrrationalIntersection"


class DegreeMismatch(MerotopError):
    """Two sections that must share a degree do not."""

    code = "DegreeMismatch"


class NotHomogeneous(MerotopError):
    code = "NotHomogeneous"


# -- expression parsing ------------------------------------------------------

class PolySyntaxError(MerotopError):
    """Syntax error in a polynomial expression; carries the offset."""

    code = "SyntaxError"

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariable(MerotopError):
    code = "UnknownVariable"


class ReservedSymbol(MerotopError):
    code = "ReservedSymbol"
