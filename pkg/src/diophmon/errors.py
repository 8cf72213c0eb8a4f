"""Exception hierarchy.

Every domain error carries a stable ``code`` string; the command-line front
end reports it verbatim in JSON mode.
"""


class DiophMonError(Exception):
    code = "DiophMonError"


class BadInput(DiophMonError, ValueError):
    code = "BadInput"


class NoInverse(DiophMonError, ArithmeticError):
    code = "NoInverse"


class InfiniteQuotient(DiophMonError):
    code = "InfiniteQuotient"


class DimensionMismatch(DiophMonError, ValueError):
    code = "DimensionMismatch"


class NotInMonoid(DiophMonError, ValueError):
    code = "NotInMonoid"


class NotInApery(DiophMonError, ValueError):
    code = "NotInApery"


class BoxTooLarge(DiophMonError):
    code = "BoxTooLarge"


class NotTwoDimensional(DiophMonError, ValueError):
    code = "NotTwoDimensional"


class ZeroCoefficient(DiophMonError, ValueError):
    code = "ZeroCoefficient"


class TooManyExtras(DiophMonError):
    code = "TooManyExtras"


class SchemeInconsistent(DiophMonError, RuntimeError):
    code = "SchemeInconsistent"


class NotAGroup(DiophMonError):
    """Raised by the Cayley-table oracle; ``axiom`` names the violated law."""

    code = "NotAGroup"

    def __init__(self, axiom, witness):
        super().__init__(f"{axiom} fails at {witness!r}")
        self.axiom = axiom
        self.witness = witness


class SpecMismatch(DiophMonError, ValueError):
    code = "SpecMismatch"
