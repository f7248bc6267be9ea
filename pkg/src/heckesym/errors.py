"""Exception hierarchy shared by all modules."""


class HeckeError(Exception):
    """Base class. ``witness`` optionally holds the offending index tuple."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class PoleAtEvaluationPoint(HeckeError):
    pass


class DegenerateQ(HeckeError):
    pass


class ParseError(HeckeError):
    pass


class AxiomFailure(HeckeError):
    """A matrix failed one of the Hecke-symmetry axioms."""


class NotYangBaxter(AxiomFailure):
    pass


class NotHecke(AxiomFailure):
    pass


class NotClosed(AxiomFailure):
    pass


class VerificationFailed(HeckeError):
    """A built-in constructor produced a matrix violating the axioms (a bug)."""


class NotInvertible(HeckeError):
    pass


class IndexOutOfRange(HeckeError):
    pass


class Inconclusive(HeckeError):
    """Computation could not reach a verdict within its budget."""


class DegreeOverflow(Inconclusive):
    def __init__(self, message, witness=None, partial=None):
        super().__init__(message, witness)
        self.partial = partial


class RecurrenceUnstable(Inconclusive):
    pass


class InvariantViolation(HeckeError):
    """An internal cross-check (e.g. tr C = -[s-r]_q) failed."""
