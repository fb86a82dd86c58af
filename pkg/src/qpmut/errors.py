"""Exception hierarchy shared across the package."""


class QPError(Exception):
    """Base class for all domain errors raised by qpmut."""


class CompositionError(QPError):
    """Paths with mismatched endpoints were composed."""


class SubstitutionError(QPError):
    """An arrow substitution was endpoint-incompatible or otherwise invalid."""


class PotentialError(QPError):
    """A potential contained a non-cycle or a term of length < 2."""


class GradingError(QPError):
    """A degree assignment violated homogeneity or cut constraints."""


class MutationError(QPError):
    """Premutation was requested at an invalid vertex."""


class SplitError(QPError):
    """The reduction into trivial and reduced parts failed to converge,
    or needed a scalar outside the rationals."""


class CutError(QPError):
    """A set of arrows failed to be a cut where one was required."""


class PresentationError(QPError):
    """An algebra presentation violated its invariants (non-basic
    relation, short term, unknown arrow)."""


class TiltingError(QPError):
    """An APR tilt was requested at a vertex that is not a source, or
    for a projective that is injective."""


class HypothesisError(TiltingError):
    """The injective-dimension hypothesis of the tilt formula fails."""


class ChainError(QPError):
    """A mutation chain hit a step at a vertex with the wrong
    strict-source/strict-sink classification."""


class AnalysisError(QPError):
    """A linear-algebra analysis could not certify its precondition
    (for example a dimension check that needs gl.dim <= 2)."""


class ParseError(QPError):
    """A document failed to parse; carries a line number when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
