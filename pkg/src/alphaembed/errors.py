"""Exception hierarchy shared by all alphaembed modules."""


class AlphaEmbedError(Exception):
    """Base class for all library errors."""


class DomainError(AlphaEmbedError, ValueError):
    """Input outside the mathematical domain of an operation."""


class ContractError(AlphaEmbedError, ValueError):
    """A documented precondition of an operation is violated."""


class DegenerateConfigError(AlphaEmbedError, ValueError):
    """Geometric configuration is degenerate (parallel diagonals, aligned points...)."""


class SingularityError(AlphaEmbedError, ValueError):
    """Evaluation requested at a singular point (e.g. a focus for alpha <= 0)."""


class EmptyCurveError(AlphaEmbedError, ValueError):
    """The construction curve is empty at working resolution."""


class IdenticalCurveError(AlphaEmbedError, ValueError):
    """Intersection of a curve with itself was requested."""


class NumericRangeError(AlphaEmbedError, ArithmeticError):
    """A bounded numeric search (bracket, scan window) was exhausted."""


class ConsistencyError(AlphaEmbedError, ValueError):
    """A closed-form evaluation produced a value outside its admissible range."""


class ExtractionError(AlphaEmbedError, ValueError):
    """Corner-value extraction from an embedding failed to converge."""


class PipelineError(AlphaEmbedError, RuntimeError):
    """A stage of the cube-move pipeline failed; carries the stage tag."""

    def __init__(self, stage: str, message: str):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage


class SolverCoverageWarning(UserWarning):
    """Root search returned no candidate although existence is guaranteed."""
