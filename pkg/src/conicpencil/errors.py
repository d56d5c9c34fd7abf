class ConicPencilError(Exception):
    """Base class for library errors."""


class ZeroForm(ConicPencilError, ValueError):
    """A form is identically zero under the tolerance."""


class NotDegenerate(ConicPencilError, ValueError):
    """The quadratic form does not split into linear factors."""


class DependentGenerators(ConicPencilError, ValueError):
    """The two pencil generators are proportional."""


class DegreeTooLow(ConicPencilError, ValueError):
    """A bivariate generator has no degree-two part."""


class PreconditionFailed(ConicPencilError, ValueError):
    """Hypotheses of a theorem check were not met by the supplied data."""


class InternalInconsistency(ConicPencilError, RuntimeError):
    """Decision and structural witnesses disagree; usually a tolerance fault."""


class ExpressionError(ConicPencilError, ValueError):
    """Base for polynomial text errors."""


class ExpressionSyntaxError(ExpressionError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


class DegreeError(ExpressionError):
    pass


class VariableError(ExpressionError):
    pass
