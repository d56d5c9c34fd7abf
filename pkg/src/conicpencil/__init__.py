"""Factorization of degenerate quadratic forms and classification of pencils."""

from .algebra import (
    DEFAULT_TOLERANCE,
    BinaryCubic,
    BivariateQuadratic,
    Direction,
    LinearForm2,
    LinearForm3,
    Point3,
    SymMatrix3,
    TernaryQuadratic,
    Tolerance,
    dehomogenize,
    det_pencil_cubic,
    evaluate,
    homogenize,
    substitute_linear,
)
from .errors import (
    DegreeError,
    DegreeTooLow,
    DependentGenerators,
    ExpressionSyntaxError,
    InternalInconsistency,
    NotDegenerate,
    PreconditionFailed,
    VariableError,
    ZeroForm,
)
from .expression import Mode, format_polynomial, parse_polynomial
from .factorizer import (
    SplitPair,
    expand_product,
    factor_binary_quadratic,
    factor_ternary_quadratic,
    is_degenerate,
)
from .pencil import (
    ALL,
    BivariateReason,
    BivariateReport,
    LineGeometry,
    PencilReport,
    Reason,
    Verdict,
    check_common_line,
    check_concurrency,
    check_linear_independence,
    check_product_pencil_theorem,
    classify_bivariate_pencil,
    classify_pencil,
    factorizable_directions,
)
from .reporting import load_report, serialize_report

__version__ = "0.1.0"
