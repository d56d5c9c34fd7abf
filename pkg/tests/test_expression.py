import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conicpencil import (
    BivariateQuadratic,
    DegreeError,
    ExpressionSyntaxError,
    LinearForm3,
    Mode,
    TernaryQuadratic,
    VariableError,
    format_polynomial,
    parse_polynomial,
)
from conicpencil.errors import ExpressionError
from conicpencil.expression import (
    BinOp,
    Num,
    Var,
    format_linear,
    format_scalar,
    parse_ast,
    parse_linear_form,
)

H3, A2 = Mode.HOMOGENEOUS3, Mode.AFFINE2


@pytest.mark.parametrize("text, expected", [
    ("x(x+z)", TernaryQuadratic(cxx=1, cxz=1)),
    ("y(2x+y+z)", TernaryQuadratic(cxy=2, cyy=1, cyz=1)),
    ("x^2+2xy+y^2+xz+yz", TernaryQuadratic(cxx=1, cxy=2, cyy=1, cxz=1, cyz=1)),
    ("2x^2+2xy+2xz+y^2+yz", TernaryQuadratic(cxx=2, cxy=2, cxz=2, cyy=1, cyz=1)),
    ("(x+y)(x+y+z)", TernaryQuadratic(cxx=1, cxy=2, cyy=1, cxz=1, cyz=1)),
    ("-x*y", TernaryQuadratic(cxy=-1)),
    ("(x - y)^2", TernaryQuadratic(cxx=1, cxy=-2, cyy=1)),
    ("2i x^2 - i*y*z", TernaryQuadratic(cxx=2j, cyz=-1j)),
    ("x^2 + x*1 - x + 0*y", TernaryQuadratic(cxx=1)),  # lower-degree terms cancel
    ("x^2 + 1", None),
])
def test_parse_homogeneous(text, expected):
    if expected is None:
        with pytest.raises(DegreeError):
            parse_polynomial(text, H3)
        return
    assert parse_polynomial(text, H3) == expected


def test_parse_affine_golden_inputs():
    assert parse_polynomial("y(2x+y+1)", A2) == BivariateQuadratic(cxy=2, cyy=1, cy=1)
    assert parse_polynomial("x(x+1)", A2) == BivariateQuadratic(cxx=1, cx=1)
    assert parse_polynomial("x^2 - 1", A2) == BivariateQuadratic(cxx=1, c=-1)


def test_inhomogeneous_rejected():
    with pytest.raises(DegreeError):
        parse_polynomial("x + 1", H3)


def test_degree_three_rejected():
    with pytest.raises(DegreeError):
        parse_polynomial("x*y*z", H3)
    with pytest.raises(DegreeError):
        parse_polynomial("x^3", A2)
    with pytest.raises(DegreeError):
        parse_polynomial("(x+1)^100000", A2)


def test_constant_powers_and_zero_exponent():
    assert parse_polynomial("2^2 x^0 x y", H3) == TernaryQuadratic(cxy=4)
    assert parse_polynomial("x^2 y^0", H3) == TernaryQuadratic(cxx=1)


def test_z_rejected_in_affine_mode():
    with pytest.raises(VariableError):
        parse_polynomial("x*z", A2)


@pytest.mark.parametrize("text, offset", [
    ("x^", 2), ("x +* y", 3), ("", 0), ("(x+y", 4), ("x ? y", 2), ("x^2.5", 2),
    ("--x", 1), ("x**y", 2), ("x)", 1),
])
def test_syntax_errors_carry_offset(text, offset):
    with pytest.raises(ExpressionSyntaxError) as err:
        parse_polynomial(text, H3)
    assert err.value.offset == offset


def test_syntax_error_offset_is_in_bytes():
    with pytest.raises(ExpressionSyntaxError) as err:
        parse_polynomial("x·y", H3)
    assert err.value.offset == 1
    with pytest.raises(ExpressionSyntaxError) as err:
        parse_polynomial("é + ?", H3)
    assert err.value.offset == 0


def test_ast_shape_with_implicit_multiplication():
    assert parse_ast("2x") == BinOp("*", Num(2), Var("x"))


# -- printing ----------------------------------------------------------------

def test_format_examples():
    assert format_polynomial(TernaryQuadratic(cxx=1, cxz=1)) == "x^2 + x*z"
    s = TernaryQuadratic(cxx=1, cxy=2, cyy=1, cxz=1, cyz=1)
    assert format_polynomial(s) == "x^2 + 2*x*y + y^2 + x*z + y*z"
    assert format_polynomial(TernaryQuadratic()) == "0"


def test_format_signs_and_complex():
    assert format_polynomial(TernaryQuadratic(cxx=-1, cyy=-2.5)) == "-x^2 - 2.5*y^2"
    assert format_polynomial(TernaryQuadratic(cxy=1j, czz=-3j)) == "i*x*y - 3i*z^2"
    assert format_polynomial(TernaryQuadratic(cxx=1 - 2j)) == "(1-2i)*x^2"
    assert format_polynomial(BivariateQuadratic(cxx=1, cx=1, c=-1)) == "x^2 + x - 1"
    assert format_linear(LinearForm3(2, -1, 0.5)) == "2*x - y + 0.5*z"
    assert format_scalar(-0.5) == "-0.5"
    assert format_scalar(-0.0) == "0"
    assert format_scalar(1e-20 + 1j) == "1e-20+i"


def test_parse_linear_form():
    assert parse_linear_form("x + y + z") == LinearForm3(1, 1, 1)
    assert parse_linear_form("2*y").coefficients == (0, 2, 0)
    assert parse_linear_form("x + 1", affine=True).coefficients == (1, 0, 1)
    with pytest.raises(DegreeError):
        parse_linear_form("x + 1")


# -- round trips ------------------------------------------------------------------

_pool = [0, 0, 0, 1, -1, 2, -3, 0.5, -0.25, 1e-5, 1.5e16, 0.1, 1 / 3]


def _rand_coeff(rng):
    kind = rng.random()
    if kind < 0.5:
        return complex(rng.choice(_pool))
    if kind < 0.7:
        return complex(0, rng.choice(_pool))
    if kind < 0.85:
        return complex(rng.choice(_pool), rng.choice(_pool))
    return complex(rng.uniform(-100, 100), rng.uniform(-100, 100) if rng.random() < 0.5 else 0)


def test_parse_format_identity_on_random_forms():
    rng = random.Random(41)
    for _ in range(500):
        p = TernaryQuadratic(*(_rand_coeff(rng) for _ in range(6)))
        assert parse_polynomial(format_polynomial(p), H3) == p
        b = BivariateQuadratic(*(_rand_coeff(rng) for _ in range(6)))
        assert parse_polynomial(format_polynomial(b), A2) == b


finite = st.floats(allow_nan=False, allow_infinity=False, width=64)


@given(st.lists(st.builds(complex, finite, finite), min_size=6, max_size=6))
def test_parse_format_identity_property(c):
    p = TernaryQuadratic(*c)
    assert parse_polynomial(format_polynomial(p), H3) == p


_valid = ["x(x+z)", "y(2x+y+z)", "x^2+2xy+y^2+xz+yz", "(1+2i)x^2 - 3y z", "-(x+y)^2 + 0.5 z^2"]


@settings(max_examples=300)
@given(st.sampled_from(_valid), st.integers(0, 40), st.sampled_from(["delete", "double"]))
def test_mutations_never_crash(text, pos, how):
    pos %= len(text)
    if how == "delete":
        mutated = text[:pos] + text[pos + 1:]
    else:
        mutated = text[:pos] + text[pos] + text[pos:]
    try:
        parse_polynomial(mutated, H3)
    except ExpressionError:
        pass
