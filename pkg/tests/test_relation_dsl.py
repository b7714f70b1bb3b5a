from fractions import Fraction

import pytest

from operad_forge.group_module import C1, C2, ID, T12, T13, T23, group_vector
from operad_forge.relation_dsl import (
    ParseError,
    format_group_vector,
    format_weight3,
    parse_comb_relation,
    parse_group_vector,
    parse_relation,
)
from operad_forge.weight_spaces import (
    ANTICOMMUTATIVE,
    COMMUTATIVE,
    LEFT,
    REGULAR,
    RIGHT,
    Weight3Element,
    associator,
    comb_in,
    decompose_LR,
)


def test_parse_associator():
    assert parse_relation("(x*y)*z - x*(y*z)") == associator((1, 2, 3))


def test_parse_associator_shorthand():
    assert parse_relation("A(x,y,z)") == associator((1, 2, 3))
    assert parse_relation("A(z, x, y)") == associator((3, 1, 2))


def test_parse_numbered_variables():
    assert parse_relation("(x1*x2)*x3") == parse_relation("(x*y)*z")
    assert parse_relation("x2*(x3*x1)") == Weight3Element.monomial(
        RIGHT, (2, 3, 1)
    )


def test_parse_coefficients_and_signs():
    got = parse_relation("-2*(x*y)*z + 1/3*x*(y*z)")
    want = Weight3Element.monomial(LEFT, (1, 2, 3), -2) + \
        Weight3Element.monomial(RIGHT, (1, 2, 3), Fraction(1, 3))
    assert got == want


def test_parse_leibniz_and_decompose():
    x = parse_relation("x*(y*z) - (x*y)*z + (x*z)*y")
    v, w = decompose_LR(-x)
    assert v == group_vector((1, ID), (-1, T23))
    assert w == group_vector((1, ID))


def test_parse_poisson_relation():
    x = parse_relation("3*A(x,y,z) - (x*z)*y - (y*z)*x + (y*x)*z + (z*x)*y")
    want = (
        associator((1, 2, 3)).scaled(3)
        - Weight3Element.monomial(LEFT, (1, 3, 2))
        - Weight3Element.monomial(LEFT, (2, 3, 1))
        + Weight3Element.monomial(LEFT, (2, 1, 3))
        + Weight3Element.monomial(LEFT, (3, 1, 2))
    )
    assert x == want


def test_parse_repeated_variable_rejected():
    with pytest.raises(ParseError):
        parse_relation("(x*x)*z")
    with pytest.raises(ParseError):
        parse_relation("A(x,y,x)")


def test_parse_unknown_variable_rejected():
    with pytest.raises(ParseError):
        parse_relation("(x*w)*z")


def test_parse_error_position():
    with pytest.raises(ParseError) as err:
        parse_relation("(x*y)*z ?")
    assert err.value.line == 1
    assert err.value.column == 9


def test_parse_error_on_second_line():
    with pytest.raises(ParseError) as err:
        parse_relation("(x*y)*z\n+ (x*q)*z")
    assert err.value.line == 2


def test_parse_trailing_garbage_rejected():
    with pytest.raises(ParseError):
        parse_relation("(x*y)*z (y*x)*z")


def test_parse_bare_coefficient_rejected():
    with pytest.raises(ParseError):
        parse_relation("3 + (x*y)*z")


def test_parse_comb_relation():
    got = parse_comb_relation("m1 + m2 + m3", ANTICOMMUTATIVE)
    want = (
        comb_in(ANTICOMMUTATIVE, 1)
        + comb_in(ANTICOMMUTATIVE, 2)
        + comb_in(ANTICOMMUTATIVE, 3)
    )
    assert got == want


def test_parse_comb_rejects_regular_class():
    with pytest.raises(ValueError):
        parse_comb_relation("m1", REGULAR)


def test_parse_comb_rejects_tree_monomials():
    with pytest.raises(ValueError):
        parse_comb_relation("(x*y)*z", COMMUTATIVE)


def test_parse_group_vector():
    assert parse_group_vector("Id") == group_vector((1, ID))
    v = parse_group_vector("Id - t12 - t23 - t13 + c1 + c2")
    assert v == group_vector(
        (1, ID), (-1, T12), (-1, T23), (-1, T13), (1, C1), (1, C2),
    )


def test_parse_group_vector_coefficients():
    v = parse_group_vector("3*Id - 1/2*c1")
    assert v[ID] == 3
    assert v[C1] == Fraction(-1, 2)


def test_parse_group_vector_rejects_unknown_symbol():
    with pytest.raises(ParseError):
        parse_group_vector("Id + t14")


def test_format_round_trip_regular():
    x = parse_relation("(x*y)*z - 2/3*x*(z*y) + 5*(z*x)*y")
    assert parse_relation(format_weight3(x)) == x


def test_format_round_trip_comb():
    x = comb_in(COMMUTATIVE, 1, "7/2") - comb_in(COMMUTATIVE, 3)
    assert parse_comb_relation(format_weight3(x), COMMUTATIVE) == x


def test_format_round_trip_group_vector():
    v = parse_group_vector("-Id + 2*t13 - 1/4*c2")
    assert parse_group_vector(format_group_vector(v)) == v


def test_format_zero():
    assert format_weight3(Weight3Element.zero(REGULAR)) == "0"
