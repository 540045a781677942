"""Expression parsing, printing, and serialization round trips."""

import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import klrcalc as K
from klrcalc.exprs import (ExprError, element_from_json, element_to_json,
                           element_to_text, eval_ast, normal_form,
                           parse_element)
from klrcalc.scalars import PrimeField
from klrcalc.suites import random_element

TAGS = ("G", "G'")


@pytest.fixture(scope="module")
def ctx():
    return K.make_context(K.cycle(3), 2)


def test_parse_product_ast():
    ast = parse_element("psi[1]*y[2]^3*e(0,1)@G")
    assert ast[0] == "mul"


def test_parse_sum():
    ast = parse_element("e(0,1) + e(1,0)")
    assert ast[0] == "add"


def test_whitespace_insensitive(ctx):
    a = normal_form("psi[1] * y[2]^2*e( 0 , 1 )", ctx)
    b = normal_form("psi[1]*y[2]^2*e(0,1)", ctx)
    assert a == b


def test_syntax_error_position():
    with pytest.raises(ExprError) as exc:
        parse_element("e(0,1) +\n* e(1,0)")
    assert exc.value.line == 2 and exc.value.col == 1


def test_index_and_label_errors(ctx):
    with pytest.raises(ExprError, match="out of range"):
        normal_form("psi[5]*e(0,1)", ctx)
    with pytest.raises(ExprError, match="unknown vertex"):
        normal_form("e(0,7)", ctx)
    with pytest.raises(ExprError, match="length"):
        normal_form("e(0)", ctx)


def test_paper_example_normal_forms(ctx):
    assert normal_form("psi[1]*psi[1]*e(0,0)", ctx).is_zero()
    assert normal_form("e(0,1)", ctx) == ctx.e((0, 1))
    got = normal_form("y[1]*psi[1]*e(0,0)", ctx)
    want = normal_form("psi[1]*y[2]*e(0,0) - e(0,0)", ctx)
    assert got == want


def test_normal_form_idempotent_via_reprint(ctx):
    x = normal_form("psi[1]*y[1]*e(0,1) + 2*e(1,0) - 1/2*y[2]*e(2,2)", ctx)
    assert normal_form(element_to_text(x), ctx) == x


def test_scalars_eps_and_pow(ctx):
    one = eval_ast(parse_element("1"), ctx)
    assert one == ctx.unit(tags=TAGS)
    eps = normal_form("eps", ctx)
    assert eps * eps == one
    assert normal_form("eps^2", ctx) == one
    assert normal_form("-3*e(0,1)", ctx) == ctx.e((0, 1)).scale(-3)
    assert normal_form("0", ctx).is_zero()
    assert element_to_text(normal_form("0", ctx)) == "0"


def test_tagged_atoms(ctx):
    assert normal_form("e(0,1)@G'", ctx) == ctx.e((0, 1), "G'")
    assert normal_form("e(0,1)@G", ctx) == ctx.e((0, 1))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_print_parse_roundtrip(seed):
    ctx = K.make_context(K.cycle(3), 2)
    x = random_element(ctx, random.Random(seed), tags=TAGS)
    assert normal_form(element_to_text(x), ctx) == x


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_json_roundtrip(seed):
    ctx = K.make_context(K.cycle(3), 2)
    x = random_element(ctx, random.Random(seed), tags=TAGS)
    assert element_from_json(ctx, element_to_json(x)) == x


def test_json_shape(ctx):
    x = normal_form("1/2*psi[1]*y[2]*e(0,1)@G'", ctx)
    data = json.loads(element_to_json(x))
    assert data == [{"tag": "G'", "word": [1], "exp": [0, 1],
                     "seq": [0, 1], "coeff": "1/2"}]


def test_prime_field_coeff_format():
    ctx = K.make_context(K.cycle(3), 2, PrimeField(5))
    x = ctx.e((0, 1)).scale(7)
    assert element_to_text(x) == "2*e(0,1)@G"
    data = json.loads(element_to_json(x))
    assert data[0]["coeff"] == "2 mod 5"
    assert element_from_json(ctx, element_to_json(x)) == x
    assert normal_form(element_to_text(x), ctx) == x


def test_text_is_canonically_sorted(ctx):
    x = ctx.e((1, 0)) + ctx.e((0, 1))
    assert element_to_text(x) == "e(0,1)@G + e(1,0)@G"
