"""Expression grammar: parsing, evaluation, rendering, and fuzzing."""

import hypothesis
import hypothesis.strategies as strat
import pytest

from dsl_corpus import CORPUS
from grstacks import dsl
from grstacks.dsl import ArityError, ParseError, UnknownIdent, eval as dsl_eval, parse, render
from grstacks.lefschetz import (
    LC_ONE,
    NotAUnit,
    ZeroInverse,
    l_power,
    lc_int,
    lc_neg,
)
from grstacks.motive import M_ONE, DomainError, class_g2, m_atom, m_scalar


def ev(text):
    return dsl_eval(parse(text))


# -- the round-trip corpus --------------------------------------------


def test_corpus_has_fifty_expressions():
    assert len(CORPUS) == 50
    assert len(set(CORPUS)) == 50


@pytest.mark.parametrize("text", CORPUS)
def test_corpus_roundtrip(text):
    # parse -> eval -> render -> parse -> eval is the identity on values,
    # and rendering the reparsed value reproduces the rendered text
    value = ev(text)
    out = render(value)
    again = ev(out)
    assert again == value
    assert render(again) == out


# -- precedence and shape ---------------------------------------------


def test_multiplication_binds_tighter_than_addition():
    assert ev("2+3*L") == ev("2+(3*L)")
    assert ev("2+3*L") != ev("(2+3)*L")


def test_power_binds_tighter_than_product_and_minus():
    assert ev("2*L^3") == ev("2*(L^3)")
    assert ev("-L^2") == ev("-(L^2)")


def test_left_associative_chains():
    assert ev("2-3-4") == m_scalar(lc_int(-5))
    assert ev("L^6/L^2/L^3") == m_scalar(l_power(1))


def test_unary_minus():
    assert ev("-L") == m_scalar(lc_neg(l_power(1)))
    assert ev("--1") == M_ONE


def test_whitespace_is_free():
    assert ev(" BG( 5 , 4 ) ") == ev("BG(5,4)")


def test_bytes_input_accepted():
    assert ev(b"L^2") == ev("L^2")


# -- call dispatch ----------------------------------------------------


def test_scalar_calls_match_class_formulas():
    assert ev("G2()") == m_scalar(class_g2())
    assert ev("Spin(7)").is_scalar()


def test_atom_calls():
    assert ev("BDelta(3)") == m_atom(3)
    assert ev("BDelta(2)^1") == m_atom(2)
    assert ev("BDelta(2)^0") == M_ONE


def test_unit_product_collapses_to_one():
    v = ev("G2() * L^-6 * (L^6-1)^-1 * (L^2-1)^-1")
    assert v == m_scalar(LC_ONE)


# -- parse errors -----------------------------------------------------


def test_unclosed_call_reports_offset_and_expectation():
    with pytest.raises(ParseError) as exc:
        parse("Spin(7")
    assert exc.value.offset == 6
    assert ")" in exc.value.expected


def test_missing_parenthesis_after_ident():
    with pytest.raises(ParseError) as exc:
        parse("Spin 7")
    assert exc.value.offset == 5
    assert "(" in exc.value.expected


def test_unknown_identifier():
    with pytest.raises(UnknownIdent) as exc:
        parse("Foo(1)")
    assert exc.value.offset == 0
    assert "L" in exc.value.expected and "BSpin" in exc.value.expected


def test_wrong_arity():
    with pytest.raises(ArityError):
        parse("GL(1,2)")
    with pytest.raises(ArityError):
        parse("BG(2)")
    with pytest.raises(ArityError):
        parse("G2(1)")


def test_empty_argument_list_where_one_is_required():
    with pytest.raises(ArityError) as exc:
        parse("GL()")
    assert exc.value.offset == 0 and "got 0" in str(exc.value)


def test_truncated_inputs():
    for text, off in (("", 0), ("1+", 2), ("(1", 2), ("2*", 2)):
        with pytest.raises(ParseError) as exc:
            parse(text)
        assert exc.value.offset == off, text


def test_stray_bytes():
    with pytest.raises(ParseError) as exc:
        parse("1 @ 2")
    assert exc.value.offset == 2 and "0x40" in str(exc.value)
    with pytest.raises(ParseError):
        parse(b"\xff\xfe")


def test_depth_limit():
    deep = "(" * 401 + "1" + ")" * 401
    with pytest.raises(ParseError) as exc:
        parse(deep)
    assert "deep" in str(exc.value)
    ok = "(" * 400 + "1" + ")" * 400
    assert dsl_eval(parse(ok)) == M_ONE
    with pytest.raises(ParseError):
        parse("-" * 4096 + "1")


def test_long_flat_sums_evaluate():
    n = 2000
    assert ev("1+" * n + "1") == m_scalar(lc_int(n + 1))


# -- evaluation errors ------------------------------------------------


def test_division_requires_units():
    with pytest.raises(NotAUnit):
        ev("1/(L+2)")
    with pytest.raises(NotAUnit):
        ev("1/BSpin(3)")
    with pytest.raises(ZeroInverse):
        ev("1/0")


def test_atom_products_are_out_of_scope():
    with pytest.raises(DomainError):
        ev("BDelta(2)*BDelta(3)")
    with pytest.raises(DomainError):
        ev("BDelta(2)^2")
    with pytest.raises(NotAUnit):
        ev("BDelta(2)^-1")


def test_call_argument_domains():
    with pytest.raises(DomainError):
        ev("cyclo(0)")
    with pytest.raises(DomainError):
        ev("BDelta(0)")
    with pytest.raises(DomainError):
        ev("BG(3,7)")


# -- fuzzing ----------------------------------------------------------


@hypothesis.settings(max_examples=300, deadline=None)
@hypothesis.given(strat.binary(max_size=4096))
def test_parser_never_crashes_on_bytes(data):
    try:
        parse(data)
    except ParseError:
        pass


@hypothesis.settings(max_examples=300, deadline=None)
@hypothesis.given(strat.text(alphabet="L()+-*/^0123456789, BSpinGDelta2cyclo", max_size=300))
def test_parser_never_crashes_on_token_soup(text):
    try:
        parse(text)
    except ParseError:
        pass


safe_exprs = strat.recursive(
    strat.one_of(
        strat.integers(0, 9).map(str),
        strat.just("L"),
        strat.builds(lambda m: f"BDelta({m})", strat.integers(2, 9)),
        strat.builds(lambda n: f"BSpin({n})", strat.integers(1, 9)),
        strat.builds(lambda n: f"BPin({n})", strat.integers(0, 9)),
        strat.builds(lambda n: f"GL({n})", strat.integers(1, 3)),
        strat.builds(lambda n: f"Spin({n})", strat.integers(2, 8)),
        strat.just("G2()"),
        strat.builds(lambda d: f"cyclo({d})", strat.integers(1, 12)),
        strat.builds(
            lambda n, r: f"BG({n},{r})",
            strat.integers(2, 7),
            strat.integers(1, 7),
        ).filter(lambda s: int(s[3]) >= int(s[5])),
    ),
    lambda inner: strat.one_of(
        strat.builds(lambda a, b: f"({a}+{b})", inner, inner),
        strat.builds(lambda a, b: f"({a}-{b})", inner, inner),
        strat.builds(lambda a, k: f"{k}*({a})", inner, strat.integers(-5, 5)),
        strat.builds(lambda a: f"-({a})", inner),
        strat.builds(lambda a: f"({a})/L", inner),
        strat.builds(lambda a, k: f"L^{k}*({a})", inner, strat.integers(-4, 4)),
    ),
    max_leaves=12,
)


@hypothesis.settings(max_examples=200, deadline=None)
@hypothesis.given(safe_exprs)
def test_generated_expressions_roundtrip(text):
    # closed under +, -, scalar products, and unit division: eval succeeds
    # and render is a fixpoint after one pass
    value = ev(text)
    out = render(value)
    assert ev(out) == value
