import math

import pytest
from hypothesis import given, strategies as st

from pga import (
    Opaque,
    Product,
    Sym,
    Trivial,
    Wreath,
    expr_normalize,
    expr_order,
    parse_expr,
    render_expr,
)
from pga.expr import UNSPECIFIED_EXTENSION


def test_order_examples():
    assert expr_order(Sym(3)) == 6
    assert expr_order(Wreath(Sym(2), Sym(3))) == 48
    assert expr_order(Product((Wreath(Sym(2), Sym(3)),) + (Sym(2),) * 6)) == 3072
    assert expr_order(Trivial()) == 1
    assert expr_order(Opaque(17)) == 17


def test_normalize_drops_unit_factors():
    assert expr_normalize(Product((Sym(1), Sym(2)))) == Sym(2)
    assert expr_normalize(Product((Trivial(), Trivial()))) == Trivial()


def test_normalize_collapses_degenerate_wreath():
    assert expr_normalize(Wreath(Sym(3), Sym(1))) == Sym(3)
    assert expr_normalize(Wreath(Trivial(), Sym(4))) == Sym(4)
    assert expr_normalize(Opaque(1)) == Trivial()


def test_normalize_flattens_and_sorts():
    e = Product((Product((Sym(2), Sym(4))), Sym(3)))
    assert expr_normalize(e) == Product((Sym(4), Sym(3), Sym(2)))


def test_normalize_escalates_mixed_splitting():
    inner = Product((Sym(2), Sym(2)), UNSPECIFIED_EXTENSION)
    out = expr_normalize(Product((inner, Sym(3))))
    assert isinstance(out, Product) and out.splitting == UNSPECIFIED_EXTENSION


def test_render_examples():
    assert render_expr(expr_normalize(Product((Sym(2), Sym(2))))) == "S2^2"
    e = Product((Wreath(Sym(2), Sym(3)),) + (Sym(2),) * 6)
    assert render_expr(expr_normalize(e)) == "(S2 wr S3) x S2^6"
    assert render_expr(Trivial()) == "1"
    assert render_expr(Opaque(6)) == "[6]"
    assert render_expr(Wreath(Product((Sym(2), Sym(2))), Sym(3))) == "((S2^2) wr S3)"
    assert render_expr(Wreath(Product((Sym(3), Sym(2))), Sym(4))) == "((S3 x S2) wr S4)"


def test_parse_render_round_trip_samples():
    for text in ("1", "S5", "[42]", "(S2 wr S3) x S2^6", "S4 x S3", "((S2 wr S2) wr S3)"):
        e = parse_expr(text)
        assert render_expr(expr_normalize(e)) == render_expr(expr_normalize(parse_expr(render_expr(e))))
        assert expr_order(parse_expr(render_expr(e))) == expr_order(e)


def test_parse_rejects_garbage():
    for text in ("", "S", "wr", "(S2 wr)", "S2 x", "[x]"):
        with pytest.raises(ValueError):
            parse_expr(text)


def _expr_strategy():
    leaf = st.one_of(
        st.just(Trivial()),
        st.integers(0, 6).map(Sym),
        st.integers(1, 100).map(Opaque),
    )

    def compound(sub):
        return st.one_of(
            st.lists(sub, min_size=1, max_size=4).map(lambda fs: Product(tuple(fs))),
            st.tuples(sub, st.integers(1, 4)).map(lambda t: Wreath(t[0], Sym(t[1]))),
        )

    return st.recursive(leaf, compound, max_leaves=6)


@given(_expr_strategy(), st.integers(1, 5))
def test_wreath_order_law(e, t):
    assert expr_order(Wreath(e, Sym(t))) == expr_order(e) ** t * math.factorial(t)


@given(_expr_strategy())
def test_normalize_preserves_order(e):
    assert expr_order(expr_normalize(e)) == expr_order(e)


@given(_expr_strategy())
def test_normalize_idempotent(e):
    once = expr_normalize(e)
    assert expr_normalize(once) == once


@given(_expr_strategy())
def test_render_parse_preserves_order(e):
    assert expr_order(parse_expr(render_expr(e))) == expr_order(e)
