import pytest
from hypothesis import given, strategies as st

from moschext.errors import TermSyntaxError
from moschext.mosch_core import O, BasePoint, Pair, nat_to_code
from moschext.terms import (Comp, Iter, Pi, Prim, Sigma, Sym, format_term, parse_elem,
                            parse_term, term_depth)


def test_parse_examples():
    assert parse_term("iter(s, sigma(I, b, I))") == Iter(Sym("s"), Sigma(Prim("I"), Sym("b"), Prim("I")))
    assert parse_term("pi(L,R)") == Pi(Prim("L"), Prim("R"))
    assert parse_term("L.R.s") == Comp(Prim("L"), Comp(Prim("R"), Sym("s")))


def test_grouping_keeps_left_nesting():
    t = parse_term("(L.R).s")
    assert t == Comp(Comp(Prim("L"), Prim("R")), Sym("s"))
    assert parse_term(format_term(t)) == t


@pytest.mark.parametrize("text,col", [("pi(L", 5), ("sigma(I,L)", 10), ("", 1), ("L.", 3), ("L R", 3)])
def test_syntax_errors_carry_positions(text, col):
    with pytest.raises(TermSyntaxError) as e:
        parse_term(text)
    assert e.value.line == 1 and e.value.col == col


def test_error_line_numbers():
    with pytest.raises(TermSyntaxError) as e:
        parse_term("pi(L,\n  R")
    assert e.value.line == 2


def test_element_literals():
    assert parse_elem("o") is O
    assert parse_elem("#2") == Pair(O, Pair(O, O))
    assert parse_elem("((o,o),o)") == Pair(Pair(O, O), O)
    assert parse_elem("(`a`,(o,#2))") == Pair(BasePoint("a"), nat_to_code(3))
    for bad in ("(o", "(o,o", "#", "x", "(o,o))"):
        with pytest.raises(TermSyntaxError):
            parse_elem(bad)


def test_term_depth():
    assert term_depth(Prim("I")) == 0
    assert term_depth(parse_term("pi(L, iter(s, R))")) == 2


_leaf = st.sampled_from([Prim(n) for n in "ILRTF"] + [Sym("s"), Sym("swap"), Sym("b")])
_terms = st.recursive(_leaf, lambda sub: st.one_of(
    st.builds(Comp, sub, sub), st.builds(Pi, sub, sub),
    st.builds(Sigma, sub, sub, sub), st.builds(Iter, sub, sub)), max_leaves=12)


@given(_terms)
def test_terms_round_trip(t):
    assert parse_term(format_term(t)) == t
    assert parse_term(str(t)) == t


_elems = st.recursive(st.sampled_from([O, BasePoint("a"), BasePoint("b")]),
                      lambda sub: st.builds(Pair, sub, sub), max_leaves=10)


@given(_elems)
def test_elements_round_trip(z):
    assert parse_elem(str(z)) == z
