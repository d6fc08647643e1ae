from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from multibase.bases import BaseTuple
from multibase.numerics import Ordering
from multibase.words import (
    AlphabetMismatch,
    EpWord,
    Word,
    complement,
    lex_compare,
    parse_word,
    project,
    shift,
)

from oracles import dm_tuples, epwords, partial_sum, series_value

B2 = BaseTuple((2, 2))
B23 = BaseTuple((2, F(3, 2)))


def ep(text, m=1):
    return parse_word(text, m)


def test_canonical_form():
    assert EpWord((1, 0, 1, 0), (1, 0), 1) == EpWord((), (1, 0), 1)
    assert EpWord((), (0, 1, 0, 1), 1).period == (0, 1)
    assert EpWord((0, 0, 1), (0, 1), 1) == EpWord((0,), (0, 1), 1)
    assert str(EpWord((0, 1, 1), (1, 1), 1)) == "0(1)"


def test_shift_examples():
    assert shift(ep("0(1)"), 1) == ep("(1)")
    assert shift(ep("(10)"), 2) == ep("(10)")
    assert shift(ep("(10)"), 1) == ep("(01)")


def test_lex_compare_examples():
    assert lex_compare(ep("(10)"), ep("(01)")) is Ordering.GREATER
    assert lex_compare(ep("1(0)"), ep("(10)")) is Ordering.LESS
    w = ep("01(011)")
    assert lex_compare(w, w) is Ordering.EQUAL
    with pytest.raises(AlphabetMismatch):
        lex_compare(ep("(1)"), ep("(1)", 2))


def test_complement_examples():
    assert complement(ep("(10)")) == ep("(01)")
    assert complement(ep("(0)", 3)) == ep("(3)", 3)
    w = ep("21(0112)", 2)
    assert complement(complement(w)) == w


def test_project_examples():
    for bt in (B2, B23, BaseTuple((F(3, 2), F(7, 4), 2))):
        m = bt.m
        assert project(bt, EpWord.constant(m, m)) == bt.upper
        assert project(bt, EpWord.constant(0, m)) == 0
    # tail equation y = 2/3 + y/3
    assert project(B23, ep("(10)")) == 1
    assert project(B2, ep("101")) == F(5, 8)


def test_parse_word_formats():
    assert parse_word("101", 1) == Word((1, 0, 1), 1)
    assert parse_word("10(01)", 1) == EpWord((1, 0), (0, 1), 1)
    assert parse_word('{"pre": [1], "period": [0]}', 1) == EpWord((1,), (0,), 1)
    assert parse_word("1.10(0)", 10) == EpWord((1, 10), (0,), 10)
    with pytest.raises(AlphabetMismatch):
        parse_word("(2)", 1)
    with pytest.raises(ValueError):
        parse_word("1(", 1)


def _naive_lex(w, v, n=200):
    for i in range(n):
        if w[i] != v[i]:
            return Ordering.LESS if w[i] < v[i] else Ordering.GREATER
    return Ordering.EQUAL


@given(st.integers(1, 3).flatmap(lambda m: st.tuples(epwords(m), epwords(m))))
def test_lex_compare_matches_naive(pair):
    w, v = pair
    assert lex_compare(w, v) is _naive_lex(w, v)
    assert (lex_compare(w, v) is Ordering.EQUAL) == (w == v)


@given(st.integers(1, 3).flatmap(epwords), st.integers(0, 12))
def test_shift_matches_iteration(w, n):
    assert shift(w, n).prefix(30) == w.prefix(n + 30)[n:]


@given(dm_tuples(), st.data())
def test_project_bounds_and_series(bt, data):
    w = data.draw(epwords(bt.m))
    value = project(bt, w)
    assert 0 <= value <= bt.upper
    assert (value == bt.upper) == (w == EpWord.constant(bt.m, bt.m))
    assert abs(float(value) - series_value(bt.betas, w.pre, w.period)) < 1e-9


@given(dm_tuples(), st.data())
def test_prefix_error_bound(bt, data):
    w = data.draw(epwords(bt.m))
    n = data.draw(st.integers(0, 15))
    head, _ = partial_sum(bt.betas, w.prefix(n))
    assert 0 <= project(bt, w) - head <= bt.upper / min(bt.betas) ** n


@given(dm_tuples(), st.data())
def test_shift_scales_projection(bt, data):
    # pi(w) = (w_1 + pi(sigma w)) / beta_{w_1}
    w = data.draw(epwords(bt.m))
    d = w[0]
    assert project(bt, w) == (d + project(bt, w.shift(1))) / bt.betas[d]
