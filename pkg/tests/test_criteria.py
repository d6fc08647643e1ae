from fractions import Fraction as F
import math

import pytest
from hypothesis import assume, given, settings, strategies as st

from multibase.bases import BaseTuple
from multibase.criteria import (
    HypothesisNotMet,
    NotConstantBase,
    PreconditionFailed,
    Status,
    classify_two_bases,
    classify_monotone,
    classify_single_base,
    classify_frontier,
    is_greedy,
    is_lazy,
    is_quasi_greedy,
    is_quasi_lazy,
    entry_indices,
    quasi_from_greedy,
    reflect_single_base,
    same_expansion,
    tail_condition,
    reference,
)
from multibase.numerics import FloatMode, Ordering
from multibase.transforms import TransformKind, canonical_spec, expand, generates
from multibase.words import AlphabetMismatch, EpWord, Word, parse_word, project

from oracles import dm_tuples, epwords, points, rationals

B2 = BaseTuple((2, 2))
B23 = BaseTuple((2, F(3, 2)))
SAT, VIO, UND = Status.SATISFIED, Status.VIOLATED, Status.UNDECIDED


def ep(text, m=1):
    return parse_word(text, m)


def truth(bt, kind, w):
    return generates(canonical_spec(bt, kind), w)


# basic value criteria

def test_is_greedy_examples():
    assert is_greedy(B2, ep("11(0)")).status is SAT
    v = is_greedy(B2, ep("0(1)"))
    assert v.status is VIO and v.witness == 1
    assert is_greedy(B2, ep("(1)")).status is SAT
    with pytest.raises(AlphabetMismatch):
        is_greedy(B2, ep("(2)", 2))


def test_is_quasi_greedy_examples():
    assert is_quasi_greedy(B2, ep("0(1)")).status is SAT
    assert is_quasi_greedy(B2, ep("1(0)")).status is VIO
    with pytest.raises(HypothesisNotMet):
        is_quasi_greedy(B2, ep("(0)"))
    phi = (1 + math.sqrt(5)) / 2
    golden = BaseTuple.constant(phi, 1, FloatMode())
    assert is_quasi_greedy(golden, ep("(10)")).status is SAT


def test_is_lazy_examples():
    assert is_lazy(B2, ep("0(1)")).status is SAT
    v = is_lazy(B2, ep("1(0)"))
    assert v.status is VIO and v.witness == 1
    assert is_lazy(B2, ep("(0)")).status is SAT


def test_is_quasi_lazy_examples():
    assert is_quasi_lazy(B2, ep("(01)")).status is SAT
    assert is_quasi_lazy(B2, ep("(10)")).status is SAT
    assert is_quasi_lazy(B2, ep("0(1)")).status is VIO
    with pytest.raises(HypothesisNotMet):
        is_quasi_lazy(B2, ep("(1)"))


def test_verdict_json():
    assert is_greedy(B2, ep("0(1)")).to_dict() == {"status": "violated", "witness": 1}
    assert is_greedy(B2, ep("(0)")).to_dict() == {"status": "satisfied"}


@settings(max_examples=150)
@given(dm_tuples(), st.data())
def test_basic_criteria_match_generation(bt, data):
    w = data.draw(epwords(bt.m))
    assert is_greedy(bt, w).ok == truth(bt, "greedy", w)
    assert is_lazy(bt, w).ok == truth(bt, "lazy", w)
    if w != EpWord.constant(0, bt.m):
        assert is_quasi_greedy(bt, w).ok == truth(bt, "quasi-greedy", w)
    if w != EpWord.constant(bt.m, bt.m):
        assert is_quasi_lazy(bt, w).ok == truth(bt, "quasi-lazy", w)


@settings(max_examples=60)
@given(dm_tuples(), st.data())
def test_generated_words_pass(bt, data):
    x = data.draw(points(bt))
    for kind, crit in (("greedy", is_greedy), ("lazy", is_lazy)):
        e = expand(canonical_spec(bt, kind), x, 80)
        assume(e.word is not None)
        assert crit(bt, e.word).ok


@settings(max_examples=100)
@given(dm_tuples(), st.data())
def test_violation_witness_is_least(bt, data):
    w = data.draw(epwords(bt.m))
    v = is_greedy(bt, w)
    if v.failed:
        n = v.witness
        assert w.digit(n) < bt.m
        assert is_greedy(bt, EpWord.constant(0, bt.m)).ok
        # every earlier position passes on its own
        for j in range(1, n):
            if w.digit(j) < bt.m:
                assert project(bt, w.shift(j - 1)) < bt.marks.a[w.digit(j) + 1]


# lexicographic conditions

def test_frontier_examples():
    r = classify_frontier(B2, ep("11(0)"))
    assert r.greedy_necessary.status is SAT
    r = classify_frontier(B23, ep("(0)"))
    assert r.greedy_sufficient.status is SAT
    r = classify_frontier(B23, ep("(1)"))
    assert r.greedy_necessary.status is SAT


@settings(max_examples=60, deadline=None)
@given(dm_tuples(), st.data())
def test_frontier_directions(bt, data):
    w = data.draw(epwords(bt.m))
    r = classify_frontier(bt, w, 120)
    greedy, lazy = truth(bt, "greedy", w), truth(bt, "lazy", w)
    if greedy:
        assert not r.greedy_necessary.failed
    if lazy:
        assert not r.lazy_necessary.failed
    if r.greedy_sufficient.ok:
        assert greedy
    if r.lazy_sufficient.ok:
        assert lazy
    if r.unique_sufficient.ok:
        assert greedy and lazy


def test_two_bases_examples():
    g = expand(canonical_spec(B23, "greedy"), 1, 50).word
    assert classify_two_bases(B23, g).greedy.status is SAT
    assert classify_two_bases(B23, ep("0(1)")).greedy.status is VIO
    with pytest.raises(PreconditionFailed):
        classify_two_bases(BaseTuple((2, 2, 2)), ep("(0)", 2))
    w = ep("0(01)")
    c, s = classify_two_bases(B2, w), classify_single_base(B2, w)
    assert (c.greedy.status, c.lazy.status) == (s.greedy.status, s.lazy.status)


pairs = st.tuples(rationals(1, 2), rationals(1, 2)).map(BaseTuple)


@settings(max_examples=80, deadline=None)
@given(pairs, epwords(1))
def test_two_bases_biconditional(bt, w):
    c = classify_two_bases(bt, w, 200)
    for verdict, want in ((c.greedy, truth(bt, "greedy", w)), (c.lazy, truth(bt, "lazy", w))):
        if verdict.status is not UND:
            assert verdict.ok == want


def test_monotone_gating():
    with pytest.raises(PreconditionFailed):
        classify_monotone(BaseTuple((F(3, 2), 2, F(7, 4))), ep("(0)", 2))
    r = classify_monotone(B23, ep("(10)"))
    assert r.sufficient and not r.necessary


@settings(max_examples=60, deadline=None)
@given(dm_tuples(), st.data())
def test_monotone_directions(bt, data):
    w = data.draw(epwords(bt.m))
    try:
        r = classify_monotone(bt, w, 120)
    except (PreconditionFailed, HypothesisNotMet):
        return
    greedy, lazy = truth(bt, "greedy", w), truth(bt, "lazy", w)
    if r.necessary:
        assert not (greedy and r.greedy_condition.failed)
        assert not (lazy and r.lazy_condition.failed)
    if r.sufficient:
        assert not (r.greedy_condition.ok and not greedy)
        assert not (r.lazy_condition.ok and not lazy)


def test_single_base_requires_constant():
    with pytest.raises(NotConstantBase):
        classify_single_base(B23, ep("(0)"))


constant_bases = st.integers(1, 3).flatmap(
    lambda m: rationals(1, m + 1).map(lambda b: BaseTuple.constant(b, m)))


@settings(max_examples=80, deadline=None)
@given(constant_bases, st.data())
def test_single_base_characterisation(bt, data):
    w = data.draw(epwords(bt.m))
    r = classify_single_base(bt, w, 200)
    greedy, lazy = truth(bt, "greedy", w), truth(bt, "lazy", w)
    x = project(bt, w)
    if r.greedy.status is not UND:
        assert r.greedy.ok == greedy
    if r.lazy.status is not UND:
        assert r.lazy.ok == lazy
    if r.greedy_all_shifts.status is not UND:
        assert r.greedy_all_shifts.ok == (greedy and x < 1)
    if r.lazy_all_shifts.status is not UND:
        assert r.lazy_all_shifts.ok == (lazy and x > bt.upper - 1)


def test_tail_condition_start_zero():
    ref = reference(B2, TransformKind.QUASI_GREEDY, F(1), 20)
    assert tail_condition(ep("(1)"), ref, Ordering.LESS, start=0).status is VIO
    assert tail_condition(ep("(01)"), ref, Ordering.LESS, start=0).status is SAT


# quasi relations, reflection, indices

def test_quasi_from_greedy_examples():
    assert quasi_from_greedy(B2, ep("1(0)")).word == ep("0(1)")
    assert quasi_from_greedy(B2, ep("11(0)")).word == ep("10(1)")
    assert quasi_from_greedy(B2, ep("(01)")).word == ep("(01)")
    with pytest.raises(PreconditionFailed):
        quasi_from_greedy(B2, ep("0(1)"))
    with pytest.raises(PreconditionFailed):
        quasi_from_greedy(B2, ep("(0)"))


@settings(max_examples=60, deadline=None)
@given(dm_tuples(), st.data())
def test_quasi_from_greedy_matches_map(bt, data):
    head = data.draw(st.lists(st.integers(0, bt.m), min_size=1, max_size=6))
    x = project(bt, Word(tuple(head), bt.m))
    assume(x != 0)
    g = expand(canonical_spec(bt, "greedy"), x, 200)
    assume(g.word is not None)
    q = expand(canonical_spec(bt, "quasi-greedy"), x, 200)
    assert same_expansion(quasi_from_greedy(bt, g.word, 200), q) is not False


def test_reflection_examples():
    r = reflect_single_base(B2, F(1, 2))
    assert r.lazy_of_reflected.word == r.complement_of_greedy.word == ep("0(1)")
    r = reflect_single_base(B2, 0)
    assert r.lazy_of_reflected.word == ep("(1)")
    r = reflect_single_base(B2, F(1, 3))
    assert r.lazy_of_reflected.word == ep("(10)")
    with pytest.raises(NotConstantBase):
        reflect_single_base(B23, 0)


@settings(max_examples=60, deadline=None)
@given(constant_bases, st.data())
def test_reflection_property(bt, data):
    r = reflect_single_base(bt, data.draw(points(bt)), 100)
    assert r.agree is not False


def test_entry_indices_examples():
    for bt in (B2, B23, BaseTuple((F(3, 2), F(7, 4), 2))):
        assert entry_indices(bt, 0).p == 0
        assert entry_indices(bt, 0).q is None
        assert entry_indices(bt, bt.upper).p is None
    assert entry_indices(B2, F(3, 4)).p == 0
    assert entry_indices(B23, F(3, 2)).p == 1  # 3/2 >= xi_+ = 4/3, G(3/2) = 1/2


@settings(max_examples=60, deadline=None)
@given(dm_tuples(), st.data())
def test_entry_indices_tail_bound(bt, data):
    x = data.draw(points(bt))
    assume(x != bt.upper)
    g = expand(canonical_spec(bt, "greedy"), x, 120)
    assume(g.word is not None)
    p = entry_indices(bt, x).p
    ref = reference(bt, TransformKind.QUASI_GREEDY, bt.frontier.xi_plus, 120)
    assert not tail_condition(g.word, ref, Ordering.LESS, start=p).failed
