"""Deciding whether a digit sequence is greedy, lazy, quasi-greedy, quasi-lazy or unique.

Two families of tests live here. The value criteria compare pi of every tail
against the marks a_k, b_k. The lexicographic criteria compare every shifted
tail against the quasi-greedy expansion of xi_+/xi_- or the quasi-lazy
expansion of eta_+/eta_-.

An eventually periodic word u v v ... has only len(u) + len(v) distinct pairs
(w_n, tail), so every "whenever w_n < m" quantifier is decided by a finite
scan. Reference sequences that do not become periodic within the working
depth can leave a comparison open; the verdict is then UNDECIDED.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from .bases import BaseTuple, MonotoneOrder
from .numerics import BoundaryAmbiguity, Ordering, Scalar, format_scalar
from .transforms import Expansion, OutOfDomain, TransformKind, canonical_spec, expand
from .words import AlphabetMismatch, EpWord, compare_with_prefix, lex_compare, project

DEFAULT_DEPTH = 200


class HypothesisNotMet(ValueError):
    pass


class PreconditionFailed(ValueError):
    pass


class NotConstantBase(ValueError):
    pass


class ReflectionMismatch(AssertionError):
    """The two routes of the reflection principle disagreed (a defect)."""


class IterationBudgetExceeded(RuntimeError):
    pass


class Status(enum.Enum):
    SATISFIED = "satisfied"
    VIOLATED = "violated"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class Verdict:
    status: Status
    witness: Optional[int] = None
    depth: Optional[int] = None

    @classmethod
    def satisfied(cls) -> "Verdict":
        return cls(Status.SATISFIED)

    @classmethod
    def violated(cls, n: int) -> "Verdict":
        return cls(Status.VIOLATED, witness=n)

    @classmethod
    def undecided(cls, depth: int) -> "Verdict":
        return cls(Status.UNDECIDED, depth=depth)

    @property
    def ok(self) -> bool:
        return self.status is Status.SATISFIED

    @property
    def failed(self) -> bool:
        return self.status is Status.VIOLATED

    def to_dict(self) -> dict:
        out = {"status": self.status.value}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.depth is not None:
            out["depth"] = self.depth
        return out


def combine(*verdicts: Verdict) -> Verdict:
    """Conjunction: violated beats undecided beats satisfied."""
    violated = [v.witness for v in verdicts if v.failed]
    if violated:
        return Verdict.violated(min(violated))
    undecided = [v.depth for v in verdicts if v.status is Status.UNDECIDED]
    if undecided:
        return Verdict.undecided(min(undecided))
    return Verdict.satisfied()


def _check_word(bt: BaseTuple, w: EpWord) -> None:
    bt.require_dm()
    if w.m != bt.m:
        raise AlphabetMismatch(f"word over 0..{w.m}, bases for 0..{bt.m}")


def tail_values(bt: BaseTuple, w: EpWord) -> list:
    """pi(w_n w_{n+1} ...) for n = 1 .. tail_span (list index n - 1)."""
    span = w.tail_span
    values = [None] * (span + 1)
    values[span] = project(bt, w.shift(span))
    for i in range(span - 1, -1, -1):
        d = w[i]
        values[i] = (d + values[i + 1]) / bt.betas[d]
    return values[:span]


def _value_criterion(bt, w, applies, bound, accept, strict, exclude_digit=None) -> Verdict:
    _check_word(bt, w)
    witness = None
    for n, value in enumerate(tail_values(bt, w), start=1):
        d = w.digit(n)
        if not applies(d):
            continue
        order = bt.compare(value, bound(d))
        if order is Ordering.AMBIGUOUS:
            if strict:
                raise BoundaryAmbiguity(f"tail at n={n} within epsilon of its mark")
            continue
        if order not in accept:
            witness = n
            break
    if exclude_digit is not None and w.ends_with(exclude_digit):
        start = len(w.pre) + 1
        witness = start if witness is None else min(witness, start)
    return Verdict.satisfied() if witness is None else Verdict.violated(witness)


def is_greedy(bt: BaseTuple, w: EpWord) -> Verdict:
    """pi(w_n w_{n+1} ...) < a_{w_n + 1} whenever w_n < m."""
    a = bt.marks.a
    return _value_criterion(
        bt, w, lambda d: d < bt.m, lambda d: a[d + 1], (Ordering.LESS,), strict=True
    )


def is_quasi_greedy(bt: BaseTuple, w: EpWord) -> Verdict:
    _check_word(bt, w)
    if w == EpWord.constant(0, bt.m):
        raise HypothesisNotMet("pi(w) = 0: quasi-greedy criterion needs x != 0")
    a = bt.marks.a
    return _value_criterion(
        bt, w, lambda d: d < bt.m, lambda d: a[d + 1],
        (Ordering.LESS, Ordering.EQUAL), strict=False, exclude_digit=0,
    )


def is_lazy(bt: BaseTuple, w: EpWord) -> Verdict:
    """pi(w_n w_{n+1} ...) > b_{w_n - 1} whenever w_n > 0."""
    b = bt.marks.b
    return _value_criterion(
        bt, w, lambda d: d > 0, lambda d: b[d - 1], (Ordering.GREATER,), strict=True
    )


def is_quasi_lazy(bt: BaseTuple, w: EpWord) -> Verdict:
    _check_word(bt, w)
    if w == EpWord.constant(bt.m, bt.m):
        raise HypothesisNotMet("pi(w) = m/(beta_m - 1): quasi-lazy criterion needs x below it")
    b = bt.marks.b
    return _value_criterion(
        bt, w, lambda d: d > 0, lambda d: b[d - 1],
        (Ordering.GREATER, Ordering.EQUAL), strict=False, exclude_digit=bt.m,
    )


@lru_cache(maxsize=4096)
def reference(bt: BaseTuple, kind: TransformKind, point: Scalar, depth: int) -> Expansion:
    """Expansion of ``point`` under a canonical map, memoised per base tuple."""
    return expand(canonical_spec(bt, kind), point, depth)


def tail_condition(
    w: EpWord,
    ref: Expansion,
    want: Ordering,
    applies: Callable[[int], bool] = lambda d: True,
    start: int = 1,
) -> Verdict:
    """Check ``shift(w, n) <want> ref`` for every n >= start with ``applies(w_n)``.

    ``start = 0`` includes w itself (there is no digit w_0; ``applies`` is
    not consulted for it).
    """
    depth = len(ref.digits)
    undecided = False
    last = max(w.tail_span, start)
    for n in range(start, last + 1):
        if n > 0 and not applies(w.digit(n)):
            continue
        tail = w.shift(n)
        if ref.word is not None:
            order = lex_compare(tail, ref.word)
        else:
            order = compare_with_prefix(tail, ref.digits)
            if order is None:
                undecided = True
                continue
        if order is not want:
            return Verdict.violated(n)
    return Verdict.undecided(depth) if undecided else Verdict.satisfied()


def _greedy_condition(bt, w, point, depth, start=1) -> Verdict:
    ref = reference(bt, TransformKind.QUASI_GREEDY, point, depth)
    return tail_condition(w, ref, Ordering.LESS, lambda d: d < bt.m, start)


def _lazy_condition(bt, w, point, depth, start=1) -> Verdict:
    ref = reference(bt, TransformKind.QUASI_LAZY, point, depth)
    return tail_condition(w, ref, Ordering.GREATER, lambda d: d > 0, start)


@dataclass(frozen=True)
class LexVerdicts:
    greedy_necessary: Verdict
    greedy_sufficient: Verdict
    lazy_necessary: Verdict
    lazy_sufficient: Verdict
    unique_necessary: Verdict
    unique_sufficient: Verdict

    def to_dict(self) -> dict:
        return {k: v.to_dict() for k, v in self.__dict__.items()}


def classify_frontier(bt: BaseTuple, w: EpWord, depth: int = DEFAULT_DEPTH) -> LexVerdicts:
    """Lexicographic conditions against g*(xi_+), g*(xi_-), l*(eta_-), l*(eta_+).

    The ``*_necessary`` entries hold for every greedy/lazy/unique word; the
    ``*_sufficient`` entries, when satisfied, prove w is greedy/lazy/unique.
    With two or more distinct frontier values the two can differ.
    """
    _check_word(bt, w)
    f = bt.frontier
    g_nec = _greedy_condition(bt, w, f.xi_plus, depth)
    g_suf = _greedy_condition(bt, w, f.xi_minus, depth)
    l_nec = _lazy_condition(bt, w, f.eta_minus, depth)
    l_suf = _lazy_condition(bt, w, f.eta_plus, depth)
    return LexVerdicts(g_nec, g_suf, l_nec, l_suf, combine(g_nec, l_nec), combine(g_suf, l_suf))


@dataclass(frozen=True)
class Classification:
    greedy: Verdict
    lazy: Verdict
    unique: Verdict

    def to_dict(self) -> dict:
        return {"greedy": self.greedy.to_dict(), "lazy": self.lazy.to_dict(),
                "unique": self.unique.to_dict()}


def classify_two_bases(bt: BaseTuple, w: EpWord, depth: int = DEFAULT_DEPTH) -> Classification:
    """Two bases in (1, 2]: the lexicographic tests are exact characterisations."""
    if bt.m != 1 or not all(1 < beta <= 2 for beta in bt.betas):
        raise PreconditionFailed("needs m = 1 and both bases in (1, 2]")
    _check_word(bt, w)
    b0, b1 = bt.betas
    xi = b0 / b1
    eta = b1 / (b0 * (b1 - 1)) - 1
    greedy = _greedy_condition(bt, w, xi, depth)
    lazy = _lazy_condition(bt, w, eta, depth)
    return Classification(greedy, lazy, combine(greedy, lazy))


@dataclass(frozen=True)
class MonotoneClassification:
    order: MonotoneOrder
    greedy_condition: Verdict
    lazy_condition: Verdict
    unique_condition: Verdict
    necessary: bool
    sufficient: bool

    def to_dict(self) -> dict:
        return {
            "order": self.order.value,
            "greedy": self.greedy_condition.to_dict(),
            "lazy": self.lazy_condition.to_dict(),
            "unique": self.unique_condition.to_dict(),
            "necessary": self.necessary,
            "sufficient": self.sufficient,
        }


def _in_domain(bt: BaseTuple, point: Scalar) -> bool:
    return (bt.compare(point, bt.scalar(0)) is not Ordering.LESS
            and bt.compare(point, bt.upper) is not Ordering.GREATER)


def classify_monotone(bt: BaseTuple, w: EpWord, depth: int = DEFAULT_DEPTH) -> MonotoneClassification:
    """Conditions against g*(1) and l*(m/(beta_m - 1) - 1) for monotone bases.

    For ascending bases the conditions are necessary, for descending bases
    sufficient, for constant bases both.
    """
    _check_word(bt, w)
    order = bt.monotone_order()
    if order is MonotoneOrder.NEITHER:
        raise PreconditionFailed("bases are neither ascending nor descending")
    one, other = bt.scalar(1), bt.upper - 1
    if not (_in_domain(bt, one) and _in_domain(bt, other)):
        raise HypothesisNotMet(
            f"reference points 1 and {format_scalar(other)} must lie in [0, {format_scalar(bt.upper)}]"
        )
    greedy = _greedy_condition(bt, w, one, depth)
    lazy = _lazy_condition(bt, w, other, depth)
    return MonotoneClassification(
        order, greedy, lazy, combine(greedy, lazy),
        necessary=order in (MonotoneOrder.ASCENDING, MonotoneOrder.CONSTANT),
        sufficient=order in (MonotoneOrder.DESCENDING, MonotoneOrder.CONSTANT),
    )


@dataclass(frozen=True)
class SingleBaseClassification:
    greedy: Verdict
    lazy: Verdict
    unique: Verdict
    greedy_all_shifts: Verdict
    lazy_all_shifts: Verdict
    unique_all_shifts: Verdict

    def to_dict(self) -> dict:
        return {k: v.to_dict() for k, v in self.__dict__.items()}


def _require_constant(bt: BaseTuple) -> None:
    if bt.monotone_order() is not MonotoneOrder.CONSTANT:
        raise NotConstantBase("all bases must be equal")


def classify_single_base(bt: BaseTuple, w: EpWord, depth: int = DEFAULT_DEPTH) -> SingleBaseClassification:
    """One base: compare tails with g*(1) and its digitwise complement.

    The ``*_all_shifts`` entries require the comparison for every n >= 0 with
    no digit restriction; they characterise greedy words of x < 1, lazy words
    of x > m/(beta - 1) - 1, and unique words of x between the two.
    """
    _check_word(bt, w)
    _require_constant(bt)
    m = bt.m
    g1 = reference(bt, TransformKind.QUASI_GREEDY, bt.scalar(1), depth)
    g1_bar = complement_expansion(g1, m)
    greedy = tail_condition(w, g1, Ordering.LESS, lambda d: d < m)
    lazy = tail_condition(w, g1_bar, Ordering.GREATER, lambda d: d > 0)
    greedy_all = tail_condition(w, g1, Ordering.LESS, start=0)
    lazy_all = tail_condition(w, g1_bar, Ordering.GREATER, start=0)
    return SingleBaseClassification(
        greedy, lazy, combine(greedy, lazy), greedy_all, lazy_all, combine(greedy_all, lazy_all)
    )


def complement_expansion(e: Expansion, m: int) -> Expansion:
    word = e.word.complement() if e.word is not None else None
    return Expansion(e.x, tuple(m - d for d in e.digits), word, e.final_state, e.approximate)


def same_expansion(e1: Expansion, e2: Expansion) -> Optional[bool]:
    """Equal as sequences? None if both are truncated and agree on the shared prefix."""
    if e1.word is not None and e2.word is not None:
        return e1.word == e2.word
    n = min(len(e1.digits) if e1.word is None else float("inf"),
            len(e2.digits) if e2.word is None else float("inf"))
    if e1.prefix(n) != e2.prefix(n):
        return False
    return None


def quasi_from_greedy(bt: BaseTuple, g: EpWord, depth: int = DEFAULT_DEPTH) -> Expansion:
    """Quasi-greedy expansion of pi(g), built from the greedy word g.

    If g ends with 0^inf and its last nonzero digit g_n sits at position n,
    the result is g_1..g_{n-1} (g_n - 1) followed by the quasi-greedy
    expansion of T_{g_n - 1}(a_{g_n}). Otherwise it is g itself.
    """
    _check_word(bt, g)
    if not is_greedy(bt, g).ok:
        raise PreconditionFailed(f"{g} is not a greedy word")
    if g == EpWord.constant(0, bt.m):
        raise PreconditionFailed("g = 0^inf (x = 0) has no quasi-greedy relation")
    x = project(bt, g)
    if not g.ends_with(0):
        return Expansion(x, g.pre + g.period, g, project(bt, g.shift(g.tail_span)))
    last = g.pre[-1]
    head = g.pre[:-1] + (last - 1,)
    inner = expand(canonical_spec(bt, TransformKind.QUASI_GREEDY),
                   bt.T(last - 1, bt.marks.a[last]), depth)
    word = None
    if inner.word is not None:
        word = EpWord(head + inner.word.pre, inner.word.period, bt.m)
    return Expansion(x, head + inner.digits, word, inner.final_state)


@dataclass(frozen=True)
class Reflection:
    lazy_of_reflected: Expansion
    complement_of_greedy: Expansion
    quasi_lazy_of_reflected: Expansion
    complement_of_quasi_greedy: Expansion

    @property
    def agree(self) -> Optional[bool]:
        a = same_expansion(self.lazy_of_reflected, self.complement_of_greedy)
        b = same_expansion(self.quasi_lazy_of_reflected, self.complement_of_quasi_greedy)
        if a is False or b is False:
            return False
        if a is None or b is None:
            return None
        return True


def reflect_single_base(bt: BaseTuple, x: Scalar, depth: int = DEFAULT_DEPTH) -> Reflection:
    """Lazy expansion of m/(beta - 1) - x next to the complement of the greedy expansion of x.

    Both routes are computed independently; a disagreement raises
    :class:`ReflectionMismatch`.
    """
    bt.require_dm()
    _require_constant(bt)
    x = bt.scalar(x)
    if not _in_domain(bt, x):
        raise OutOfDomain(f"{format_scalar(x)} outside [0, {format_scalar(bt.upper)}]")
    m, y = bt.m, bt.upper - x

    def run(kind, point):
        return expand(canonical_spec(bt, kind), point, depth)

    result = Reflection(
        run(TransformKind.LAZY, y),
        complement_expansion(run(TransformKind.GREEDY, x), m),
        run(TransformKind.QUASI_LAZY, y),
        complement_expansion(run(TransformKind.QUASI_GREEDY, x), m),
    )
    if result.agree is False:
        raise ReflectionMismatch(f"reflection fails at x = {format_scalar(x)}")
    return result


@dataclass(frozen=True)
class EntryIndices:
    p: Optional[int]
    q: Optional[int]

    def to_dict(self) -> dict:
        return {"p": self.p, "q": self.q}


def _first_index(spec, x, target, want: Ordering, max_iter: int) -> int:
    bt = spec.bt
    state = x
    for i in range(max_iter + 1):
        if bt.decide(state, target, "entry index") is want:
            return i
        state = spec.step(state)[1]
    raise IterationBudgetExceeded(f"no index found within {max_iter} iterations")


def entry_indices(bt: BaseTuple, x: Scalar, max_iter: int = 10_000) -> EntryIndices:
    """p = min{i : G^i x < xi_+} and q = min{i : L^i x > eta_-}.

    p is None at x = m/(beta_m - 1) and q is None at x = 0, where the
    respective index is not defined.
    """
    f = bt.frontier
    x = bt.scalar(x)
    if not _in_domain(bt, x):
        raise OutOfDomain(f"{format_scalar(x)} outside [0, {format_scalar(bt.upper)}]")
    p = q = None
    if bt.compare(x, bt.upper) is not Ordering.EQUAL:
        p = _first_index(canonical_spec(bt, TransformKind.GREEDY), x, f.xi_plus, Ordering.LESS, max_iter)
    if bt.compare(x, bt.scalar(0)) is not Ordering.EQUAL:
        q = _first_index(canonical_spec(bt, TransformKind.LAZY), x, f.eta_minus, Ordering.GREATER, max_iter)
    if p is None and q is None:
        raise HypothesisNotMet("neither index is defined")
    return EntryIndices(p, q)


# names used by the operation catalogue
classify_theorem13 = classify_frontier
classify_corollary14 = classify_two_bases
lemma31_indices = entry_indices
