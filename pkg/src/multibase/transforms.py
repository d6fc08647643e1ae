"""Piecewise linear transformations defined by interval partitions, and their expansions.

A :class:`TransformSpec` splits [0, m/(beta_m - 1)] into I_0, ..., I_m at cuts
c_1 < ... < c_m and applies T_k on I_k. Iterating it from x produces a digit
sequence; with exact rational states the orbit either revisits a state (the
expansion is eventually periodic) or is cut off at the requested depth.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .bases import BaseTuple
from .numerics import BoundaryAmbiguity, Ordering, Scalar, format_scalar
from .words import EpWord, Word, digits_to_str, project, weight


class OutOfDomain(ValueError):
    pass


class InvalidPartition(ValueError):
    pass


class TransformKind(enum.Enum):
    GREEDY = "greedy"
    QUASI_GREEDY = "quasi-greedy"
    LAZY = "lazy"
    QUASI_LAZY = "quasi-lazy"


@dataclass(frozen=True)
class TransformSpec:
    """Partition I_0..I_m of the domain.

    ``inclusion[k]`` is ``(left_closed, right_closed)`` for I_k. At every cut
    exactly one of the two neighbouring intervals must contain the cut point.
    """

    bt: BaseTuple
    cuts: tuple
    inclusion: tuple
    kind: Optional[TransformKind] = field(default=None, compare=False)

    def __post_init__(self):
        bt = self.bt.require_dm()
        m = bt.m
        cuts = tuple(bt.scalar(c) for c in self.cuts)
        inclusion = tuple((bool(lo), bool(hi)) for lo, hi in self.inclusion)
        object.__setattr__(self, "cuts", cuts)
        object.__setattr__(self, "inclusion", inclusion)
        if len(cuts) != m or len(inclusion) != m + 1:
            raise InvalidPartition(f"need {m} cuts and {m + 1} intervals")
        a, b = bt.marks.a, bt.marks.b
        for k, c in enumerate(cuts, start=1):
            if bt.compare(c, a[k]) is Ordering.LESS or bt.compare(c, b[k - 1]) is Ordering.GREATER:
                raise InvalidPartition(
                    f"c_{k} = {format_scalar(c)} outside [a_{k}, b_{k - 1}]"
                )
        for k in range(1, m):
            if bt.decide(cuts[k - 1], cuts[k], "cut ordering") is not Ordering.LESS:
                raise InvalidPartition(f"cuts must increase strictly (c_{k}, c_{k + 1})")
        if not inclusion[0][0] or not inclusion[m][1]:
            raise InvalidPartition("0 must lie in I_0 and m/(beta_m - 1) in I_m")
        for k in range(1, m + 1):
            if inclusion[k - 1][1] == inclusion[k][0]:
                owner = "both" if inclusion[k][0] else "neither"
                raise InvalidPartition(f"cut c_{k} belongs to {owner} of I_{k - 1}, I_{k}")

    @property
    def m(self) -> int:
        return self.bt.m

    def interval(self, k: int):
        """(inf, sup, left_closed, right_closed) of I_k."""
        lo = self.cuts[k - 1] if k > 0 else self.bt.scalar(0)
        hi = self.cuts[k] if k < self.m else self.bt.upper
        return (lo, hi) + self.inclusion[k]

    def locate(self, x: Scalar) -> int:
        """The k with x in I_k."""
        bt = self.bt
        if bt.compare(x, bt.scalar(0)) is Ordering.LESS or bt.compare(x, bt.upper) is Ordering.GREATER:
            raise OutOfDomain(f"{format_scalar(x)} outside [0, {format_scalar(bt.upper)}]")
        k = 0
        for j, c in enumerate(self.cuts, start=1):
            order = bt.compare(x, c)
            if order is Ordering.AMBIGUOUS:
                raise BoundaryAmbiguity(f"x = {x!r} within epsilon of cut c_{j} = {c!r}")
            if order is Ordering.LESS:
                break
            if order is Ordering.EQUAL and self.inclusion[j - 1][1]:
                break
            k = j
        return k

    def step(self, x: Scalar):
        k = self.locate(x)
        return k, self.bt.T(k, x)


def canonical_spec(bt: BaseTuple, kind) -> TransformSpec:
    kind = TransformKind(kind)
    bt.require_dm()
    m = bt.m
    a, b = bt.marks.a, bt.marks.b
    half_open = ((True, False),) * m + ((True, True),)
    other_side = ((True, True),) + ((False, True),) * m
    if kind is TransformKind.GREEDY:
        return TransformSpec(bt, a[1:], half_open, kind)
    if kind is TransformKind.QUASI_GREEDY:
        return TransformSpec(bt, a[1:], other_side, kind)
    if kind is TransformKind.LAZY:
        return TransformSpec(bt, b[:-1], other_side, kind)
    return TransformSpec(bt, b[:-1], half_open, kind)


def step(spec: TransformSpec, x: Scalar):
    return spec.step(x)


@dataclass(frozen=True)
class Expansion:
    """Digits produced by iterating a transformation from ``x``.

    ``word`` is set when the orbit revisited a state; otherwise the expansion
    was cut off after ``len(digits)`` digits and ``final_state`` is T^n(x).
    Float-mode periods are detected up to epsilon and flagged ``approximate``.
    """

    x: Scalar
    digits: tuple
    word: Optional[EpWord]
    final_state: Scalar
    approximate: bool = False

    @property
    def truncated(self) -> bool:
        return self.word is None

    @property
    def periodic(self) -> bool:
        return self.word is not None

    def prefix(self, n: int) -> tuple:
        if self.word is not None:
            return self.word.prefix(n)
        if n > len(self.digits):
            raise ValueError(f"only {len(self.digits)} digits known")
        return self.digits[:n]

    def __str__(self):
        if self.word is not None:
            return str(self.word)
        return digits_to_str(self.digits) + "..."


@dataclass(frozen=True)
class Orbit:
    start: Scalar
    states: tuple
    digits: tuple
    cycle: Optional[int] = None

    def reconstruct(self, bt: BaseTuple, i: int) -> Scalar:
        """pi(t_1..t_i) + T^i(x) / (beta_{t_1} ... beta_{t_i}); equals ``start``."""
        head = self.digits[:i]
        return project(bt, Word(head, bt.m)) + self.states[i] / weight(bt, head)


def _find_repeat(bt: BaseTuple, seen: dict, states: list, state) -> Optional[int]:
    if bt.is_exact:
        return seen.get(state)
    for j, s in enumerate(states):
        if abs(s - state) < bt.mode.epsilon:
            return j
    return None


def orbit(spec: TransformSpec, x: Scalar, n: int) -> Orbit:
    """Up to n steps of the orbit of x, stopping at the first revisited state."""
    bt = spec.bt
    x = bt.scalar(x)
    states, digits, seen = [x], [], {x: 0}
    cycle = None
    for i in range(n):
        d, y = spec.step(states[-1])
        j = _find_repeat(bt, seen, states, y)
        states.append(y)
        digits.append(d)
        if j is not None:
            cycle = j
            break
        seen[y] = i + 1
    return Orbit(x, tuple(states), tuple(digits), cycle)


def expand(spec: TransformSpec, x: Scalar, max_depth: int) -> Expansion:
    if max_depth < 1:
        raise ValueError("max_depth must be positive")
    o = orbit(spec, x, max_depth)
    if o.cycle is None:
        return Expansion(o.start, o.digits, None, o.states[-1])
    word = EpWord(o.digits[: o.cycle], o.digits[o.cycle :], spec.m)
    return Expansion(o.start, o.digits, word, o.states[-1], approximate=not spec.bt.is_exact)


def generates(spec: TransformSpec, w: EpWord) -> bool:
    """Whether iterating ``spec`` from pi(w) reproduces w.

    The orbit of pi(w) stays inside the finitely many values pi(tail of w)
    while it agrees with w, so tail_span + 1 steps decide the question.
    """
    e = expand(spec, project(spec.bt, w), w.tail_span + 1)
    if e.word is not None:
        return e.word == w
    return e.digits == w.prefix(len(e.digits))


@dataclass(frozen=True)
class PlotSeries:
    branches: tuple
    diagonal: bool = True

    def to_dict(self) -> dict:
        return {"branches": list(self.branches), "diagonal": self.diagonal}


def plot_data(spec: TransformSpec, samples_per_branch: int = 2) -> PlotSeries:
    """Graph of the transformation, one line segment per branch."""
    if samples_per_branch < 1:
        raise ValueError("samples_per_branch must be positive")
    bt = spec.bt
    branches = []
    for k in range(spec.m + 1):
        lo, hi, lo_in, hi_in = spec.interval(k)
        n = samples_per_branch
        xs = [lo] if n == 1 else [lo + (hi - lo) * i / (n - 1) for i in range(n)]
        branches.append({
            "k": k,
            "x0": format_scalar(lo),
            "y0": format_scalar(bt.T(k, lo)),
            "x1": format_scalar(hi),
            "y1": format_scalar(bt.T(k, hi)),
            "incl": [lo_in, hi_in],
            "slope": format_scalar(bt.betas[k]),
            "samples": [[format_scalar(u), format_scalar(bt.T(k, u))] for u in xs],
        })
    return PlotSeries(tuple(branches))

