"""Finite words and eventually periodic infinite words over {0, ..., m}."""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from math import lcm
from typing import Iterator, Optional, Sequence, Union

from .bases import BaseTuple
from .numerics import Ordering, Scalar


class AlphabetMismatch(ValueError):
    pass


def _check_digits(digits: Sequence[int], m: int) -> tuple:
    digits = tuple(int(d) for d in digits)
    for d in digits:
        if not 0 <= d <= m:
            raise AlphabetMismatch(f"digit {d} outside 0..{m}")
    return digits


def _primitive_root(v: tuple) -> tuple:
    n = len(v)
    for p in range(1, n + 1):
        if n % p == 0 and v[:p] * (n // p) == v:
            return v[:p]
    return v


@dataclass(frozen=True)
class Word:
    digits: tuple
    m: int

    def __post_init__(self):
        object.__setattr__(self, "digits", _check_digits(self.digits, self.m))

    def __len__(self):
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    def __getitem__(self, i):
        return self.digits[i]

    def __str__(self):
        return digits_to_str(self.digits)


@dataclass(frozen=True)
class EpWord:
    """The infinite word pre . period . period ...

    Stored canonically: ``period`` is primitive and ``pre`` is as short as
    possible, so two EpWords are equal iff they denote the same sequence.
    """

    pre: tuple
    period: tuple
    m: int

    def __post_init__(self):
        pre = list(_check_digits(self.pre, self.m))
        period = _check_digits(self.period, self.m)
        if not period:
            raise ValueError("period must be nonempty")
        period = _primitive_root(period)
        while pre and pre[-1] == period[-1]:
            pre.pop()
            period = period[-1:] + period[:-1]
        object.__setattr__(self, "pre", tuple(pre))
        object.__setattr__(self, "period", period)

    @classmethod
    def constant(cls, digit: int, m: int) -> "EpWord":
        return cls((), (digit,), m)

    def __getitem__(self, i: int) -> int:
        """0-based digit access into the infinite sequence."""
        if i < 0:
            raise IndexError(i)
        if i < len(self.pre):
            return self.pre[i]
        return self.period[(i - len(self.pre)) % len(self.period)]

    def digit(self, n: int) -> int:
        """1-based digit w_n."""
        return self[n - 1]

    def prefix(self, n: int) -> tuple:
        return tuple(self[i] for i in range(n))

    def __iter__(self) -> Iterator[int]:
        yield from self.pre
        while True:
            yield from self.period

    @property
    def tail_span(self) -> int:
        """Number of distinct tails: positions 1..tail_span cover every shift."""
        return len(self.pre) + len(self.period)

    def ends_with(self, digit: int) -> bool:
        return self.period == (digit,)

    def shift(self, n: int = 1) -> "EpWord":
        if n < 0:
            raise ValueError("shift count must be nonnegative")
        if n <= len(self.pre):
            return EpWord(self.pre[n:], self.period, self.m)
        r = (n - len(self.pre)) % len(self.period)
        return EpWord((), self.period[r:] + self.period[:r], self.m)

    def complement(self) -> "EpWord":
        m = self.m
        return EpWord(tuple(m - d for d in self.pre), tuple(m - d for d in self.period), m)

    def __str__(self):
        return f"{digits_to_str(self.pre)}({digits_to_str(self.period)})"

    def to_dict(self) -> dict:
        return {"pre": list(self.pre), "period": list(self.period)}

    @classmethod
    def from_dict(cls, data: dict, m: int) -> "EpWord":
        return cls(tuple(data["pre"]), tuple(data["period"]), m)


AnyWord = Union[Word, EpWord]


def shift(w: EpWord, n: int = 1) -> EpWord:
    return w.shift(n)


def complement(w: AnyWord) -> AnyWord:
    if isinstance(w, Word):
        return Word(tuple(w.m - d for d in w.digits), w.m)
    return w.complement()


def lex_compare(w: EpWord, v: EpWord) -> Ordering:
    if w.m != v.m:
        raise AlphabetMismatch(f"alphabets 0..{w.m} and 0..{v.m}")
    if w == v:
        return Ordering.EQUAL
    K = len(w.pre) + len(v.pre) + lcm(len(w.period), len(v.period))
    for i in range(K):
        if w[i] != v[i]:
            return Ordering.of(w[i] - v[i])
    # unreachable for canonical words: agreement on K letters forces equality
    return Ordering.EQUAL


def compare_with_prefix(w: EpWord, prefix: Sequence[int]) -> Optional[Ordering]:
    """Compare ``w`` against a sequence known only through ``prefix``.

    Returns None when the two agree on the whole known prefix.
    """
    for i, d in enumerate(prefix):
        if w[i] != d:
            return Ordering.of(w[i] - d)
    return None


def lex_compare_prefixes(p: Sequence[int], q: Sequence[int]) -> Optional[Ordering]:
    """Compare two finite prefixes of infinite words; None if one extends the other."""
    for x, y in zip(p, q):
        if x != y:
            return Ordering.of(x - y)
    return None


def _pi_finite(bt: BaseTuple, digits: Sequence[int]):
    """(pi(digits), beta_{d_1} ... beta_{d_n}) computed left to right."""
    total = bt.scalar(0)
    weight = bt.scalar(1)
    for d in digits:
        weight = weight * bt.betas[d]
        total = total + d / weight
    return total, weight


def project(bt: BaseTuple, w: Union[AnyWord, Sequence[int]]) -> Scalar:
    """The value sum w_i / (beta_{w_1} ... beta_{w_i})."""
    if isinstance(w, (Word, EpWord)):
        if w.m != bt.m:
            raise AlphabetMismatch(f"word over 0..{w.m}, bases for 0..{bt.m}")
    bt.require_dm()
    if isinstance(w, EpWord):
        head, head_weight = _pi_finite(bt, w.pre)
        cyc, cyc_weight = _pi_finite(bt, w.period)
        # the tail y satisfies y = pi(period) + y / Pi(period)
        tail = cyc * cyc_weight / (cyc_weight - 1)
        return head + tail / head_weight
    digits = w.digits if isinstance(w, Word) else _check_digits(w, bt.m)
    return _pi_finite(bt, digits)[0]


def weight(bt: BaseTuple, digits: Sequence[int]) -> Scalar:
    """Product beta_{d_1} ... beta_{d_n}."""
    return _pi_finite(bt, digits)[1]


def digits_to_str(digits: Sequence[int]) -> str:
    if any(d > 9 for d in digits):
        return ".".join(str(d) for d in digits)
    return "".join(str(d) for d in digits)


def _str_to_digits(text: str) -> tuple:
    if not text:
        return ()
    if "." in text:
        return tuple(int(t) for t in text.split("."))
    return tuple(int(c) for c in text)


_EP_RE = re.compile(r"^\s*([0-9.]*)\(([0-9.]+)\)\s*$")


def parse_word(text: str, m: int) -> AnyWord:
    """Parse ``"101"`` (finite) or ``"10(01)"`` (10 followed by 01 repeated).

    Digits above 9 need dot separators: ``"1.12(0)"``. JSON objects with
    ``pre``/``period`` keys are accepted as well.
    """
    text = text.strip()
    if text.startswith("{"):
        return EpWord.from_dict(json.loads(text), m)
    match = _EP_RE.match(text)
    if match:
        return EpWord(_str_to_digits(match.group(1)), _str_to_digits(match.group(2)), m)
    if not re.fullmatch(r"[0-9.]+", text):
        raise ValueError(f"cannot parse word {text!r}")
    return Word(_str_to_digits(text), m)
