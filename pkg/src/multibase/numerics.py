"""Scalar values and three-way comparison.

Exact mode works on :class:`fractions.Fraction` (always in lowest terms).
Float mode works on Python floats and refuses to decide comparisons closer
than its epsilon: those come back as ``Ordering.AMBIGUOUS``.
"""
from __future__ import annotations

import enum
import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, float]

DEFAULT_EPSILON = 1e-12


class ModeMismatch(TypeError):
    """Exact and float scalars were mixed in one operation."""


class DivisionByZero(ZeroDivisionError):
    pass


class BoundaryAmbiguity(ArithmeticError):
    """A float comparison fell within epsilon where a decision was required."""


class Ordering(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    AMBIGUOUS = "ambiguous"

    @classmethod
    def of(cls, sign: int) -> "Ordering":
        return cls.LESS if sign < 0 else cls.GREATER if sign > 0 else cls.EQUAL


@dataclass(frozen=True)
class ExactMode:
    name = "exact"

    def coerce(self, value) -> Fraction:
        if isinstance(value, float):
            raise ModeMismatch(f"float {value!r} given to exact arithmetic")
        return Fraction(value)

    def compare(self, a: Scalar, b: Scalar) -> Ordering:
        _check_same_mode(a, b)
        return Ordering.of((a > b) - (a < b))


@dataclass(frozen=True)
class FloatMode:
    """Double-precision arithmetic with an ambiguity band of width ``epsilon``."""

    epsilon: float = DEFAULT_EPSILON
    precision_bits: int = 53
    name = "float"

    def __post_init__(self):
        if not self.epsilon > 0:
            raise ValueError("epsilon must be positive")
        if self.precision_bits != 53:
            raise ValueError("only IEEE double precision (53 bits) is available")

    def coerce(self, value) -> float:
        return float(value)

    def compare(self, a: Scalar, b: Scalar) -> Ordering:
        _check_same_mode(a, b)
        if abs(a - b) < self.epsilon:
            return Ordering.AMBIGUOUS
        return Ordering.LESS if a < b else Ordering.GREATER


Mode = Union[ExactMode, FloatMode]
EXACT = ExactMode()


def mode_name(a: Scalar) -> str:
    if isinstance(a, float):
        return "float"
    if isinstance(a, (Fraction, int)):
        return "exact"
    raise TypeError(f"not a scalar: {a!r}")


def _check_same_mode(a: Scalar, b: Scalar) -> None:
    if mode_name(a) != mode_name(b):
        raise ModeMismatch(f"cannot combine {a!r} and {b!r}")


def mode_for(a: Scalar, epsilon: float = DEFAULT_EPSILON) -> Mode:
    return FloatMode(epsilon) if mode_name(a) == "float" else EXACT


def compare(a: Scalar, b: Scalar, epsilon: float = DEFAULT_EPSILON) -> Ordering:
    """Three-way comparison; float operands within ``epsilon`` are AMBIGUOUS."""
    _check_same_mode(a, b)
    return mode_for(a, epsilon).compare(a, b)


_OPS = {
    "+": operator.add,
    "-": operator.sub,
    "*": operator.mul,
    "/": operator.truediv,
}
_OPS.update({"−": operator.sub, "×": operator.mul, "÷": operator.truediv})


def arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    _check_same_mode(a, b)
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operator {op!r}") from None
    if fn is operator.truediv and b == 0:
        raise DivisionByZero(f"{a} / 0")
    result = fn(a, b)
    return result if isinstance(result, float) else Fraction(result)


def decide(mode: Mode, a: Scalar, b: Scalar, what: str = "") -> Ordering:
    """Like ``mode.compare`` but raises instead of returning AMBIGUOUS."""
    order = mode.compare(a, b)
    if order is Ordering.AMBIGUOUS:
        raise BoundaryAmbiguity(f"{what or 'comparison'}: {a!r} vs {b!r} within epsilon")
    return order


def parse_scalar(text: str, mode: Mode = EXACT) -> Scalar:
    """Parse ``"p/q"``, an integer or a decimal literal.

    In exact mode decimals are read exactly (``"0.1"`` is ``1/10``).
    """
    text = text.strip()
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        if isinstance(mode, FloatMode):
            try:
                return float(text)
            except ValueError:
                pass
        raise ValueError(f"cannot parse scalar {text!r}") from None
    return mode.coerce(value)


def format_scalar(a: Scalar) -> str:
    if isinstance(a, float):
        return repr(a)
    a = Fraction(a)
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"
