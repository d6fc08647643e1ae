"""Base tuples (beta_0, ..., beta_m), their marks, branch maps and frontier constants."""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

from .numerics import EXACT, Mode, Ordering, Scalar, decide, format_scalar, parse_scalar


class NotInDm(ValueError):
    """The base tuple violates the interleaving a_k < a_{k+1} <= b_k < b_{k+1}."""


class InvalidBases(ValueError):
    """Fewer than two bases, or a base not greater than 1."""


class DigitOutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class Marks:
    a: tuple
    b: tuple


@dataclass(frozen=True)
class Frontier:
    xi_plus: Scalar
    xi_minus: Scalar
    eta_plus: Scalar
    eta_minus: Scalar

    def as_tuple(self):
        return (self.xi_plus, self.xi_minus, self.eta_plus, self.eta_minus)

    def to_dict(self) -> dict:
        return {
            "xi_plus": format_scalar(self.xi_plus),
            "xi_minus": format_scalar(self.xi_minus),
            "eta_plus": format_scalar(self.eta_plus),
            "eta_minus": format_scalar(self.eta_minus),
        }


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    failure: Optional[str] = None
    indices: tuple = ()
    frontier: Optional[Frontier] = None

    def __bool__(self):
        return self.valid

    def to_dict(self) -> dict:
        out = {"valid": self.valid}
        if self.failure is not None:
            out["failure"] = self.failure
            out["indices"] = list(self.indices)
        if self.frontier is not None:
            out["frontier"] = self.frontier.to_dict()
        return out


class MonotoneOrder(enum.Enum):
    ASCENDING = "ascending"
    DESCENDING = "descending"
    NEITHER = "neither"
    CONSTANT = "constant"


@dataclass(frozen=True)
class BaseTuple:
    """Bases beta_0..beta_m, one per digit of the alphabet {0, ..., m}."""

    betas: tuple
    mode: Mode = field(default=EXACT)

    def __post_init__(self):
        betas = tuple(self.mode.coerce(b) for b in self.betas)
        if len(betas) < 2:
            raise InvalidBases("need at least two bases (m >= 1)")
        for k, beta in enumerate(betas):
            if not beta > 1:
                raise InvalidBases(f"beta_{k} = {format_scalar(beta)} is not > 1")
        object.__setattr__(self, "betas", betas)

    @classmethod
    def constant(cls, beta, m: int, mode: Mode = EXACT) -> "BaseTuple":
        return cls((beta,) * (m + 1), mode)

    @property
    def m(self) -> int:
        return len(self.betas) - 1

    @property
    def is_exact(self) -> bool:
        return self.mode.name == "exact"

    def scalar(self, value) -> Scalar:
        return self.mode.coerce(value)

    @cached_property
    def upper(self) -> Scalar:
        """Right end m/(beta_m - 1) of the expansion domain."""
        return self.m / (self.betas[-1] - 1)

    @cached_property
    def marks(self) -> Marks:
        up = self.upper
        a = tuple(self.scalar(k) / beta for k, beta in enumerate(self.betas))
        b = tuple((k + up) / beta for k, beta in enumerate(self.betas))
        return Marks(a, b)

    def T(self, k: int, x: Scalar) -> Scalar:
        """Branch map T_k(x) = beta_k x - k."""
        if not 0 <= k <= self.m:
            raise DigitOutOfRange(f"digit {k} outside 0..{self.m}")
        return self.betas[k] * x - k

    def T_inverse(self, k: int, y: Scalar) -> Scalar:
        if not 0 <= k <= self.m:
            raise DigitOutOfRange(f"digit {k} outside 0..{self.m}")
        return (y + k) / self.betas[k]

    def compare(self, a: Scalar, b: Scalar) -> Ordering:
        return self.mode.compare(a, b)

    def decide(self, a: Scalar, b: Scalar, what: str = "") -> Ordering:
        return decide(self.mode, a, b, what)

    @cached_property
    def report(self) -> ValidationReport:
        a, b = self.marks.a, self.marks.b
        L, E = Ordering.LESS, Ordering.EQUAL
        for k in range(self.m):
            checks = (
                (f"a_{k} < a_{k + 1}", a[k], a[k + 1], (L,)),
                (f"a_{k + 1} <= b_{k}", a[k + 1], b[k], (L, E)),
                (f"b_{k} < b_{k + 1}", b[k], b[k + 1], (L,)),
            )
            for label, lhs, rhs, ok in checks:
                if self.decide(lhs, rhs, label) not in ok:
                    detail = f"{label} fails: {format_scalar(lhs)} vs {format_scalar(rhs)}"
                    return ValidationReport(False, detail, (k, k + 1))
        return ValidationReport(True, frontier=self._frontier())

    def validate(self) -> ValidationReport:
        return self.report

    def require_dm(self) -> "BaseTuple":
        report = self.report
        if not report.valid:
            raise NotInDm(report.failure)
        return self

    def _frontier(self) -> Frontier:
        a, b = self.marks.a, self.marks.b
        xs = [self.T(k, a[k + 1]) for k in range(self.m)]
        ys = [self.T(k, b[k - 1]) for k in range(1, self.m + 1)]
        return Frontier(max(xs), min(xs), max(ys), min(ys))

    @property
    def frontier(self) -> Frontier:
        return self.require_dm().report.frontier

    def monotone_order(self) -> MonotoneOrder:
        signs = set()
        for lo, hi in zip(self.betas, self.betas[1:]):
            order = self.compare(lo, hi)
            if order is Ordering.LESS:
                signs.add(-1)
            elif order is Ordering.GREATER:
                signs.add(1)
        if not signs:
            return MonotoneOrder.CONSTANT
        if signs == {-1}:
            return MonotoneOrder.ASCENDING
        if signs == {1}:
            return MonotoneOrder.DESCENDING
        return MonotoneOrder.NEITHER

    @property
    def min_beta(self) -> Scalar:
        return min(self.betas)

    def residual_bound(self, n: int) -> Scalar:
        """Upper bound m/((beta_m - 1) min(beta)^n) on the tail after n digits."""
        return self.upper / self.min_beta ** n

    def to_dict(self) -> dict:
        return {"m": self.m, "betas": [format_scalar(b) for b in self.betas]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict, mode: Mode = EXACT) -> "BaseTuple":
        betas = [parse_scalar(str(b), mode) for b in data["betas"]]
        m = int(data.get("m", len(betas) - 1))
        if len(betas) == 1:
            betas = betas * (m + 1)
        if len(betas) != m + 1:
            raise ValueError(f"m = {m} needs {m + 1} bases, got {len(betas)}")
        return cls(tuple(betas), mode)

    @classmethod
    def from_json(cls, text: str, mode: Mode = EXACT) -> "BaseTuple":
        return cls.from_dict(json.loads(text), mode)


def parse_bases(text: str, m: Optional[int] = None, mode: Mode = EXACT) -> BaseTuple:
    """Parse ``"2,3/2"`` (one base per digit) or a single base repeated m+1 times.

    A JSON object ``{"m": .., "betas": [..]}`` is accepted too.
    """
    text = text.strip()
    if text.startswith("{"):
        bt = BaseTuple.from_json(text, mode)
        if m is not None and bt.m != m:
            raise ValueError(f"--m {m} disagrees with {bt.m + 1} bases")
        return bt
    parts = [p for p in text.replace(";", ",").split(",") if p.strip()]
    if not parts:
        raise ValueError("empty base list")
    betas = [parse_scalar(p, mode) for p in parts]
    if len(betas) == 1:
        return BaseTuple.constant(betas[0], 1 if m is None else m, mode)
    if m is not None and m != len(betas) - 1:
        raise ValueError(f"--m {m} disagrees with {len(betas)} bases")
    return BaseTuple(tuple(betas), mode)

