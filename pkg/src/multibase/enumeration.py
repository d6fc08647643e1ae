"""All expansions of a point, as a prefix tree of admissible branch choices.

A digit k may follow state y iff T_k(y) stays in [0, m/(beta_m - 1)]; the
infinite paths of this tree are exactly the expansions of the root value.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .bases import BaseTuple
from .numerics import Ordering, Scalar, format_scalar
from .transforms import OutOfDomain, TransformKind, canonical_spec, expand
from .words import EpWord, digits_to_str

DEFAULT_NODE_BUDGET = 1_000_000


class NodeBudgetExceeded(RuntimeError):
    pass


def _check_domain(bt: BaseTuple, y: Scalar) -> None:
    if bt.compare(y, bt.scalar(0)) is Ordering.LESS or bt.compare(y, bt.upper) is Ordering.GREATER:
        raise OutOfDomain(f"{format_scalar(y)} outside [0, {format_scalar(bt.upper)}]")


def admissible_digits(bt: BaseTuple, y: Scalar) -> tuple:
    """Digits k with 0 <= T_k(y) <= m/(beta_m - 1), ascending."""
    bt.require_dm()
    _check_domain(bt, y)
    zero, up = bt.scalar(0), bt.upper
    out = []
    for k in range(bt.m + 1):
        z = bt.T(k, y)
        # float ties at the domain ends count as admissible
        if bt.compare(z, zero) is not Ordering.LESS and bt.compare(z, up) is not Ordering.GREATER:
            out.append(k)
    return tuple(out)


@dataclass
class Node:
    digit: Optional[int]
    state: Scalar
    children: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "digit": self.digit,
            "state": format_scalar(self.state),
            "children": [c.to_dict() for c in self.children],
        }


@dataclass
class ExpansionTree:
    root_value: Scalar
    depth: int
    root: Node
    leaves: list
    node_count: int

    @property
    def count(self) -> int:
        return len(self.leaves)

    def level_sizes(self) -> list:
        sizes, level = [], [self.root]
        for _ in range(self.depth + 1):
            sizes.append(len(level))
            level = [c for n in level for c in n.children]
        return sizes

    def iter_paths(self) -> Iterator[tuple]:
        """(prefix, state) for every leaf, in lexicographic order."""
        stack = [(self.root, ())]
        while stack:
            node, path = stack.pop()
            if not node.children:
                yield path, node.state
            for child in reversed(node.children):
                stack.append((child, path + (child.digit,)))

    def to_dict(self, full: bool = False) -> dict:
        out = {
            "x": format_scalar(self.root_value),
            "depth": self.depth,
            "count": self.count,
            "leaves": [digits_to_str(p) for p in self.leaves],
        }
        if full:
            out["tree"] = self.root.to_dict()
        return out


def enumerate_expansions(
    bt: BaseTuple, x: Scalar, depth: int, node_budget: int = DEFAULT_NODE_BUDGET
) -> ExpansionTree:
    """Complete prefix tree of all expansions of x down to ``depth`` digits."""
    if depth < 1:
        raise ValueError("depth must be positive")
    bt.require_dm()
    x = bt.scalar(x)
    root = Node(None, x)
    leaves = []
    count = 1
    stack = [(root, ())]
    while stack:
        node, path = stack.pop()
        if len(path) == depth:
            leaves.append(path)
            continue
        for k in admissible_digits(bt, node.state):
            count += 1
            if count > node_budget:
                raise NodeBudgetExceeded(f"more than {node_budget} nodes at depth {depth}")
            node.children.append(Node(k, bt.T(k, node.state)))
        for child in reversed(node.children):
            stack.append((child, path + (child.digit,)))
    return ExpansionTree(x, depth, root, leaves, count)


class Uniqueness(enum.Enum):
    UNIQUE = "unique"
    NOT_UNIQUE = "not-unique"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class UniquenessResult:
    status: Uniqueness
    word: Optional[EpWord] = None
    position: Optional[int] = None
    state: Optional[Scalar] = None
    branches: tuple = ()
    depth: Optional[int] = None

    def to_dict(self) -> dict:
        out = {"status": self.status.value}
        if self.word is not None:
            out["word"] = str(self.word)
        if self.position is not None:
            out["position"] = self.position
            out["state"] = format_scalar(self.state)
            out["branches"] = list(self.branches)
        if self.depth is not None:
            out["depth"] = self.depth
        return out


def first_branching(bt: BaseTuple, x: Scalar, depth: int):
    """Follow x while exactly one digit is admissible.

    Returns (position, state, digits) of the first state with two or more
    admissible digits, or None if there is none within ``depth`` steps or
    before the single path revisits a state.
    """
    state = bt.scalar(x)
    seen = {state} if bt.is_exact else None
    for n in range(1, depth + 1):
        digits = admissible_digits(bt, state)
        if len(digits) > 1:
            return n, state, digits
        state = bt.T(digits[0], state)
        if seen is not None:
            if state in seen:
                return None
            seen.add(state)
    return None


def is_unique_expansion(bt: BaseTuple, x: Scalar, depth: int = 200) -> UniquenessResult:
    """Unique iff the greedy and lazy expansions coincide.

    The answer is cross-checked against a walk of the expansion tree, which
    must have a single node on every level exactly when x is unique.
    """
    bt.require_dm()
    x = bt.scalar(x)
    g = expand(canonical_spec(bt, TransformKind.GREEDY), x, depth)
    l = expand(canonical_spec(bt, TransformKind.LAZY), x, depth)
    branch = first_branching(bt, x, depth)
    if g.word is not None and l.word is not None:
        unique = g.word == l.word
    else:
        n = min(len(g.digits) if g.word is None else depth, len(l.digits) if l.word is None else depth)
        unique = None if g.prefix(n) == l.prefix(n) else False
    if unique is True:
        if branch is not None:
            raise AssertionError(f"greedy = lazy at x = {format_scalar(x)} but the tree branches")
        return UniquenessResult(Uniqueness.UNIQUE, word=g.word)
    if unique is None:
        if branch is not None:
            n, state, digits = branch
            return UniquenessResult(Uniqueness.NOT_UNIQUE, position=n, state=state, branches=digits)
        return UniquenessResult(Uniqueness.UNDECIDED, depth=depth)
    if branch is None:
        raise AssertionError(f"greedy != lazy at x = {format_scalar(x)} but no branching state found")
    n, state, digits = branch
    return UniquenessResult(Uniqueness.NOT_UNIQUE, position=n, state=state, branches=digits)
