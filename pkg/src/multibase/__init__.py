"""Expansions of real numbers in multiple bases (beta_0, ..., beta_m).

Digit k carries its own base beta_k: the word w_1 w_2 ... stands for
sum_i w_i / (beta_{w_1} ... beta_{w_i}).
"""
from .bases import BaseTuple, Frontier, Marks, MonotoneOrder, NotInDm, parse_bases
from .criteria import (
    Status,
    Verdict,
    classify_corollary14,
    classify_frontier,
    classify_monotone,
    classify_single_base,
    classify_theorem13,
    classify_two_bases,
    entry_indices,
    is_greedy,
    is_lazy,
    is_quasi_greedy,
    is_quasi_lazy,
    lemma31_indices,
    quasi_from_greedy,
    reflect_single_base,
)
from .enumeration import admissible_digits, enumerate_expansions, is_unique_expansion
from .numerics import EXACT, FloatMode, Ordering, arith, compare, format_scalar, parse_scalar
from .transforms import (
    Expansion,
    TransformKind,
    TransformSpec,
    canonical_spec,
    expand,
    orbit,
    plot_data,
    step,
)
from .words import EpWord, Word, complement, lex_compare, parse_word, project, shift

__all__ = [name for name in dir() if not name.startswith("_")]
