"""Exact arithmetic for generalized Jacobsthal and Jacobsthal-Lucas numbers."""
from .core import (
    Form,
    SequenceKind,
    SequenceParams,
    TermWindow,
    eval_binet,
    eval_iter,
    eval_matrix,
    initial_terms,
    prefix_sum,
    term_stream,
    terms,
)
from .errors import InvariantError

__all__ = [
    "Form",
    "InvariantError",
    "SequenceKind",
    "SequenceParams",
    "TermWindow",
    "eval_binet",
    "eval_iter",
    "eval_matrix",
    "initial_terms",
    "prefix_sum",
    "term_stream",
    "terms",
]
