"""Generalized Jacobsthal numbers J(k,n) and Jacobsthal-Lucas numbers j(k,n).

Both follow x(n) = (k-1) x(n-1) + k x(n-2) for an integer k >= 2, with
J(k,0), J(k,1) = 0, 1 and j(k,0), j(k,1) = 2, 2.

Three exact evaluators are provided and must always agree:
``eval_iter`` (linear recurrence), ``eval_binet`` (closed form, exact
division by k+1) and ``eval_matrix`` (powers of F_k).

Note that k=2 gives the classical Jacobsthal numbers (OEIS A001045) for J,
but j(2,n) = 2, 2, 6, 10, ... equals 2*J(2,n+1), not the classical
Jacobsthal-Lucas numbers 2, 1, 5, 7, ...
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import InvariantError
from .matrix import f_power_terms, rf_power_lucas


class SequenceKind(enum.Enum):
    JACOBSTHAL = "J"
    JACOBSTHAL_LUCAS = "j"

    @classmethod
    def parse(cls, text: str) -> SequenceKind:
        # single letters are case-sensitive: J vs j
        key = text.strip()
        if key in ("J", "j"):
            return cls(key)
        long_names = {
            "jacobsthal": cls.JACOBSTHAL,
            "lucas": cls.JACOBSTHAL_LUCAS,
            "jacobsthal-lucas": cls.JACOBSTHAL_LUCAS,
        }
        try:
            return long_names[key.lower()]
        except KeyError:
            raise ValueError(f"unknown sequence kind {text!r} (use J or j)") from None


class Form(enum.Enum):
    """Which version of a printed result to evaluate."""

    PAPER_LITERAL = "paper"
    CORRECTED = "corrected"


@dataclass(frozen=True)
class SequenceParams:
    kind: SequenceKind
    k: int

    def __post_init__(self):
        if not isinstance(self.kind, SequenceKind):
            raise TypeError(f"kind must be a SequenceKind, got {self.kind!r}")
        if isinstance(self.k, bool) or not isinstance(self.k, int):
            raise TypeError(f"k must be an int, got {type(self.k).__name__}")
        if self.k < 2:
            raise ValueError(f"k must be >= 2, got {self.k}")

    @classmethod
    def J(cls, k: int) -> SequenceParams:
        return cls(SequenceKind.JACOBSTHAL, k)

    @classmethod
    def j(cls, k: int) -> SequenceParams:
        return cls(SequenceKind.JACOBSTHAL_LUCAS, k)

    @property
    def symbol(self) -> str:
        return self.kind.value

    def __str__(self):
        return f"{self.symbol}(k={self.k})"


@dataclass(frozen=True)
class TermWindow:
    """Sliding state of the streaming generator: term n and term n-1."""

    params: SequenceParams
    n: int
    value: int
    previous: Optional[int] = None

    def advance(self) -> TermWindow:
        k = self.params.k
        if self.n == 0:
            _, nxt = initial_terms(self.params)
        else:
            nxt = (k - 1) * self.value + k * self.previous
        return TermWindow(self.params, self.n + 1, nxt, self.value)


def _check_index(n: int, name: str = "n") -> None:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"{name} must be an int, got {type(n).__name__}")
    if n < 0:
        raise ValueError(f"{name} must be >= 0, got {n}")


def initial_terms(params: SequenceParams) -> tuple[int, int]:
    if params.kind is SequenceKind.JACOBSTHAL:
        return 0, 1
    return 2, 2


def eval_iter(params: SequenceParams, n: int) -> int:
    _check_index(n)
    k = params.k
    a, b = initial_terms(params)
    for _ in range(n):
        a, b = b, (k - 1) * b + k * a
    return a


def eval_binet(params: SequenceParams, n: int) -> int:
    _check_index(n)
    k = params.k
    kn = k**n  # int.__pow__ is binary exponentiation
    sign = -1 if n & 1 else 1
    if params.kind is SequenceKind.JACOBSTHAL:
        num = kn - sign
    else:
        num = 4 * kn + 2 * (k - 1) * sign
    q, r = divmod(num, k + 1)
    if r:
        raise InvariantError(f"closed form for {params} at n={n} is not divisible by {k + 1}")
    return q


def eval_matrix(params: SequenceParams, n: int) -> int:
    _check_index(n)
    if n == 0:
        return initial_terms(params)[0]
    if params.kind is SequenceKind.JACOBSTHAL:
        return f_power_terms(params.k, n)[1]
    return rf_power_lucas(params.k, n)[1]


def _seek(params: SequenceParams, n: int) -> TermWindow:
    if n == 0:
        return TermWindow(params, 0, initial_terms(params)[0])
    if params.kind is SequenceKind.JACOBSTHAL:
        _, cur, prev = f_power_terms(params.k, n)
    else:
        _, cur, prev = rf_power_lucas(params.k, n)
    return TermWindow(params, n, cur, prev)


def windows(params: SequenceParams, start: int = 0) -> Iterator[TermWindow]:
    """Endless stream of windows beginning at index ``start``."""
    _check_index(start, "start")
    w = _seek(params, start)
    while True:
        yield w
        w = w.advance()


def term_stream(params: SequenceParams, start: int, stop: int) -> Iterator[tuple[int, int]]:
    """Yield (n, term n) for n in [start, stop], inclusive."""
    _check_index(start, "start")
    _check_index(stop, "stop")
    if start > stop:
        raise ValueError(f"empty range: start {start} > stop {stop}")
    for w in windows(params, start):
        yield w.n, w.value
        if w.n == stop:
            return


def terms(params: SequenceParams, count: int) -> list[int]:
    """The first ``count`` terms as a list."""
    if count <= 0:
        return []
    return [v for _, v in term_stream(params, 0, count - 1)]


def prefix_sum(params: SequenceParams, n: int) -> int:
    """Sum of terms 0..n by direct accumulation."""
    _check_index(n)
    return sum(v for _, v in term_stream(params, 0, n))


EVALUATORS = {
    "iter": eval_iter,
    "binet": eval_binet,
    "matrix": eval_matrix,
}
