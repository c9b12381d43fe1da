"""Rational generating functions and truncated power-series expansion.

Both sequences share the denominator 1 - (k-1)x - kx^2.  The J numerator
is x.  The j numerator is 2 + (4-2k)x; the form printed alongside the
original derivation, 2(x + 2 - k), swaps the constant and linear
coefficients and is kept as ``Form.PAPER_LITERAL`` so the mismatch can be
demonstrated.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import zip_longest
from typing import Optional, Sequence

from .core import Form, SequenceKind, SequenceParams, terms


@dataclass(frozen=True, init=False)
class Poly:
    """Integer polynomial, coefficients in ascending degree, no trailing zeros."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Sequence[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: Poly) -> Poly:
        return Poly([a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)])

    def __neg__(self) -> Poly:
        return Poly([-a for a in self.coeffs])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            return Poly([other * a for a in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for deg, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if deg == 0:
                body = str(mag)
            else:
                var = "x" if deg == 1 else f"x^{deg}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append(("-" if c < 0 else "+", body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


@dataclass(frozen=True)
class RationalGF:
    numerator: Poly
    denominator: Poly

    def __post_init__(self):
        if self.denominator[0] != 1:
            raise ValueError(
                f"denominator constant term must be 1, got {self.denominator[0]}"
            )

    def __add__(self, other: RationalGF) -> RationalGF:
        if self.denominator == other.denominator:
            return RationalGF(self.numerator + other.numerator, self.denominator)
        return RationalGF(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __str__(self):
        num = str(self.numerator)
        if sum(1 for c in self.numerator.coeffs if c) > 1:
            num = f"({num})"
        return f"{num} / ({self.denominator})"


def gf_for(params: SequenceParams, form: Form = Form.CORRECTED) -> RationalGF:
    k = params.k
    den = Poly([1, -(k - 1), -k])
    if params.kind is SequenceKind.JACOBSTHAL:
        num = Poly([0, 1])
    elif form is Form.PAPER_LITERAL:
        num = Poly([4 - 2 * k, 2])  # 2(x + 2 - k)
    else:
        num = Poly([2, 4 - 2 * k])
    return RationalGF(num, den)


def expand(gf: RationalGF, count: int) -> list[int]:
    """First ``count`` Maclaurin coefficients of ``gf``.

    Uses c[n] = num[n] - sum_{i>=1} den[i] * c[n-i], valid because the
    denominator has constant term 1.
    """
    if gf.denominator[0] != 1:
        raise ValueError("denominator constant term must be 1")
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    den = gf.denominator.coeffs
    out: list[int] = []
    for n in range(count):
        c = gf.numerator[n]
        for i in range(1, min(n, len(den) - 1) + 1):
            c -= den[i] * out[n - i]
        out.append(c)
    return out


@dataclass(frozen=True)
class FormMatch:
    form: Form
    gf: RationalGF
    coefficients: list[int]
    first_mismatch: Optional[int]

    @property
    def matches(self) -> bool:
        return self.first_mismatch is None


@dataclass(frozen=True)
class GFMatchReport:
    params: SequenceParams
    count: int
    expected: list[int]
    forms: dict[Form, FormMatch] = field(default_factory=dict)

    def describe(self, form: Form) -> str:
        fm = self.forms[form]
        if fm.matches:
            return f"match ({self.count} coefficients)"
        i = fm.first_mismatch
        return f"mismatch at n={i} (got {fm.coefficients[i]}, want {self.expected[i]})"


def _first_mismatch(got: list[int], want: list[int]) -> Optional[int]:
    for i, (g, w) in enumerate(zip(got, want)):
        if g != w:
            return i
    return None


def match_report(
    params: SequenceParams, count: int, forms: Sequence[Form] = (Form.PAPER_LITERAL, Form.CORRECTED)
) -> GFMatchReport:
    """Expand each generating-function form and compare with the recurrence."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    expected = terms(params, count)
    report = GFMatchReport(params, count, expected)
    for form in forms:
        gf = gf_for(params, form)
        got = expand(gf, count)
        report.forms[form] = FormMatch(form, gf, got, _first_mismatch(got, expected))
    return report
