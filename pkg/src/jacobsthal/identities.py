"""Brute-force checks of the Cassini / Catalan / d'Ocagne / convolution /
interterm / partial-sum identities for J(k,n) and j(k,n).

Every check evaluates the left-hand side with iteration-backed terms and the
right-hand side with closed-form (Binet) terms, so a pass also confirms the
two evaluators agree.

Three printed identities are wrong as stated and are available in both a
``Form.PAPER_LITERAL`` and a ``Form.CORRECTED`` version:

* Catalan, J:  J(n+r)J(n-r) - J(n)^2 = (-1)^(n-r+1) k^(n-r) J(r)^2
  (printed without the +1 in the sign exponent)
* Catalan, j:  j(n+r)j(n-r) - j(n)^2 = 8 (-1)^(n-r) k^(n-r) (k-1) J(r)^2
  (printed with k^n)
* Convolution, J:  J(m+n) = J(m)J(n+1) + k J(m-1) J(n)
  (printed with J(n-1) as the last factor)

For every other identity both forms are the same expression.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence, Union

from .core import Form, SequenceKind, SequenceParams, eval_binet, eval_iter, prefix_sum
from .matrix import Mat2, f_matrix, mat_mul, r_matrix

IdentityForm = Form

Value = Union[int, Fraction, tuple]


class IdentityId(enum.Enum):
    CATALAN_J = "catalan-j"
    CATALAN_LUCAS = "catalan-lucas"
    CASSINI_J = "cassini-j"
    CASSINI_LUCAS = "cassini-lucas"
    DOCAGNE_J = "docagne-j"
    DOCAGNE_LUCAS = "docagne-lucas"
    CONVOLUTION_J = "convolution-j"
    CONVOLUTION_LUCAS = "convolution-lucas"
    INTERTERMS_A = "interterms-a"
    INTERTERMS_B = "interterms-b"
    SUM_J = "sum-j"
    SUM_LUCAS = "sum-lucas"
    COLUMN_VECTOR = "column-vector"
    COMMUTATION = "commutation"


# identities whose printed form is wrong
ERRATA = frozenset({IdentityId.CATALAN_J, IdentityId.CATALAN_LUCAS, IdentityId.CONVOLUTION_J})


@dataclass(frozen=True)
class IdentityInstance:
    id: IdentityId
    k: int
    indices: tuple[tuple[str, int], ...] = ()

    def index_map(self) -> dict[str, int]:
        return dict(self.indices)

    def __str__(self):
        parts = [f"k={self.k}"] + [f"{name}={v}" for name, v in self.indices]
        return f"{self.id.value}[{', '.join(parts)}]"


@dataclass(frozen=True)
class IdentityReport:
    instance: IdentityInstance
    form: Form
    lhs: Value
    rhs: Value
    stated_domain: str = ""

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


# -- term access --------------------------------------------------------------

_J = SequenceKind.JACOBSTHAL
_L = SequenceKind.JACOBSTHAL_LUCAS


@lru_cache(maxsize=None)
def _iter_term(kind: SequenceKind, k: int, n: int) -> int:
    return eval_iter(SequenceParams(kind, k), n)


@lru_cache(maxsize=None)
def _binet_term(kind: SequenceKind, k: int, n: int) -> int:
    return eval_binet(SequenceParams(kind, k), n)


def _validate(k: int, **indices: int) -> None:
    SequenceParams(_J, k)
    for name, v in indices.items():
        if isinstance(v, bool) or not isinstance(v, int):
            raise TypeError(f"{name} must be an int")
        if v < 0:
            raise ValueError(f"{name} must be >= 0, got {v}")


def _sign(e: int) -> int:
    return -1 if e & 1 else 1


def _report(id_, k, indices, form, lhs, rhs) -> IdentityReport:
    inst = IdentityInstance(id_, k, tuple(indices))
    return IdentityReport(inst, form, lhs, rhs, IDENTITIES[id_].stated_domain)


# -- individual checks --------------------------------------------------------

def check_catalan_j(k: int, n: int, r: int, form: Form = Form.CORRECTED) -> IdentityReport:
    _validate(k, n=n, r=r)
    if r > n:
        raise ValueError(f"Catalan requires r <= n, got r={r}, n={n}")
    lhs = _iter_term(_J, k, n + r) * _iter_term(_J, k, n - r) - _iter_term(_J, k, n) ** 2
    sign_exp = n - r if form is Form.PAPER_LITERAL else n - r + 1
    rhs = _sign(sign_exp) * k ** (n - r) * _binet_term(_J, k, r) ** 2
    return _report(IdentityId.CATALAN_J, k, [("n", n), ("r", r)], form, lhs, rhs)


def check_catalan_lucas(k: int, n: int, r: int, form: Form = Form.CORRECTED) -> IdentityReport:
    _validate(k, n=n, r=r)
    if r > n:
        raise ValueError(f"Catalan requires r <= n, got r={r}, n={n}")
    lhs = _iter_term(_L, k, n + r) * _iter_term(_L, k, n - r) - _iter_term(_L, k, n) ** 2
    power = n if form is Form.PAPER_LITERAL else n - r
    rhs = 8 * _sign(n - r) * k**power * (k - 1) * _binet_term(_J, k, r) ** 2
    return _report(IdentityId.CATALAN_LUCAS, k, [("n", n), ("r", r)], form, lhs, rhs)


def check_cassini_j(k: int, n: int, form: Form = Form.CORRECTED) -> IdentityReport:
    _validate(k, n=n)
    if n < 1:
        raise ValueError(f"Cassini requires n >= 1, got {n}")
    lhs = _iter_term(_J, k, n + 1) * _iter_term(_J, k, n - 1) - _iter_term(_J, k, n) ** 2
    rhs = _sign(n) * k ** (n - 1)
    return _report(IdentityId.CASSINI_J, k, [("n", n)], form, lhs, rhs)


def check_cassini_lucas(k: int, n: int, form: Form = Form.CORRECTED) -> IdentityReport:
    _validate(k, n=n)
    if n < 1:
        raise ValueError(f"Cassini requires n >= 1, got {n}")
    lhs = _iter_term(_L, k, n + 1) * _iter_term(_L, k, n - 1) - _iter_term(_L, k, n) ** 2
    rhs = 8 * _sign(n) * k ** (n - 1) * (1 - k)
    return _report(IdentityId.CASSINI_LUCAS, k, [("n", n)], form, lhs, rhs)


def check_docagne_j(k: int, n: int, m: int, form: Form = Form.CORRECTED) -> IdentityReport:
    _validate(k, n=n, m=m)
    if m > n:
        raise ValueError(f"d'Ocagne requires m <= n, got m={m}, n={n}")
    t = lambda i: _iter_term(_J, k, i)  # noqa: E731
    lhs = t(n) * t(m + 1) - t(n + 1) * t(m)
    rhs = _sign(m) * k**m * _binet_term(_J, k, n - m)
    return _report(IdentityId.DOCAGNE_J, k, [("n", n), ("m", m)], form, lhs, rhs)


def check_docagne_lucas(k: int, n: int, m: int, form: Form = Form.CORRECTED) -> IdentityReport:
    _validate(k, n=n, m=m)
    if m > n:
        raise ValueError(f"d'Ocagne requires m <= n, got m={m}, n={n}")
    t = lambda i: _iter_term(_L, k, i)  # noqa: E731
    lhs = t(n) * t(m + 1) - t(n + 1) * t(m)
    rhs = 8 * _sign(m) * (1 - k) * k**m * _binet_term(_J, k, n - m)
    return _report(IdentityId.DOCAGNE_LUCAS, k, [("n", n), ("m", m)], form, lhs, rhs)


def check_convolution_j(k: int, m: int, n: int, form: Form = Form.CORRECTED) -> IdentityReport:
    _validate(k, m=m, n=n)
    if m < 1 or n < 1:
        raise ValueError(f"convolution requires m, n >= 1, got m={m}, n={n}")
    b = lambda i: _binet_term(_J, k, i)  # noqa: E731
    lhs = _iter_term(_J, k, m + n)
    last = n - 1 if form is Form.PAPER_LITERAL else n
    rhs = b(m) * b(n + 1) + k * b(m - 1) * b(last)
    return _report(IdentityId.CONVOLUTION_J, k, [("m", m), ("n", n)], form, lhs, rhs)


def check_convolution_lucas(k: int, m: int, n: int, form: Form = Form.CORRECTED) -> IdentityReport:
    _validate(k, m=m, n=n)
    if m < 1:
        raise ValueError(f"convolution requires m >= 1, got m={m}")
    lhs = _iter_term(_L, k, m + n)
    rhs = _binet_term(_L, k, m) * _binet_term(_J, k, n + 1) + k * _binet_term(
        _L, k, m - 1
    ) * _binet_term(_J, k, n)
    return _report(IdentityId.CONVOLUTION_LUCAS, k, [("m", m), ("n", n)], form, lhs, rhs)


def check_interterms(k: int, n: int, clause: str = "A", form: Form = Form.CORRECTED) -> IdentityReport:
    """j(n) = 2(J(n) + k J(n-1)) (clause A) and j(n-1) = 2(J(n) + (2-k) J(n-1)) (clause B)."""
    _validate(k, n=n)
    if n < 1:
        raise ValueError(f"interterm relation requires n >= 1, got {n}")
    clause = clause.upper()
    if clause == "A":
        id_, lhs, coef = IdentityId.INTERTERMS_A, _iter_term(_L, k, n), k
    elif clause == "B":
        id_, lhs, coef = IdentityId.INTERTERMS_B, _iter_term(_L, k, n - 1), 2 - k
    else:
        raise ValueError(f"clause must be 'A' or 'B', got {clause!r}")
    rhs = 2 * (_binet_term(_J, k, n) + coef * _binet_term(_J, k, n - 1))
    return _report(id_, k, [("n", n)], form, lhs, rhs)


def check_sum(k: int, n: int, kind: SequenceKind, form: Form = Form.CORRECTED) -> IdentityReport:
    """Partial sum against its closed form divided by 2(k-1).

    An inexact division is reported as a failing check with a Fraction rhs.
    """
    _validate(k, n=n)
    lhs = prefix_sum(SequenceParams(kind, k), n)
    top = k * _binet_term(kind, k, n) + _binet_term(kind, k, n + 1)
    top += -1 if kind is _J else 2 * (k - 3)
    q, rem = divmod(top, 2 * (k - 1))
    rhs: Value = q if rem == 0 else Fraction(top, 2 * (k - 1))
    id_ = IdentityId.SUM_J if kind is _J else IdentityId.SUM_LUCAS
    return _report(id_, k, [("n", n)], form, lhs, rhs)


def check_column_vector(k: int, n: int, form: Form = Form.CORRECTED) -> IdentityReport:
    """F_k (j(n), j(n-1))^T = (j(n+1), j(n))^T."""
    _validate(k, n=n)
    if n < 1:
        raise ValueError(f"column-vector relation requires n >= 1, got {n}")
    f = f_matrix(k)
    cur, prev = _iter_term(_L, k, n), _iter_term(_L, k, n - 1)
    lhs = (f.a * cur + f.b * prev, f.c * cur + f.d * prev)
    rhs = (_binet_term(_L, k, n + 1), _binet_term(_L, k, n))
    return _report(IdentityId.COLUMN_VECTOR, k, [("n", n)], form, lhs, rhs)


def check_commutation(k: int, form: Form = Form.CORRECTED) -> IdentityReport:
    """R_k F_k = F_k R_k, compared entry by entry."""
    _validate(k)
    f, r = f_matrix(k), r_matrix(k)
    lhs = mat_mul(r, f).entries()
    rhs = mat_mul(f, r).entries()
    return _report(IdentityId.COMMUTATION, k, [], form, lhs, rhs)


# -- registry -----------------------------------------------------------------

def _pairs_le(bound: int, low_outer: int = 0) -> Iterator[tuple[int, int]]:
    for a in range(low_outer, bound + 1):
        for b in range(0, a + 1):
            yield a, b


@dataclass(frozen=True)
class IdentitySpec:
    id: IdentityId
    index_names: tuple[str, ...]
    stated_domain: str
    domain: Callable[[int], Iterable[tuple[int, ...]]]
    check: Callable[..., IdentityReport]

    @property
    def has_erratum(self) -> bool:
        return self.id in ERRATA


def _spec(id_, names, stated, domain, check) -> IdentitySpec:
    return IdentitySpec(id_, names, stated, domain, check)


IDENTITIES: dict[IdentityId, IdentitySpec] = {
    s.id: s
    for s in [
        _spec(IdentityId.CATALAN_J, ("n", "r"), "unstated (result only in proof)",
              lambda b: _pairs_le(b),
              lambda k, f, n, r: check_catalan_j(k, n, r, f)),
        _spec(IdentityId.CATALAN_LUCAS, ("n", "r"), "unstated (result only in proof)",
              lambda b: _pairs_le(b),
              lambda k, f, n, r: check_catalan_lucas(k, n, r, f)),
        _spec(IdentityId.CASSINI_J, ("n",), "n >= 2",
              lambda b: ((n,) for n in range(1, b + 1)),
              lambda k, f, n: check_cassini_j(k, n, f)),
        _spec(IdentityId.CASSINI_LUCAS, ("n",), "n >= 2",
              lambda b: ((n,) for n in range(1, b + 1)),
              lambda k, f, n: check_cassini_lucas(k, n, f)),
        _spec(IdentityId.DOCAGNE_J, ("n", "m"), "n >= m",
              lambda b: _pairs_le(b),
              lambda k, f, n, m: check_docagne_j(k, n, m, f)),
        _spec(IdentityId.DOCAGNE_LUCAS, ("n", "m"), "n >= m",
              lambda b: _pairs_le(b),
              lambda k, f, n, m: check_docagne_lucas(k, n, m, f)),
        _spec(IdentityId.CONVOLUTION_J, ("m", "n"), "m, n >= 2",
              lambda b: ((m, n) for m in range(1, b + 1) for n in range(1, b + 1)),
              lambda k, f, m, n: check_convolution_j(k, m, n, f)),
        _spec(IdentityId.CONVOLUTION_LUCAS, ("m", "n"), "m, n >= 2",
              lambda b: ((m, n) for m in range(1, b + 1) for n in range(0, b + 1)),
              lambda k, f, m, n: check_convolution_lucas(k, m, n, f)),
        _spec(IdentityId.INTERTERMS_A, ("n",), "n >= 1",
              lambda b: ((n,) for n in range(1, b + 1)),
              lambda k, f, n: check_interterms(k, n, "A", f)),
        _spec(IdentityId.INTERTERMS_B, ("n",), "n >= 1",
              lambda b: ((n,) for n in range(1, b + 1)),
              lambda k, f, n: check_interterms(k, n, "B", f)),
        _spec(IdentityId.SUM_J, ("n",), "n >= 0",
              lambda b: ((n,) for n in range(0, b + 1)),
              lambda k, f, n: check_sum(k, n, _J, f)),
        _spec(IdentityId.SUM_LUCAS, ("n",), "n >= 0",
              lambda b: ((n,) for n in range(0, b + 1)),
              lambda k, f, n: check_sum(k, n, _L, f)),
        _spec(IdentityId.COLUMN_VECTOR, ("n",), "n >= 1",
              lambda b: ((n,) for n in range(1, b + 1)),
              lambda k, f, n: check_column_vector(k, n, f)),
        _spec(IdentityId.COMMUTATION, (), "none",
              lambda b: [()],
              lambda k, f: check_commutation(k, f)),
    ]
}


# -- sweeps -------------------------------------------------------------------

@dataclass
class SweepEntry:
    id: IdentityId
    form: Form
    checks: int = 0
    failures: list[IdentityReport] = field(default_factory=list)

    @property
    def first_counterexample(self) -> IdentityReport | None:
        return self.failures[0] if self.failures else None

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class SweepReport:
    ids: tuple[IdentityId, ...]
    k_values: tuple[int, ...]
    index_bound: int
    forms: tuple[Form, ...]
    entries: list[SweepEntry] = field(default_factory=list)

    @property
    def checks(self) -> int:
        return sum(e.checks for e in self.entries)

    @property
    def failures(self) -> list[IdentityReport]:
        return [f for e in self.entries for f in e.failures]

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def entry(self, id_: IdentityId, form: Form) -> SweepEntry:
        for e in self.entries:
            if e.id is id_ and e.form is form:
                return e
        raise KeyError((id_, form))


def run_identity(id_: IdentityId, k: int, form: Form, indices: Sequence[int]) -> IdentityReport:
    return IDENTITIES[id_].check(k, form, *indices)


def sweep(
    ids: Iterable[IdentityId],
    k_range: Iterable[int],
    index_bound: int,
    forms: Iterable[Form] = (Form.CORRECTED,),
) -> SweepReport:
    """Check every instance of the (identity, form, k, indices) grid.

    Order is fixed: identities and forms in declaration order, then
    ascending k, then index tuples in lexicographic order, so the first
    counterexample of each entry is reproducible.
    """
    id_order = list(IdentityId)
    ids = sorted(set(ids), key=id_order.index)
    form_order = list(Form)
    forms = sorted(set(forms), key=form_order.index)
    k_values = tuple(sorted(set(k_range)))
    if not ids or not forms or not k_values:
        raise ValueError("sweep needs at least one identity, form and k")
    if index_bound < 0:
        raise ValueError(f"index bound must be >= 0, got {index_bound}")

    report = SweepReport(tuple(ids), k_values, index_bound, tuple(forms))
    for id_ in ids:
        spec = IDENTITIES[id_]
        for form in forms:
            entry = SweepEntry(id_, form)
            for k in k_values:
                for idx in sorted(spec.domain(index_bound)):
                    res = spec.check(k, form, *idx)
                    entry.checks += 1
                    if not res.passed:
                        entry.failures.append(res)
            report.entries.append(entry)
    return report
