"""Exact 2x2 integer matrices for the F_k / R_k representations.

For k >= 2 and n >= 1::

    F_k   = [[k-1, k], [1, 0]]
    F_k^n = [[J(n+1), k J(n)], [J(n), k J(n-1)]]

    R_k       = [[1, k], [1, 2-k]]
    R_k F_k^n = 1/2 [[j(n+1), k j(n)], [j(n), k j(n-1)]]
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantError


@dataclass(frozen=True)
class Mat2:
    """Row-major 2x2 matrix [[a, b], [c, d]] over the integers."""

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def identity(cls) -> Mat2:
        return cls(1, 0, 0, 1)

    def __matmul__(self, other: Mat2) -> Mat2:
        return mat_mul(self, other)

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


def _check_k(k: int) -> None:
    if isinstance(k, bool) or not isinstance(k, int):
        raise TypeError(f"k must be an int, got {type(k).__name__}")
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")


def f_matrix(k: int) -> Mat2:
    _check_k(k)
    return Mat2(k - 1, k, 1, 0)


def r_matrix(k: int) -> Mat2:
    _check_k(k)
    return Mat2(1, k, 1, 2 - k)


def mat_mul(x: Mat2, y: Mat2) -> Mat2:
    return Mat2(
        x.a * y.a + x.b * y.c,
        x.a * y.b + x.b * y.d,
        x.c * y.a + x.d * y.c,
        x.c * y.b + x.d * y.d,
    )


def mat_pow(m: Mat2, e: int) -> Mat2:
    """m**e by binary exponentiation; m**0 is the identity."""
    if e < 0:
        raise ValueError(f"exponent must be >= 0, got {e}")
    result = Mat2.identity()
    while e:
        if e & 1:
            result = mat_mul(result, m)
        e >>= 1
        if e:
            m = mat_mul(m, m)
    return result


def f_power_terms(k: int, n: int) -> tuple[int, int, int]:
    """Return (J(k,n+1), J(k,n), J(k,n-1)) read off F_k^n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    p = mat_pow(f_matrix(k), n)
    if p.b != k * p.c or p.d % k:
        raise InvariantError(f"F_{k}^{n} does not have the expected shape: {p}")
    return p.a, p.c, p.d // k


def rf_power_lucas(k: int, n: int) -> tuple[int, int, int]:
    """Return (j(k,n+1), j(k,n), j(k,n-1)) from R_k * F_k^n.

    The product holds half the Lucas terms, so entries are doubled; the
    right column also carries a factor k that is divided out exactly.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    m = mat_mul(r_matrix(k), mat_pow(f_matrix(k), n))
    q, rem = divmod(2 * m.d, k)
    if rem or m.b != k * m.c:
        raise InvariantError(f"R_{k} F_{k}^{n} does not have the expected shape: {m}")
    return 2 * m.a, 2 * m.c, q


def commutes(k: int) -> bool:
    f, r = f_matrix(k), r_matrix(k)
    return mat_mul(r, f) == mat_mul(f, r)
