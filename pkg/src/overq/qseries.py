"""Truncated formal power series with exact integer coefficients.

Everything here is a polynomial in q modulo q^(N+1).  Coefficients are
Python ints, so values like the overpartition counts can grow without
overflow.  A parallel float-coefficient series exists for the one weight
sequence (von Mangoldt) that is not integer valued.

The module also provides the concrete q-series this project needs:
Euler products (q;q)_inf and (-q;q)_inf, the Gauss theta series and its
truncations, generalized Lambert series, and the generating function for
the M-bar overpartition statistic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

__all__ = [
    "TruncatedSeries",
    "FloatSeries",
    "TruncationMismatchError",
    "NonUnitConstantError",
    "euler_product",
    "gauss_theta",
    "overpartition_gf",
    "lambert_series",
    "mbar_gf",
    "float_series_close",
]


class TruncationMismatchError(ValueError):
    """Arithmetic between series truncated at different orders."""


class NonUnitConstantError(ValueError):
    """Inversion of a series whose constant term is not a unit."""


def _check_same_order(s, t) -> None:
    if s.trunc_order != t.trunc_order:
        raise TruncationMismatchError(
            f"truncation orders differ: {s.trunc_order} != {t.trunc_order}"
        )


def _cauchy(a: Sequence, b: Sequence, zero):
    n = len(a)
    out = [zero] * n
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j in range(n - i):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def _invert_coeffs(a: Sequence, zero):
    # forward recurrence: sum_{i<=n} a[i] * b[n-i] = [n == 0]
    c0 = a[0]
    b = [zero] * len(a)
    b[0] = 1 // c0 if isinstance(c0, int) else 1.0 / c0
    for n in range(1, len(a)):
        acc = zero
        for i in range(1, n + 1):
            ai = a[i]
            if ai:
                acc += ai * b[n - i]
        b[n] = -acc * b[0] if not isinstance(c0, int) else -acc // c0
    return b


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series sum c_i q^i known exactly modulo q^(N+1)."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant term")

    @property
    def trunc_order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls((0,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls((1,) + (0,) * order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: int = 1) -> "TruncatedSeries":
        c = [0] * (order + 1)
        if 0 <= exponent <= order:
            c[exponent] = coeff
        return cls(tuple(c))

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        _check_same_order(self, other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        _check_same_order(self, other)
        return TruncatedSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        _check_same_order(self, other)
        return TruncatedSeries(tuple(_cauchy(self.coeffs, other.coeffs, 0)))

    def scale(self, c: int) -> "TruncatedSeries":
        return TruncatedSeries(tuple(c * a for a in self.coeffs))

    def invert(self) -> "TruncatedSeries":
        if self.coeffs[0] not in (1, -1):
            raise NonUnitConstantError(
                f"constant term {self.coeffs[0]} is not invertible over the integers"
            )
        return TruncatedSeries(tuple(_invert_coeffs(self.coeffs, 0)))

    def to_float(self) -> "FloatSeries":
        return FloatSeries(tuple(float(a) for a in self.coeffs))


@dataclass(frozen=True)
class FloatSeries:
    """Float-coefficient twin of TruncatedSeries, used for the von
    Mangoldt weight sequence only."""

    coeffs: tuple[float, ...]

    @property
    def trunc_order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> "FloatSeries":
        return cls((0.0,) * (order + 1))

    def __getitem__(self, i: int) -> float:
        return self.coeffs[i]

    def __add__(self, other: "FloatSeries") -> "FloatSeries":
        _check_same_order(self, other)
        return FloatSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FloatSeries") -> "FloatSeries":
        _check_same_order(self, other)
        return FloatSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "FloatSeries") -> "FloatSeries":
        _check_same_order(self, other)
        return FloatSeries(tuple(_cauchy(self.coeffs, other.coeffs, 0.0)))


def float_series_close(s: FloatSeries, t: FloatSeries,
                       rel: float = 1e-9, floor: float = 1e-12) -> bool:
    """Coefficient-wise closeness with relative tolerance and an absolute
    floor (coefficients grow fast, so a pure absolute tolerance is useless)."""
    _check_same_order(s, t)
    return all(
        math.isclose(a, b, rel_tol=rel, abs_tol=floor)
        for a, b in zip(s.coeffs, t.coeffs)
    )


def _apply_factor(c: list, exponent: int, sign: int) -> None:
    # multiply in place by (1 + sign * q^exponent), truncating
    for i in range(len(c) - 1, exponent - 1, -1):
        if c[i - exponent]:
            c[i] += sign * c[i - exponent]


def euler_product(sign: int, order: int) -> TruncatedSeries:
    """Product over j >= 1 of (1 + sign * q^j), truncated at `order`.

    sign=-1 gives (q;q)_inf, sign=+1 gives (-q;q)_inf.  Factors with
    j > order contribute 1 modulo q^(order+1) and are dropped.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if order < 0:
        raise ValueError("order must be nonnegative")
    c = [0] * (order + 1)
    c[0] = 1
    for j in range(1, order + 1):
        _apply_factor(c, j, sign)
    return TruncatedSeries(tuple(c))


def finite_pochhammer(sign: int, count: int, order: int) -> TruncatedSeries:
    """Product over j = 1..count of (1 + sign * q^j), truncated."""
    c = [0] * (order + 1)
    c[0] = 1
    for j in range(1, min(count, order) + 1):
        _apply_factor(c, j, sign)
    return TruncatedSeries(tuple(c))


@lru_cache(maxsize=None)
def _pochhammer_from(start: int, sign: int, order: int) -> TruncatedSeries:
    # product over e >= start of (1 + sign * q^e), truncated
    c = [0] * (order + 1)
    c[0] = 1
    for e in range(start, order + 1):
        _apply_factor(c, e, sign)
    return TruncatedSeries(tuple(c))


@lru_cache(maxsize=None)
def _inv_pochhammer_from(start: int, order: int) -> TruncatedSeries:
    # 1 / product over e >= start of (1 - q^e)
    return _pochhammer_from(start, -1, order).invert()


def gauss_theta(order: int, k_max: int | None = None) -> TruncatedSeries:
    """1 + 2 * sum over n >= 1 of (-1)^n q^(n^2), truncated at `order`.

    A finite k_max keeps only the first k_max terms of the sum, giving the
    truncated theta factor; k_max=None keeps every term with n^2 <= order.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    c = [0] * (order + 1)
    c[0] = 1
    n = 1
    while n * n <= order and (k_max is None or n <= k_max):
        c[n * n] = 2 * (-1) ** n
        n += 1
    return TruncatedSeries(tuple(c))


@lru_cache(maxsize=None)
def overpartition_gf(order: int) -> TruncatedSeries:
    """(-q;q)_inf / (q;q)_inf: coefficient of q^n is the overpartition count."""
    return euler_product(1, order) * euler_product(-1, order).invert()


def lambert_series(a: Callable[[int], int | float], alpha: int, beta: int,
                   order: int) -> TruncatedSeries | FloatSeries:
    """Sum over n >= 1 of a(n) * q^e / (1 - q^e) with e = alpha*n - beta.

    The coefficient of q^m is the divisor sum B(a, alpha, beta; m).  Returns
    a FloatSeries when the weight sequence declares a float domain.
    """
    if not (0 <= beta < alpha):
        raise ValueError("need 0 <= beta < alpha")
    is_float = getattr(a, "domain", "int") == "float"
    c = [0.0] * (order + 1) if is_float else [0] * (order + 1)
    n = 1
    while alpha * n - beta <= order:
        e = alpha * n - beta
        an = a(n)
        if an:
            for m in range(e, order + 1, e):
                c[m] += an
        n += 1
    return FloatSeries(tuple(c)) if is_float else TruncatedSeries(tuple(c))


def mbar_gf(k: int, order: int) -> TruncatedSeries:
    """Generating function for the count of overpartitions whose smallest
    part exceeding k appears at least k+1 times (overlined occurrences
    counted toward the multiplicity).

    2 (-q;q)_k / (q;q)_k * sum over j >= 0 of
        q^((k+1)(k+j+1)) (-q^(k+j+2);q)_inf
        / ((1 - q^(k+j+1)) (q^(k+j+2);q)_inf),
    with the sum cut off once (k+1)(k+j+1) exceeds the order.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if order < 0:
        raise ValueError("order must be nonnegative")
    total = TruncatedSeries.zero(order)
    j = 0
    while (k + 1) * (k + j + 1) <= order:
        p = k + j + 1
        # 1 / ((1 - q^p)(q^(p+1);q)_inf) = 1 / (q^p;q)_inf
        term = TruncatedSeries.monomial((k + 1) * p, order)
        term = term * _pochhammer_from(p + 1, 1, order)
        term = term * _inv_pochhammer_from(p, order)
        total = total + term
        j += 1
    prefix = finite_pochhammer(1, k, order) * finite_pochhammer(-1, k, order).invert()
    return (prefix * total).scale(2)
