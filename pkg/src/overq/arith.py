"""Sieve-backed arithmetic functions and direct divisor sums.

This module knows nothing about series or overpartitions, so it can act
as an independent oracle for the Lambert-series coefficients: the divisor
sum B(a, alpha, beta; n) is computed here by enumerating divisors of n
from a smallest-prime-factor sieve.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from typing import Callable

__all__ = [
    "Sieve",
    "ModulusParams",
    "ArithmeticSequence",
    "sequence",
    "eval_sequence",
    "divisor_sum_B",
    "alt_abs_mu_divisor_sum",
    "SEQUENCE_NAMES",
]


class Sieve:
    """Smallest-prime-factor table for n up to a fixed limit."""

    def __init__(self, limit: int):
        if limit < 1:
            raise ValueError("limit must be at least 1")
        self.limit = limit
        spf = list(range(limit + 1))
        for i in range(2, math.isqrt(limit) + 1):
            if spf[i] == i:
                for j in range(i * i, limit + 1, i):
                    if spf[j] == j:
                        spf[j] = i
        self._spf = spf

    def smallest_prime_factor(self, n: int) -> int:
        if not 2 <= n <= self.limit:
            raise ValueError(f"{n} outside sieve range [2, {self.limit}]")
        return self._spf[n]

    def factor(self, n: int) -> list[tuple[int, int]]:
        """Prime factorization as (prime, exponent) pairs, primes ascending."""
        if not 1 <= n <= self.limit:
            raise ValueError(f"{n} outside sieve range [1, {self.limit}]")
        out = []
        while n > 1:
            p = self._spf[n]
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        return out

    def divisors(self, n: int) -> list[int]:
        """All positive divisors of n, ascending."""
        divs = [1]
        for p, e in self.factor(n):
            divs = [d * p**i for d in divs for i in range(e + 1)]
        return sorted(divs)

    def is_prime(self, n: int) -> bool:
        return n >= 2 and self._spf[n] == n


_sieve_lock = threading.Lock()
_sieve = Sieve(1000)


def shared_sieve(limit: int = 0) -> Sieve:
    """Process-wide sieve, grown (with doubling) to cover `limit`."""
    global _sieve
    if limit > _sieve.limit:
        with _sieve_lock:
            if limit > _sieve.limit:
                _sieve = Sieve(max(limit, 2 * _sieve.limit))
    return _sieve


@dataclass(frozen=True)
class ModulusParams:
    """Residue-class parameters (alpha, beta) with 0 <= beta < alpha."""

    alpha: int
    beta: int

    def __post_init__(self):
        if not (self.alpha >= 1 and 0 <= self.beta < self.alpha):
            raise ValueError(f"need 0 <= beta < alpha, got ({self.alpha}, {self.beta})")


@dataclass
class ArithmeticSequence:
    """Named, memoized sequence n -> a_n over ints or floats."""

    name: str
    domain: str  # "int" or "float"
    fn: Callable[[int], int | float]
    _memo: dict = field(default_factory=dict, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def __call__(self, n: int):
        if n < 1:
            raise ValueError("sequences are indexed from 1")
        v = self._memo.get(n)
        if v is None:
            v = self.fn(n)
            with self._lock:
                self._memo[n] = v
        return v


def _mu(n: int) -> int:
    f = shared_sieve(n).factor(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def _phi(n: int) -> int:
    out = 1
    for p, e in shared_sieve(n).factor(n):
        out *= p ** (e - 1) * (p - 1)
    return out


def _omega(n: int) -> int:
    return len(shared_sieve(n).factor(n))


def _liouville(n: int) -> int:
    return -1 if sum(e for _, e in shared_sieve(n).factor(n)) % 2 else 1


def _mangoldt(n: int) -> float:
    f = shared_sieve(n).factor(n)
    return math.log(f[0][0]) if len(f) == 1 else 0.0


def _sigma(t: int, n: int) -> int:
    out = 1
    for p, e in shared_sieve(n).factor(n):
        if t == 0:
            out *= e + 1
        else:
            out *= (p ** (t * (e + 1)) - 1) // (p**t - 1)
    return out


def _jordan(t: int, n: int) -> int:
    out = 1
    for p, e in shared_sieve(n).factor(n):
        out *= p ** (t * e) - p ** (t * (e - 1))
    return out


def _sigma0_sq(n: int) -> int:
    # number of divisors of n^2
    out = 1
    for _, e in shared_sieve(n).factor(n):
        out *= 2 * e + 1
    return out


_MAX_T = 8

_FIXED: dict[str, tuple[str, Callable[[int], int | float]]] = {
    "one": ("int", lambda n: 1),
    "zero": ("int", lambda n: 0),
    "id": ("int", lambda n: n),
    "mu": ("int", _mu),
    "abs_mu": ("int", lambda n: abs(_mu(n))),
    "alt_abs_mu": ("int", lambda n: (-1) ** (n + 1) * abs(_mu(n))),
    "phi": ("int", _phi),
    "lambda": ("int", _liouville),
    "mangoldt": ("float", _mangoldt),
    "omega": ("int", _omega),
    "two_pow_omega": ("int", lambda n: 2 ** _omega(n)),
    "chi": ("int", lambda n: int(shared_sieve(n).is_prime(n))),
    "n_chi": ("int", lambda n: n if shared_sieve(n).is_prime(n) else 0),
    "sigma0_sq": ("int", _sigma0_sq),
}

SEQUENCE_NAMES = sorted(_FIXED) + [f"sigma_{t}" for t in range(_MAX_T + 1)] + [
    f"jordan_{t}" for t in range(1, _MAX_T + 1)
]

_registry: dict[str, ArithmeticSequence] = {}


def sequence(name: str) -> ArithmeticSequence:
    """Look up a weight sequence by name.

    Fixed names are listed in SEQUENCE_NAMES; sigma_t and jordan_t take the
    exponent t (0..8, resp. 1..8) as part of the name.
    """
    seq = _registry.get(name)
    if seq is not None:
        return seq
    if name in _FIXED:
        domain, fn = _FIXED[name]
        seq = ArithmeticSequence(name, domain, fn)
    elif name.startswith("sigma_") or name.startswith("jordan_"):
        kind, _, t_str = name.partition("_")
        try:
            t = int(t_str)
        except ValueError:
            raise ValueError(f"unknown sequence name: {name!r}") from None
        if not (0 <= t <= _MAX_T) or (kind == "jordan" and t == 0):
            raise ValueError(f"parameter t out of range in {name!r} (t <= {_MAX_T})")
        fn = (lambda n, t=t: _sigma(t, n)) if kind == "sigma" else (
            lambda n, t=t: _jordan(t, n))
        seq = ArithmeticSequence(name, "int", fn)
    else:
        raise ValueError(f"unknown sequence name: {name!r}")
    _registry[name] = seq
    return seq


def eval_sequence(name: str, n: int):
    return sequence(name)(n)


def divisor_sum_B(a: ArithmeticSequence | Callable[[int], int | float],
                  params: ModulusParams, n: int):
    """Sum of a(d) over d >= 1 such that alpha*d - beta divides n.

    Equivalently the sum runs over divisors e of n with e = -beta mod alpha
    (and e >= alpha - beta so that d is positive).
    """
    if n < 1:
        raise ValueError("n must be positive")
    alpha, beta = params.alpha, params.beta
    is_float = getattr(a, "domain", "int") == "float"
    total = 0.0 if is_float else 0
    for e in shared_sieve(n).divisors(n):
        if (e + beta) % alpha == 0:
            d = (e + beta) // alpha
            if d >= 1:
                total += a(d)
    return total


def alt_abs_mu_divisor_sum(n: int) -> int:
    """Sum over divisors d of n of (-1)^(1+d) |mu(d)|.

    Equals 2^omega(n) for odd n and 0 for even n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    total = 0
    for d in shared_sieve(n).divisors(n):
        total += (-1) ** (1 + d) * abs(_mu(d))
    return total
