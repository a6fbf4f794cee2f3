"""Overpartition statistics with two independent routes each.

An overpartition is a partition where the first occurrence of a part of
each size may be overlined.  Every statistic here (the count pbar(n), the
non-overlined part counts S(k, n), the weighted sums A(a, alpha, beta; n),
the M-bar counts, and the distinct non-overlined part sum) is available
both from exhaustive enumeration and from series or convolution formulas,
so each route can serve as the other's oracle.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .arith import ArithmeticSequence, ModulusParams, divisor_sum_B
from . import qseries

__all__ = [
    "Overpartition",
    "enumerate_overpartitions",
    "pbar",
    "pbar_from_gf",
    "s_count",
    "s_row",
    "a_stat",
    "mbar",
    "distinct_nonoverlined_sum",
    "ENUMERATION_CAP",
]

# enumeration is exponential; the CLI refuses larger n
ENUMERATION_CAP = 40


@dataclass(frozen=True)
class Overpartition:
    """Parts as (size, overlined) pairs, sizes nonincreasing, and within a
    size the overlined copy (at most one per size) listed first."""

    parts: tuple[tuple[int, bool], ...]

    def __post_init__(self):
        sizes = [s for s, _ in self.parts]
        if sizes != sorted(sizes, reverse=True):
            raise ValueError("parts must be sorted by nonincreasing size")
        seen_overlined = set()
        prev = None
        for s, over in self.parts:
            if over:
                if s in seen_overlined:
                    raise ValueError(f"size {s} overlined more than once")
                if prev == s:
                    raise ValueError("overlined part must come first within its size")
                seen_overlined.add(s)
            prev = s

    @property
    def total(self) -> int:
        return sum(s for s, _ in self.parts)

    def render(self) -> str:
        """Plain-text form, overlines as a trailing asterisk: '3* 3 2 1*'."""
        if not self.parts:
            return "()"
        return " ".join(f"{s}*" if over else str(s) for s, over in self.parts)


def _partitions_revlex(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    # nonincreasing partitions of n with parts <= largest, reverse
    # lexicographic order (largest first part first)
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_revlex(n - first, first):
            yield (first,) + rest


def enumerate_overpartitions(n: int) -> Iterator[Overpartition]:
    """Yield every overpartition of n exactly once.

    Underlying partitions come in reverse lexicographic order; for each, the
    subsets of distinct sizes to overline are run through in binary-counter
    order (low bit = largest distinct size).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    for partition in _partitions_revlex(n, n):
        distinct = sorted(set(partition), reverse=True)
        for mask in range(1 << len(distinct)):
            overlined = {d for i, d in enumerate(distinct) if mask >> i & 1}
            parts = []
            for d in sorted(set(partition), reverse=True):
                mult = partition.count(d)
                if d in overlined:
                    parts.append((d, True))
                    mult -= 1
                parts.extend((d, False) for _ in range(mult))
            yield Overpartition(tuple(parts))


_pbar_memo: dict[int, int] = {0: 1}
_pbar_lock = threading.Lock()


def pbar(n: int) -> int:
    """Number of overpartitions of n, via the memoized linear recurrence
    pbar(n) = [n == 0] - 2 * sum_{j >= 1} (-1)^j pbar(n - j^2)."""
    if n < 0:
        return 0
    v = _pbar_memo.get(n)
    if v is not None:
        return v
    with _pbar_lock:
        top = max(_pbar_memo) + 1
        for m in range(top, n + 1):
            acc = 0
            j = 1
            while j * j <= m:
                acc += (-1) ** j * _pbar_memo[m - j * j]
                j += 1
            _pbar_memo[m] = -2 * acc
    return _pbar_memo[n]


def pbar_from_gf(n_max: int) -> list[int]:
    """pbar(0..n_max) read off the product generating function
    (-q;q)_inf / (q;q)_inf; independent of the recurrence route."""
    return list(qseries.overpartition_gf(n_max).coeffs[: n_max + 1])


@lru_cache(maxsize=None)
def _s_row_enumerated(n: int) -> tuple[int, ...]:
    # S(k, n) for k = 1..n by a single enumeration pass
    counts = [0] * (n + 1)
    for op in enumerate_overpartitions(n):
        for size, over in op.parts:
            if not over:
                counts[size] += 1
    return tuple(counts[1:])


def s_count(k: int, n: int, method: str = "series") -> int:
    """Total number of non-overlined parts equal to k in all the
    overpartitions of n."""
    if k < 1:
        raise ValueError("k must be positive")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if method == "series":
        # coefficient of q^n in q^k/(1-q^k) * overpartition gf
        return sum(pbar(n - i) for i in range(k, n + 1, k))
    if method == "enumerate":
        row = _s_row_enumerated(n)
        return row[k - 1] if k <= n else 0
    raise ValueError(f"unknown method: {method!r}")


def s_row(n: int, method: str = "series") -> list[int]:
    """S(k, n) for k = 1..n."""
    if method == "enumerate":
        return list(_s_row_enumerated(n))
    return [s_count(k, n, method) for k in range(1, n + 1)]


def a_stat(a: ArithmeticSequence, params: ModulusParams, n: int,
           method: str = "direct"):
    """Weighted part count A(a, alpha, beta; n) =
    sum_k S(alpha*k - beta, n) * a_k.

    Methods: 'direct' sums S-values (series route), 'enumerate' likewise but
    with enumeration-backed S, 'gf' extracts a coefficient of the product of
    the overpartition generating function with the Lambert series, and
    'convolution' uses sum_k B(a, alpha, beta; k) * pbar(n - k).
    Negative (and zero) n give 0.
    """
    is_float = getattr(a, "domain", "int") == "float"
    zero = 0.0 if is_float else 0
    if n <= 0:
        return zero
    alpha, beta = params.alpha, params.beta
    if method in ("direct", "enumerate"):
        s_method = "enumerate" if method == "enumerate" else "series"
        total = zero
        k = 1
        while alpha * k - beta <= n:
            total += s_count(alpha * k - beta, n, s_method) * a(k)
            k += 1
        return total
    if method == "gf":
        ls = qseries.lambert_series(a, alpha, beta, n)
        gf = qseries.overpartition_gf(n)
        if is_float:
            gf = gf.to_float()
        return (gf * ls)[n]
    if method == "convolution":
        return sum(
            (divisor_sum_B(a, params, k) * pbar(n - k) for k in range(1, n + 1)),
            zero,
        )
    raise ValueError(f"unknown method: {method!r}")


def _mbar_predicate(op: Overpartition, k: int) -> bool:
    # smallest part size exceeding k appears (overlined + plain) >= k+1 times
    above = [s for s, _ in op.parts if s > k]
    if not above:
        return False
    least = min(above)
    return above.count(least) >= k + 1


def mbar(k: int, n: int, method: str = "gf") -> int:
    """Number of overpartitions of n whose smallest part larger than k
    appears at least k+1 times (overlined occurrences count)."""
    if k < 1:
        raise ValueError("k must be positive")
    if n < 0:
        return 0
    if method == "gf":
        return qseries.mbar_gf(k, n)[n]
    if method == "enumerate":
        return sum(1 for op in enumerate_overpartitions(n) if _mbar_predicate(op, k))
    raise ValueError(f"unknown method: {method!r}")


def distinct_nonoverlined_sum(n: int, method: str = "enumerate") -> int:
    """Sum, over all overpartitions of n, of the distinct sizes that occur
    at least once non-overlined.  Equals sum_j j * pbar(n - j)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if method == "enumerate":
        total = 0
        for op in enumerate_overpartitions(n):
            total += sum({s for s, over in op.parts if not over})
        return total
    if method == "convolution":
        return sum(j * pbar(n - j) for j in range(1, n + 1))
    raise ValueError(f"unknown method: {method!r}")
