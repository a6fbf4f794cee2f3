"""Numerical checkers, one per identity.

Each checker computes the two sides of its identity through disjoint code
paths (series extraction vs divisor sums vs enumeration-backed counts) and
records every compared pair, so a report doubles as a machine-readable
audit trail.  Integer-domain comparisons are exact; the single float-domain
weight sequence (von Mangoldt) is compared with a relative tolerance.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from functools import lru_cache

from . import qseries
from .arith import ModulusParams, divisor_sum_B, sequence
from .overpartitions import a_stat, pbar, pbar_from_gf, s_count

__all__ = [
    "CheckRow",
    "IdentityReport",
    "IDENTITY_IDS",
    "check_rec",
    "check_th2",
    "check_c3",
    "check_th1",
    "check_mu_decomposition",
    "check_gauss",
    "check_eq4",
    "check_phi_suite",
    "check_prime_suite",
    "check_squarefree_suite",
    "run_identity",
]

FLOAT_REL_TOL = 1e-9
FLOAT_ABS_FLOOR = 1e-12


def values_equal(lhs, rhs, scale: float = 0.0) -> bool:
    """Exact comparison for ints; for floats the relative tolerance is
    taken against the magnitude of the terms that entered the computation
    (`scale`), since both sides may cancel to nearly zero."""
    if isinstance(lhs, float) or isinstance(rhs, float):
        scale = max(scale, abs(lhs), abs(rhs))
        return abs(lhs - rhs) <= max(FLOAT_REL_TOL * scale, FLOAT_ABS_FLOOR)
    return lhs == rhs


@dataclass(frozen=True)
class CheckRow:
    n: int
    lhs: int | float
    rhs: int | float
    ok: bool
    tag: str = ""


@dataclass
class IdentityReport:
    identity_id: str
    params: dict
    n_range: tuple[int, int]
    rows: list[CheckRow] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def violations(self) -> list[CheckRow]:
        return [r for r in self.rows if not r.ok]

    @property
    def passed(self) -> bool:
        return not self.violations


class _Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


@lru_cache(maxsize=None)
def _a_values(seq_name: str, alpha: int, beta: int, n_max: int) -> tuple:
    seq = sequence(seq_name)
    params = ModulusParams(alpha, beta)
    return tuple(a_stat(seq, params, n, "direct") for n in range(n_max + 1))


@lru_cache(maxsize=None)
def _b_values(seq_name: str, alpha: int, beta: int, n_max: int) -> tuple:
    seq = sequence(seq_name)
    params = ModulusParams(alpha, beta)
    zero = 0.0 if seq.domain == "float" else 0
    return (zero,) + tuple(divisor_sum_B(seq, params, n) for n in range(1, n_max + 1))


def _alternating_tail(values, n: int, k_cap: int | None):
    """2 * sum_{j >= 1} (-1)^j values[n - j^2], j <= k_cap (None = all j)."""
    acc = values[0] * 0  # typed zero
    j = 1
    while j * j <= n and (k_cap is None or j <= k_cap):
        acc += (-1) ** j * values[n - j * j]
        j += 1
    return 2 * acc


def check_rec(n_max: int) -> IdentityReport:
    """pbar(n) + 2 sum (-1)^j pbar(n - j^2) = [n == 0], with pbar taken
    from the product generating function rather than the recurrence."""
    with _Timer() as t:
        p = pbar_from_gf(n_max)
        rows = []
        for n in range(n_max + 1):
            lhs = p[n] + _alternating_tail(p, n, None)
            rhs = 1 if n == 0 else 0
            rows.append(CheckRow(n, lhs, rhs, lhs == rhs))
    return IdentityReport("rec", {}, (0, n_max), rows, elapsed=t.elapsed)


def _th2_sides(seq_name: str, params: ModulusParams, k: int, n_max: int):
    a_vals = _a_values(seq_name, params.alpha, params.beta, n_max)
    b_vals = _b_values(seq_name, params.alpha, params.beta, n_max)
    m_coeffs = qseries.mbar_gf(k, n_max).coeffs
    sign = (-1) ** k
    for n in range(1, n_max + 1):
        lhs = sign * (a_vals[n] + _alternating_tail(a_vals, n, k) - b_vals[n])
        rhs = sum(b_vals[j] * m_coeffs[n - j] for j in range(1, n + 1))
        scale = abs(a_vals[n]) + abs(b_vals[n])
        yield n, lhs, rhs, scale


def check_th2(seq_name: str, params: ModulusParams, k: int,
              n_max: int) -> IdentityReport:
    """Main identity: (-1)^k (A(n) + 2 sum_{j<=k} (-1)^j A(n - j^2) - B(n))
    equals the convolution of B with the M-bar counts."""
    with _Timer() as t:
        rows = [
            CheckRow(n, lhs, rhs, values_equal(lhs, rhs, scale))
            for n, lhs, rhs, scale in _th2_sides(seq_name, params, k, n_max)
        ]
    p = {"seq": seq_name, "alpha": params.alpha, "beta": params.beta, "k": k}
    return IdentityReport("th2", p, (1, n_max), rows, elapsed=t.elapsed)


def check_c3(seq_name: str, params: ModulusParams, k: int,
             n_max: int) -> IdentityReport:
    """Sign family: for nonnegative weights the th2 left side is >= 0, and
    strictly positive for n >= (k+1)^2 whenever the right-side convolution
    is nonzero.  Rows compare the left side against 0."""
    with _Timer() as t:
        rows = []
        notes = []
        threshold = (k + 1) ** 2
        for n, lhs, rhs, _scale in _th2_sides(seq_name, params, k, n_max):
            must_be_strict = n >= threshold and rhs != 0
            ok = lhs > 0 if must_be_strict else lhs >= 0
            rows.append(CheckRow(n, lhs, 0, ok))
            if n >= threshold and rhs == 0:
                notes.append(f"n={n}: rhs convolution vanishes, strictness not required")
    p = {"seq": seq_name, "alpha": params.alpha, "beta": params.beta, "k": k}
    return IdentityReport("c3", p, (1, n_max), rows, notes, t.elapsed)


def check_th1(seq_name: str, params: ModulusParams, n_max: int) -> IdentityReport:
    """Limit form: A(n) + 2 sum_{j >= 1} (-1)^j A(n - j^2) = B(n)."""
    with _Timer() as t:
        a_vals = _a_values(seq_name, params.alpha, params.beta, n_max)
        b_vals = _b_values(seq_name, params.alpha, params.beta, n_max)
        rows = []
        for n in range(1, n_max + 1):
            lhs = a_vals[n] + _alternating_tail(a_vals, n, None)
            rhs = b_vals[n]
            scale = abs(a_vals[n]) + abs(b_vals[n])
            rows.append(CheckRow(n, lhs, rhs, values_equal(lhs, rhs, scale)))
    p = {"seq": seq_name, "alpha": params.alpha, "beta": params.beta}
    return IdentityReport("th1", p, (1, n_max), rows, elapsed=t.elapsed)


def check_mu_decomposition(n_max: int) -> IdentityReport:
    """pbar(n) = sum_{k=1..n+1} S(k, n+1) mu(k), with pbar from the
    recurrence and S from the series route."""
    mu = sequence("mu")
    with _Timer() as t:
        rows = []
        for n in range(n_max + 1):
            lhs = pbar(n)
            rhs = sum(s_count(k, n + 1) * mu(k) for k in range(1, n + 2))
            rows.append(CheckRow(n, lhs, rhs, lhs == rhs))
    return IdentityReport("mu_decomp", {}, (0, n_max), rows, elapsed=t.elapsed)


def check_gauss(n_max: int) -> IdentityReport:
    """(q;q)_inf / (-q;q)_inf = 1 + 2 sum (-1)^n q^(n^2), coefficient by
    coefficient up to order n_max."""
    with _Timer() as t:
        ratio = qseries.euler_product(-1, n_max) * qseries.euler_product(1, n_max).invert()
        theta = qseries.gauss_theta(n_max)
        rows = [
            CheckRow(n, ratio[n], theta[n], ratio[n] == theta[n])
            for n in range(n_max + 1)
        ]
    return IdentityReport("gauss", {}, (0, n_max), rows, elapsed=t.elapsed)


def check_eq4(k_max: int, n_max: int) -> IdentityReport:
    """Truncated theta identity, rearranged: overpartition gf times the
    k-truncated theta, minus 1, equals (-1)^k times the M-bar gf."""
    with _Timer() as t:
        gf = qseries.overpartition_gf(n_max)
        one = qseries.TruncatedSeries.one(n_max)
        rows = []
        for k in range(1, k_max + 1):
            lhs = gf * qseries.gauss_theta(n_max, k) - one
            rhs = qseries.mbar_gf(k, n_max).scale((-1) ** k)
            for n in range(n_max + 1):
                rows.append(CheckRow(n, lhs[n], rhs[n], lhs[n] == rhs[n], tag=f"k={k}"))
    return IdentityReport("eq4", {"k_max": k_max}, (0, n_max), rows, elapsed=t.elapsed)


def check_phi_suite(k_max: int, n_max: int) -> IdentityReport:
    """Totient specialization: the distinct-non-overlined-part sum as a
    pbar convolution, its finite-k identity (right side j * M-bar), the
    limit form A + tail = n, and the parity of A."""
    with _Timer() as t:
        a_vals = _a_values("phi", 1, 0, n_max)
        p = [pbar(n) for n in range(n_max + 1)]
        rows = []
        for n in range(n_max + 1):
            rhs = sum(j * p[n - j] for j in range(1, n + 1))
            rows.append(CheckRow(n, a_vals[n], rhs, a_vals[n] == rhs, tag="cor5"))
        for k in range(1, k_max + 1):
            m_coeffs = qseries.mbar_gf(k, n_max).coeffs
            sign = (-1) ** k
            for n in range(1, n_max + 1):
                lhs = sign * (a_vals[n] + _alternating_tail(a_vals, n, k) - n)
                rhs = sum(j * m_coeffs[n - j] for j in range(1, n + 1))
                rows.append(CheckRow(n, lhs, rhs, lhs == rhs, tag=f"cor6,k={k}"))
        for n in range(1, n_max + 1):
            lhs = a_vals[n] + _alternating_tail(a_vals, n, None)
            rows.append(CheckRow(n, lhs, n, lhs == n, tag="cor7"))
            rows.append(CheckRow(n, a_vals[n] % 2, n % 2, a_vals[n] % 2 == n % 2,
                                 tag="parity"))
    return IdentityReport("phi", {"k_max": k_max}, (0, n_max), rows, elapsed=t.elapsed)


def check_prime_suite(k_max: int, n_max: int) -> IdentityReport:
    """Prime-part specialization: non-overlined prime parts as an
    omega-weighted pbar convolution, the finite-k identity, and the limit
    form recovering omega(n)."""
    omega = sequence("omega")
    with _Timer() as t:
        a_vals = _a_values("chi", 1, 0, n_max)
        p = [pbar(n) for n in range(n_max + 1)]
        w = [0] + [omega(j) for j in range(1, n_max + 1)]
        rows = []
        for n in range(n_max + 1):
            rhs = sum(w[j] * p[n - j] for j in range(2, n + 1))
            rows.append(CheckRow(n, a_vals[n], rhs, a_vals[n] == rhs, tag="cor9"))
        for k in range(1, k_max + 1):
            m_coeffs = qseries.mbar_gf(k, n_max).coeffs
            sign = (-1) ** k
            for n in range(1, n_max + 1):
                lhs = sign * (a_vals[n] + _alternating_tail(a_vals, n, k) - w[n])
                rhs = sum(w[j] * m_coeffs[n - j] for j in range(2, n + 1))
                rows.append(CheckRow(n, lhs, rhs, lhs == rhs, tag=f"cor10,k={k}"))
        for n in range(1, n_max + 1):
            lhs = a_vals[n] + _alternating_tail(a_vals, n, None)
            rows.append(CheckRow(n, lhs, w[n], lhs == w[n], tag="cor11"))
    return IdentityReport("prime", {"k_max": k_max}, (0, n_max), rows, elapsed=t.elapsed)


def check_squarefree_suite(k_max: int, n_max: int) -> IdentityReport:
    """Squarefree-part specialization: squarefree non-overlined parts as a
    2^omega-weighted convolution, the finite-k identity, the alternating
    (odd minus even squarefree parts) identities split by the parity of n,
    and the unitary-divisor form with sigma_0(n^2)."""
    two_pow = sequence("two_pow_omega")
    s0sq = sequence("sigma0_sq")
    with _Timer() as t:
        a_sf = _a_values("abs_mu", 1, 0, n_max)
        a_alt = _a_values("alt_abs_mu", 1, 0, n_max)
        a_2w = _a_values("two_pow_omega", 1, 0, n_max)
        p = [pbar(n) for n in range(n_max + 1)]
        u = [0] + [two_pow(j) for j in range(1, n_max + 1)]
        d2 = [1] + [s0sq(j) for j in range(1, n_max + 1)]
        rows = []
        for n in range(n_max + 1):
            rhs = sum(u[j] * p[n - j] for j in range(1, n + 1))
            rows.append(CheckRow(n, a_sf[n], rhs, a_sf[n] == rhs, tag="cor12"))
        for k in range(1, k_max + 1):
            m_coeffs = qseries.mbar_gf(k, n_max).coeffs
            sign = (-1) ** k
            for n in range(1, n_max + 1):
                lhs = sign * (a_sf[n] + _alternating_tail(a_sf, n, k) - u[n])
                rhs = sum(u[j] * m_coeffs[n - j] for j in range(1, n + 1))
                rows.append(CheckRow(n, lhs, rhs, lhs == rhs, tag=f"cor13,k={k}"))

                # alternating statistic: subtract 2^omega(n) only for odd n
                correction = u[n] if n % 2 else 0
                lhs = sign * (a_alt[n] + _alternating_tail(a_alt, n, k) - correction)
                rhs = sum(
                    u[2 * j - 1] * m_coeffs[n - 2 * j + 1]
                    for j in range(1, (n + 1) // 2 + 1)
                )
                tag = f"cor14,k={k}" if n % 2 else f"cor15,k={k}"
                rows.append(CheckRow(n, lhs, rhs, lhs == rhs, tag=tag))

                lhs = sign * (a_2w[n] + _alternating_tail(a_2w, n, k) - d2[n])
                rhs = sum(d2[j] * m_coeffs[n - j] for j in range(1, n + 1))
                rows.append(CheckRow(n, lhs, rhs, lhs == rhs, tag=f"cor16,k={k}"))
    return IdentityReport("squarefree", {"k_max": k_max}, (0, n_max), rows,
                          elapsed=t.elapsed)


IDENTITY_IDS = (
    "rec", "th2", "c3", "th1", "mu_decomp", "phi", "prime", "squarefree",
    "gauss", "eq4",
)


def run_identity(identity_id: str, *, seq: str = "phi", alpha: int = 1,
                 beta: int = 0, k: int = 1, k_max: int = 4,
                 n_max: int = 120) -> IdentityReport:
    """Dispatch one identity check by id; used by the CLI and the service."""
    if identity_id == "rec":
        return check_rec(n_max)
    if identity_id == "th2":
        return check_th2(seq, ModulusParams(alpha, beta), k, n_max)
    if identity_id == "c3":
        return check_c3(seq, ModulusParams(alpha, beta), k, n_max)
    if identity_id == "th1":
        return check_th1(seq, ModulusParams(alpha, beta), n_max)
    if identity_id == "mu_decomp":
        return check_mu_decomposition(n_max)
    if identity_id == "gauss":
        return check_gauss(n_max)
    if identity_id == "eq4":
        return check_eq4(k_max, n_max)
    if identity_id == "phi":
        return check_phi_suite(k_max, n_max)
    if identity_id == "prime":
        return check_prime_suite(k_max, n_max)
    if identity_id == "squarefree":
        return check_squarefree_suite(k_max, n_max)
    raise ValueError(f"unknown identity: {identity_id!r}")
