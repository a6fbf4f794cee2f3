"""Exact-arithmetic workbench for overpartition statistics and the
divisor-sum identities that connect them to multiplicative number theory."""

__version__ = "0.1.0"

from .arith import ModulusParams, divisor_sum_B, sequence
from .overpartitions import (
    Overpartition,
    a_stat,
    distinct_nonoverlined_sum,
    enumerate_overpartitions,
    mbar,
    pbar,
    s_count,
)
from .qseries import FloatSeries, TruncatedSeries

__all__ = [
    "__version__",
    "ModulusParams",
    "divisor_sum_B",
    "sequence",
    "Overpartition",
    "a_stat",
    "distinct_nonoverlined_sum",
    "enumerate_overpartitions",
    "mbar",
    "pbar",
    "s_count",
    "FloatSeries",
    "TruncatedSeries",
]
