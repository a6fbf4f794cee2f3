"""Pydantic request/response models shared by the service and the CLI.

Big integers are serialized as decimal strings: overpartition counts pass
2^53 well before n = 1000, and JSON numbers cannot carry them losslessly.
"""

from __future__ import annotations

from pydantic import BaseModel, Field, field_validator, model_validator

from .arith import SEQUENCE_NAMES
from .identities import IDENTITY_IDS, CheckRow, IdentityReport
from .overpartitions import ENUMERATION_CAP


def encode_value(v: int | float) -> str | float:
    return float(v) if isinstance(v, float) else str(v)


class PbarRequest(BaseModel):
    n_max: int = Field(ge=0, le=100_000)


class TableRow(BaseModel):
    n: int
    value: str


class PbarResponse(BaseModel):
    rows: list[TableRow]


class STableRequest(BaseModel):
    n_max: int = Field(ge=1)
    method: str = "series"

    @field_validator("method")
    @classmethod
    def _known_method(cls, v: str) -> str:
        if v not in ("series", "enumerate"):
            raise ValueError("method must be 'series' or 'enumerate'")
        return v

    @model_validator(mode="after")
    def _cap_enumeration(self):
        if self.method == "enumerate" and self.n_max > ENUMERATION_CAP:
            raise ValueError(f"enumeration is capped at n <= {ENUMERATION_CAP}")
        return self


class STableRow(BaseModel):
    n: int
    k: int
    value: str


class STableResponse(BaseModel):
    rows: list[STableRow]


class EnumerateRequest(BaseModel):
    n: int = Field(ge=0, le=ENUMERATION_CAP)


class EnumerateResponse(BaseModel):
    n: int
    count: str
    overpartitions: list[str]


class VerifyRequest(BaseModel):
    identity: str
    seq: str = "phi"
    alpha: int = Field(default=1, ge=1)
    beta: int = Field(default=0, ge=0)
    k: int = Field(default=1, ge=1)
    k_max: int = Field(default=4, ge=1)
    n_max: int = Field(default=120, ge=0)

    @field_validator("identity")
    @classmethod
    def _known_identity(cls, v: str) -> str:
        if v not in IDENTITY_IDS:
            raise ValueError(f"identity must be one of {', '.join(IDENTITY_IDS)}")
        return v

    @field_validator("seq")
    @classmethod
    def _known_seq(cls, v: str) -> str:
        if v not in SEQUENCE_NAMES:
            raise ValueError(f"unknown sequence {v!r}")
        return v

    @model_validator(mode="after")
    def _modulus(self):
        if self.beta >= self.alpha:
            raise ValueError("need beta < alpha")
        return self


class VerifyRow(BaseModel):
    identity_id: str
    params: dict[str, int | str]
    n: int
    lhs: str | float
    rhs: str | float
    ok: bool


class VerifyResponse(BaseModel):
    identity_id: str
    params: dict[str, int | str]
    passed: bool
    checked: int
    violations: int
    elapsed: float
    notes: list[str]
    rows: list[VerifyRow]


def row_params(report: IdentityReport, row: CheckRow) -> dict[str, int | str]:
    params: dict[str, int | str] = dict(report.params)
    if row.tag:
        params["tag"] = row.tag
    return params


def verify_row(report: IdentityReport, row: CheckRow) -> VerifyRow:
    return VerifyRow(
        identity_id=report.identity_id,
        params=row_params(report, row),
        n=row.n,
        lhs=encode_value(row.lhs),
        rhs=encode_value(row.rhs),
        ok=row.ok,
    )


def verify_response(report: IdentityReport) -> VerifyResponse:
    return VerifyResponse(
        identity_id=report.identity_id,
        params={k: v for k, v in report.params.items()},
        passed=report.passed,
        checked=len(report.rows),
        violations=len(report.violations),
        elapsed=report.elapsed,
        notes=report.notes,
        rows=[verify_row(report, r) for r in report.rows],
    )
