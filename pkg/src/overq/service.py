"""FastAPI front end over the core package.

The sieve and the pbar/series memo tables are process-wide and immutable
once filled, so a single long-running worker amortizes them across
requests.  Run with:

    uvicorn overq.service:app
"""

from __future__ import annotations

from fastapi import FastAPI

from . import __version__
from .identities import run_identity
from .overpartitions import enumerate_overpartitions, pbar, s_row
from .schemas import (
    EnumerateRequest,
    EnumerateResponse,
    PbarRequest,
    PbarResponse,
    STableRequest,
    STableResponse,
    STableRow,
    TableRow,
    VerifyRequest,
    VerifyResponse,
    verify_response,
)

app = FastAPI(
    title="overq",
    description="Overpartition statistics, divisor sums, and identity verification",
    version=__version__,
)


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/pbar", response_model=PbarResponse)
def pbar_table(req: PbarRequest) -> PbarResponse:
    rows = [TableRow(n=n, value=str(pbar(n))) for n in range(req.n_max + 1)]
    return PbarResponse(rows=rows)


@app.post("/stable", response_model=STableResponse)
def s_table(req: STableRequest) -> STableResponse:
    rows = []
    for n in range(1, req.n_max + 1):
        for k, v in enumerate(s_row(n, req.method), start=1):
            rows.append(STableRow(n=n, k=k, value=str(v)))
    return STableResponse(rows=rows)


@app.post("/enumerate", response_model=EnumerateResponse)
def enumerate_endpoint(req: EnumerateRequest) -> EnumerateResponse:
    rendered = [op.render() for op in enumerate_overpartitions(req.n)]
    return EnumerateResponse(n=req.n, count=str(len(rendered)), overpartitions=rendered)


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest) -> VerifyResponse:
    report = run_identity(
        req.identity,
        seq=req.seq,
        alpha=req.alpha,
        beta=req.beta,
        k=req.k,
        k_max=req.k_max,
        n_max=req.n_max,
    )
    return verify_response(report)
