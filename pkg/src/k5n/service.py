"""HTTP front end over the shared handlers.

Run with ``uvicorn k5n.service:app``. Domain failures map to HTTP 400
with the handler's payload attached; malformed documents map to 422.
"""

from __future__ import annotations

from typing import Any, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import api
from .jsonio import FormatError

app = FastAPI(title="k5n", version="1.0",
              description="Verification and classification engine for "
                          "crossing-minimal K_{5,n} rotation systems.")


class AntidistRequest(BaseModel):
    rot1: str = Field(examples=["01234"])
    rot2: str = Field(examples=["01432"])


class DrsRequest(BaseModel):
    r: int = Field(ge=0)
    s: int = Field(ge=0)


class ZarRequest(BaseModel):
    n: int = Field(ge=0)


class ClassifyRequest(BaseModel):
    n: int = Field(ge=2, le=24)


class DrawingDocument(BaseModel):
    format: str
    kind: str
    n: Optional[int] = None
    rotations: list[str]
    # "lambda" is reserved in Python; alias keeps the wire name
    lam: list[list[int]] = Field(alias="lambda")

    model_config = {"populate_by_name": True}

    def payload(self) -> dict[str, Any]:
        return self.model_dump(by_alias=True, exclude_none=True)


class KeyDocument(BaseModel):
    format: str
    kind: str
    rotations: Optional[list[str]] = None
    vertices: Optional[list[int]] = None
    labels: list[list[int]]

    def payload(self) -> dict[str, Any]:
        return self.model_dump(exclude_none=True)


class SolveKeyRequest(BaseModel):
    key: KeyDocument
    n: int = Field(ge=0)


def _call(fn, *args):
    try:
        return fn(*args)
    except FormatError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    except api.DomainError as exc:
        raise HTTPException(
            status_code=400,
            detail={"message": str(exc), "report": exc.payload}) from exc


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/antidist")
def antidist(req: AntidistRequest) -> dict:
    return _call(api.handle_antidist, req.rot1, req.rot2)


@app.post("/gen/drs")
def gen_drs(req: DrsRequest) -> dict:
    return _call(api.handle_gen_drs, req.r, req.s)


@app.post("/gen/zar")
def gen_zar(req: ZarRequest) -> dict:
    return _call(api.handle_gen_zar, req.n)


@app.post("/verify")
def verify(doc: DrawingDocument) -> dict:
    return _call(api.handle_verify, doc.payload())


@app.post("/key")
def key(doc: DrawingDocument) -> dict:
    return _call(api.handle_key, doc.payload())


@app.post("/solve-key")
def solve_key(req: SolveKeyRequest) -> dict:
    return _call(api.handle_solve_key, req.key.payload(), req.n)


@app.post("/forbid-check")
def forbid_check(doc: KeyDocument) -> dict:
    return _call(api.handle_forbid_check, doc.payload())


@app.post("/classify")
def classify(req: ClassifyRequest) -> dict:
    return _call(api.handle_classify, req.n)


@app.post("/decompose")
def decompose(doc: DrawingDocument) -> dict:
    return _call(api.handle_decompose, doc.payload())
