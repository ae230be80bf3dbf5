"""Request and response models for the HTTP service."""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, Field

Mode = Literal["edge", "total", "both"]


class SolveRequest(BaseModel):
    g6: str
    mode: Mode = "both"
    oracle: bool = False
    oracle_max_n: int = Field(default=8, ge=0)
    seed: int = 0


class CorpusRunRequest(BaseModel):
    lines: list[str]
    mode: Mode = "both"
    oracle: bool = False
    oracle_max_n: int = Field(default=8, ge=0)
    seed: int = 0
    strict: bool = False
    fail_fast: bool = False


class SummaryModel(BaseModel):
    record: Literal["summary"] = "summary"
    graphs: int
    skipped: int
    parse_errors: int
    verification_failures: int
    refutations: int
    oracle_checked: int
    oracle_disagreements: int
    edge_methods: dict[str, int]
    total_methods: dict[str, int]
    max_edge_color: int | None
    max_total_color: int | None
    ok: bool
    timing: dict[str, float]


class CorpusRunResponse(BaseModel):
    records: list[dict[str, Any]]
    summary: SummaryModel


class GenerateRequest(BaseModel):
    n: int = Field(ge=4)
    count: int = Field(default=10, ge=1)
    seed: int = 0
    dedup: bool = True


class LinesResponse(BaseModel):
    lines: list[str]


class OracleRequest(BaseModel):
    g6: str
    kind: Literal["edge", "total"] = "edge"
    kmax: int | None = Field(default=None, ge=1)
    node_cap: int | None = Field(default=None, ge=1)


class OracleResponse(BaseModel):
    value: int | None
    kmax: int
    nodes: int
    budget_exceeded: bool = False


class HealthResponse(BaseModel):
    status: Literal["ok"] = "ok"
    version: str
