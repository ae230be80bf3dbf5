"""FastAPI wrapper around the solver pipeline.

The CLI mounts this app in-process by default, so every code path the
service exposes is also the CLI's code path; running it standalone
(`nsdcolor serve`) gives the same contract over the network.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Query

from .. import __version__
from ..errors import BudgetExceeded, Graph6Error, OddN
from ..graph6 import parse_graph6
from ..graphs import is_connected, is_cubic
from ..oracle import exact_gndi, exact_tgndi
from ..pipeline import (RunOptions, enumerate_corpus, generate_corpus,
                        run_corpus, solve_one)
from .schemas import (CorpusRunRequest, CorpusRunResponse, GenerateRequest,
                      HealthResponse, LinesResponse, OracleRequest,
                      OracleResponse, SolveRequest, SummaryModel)

app = FastAPI(title="nsdcolor", version=__version__)


def _parse_or_400(g6: str):
    try:
        return parse_graph6(g6)
    except Graph6Error as exc:
        raise HTTPException(status_code=400,
                            detail=f"{type(exc).__name__}: {exc}")


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(version=__version__)


@app.post("/solve")
def solve(req: SolveRequest) -> dict:
    g = _parse_or_400(req.g6)
    if not is_cubic(g):
        raise HTTPException(status_code=400, detail="graph is not cubic")
    if not is_connected(g):
        raise HTTPException(status_code=400, detail="graph is not connected")
    options = RunOptions(mode=req.mode, oracle=req.oracle,
                         oracle_max_n=req.oracle_max_n, seed=req.seed)
    return solve_one(g, options, g6=req.g6.strip())


@app.post("/corpus/run", response_model=CorpusRunResponse)
def corpus_run(req: CorpusRunRequest) -> CorpusRunResponse:
    options = RunOptions(mode=req.mode, oracle=req.oracle,
                         oracle_max_n=req.oracle_max_n, seed=req.seed,
                         strict=req.strict, fail_fast=req.fail_fast)
    records, summary = run_corpus(req.lines, options)
    return CorpusRunResponse(records=records,
                             summary=SummaryModel(**summary.to_record()))


@app.post("/corpus/generate", response_model=LinesResponse)
def corpus_generate(req: GenerateRequest) -> LinesResponse:
    try:
        lines = generate_corpus(req.n, req.count, seed=req.seed,
                                dedup=req.dedup)
    except OddN as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return LinesResponse(lines=lines)


@app.get("/corpus/enumerate", response_model=LinesResponse)
def corpus_enumerate(n: int = Query(ge=4)) -> LinesResponse:
    try:
        lines = enumerate_corpus(n)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return LinesResponse(lines=lines)


@app.post("/oracle", response_model=OracleResponse)
def oracle(req: OracleRequest) -> OracleResponse:
    g = _parse_or_400(req.g6)
    fn = exact_gndi if req.kind == "edge" else exact_tgndi
    kwargs: dict = {}
    if req.kmax is not None:
        kwargs["kmax"] = req.kmax
    if req.node_cap is not None:
        kwargs["node_cap"] = req.node_cap
    try:
        r = fn(g, **kwargs)
    except BudgetExceeded:
        return OracleResponse(value=None, kmax=req.kmax or 0, nodes=0,
                              budget_exceeded=True)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return OracleResponse(value=r.value, kmax=r.kmax, nodes=r.nodes)
