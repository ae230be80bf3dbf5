"""Corpus harness: parse graph6 streams, run the constructive pipeline on
each graph, and emit JSON-ready records plus an aggregate summary.

Record kinds (the "record" field):

  graph    one per processed graph: profile, edge/total outcomes, optional
           oracle values, timing
  skip     graph parsed but not eligible (not cubic, not connected)
  error    line did not parse as graph6
  summary  aggregate counts; always the last JSONL object

Determinism: with fixed options, outputs are byte-identical across runs
except for the "timing" blocks, which are excluded from any such guarantee.
The exit contract lives in RunSummary.ok: true iff zero verification
failures, zero refutation events, zero oracle disagreements, and (under
strict) zero parse errors or skips.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .bipartition import decompose, max_mpartite_subgraph
from .canon import ENUMERABLE_N, canonical_code, enumerate_cubic
from .edge_coloring import constructive_edge_coloring, verify_nsd
from .errors import (BudgetExceeded, GenerationExhausted, Graph6Error,
                     Infeasible2, Infeasible4)
from .graph6 import HEADER, emit_graph6, parse_graph6
from .graphs import Graph, is_connected, is_cubic, random_cubic
from .oracle import exact_gndi, exact_tgndi
from .total_coloring import constructive_total_coloring, verify_total

log = logging.getLogger("nsdcolor")

MODES = ("edge", "total", "both")
GENERATION_ATTEMPT_FACTOR = 50
DEDUP_MAX_N = 12


@dataclass(frozen=True)
class RunOptions:
    mode: str = "both"
    oracle: bool = False
    oracle_max_n: int = 8
    seed: int = 0
    strict: bool = False
    fail_fast: bool = False

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")


@dataclass
class RunSummary:
    graphs: int = 0
    skipped: int = 0
    parse_errors: int = 0
    verification_failures: int = 0
    refutations: int = 0
    oracle_checked: int = 0
    oracle_disagreements: int = 0
    edge_methods: dict[str, int] = field(default_factory=dict)
    total_methods: dict[str, int] = field(default_factory=dict)
    max_edge_color: int | None = None
    max_total_color: int | None = None
    strict: bool = False
    wall_time_ms: float = 0.0

    @property
    def ok(self) -> bool:
        bad = self.verification_failures + self.refutations + self.oracle_disagreements
        if self.strict:
            bad += self.parse_errors + self.skipped
        return bad == 0

    def to_record(self) -> dict:
        return {
            "record": "summary",
            "graphs": self.graphs,
            "skipped": self.skipped,
            "parse_errors": self.parse_errors,
            "verification_failures": self.verification_failures,
            "refutations": self.refutations,
            "oracle_checked": self.oracle_checked,
            "oracle_disagreements": self.oracle_disagreements,
            "edge_methods": dict(sorted(self.edge_methods.items())),
            "total_methods": dict(sorted(self.total_methods.items())),
            "max_edge_color": self.max_edge_color,
            "max_total_color": self.max_total_color,
            "ok": self.ok,
            "timing": {"wall_time_ms": round(self.wall_time_ms, 3)},
        }


def solve_one(g: Graph, options: RunOptions, index: int = 0,
              g6: str | None = None) -> dict:
    """Full pipeline for one cubic connected graph.  Raises NotCubic or
    NotConnected for ineligible input; run_corpus screens those out first."""
    t0 = time.perf_counter()
    line = g6 if g6 is not None else emit_graph6(g)
    seed = options.seed + index
    p = max_mpartite_subgraph(g, 2, seed=seed)
    d = decompose(g, p)
    rec: dict = {
        "record": "graph",
        "index": index,
        "g6": line,
        "n": g.n,
        "edge_count": g.edge_count,
        "profile": {"a1": d.a1, "b1": d.b1, "a2": d.a2, "b2": d.b2},
    }

    edge_max = total_max = None
    if options.mode in ("edge", "both"):
        rec["edge"] = _edge_outcome(g, d)
        edge_max = rec["edge"]["max_color"]
    if options.mode in ("total", "both"):
        rec["total"] = _total_outcome(g, d)
        total_max = rec["total"]["max_color"]

    if options.oracle and g.n <= options.oracle_max_n:
        rec["oracle"] = _oracle_block(g, options.mode, edge_max, total_max)

    rec["timing"] = {"wall_time_ms": round((time.perf_counter() - t0) * 1e3, 3)}
    return rec


def _edge_outcome(g: Graph, d) -> dict:
    try:
        out = constructive_edge_coloring(g, d)
    except Infeasible4:
        log.error("refutation: no {1,2,3,4} edge coloring for a cubic graph")
        return {"method": "refuted", "error": "Infeasible4", "verified": False,
                "colors_used": None, "max_color": None}
    except BudgetExceeded:
        return {"method": "unknown", "error": "BudgetExceeded",
                "verified": False, "colors_used": None, "max_color": None}
    verified = verify_nsd(g, out.coloring).ok
    return {
        "method": out.method,
        "colors_used": list(out.colors_used),
        "max_color": max(out.colors_used),
        "conflicts_before_repair": out.stats.get("conflicts_before_repair", 0),
        "verified": verified,
    }


def _total_outcome(g: Graph, d) -> dict:
    try:
        out = constructive_total_coloring(g, d)
    except Infeasible2:
        log.error("refutation: no {1,2} total coloring for a cubic graph")
        return {"method": "refuted", "error": "Infeasible2", "verified": False,
                "colors_used": None, "max_color": None}
    except BudgetExceeded:
        return {"method": "unknown", "error": "BudgetExceeded",
                "verified": False, "colors_used": None, "max_color": None}
    verified = verify_total(g, out.coloring).ok
    return {
        "method": out.method,
        "colors_used": list(out.colors_used),
        "max_color": max(out.colors_used),
        "conflicts_before_repair": out.stats.get("conflicts_before_repair", 0),
        "verified": verified,
    }


def _oracle_block(g: Graph, mode: str, edge_max: int | None,
                  total_max: int | None) -> dict:
    block: dict = {}
    agree = True
    if mode in ("edge", "both"):
        try:
            r = exact_gndi(g)
            block["gndi"] = r.value
            block["gndi_nodes"] = r.nodes
            if r.value is not None and edge_max is not None and r.value > edge_max:
                agree = False
        except BudgetExceeded:
            block["gndi"] = None
            block["gndi_budget_exceeded"] = True
    if mode in ("total", "both"):
        try:
            r = exact_tgndi(g)
            block["tgndi"] = r.value
            block["tgndi_nodes"] = r.nodes
            if r.value is not None and total_max is not None and r.value > total_max:
                agree = False
        except BudgetExceeded:
            block["tgndi"] = None
            block["tgndi_budget_exceeded"] = True
    block["agreement"] = agree
    return block


def _scan_lines(lines: Iterable[str | bytes]) -> Iterator[tuple[int, bytes]]:
    """Yield (line_number, payload) for non-blank, non-header-only lines."""
    for lineno, raw in enumerate(lines, start=1):
        data = raw.encode("ascii", "replace") if isinstance(raw, str) else raw
        data = data.strip()
        if data.startswith(HEADER):
            data = data[len(HEADER):].strip()
        if not data:
            continue
        yield lineno, data


def run_corpus(lines: Iterable[str | bytes],
               options: RunOptions | None = None) -> tuple[list[dict], RunSummary]:
    """Process a graph6 line stream; one record per line that held content.

    Blank lines and a bare format header are ignored.  Non-cubic or
    disconnected graphs become skip records; unparsable lines become error
    records.  fail_fast stops after the first verification failure or
    refutation (the summary still reflects everything seen so far)."""
    options = options or RunOptions()
    t0 = time.perf_counter()
    records: list[dict] = []
    summary = RunSummary(strict=options.strict)
    index = 0
    for lineno, data in _scan_lines(lines):
        try:
            g = parse_graph6(data)
        except Graph6Error as exc:
            summary.parse_errors += 1
            log.warning("line %d: %s: %s", lineno, type(exc).__name__, exc)
            records.append({"record": "error", "line_number": lineno,
                            "reason": f"{type(exc).__name__}: {exc}"})
            continue
        text = data.decode("ascii")
        reason = None
        if not is_cubic(g):
            reason = "not cubic"
        elif not is_connected(g):
            reason = "not connected"
        if reason:
            summary.skipped += 1
            log.warning("line %d: skipped (%s)", lineno, reason)
            records.append({"record": "skip", "line_number": lineno,
                            "g6": text, "n": g.n, "reason": reason})
            continue
        rec = solve_one(g, options, index=index, g6=text)
        rec["line_number"] = lineno
        records.append(rec)
        index += 1
        bad = _absorb(summary, rec)
        if bad and options.fail_fast:
            log.error("fail-fast: stopping after line %d", lineno)
            break
    summary.wall_time_ms = (time.perf_counter() - t0) * 1e3
    return records, summary


def _absorb(summary: RunSummary, rec: dict) -> bool:
    """Fold one graph record into the summary; true if it carried a failure."""
    summary.graphs += 1
    bad = False
    for key, methods in (("edge", summary.edge_methods),
                         ("total", summary.total_methods)):
        out = rec.get(key)
        if out is None:
            continue
        methods[out["method"]] = methods.get(out["method"], 0) + 1
        if out.get("error") in ("Infeasible4", "Infeasible2"):
            summary.refutations += 1
            bad = True
        elif not out["verified"]:
            summary.verification_failures += 1
            bad = True
        if out["max_color"] is not None:
            prev = summary.max_edge_color if key == "edge" else summary.max_total_color
            best = out["max_color"] if prev is None else max(prev, out["max_color"])
            if key == "edge":
                summary.max_edge_color = best
            else:
                summary.max_total_color = best
    oracle = rec.get("oracle")
    if oracle is not None:
        summary.oracle_checked += 1
        if not oracle["agreement"]:
            summary.oracle_disagreements += 1
            bad = True
    return bad


def generate_corpus(n: int, count: int, seed: int = 0,
                    dedup: bool = True) -> list[str]:
    """Random connected cubic graphs as graph6 lines.

    With dedup (and n small enough to afford certificates) the result has
    one line per isomorphism class, so it may fall short of count once the
    class pool is exhausted; the attempt budget caps the search either way.
    """
    lines: list[str] = []
    seen: set[bytes] = set()
    budget = GENERATION_ATTEMPT_FACTOR * max(count, 1)
    for attempt in range(budget):
        if len(lines) >= count:
            break
        try:
            g = random_cubic(n, seed=seed + attempt)
        except GenerationExhausted:
            continue
        if not is_connected(g):
            continue
        if dedup:
            key = canonical_code(g) if n <= DEDUP_MAX_N else bytes(emit_graph6(g), "ascii")
            if key in seen:
                continue
            seen.add(key)
        lines.append(emit_graph6(g))
    return lines


def enumerate_corpus(n: int) -> list[str]:
    """The exhaustive connected cubic corpus for n in ENUMERABLE_N."""
    if n not in ENUMERABLE_N:
        raise ValueError(f"exhaustive enumeration supports n in {ENUMERABLE_N}")
    return [emit_graph6(g) for g in enumerate_cubic(n)]
