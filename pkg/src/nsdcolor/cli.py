"""Command-line client for the solver service.

Every subcommand talks HTTP: by default to the FastAPI app mounted
in-process (no socket), or to a remote instance via --server.  Reports go
to stdout (or --out); logs go to stderr; the exit code is nonzero iff the
run saw a verification failure, a refutation event, an oracle
disagreement, or (under --strict) a parse error or skipped graph.
"""

from __future__ import annotations

import asyncio
import csv
import json
import logging
import sys

import click
import httpx

CSV_COLUMNS = ("index", "g6", "n", "edge_count", "a1", "b1", "a2", "b2",
               "edge_method", "edge_colors", "edge_max_color",
               "total_method", "total_colors", "total_max_color",
               "gndi", "tgndi", "verified")


class _InProcessClient:
    """Synchronous facade over the ASGI app; no socket involved."""

    def __init__(self) -> None:
        from .service.app import app
        self._client = httpx.AsyncClient(transport=httpx.ASGITransport(app=app),
                                         base_url="http://nsdcolor.local",
                                         timeout=None)

    def __enter__(self) -> "_InProcessClient":
        return self

    def __exit__(self, *exc) -> None:
        asyncio.run(self._client.aclose())

    def post(self, path: str, **kw) -> httpx.Response:
        return asyncio.run(self._client.post(path, **kw))

    def get(self, path: str, **kw) -> httpx.Response:
        return asyncio.run(self._client.get(path, **kw))


def _client(server: str | None):
    if server:
        return httpx.Client(base_url=server, timeout=None)
    return _InProcessClient()


def _fail(resp: httpx.Response) -> None:
    if resp.status_code >= 400:
        try:
            detail = resp.json().get("detail", resp.text)
        except ValueError:
            detail = resp.text
        raise click.ClickException(f"service returned {resp.status_code}: {detail}")


def _read_lines(path: str) -> list[str]:
    try:
        if path == "-":
            return sys.stdin.read().splitlines()
        with open(path, "r", encoding="ascii") as fh:
            return fh.read().splitlines()
    except OSError as exc:
        raise click.ClickException(f"cannot read {path}: {exc}")


def _open_out(path: str | None):
    if path is None or path == "-":
        return sys.stdout
    try:
        return open(path, "w", encoding="utf-8")
    except OSError as exc:
        raise click.ClickException(f"cannot write {path}: {exc}")


def _emit_jsonl(records: list[dict], summary: dict, out) -> None:
    for rec in records:
        out.write(json.dumps(rec, sort_keys=True) + "\n")
    out.write(json.dumps(summary, sort_keys=True) + "\n")


def _csv_row(rec: dict) -> dict:
    prof = rec.get("profile", {})
    e = rec.get("edge") or {}
    t = rec.get("total") or {}
    o = rec.get("oracle") or {}
    verified = all(out["verified"] for out in (e, t) if out)

    def colors(block):
        c = block.get("colors_used")
        return " ".join(map(str, c)) if c else ""

    return {
        "index": rec["index"], "g6": rec["g6"], "n": rec["n"],
        "edge_count": rec["edge_count"],
        "a1": prof.get("a1"), "b1": prof.get("b1"),
        "a2": prof.get("a2"), "b2": prof.get("b2"),
        "edge_method": e.get("method", ""), "edge_colors": colors(e),
        "edge_max_color": e.get("max_color", ""),
        "total_method": t.get("method", ""), "total_colors": colors(t),
        "total_max_color": t.get("max_color", ""),
        "gndi": o.get("gndi", ""), "tgndi": o.get("tgndi", ""),
        "verified": verified,
    }


def _emit_csv(records: list[dict], out) -> None:
    writer = csv.DictWriter(out, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for rec in records:
        if rec.get("record") == "graph":
            writer.writerow(_csv_row(rec))


@click.group()
@click.option("--server", default=None, metavar="URL",
              help="Remote service URL; default runs the service in-process.")
@click.option("-v", "--verbose", is_flag=True, help="Debug logging to stderr.")
@click.pass_context
def main(ctx: click.Context, server: str | None, verbose: bool) -> None:
    """Neighbor-sum-distinguishing colorings of cubic graphs."""
    logging.basicConfig(stream=sys.stderr,
                        level=logging.DEBUG if verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    ctx.ensure_object(dict)
    ctx.obj["server"] = server


@main.command()
@click.option("--input", "-i", "input_path", default="-", metavar="PATH|-",
              help="graph6 file, or - for stdin (default).")
@click.option("--mode", type=click.Choice(["edge", "total", "both"]),
              default="both", show_default=True)
@click.option("--oracle", is_flag=True,
              help="Cross-check against the exact oracle on small graphs.")
@click.option("--oracle-max-n", default=8, show_default=True, metavar="K",
              help="Largest n the oracle is asked about.")
@click.option("--seed", default=0, show_default=True)
@click.option("--emit", type=click.Choice(["jsonl", "csv"]), default="jsonl",
              show_default=True)
@click.option("--strict", is_flag=True,
              help="Parse errors and skipped graphs fail the run.")
@click.option("--fail-fast", is_flag=True,
              help="Stop at the first verification failure or refutation.")
@click.option("--out", default=None, metavar="PATH",
              help="Write the report here instead of stdout.")
@click.pass_context
def solve(ctx: click.Context, input_path: str, mode: str, oracle: bool,
          oracle_max_n: int, seed: int, emit: str, strict: bool,
          fail_fast: bool, out: str | None) -> None:
    """Color every graph in a graph6 stream and report the results."""
    lines = _read_lines(input_path)
    payload = {"lines": lines, "mode": mode, "oracle": oracle,
               "oracle_max_n": oracle_max_n, "seed": seed,
               "strict": strict, "fail_fast": fail_fast}
    with _client(ctx.obj["server"]) as client:
        resp = client.post("/corpus/run", json=payload)
        _fail(resp)
        body = resp.json()
    sink = _open_out(out)
    try:
        if emit == "jsonl":
            _emit_jsonl(body["records"], body["summary"], sink)
        else:
            _emit_csv(body["records"], sink)
    finally:
        if sink is not sys.stdout:
            sink.close()
    summary = body["summary"]
    if not summary["ok"]:
        click.echo("run failed: "
                   f"{summary['verification_failures']} verification failures, "
                   f"{summary['refutations']} refutations, "
                   f"{summary['parse_errors']} parse errors, "
                   f"{summary['skipped']} skipped", err=True)
        ctx.exit(1)


@main.command()
@click.option("--n", required=True, type=int, help="Vertex count (even).")
@click.option("--count", default=10, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--dedup/--no-dedup", default=True, show_default=True,
              help="Keep one representative per isomorphism class.")
@click.option("--out", default=None, metavar="PATH")
@click.pass_context
def gen(ctx: click.Context, n: int, count: int, seed: int, dedup: bool,
        out: str | None) -> None:
    """Sample random connected cubic graphs as graph6 lines."""
    with _client(ctx.obj["server"]) as client:
        resp = client.post("/corpus/generate",
                           json={"n": n, "count": count, "seed": seed,
                                 "dedup": dedup})
        _fail(resp)
        lines = resp.json()["lines"]
    sink = _open_out(out)
    try:
        for line in lines:
            sink.write(line + "\n")
    finally:
        if sink is not sys.stdout:
            sink.close()


@main.command()
@click.option("--n", required=True, type=int,
              help="Vertex count; exhaustive corpora exist for 4..12 even.")
@click.option("--out", default=None, metavar="PATH")
@click.pass_context
def enum(ctx: click.Context, n: int, out: str | None) -> None:
    """Emit every connected cubic graph on n vertices, one per class."""
    with _client(ctx.obj["server"]) as client:
        resp = client.get("/corpus/enumerate", params={"n": n})
        _fail(resp)
        lines = resp.json()["lines"]
    sink = _open_out(out)
    try:
        for line in lines:
            sink.write(line + "\n")
    finally:
        if sink is not sys.stdout:
            sink.close()


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP service standalone."""
    import uvicorn

    from .service.app import app
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
