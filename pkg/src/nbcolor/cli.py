"""Command line client for the service.

Runs against the in-process app by default; --server points it at a
remote instance instead.  Records go to stdout as JSON lines, human
summaries to stderr, and the exit code is 0 only when every internal
cross-check passed.
"""

import asyncio
import json
import sys

import click
import httpx

from .balance import DEFAULT_BUDGET


def _call(server: str | None, method: str, path: str, payload=None):
    if server:
        with httpx.Client(base_url=server, timeout=600.0) as client:
            response = client.request(method, path, json=payload)
    else:
        from .service import app

        async def go():
            transport = httpx.ASGITransport(app=app)
            async with httpx.AsyncClient(
                transport=transport, base_url="http://nbcolor.internal", timeout=None
            ) as client:
                return await client.request(method, path, json=payload)

        response = asyncio.run(go())
    if response.status_code != 200:
        try:
            detail = response.json().get("detail", response.text)
        except ValueError:
            detail = response.text
        raise click.ClickException(f"{path}: {detail}")
    return response.json()


@click.group()
@click.option("--server", default=None, metavar="URL", help="Remote service URL; default runs in process.")
@click.pass_context
def main(ctx, server):
    """Neighborhood-balanced 3-coloring toolkit."""
    ctx.obj = server


@main.command()
@click.argument("graph6")
@click.option("--budget", default=DEFAULT_BUDGET, show_default=True, help="Search node budget.")
@click.pass_obj
def solve(server, graph6, budget):
    """Solve one graph, or one per stdin line when GRAPH6 is '-'."""
    lines = (
        [ln.strip() for ln in sys.stdin if ln.strip()] if graph6 == "-" else [graph6]
    )
    ok = True
    for line in lines:
        result = _call(server, "POST", "/solve", {"graph6": line, "budget": budget})
        click.echo(json.dumps({"graph6": line, **result}))
        if result["status"] == "budget" or not result["checks_passed"]:
            ok = False
    if not ok:
        sys.exit(1)


@main.command()
@click.argument("graph6")
@click.argument("coloring_json", type=click.File("r"))
@click.pass_obj
def verify(server, graph6, coloring_json):
    """Check a coloring file (JSON array of 0/1/2) against a graph."""
    coloring = json.load(coloring_json)
    result = _call(server, "POST", "/verify", {"graph6": graph6, "coloring": coloring})
    click.echo(json.dumps(result))
    if not result["balanced"]:
        sys.exit(1)


@main.command()
@click.argument("name")
@click.argument("params", nargs=-1, type=int, required=True)
@click.pass_obj
def family(server, name, params):
    """Emit a family member's graph6 plus its coloring when one exists."""
    result = _call(server, "POST", "/family", {"name": name, "params": list(params)})
    click.echo(result["graph6"])
    if result["applicable"]:
        click.echo(json.dumps(result["coloring"]))
    else:
        click.echo("no balanced coloring for these parameters", err=True)
    if not result["checks_passed"]:
        sys.exit(1)


@main.command()
@click.argument("family_name", metavar="FAMILY")
@click.option("--m-max", type=int, default=None, help="Largest m (petersen, pappus).")
@click.option("--n-max", type=int, default=None, help="Largest n (mobius).")
@click.option("--budget", default=DEFAULT_BUDGET, show_default=True)
@click.pass_obj
def scan(server, family_name, m_max, n_max, budget):
    """Sweep a family's parameter range and compare against the law."""
    result = _call(
        server,
        "POST",
        "/scan",
        {"family": family_name, "m_max": m_max, "n_max": n_max, "budget": budget},
    )
    for row in result["rows"]:
        click.echo(json.dumps(row))
    verdict = "agree" if result["all_agree"] else "DISAGREE"
    click.echo(f"{len(result['rows'])} members scanned: {verdict}", err=True)
    if not result["all_agree"]:
        sys.exit(1)


@main.command()
@click.option("--n", "order", type=int, default=None, help="Classify all connected cubic graphs of this order.")
@click.option("--in", "infile", type=click.File("r"), default=None, help="Classify a graph6 corpus file.")
@click.option("--budget", default=DEFAULT_BUDGET, show_default=True)
@click.option("--no-double-check", is_flag=True, help="Skip the reversed-order confirmation of no verdicts.")
@click.pass_obj
def classify(server, order, infile, budget, no_double_check):
    """Classify a corpus; one record per line plus a summary."""
    if (order is None) == (infile is None):
        raise click.UsageError("give exactly one of --n or --in")
    payload = {"budget": budget, "double_check": not no_double_check}
    if order is not None:
        payload["n"] = order
    else:
        payload["graph6_lines"] = [ln.strip() for ln in infile if ln.strip()]
    result = _call(server, "POST", "/classify", payload)
    for record in result["records"]:
        click.echo(json.dumps(record))
    s = result["summary"]
    click.echo(
        f"{s['total']} graphs: {s['balanced']} balanced, {s['unbalanced']} not, "
        f"{s['budget_exhausted']} budget-exhausted; cross-checks "
        f"{'passed' if s['checks_passed'] else 'FAILED'}",
        err=True,
    )
    for failure in s["failures"]:
        click.echo(f"  {failure}", err=True)
    if not s["checks_passed"] or s["budget_exhausted"]:
        sys.exit(1)


@main.group()
def cubic():
    """Cubic-graph structure commands."""


@cubic.command()
@click.argument("graph6")
@click.option("--budget", default=DEFAULT_BUDGET, show_default=True)
@click.pass_obj
def analyze(server, graph6, budget):
    """Balancedness, matchings, forbidden patterns, and dataset for a cubic graph."""
    result = _call(server, "POST", "/cubic/analyze", {"graph6": graph6, "budget": budget})
    click.echo(json.dumps(result))
    if not result["checks_passed"]:
        sys.exit(1)


@main.group()
def circulant():
    """Exact circulant-system commands."""


@circulant.command("verify")
@click.option("--family", "family_name", required=True, type=click.Choice(["petersen", "pappus"]))
@click.option("--a", "exponent", required=True, type=int, help="n = 3^a.")
@click.option("--j", "jump", required=True, type=int)
@click.option("--m", "order", type=int, default=None)
@click.pass_obj
def circulant_verify(server, family_name, exponent, jump, order):
    """Determinant, all-ones solution, and root-of-unity search results."""
    result = _call(
        server,
        "POST",
        "/circulant/verify",
        {"family": family_name, "a": exponent, "j": jump, "m": order},
    )
    click.echo(json.dumps(result))
    if not result["checks_passed"]:
        sys.exit(1)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
