import json
import os

import click

from lotkit import document, reachability, verify as harness
from lotkit.complexity import EXACT_LIMIT
from lotkit.display import export_dot, serialize_lot
from lotkit.display.kv_sections import display_analysis, display_closure
from lotkit.display.table import display_summary
from lotkit.errors import LotError, ParseError
from lotkit.extract import parse_graph
from lotkit.gen import ATTACHMENTS, CENSUS_CAP, MODES, GenSpec, census_count
from lotkit.presentation import format_presentation, log_to_presentation

EXIT_PARSE = 1
EXIT_INVALID = 2


def fail(ctx, message, code):
    click.echo(click.style(message, fg="red"), err=True)
    ctx.exit(code)


def load_graph(ctx, path):
    with open(path, "rb") as f:
        raw = f.read()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        fail(ctx, f"{path}: byte {e.start}: not valid UTF-8 ({e.reason})", EXIT_PARSE)
    try:
        return parse_graph(text, strict=False), text
    except ParseError as e:
        fail(ctx, f"{path}: {e}", EXIT_PARSE)
    except LotError as e:
        fail(ctx, f"{path}: {e}", EXIT_INVALID)


def validation_problems(doc):
    problems = [str(v) for v in doc.validation.violations if v.kind != "label-is-endpoint"]
    if not doc.validation.connected:
        problems.append("graph is not connected")
    return problems


@click.group()
@click.option(
    "--census-cap",
    type=int,
    default=CENSUS_CAP,
    envvar="LOTKIT_MAX_M",
    show_default=True,
    help="Largest vertex count enumerated exhaustively without --force",
)
@click.option(
    "--exact-limit",
    type=int,
    default=EXACT_LIMIT,
    envvar="LOTKIT_EXACT_LIMIT",
    show_default=True,
    help="Largest vertex count the exact complexity search accepts",
)
@click.pass_context
def lotkit(ctx, census_cap, exact_limit):
    ctx.ensure_object(dict)
    ctx.obj["CENSUS_CAP"] = census_cap
    ctx.obj["EXACT_LIMIT"] = exact_limit


@lotkit.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--exact", is_flag=True, help="Run the exponential exact search and exhaustive certification")
@click.option("--json", "as_json", is_flag=True, help="Print the analysis document as JSON")
@click.option("--dot", "dot_path", type=click.Path(dir_okay=False), help="Write a DOT rendering with the best seed highlighted")
@click.option("-j", "--jobs", type=int, default=1, show_default=True, help="Worker processes for the exact search")
@click.pass_context
def analyze(ctx, path, exact, as_json, dot_path, jobs):
    """Validate a LOG, bound its complexity and look for a certificate."""
    graph, text = load_graph(ctx, path)
    doc = document.analyze(
        graph, text, exact=exact, exact_limit=ctx.obj["EXACT_LIMIT"], workers=jobs
    )
    if as_json:
        click.echo(json.dumps(doc.to_dict(), indent=2))
    else:
        display_analysis(doc)
    if dot_path:
        best = doc.exact or doc.greedy
        with open(dot_path, "w", encoding="utf-8") as f:
            f.write(export_dot(graph, best.witness if best else None))
        click.echo(click.style(f"DOT written to {dot_path}", fg="green"), err=True)
    problems = validation_problems(doc)
    if problems:
        fail(ctx, f"{path}: validation failed: " + "; ".join(problems), EXIT_INVALID)


@lotkit.command()
@click.option("--mode", type=click.Choice(MODES), default="random", show_default=True)
@click.option("-m", "--vertices", type=int, help="Vertex count (random and census modes)")
@click.option("-s", "--parts", type=int, default=1, show_default=True, help="Rosebrock parts (chain mode)")
@click.option("--attachment", type=click.Choice(ATTACHMENTS), default="chain", show_default=True)
@click.option("--seed", type=int, default=0, show_default=True, help="RNG seed")
@click.option("-o", "--out", type=click.Path(file_okay=False), help="Output directory; stdout when omitted")
@click.option("--force", is_flag=True, help="Allow a census above the cap")
@click.pass_context
def generate(ctx, mode, vertices, parts, attachment, seed, out, force):
    """Write generated LOTs in LOT file format."""
    if mode != "chain" and vertices is None:
        raise click.UsageError(f"--vertices is required in {mode} mode")
    if mode == "census" and not out:
        raise click.UsageError("census mode writes a directory; pass --out")
    spec = GenSpec(
        mode=mode,
        m=vertices,
        rng_seed=seed,
        parts=parts,
        attachment=attachment,
        cap=ctx.obj["CENSUS_CAP"],
        force=force,
    )
    try:
        graphs = list(spec.generate())
    except LotError as e:
        fail(ctx, str(e), EXIT_INVALID)
    if not out:
        for graph in graphs:
            click.echo(serialize_lot(graph), nl=False)
        return
    os.makedirs(out, exist_ok=True)
    if mode == "chain":
        names = [f"chain-s{parts}-{attachment}.lot"]
    elif mode == "random":
        names = [f"random-m{vertices}-seed{seed}.lot"]
    else:
        names = [f"census-m{vertices}-{n:06d}.lot" for n in range(len(graphs))]
    for name, graph in zip(names, graphs):
        with open(os.path.join(out, name), "w", encoding="utf-8") as f:
            f.write(serialize_lot(graph))
    if mode == "census":
        manifest = {
            "m": vertices,
            "count": len(graphs),
            "expected": census_count(vertices),
            "files": names,
        }
        with open(os.path.join(out, "manifest.json"), "w", encoding="utf-8") as f:
            json.dump(manifest, f, indent=2)
    click.echo(click.style(f"Wrote {len(graphs)} file(s) to {out}", fg="green"), err=True)


@lotkit.command()
@click.option("--max-m", type=int, help="Census every m from 3 up to this (defaults to the census cap)")
@click.option("--samples", type=int, default=0, show_default=True, help="Random LOTs checked at each of m=6 and m=7")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("-j", "--jobs", type=int, default=1, show_default=True, help="Worker processes")
@click.option("--force", is_flag=True, help="Allow --max-m above the census cap")
@click.option("--dump", "dump_dir", type=click.Path(file_okay=False), default="lotkit-violations", show_default=True, help="Where failing fixtures are written")
@click.option("--progress", is_flag=True, help="Report each batch as it starts")
@click.pass_context
def verify(ctx, max_m, samples, seed, jobs, force, dump_dir, progress):
    """Cross-check every complexity result over a census and random samples."""
    max_m = ctx.obj["CENSUS_CAP"] if max_m is None else max_m
    try:
        summaries = harness.run_verify(
            max_m=max_m,
            samples=samples,
            seed=seed,
            jobs=jobs,
            cap=ctx.obj["CENSUS_CAP"],
            force=force,
            progress=progress,
        )
    except LotError as e:
        fail(ctx, str(e), EXIT_INVALID)
    display_summary(summaries)
    line = harness.summary_line(summaries)
    findings = harness.first_findings(summaries)
    if not findings:
        click.echo(click.style(line, fg="green"))
        return
    click.echo(click.style(line, fg="red"))
    for finding in harness.first_findings(summaries, limit=10):
        click.echo(click.style(str(finding), fg="red"), err=True)
    paths = harness.dump_findings(findings, dump_dir)
    fail(ctx, f"{len(paths)} reproducing fixture(s) written to {dump_dir}", 1)


@lotkit.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.argument("seed", nargs=-1, required=True)
@click.option("--dot", "dot_path", type=click.Path(dir_okay=False), help="Write a DOT rendering with the closure highlighted")
@click.pass_context
def closure(ctx, path, seed, dot_path):
    """Print the reachable set of SEED and how each vertex was reached."""
    graph, _ = load_graph(ctx, path)
    try:
        result = reachability.closure(graph, seed)
    except LotError as e:
        fail(ctx, str(e), EXIT_INVALID)
    display_closure(result)
    if dot_path:
        with open(dot_path, "w", encoding="utf-8") as f:
            f.write(export_dot(graph, result.closure))


@lotkit.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--to", "target", type=click.Choice(["lot", "presentation", "dot"]), default="lot", show_default=True)
@click.option("-o", "--out", type=click.Path(dir_okay=False), help="Output file; stdout when omitted")
@click.pass_context
def convert(ctx, path, target, out):
    """Rewrite a LOG in another format."""
    graph, _ = load_graph(ctx, path)
    if target == "lot":
        text = serialize_lot(graph)
    elif target == "presentation":
        text = format_presentation(log_to_presentation(graph)) + "\n"
    else:
        text = export_dot(graph)
    if out:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        click.echo(text, nl=False)


if __name__ == "__main__":
    lotkit()
