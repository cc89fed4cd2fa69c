import click
from termcolor import cprint

from lotkit.display.common import flag_color, reason_color


def _seed(report):
    return "{" + ", ".join(v.name for v in report.witness) + "}"


def _section(title, kvs, colors=None):
    colors = colors or {}
    cprint(title, attrs=["bold"])
    max_keylen = max(len(k) for k in kvs.keys())
    for k, v in kvs.items():
        padding = " " * (max_keylen - len(k))
        cprint(f"  {k}", "blue", end="")
        print(f":{padding} ", end="")
        if k in colors:
            cprint(v, colors[k])
        else:
            print(v)


def display_analysis(document):
    graph = document.graph
    cprint(f"{graph.m} vertices, {len(graph.edges)} edges  sha256 {document.digest[:12]}", attrs=["bold"])
    validation = document.validation
    flags = validation.flags()
    _section(
        "Validation",
        {k.replace("_", " "): "yes" if v else "no" for k, v in flags.items()},
        {k.replace("_", " "): flag_color(v) for k, v in flags.items()},
    )
    for violation in validation.violations:
        cprint(f"  {violation}", "red")
    if document.bounds is not None:
        lower, upper = document.bounds
        kvs = {"bounds": f"{lower} <= cp <= {upper}"}
        if document.greedy is not None:
            kvs["greedy"] = f"{document.greedy.value} via {_seed(document.greedy)}"
        if document.exact is not None:
            kvs["exact"] = f"cp = {document.exact.value} via {_seed(document.exact)}"
            kvs["subsets"] = str(document.exact.subsets_examined)
        _section("Complexity", kvs)
    if document.decomposition is not None:
        parts = ", ".join(str(p) for p in document.decomposition.parts) or "(single vertex)"
        _section("Decomposition", {"parts": str(document.decomposition.s), "rosebrock": parts})
    elif graph.is_tree and graph.is_interior_reduced:
        _section("Decomposition", {"parts": "none"}, {"parts": "yellow"})
    if graph.is_tree and graph.is_interior_reduced:
        certificate = document.certificate
        reason = certificate.reason if certificate is not None else None
        _section(
            "Asphericity",
            {"certificate": str(certificate) if certificate is not None else "no certificate found"},
            {"certificate": reason_color(reason)},
        )
    for note in document.notes:
        cprint(note, "yellow")
    click.echo()


def display_closure(result):
    seed = ", ".join(sorted(result.seed_names))
    _section(
        f"Closure of {{{seed}}}",
        {
            "reached": ", ".join(sorted(result.closure_names)),
            "complete": "yes" if result.complete else "no",
        },
        {"complete": flag_color(result.complete)},
    )
    for step in result.trace:
        print(f"  + {step}")
