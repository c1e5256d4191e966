"""Command-line interface.

    argue <command> <kbfile> [options]

Commands: args, attacks, graph, extensions, accept, dl-extensions,
dl-entails, p-entails, verify-descriptive.  Boolean verdicts map to the
exit code so shell pipelines can branch on them.

Exit codes: 0 success / true verdict, 1 false verdict, 2 usage error,
3 resource bound exceeded, 4 parse/grounding/I-O error.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field
from typing import Sequence

from . import graphs
from .attacks import AttackConfig, parse_kinds
from .conditionals import (epsilon_consistent, p_entails, parse_conditional,
                           tolerance_layers)
from .defaults import enumerate_extensions as dl_enumerate_extensions
from .errors import ParseError, ResourceBoundError
from .formulas import parse_formula
from .graphs import ArgGraph, enumerate_extensions, to_dot, to_json
from .instantiate import (GenerationConfig, build_argument, generate_graph,
                          verify_descriptive)
from .kbfiles import KBDocument, load_kb

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_PARSE = 4


@dataclass
class QueryResult:
    """Outcome of one command: a verdict plus enough detail to re-check it."""

    verdict: object
    lines: list[str] = field(default_factory=list)
    timing: float = 0.0

    @property
    def exit_code(self) -> int:
        if isinstance(self.verdict, bool):
            return EXIT_TRUE if self.verdict else EXIT_FALSE
        return EXIT_TRUE

    def render(self) -> str:
        return "\n".join(self.lines) + ("\n" if self.lines else "")


def _parse_claim(doc: KBDocument, text: str):
    if doc.logic == "conditional":
        return parse_conditional(text)
    if doc.logic == "simple":
        return parse_formula(text)
    return parse_formula(text)


def _config_from_flags(doc: KBDocument, flags: argparse.Namespace) -> GenerationConfig:
    kinds = parse_kinds(flags.kinds) if getattr(flags, "kinds", None) else None
    config = GenerationConfig(attack=AttackConfig(kinds=kinds))
    claim_texts = getattr(flags, "claim", None) or []
    focal: list = []
    for text in claim_texts:
        if doc.logic == "conditional":
            focal.append(parse_conditional(text))
        else:
            claim = parse_formula(text)
            focal.append(claim)
            from .formulas import negate
            focal.append(negate(claim))
    if focal:
        deduped = []
        for f in focal:
            if f not in deduped:
                deduped.append(f)
        config = GenerationConfig(attack=config.attack, focal_claims=tuple(deduped))
    return config


def _graph_for(doc: KBDocument, flags: argparse.Namespace) -> ArgGraph:
    if doc.logic == "conditional" and not (getattr(flags, "claim", None)):
        raise UsageError("conditional knowledge bases need at least one --claim")
    return generate_graph(doc.kb(), _config_from_flags(doc, flags))


class UsageError(Exception):
    pass


def _argument_line(node) -> str:
    support = " ; ".join(node.support_texts())
    return f"{node.id}: {support} |- {node.claim_text()}"


def _format_extension(extension: frozenset[str]) -> str:
    return "{" + ", ".join(sorted(extension)) + "}"


# ---------------------------------------------------------------------------
# Command implementations
# ---------------------------------------------------------------------------


def _cmd_args(doc: KBDocument, flags) -> QueryResult:
    graph = _graph_for(doc, flags)
    lines = [_argument_line(node) for node in graph.nodes]
    return QueryResult(verdict=len(graph.nodes), lines=lines or ["(no arguments)"])


def _cmd_attacks(doc: KBDocument, flags) -> QueryResult:
    graph = _graph_for(doc, flags)
    lines = []
    for attack in sorted(graph.attacks, key=lambda a: (a.source, a.target)):
        kinds = ", ".join(attack.kind_names())
        lines.append(f"{attack.source} -> {attack.target} [{kinds}]")
    return QueryResult(verdict=len(graph.attacks), lines=lines or ["(no attacks)"])


def _cmd_graph(doc: KBDocument, flags) -> QueryResult:
    graph = _graph_for(doc, flags)
    if flags.format == "dot":
        text = to_dot(graph)
    elif flags.format == "json":
        text = to_json(graph)
    else:
        lines = [_argument_line(node) for node in graph.nodes]
        lines += [f"{a.source} -> {a.target} [{', '.join(a.kind_names())}]"
                  for a in sorted(graph.attacks, key=lambda a: (a.source, a.target))]
        text = "\n".join(lines) + ("\n" if lines else "")
    return QueryResult(verdict=len(graph.nodes), lines=text.splitlines())


def _cmd_extensions(doc: KBDocument, flags) -> QueryResult:
    graph = _graph_for(doc, flags)
    result = enumerate_extensions(graph, flags.semantics)
    lines = [f"{result.semantics} extensions: {len(result.extensions)}"]
    lines += [_format_extension(e) for e in result.extensions]
    return QueryResult(verdict=len(result.extensions), lines=lines)


def _cmd_accept(doc: KBDocument, flags) -> QueryResult:
    claim = _parse_claim(doc, flags.claim_text)
    flags.claim = [flags.claim_text]
    graph = _graph_for(doc, flags)
    accepted = graphs.accepted_claims(graph, flags.semantics, flags.mode)
    verdict = claim in accepted
    lines = [f"accept {flags.claim_text!r} [{flags.semantics}, {flags.mode}]: "
             + ("true" if verdict else "false")]
    exts = enumerate_extensions(graph, flags.semantics).extensions
    lines += [f"extension {_format_extension(e)}" for e in exts]
    return QueryResult(verdict=verdict, lines=lines)


def _cmd_dl_extensions(doc: KBDocument, flags) -> QueryResult:
    if doc.logic != "default":
        raise UsageError("dl-extensions needs a default-logic knowledge base")
    extensions = dl_enumerate_extensions(doc.theory)
    lines = [f"extensions: {len(extensions)}"]
    for i, ext in enumerate(extensions, start=1):
        flag = " (inconsistent)" if ext.inconsistent else ""
        lines.append(f"E{i}{flag}: {ext}")
        for rule in ext.generating:
            lines.append(f"  generating: {rule}")
    return QueryResult(verdict=len(extensions), lines=lines)


def _cmd_dl_entails(doc: KBDocument, flags) -> QueryResult:
    if doc.logic != "default":
        raise UsageError("dl-entails needs a default-logic knowledge base")
    claim = parse_formula(flags.claim_text)
    extensions = dl_enumerate_extensions(doc.theory)
    entailing = [e for e in extensions if e.entails_formula(claim)]
    if flags.skeptical:
        verdict = len(entailing) == len(extensions)
    else:
        verdict = bool(entailing)
    mode = "skeptical" if flags.skeptical else "credulous"
    lines = [f"dl-entails {flags.claim_text!r} [{mode}]: " + ("true" if verdict else "false")]
    if not extensions:
        lines.append("no extension")
    lines += [f"extension {'entails' if e in entailing else 'omits'}: {e}"
              for e in extensions]
    return QueryResult(verdict=verdict, lines=lines)


def _cmd_p_entails(doc: KBDocument, flags) -> QueryResult:
    if doc.logic != "conditional":
        raise UsageError("p-entails needs a conditional knowledge base")
    query = parse_conditional(flags.query)
    kb = doc.conditionals
    verdict = p_entails(kb, query)
    lines = [f"p-entails {str(query)!r}: " + ("true" if verdict else "false")]
    if not epsilon_consistent(kb):
        lines.append("knowledge base is epsilon-inconsistent (entails everything)")
    else:
        augmented = frozenset(kb) | {query.negated()}
        layers = tolerance_layers(augmented)
        stuck = not epsilon_consistent(augmented)
        for i, layer in enumerate(layers):
            body = "; ".join(str(c) for c in layer)
            if stuck and i == len(layers) - 1:
                lines.append(f"with {query.negated()}: no member tolerated in: {body}")
            else:
                lines.append(f"tolerance layer {i}: {body}")
    return QueryResult(verdict=verdict, lines=lines)


def _cmd_verify_descriptive(doc: KBDocument, flags) -> QueryResult:
    graph_doc = load_kb(flags.graphfile, default_logic=doc.logic)
    decl = graph_doc.graph or doc.graph
    if decl is None or not decl.nodes:
        raise UsageError(f"{flags.graphfile!r} declares no abstract graph")
    abstract = ArgGraph(
        tuple(graphs.ArgNode(i, None) for i in decl.nodes),
        tuple(graphs.Attack(s, t) for s, t in decl.edges))
    assignment = {}
    for node_id in decl.nodes:
        if node_id not in decl.assignments:
            raise UsageError(f"no assignment for node {node_id!r}")
        items, claim_text = decl.assignments[node_id]
        try:
            assignment[node_id] = build_argument(doc.logic, items, claim_text)
        except ValueError as err:
            raise ParseError(f"assignment for {node_id}: {err}", path=flags.graphfile) from None
    kinds = parse_kinds(flags.kinds) if flags.kinds else None
    report = verify_descriptive(abstract, assignment,
                                AttackConfig(kinds=kinds), strict=flags.strict)
    lines = []
    for check in report.edges:
        status = "confirmed" if check.confirmed else "violated"
        kind_text = ", ".join(sorted(k.value for k in check.kinds)) or "-"
        lines.append(f"edge {check.source} -> {check.target}: {status} [{kind_text}]")
    for check in report.surplus:
        kind_text = ", ".join(sorted(k.value for k in check.kinds))
        lines.append(f"surplus {check.source} -> {check.target} [{kind_text}]")
    lines.append("verification: " + ("pass" if report.passed else "fail"))
    return QueryResult(verdict=report.passed, lines=lines)


_COMMANDS = {
    "args": _cmd_args,
    "attacks": _cmd_attacks,
    "graph": _cmd_graph,
    "extensions": _cmd_extensions,
    "accept": _cmd_accept,
    "dl-extensions": _cmd_dl_extensions,
    "dl-entails": _cmd_dl_entails,
    "p-entails": _cmd_p_entails,
    "verify-descriptive": _cmd_verify_descriptive,
}


def run_command(doc: KBDocument, command: str, flags: argparse.Namespace) -> QueryResult:
    """Dispatch a parsed command against a loaded document."""
    started = time.perf_counter()
    try:
        handler = _COMMANDS[command]
    except KeyError:
        raise UsageError(f"unknown command {command!r}") from None
    result = handler(doc, flags)
    result.timing = time.perf_counter() - started
    return result


# ---------------------------------------------------------------------------
# argparse plumbing
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="argue",
        description="Deductive argumentation over simple, classical, default, "
                    "and conditional knowledge bases.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("kb", help="knowledge-base file (.akb)")
        p.add_argument("--kinds", help="comma-separated attack kinds to enable")
        return p

    p = add("args", help="list generated arguments")
    p.add_argument("--claim", action="append", help="focal claim (repeatable)")

    p = add("attacks", help="list attacks between generated arguments")
    p.add_argument("--claim", action="append")

    p = add("graph", help="emit the generated argument graph")
    p.add_argument("--claim", action="append")
    p.add_argument("--format", choices=("text", "dot", "json"), default="text")

    p = add("extensions", help="evaluate dialectical semantics on the graph")
    p.add_argument("--claim", action="append")
    p.add_argument("--semantics", choices=graphs.SEMANTICS, required=True)

    p = add("accept", help="decide claim acceptability")
    p.add_argument("claim_text", metavar="claim")
    p.add_argument("--semantics", choices=graphs.SEMANTICS, required=True)
    p.add_argument("--mode", choices=("credulous", "skeptical"), default="credulous")

    add("dl-extensions", help="list default-logic extensions")

    p = add("dl-entails", help="default-logic consequence")
    p.add_argument("claim_text", metavar="formula")
    p.add_argument("--skeptical", action="store_true")

    p = add("p-entails", help="System P entailment")
    p.add_argument("query", help='conditional query, e.g. "bird => fly"')

    p = add("verify-descriptive", help="check an abstract graph against assignments")
    p.add_argument("graphfile")
    p.add_argument("--strict", action="store_true",
                   help="also fail on surplus attacks")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    flags = parser.parse_args(argv)
    try:
        doc = load_kb(flags.kb)
        result = run_command(doc, flags.command, flags)
    except UsageError as err:
        print(f"argue: {err}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceBoundError as err:
        print(f"argue: resource bound: {err}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ParseError, OSError) as err:
        print(f"argue: {err}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as err:
        print(f"argue: {err}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(result.render())
    return result.exit_code


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
