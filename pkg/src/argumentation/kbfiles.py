"""Knowledge-base documents: the ``.akb`` stanza format.

A document is UTF-8 text; ``#`` starts a comment to end of line; every
stanza sits on one line and ends with ``.``.  The first stanza must be
``logic simple|classical|default|conditional.``  Stanza kinds by logic:

    simple       fact <literal>.        rule <lit> & ... & <lit> -> <lit>.
    classical    axiom <formula>.
    default      fact <formula>.        default <formula> : <formula> / <formula>.
    conditional  cond <formula> => <formula>.

``const <name>.`` declares a constant for grounding (any logic); constants
are also harvested from the arguments of ground predicate-style atoms.
Schematic variables (single upper-case letter plus optional digits) are
expanded over the constant set when the document is loaded.

Abstract graphs may be declared in any document (or in a standalone graph
file, which inherits the knowledge base's logic):

    node <id>.
    edge <id> -> <id>.
    assign <id> <support item> ; ... ; <support item> |- <claim>.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .conditionals import Conditional, parse_conditional
from .defaults import (DefaultRule, DefaultTheory, ground_default,
                       parse_default_rule)
from .errors import GroundingError, ParseError
from .formulas import (Formula, Literal, atom_constants, formula_atoms,
                       formula_variables, ground_formula, parse_formula,
                       parse_literal, substitute, variable_bindings)
from .simple import (SimpleKB, SimpleRule, ground_rule, parse_simple_rule,
                     rule_constants)

LOGICS = ("simple", "classical", "default", "conditional")

_STANZA_KINDS = {
    "simple": {"fact", "rule"},
    "classical": {"axiom"},
    "default": {"fact", "default"},
    "conditional": {"cond"},
}

_ID_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class GraphDecl:
    """Raw abstract-graph declaration: ids, edges, and textual assignments."""

    nodes: tuple[str, ...] = ()
    edges: tuple[tuple[str, str], ...] = ()
    assignments: dict[str, tuple[tuple[str, ...], str]] = field(default_factory=dict)


@dataclass(frozen=True)
class KBDocument:
    """A parsed, fully grounded knowledge-base document."""

    logic: str
    path: str
    constants: frozenset[str]
    simple_kb: SimpleKB | None = None
    axioms: frozenset[Formula] | None = None
    theory: DefaultTheory | None = None
    conditionals: frozenset[Conditional] | None = None
    graph: GraphDecl | None = None

    def kb(self):
        """The logic-level knowledge base object."""
        if self.logic == "simple":
            return self.simple_kb
        if self.logic == "classical":
            return self.axioms
        if self.logic == "default":
            return self.theory
        return self.conditionals


@dataclass
class _Stanza:
    keyword: str
    body: str
    line: int


def _split_stanzas(text: str, path: str) -> list[_Stanza]:
    stanzas = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not line.endswith("."):
            raise ParseError("stanza must end with '.'", lineno, len(raw) + 1, path)
        body = line[:-1].strip()
        keyword, _, rest = body.partition(" ")
        if not keyword:
            raise ParseError("empty stanza", lineno, 1, path)
        stanzas.append(_Stanza(keyword, rest.strip(), lineno))
    return stanzas


def _reanchor(err: ParseError, line: int, path: str) -> ParseError:
    return err.at(line, path)


def parse_document(text: str, path: str = "<string>",
                   default_logic: str | None = None) -> KBDocument:
    """Parse and ground a document.  ``default_logic`` allows standalone
    graph files that omit the ``logic`` header."""
    stanzas = _split_stanzas(text, path)
    logic = default_logic
    constants: set[str] = set()
    simple_facts: list[tuple[Literal, int]] = []
    simple_rules: list[tuple[SimpleRule, int]] = []
    axioms: list[tuple[Formula, int]] = []
    default_facts: list[tuple[Formula, int]] = []
    default_rules: list[tuple[DefaultRule, int]] = []
    conditionals: list[tuple[Conditional, int]] = []
    graph_nodes: list[str] = []
    graph_edges: list[tuple[str, str]] = []
    assignments: dict[str, tuple[tuple[str, ...], str]] = {}

    for index, stanza in enumerate(stanzas):
        kw, body, line = stanza.keyword, stanza.body, stanza.line
        if kw == "logic":
            if index != 0:
                raise ParseError("logic must be declared once, first", line, 1, path)
            if body not in LOGICS:
                raise ParseError(
                    f"unknown logic {body!r} (one of: {', '.join(LOGICS)})", line, 1, path)
            if default_logic is not None and body != default_logic:
                raise ParseError(
                    f"file declares logic {body!r} but the knowledge base uses {default_logic!r}",
                    line, 1, path)
            logic = body
            continue
        if logic is None:
            raise ParseError("expected 'logic <simple|classical|default|conditional>.' first",
                             line, 1, path)
        try:
            if kw == "const":
                if not _ID_RE.match(body):
                    raise ParseError(f"bad constant name {body!r}")
                constants.add(body)
            elif kw == "node":
                if not _ID_RE.match(body):
                    raise ParseError(f"bad node id {body!r}")
                if body in graph_nodes:
                    raise ParseError(f"duplicate node id {body!r}")
                graph_nodes.append(body)
            elif kw == "edge":
                source, sep, target = body.partition("->")
                source, target = source.strip(), target.strip()
                if not sep or not _ID_RE.match(source) or not _ID_RE.match(target):
                    raise ParseError(f"expected 'edge <id> -> <id>', found {body!r}")
                graph_edges.append((source, target))
            elif kw == "assign":
                node_id, _, rest = body.partition(" ")
                if not _ID_RE.match(node_id):
                    raise ParseError(f"bad node id {node_id!r} in assign")
                if node_id in assignments:
                    raise ParseError(f"duplicate assignment for {node_id!r}")
                items_text, sep, claim_text = rest.rpartition("|-")
                if not sep:
                    raise ParseError("expected 'assign <id> <items> |- <claim>'")
                items = tuple(part.strip() for part in items_text.split(";") if part.strip())
                if not claim_text.strip():
                    raise ParseError("assign needs a claim after '|-'")
                assignments[node_id] = (items, claim_text.strip())
            elif kw in ("fact", "rule", "axiom", "default", "cond"):
                if kw not in _STANZA_KINDS[logic]:
                    raise ParseError(f"stanza {kw!r} is not legal under logic {logic!r}")
                if kw == "fact" and logic == "simple":
                    simple_facts.append((parse_literal(body, allow_variables=True), line))
                elif kw == "rule":
                    simple_rules.append((parse_simple_rule(body, allow_variables=True), line))
                elif kw == "axiom":
                    axioms.append((parse_formula(body, allow_variables=True), line))
                elif kw == "fact":
                    default_facts.append((parse_formula(body, allow_variables=True), line))
                elif kw == "default":
                    default_rules.append((parse_default_rule(body, allow_variables=True), line))
                else:
                    conditionals.append((parse_conditional(body, allow_variables=True), line))
            else:
                raise ParseError(f"unknown stanza keyword {kw!r}")
        except ParseError as err:
            raise _reanchor(err, line, path) from None

    if logic is None:
        raise ParseError("document declares no logic", 1, 1, path)

    # harvest constants from the arguments of ground atoms
    for lit, _ in simple_facts:
        constants |= atom_constants(lit.atom)
    for rule, _ in simple_rules:
        constants |= rule_constants(rule)
    for f, _ in axioms + default_facts:
        for atom in formula_atoms(f):
            constants |= atom_constants(atom)
    for rule, _ in default_rules:
        for f in (rule.pre, rule.just, rule.cons):
            for atom in formula_atoms(f):
                constants |= atom_constants(atom)
    for cond, _ in conditionals:
        for f in (cond.ante, cond.cons):
            for atom in formula_atoms(f):
                constants |= atom_constants(atom)

    def ground_or_raise(ground, thing, line, describe):
        try:
            return ground(thing, constants)
        except GroundingError as err:
            raise ParseError(f"cannot ground {describe}: {err}", line, 1, path) from None

    doc_simple = None
    doc_axioms = None
    doc_theory = None
    doc_conditionals = None

    if logic == "simple":
        facts = set()
        for lit, line in simple_facts:
            if formula_variables(lit.to_formula()):
                raise ParseError("facts must be ground", line, 1, path)
            facts.add(lit)
        rules: set[SimpleRule] = set()
        for rule, line in simple_rules:
            rules |= ground_or_raise(ground_rule, rule, line, f"rule {rule}")
        doc_simple = SimpleKB(frozenset(facts), frozenset(rules))
    elif logic == "classical":
        grounded: set[Formula] = set()
        for f, line in axioms:
            grounded |= ground_or_raise(ground_formula, f, line, "axiom")
        doc_axioms = frozenset(grounded)
    elif logic == "default":
        facts_set: set[Formula] = set()
        for f, line in default_facts:
            facts_set |= ground_or_raise(ground_formula, f, line, "fact")
        rules_set: set[DefaultRule] = set()
        for rule, line in default_rules:
            rules_set |= ground_or_raise(ground_default, rule, line, f"default {rule}")
        doc_theory = DefaultTheory(frozenset(rules_set), frozenset(facts_set))
    else:
        conds: set[Conditional] = set()
        for cond, line in conditionals:
            variables = formula_variables(cond.ante) | formula_variables(cond.cons)
            if variables:
                try:
                    bindings = list(variable_bindings(variables, constants))
                except GroundingError as err:
                    raise ParseError(f"cannot ground conditional: {err}", line, 1, path) from None
                for b in bindings:
                    conds.add(Conditional(substitute(cond.ante, b), substitute(cond.cons, b)))
            else:
                conds.add(cond)
        doc_conditionals = frozenset(conds)

    graph = None
    if graph_nodes or graph_edges or assignments:
        known = set(graph_nodes)
        for source, target in graph_edges:
            if source not in known or target not in known:
                raise ParseError(f"edge endpoint not declared: {source} -> {target}",
                                 1, 1, path)
        for node_id in assignments:
            if node_id not in known:
                raise ParseError(f"assignment for undeclared node {node_id!r}", 1, 1, path)
        graph = GraphDecl(tuple(graph_nodes), tuple(graph_edges), dict(assignments))

    return KBDocument(logic=logic, path=path, constants=frozenset(constants),
                      simple_kb=doc_simple, axioms=doc_axioms, theory=doc_theory,
                      conditionals=doc_conditionals, graph=graph)


def load_kb(path: str, default_logic: str | None = None) -> KBDocument:
    """Read and parse a ``.akb`` file."""
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    return parse_document(text, path, default_logic=default_logic)
