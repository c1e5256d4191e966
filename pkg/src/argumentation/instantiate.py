"""Building instantiated argument graphs.

Generative graphs start from a knowledge base: the base-logic module
produces the argument nodes (exhaustively for simple logic, driven by a
focal claim set for the other logics, since those admit unboundedly many
claims), and attacks are computed pairwise over the enabled kinds.

Descriptive graphs run the other way: an abstract graph plus an
assignment of concrete arguments to its nodes is checked edge by edge,
reporting which abstract attacks are realized, which are violated, and
which attacks hold between assigned arguments without an abstract edge.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Sequence

from .attacks import AttackConfig, AttackKind
from .classical import (DEFAULT_SUPPORT_BOUND, ClassicalArgument,
                        classical_arguments, classical_attack_kinds)
from .conditionals import (Conditional, PreferentialArgument, p_entails,
                           parse_conditional, preferential_arguments,
                           preferential_attack_kinds)
from .defaults import (DefaultArgument, DefaultTheory, default_arguments,
                       is_justification_undercut, parse_default_rule)
from .entailment import entails, equivalent, is_consistent
from .formulas import (Formula, conjunction, negate, parse_formula,
                       parse_literal, print_formula)
from .graphs import ArgGraph, ArgNode, Attack
from .simple import (SimpleArgument, SimpleKB, all_simple_arguments,
                     parse_simple_rule, simple_attack_kinds,
                     simple_arguments_for)


@dataclass(frozen=True)
class GenerationConfig:
    """Selection knobs for generative graphs.

    ``focal_claims`` drives argument enumeration for the claim-driven
    logics (formulas for classical/default, conditionals for the
    conditional logic); when empty, a per-logic default focal set is
    derived from the knowledge base.  ``conjunction_bound`` caps the size
    of premise conjunctions whose negations enter that default set.
    """

    attack: AttackConfig = field(default_factory=AttackConfig)
    focal_claims: tuple = ()
    conjunction_bound: int = 2
    support_bound: int = DEFAULT_SUPPORT_BOUND
    defaults_bound: int = 12
    theory_bound: int = 16
    conditional_bound: int = 14
    node_bound: int = 25

    def with_kinds(self, kinds: frozenset[AttackKind] | None) -> "GenerationConfig":
        return replace(self, attack=replace(self.attack, kinds=kinds))


def _dedupe(items: Iterable) -> tuple:
    seen = []
    for x in items:
        if x not in seen:
            seen.append(x)
    return tuple(seen)


def classical_focal_claims(axioms: Iterable[Formula], claim: Formula | None = None,
                           conjunction_bound: int = 2) -> tuple[Formula, ...]:
    """Default focal set: the query and its negation, negations of single
    premises, and negations of premise conjunctions up to the bound."""
    premises = sorted(set(axioms), key=print_formula)
    focal: list[Formula] = []
    if claim is not None:
        focal += [claim, negate(claim)]
    focal += [negate(p) for p in premises]
    for size in range(2, conjunction_bound + 1):
        for combo in itertools.combinations(premises, size):
            focal.append(negate(conjunction(combo)))
    return _dedupe(focal)


def default_focal_claims(theory: DefaultTheory, claim: Formula | None = None) -> tuple[Formula, ...]:
    """Default focal set for a default theory: the query pair, or every
    default consequent and fact together with their negations."""
    if claim is not None:
        return _dedupe([claim, negate(claim)])
    focal: list[Formula] = []
    for rule in sorted(theory.defaults, key=str):
        focal += [rule.cons, negate(rule.cons)]
    for fact in sorted(theory.facts, key=print_formula):
        focal += [fact, negate(fact)]
    return _dedupe(focal)


# ---------------------------------------------------------------------------
# Attack dispatch
# ---------------------------------------------------------------------------


def attack_kinds_between(attacker, target,
                         config: AttackConfig | None = None) -> frozenset[AttackKind]:
    """Attack kinds from one concrete argument to another, filtered to the
    enabled set.  Pairs no relation is defined for yield no attack."""
    config = config or AttackConfig()
    if isinstance(attacker, SimpleArgument) and isinstance(target, SimpleArgument):
        return simple_attack_kinds(attacker, target) & config.enabled("simple")
    if isinstance(attacker, ClassicalArgument) and isinstance(target, ClassicalArgument):
        return classical_attack_kinds(attacker, target, config)
    if isinstance(attacker, PreferentialArgument) and isinstance(target, PreferentialArgument):
        return preferential_attack_kinds(attacker, target) & config.enabled("conditional")
    if isinstance(target, DefaultArgument):
        enabled = config.enabled("default")
        if (AttackKind.JUSTIFICATION_UNDERCUT in enabled
                and is_justification_undercut(attacker, target)):
            return frozenset({AttackKind.JUSTIFICATION_UNDERCUT})
    return frozenset()


# ---------------------------------------------------------------------------
# Generative graphs
# ---------------------------------------------------------------------------


def _assemble(payloads: Iterable, config: GenerationConfig) -> ArgGraph:
    ordered = sorted(set(payloads),
                     key=lambda p: (p.claim_text(), "; ".join(p.support_texts())))
    nodes = tuple(ArgNode(f"A{i}", payload) for i, payload in enumerate(ordered, start=1))
    attacks = []
    for source in nodes:
        for target in nodes:
            kinds = attack_kinds_between(source.payload, target.payload, config.attack)
            if kinds:
                attacks.append(Attack(source.id, target.id, kinds))
    return ArgGraph(nodes, tuple(attacks))


def generate_graph(kb, config: GenerationConfig | None = None) -> ArgGraph:
    """Instantiate the generative graph for a knowledge base.

    ``kb`` may be a SimpleKB, a set of classical formulas, a
    DefaultTheory, or a set of conditionals.
    """
    config = config or GenerationConfig()
    if isinstance(kb, SimpleKB):
        return _assemble(all_simple_arguments(kb), config)
    if isinstance(kb, DefaultTheory):
        focal = config.focal_claims or default_focal_claims(kb)
        payloads: set = set()
        for claim in focal:
            payloads |= default_arguments(kb, claim, theory_bound=config.theory_bound)
        return _assemble(payloads, config)
    items = frozenset(kb)
    if items and all(isinstance(x, Conditional) for x in items):
        payloads = set()
        for query in config.focal_claims:
            payloads |= preferential_arguments(items, query,
                                               conditional_bound=config.conditional_bound)
        return _assemble(payloads, config)
    if all(isinstance(x, Formula) for x in items):
        focal = config.focal_claims or classical_focal_claims(
            items, conjunction_bound=config.conjunction_bound)
        payloads = set()
        for claim in focal:
            payloads |= classical_arguments(items, claim, support_bound=config.support_bound)
        return _assemble(payloads, config)
    raise TypeError("unsupported knowledge base type for graph generation")


# ---------------------------------------------------------------------------
# Descriptive graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class EdgeCheck:
    source: str
    target: str
    kinds: frozenset[AttackKind]

    @property
    def confirmed(self) -> bool:
        return bool(self.kinds)


@dataclass(frozen=True, slots=True)
class DescriptiveReport:
    """Per-edge confirmation of an abstract graph under an assignment."""

    edges: tuple[EdgeCheck, ...]
    surplus: tuple[EdgeCheck, ...]
    strict: bool

    @property
    def violated(self) -> tuple[EdgeCheck, ...]:
        return tuple(e for e in self.edges if not e.confirmed)

    @property
    def confirmed(self) -> tuple[EdgeCheck, ...]:
        return tuple(e for e in self.edges if e.confirmed)

    @property
    def passed(self) -> bool:
        if self.violated:
            return False
        return not (self.strict and self.surplus)


def verify_descriptive(abstract: ArgGraph, assignment: Mapping[str, object],
                       config: AttackConfig | None = None, *,
                       strict: bool = False) -> DescriptiveReport:
    """Check that assigned arguments realize every abstract attack edge.

    ``assignment`` must cover every node of the abstract graph.  Surplus
    attacks (present between assigned arguments, absent from the abstract
    graph) are reported and only fail verification in strict mode.
    """
    config = config or AttackConfig()
    missing = [n.id for n in abstract.nodes if n.id not in assignment]
    if missing:
        raise ValueError(f"assignment missing for nodes: {', '.join(sorted(missing))}")
    edge_pairs = {(a.source, a.target) for a in abstract.attacks}
    checks = []
    for attack in sorted(abstract.attacks, key=lambda a: (a.source, a.target)):
        kinds = attack_kinds_between(assignment[attack.source],
                                     assignment[attack.target], config)
        checks.append(EdgeCheck(attack.source, attack.target, kinds))
    surplus = []
    ids = sorted(n.id for n in abstract.nodes)
    for source, target in itertools.product(ids, ids):
        if (source, target) in edge_pairs:
            continue
        kinds = attack_kinds_between(assignment[source], assignment[target], config)
        if kinds:
            surplus.append(EdgeCheck(source, target, kinds))
    return DescriptiveReport(tuple(checks), tuple(surplus), strict)


# ---------------------------------------------------------------------------
# Building concrete arguments from text (assignments, JSON reload)
# ---------------------------------------------------------------------------


def _build_simple(support_items: Sequence[str], claim_text: str) -> SimpleArgument:
    facts = set()
    rules = set()
    for item in support_items:
        if "->" in item:
            rules.add(parse_simple_rule(item))
        else:
            facts.add(parse_literal(item))
    claim = parse_literal(claim_text)
    support = SimpleKB(frozenset(facts), frozenset(rules))
    argument = SimpleArgument(support, claim)
    if argument not in simple_arguments_for(support, claim):
        raise ValueError(
            f"not a simple argument: {support} does not minimally derive {claim}")
    return argument


def _build_classical(support_items: Sequence[str], claim_text: str) -> ClassicalArgument:
    support = frozenset(parse_formula(t) for t in support_items)
    claim = parse_formula(claim_text)
    if not is_consistent(support):
        raise ValueError(f"inconsistent support {sorted(map(print_formula, support))}")
    if not entails(support, claim):
        raise ValueError(f"support does not entail {claim_text!r}")
    for phi in support:
        if entails(support - {phi}, claim):
            raise ValueError(f"support not minimal: {print_formula(phi)!r} is redundant")
    return ClassicalArgument(support, claim)


def _build_default(support_items: Sequence[str], claim_text: str) -> DefaultArgument:
    defaults = set()
    facts = set()
    for item in support_items:
        if ":" in item and "/" in item:
            defaults.add(parse_default_rule(item))
        else:
            facts.add(parse_formula(item))
    claim = parse_formula(claim_text)
    theory = DefaultTheory(frozenset(defaults), frozenset(facts))
    candidate = DefaultArgument(theory.defaults, theory.facts, claim)
    if candidate not in default_arguments(theory, claim):
        raise ValueError("not a default argument: sub-theory is not minimal "
                         f"or does not credit {claim_text!r}")
    return candidate


def _build_preferential(support_items: Sequence[str], claim_text: str) -> PreferentialArgument:
    conds = set()
    context = set()
    for item in support_items:
        if "=>" in item:
            conds.add(parse_conditional(item))
        else:
            context.add(parse_formula(item))
    claim = parse_conditional(claim_text)
    if not equivalent(conjunction(context), claim.ante):
        raise ValueError("context does not conjoin to the claim antecedent")
    if not p_entails(conds, claim):
        raise ValueError(f"conditionals do not p-entail {claim_text!r}")
    for c in conds:
        if p_entails(conds - {c}, claim):
            raise ValueError(f"conditional support not minimal: {c} is redundant")
    return PreferentialArgument(frozenset(conds), frozenset(context), claim)


_BUILDERS = {
    "simple": _build_simple,
    "classical": _build_classical,
    "default": _build_default,
    "conditional": _build_preferential,
}


def build_argument(logic: str, support_items: Sequence[str], claim_text: str):
    """Construct and validate a concrete argument from printed parts."""
    try:
        builder = _BUILDERS[logic]
    except KeyError:
        raise ValueError(f"unknown base logic {logic!r}") from None
    return builder([s.strip() for s in support_items if s.strip()], claim_text.strip())


def graph_from_json(text: str) -> ArgGraph:
    """Reload a graph emitted by ``graphs.to_json``."""
    data = json.loads(text)
    nodes = []
    for entry in data["nodes"]:
        logic = entry["logic"]
        if logic == "abstract":
            payload = None
        else:
            payload = build_argument(logic, entry["support"], entry["claim"])
        nodes.append(ArgNode(entry["id"], payload))
    attacks = tuple(
        Attack(e["from"], e["to"],
               frozenset(AttackKind(k) for k in e.get("kinds", ())))
        for e in data["attacks"])
    return ArgGraph(tuple(nodes), attacks)
