"""Simple logic: literal-and-rule knowledge bases with modus ponens only.

A consequence here is always the head of an applied rule; a bare fact is
not a consequence of itself.  The logic is paraconsistent, so arguments
are minimal but deliberately not required to be consistent (a knowledge
base may support an argument that attacks itself).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .attacks import AttackKind
from .errors import ParseError
from .formulas import (And, Formula, Implies, Literal, as_literal,
                       atom_constants, atom_variables, parse_formula,
                       substitute_atom, variable_bindings)


@dataclass(frozen=True, slots=True)
class SimpleRule:
    """body_1 & ... & body_n -> head, all literals, body non-empty."""

    body: tuple[Literal, ...]
    head: Literal

    def __post_init__(self):
        if not self.body:
            raise ValueError("simple rule needs a non-empty body")

    def __str__(self) -> str:
        return " & ".join(str(b) for b in self.body) + " -> " + str(self.head)


@dataclass(frozen=True, slots=True)
class SimpleKB:
    """A set of literal facts plus a set of simple rules."""

    facts: frozenset[Literal] = frozenset()
    rules: frozenset[SimpleRule] = frozenset()

    def union(self, other: "SimpleKB") -> "SimpleKB":
        return SimpleKB(self.facts | other.facts, self.rules | other.rules)

    def issubset(self, other: "SimpleKB") -> bool:
        return self.facts <= other.facts and self.rules <= other.rules

    def size(self) -> int:
        return len(self.facts) + len(self.rules)

    def __str__(self) -> str:
        items = sorted(str(f) for f in self.facts) + sorted(str(r) for r in self.rules)
        return "{" + "; ".join(items) + "}"


def make_rule(body: Iterable[Literal], head: Literal) -> SimpleRule:
    return SimpleRule(tuple(body), head)


def parse_simple_rule(text: str, *, allow_variables: bool = False) -> SimpleRule:
    """Parse ``lit & ... & lit -> lit`` via the shared formula grammar."""
    f = parse_formula(text, allow_variables=allow_variables)
    if not isinstance(f, Implies):
        raise ParseError(f"expected a rule of the form body -> head in {text!r}")
    head = as_literal(f.consequent)
    if head is None:
        raise ParseError(f"rule head must be a literal in {text!r}")
    body_formula = f.antecedent
    parts = body_formula.operands if isinstance(body_formula, And) else (body_formula,)
    body = []
    for part in parts:
        lit = as_literal(part)
        if lit is None:
            raise ParseError(f"rule body must be a conjunction of literals in {text!r}")
        body.append(lit)
    return SimpleRule(tuple(body), head)


# ---------------------------------------------------------------------------
# Consequence and arguments
# ---------------------------------------------------------------------------


def consequences(delta: SimpleKB) -> frozenset[Literal]:
    """Least fixpoint of rule application: every derivable literal."""
    derived: set[Literal] = set()
    changed = True
    while changed:
        changed = False
        for rule in delta.rules:
            if rule.head in derived:
                continue
            if all(b in delta.facts or b in derived for b in rule.body):
                derived.add(rule.head)
                changed = True
    return frozenset(derived)


def derives_s(delta: SimpleKB, goal: Literal) -> bool:
    """True iff ``goal`` is the head of an applicable rule chain in ``delta``."""
    return goal in consequences(delta)


@dataclass(frozen=True, slots=True)
class SimpleArgument:
    """Minimal sub-KB together with the literal it derives."""

    support: SimpleKB
    claim: Literal

    logic_name = "simple"

    @property
    def claim_value(self) -> Formula:
        return self.claim.to_formula()

    def claim_text(self) -> str:
        return str(self.claim)

    def support_texts(self) -> tuple[str, ...]:
        return tuple(sorted(str(f) for f in self.support.facts)
                     + sorted(str(r) for r in self.support.rules))

    def __str__(self) -> str:
        return f"<{self.support}, {self.claim}>"


def _support_candidates(goal: Literal, delta: SimpleKB,
                        pending: frozenset[Literal]) -> set[tuple[frozenset[Literal], frozenset[SimpleRule]]]:
    """Candidate (facts, rules) sub-KBs whose last applied rule heads ``goal``.

    ``pending`` holds goals on the current derivation path; a least-fixpoint
    derivation never needs to revisit one, which keeps the recursion finite.
    """
    out: set[tuple[frozenset[Literal], frozenset[SimpleRule]]] = set()
    for rule in delta.rules:
        if rule.head != goal:
            continue
        options_per_literal: list[list[tuple[frozenset[Literal], frozenset[SimpleRule]]]] = []
        feasible = True
        for lit in rule.body:
            options: set[tuple[frozenset[Literal], frozenset[SimpleRule]]] = set()
            if lit in delta.facts:
                options.add((frozenset({lit}), frozenset()))
            if lit not in pending:
                options |= _support_candidates(lit, delta, pending | {goal})
            if not options:
                feasible = False
                break
            options_per_literal.append(sorted(options, key=str))
        if not feasible:
            continue
        for combo in itertools.product(*options_per_literal):
            facts = frozenset().union(*(f for f, _ in combo)) if combo else frozenset()
            rules = frozenset({rule}).union(*(r for _, r in combo))
            out.add((facts, rules))
    return out


def _is_minimal(support: SimpleKB, claim: Literal) -> bool:
    """No single removal keeps the claim derivable.

    ``derives_s`` is monotonic in the knowledge base, so failing on every
    immediate sub-KB certifies that no proper subset derives the claim.
    """
    for fact in support.facts:
        if derives_s(SimpleKB(support.facts - {fact}, support.rules), claim):
            return False
    for rule in support.rules:
        if derives_s(SimpleKB(support.facts, support.rules - {rule}), claim):
            return False
    return True


def simple_arguments_for(delta: SimpleKB, claim: Literal) -> frozenset[SimpleArgument]:
    """All minimal-support arguments deriving ``claim`` from ``delta``."""
    out = set()
    for facts, rules in _support_candidates(claim, delta, frozenset()):
        support = SimpleKB(facts, rules)
        if derives_s(support, claim) and _is_minimal(support, claim):
            out.add(SimpleArgument(support, claim))
    return frozenset(out)


def all_simple_arguments(delta: SimpleKB) -> frozenset[SimpleArgument]:
    """Every simple argument constructible from ``delta``."""
    out: set[SimpleArgument] = set()
    for lit in consequences(delta):
        out |= simple_arguments_for(delta, lit)
    return frozenset(out)


def simple_attack_kinds(attacker: SimpleArgument,
                        target: SimpleArgument) -> frozenset[AttackKind]:
    """Undercut: the attacker's claim complements a body literal of a rule
    in the target's support.  Rebut: the claims are complements."""
    kinds = set()
    complement = attacker.claim.complement()
    for rule in target.support.rules:
        if complement in rule.body:
            kinds.add(AttackKind.UNDERCUT)
            break
    if attacker.claim == target.claim.complement():
        kinds.add(AttackKind.REBUT)
    return frozenset(kinds)


# ---------------------------------------------------------------------------
# Schema grounding
# ---------------------------------------------------------------------------


def rule_variables(rule: SimpleRule) -> frozenset[str]:
    out: frozenset[str] = frozenset()
    for lit in (*rule.body, rule.head):
        out |= atom_variables(lit.atom)
    return out


def rule_constants(rule: SimpleRule) -> frozenset[str]:
    out: frozenset[str] = frozenset()
    for lit in (*rule.body, rule.head):
        out |= atom_constants(lit.atom)
    return out


def ground_rule(rule: SimpleRule, constants: Iterable[str]) -> frozenset[SimpleRule]:
    """All ground instances of a schematic rule; a ground rule is returned as is."""
    variables = rule_variables(rule)
    if not variables:
        return frozenset({rule})
    out = set()
    for binding in variable_bindings(variables, constants):
        out.add(SimpleRule(
            tuple(Literal(substitute_atom(l.atom, binding), l.positive) for l in rule.body),
            Literal(substitute_atom(rule.head.atom, binding), rule.head.positive)))
    return frozenset(out)
