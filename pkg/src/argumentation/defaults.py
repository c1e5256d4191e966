"""Reiter default theories: extensions, credulous consequence, arguments.

Extensions are never materialized as deductively closed sets.  Each one is
represented by its base facts plus an ordered list of generating defaults,
and every membership question becomes a classical entailment query against
that finite base.  Candidate extensions are found by enumerating subsets
of the (ground) defaults and keeping exactly those whose induced theory is
a fixpoint of the closure operator.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Union

from .entailment import entails, is_consistent
from .errors import EnumerationBoundError, ParseError
from .formulas import (Formula, Not, formula_variables, parse_formula,
                       print_formula, substitute, variable_bindings)

DEFAULT_DEFAULTS_BOUND = 12
DEFAULT_THEORY_BOUND = 16


@dataclass(frozen=True, slots=True)
class DefaultRule:
    """pre : just / cons — infer ``cons`` when ``pre`` holds and the
    negation of ``just`` is not concluded."""

    pre: Formula
    just: Formula
    cons: Formula

    def __str__(self) -> str:
        return f"{print_formula(self.pre)} : {print_formula(self.just)} / {print_formula(self.cons)}"


@dataclass(frozen=True, slots=True)
class DefaultTheory:
    defaults: frozenset[DefaultRule] = frozenset()
    facts: frozenset[Formula] = frozenset()

    def union(self, other: "DefaultTheory") -> "DefaultTheory":
        return DefaultTheory(self.defaults | other.defaults, self.facts | other.facts)

    def is_proper_subtheory_of(self, other: "DefaultTheory") -> bool:
        """Componentwise inclusion, strict in at least one component."""
        return (self.defaults <= other.defaults and self.facts <= other.facts
                and (self.defaults, self.facts) != (other.defaults, other.facts))


def parse_default_rule(text: str, *, allow_variables: bool = False) -> DefaultRule:
    """Parse ``pre : just / cons`` (``:`` and ``/`` are not formula tokens)."""
    head, sep, rest = text.partition(":")
    if not sep:
        raise ParseError(f"expected ':' in default rule {text!r}")
    just_text, sep, cons_text = rest.partition("/")
    if not sep:
        raise ParseError(f"expected '/' in default rule {text!r}")
    return DefaultRule(parse_formula(head, allow_variables=allow_variables),
                       parse_formula(just_text, allow_variables=allow_variables),
                       parse_formula(cons_text, allow_variables=allow_variables))


def rule_variables(rule: DefaultRule) -> frozenset[str]:
    return (formula_variables(rule.pre) | formula_variables(rule.just)
            | formula_variables(rule.cons))


def ground_default(rule: DefaultRule, constants: Iterable[str]) -> frozenset[DefaultRule]:
    variables = rule_variables(rule)
    if not variables:
        return frozenset({rule})
    return frozenset(
        DefaultRule(substitute(rule.pre, b), substitute(rule.just, b),
                    substitute(rule.cons, b))
        for b in variable_bindings(variables, constants))


# ---------------------------------------------------------------------------
# Extensions
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class ExtensionRep:
    """Finite representation of a deductively closed theory.

    ``generating`` lists defaults in a valid application order: each
    pre-condition is entailed by the base plus the consequents of earlier
    entries.  The represented set is the classical closure of
    ``base + consequents``.
    """

    generating: tuple[DefaultRule, ...]
    base: frozenset[Formula]
    inconsistent: bool = False

    def formulas(self) -> frozenset[Formula]:
        return self.base | frozenset(d.cons for d in self.generating)

    def entails_formula(self, f: Formula) -> bool:
        return entails(self.formulas(), f)

    def __str__(self) -> str:
        items = sorted(print_formula(f) for f in self.formulas())
        return "Cn({" + "; ".join(items) + "})"


def _closure_formulas(e: Union[ExtensionRep, Iterable[Formula]]) -> frozenset[Formula]:
    if isinstance(e, ExtensionRep):
        return e.formulas()
    return frozenset(e)


def gamma_closure(theory: DefaultTheory,
                  e: Union[ExtensionRep, Iterable[Formula]]) -> ExtensionRep:
    """Least fixpoint of the closure operator applied against ``e``.

    Starting from the theory's facts, repeatedly add the consequent of any
    default whose pre-condition is already entailed and whose justification
    is not refuted by ``e``.  The result is only an extension when it is
    entailment-equivalent to ``e``.
    """
    against = _closure_formulas(e)
    applied: list[DefaultRule] = []
    current: set[Formula] = set(theory.facts)
    ordered = sorted(theory.defaults, key=str)
    changed = True
    while changed:
        changed = False
        for rule in ordered:
            if rule in applied:
                continue
            if not entails(current, rule.pre):
                continue
            if entails(against, Not(rule.just)):
                continue
            applied.append(rule)
            current.add(rule.cons)
            changed = True
    return ExtensionRep(tuple(applied), theory.facts)


def _equivalent_theories(xs: frozenset[Formula], ys: frozenset[Formula]) -> bool:
    return (all(entails(xs, y) for y in ys)
            and all(entails(ys, x) for x in xs))


def enumerate_extensions(theory: DefaultTheory, *,
                         defaults_bound: int = DEFAULT_DEFAULTS_BOUND) -> tuple[ExtensionRep, ...]:
    """All extensions, deduplicated up to logical equivalence.

    An inconsistent fact base yields the single inconsistent extension,
    flagged as such.  A theory may also have no extension at all.
    """
    if len(theory.defaults) > defaults_bound:
        raise EnumerationBoundError(
            f"{len(theory.defaults)} defaults exceed the enumeration bound {defaults_bound}")
    if not is_consistent(theory.facts):
        return (ExtensionRep((), theory.facts, inconsistent=True),)
    found: list[ExtensionRep] = []
    ordered = sorted(theory.defaults, key=str)
    for size in range(len(ordered) + 1):
        for combo in itertools.combinations(ordered, size):
            candidate = theory.facts | frozenset(d.cons for d in combo)
            closure = gamma_closure(theory, candidate)
            if not _equivalent_theories(closure.formulas(), candidate):
                continue
            if any(_equivalent_theories(x.formulas(), candidate) for x in found):
                continue
            found.append(closure)
    return tuple(sorted(found, key=str))


def default_derives(theory: DefaultTheory, f: Formula, *,
                    skeptical: bool = False,
                    defaults_bound: int = DEFAULT_DEFAULTS_BOUND) -> bool:
    """The default consequence relation over extension membership.

    Credulous by default: true iff some extension entails ``f``.  With
    ``skeptical=True`` every extension must entail ``f`` (vacuously true
    when the theory has no extension; the credulous reading is false
    there).
    """
    extensions = enumerate_extensions(theory, defaults_bound=defaults_bound)
    if skeptical:
        return all(e.entails_formula(f) for e in extensions)
    return any(e.entails_formula(f) for e in extensions)


# ---------------------------------------------------------------------------
# Default arguments and justification undercuts
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class DefaultArgument:
    """Sub-theory minimal under componentwise inclusion that derives the claim."""

    defaults: frozenset[DefaultRule]
    facts: frozenset[Formula]
    claim: Formula

    logic_name = "default"

    @property
    def support(self) -> DefaultTheory:
        return DefaultTheory(self.defaults, self.facts)

    @property
    def default_rules(self) -> frozenset[DefaultRule]:
        return self.defaults

    @property
    def claim_value(self) -> Formula:
        return self.claim

    def claim_text(self) -> str:
        return print_formula(self.claim)

    def support_texts(self) -> tuple[str, ...]:
        return tuple(sorted(print_formula(f) for f in self.facts)
                     + sorted(str(d) for d in self.defaults))

    def __str__(self) -> str:
        return "<{" + "; ".join(self.support_texts()) + "}, " + self.claim_text() + ">"


def default_arguments(theory: DefaultTheory, claim: Formula, *,
                      theory_bound: int = DEFAULT_THEORY_BOUND) -> frozenset[DefaultArgument]:
    """All minimal sub-theories crediting ``claim`` credulously.

    ``default_derives`` is not monotonic within the support, so minimality
    is certified by the enumeration order: candidates are visited by
    increasing size and anything containing an already-found support is
    pruned.
    """
    defaults = sorted(theory.defaults, key=str)
    facts = sorted(theory.facts, key=print_formula)
    if len(defaults) + len(facts) > theory_bound:
        raise EnumerationBoundError(
            f"theory of size {len(defaults) + len(facts)} exceeds the bound {theory_bound}")
    elements: list[tuple[str, object]] = ([("d", d) for d in defaults]
                                          + [("w", w) for w in facts])
    found: list[tuple[frozenset[DefaultRule], frozenset[Formula]]] = []
    for size in range(len(elements) + 1):
        for combo in itertools.combinations(elements, size):
            sub_defaults = frozenset(x for tag, x in combo if tag == "d")
            sub_facts = frozenset(x for tag, x in combo if tag == "w")
            if any(fd <= sub_defaults and fw <= sub_facts for fd, fw in found):
                continue
            if default_derives(DefaultTheory(sub_defaults, sub_facts), claim):
                found.append((sub_defaults, sub_facts))
    return frozenset(DefaultArgument(d, w, claim) for d, w in found)


def is_justification_undercut(attacker, target: DefaultArgument) -> bool:
    """True iff the attacker's claim refutes the justification of some
    default used by the target.  The attacker may be any argument whose
    claim is a classical formula; a target using no defaults cannot be
    undercut."""
    rules = getattr(target, "default_rules", frozenset())
    claim = attacker.claim_value
    if not isinstance(claim, Formula):
        return False
    return any(entails((claim,), Not(rule.just)) for rule in rules)
