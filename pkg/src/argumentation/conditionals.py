"""System P conditionals: p-entailment and preferential argumentation.

The decision procedure is the tolerance test: a conditional is tolerated
by a set when its antecedent-and-consequent is satisfiable together with
the material counterparts of the whole set, and a set is consistent when
iterated removal of tolerated conditionals empties it.  A query follows
from a base iff adding the query with negated consequent makes the base
inconsistent in that sense (an inconsistent base entails everything).
This terminates and decides exactly the closure of the System P proof
rules, which is checked property-style in the test suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .attacks import AttackKind
from .entailment import entails, equivalent, is_consistent
from .errors import EnumerationBoundError, ParseError
from .formulas import (And, Formula, Implies, conjunction, negate,
                       parse_formula, print_formula)

DEFAULT_CONDITIONAL_BOUND = 14


@dataclass(frozen=True, slots=True)
class Conditional:
    """``ante => cons``: if ante then normally cons."""

    ante: Formula
    cons: Formula

    def material(self) -> Formula:
        return Implies(self.ante, self.cons)

    def negated(self) -> "Conditional":
        return Conditional(self.ante, negate(self.cons))

    def __str__(self) -> str:
        return f"{print_formula(self.ante)} => {print_formula(self.cons)}"


def parse_conditional(text: str, *, allow_variables: bool = False) -> Conditional:
    left, sep, right = text.partition("=>")
    if not sep:
        raise ParseError(f"expected '=>' in conditional {text!r}")
    return Conditional(parse_formula(left, allow_variables=allow_variables),
                       parse_formula(right, allow_variables=allow_variables))


def top_conjuncts(f: Formula) -> tuple[Formula, ...]:
    """Top-level conjuncts; a non-conjunction is its own single conjunct."""
    return f.operands if isinstance(f, And) else (f,)


# ---------------------------------------------------------------------------
# Tolerance and epsilon-consistency
# ---------------------------------------------------------------------------


def is_tolerated(c: Conditional, kb: Iterable[Conditional]) -> bool:
    """The antecedent and consequent of ``c`` can hold together with the
    material counterparts of everything in ``kb``."""
    materials = [d.material() for d in kb]
    return is_consistent([And((c.ante, c.cons)), *materials])


def tolerance_layers(kb: Iterable[Conditional]) -> tuple[tuple[Conditional, ...], ...]:
    """Iteratively peel off every tolerated conditional.

    Returns the discovered layers; a final non-empty layer of mutually
    intolerant conditionals witnesses epsilon-inconsistency.
    """
    remaining = set(kb)
    layers: list[tuple[Conditional, ...]] = []
    while remaining:
        layer = tuple(sorted((c for c in remaining if is_tolerated(c, remaining)), key=str))
        if not layer:
            layers.append(tuple(sorted(remaining, key=str)))
            break
        layers.append(layer)
        remaining -= set(layer)
    return tuple(layers)


def epsilon_consistent(kb: Iterable[Conditional]) -> bool:
    """True iff iterated tolerance empties the set."""
    remaining = set(kb)
    while remaining:
        tolerated = {c for c in remaining if is_tolerated(c, remaining)}
        if not tolerated:
            return False
        remaining -= tolerated
    return True


def p_entails(kb: Iterable[Conditional], query: Conditional) -> bool:
    """Preferential entailment.

    An epsilon-inconsistent base entails every conditional; otherwise the
    query follows iff asserting its antecedent with the negated consequent
    breaks epsilon-consistency.
    """
    base = frozenset(kb)
    if not epsilon_consistent(base):
        return True
    return not epsilon_consistent(base | {query.negated()})


# ---------------------------------------------------------------------------
# Preferential arguments and attacks
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class PreferentialArgument:
    """Minimal conditional support plus the antecedent conjuncts as context."""

    cond_support: frozenset[Conditional]
    context: frozenset[Formula]
    claim: Conditional

    logic_name = "conditional"

    @property
    def claim_value(self) -> Conditional:
        return self.claim

    def claim_text(self) -> str:
        return str(self.claim)

    def support_texts(self) -> tuple[str, ...]:
        return tuple(sorted(print_formula(f) for f in self.context)
                     + sorted(str(c) for c in self.cond_support))

    def __str__(self) -> str:
        return "<{" + "; ".join(self.support_texts()) + "}, " + self.claim_text() + ">"


def preferential_arguments(kb: Iterable[Conditional], query: Conditional, *,
                           conditional_bound: int = DEFAULT_CONDITIONAL_BOUND) -> frozenset[PreferentialArgument]:
    """All arguments for ``query``: minimal sub-bases that p-entail it.

    The context is the set of top-level conjuncts of the query antecedent,
    so its conjunction is the antecedent itself.
    """
    ordered = sorted(set(kb), key=str)
    if len(ordered) > conditional_bound:
        raise EnumerationBoundError(
            f"{len(ordered)} conditionals exceed the enumeration bound {conditional_bound}")
    context = frozenset(top_conjuncts(query.ante))
    found: list[frozenset[Conditional]] = []
    for size in range(len(ordered) + 1):
        for combo in itertools.combinations(ordered, size):
            candidate = frozenset(combo)
            if any(s <= candidate for s in found):
                continue
            if p_entails(candidate, query):
                found.append(candidate)
    return frozenset(PreferentialArgument(s, context, query) for s in found)


def preferential_attack_kinds(attacker: PreferentialArgument,
                              target: PreferentialArgument) -> frozenset[AttackKind]:
    """The five preferential attack relations, for attacker claim
    ``gamma => delta`` against target claim ``alpha => beta``."""
    alpha, beta = target.claim.ante, target.claim.cons
    gamma, delta = attacker.claim.ante, attacker.claim.cons
    kinds: set[AttackKind] = set()
    if entails((gamma,), alpha):
        if entails((delta,), negate(beta)):
            kinds.add(AttackKind.REBUTTAL)
        if equivalent(delta, negate(beta)):
            kinds.add(AttackKind.DIRECT_REBUTTAL)
    if entails((delta,), negate(alpha)):
        kinds.add(AttackKind.UNDERCUT)
    if equivalent(delta, negate(alpha)):
        kinds.add(AttackKind.CANONICAL_UNDERCUT)
    if any(equivalent(delta, negate(sigma)) for sigma in target.context):
        kinds.add(AttackKind.DIRECT_UNDERCUT)
    return frozenset(kinds)


def conjoined_context(context: Iterable[Formula]) -> Formula:
    return conjunction(context)
