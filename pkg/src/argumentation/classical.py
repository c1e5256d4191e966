"""Classical arguments: minimal consistent supports and the attack taxonomy.

Undercuts quantify existentially over non-empty subsets of the target's
support, so all the equivalence/entailment tests go through the shared
decision procedures; nothing here is syntactic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .attacks import AttackConfig, AttackKind
from .entailment import entails, equivalent, is_consistent
from .errors import EnumerationBoundError
from .formulas import Formula, Not, conjunction, negate, print_formula

DEFAULT_SUPPORT_BOUND = 16


@dataclass(frozen=True, slots=True)
class ClassicalArgument:
    """Consistent, minimal set of premises entailing the claim."""

    support: frozenset[Formula]
    claim: Formula

    logic_name = "classical"

    @property
    def claim_value(self) -> Formula:
        return self.claim

    def claim_text(self) -> str:
        return print_formula(self.claim)

    def support_texts(self) -> tuple[str, ...]:
        return tuple(sorted(print_formula(f) for f in self.support))

    def __str__(self) -> str:
        return "<{" + "; ".join(self.support_texts()) + "}, " + self.claim_text() + ">"


def classical_arguments(delta: Iterable[Formula], claim: Formula, *,
                        support_bound: int = DEFAULT_SUPPORT_BOUND) -> frozenset[ClassicalArgument]:
    """All classical arguments for ``claim`` from ``delta``.

    Supports are enumerated by increasing cardinality; supersets of a found
    support are pruned, which together with the cardinality order certifies
    minimality (consistency is inherited downward, so any entailing proper
    subset would already have been found).
    """
    formulas = sorted(set(delta), key=print_formula)
    if len(formulas) > support_bound:
        raise EnumerationBoundError(
            f"{len(formulas)} premises exceed the support enumeration bound {support_bound}")
    found: list[frozenset[Formula]] = []
    for size in range(len(formulas) + 1):
        for combo in itertools.combinations(formulas, size):
            candidate = frozenset(combo)
            if any(s <= candidate for s in found):
                continue
            if is_consistent(candidate) and entails(candidate, claim):
                found.append(candidate)
    return frozenset(ClassicalArgument(s, claim) for s in found)


def _nonempty_subsets(formulas: frozenset[Formula], psi_bound: int):
    if len(formulas) > psi_bound:
        raise EnumerationBoundError(
            f"support of size {len(formulas)} exceeds the subset enumeration bound {psi_bound}")
    ordered = sorted(formulas, key=print_formula)
    for size in range(1, len(ordered) + 1):
        yield from itertools.combinations(ordered, size)


def classical_attack_kinds(attacker: ClassicalArgument, target: ClassicalArgument,
                           config: AttackConfig | None = None) -> frozenset[AttackKind]:
    """The enabled attack kinds that hold from ``attacker`` to ``target``.

    * undercut: the claim is equivalent to the negation of some non-empty
      conjunction of the target's premises
    * direct undercut: ... of one premise
    * rebuttal: the claims are each other's negations (up to equivalence)
    * defeater (only when enabled): the claim entails the negation of some
      non-empty conjunction of the target's premises
    """
    config = config or AttackConfig()
    enabled = config.enabled("classical")
    kinds: set[AttackKind] = set()
    claim = attacker.claim

    if AttackKind.DIRECT_UNDERCUT in enabled:
        if any(equivalent(claim, negate(phi)) for phi in target.support):
            kinds.add(AttackKind.DIRECT_UNDERCUT)

    if AttackKind.REBUTTAL in enabled:
        if equivalent(claim, negate(target.claim)):
            kinds.add(AttackKind.REBUTTAL)

    needs_subsets = (AttackKind.UNDERCUT in enabled
                     or AttackKind.DEFEATER in enabled)
    if needs_subsets and target.support:
        undercut = False
        defeater = False
        for psi in _nonempty_subsets(target.support, config.psi_bound):
            negated = Not(conjunction(psi))
            if not defeater and entails((claim,), negated):
                defeater = True
                if AttackKind.UNDERCUT not in enabled:
                    break
            if not undercut and AttackKind.UNDERCUT in enabled and entails((negated,), claim):
                # together with the defeater direction this is equivalence
                if entails((claim,), negated):
                    undercut = True
            if undercut and (defeater or AttackKind.DEFEATER not in enabled):
                break
        if undercut:
            kinds.add(AttackKind.UNDERCUT)
        if defeater and AttackKind.DEFEATER in enabled:
            kinds.add(AttackKind.DEFEATER)

    return frozenset(kinds)
