"""Attack-kind vocabulary shared by the base-logic modules.

Each base logic emits a subset of these kinds:

* simple logic: ``undercut``, ``rebut``
* classical logic: ``undercut``, ``direct-undercut``, ``rebuttal`` and,
  when enabled, ``defeater``
* default logic: ``justification-undercut``
* conditional logic: ``rebuttal``, ``direct-rebuttal``, ``undercut``,
  ``canonical-undercut``, ``direct-undercut``

The ``defeater`` kind (the attacker's claim entails the negation of some
conjunction of the target's premises) is off by default and must be
enabled explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class AttackKind(str, Enum):
    UNDERCUT = "undercut"
    REBUT = "rebut"
    DIRECT_UNDERCUT = "direct-undercut"
    REBUTTAL = "rebuttal"
    DEFEATER = "defeater"
    DIRECT_REBUTTAL = "direct-rebuttal"
    CANONICAL_UNDERCUT = "canonical-undercut"
    JUSTIFICATION_UNDERCUT = "justification-undercut"

    def __str__(self) -> str:
        return self.value


SIMPLE_KINDS = frozenset({AttackKind.UNDERCUT, AttackKind.REBUT})

CLASSICAL_KINDS = frozenset({
    AttackKind.UNDERCUT, AttackKind.DIRECT_UNDERCUT, AttackKind.REBUTTAL,
})

CLASSICAL_KINDS_ALL = CLASSICAL_KINDS | {AttackKind.DEFEATER}

DEFAULT_LOGIC_KINDS = frozenset({AttackKind.JUSTIFICATION_UNDERCUT})

PREFERENTIAL_KINDS = frozenset({
    AttackKind.REBUTTAL, AttackKind.DIRECT_REBUTTAL, AttackKind.UNDERCUT,
    AttackKind.CANONICAL_UNDERCUT, AttackKind.DIRECT_UNDERCUT,
})

_DEFAULTS_BY_LOGIC = {
    "simple": SIMPLE_KINDS,
    "classical": CLASSICAL_KINDS,
    "default": DEFAULT_LOGIC_KINDS,
    "conditional": PREFERENTIAL_KINDS,
}


def default_kinds(logic: str) -> frozenset[AttackKind]:
    """The attack kinds enabled by default for a base logic."""
    try:
        return _DEFAULTS_BY_LOGIC[logic]
    except KeyError:
        raise ValueError(f"unknown base logic {logic!r}") from None


def parse_kinds(text: str) -> frozenset[AttackKind]:
    """Parse a comma-separated kind list, e.g. ``direct-undercut,defeater``."""
    out = set()
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            out.add(AttackKind(part))
        except ValueError:
            names = ", ".join(k.value for k in AttackKind)
            raise ValueError(f"unknown attack kind {part!r} (one of: {names})") from None
    return frozenset(out)


@dataclass(frozen=True)
class AttackConfig:
    """Which kinds to test for and how hard to search for witnesses.

    ``kinds=None`` means "the default set for the logic at hand".
    ``psi_bound`` caps the size of a support whose subsets are enumerated
    by the existential undercut/defeater conditions.
    """

    kinds: frozenset[AttackKind] | None = None
    psi_bound: int = 12

    def enabled(self, logic: str) -> frozenset[AttackKind]:
        return self.kinds if self.kinds is not None else default_kinds(logic)
