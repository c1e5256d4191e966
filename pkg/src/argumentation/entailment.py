"""Classical propositional decision procedures.

Entailment is decided by refutation: build a definitional clause form of
``gamma + [!f]`` and run a complete backtracking search with unit
propagation over it.  Queries are capped at a configurable number of
distinct input atoms (default 24); exceeding the cap raises
AtomBudgetError rather than ever returning a wrong verdict.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

from .errors import AtomBudgetError
from .formulas import (And, Atom, Falsum, Formula, Iff, Implies, Not, Or,
                       Verum, formula_atoms, print_formula)

DEFAULT_ATOM_BUDGET = 24

# A valuation is a total map from the atoms of the formulas it evaluates.
Valuation = Mapping[Atom, bool]


def evaluate(valuation: Valuation, f: Formula) -> bool:
    """Standard truth-functional semantics; KeyError on a missing atom."""
    if isinstance(f, Atom):
        return valuation[f]
    if isinstance(f, Not):
        return not evaluate(valuation, f.operand)
    if isinstance(f, And):
        return all(evaluate(valuation, g) for g in f.operands)
    if isinstance(f, Or):
        return any(evaluate(valuation, g) for g in f.operands)
    if isinstance(f, Implies):
        return (not evaluate(valuation, f.antecedent)) or evaluate(valuation, f.consequent)
    if isinstance(f, Iff):
        return evaluate(valuation, f.left) == evaluate(valuation, f.right)
    if isinstance(f, Verum):
        return True
    if isinstance(f, Falsum):
        return False
    raise TypeError(f"not a formula: {f!r}")


def atoms_of(formulas: Iterable[Formula]) -> frozenset[Atom]:
    out: frozenset[Atom] = frozenset()
    for f in formulas:
        out |= formula_atoms(f)
    return out


# ---------------------------------------------------------------------------
# Definitional (Tseitin-style) clause form
# ---------------------------------------------------------------------------


class _Clausifier:
    """Maps formulas to integer literals, emitting defining clauses."""

    def __init__(self):
        self.clauses: list[tuple[int, ...]] = []
        self.count = 0
        self._atom_ids: dict[Atom, int] = {}
        self._defs: dict[Formula, int] = {}
        self._true_var: int | None = None

    def _fresh(self) -> int:
        self.count += 1
        return self.count

    def _true(self) -> int:
        if self._true_var is None:
            self._true_var = self._fresh()
            self.clauses.append((self._true_var,))
        return self._true_var

    def literal(self, f: Formula) -> int:
        if isinstance(f, Atom):
            if f not in self._atom_ids:
                self._atom_ids[f] = self._fresh()
            return self._atom_ids[f]
        if isinstance(f, Not):
            return -self.literal(f.operand)
        if isinstance(f, Verum):
            return self._true()
        if isinstance(f, Falsum):
            return -self._true()
        if f in self._defs:
            return self._defs[f]
        v = self._fresh()
        self._defs[f] = v
        if isinstance(f, And):
            subs = [self.literal(g) for g in f.operands]
            for s in subs:
                self.clauses.append((-v, s))
            self.clauses.append((v, *[-s for s in subs]))
        elif isinstance(f, Or):
            subs = [self.literal(g) for g in f.operands]
            for s in subs:
                self.clauses.append((v, -s))
            self.clauses.append((-v, *subs))
        elif isinstance(f, Implies):
            a = self.literal(f.antecedent)
            b = self.literal(f.consequent)
            self.clauses.append((-v, -a, b))
            self.clauses.append((v, a))
            self.clauses.append((v, -b))
        elif isinstance(f, Iff):
            a = self.literal(f.left)
            b = self.literal(f.right)
            self.clauses.append((-v, -a, b))
            self.clauses.append((-v, a, -b))
            self.clauses.append((v, a, b))
            self.clauses.append((v, -a, -b))
        else:  # pragma: no cover
            raise TypeError(f"not a formula: {f!r}")
        return v


def clausify(formulas: Iterable[Formula]) -> list[tuple[int, ...]]:
    """Equisatisfiable clause set asserting every given formula."""
    c = _Clausifier()
    for f in formulas:
        c.clauses.append((c.literal(f),))
    return c.clauses


# ---------------------------------------------------------------------------
# Backtracking search with unit propagation
# ---------------------------------------------------------------------------


def satisfiable(clauses: list[tuple[int, ...]]) -> bool:
    return _dpll(clauses, {})


def _dpll(clauses: list[tuple[int, ...]], assignment: dict[int, bool]) -> bool:
    clauses = list(clauses)
    while True:
        unit = None
        simplified: list[tuple[int, ...]] = []
        for clause in clauses:
            satisfied = False
            remaining: list[int] = []
            for lit in clause:
                val = assignment.get(abs(lit))
                if val is None:
                    remaining.append(lit)
                elif (lit > 0) == val:
                    satisfied = True
                    break
            if satisfied:
                continue
            if not remaining:
                return False
            if len(remaining) == 1 and unit is None:
                unit = remaining[0]
            simplified.append(tuple(remaining))
        clauses = simplified
        if unit is None:
            break
        assignment[abs(unit)] = unit > 0
    if not clauses:
        return True
    var = min(abs(lit) for clause in clauses for lit in clause)
    for value in (True, False):
        trail = dict(assignment)
        trail[var] = value
        if _dpll(clauses, trail):
            return True
    return False


# ---------------------------------------------------------------------------
# Public decision procedures
# ---------------------------------------------------------------------------


@lru_cache(maxsize=262144)
def _entails_cached(gamma: frozenset[Formula], f: Formula, budget: int) -> bool:
    used = atoms_of(gamma) | formula_atoms(f)
    if len(used) > budget:
        raise AtomBudgetError(len(used), budget)
    premises = sorted(gamma, key=print_formula)
    return not satisfiable(clausify([*premises, Not(f)]))


def entails(gamma: Iterable[Formula], f: Formula, *,
            atom_budget: int = DEFAULT_ATOM_BUDGET) -> bool:
    """True iff every valuation satisfying all of ``gamma`` satisfies ``f``."""
    return _entails_cached(frozenset(gamma), f, atom_budget)


def is_consistent(gamma: Iterable[Formula], *,
                  atom_budget: int = DEFAULT_ATOM_BUDGET) -> bool:
    """True iff some valuation satisfies all of ``gamma``."""
    from .formulas import BOTTOM
    return not entails(gamma, BOTTOM, atom_budget=atom_budget)


def equivalent(f: Formula, g: Formula, *,
               atom_budget: int = DEFAULT_ATOM_BUDGET) -> bool:
    """Logical equivalence: mutual entailment."""
    return (entails((f,), g, atom_budget=atom_budget)
            and entails((g,), f, atom_budget=atom_budget))


def tautology(f: Formula, *, atom_budget: int = DEFAULT_ATOM_BUDGET) -> bool:
    return entails((), f, atom_budget=atom_budget)
