"""Ground propositional language: formula trees, parsing, printing, grounding.

The connective grammar (precedence low to high):

    formula := iff
    iff     := imp ("<->" imp)*
    imp     := or ("->" or)*
    or      := and ("|" and)*
    and     := unary ("&" unary)*
    unary   := "!" unary | "(" formula ")" | atom
    atom    := IDENT [ "(" IDENT {"," IDENT} ")" ]

``->`` and ``<->`` associate to the right.  A predicate-style atom such as
``bp(high)`` is flattened into a single ground token; argument tokens that
are a single upper-case letter (optionally followed by digits, e.g. ``X``
or ``Y2``) are schematic variables, everything else is a constant.  Verum
and falsum exist only as tree nodes (printed ``$true``/``$false``); they
have no surface syntax.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import GroundingError, ParseError

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_VARIABLE_RE = re.compile(r"[A-Z][0-9]*\Z")
_ATOM_TOKEN_RE = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\((.*)\))?\Z")


class Formula:
    """Base class for propositional formula trees.  Instances are immutable."""

    __slots__ = ()

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True, slots=True)
class Atom(Formula):
    name: str

    def __post_init__(self):
        if not self.name:
            raise ValueError("atom name must be non-empty")


@dataclass(frozen=True, slots=True)
class Not(Formula):
    operand: Formula


@dataclass(frozen=True, slots=True)
class And(Formula):
    operands: tuple[Formula, ...]

    def __post_init__(self):
        if not self.operands:
            raise ValueError("conjunction needs at least one operand")


@dataclass(frozen=True, slots=True)
class Or(Formula):
    operands: tuple[Formula, ...]

    def __post_init__(self):
        if not self.operands:
            raise ValueError("disjunction needs at least one operand")


@dataclass(frozen=True, slots=True)
class Implies(Formula):
    antecedent: Formula
    consequent: Formula


@dataclass(frozen=True, slots=True)
class Iff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Verum(Formula):
    pass


@dataclass(frozen=True, slots=True)
class Falsum(Formula):
    pass


TOP = Verum()
BOTTOM = Falsum()


@dataclass(frozen=True, slots=True)
class Literal:
    """An atom or its negation; the currency of simple logic."""

    atom: Atom
    positive: bool = True

    def complement(self) -> "Literal":
        return Literal(self.atom, not self.positive)

    def to_formula(self) -> Formula:
        return self.atom if self.positive else Not(self.atom)

    def __str__(self) -> str:
        return self.atom.name if self.positive else "!" + self.atom.name


def conjunction(formulas: Iterable[Formula]) -> Formula:
    """Conjunction of the given formulas; unwraps singletons, TOP if empty."""
    ordered = sorted(set(formulas), key=print_formula)
    if not ordered:
        return TOP
    if len(ordered) == 1:
        return ordered[0]
    return And(tuple(ordered))


def negate(f: Formula) -> Formula:
    """Negation with double negations collapsed."""
    return f.operand if isinstance(f, Not) else Not(f)


# ---------------------------------------------------------------------------
# Tokenizer / parser
# ---------------------------------------------------------------------------

_OPERATORS = ("<->", "->", "!", "&", "|", "(", ")", ",")


@dataclass(frozen=True, slots=True)
class _Token:
    kind: str  # operator text, "ident", or "end"
    text: str
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        matched = False
        for op in _OPERATORS:
            if text.startswith(op, i):
                tokens.append(_Token(op, op, i + 1))
                i += len(op)
                matched = True
                break
        if matched:
            continue
        m = _IDENT_RE.match(text, i)
        if m:
            tokens.append(_Token("ident", m.group(0), i + 1))
            i = m.end()
            continue
        raise ParseError(f"unexpected character {ch!r}", column=i + 1)
    tokens.append(_Token("end", "", n + 1))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], allow_variables: bool):
        self.tokens = tokens
        self.pos = 0
        self.allow_variables = allow_variables

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.text or 'end of input'!r}",
                             column=tok.column)
        return self.take()

    def parse_formula(self) -> Formula:
        return self.parse_iff()

    def parse_iff(self) -> Formula:
        parts = [self.parse_imp()]
        while self.peek().kind == "<->":
            self.take()
            parts.append(self.parse_imp())
        f = parts[-1]
        for g in reversed(parts[:-1]):
            f = Iff(g, f)
        return f

    def parse_imp(self) -> Formula:
        parts = [self.parse_or()]
        while self.peek().kind == "->":
            self.take()
            parts.append(self.parse_or())
        f = parts[-1]
        for g in reversed(parts[:-1]):
            f = Implies(g, f)
        return f

    def parse_or(self) -> Formula:
        parts = [self.parse_and()]
        while self.peek().kind == "|":
            self.take()
            parts.append(self.parse_and())
        return parts[0] if len(parts) == 1 else Or(tuple(parts))

    def parse_and(self) -> Formula:
        parts = [self.parse_unary()]
        while self.peek().kind == "&":
            self.take()
            parts.append(self.parse_unary())
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def parse_unary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "!":
            self.take()
            return Not(self.parse_unary())
        if tok.kind == "(":
            self.take()
            f = self.parse_formula()
            self.expect(")")
            return f
        if tok.kind == "ident":
            return self.parse_atom()
        raise ParseError(f"expected a formula, found {tok.text or 'end of input'!r}",
                         column=tok.column)

    def parse_atom(self) -> Atom:
        head = self.expect("ident")
        args: list[_Token] = []
        if self.peek().kind == "(":
            self.take()
            args.append(self.expect("ident"))
            while self.peek().kind == ",":
                self.take()
                args.append(self.expect("ident"))
            self.expect(")")
        if not self.allow_variables:
            schematic = [t for t in args if _VARIABLE_RE.match(t.text)]
            if not args and _VARIABLE_RE.match(head.text):
                schematic = [head]
            if schematic:
                raise ParseError(
                    f"unbound variable {schematic[0].text!r} outside a grounding context",
                    column=schematic[0].column)
        if args:
            return Atom(f"{head.text}({','.join(t.text for t in args)})")
        return Atom(head.text)


def parse_formula(text: str, *, allow_variables: bool = False) -> Formula:
    """Parse ``text`` into a formula tree.

    Raises ParseError with a 1-based column on malformed input, and on
    schematic variables unless ``allow_variables`` is set.
    """
    parser = _Parser(_tokenize(text), allow_variables)
    f = parser.parse_formula()
    end = parser.peek()
    if end.kind != "end":
        raise ParseError(f"unexpected trailing input {end.text!r}", column=end.column)
    return f


def parse_literal(text: str, *, allow_variables: bool = False) -> Literal:
    """Parse an atom or a negated atom."""
    f = parse_formula(text, allow_variables=allow_variables)
    lit = as_literal(f)
    if lit is None:
        raise ParseError(f"expected a literal, found {print_formula(f)!r}")
    return lit


def as_literal(f: Formula) -> Literal | None:
    if isinstance(f, Atom):
        return Literal(f, True)
    if isinstance(f, Not) and isinstance(f.operand, Atom):
        return Literal(f.operand, False)
    return None


# ---------------------------------------------------------------------------
# Printer
# ---------------------------------------------------------------------------

_LEVEL_IFF, _LEVEL_IMP, _LEVEL_OR, _LEVEL_AND, _LEVEL_UNARY = range(5)


def _print(f: Formula, level: int) -> str:
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Verum):
        return "$true"
    if isinstance(f, Falsum):
        return "$false"
    if isinstance(f, Not):
        return "!" + _print(f.operand, _LEVEL_UNARY)
    if isinstance(f, And):
        text = " & ".join(_print(g, _LEVEL_UNARY) for g in f.operands)
        own = _LEVEL_AND
    elif isinstance(f, Or):
        text = " | ".join(_print(g, _LEVEL_AND) for g in f.operands)
        own = _LEVEL_OR
    elif isinstance(f, Implies):
        # right-associative: the right operand may sit at the same level
        text = f"{_print(f.antecedent, _LEVEL_OR)} -> {_print(f.consequent, _LEVEL_IMP)}"
        own = _LEVEL_IMP
    elif isinstance(f, Iff):
        text = f"{_print(f.left, _LEVEL_IMP)} <-> {_print(f.right, _LEVEL_IFF)}"
        own = _LEVEL_IFF
    else:  # pragma: no cover
        raise TypeError(f"not a formula: {f!r}")
    return f"({text})" if own < level else text


def print_formula(f: Formula) -> str:
    """Canonical text form; re-parsing yields an equal tree."""
    return _print(f, _LEVEL_IFF)


def print_formula_set(formulas: Iterable[Formula]) -> str:
    return "{" + "; ".join(sorted(print_formula(f) for f in formulas)) + "}"


# ---------------------------------------------------------------------------
# Schematic variables and grounding
# ---------------------------------------------------------------------------


def is_variable(token: str) -> bool:
    """Single upper-case letter plus optional digits, e.g. ``X`` or ``Y2``."""
    return bool(_VARIABLE_RE.match(token))


def atom_parts(atom: Atom) -> tuple[str, tuple[str, ...]]:
    """Split a flattened atom token into functor and argument tokens."""
    m = _ATOM_TOKEN_RE.match(atom.name)
    if not m:
        raise ValueError(f"malformed atom token {atom.name!r}")
    functor, arglist = m.group(1), m.group(2)
    if arglist is None:
        return functor, ()
    return functor, tuple(a.strip() for a in arglist.split(","))


def atom_variables(atom: Atom) -> frozenset[str]:
    functor, args = atom_parts(atom)
    if not args:
        return frozenset({functor}) if is_variable(functor) else frozenset()
    return frozenset(a for a in args if is_variable(a))


def atom_constants(atom: Atom) -> frozenset[str]:
    """Constant argument tokens of a predicate-style atom."""
    _, args = atom_parts(atom)
    return frozenset(a for a in args if not is_variable(a))


def formula_atoms(f: Formula) -> frozenset[Atom]:
    out: set[Atom] = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Atom):
            out.add(g)
        elif isinstance(g, Not):
            stack.append(g.operand)
        elif isinstance(g, (And, Or)):
            stack.extend(g.operands)
        elif isinstance(g, Implies):
            stack.extend((g.antecedent, g.consequent))
        elif isinstance(g, Iff):
            stack.extend((g.left, g.right))
    return frozenset(out)


def formula_variables(f: Formula) -> frozenset[str]:
    out: set[str] = set()
    for atom in formula_atoms(f):
        out |= atom_variables(atom)
    return frozenset(out)


def substitute_atom(atom: Atom, binding: Mapping[str, str]) -> Atom:
    functor, args = atom_parts(atom)
    if not args:
        return Atom(binding.get(functor, functor)) if is_variable(functor) else atom
    new_args = tuple(binding.get(a, a) for a in args)
    return Atom(f"{functor}({','.join(new_args)})")


def substitute(f: Formula, binding: Mapping[str, str]) -> Formula:
    if isinstance(f, Atom):
        return substitute_atom(f, binding)
    if isinstance(f, Not):
        return Not(substitute(f.operand, binding))
    if isinstance(f, And):
        return And(tuple(substitute(g, binding) for g in f.operands))
    if isinstance(f, Or):
        return Or(tuple(substitute(g, binding) for g in f.operands))
    if isinstance(f, Implies):
        return Implies(substitute(f.antecedent, binding), substitute(f.consequent, binding))
    if isinstance(f, Iff):
        return Iff(substitute(f.left, binding), substitute(f.right, binding))
    return f


def variable_bindings(variables: Iterable[str],
                      constants: Iterable[str]) -> Iterator[dict[str, str]]:
    """All assignments of constants to the given variables (sorted, total)."""
    names = sorted(set(variables))
    consts = sorted(set(constants))
    if not names:
        yield {}
        return
    if not consts:
        raise GroundingError(
            f"schematic variables {names} but no constants to instantiate them")
    for combo in itertools.product(consts, repeat=len(names)):
        yield dict(zip(names, combo))


def ground_formula(template: Formula, constants: Iterable[str]) -> frozenset[Formula]:
    """All ground instances of ``template`` over ``constants``.

    A variable-free template grounds to itself; a schematic template with no
    constants is a GroundingError.
    """
    variables = formula_variables(template)
    if not variables:
        return frozenset({template})
    return frozenset(substitute(template, b)
                     for b in variable_bindings(variables, constants))
