"""Deductive argumentation over pluggable base logics.

Argument construction is monotonic (adding knowledge only ever adds
arguments); argument evaluation through dialectical semantics is
non-monotonic (new counterarguments can evict claims from extensions).
Four base logics are provided: simple rule logic, classical propositional
logic, Reiter default logic, and System P conditionals.
"""

from .attacks import AttackConfig, AttackKind, default_kinds, parse_kinds
from .classical import ClassicalArgument, classical_arguments, classical_attack_kinds
from .conditionals import (Conditional, PreferentialArgument, epsilon_consistent,
                           is_tolerated, p_entails, parse_conditional,
                           preferential_arguments, preferential_attack_kinds,
                           tolerance_layers)
from .defaults import (DefaultArgument, DefaultRule, DefaultTheory, ExtensionRep,
                       default_arguments, default_derives, enumerate_extensions
                       as default_extensions, gamma_closure,
                       is_justification_undercut, parse_default_rule)
from .entailment import (Valuation, entails, equivalent, evaluate, is_consistent,
                         tautology)
from .errors import (AtomBudgetError, EnumerationBoundError, GroundingError,
                     ParseError, ResourceBoundError)
from .formulas import (And, Atom, BOTTOM, Falsum, Formula, Iff, Implies, Literal,
                       Not, Or, TOP, Verum, conjunction, ground_formula, negate,
                       parse_formula, parse_literal, print_formula, substitute)
from .graphs import (ArgGraph, ArgNode, Attack, ExtensionSet, accepted_claims,
                     complete_extensions, enumerate_extensions, grounded_extension,
                     preferred_extensions, stable_extensions, to_dot, to_json)
from .instantiate import (DescriptiveReport, GenerationConfig, attack_kinds_between,
                          build_argument, classical_focal_claims, generate_graph,
                          graph_from_json, verify_descriptive)
from .kbfiles import KBDocument, load_kb, parse_document
from .simple import (SimpleArgument, SimpleKB, SimpleRule, all_simple_arguments,
                     derives_s, parse_simple_rule, simple_attack_kinds,
                     simple_arguments_for)

__version__ = "0.1.0"
