"""Default logic: closure fixpoint, extensions, arguments, undercuts."""

import random

import pytest

from argumentation.classical import ClassicalArgument
from argumentation.defaults import (DefaultArgument, DefaultTheory,
                                    default_arguments, default_derives,
                                    enumerate_extensions, gamma_closure,
                                    is_justification_undercut,
                                    parse_default_rule)
from argumentation.entailment import entails
from argumentation.errors import EnumerationBoundError
from argumentation.formulas import Atom, parse_formula
from oracles import oracle_default_extensions, random_default_theory

P = parse_formula
D = parse_default_rule

FLY = D("bird(Tweety) : !penguin(Tweety) & fly(Tweety) / fly(Tweety)")
IS_BIRD = D("penguin(Tweety) : bird(Tweety) / bird(Tweety)")
NO_FLY = D("penguin(Tweety) : !fly(Tweety) / !fly(Tweety)")
TWEETY_DEFAULTS = frozenset({FLY, IS_BIRD, NO_FLY})


def tweety(*facts):
    return DefaultTheory(TWEETY_DEFAULTS, frozenset(P(f) for f in facts))


def entail_equal(xs, ys):
    return all(entails(xs, y) for y in ys) and all(entails(ys, x) for x in xs)


def test_gamma_fixpoint_on_the_flying_extension():
    theory = tweety("bird(Tweety)")
    e = frozenset({P("bird(Tweety)"), P("fly(Tweety)")})
    closure = gamma_closure(theory, e)
    assert closure.generating == (FLY,)
    assert entail_equal(closure.formulas(), e)


def test_gamma_shrinks_on_overcommitted_candidate():
    theory = tweety("bird(Tweety)")
    e = frozenset({P("bird(Tweety)"), P("!fly(Tweety)")})
    closure = gamma_closure(theory, e)
    assert closure.formulas() == frozenset({P("bird(Tweety)")})
    # strict shrink: e entails everything in the closure but not conversely
    assert all(entails(e, f) for f in closure.formulas())
    assert not entail_equal(closure.formulas(), e)


def test_gamma_without_defaults_is_the_fact_base():
    theory = DefaultTheory(frozenset(), frozenset({P("w1"), P("w2")}))
    for e in (frozenset(), frozenset({P("anything")})):
        closure = gamma_closure(theory, e)
        assert closure.formulas() == theory.facts


def test_bird_case_has_one_flying_extension():
    exts = enumerate_extensions(tweety("bird(Tweety)"))
    assert len(exts) == 1
    assert exts[0].entails_formula(P("fly(Tweety)"))
    assert not exts[0].entails_formula(P("!fly(Tweety)"))


def test_penguin_case_has_one_grounded_nonflying_extension():
    exts = enumerate_extensions(tweety("penguin(Tweety)"))
    assert len(exts) == 1
    assert exts[0].entails_formula(P("bird(Tweety)"))
    assert exts[0].entails_formula(P("!fly(Tweety)"))


def test_two_extension_theory():
    theory = DefaultTheory(frozenset({D("q : p / p"), D("r : !p / !p")}),
                           frozenset({P("q"), P("r")}))
    # oracle: brute force over all 4 generating subsets with the fixpoint
    bases = oracle_default_extensions(theory)
    assert len(bases) == 2
    exts = enumerate_extensions(theory)
    assert len(exts) == 2
    verdicts = {e.entails_formula(P("p")) for e in exts}
    assert verdicts == {True, False}


def test_no_extension_theory():
    theory = DefaultTheory(frozenset({D("t : p / !p")}), frozenset({P("t")}))
    assert enumerate_extensions(theory) == ()
    assert default_derives(theory, P("!p")) is False
    assert default_derives(theory, P("!p"), skeptical=True) is True  # vacuous


def test_inconsistent_facts_yield_single_flagged_extension():
    theory = DefaultTheory(TWEETY_DEFAULTS, frozenset({P("a"), P("!a")}))
    exts = enumerate_extensions(theory)
    assert len(exts) == 1
    assert exts[0].inconsistent
    assert default_derives(theory, P("whatever"))


def test_credulous_and_skeptical_consequence():
    theory = tweety("bird(Tweety)")
    assert default_derives(theory, P("fly(Tweety)")) is True
    assert default_derives(theory, P("!fly(Tweety)")) is False
    nixon = DefaultTheory(frozenset({D("q : p / p"), D("r : !p / !p")}),
                          frozenset({P("q"), P("r")}))
    assert default_derives(nixon, P("p")) is True
    assert default_derives(nixon, P("p"), skeptical=True) is False


def test_defaults_bound_is_enforced():
    rules = frozenset(D(f"x{i} : x{i} / x{i}") for i in range(13))
    with pytest.raises(EnumerationBoundError):
        enumerate_extensions(DefaultTheory(rules, frozenset()))


FIG_THEORY = DefaultTheory(TWEETY_DEFAULTS,
                           frozenset({P("bird(Tweety)"), P("penguin(Tweety)")}))


def test_fly_default_argument():
    args = default_arguments(FIG_THEORY, P("fly(Tweety)"))
    assert args == frozenset({DefaultArgument(frozenset({FLY}),
                                              frozenset({P("bird(Tweety)")}),
                                              P("fly(Tweety)"))})


def test_nonflying_default_argument():
    args = default_arguments(FIG_THEORY, P("!fly(Tweety)"))
    assert args == frozenset({DefaultArgument(frozenset({NO_FLY}),
                                              frozenset({P("penguin(Tweety)")}),
                                              P("!fly(Tweety)"))})


def test_fact_claim_needs_no_defaults():
    args = default_arguments(FIG_THEORY, P("penguin(Tweety)"))
    assert args == frozenset({DefaultArgument(frozenset(),
                                              frozenset({P("penguin(Tweety)")}),
                                              P("penguin(Tweety)"))})


def _fig3_arguments():
    (top,) = default_arguments(FIG_THEORY, P("fly(Tweety)"))
    (right,) = default_arguments(FIG_THEORY, P("!fly(Tweety)"))
    left = ClassicalArgument(frozenset({P("penguin(Tweety)")}), P("penguin(Tweety)"))
    return top, right, left


def test_justification_undercuts_against_the_fly_argument():
    top, right, left = _fig3_arguments()
    assert is_justification_undercut(left, top) is True
    assert is_justification_undercut(right, top) is True


def test_no_undercut_between_the_two_attackers():
    top, right, left = _fig3_arguments()
    assert is_justification_undercut(left, right) is False
    assert is_justification_undercut(right, left) is False


def test_mutually_exclusive_defaults_undercut_each_other():
    # the flying claim refutes the non-flying default's justification,
    # so the definition makes this attack mutual
    top, right, _ = _fig3_arguments()
    assert is_justification_undercut(top, right) is True


def test_nothing_to_undercut_without_defaults():
    top, right, left = _fig3_arguments()
    assert is_justification_undercut(top, left) is False
    no_defaults = DefaultArgument(frozenset(), frozenset({P("penguin(Tweety)")}),
                                  P("penguin(Tweety)"))
    assert is_justification_undercut(top, no_defaults) is False


ATOMS = [Atom(n) for n in "pqr"]


def test_extensions_reverify_against_oracle():
    rng = random.Random(20240401)
    for _ in range(60):
        theory = random_default_theory(rng, ATOMS)
        engine = enumerate_extensions(theory)
        oracle = oracle_default_extensions(theory)
        assert len(engine) == len(oracle)
        for ext in engine:
            assert any(entail_equal(ext.formulas(), base) for base in oracle)


def test_generating_order_is_grounded():
    rng = random.Random(514)
    for _ in range(40):
        theory = random_default_theory(rng, ATOMS)
        for ext in enumerate_extensions(theory):
            if ext.inconsistent:
                continue
            sofar = set(ext.base)
            for rule in ext.generating:
                assert entails(sofar, rule.pre)
                sofar.add(rule.cons)


def test_extensions_pairwise_incomparable():
    rng = random.Random(99)
    for _ in range(40):
        theory = random_default_theory(rng, ATOMS, max_defaults=5)
        exts = enumerate_extensions(theory)
        for i, e1 in enumerate(exts):
            for e2 in exts[i + 1:]:
                f1, f2 = e1.formulas(), e2.formulas()
                assert not all(entails(f2, f) for f in f1) or \
                    not all(entails(f1, f) for f in f2)


def test_argument_construction_monotonic():
    rng = random.Random(2718)
    for _ in range(25):
        big = random_default_theory(rng, ATOMS, max_defaults=3, max_facts=2)
        defaults = frozenset(d for d in big.defaults if rng.random() < 0.7)
        facts = frozenset(w for w in big.facts if rng.random() < 0.7)
        small = DefaultTheory(defaults, facts)
        claim = P(rng.choice("pqr"))
        assert default_arguments(small, claim) <= default_arguments(big, claim)
